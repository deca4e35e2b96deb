#include "logloc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace logloc {

std::size_t worker_count()
{
    if (const char* env = std::getenv("LOGLOC_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace logloc
