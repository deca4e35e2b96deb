#pragma once

#include "logloc/cli.hpp"
#include "logloc/serialize.hpp"

namespace logloc::cli {

/// A finished command: JSON body, table rendering and exit status.
struct Report {
    io::Json json;
    std::string table;
    int status = ExitCode::ok;
};

Report enumerate_report(const RunConfig& config);
Report compute_report(const RunConfig& config);
Report verify_report(const RunConfig& config);
Report identities_report(const RunConfig& config);

}  // namespace logloc::cli
