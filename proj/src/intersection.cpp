#include "logloc/intersection.hpp"

#include "logloc/errors.hpp"

#include <string>

namespace logloc::eq {

Rational psi_integral_genus0(const std::vector<int>& exponents, int n)
{
    if (n < 3) throw DomainError("psi_integral_genus0: moduli space with n=" + std::to_string(n) + " points is unstable");
    if (static_cast<int>(exponents.size()) != n)
        throw StructuralError("psi_integral_genus0: expected " + std::to_string(n) + " exponents");
    int total = 0;
    Integer denom = 1;
    for (int a : exponents) {
        if (a < 0) throw DomainError("psi_integral_genus0: negative exponent");
        total += a;
        denom *= factorial(static_cast<unsigned>(a));
    }
    if (total != n - 3) return 0;
    return Rational(factorial(static_cast<unsigned>(n - 3)), denom);
}

}  // namespace logloc::eq
