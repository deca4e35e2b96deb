#pragma once

#include "logloc/eq_scalar.hpp"

#include <vector>

namespace logloc::eq {

/// Polynomial in a single psi class with EqScalar coefficients, truncated above psi^D.
class LocusClass {
public:
    explicit LocusClass(int truncation = 0);
    LocusClass(int truncation, std::vector<EqScalar> coeffs);

    static LocusClass constant(const EqScalar& c, int truncation);
    /// a + b psi.
    static LocusClass linear(const EqScalar& a, const EqScalar& b, int truncation);

    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    const EqScalar& coefficient(int i) const { return c_.at(static_cast<std::size_t>(i)); }
    const std::vector<EqScalar>& coefficients() const { return c_; }
    bool is_zero() const;

    /// Same class, truncated at a different degree (padding with zeros if raised).
    LocusClass retruncated(int truncation) const;

    /// Power-series inverse; throws SingularEulerClass if the constant term vanishes.
    LocusClass inverse() const;

    friend LocusClass operator+(const LocusClass& a, const LocusClass& b);
    friend LocusClass operator-(const LocusClass& a, const LocusClass& b);
    friend LocusClass operator*(const LocusClass& a, const LocusClass& b);
    friend LocusClass operator*(const EqScalar& s, const LocusClass& a);
    friend bool operator==(const LocusClass& a, const LocusClass& b) { return a.c_ == b.c_; }

private:
    std::vector<EqScalar> c_;
};

}  // namespace logloc::eq
