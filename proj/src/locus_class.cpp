#include "logloc/locus_class.hpp"

#include "logloc/errors.hpp"

#include <algorithm>

namespace logloc::eq {

LocusClass::LocusClass(int truncation)
{
    if (truncation < 0) throw DomainError("LocusClass: negative truncation");
    c_.resize(static_cast<std::size_t>(truncation) + 1);
}

LocusClass::LocusClass(int truncation, std::vector<EqScalar> coeffs) : LocusClass(truncation)
{
    if (coeffs.size() > c_.size()) coeffs.resize(c_.size());
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

LocusClass LocusClass::constant(const EqScalar& c, int truncation) { return LocusClass(truncation, {c}); }

LocusClass LocusClass::linear(const EqScalar& a, const EqScalar& b, int truncation)
{
    return LocusClass(truncation, {a, b});
}

bool LocusClass::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const EqScalar& s) { return s.is_zero(); });
}

LocusClass LocusClass::retruncated(int truncation) const { return LocusClass(truncation, c_); }

LocusClass LocusClass::inverse() const
{
    if (c_[0].is_zero()) throw SingularEulerClass("LocusClass: constant term vanishes, class is not invertible");
    const std::size_t n = c_.size();
    std::vector<EqScalar> inv(n);
    const EqScalar lead_inv = c_[0].inverse();
    inv[0] = lead_inv;
    for (std::size_t k = 1; k < n; ++k) {
        EqScalar acc;
        for (std::size_t j = 1; j <= k; ++j)
            if (!c_[j].is_zero() && !inv[k - j].is_zero()) acc += c_[j] * inv[k - j];
        inv[k] = -(acc * lead_inv);
    }
    return LocusClass(truncation(), std::move(inv));
}

namespace {

void require_same(const LocusClass& a, const LocusClass& b)
{
    if (a.truncation() != b.truncation()) throw StructuralError("LocusClass: truncation mismatch");
}

}  // namespace

LocusClass operator+(const LocusClass& a, const LocusClass& b)
{
    require_same(a, b);
    LocusClass out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
}

LocusClass operator-(const LocusClass& a, const LocusClass& b) { return a + (EqScalar(-1) * b); }

LocusClass operator*(const LocusClass& a, const LocusClass& b)
{
    require_same(a, b);
    const std::size_t n = a.c_.size();
    LocusClass out(a.truncation());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (!b.c_[j].is_zero()) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
}

LocusClass operator*(const EqScalar& s, const LocusClass& a)
{
    LocusClass out = a;
    for (auto& c : out.c_) c = s * c;
    return out;
}

}  // namespace logloc::eq
