#include "logloc/eq_scalar.hpp"

#include "logloc/errors.hpp"

#include <algorithm>

namespace logloc::eq {

Poly::Poly(const Rational& c)
{
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int degree)
{
    if (degree < 0) throw DomainError("Poly::monomial: negative degree");
    if (c == 0) return Poly();
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

bool Poly::is_monomial() const { return !c_.empty() && valuation() == degree(); }

Rational Poly::coefficient(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational Poly::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::shifted_down(int n) const
{
    if (n <= 0) return *this;
    if (n > valuation() && !is_zero()) throw DomainError("Poly::shifted_down: not divisible");
    return Poly(std::vector<Rational>(c_.begin() + n, c_.end()));
}

Poly Poly::scaled(const Rational& s) const
{
    if (s == 0) return Poly();
    Poly out = *this;
    for (auto& c : out.c_) c *= s;
    return out;
}

Poly operator+(const Poly& a, const Poly& b)
{
    const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
    const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
    Poly out = big;
    for (std::size_t i = 0; i < small.c_.size(); ++i) out.c_[i] += small.c_[i];
    out.trim();
    return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r)
{
    if (b.is_zero()) throw DomainError("Poly::divmod: division by zero polynomial");
    r = a;
    if (a.degree() < b.degree()) {
        q = Poly();
        return;
    }
    std::vector<Rational> qc(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational& lead = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational factor = r.leading() / lead;
        qc[static_cast<std::size_t>(shift)] = factor;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[j + static_cast<std::size_t>(shift)] -= factor * b.c_[j];
        r.c_.back() = 0;
        r.trim();
    }
    q = Poly(std::move(qc));
}

Poly Poly::gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(1 / a.leading());
}

std::string Poly::str() const
{
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string coeff = to_string(c_[i]);
        if (i == 0)
            out += coeff;
        else {
            if (c_[i] != 1) out += (c_[i] < 0 || coeff.find('/') != std::string::npos ? "(" + coeff + ")" : coeff) + "*";
            out += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

EqScalar::EqScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw DomainError("EqScalar: zero denominator");
    normalize();
}

EqScalar EqScalar::monomial(const Rational& c, int n)
{
    if (n >= 0) return EqScalar(Poly::monomial(c, n), Poly(Rational(1)));
    return EqScalar(Poly(c), Poly::monomial(1, -n));
}

void EqScalar::normalize()
{
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (den_.is_monomial()) {
        int v = std::min(num_.valuation(), den_.degree());
        num_ = num_.shifted_down(v);
        den_ = den_.shifted_down(v);
    } else {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            Poly::divmod(num_, g, q, r);
            num_ = std::move(q);
            Poly::divmod(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    if (den_.leading() != 1) {
        Rational lead = den_.leading();
        num_ = num_.scaled(1 / lead);
        den_ = den_.scaled(1 / lead);
    }
}

Rational EqScalar::constant_value() const
{
    if (!is_constant()) throw DomainError("EqScalar: value depends on t: " + str());
    return num_.coefficient(0);
}

bool EqScalar::as_monomial(Rational& c, int& n) const
{
    if (num_.is_zero()) {
        c = 0;
        n = 0;
        return true;
    }
    if (!num_.is_monomial() || !den_.is_monomial()) return false;
    c = num_.leading();
    n = num_.degree() - den_.degree();
    return true;
}

EqScalar EqScalar::inverse() const
{
    if (is_zero()) throw DomainError("EqScalar: inverse of zero");
    return EqScalar(den_, num_);
}

EqScalar operator+(const EqScalar& a, const EqScalar& b)
{
    if (a.den_ == b.den_) return EqScalar(a.num_ + b.num_, a.den_);
    return EqScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

EqScalar operator-(const EqScalar& a, const EqScalar& b) { return a + (-b); }

EqScalar EqScalar::operator-() const
{
    EqScalar out = *this;
    out.num_ = -out.num_;
    return out;
}

EqScalar operator*(const EqScalar& a, const EqScalar& b)
{
    if (a.is_zero() || b.is_zero()) return EqScalar();
    return EqScalar(a.num_ * b.num_, a.den_ * b.den_);
}

EqScalar operator/(const EqScalar& a, const EqScalar& b) { return a * b.inverse(); }

std::string EqScalar::str() const
{
    if (den_.degree() == 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace logloc::eq
