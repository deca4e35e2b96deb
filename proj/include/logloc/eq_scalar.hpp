#pragma once

#include "logloc/rational.hpp"

#include <concepts>
#include <string>
#include <vector>

namespace logloc::eq {

/// Polynomial in t with rational coefficients, lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: constants promote implicitly
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(const Rational& c, int degree);
    static Poly t() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Largest n with t^n | p; -1 for zero.
    int valuation() const;
    bool is_monomial() const;
    const Rational& leading() const { return c_.back(); }
    Rational coefficient(int i) const;
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational evaluate(const Rational& x) const;

    Poly shifted_down(int n) const;
    Poly scaled(const Rational& s) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const { return scaled(-1); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws on a zero divisor.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    /// Monic gcd (zero only if both inputs are zero).
    static Poly gcd(Poly a, Poly b);

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Element of Q(t): num/den with den monic and gcd(num, den) = 1.
class EqScalar {
public:
    EqScalar() : num_(), den_(Rational(1)) {}
    EqScalar(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    template <std::integral I>
    EqScalar(I c) : EqScalar(Rational(c)) {}  // NOLINT
    EqScalar(Poly num, Poly den);

    static EqScalar t() { return EqScalar(Poly::t(), Poly(Rational(1))); }
    /// c * t^n for any integer n.
    static EqScalar monomial(const Rational& c, int n);

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// True iff the value is a constant rational.
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational constant_value() const;
    /// If the value is c * t^n, sets c and n.
    bool as_monomial(Rational& c, int& n) const;

    EqScalar inverse() const;

    friend EqScalar operator+(const EqScalar& a, const EqScalar& b);
    friend EqScalar operator-(const EqScalar& a, const EqScalar& b);
    friend EqScalar operator*(const EqScalar& a, const EqScalar& b);
    friend EqScalar operator/(const EqScalar& a, const EqScalar& b);
    EqScalar operator-() const;
    EqScalar& operator+=(const EqScalar& o) { return *this = *this + o; }
    EqScalar& operator*=(const EqScalar& o) { return *this = *this * o; }
    friend bool operator==(const EqScalar& a, const EqScalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string str() const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

}  // namespace logloc::eq
