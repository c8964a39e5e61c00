#pragma once

#include <span>
#include <string>
#include <vector>

#include "nvol/rational.hpp"

namespace nvol {

/// Dense univariate polynomial with exact rational coefficients; coefficient i multiplies t^i.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    /// c0 + c1 t
    static Polynomial linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coefficient(int i) const;
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
    std::span<const Rational> coefficients() const { return coeffs_; }

    Rational operator()(const Rational& t) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const { return *this * Rational(-1); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(int exponent) const;
    Polynomial derivative() const;
    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const;
    /// t -> P(scale * t + shift)
    Polynomial compose_affine(const Rational& scale, const Rational& shift) const;

    /// Euclidean division; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
    /// Monic gcd (zero if both are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);
    Polynomial monic() const;

    /// Exact test that P(t) >= 0 for every t in [lo, hi] (Sturm sequences on the odd-multiplicity part).
    bool nonnegative_on(const Rational& lo, const Rational& hi) const;
    /// Number of distinct real roots in the half-open interval (lo, hi].
    int count_roots(const Rational& lo, const Rational& hi) const;

    std::string str(char var = 't') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace nvol
