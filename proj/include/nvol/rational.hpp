#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nvol {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                                  // NOLINT
    Rational(int v) : q_(static_cast<long>(v)) {}                // NOLINT
    Rational(unsigned long v) : q_(v) {}                         // NOLINT
    Rational(const Integer& v) : q_(v) {}                        // NOLINT
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    /// Parses "p", "p/q", or a finite decimal such as "-0.05" (exactly).
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Exponent may be negative (requires nonzero base).
    Rational pow(long exponent) const;
    Rational abs() const;
    Integer floor() const;
    Integer ceil() const;

    double to_double() const { return q_.get_d(); }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;
    /// Correctly rounded decimal with `digits` significant digits (round half away from zero).
    std::string to_decimal(int digits = 6) const;
    /// Correctly rounded fixed-point rendering with `places` digits after the point.
    std::string to_fixed(int places, bool trim_zeros = false) const;

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_;
};

/// Narrowing with a range check; throws ValidationError if the value does not fit.
std::int64_t to_int64(const Integer& v);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace nvol
