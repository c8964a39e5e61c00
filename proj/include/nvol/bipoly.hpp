#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "nvol/rational.hpp"

namespace nvol {

/// Sparse polynomial in x and y; keys are (x exponent, y exponent).
class BiPoly {
public:
    using Exponent = std::pair<int, int>;

    BiPoly() = default;
    static BiPoly monomial(const Rational& c, int xe, int ye);
    /// Parses expressions over x, y with + - * ^ (nonnegative integer powers), parentheses and rational literals.
    static BiPoly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    /// -1 for the zero polynomial.
    int degree_x() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;
    BiPoly pow(int e) const;

    /// Division in x by a divisor monic in x: num = q * den + r with deg_x r < deg_x den.
    static std::pair<BiPoly, BiPoly> divmod_x(const BiPoly& num, const BiPoly& den);

    std::string str() const;

private:
    void add_term(const Exponent& e, const Rational& c);
    std::map<Exponent, Rational> terms_;
};

}  // namespace nvol
