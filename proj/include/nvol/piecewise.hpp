#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nvol/polynomial.hpp"
#include "nvol/rational.hpp"

namespace nvol {

/// An endpoint that may be infinite; std::nullopt is -inf as a lower bound and +inf as an upper bound.
using Bound = std::optional<Rational>;

/// Piecewise polynomial in the global variable t.
///
/// Breakpoints b_0 < ... < b_N; piece i lives on [b_i, b_{i+1}); the head constant covers
/// (-inf, b_0] and the tail constant covers (b_N, inf). Evaluation is right-continuous at interior
/// breakpoints and left-continuous at b_0 and b_N. Adjacent identical pieces are merged.
class PiecewisePolynomial {
public:
    PiecewisePolynomial() = default;
    PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces, Rational head,
                        Rational tail);

    static PiecewisePolynomial constant(const Rational& c) { return {{}, {}, c, c}; }
    /// `before` on (-inf, at], `after` beyond.
    static PiecewisePolynomial step(const Rational& at, const Rational& before, const Rational& after) {
        return {{at}, {}, before, after};
    }
    /// Zero outside [lo, hi], `p` inside.
    static PiecewisePolynomial supported(const Rational& lo, const Rational& hi, const Polynomial& p) {
        return {{lo, hi}, {p}, Rational(0), Rational(0)};
    }

    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }
    const Rational& head() const { return head_; }
    const Rational& tail() const { return tail_; }
    int max_degree() const;

    Rational operator()(const Rational& t) const;
    /// Value approached from the left / right at t.
    Rational left_limit(const Rational& t) const;
    Rational right_limit(const Rational& t) const;

    /// t -> f(scale * t + shift); scale must be positive.
    PiecewisePolynomial compose_affine(const Rational& scale, const Rational& shift) const;
    PiecewisePolynomial scaled(const Rational& c) const;

    /// Exact check that f never increases.
    bool is_nonincreasing() const;

    friend bool operator==(const PiecewisePolynomial&, const PiecewisePolynomial&) = default;

private:
    std::vector<Rational> breaks_;
    std::vector<Polynomial> pieces_;
    Rational head_{0}, tail_{0};
};

struct Atom {
    Rational location;
    Rational mass;
    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Density (head = tail = 0) plus finitely many point masses, sorted by location with duplicates merged.
class Measure1D {
public:
    Measure1D() = default;
    Measure1D(PiecewisePolynomial density, std::vector<Atom> atoms);

    const PiecewisePolynomial& density() const { return density_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    Rational total_mass() const;
    Measure1D scaled(const Rational& c) const;
    /// Smallest and largest point of the support; throws on the zero measure.
    std::pair<Rational, Rational> support() const;

private:
    PiecewisePolynomial density_;
    std::vector<Atom> atoms_;
};

/// Kernel 1/(a + b t)^power.
struct Kernel {
    Rational a{1}, b{0};
    int power = 0;
};

/// Exact integral of P(t)/(a+bt)^power over [lo, hi]. Throws if a logarithm would appear,
/// if a+bt is not positive on the range, or if the integral diverges.
Rational integrate_over_linear_power(const Polynomial& p, const Kernel& k, const Bound& lo, const Bound& hi);

/// Exact integral of f over [lo, hi].
Rational pp_integrate(const PiecewisePolynomial& f, const Bound& lo, const Bound& hi);

/// Exact integral of f(t)/(a+bt)^(n+1) over [lo, hi]; every piece on the range must have degree <= n-1
/// when b != 0.
Rational pp_integrate_kernel(const PiecewisePolynomial& f, const Rational& a, const Rational& b, int n,
                             const Bound& lo, const Bound& hi);
/// Same, over the set where f is nonzero.
Rational pp_integrate_kernel(const PiecewisePolynomial& f, const Rational& a, const Rational& b, int n);

/// The measure -df of a non-increasing f with constant head and zero tail.
Measure1D neg_differential(const PiecewisePolynomial& f);

/// Exact integral of x^power/(a+bx)^n against mu (atoms included pointwise).
Rational measure_moment(const Measure1D& mu, int power, const std::optional<Kernel>& kernel = std::nullopt);

}  // namespace nvol
