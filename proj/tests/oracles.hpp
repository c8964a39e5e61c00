// Independent reference computations used only by the tests.
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "nvol/piecewise.hpp"
#include "nvol/rational.hpp"

namespace oracle {

inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                          double whole, double eps, int depth) {
    double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6 * (fa + 4 * flm + fm), right = (b - m) / 6 * (fm + 4 * frm + fb);
    double diff = left + right - whole;
    if (depth <= 0 || std::fabs(diff) <= 15 * eps) return left + right + diff / 15;
    return simpson_rec(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

/// Adaptive Simpson on a finite interval.
inline double quad(const std::function<double(double)>& f, double a, double b, double eps = 1e-13) {
    if (a == b) return 0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return simpson_rec(f, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), eps, 60);
}

/// Integral over [a, inf) through t = a + u/(1-u).
inline double quad_to_inf(const std::function<double(double)>& f, double a, double eps = 1e-13) {
    auto g = [&](double u) {
        if (u >= 1) return 0.0;
        double w = 1 - u;
        return f(a + u / w) / (w * w);
    };
    return quad(g, 0, 1, eps);
}

inline double eval(const nvol::Polynomial& p, double t) {
    double acc = 0;
    auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + it->to_double();
    return acc;
}

inline double eval(const nvol::PiecewisePolynomial& f, double t) {
    const auto& br = f.breakpoints();
    if (t <= br.front().to_double()) return f.head().to_double();
    if (t > br.back().to_double()) return f.tail().to_double();
    for (size_t i = 0; i + 1 < br.size(); ++i)
        if (t < br[i + 1].to_double()) return eval(f.pieces()[i], t);
    return eval(f.pieces().back(), t);
}

/// Numerical integral of f(t)/(a+bt)^(n+1), piece by piece, over the whole line (f must have bounded support).
inline double kernel_integral(const nvol::PiecewisePolynomial& f, double a, double b, int n) {
    double total = 0;
    const auto& br = f.breakpoints();
    for (size_t i = 0; i < f.pieces().size(); ++i) {
        const auto& p = f.pieces()[i];
        total += quad([&](double t) { return eval(p, t) / std::pow(a + b * t, n + 1); }, br[i].to_double(),
                      br[i + 1].to_double());
    }
    return total;
}

inline nvol::Rational random_rational(std::mt19937& rng, long lo, long hi, long den_max = 9) {
    std::uniform_int_distribution<long> den(1, den_max);
    long d = den(rng);
    std::uniform_int_distribution<long> num(lo * d, hi * d);
    return nvol::Rational(num(rng), d);
}

/// Random admissible volume curve: head v, non-increasing pieces of degree <= n-1, optional downward jumps,
/// first breakpoint c1 > 0, tail 0.
inline nvol::PiecewisePolynomial random_vol_curve(std::mt19937& rng, int n) {
    using nvol::Polynomial;
    using nvol::Rational;
    std::uniform_int_distribution<int> count(1, 3), deg(0, n - 1), coin(0, 2);
    Rational v = random_rational(rng, 1, 6);
    Rational b = random_rational(rng, 1, 2) ;
    std::vector<Rational> breaks{b};
    std::vector<Polynomial> pieces;
    Rational cur = v;
    if (coin(rng) == 0) cur = cur * Rational(1, 2);
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
        Rational len = random_rational(rng, 1, 3);
        int d = deg(rng);
        // cur - c (t - b)^d with the end value in [0, cur]
        Rational frac = random_rational(rng, 0, 1);
        Rational c = d == 0 ? Rational(0) : cur * frac / len.pow(d);
        Polynomial p = Polynomial::constant(cur) - Polynomial::linear(-b, 1).pow(d) * c;
        pieces.push_back(p);
        Rational end = p(b + len);
        b = b + len;
        breaks.push_back(b);
        cur = coin(rng) == 0 ? end * Rational(1, 3) : end;
    }
    return {breaks, pieces, v, Rational(0)};
}

}  // namespace oracle
