#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nvol/piecewise.hpp"
#include "nvol/rational.hpp"

namespace nvol {

class SKPData;

/// Exact volume curve t -> vol(R^(t)) of a filtration, with n = dim of the cone and Lvol its head value.
struct ClosedFormSource {
    PiecewisePolynomial vol_curve;
    int n = 2;
    Rational Lvol;
};

/// Finite-level filtration data. `dims(x, k)` = dim F^x R_k; `jumps(k)` is a finite set containing every jump
/// of x -> dims(x, k), i.e. every successive minimum at level k. Callbacks must be deterministic and thread-safe.
struct TabulatedSource {
    int n = 2;
    Rational Lvol;
    long max_level = 0;
    std::function<Integer(const Rational& x, long k)> dims;
    std::function<Integer(long k)> dim_R;
    std::function<std::vector<Rational>(long k)> jumps;
    std::string label;
};

struct SuccessiveMinima {
    long level = 0;
    std::vector<Rational> values;  // non-increasing, length dim R_level
};

struct TabulatedCurve {
    PiecewisePolynomial interpolant;  // linear between grid points, constant outside
    std::vector<Rational> t, value, half_level_value;
};

/// Level-m samples (n-1)! dims(mt, m) / m^{n-1} at m = max_level, with the level max_level/2 for comparison.
TabulatedCurve vol_curve(const TabulatedSource& src, const std::vector<Rational>& grid);

SuccessiveMinima successive_minima(const TabulatedSource& src, long m);
/// Uniform atoms at lambda_j / m.
Measure1D dh_empirical(const TabulatedSource& src, long m);
/// -d vol / Lvol
Measure1D dh_limit(const PiecewisePolynomial& vol, const Rational& Lvol);
/// (inf{t : vol(t) < head}, sup of the support of -d vol)
std::pair<Rational, Rational> support_bounds(const PiecewisePolynomial& vol);

struct EminEmax {
    std::vector<long> levels;
    std::vector<Rational> emin, emax;  // e_min(R_m)/m and e_max(R_m)/m per level
    Rational emin_estimate, emax_estimate;  // inf and sup over the levels
};
EminEmax emin_emax(const TabulatedSource& src, const std::vector<long>& levels);

struct LemlimResult {
    Rational lhs, rhs, gap;
};
/// (n!/p^n) sum_{i <= alpha p/(beta + c1)} dims(alpha p - beta i, i) against n int_{c1}^inf vol alpha^n/(beta+x)^{n+1}.
LemlimResult lemlim_check(const PiecewisePolynomial& vol, const TabulatedSource& src, const Rational& c1,
                          const Rational& alpha, const Rational& beta, long p);

/// F^x R_k = R_k for x <= k c and 0 otherwise, on the polynomial ring in n variables.
TabulatedSource trivial_source(int n, const Rational& c, long max_level = 40);
/// Closed-form curve of the same: Lvol up to c, then 0.
PiecewisePolynomial trivial_curve(const Rational& Lvol, const Rational& c);

/// The filtration on C[x,y] graded by degree induced by the key-polynomial valuation.
TabulatedSource skp_source(const SKPData& data, long max_level = 60);
/// Limit volume curve of the key-polynomial filtration when the volume is a = vol(v): 1 up to t = 1, then
/// (1 - a t)/(1 - a) down to 0 at t = 1/a.
PiecewisePolynomial skp_limit_curve(const Rational& a);

Integer binomial(long n, long k);
Rational factorial(int n);

}  // namespace nvol
