#include "nvol/filtration.hpp"

#include <algorithm>
#include <memory>

#include "nvol/errors.hpp"
#include "nvol/skp.hpp"

namespace nvol {

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational factorial(int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f *= Rational(i);
    return f;
}

TabulatedCurve vol_curve(const TabulatedSource& src, const std::vector<Rational>& grid) {
    if (grid.empty()) throw ValidationError("empty t grid");
    if (src.max_level < 10) throw ValidationError("tabulated curves need max level >= 10");
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i - 1] < grid[i])) throw ValidationError("t grid must be strictly increasing");
    auto sample = [&](long m, const Rational& t) {
        return factorial(src.n - 1) * Rational(src.dims(Rational(m) * t, m)) / Rational(m).pow(src.n - 1);
    };
    TabulatedCurve out;
    out.t = grid;
    for (const auto& t : grid) {
        out.value.push_back(sample(src.max_level, t));
        out.half_level_value.push_back(sample(src.max_level / 2, t));
    }
    std::vector<Polynomial> pieces;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        Rational slope = (out.value[i + 1] - out.value[i]) / (grid[i + 1] - grid[i]);
        pieces.push_back(Polynomial::linear(out.value[i] - slope * grid[i], slope));
    }
    out.interpolant = grid.size() == 1 ? PiecewisePolynomial::constant(out.value[0])
                                       : PiecewisePolynomial(grid, pieces, out.value.front(), out.value.back());
    return out;
}

SuccessiveMinima successive_minima(const TabulatedSource& src, long m) {
    if (m < 0) throw ValidationError("level must be nonnegative");
    std::vector<Rational> cand = src.jumps(m);
    std::sort(cand.begin(), cand.end(), std::greater<>());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    const Integer total = src.dim_R(m);
    SuccessiveMinima out{m, {}};
    if (total == 0) return out;
    if (cand.empty()) throw ConsistencyError("no jump candidates at level " + std::to_string(m));
    Integer above = src.dims(cand.front() + 1, m);
    if (above != 0) throw ConsistencyError("filtration nonzero above the largest jump candidate");
    for (const auto& lam : cand) {
        Integer here = src.dims(lam, m);
        if (here < above) throw ConsistencyError("filtration dimensions increase with x");
        for (Integer j = above; j < here; ++j) out.values.push_back(lam);
        above = here;
    }
    if (above != total)
        throw ConsistencyError("jump candidates at level " + std::to_string(m) + " account for " + above.get_str() +
                               " of " + total.get_str() + " dimensions");
    return out;
}

Measure1D dh_empirical(const TabulatedSource& src, long m) {
    if (m < 1) throw ValidationError("level must be positive");
    auto sm = successive_minima(src, m);
    if (sm.values.empty()) throw ValidationError("R_m is zero");
    Rational w(1, static_cast<long>(sm.values.size()));
    std::vector<Atom> atoms;
    for (const auto& v : sm.values) atoms.push_back({v / Rational(m), w});
    return {PiecewisePolynomial(), std::move(atoms)};
}

Measure1D dh_limit(const PiecewisePolynomial& vol, const Rational& Lvol) {
    if (Lvol.sign() <= 0) throw ValidationError("Lvol must be positive");
    return neg_differential(vol).scaled(Rational(1) / Lvol);
}

std::pair<Rational, Rational> support_bounds(const PiecewisePolynomial& vol) {
    return neg_differential(vol).support();
}

EminEmax emin_emax(const TabulatedSource& src, const std::vector<long>& levels) {
    if (levels.empty()) throw ValidationError("no levels given");
    EminEmax out;
    for (long m : levels) {
        if (m < 1) throw ValidationError("levels must be positive");
        auto sm = successive_minima(src, m);
        if (sm.values.empty()) continue;
        out.levels.push_back(m);
        out.emax.push_back(sm.values.front() / Rational(m));
        out.emin.push_back(sm.values.back() / Rational(m));
    }
    if (out.levels.empty()) throw ValidationError("all requested levels are zero");
    out.emax_estimate = *std::max_element(out.emax.begin(), out.emax.end());
    out.emin_estimate = *std::min_element(out.emin.begin(), out.emin.end());
    return out;
}

LemlimResult lemlim_check(const PiecewisePolynomial& vol, const TabulatedSource& src, const Rational& c1,
                          const Rational& alpha, const Rational& beta, long p) {
    if (alpha.sign() < 0) throw ValidationError("alpha must be nonnegative");
    if (!(beta > -c1)) throw ValidationError("beta must exceed -c1");
    if (p < 1) throw ValidationError("p must be positive");
    const int n = src.n;
    const Rational ap = alpha * Rational(p);
    const long top = to_int64((ap / (beta + c1)).floor());
    Integer sum = 0;
    for (long i = 0; i <= top; ++i) sum += src.dims(ap - beta * Rational(i), i);
    LemlimResult r;
    r.lhs = factorial(n) * Rational(sum) / Rational(p).pow(n);
    r.rhs = alpha.is_zero() ? Rational(0)
                            : Rational(n) * alpha.pow(n) * pp_integrate_kernel(vol, beta, 1, n, c1, std::nullopt);
    r.gap = (r.lhs - r.rhs).abs();
    return r;
}

TabulatedSource trivial_source(int n, const Rational& c, long max_level) {
    if (n < 1 || c.sign() <= 0) throw ValidationError("trivial filtration needs n >= 1 and c > 0");
    TabulatedSource s;
    s.n = n;
    s.Lvol = 1;
    s.max_level = max_level;
    s.dim_R = [n](long k) { return binomial(k + n - 1, n - 1); };
    s.dims = [n, c](const Rational& x, long k) {
        return x <= Rational(k) * c ? binomial(k + n - 1, n - 1) : Integer(0);
    };
    s.jumps = [c](long k) { return std::vector<Rational>{Rational(k) * c}; };
    s.label = "trivial";
    return s;
}

PiecewisePolynomial trivial_curve(const Rational& Lvol, const Rational& c) {
    return PiecewisePolynomial::step(c, Lvol, 0);
}

TabulatedSource skp_source(const SKPData& data, long max_level) {
    auto d = std::make_shared<const SKPData>(data);
    TabulatedSource s;
    s.n = 2;
    s.Lvol = 1;
    s.max_level = max_level;
    s.dim_R = [](long k) { return Integer(k + 1); };
    s.dims = [d](const Rational& x, long k) { return Integer(skp_filtration_dim(*d, x, k)); };
    s.jumps = [d](long k) { return skp_level_values(*d, k); };
    s.label = "skp";
    return s;
}

PiecewisePolynomial skp_limit_curve(const Rational& a) {
    if (!(a.sign() > 0 && a < 1)) throw ValidationError("volume must lie in (0, 1)");
    Rational one_minus = Rational(1) - a;
    return {{1, Rational(1) / a}, {Polynomial::linear(Rational(1) / one_minus, -a / one_minus)}, 1, 0};
}

}  // namespace nvol
