#include "nvol/monomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "nvol/errors.hpp"

namespace nvol {

MonomialValuation::MonomialValuation(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw ValidationError("monomial valuation needs at least one weight");
    for (const auto& g : weights_)
        if (g.sign() <= 0) throw ValidationError("monomial weights must be positive, got " + g.str());
}

Rational mono_vol(const MonomialValuation& v) {
    Rational p(1);
    for (const auto& g : v.weights()) p *= g;
    return Rational(1) / p;
}

Rational mono_logdisc(const MonomialValuation& v) {
    Rational s(0);
    for (const auto& g : v.weights()) s += g;
    return s;
}

Rational mono_nvol(const MonomialValuation& v) { return mono_logdisc(v).pow(v.dim()) * mono_vol(v); }

Integer mono_count_oracle(const MonomialValuation& v, const Rational& m, const Rational& cap) {
    if (m.sign() <= 0) throw ValidationError("count level m must be positive");
    Rational work(1);
    for (const auto& g : v.weights()) work *= m / g;
    if (work > cap)
        throw ValidationError("enumeration bound " + Integer(work.ceil()).get_str() + " exceeds cap " + cap.str() +
                              "; raise the cap to at least that");

    // scale everything to integers
    Integer den = m.denominator();
    for (const auto& g : v.weights()) den = lcm(den, g.denominator());
    std::vector<std::int64_t> w;
    for (const auto& g : v.weights()) w.push_back(to_int64((g * Rational(den)).numerator()));
    const std::int64_t M = to_int64((m * Rational(den)).numerator());

    const size_t n = w.size();
    Integer total = 0;
    std::function<void(size_t, std::int64_t)> rec = [&](size_t i, std::int64_t used) {
        std::int64_t rest = M - used;
        if (i + 1 == n) {
            total += (rest + w[i] - 1) / w[i];  // e w < rest  <=>  e < rest / w
            return;
        }
        for (std::int64_t s = used; s < M; s += w[i]) rec(i + 1, s);
    };
    rec(0, 0);
    return total;
}

MinScanReport mono_min_scan(int n, int resolution) {
    if (n < 1) throw ValidationError("dimension must be positive");
    if (resolution < 2 || resolution < n) throw ValidationError("resolution must be at least max(2, n)");
    MinScanReport best;
    bool have = false;
    std::vector<int> k(static_cast<size_t>(n), 1);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            k[static_cast<size_t>(i)] = left;
            std::vector<Rational> gamma;
            for (int x : k) gamma.emplace_back(static_cast<long>(n) * x, resolution);
            Rational val = mono_nvol(MonomialValuation(gamma));
            ++best.grid_points;
            if (!have || val < best.value) {
                best.value = val;
                best.minimizer = gamma;
                have = true;
            }
            return;
        }
        for (int x = 1; x <= left - (n - 1 - i); ++x) {
            k[static_cast<size_t>(i)] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, resolution);
    best.at_center = std::all_of(best.minimizer.begin(), best.minimizer.end(),
                                 [&](const Rational& g) { return g == best.minimizer.front(); });
    return best;
}

Rational mono_wt_logdisc(const std::vector<long>& lambdas, const Rational& beta) {
    if (lambdas.empty()) throw ValidationError("need at least one weight");
    Rational mean(std::accumulate(lambdas.begin(), lambdas.end(), 0L), static_cast<long>(lambdas.size()));
    Rational s(0);
    for (long l : lambdas) {
        Rational term = Rational(1) + beta * (Rational(l) - mean);
        if (term.sign() <= 0) throw ValidationError("beta too large: a weight of the deformation is not positive");
        s += term;
    }
    return s;
}

}  // namespace nvol
