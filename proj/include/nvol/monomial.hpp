#pragma once

#include <vector>

#include "nvol/rational.hpp"

namespace nvol {

/// Monomial valuation on affine n-space with positive weights gamma_i on the coordinates.
class MonomialValuation {
public:
    explicit MonomialValuation(std::vector<Rational> weights);
    const std::vector<Rational>& weights() const { return weights_; }
    int dim() const { return static_cast<int>(weights_.size()); }

private:
    std::vector<Rational> weights_;
};

Rational mono_vol(const MonomialValuation& v);
Rational mono_logdisc(const MonomialValuation& v);
Rational mono_nvol(const MonomialValuation& v);

/// #{e in Z^n_{>=0} : <e, gamma> < m}. Throws if prod(m/gamma_i) exceeds `cap`.
Integer mono_count_oracle(const MonomialValuation& v, const Rational& m, const Rational& cap = Rational(100000000));

struct MinScanReport {
    std::vector<Rational> minimizer;
    Rational value;
    long grid_points = 0;
    bool at_center = false;
};

/// Grid scan of nvol over {gamma_i = n k_i / R : k_i >= 1, sum k_i = R}.
MinScanReport mono_min_scan(int n, int resolution);

/// Log discrepancy of the weighted deformation wt_beta on C^n with integer weights lambda_i:
/// sum over i of (1 + beta (lambda_i - mean lambda)).
Rational mono_wt_logdisc(const std::vector<long>& lambdas, const Rational& beta);

}  // namespace nvol
