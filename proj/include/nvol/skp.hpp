#pragma once

#include <string>
#include <vector>

#include "nvol/bipoly.hpp"
#include "nvol/rational.hpp"

namespace nvol {

/// Truncated key-polynomial data: q_0 = y, q_1 = x, q_{i+1} = q_i^{c_i} + y^{beta_i c_i}, with v(q_i) = beta_i.
/// Indices below are 1-based as in the usual notation; c_0 = beta_0 = 1.
class SKPData {
public:
    SKPData(std::vector<long> c, std::vector<Rational> beta);

    int depth() const { return static_cast<int>(c_.size()); }
    long c(int i) const;
    const Rational& beta(int i) const;
    /// d_1 = 1, d_{i+1} = d_i c_i; valid for 1 <= i <= depth + 1.
    long d(int i) const;

private:
    std::vector<long> c_;
    std::vector<Rational> beta_;
    std::vector<long> d_;
};

/// Exponent of the q-monomial y^{a0} q_1^{a_1} ... q_K^{a_K}; a[i-1] holds a_i.
struct QMonomial {
    long a0 = 0;
    std::vector<long> a;
    friend auto operator<=>(const QMonomial&, const QMonomial&) = default;
};

Rational qmon_value(const SKPData& data, const QMonomial& q);
/// Order at the origin: a0 + sum a_i d_i.
long qmon_order(const SKPData& data, const QMonomial& q);
/// (y exponent, x exponent) of the lowest-degree monomial.
std::pair<long, long> qmon_initial(const SKPData& data, const QMonomial& q);

/// dim C[x,y] / {v >= m}: number of q-monomials of value < m. Needs c_K beta_K >= m.
Integer skp_codim(const SKPData& data, const Rational& m);

/// Standard q-monomial of degree k whose initial x exponent is e.
QMonomial skp_degree_monomial(const SKPData& data, long k, long e);
/// Values of the k+1 standard q-monomials of degree k, sorted decreasingly.
std::vector<Rational> skp_level_values(const SKPData& data, long k);
/// Dimension of the degree-k piece of the filtration {v >= m}.
long skp_filtration_dim(const SKPData& data, const Rational& m, long k);

/// d_k / beta_k
Rational skp_vol_approx(const SKPData& data, int k);
/// 2 + sum_{i<=k} (beta_i - c_{i-1} beta_{i-1})
Rational skp_logdisc(const SKPData& data, int k);

struct QTerm {
    Rational coefficient;
    QMonomial exponent;
};
/// Unique expansion f = sum b q^a, sorted by exponent.
std::vector<QTerm> skp_expand(const SKPData& data, const BiPoly& f);
/// min over the expansion of the q-monomial values; throws on the zero polynomial.
Rational skp_value(const SKPData& data, const BiPoly& f);
/// q_i as a polynomial in x, y (1 <= i <= depth + 1; q_0 = y).
BiPoly skp_key_polynomial(const SKPData& data, int i);

std::vector<std::string> skp_preset_names();
/// Known families by name, e.g. "zariski-primes".
SKPData skp_preset(const std::string& name, int depth);
/// Smallest depth of the preset with c_K beta_K >= m.
int skp_preset_depth_for(const std::string& name, const Rational& m);

}  // namespace nvol
