#pragma once

#include <string>

#include "nvol/filtration.hpp"
#include "nvol/piecewise.hpp"
#include "nvol/rational.hpp"

namespace nvol {

/// Data on the cone X = C(V, L) for a valuation v_1: n = dim X, L = r^{-1}(-K_V), Lvol = L^{n-1},
/// c1 = v_1(V), A1 = A_X(v_1), and the volume curve of the filtration v_1 induces on the section ring.
struct ConeSetup {
    int n = 2;
    Rational r{1}, Lvol{1}, c1{1}, A1{1};
    PiecewisePolynomial vol_curve;
    std::string label;

    Rational lambda_star() const { return r / A1; }
    /// Throws ValidationError if the fields are inconsistent.
    void validate() const;
};

/// A divisor F over V with log discrepancy A_F and multiplicity q, through the curve t -> vol(F_F R^(t)).
struct DivisorialData {
    int n = 2;
    Rational r{1}, Lvol{1}, A_F{1}, q{1};
    PiecewisePolynomial vol_curve_F;
    std::string label;

    Rational a1() const { return -q * A_F / r; }
    /// (-K_V)^{n-1} = r^{n-1} Lvol
    Rational KVn1() const { return r.pow(n - 1) * Lvol; }
    void validate() const;
};

/// Both volume formulas (kernel and measure form); throws ConsistencyError if they differ.
Rational vol_v1(const ConeSetup& setup);

struct PhiValue {
    Rational kernel_form, measure_form;
};
/// Phi(lambda, s) by both forms; throws ConsistencyError if they differ.
Rational phi(const ConeSetup& setup, const Rational& lambda, const Rational& s);
PhiValue phi_both(const ConeSetup& setup, const Rational& lambda, const Rational& s);
/// d/ds Phi(lambda, s) at s = 0, closed form.
Rational phi_s_at_0(const ConeSetup& setup, const Rational& lambda);
/// d^2/ds^2 Phi(lambda, s), exact.
Rational phi_second(const ConeSetup& setup, const Rational& lambda, const Rational& s);
/// True iff the measure -d vol is a single point mass.
bool uniqueness_detector(const ConeSetup& setup);
/// vol(v_s) for the interpolation (1-s) v_0 + s v_1; equals phi(setup, 1, s).
Rational vs_interpolation(const ConeSetup& setup, const Rational& s);

Rational theta(const DivisorialData& div);
/// The same data over L_* = L/sigma.
DivisorialData rescale(const DivisorialData& div, const Rational& sigma);
struct RescaleReport {
    bool equal = false;
    Rational theta, theta_rescaled;
    std::string detail;
};
RescaleReport theta_rescale_check(const DivisorialData& div, const Rational& sigma);

struct VolPair {
    Rational vol, nvol;
};
/// v_alpha = v_0 + alpha ord_F on the cone.
VolPair valpha(const DivisorialData& div, const Rational& alpha);
/// Cone data of v_alpha (alpha > 0): c1 = 1, A1 = r + alpha A_F, curve vol_F((t-1)/alpha).
ConeSetup valpha_setup(const DivisorialData& div, const Rational& alpha);
/// d/d alpha of nvol(v_alpha) at 0 by product rule on the exact volume expansion.
Rational valpha_nvol_derivative(const DivisorialData& div);

/// (1 + beta a1) r + beta q A_F
Rational wbeta_logdisc(const Rational& r, const Rational& beta, const Rational& q, const Rational& A_F);
/// w_beta = (1 + beta a1) v_0 + beta q ord_F.
VolPair wbeta(const DivisorialData& div, const Rational& beta);
ConeSetup wbeta_setup(const DivisorialData& div, const Rational& beta);
/// d/d beta of vol(w_beta) and nvol(w_beta) at 0, by exact integration.
Rational wbeta_vol_derivative(const DivisorialData& div);
Rational wbeta_nvol_derivative(const DivisorialData& div);

/// Curve of the filtration induced by the test configuration: x -> vol_F((x - a1)/q).
PiecewisePolynomial test_configuration_curve(const DivisorialData& div);
/// CM weight from the (un-normalized) measure -d vol of the test-configuration filtration.
Rational cm_from_dh(const Measure1D& dh, int n, const Rational& r, const Rational& KVn1);

/// 1 - r (e+ - e-) + (r^n / (-K_V)^{n-1}) int_{e-}^{e+} vol
Rational d_infinity(const PiecewisePolynomial& vol, int n, const Rational& r, const Rational& KVn1,
                    const Rational& e_plus, const Rational& e_minus);

/// Divisorial data of the hyperplane in P^{n-1} with L = -K = nH.
DivisorialData pn_hyperplane(int n);

/// Deformation to the normal cone of a smooth divisor D ~ lambda(-K_V) on a Fano V of dimension n-1,
/// L = -p K_V, with (-K_V)^{n-1} = KV.
struct NormalCone {
    int n = 2;
    long p = 1;
    Rational lambda, KV;
    DivisorialData div;
    Rational derivative_vol_closed;   // p (n - 1/lambda) Lvol
    Rational derivative_nvol_closed;  // p^{1-n} (n - 1/lambda) Lvol
    bool tabulated = false;           // section counts available (V = P^{n-1}, lambda n integral)
    std::string warning;              // set when 1/lambda > n
};
NormalCone normal_cone_preset(int n, long p, const Rational& lambda, const Rational& KV);
NormalCone normal_cone_preset(int n, long p, const Rational& lambda);

/// dim H^0(V, kL - ceil(y) D) for the normal-cone preset on V = P^{n-1}.
TabulatedSource normal_cone_divisorial_source(const NormalCone& nc, long max_level = 40);
/// The filtration x -> F_F^{(x - shift k)/scale} R_k.
TabulatedSource affine_source(const TabulatedSource& base, const Rational& shift, const Rational& scale);

}  // namespace nvol
