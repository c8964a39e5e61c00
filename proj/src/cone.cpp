#include "nvol/cone.hpp"

#include "nvol/errors.hpp"

namespace nvol {

namespace {

void check_curve(const PiecewisePolynomial& vol, const Rational& Lvol, int n) {
    if (n < 1) throw ValidationError("dimension n must be positive");
    if (vol.head() != Lvol) throw ValidationError("volume curve must start at Lvol = " + Lvol.str());
    if (!vol.tail().is_zero()) throw ValidationError("volume curve must vanish for large t");
    if (vol.max_degree() > n - 1) throw ValidationError("volume curve pieces must have degree <= n-1");
    if (!vol.is_nonincreasing()) throw ValidationError("volume curve must be non-increasing");
}

}  // namespace

void ConeSetup::validate() const {
    if (r.sign() <= 0) throw ValidationError("r must be positive");
    if (Lvol.sign() <= 0) throw ValidationError("Lvol must be positive");
    if (c1.sign() <= 0) throw ValidationError("c1 must be positive for a valuation centered at the vertex");
    check_curve(vol_curve, Lvol, n);
    if (support_bounds(vol_curve).first < c1) throw ValidationError("volume curve drops before c1");
    if (A1 < r * c1) throw ValidationError("A1 must be at least r c1");
}

void DivisorialData::validate() const {
    if (r.sign() <= 0) throw ValidationError("r must be positive");
    if (Lvol.sign() <= 0) throw ValidationError("Lvol must be positive");
    if (q.sign() <= 0) throw ValidationError("q must be positive");
    if (A_F.sign() <= 0) throw ValidationError("A_F must be positive");
    check_curve(vol_curve_F, Lvol, n);
    // orders of vanishing are nonnegative
    if (support_bounds(vol_curve_F).first.sign() < 0) throw ValidationError("divisorial curve must equal Lvol for t <= 0");
}

Rational vol_v1(const ConeSetup& setup) {
    setup.validate();
    const int n = setup.n;
    Rational a = setup.Lvol / setup.c1.pow(n) -
                 Rational(n) * pp_integrate_kernel(setup.vol_curve, 0, 1, n, setup.c1, std::nullopt);
    Rational b = measure_moment(neg_differential(setup.vol_curve), 0, Kernel{0, 1, n});
    if (a != b)
        throw ConsistencyError("volume formulas disagree: " + a.str() + " vs " + b.str() + " (" + setup.label + ")");
    return a;
}

PhiValue phi_both(const ConeSetup& setup, const Rational& lambda, const Rational& s) {
    setup.validate();
    if (lambda.sign() <= 0) throw ValidationError("lambda must be positive");
    if (s.sign() < 0 || s > 1) throw ValidationError("s must lie in [0, 1]");
    const int n = setup.n;
    const Rational a = Rational(1) - s, b = lambda * s;
    PhiValue out;
    out.kernel_form = setup.Lvol / (b * setup.c1 + a).pow(n);
    if (!s.is_zero())
        out.kernel_form -= Rational(n) * b * pp_integrate_kernel(setup.vol_curve, a, b, n, setup.c1, std::nullopt);
    out.measure_form = measure_moment(neg_differential(setup.vol_curve), 0, Kernel{a, b, n});
    return out;
}

Rational phi(const ConeSetup& setup, const Rational& lambda, const Rational& s) {
    auto v = phi_both(setup, lambda, s);
    if (v.kernel_form != v.measure_form)
        throw ConsistencyError("Phi(" + lambda.str() + ", " + s.str() + ") kernel form " + v.kernel_form.str() +
                               " differs from measure form " + v.measure_form.str());
    return v.kernel_form;
}

Rational phi_s_at_0(const ConeSetup& setup, const Rational& lambda) {
    setup.validate();
    if (lambda.sign() <= 0) throw ValidationError("lambda must be positive");
    Rational integral = pp_integrate(setup.vol_curve, setup.c1, std::nullopt);
    return Rational(setup.n) * lambda * setup.Lvol *
           (Rational(1) / lambda - setup.c1 - integral / setup.Lvol);
}

Rational phi_second(const ConeSetup& setup, const Rational& lambda, const Rational& s) {
    setup.validate();
    if (lambda.sign() <= 0) throw ValidationError("lambda must be positive");
    if (s.sign() < 0 || s > 1) throw ValidationError("s must lie in [0, 1]");
    const int n = setup.n;
    Kernel k{Rational(1) - s, lambda * s, n + 2};
    Measure1D mu = neg_differential(setup.vol_curve);
    Rational m0 = measure_moment(mu, 0, k), m1 = measure_moment(mu, 1, k), m2 = measure_moment(mu, 2, k);
    return Rational(n * (n + 1)) * (lambda * lambda * m2 - Rational(2) * lambda * m1 + m0);
}

bool uniqueness_detector(const ConeSetup& setup) {
    auto [lo, hi] = support_bounds(setup.vol_curve);
    return lo == hi;
}

Rational vs_interpolation(const ConeSetup& setup, const Rational& s) {
    setup.validate();
    if (s.sign() < 0 || s > 1) throw ValidationError("s must lie in [0, 1]");
    Rational direct =
        measure_moment(neg_differential(setup.vol_curve), 0, Kernel{Rational(1) - s, s, setup.n});
    Rational via_phi = phi(setup, 1, s);
    if (direct != via_phi) throw ConsistencyError("vol(v_s) differs from Phi(1, s)");
    return direct;
}

Rational theta(const DivisorialData& div) {
    div.validate();
    return div.A_F - div.r.pow(div.n) / div.KVn1() * pp_integrate(div.vol_curve_F, Rational(0), std::nullopt);
}

DivisorialData rescale(const DivisorialData& div, const Rational& sigma) {
    if (sigma.sign() <= 0) throw ValidationError("sigma must be positive");
    DivisorialData out = div;
    Rational factor = sigma.pow(-(div.n - 1));
    out.vol_curve_F = div.vol_curve_F.compose_affine(sigma, 0).scaled(factor);
    out.Lvol = div.Lvol * factor;
    out.r = div.r * sigma;
    out.label = div.label + " rescaled by " + sigma.str();
    return out;
}

RescaleReport theta_rescale_check(const DivisorialData& div, const Rational& sigma) {
    RescaleReport rep;
    DivisorialData star = rescale(div, sigma);
    rep.theta = theta(div);
    rep.theta_rescaled = theta(star);
    Rational lhs = div.r.pow(div.n) * pp_integrate(div.vol_curve_F, Rational(0), std::nullopt);
    Rational rhs = star.r.pow(div.n) * pp_integrate(star.vol_curve_F, Rational(0), std::nullopt);
    rep.equal = rep.theta == rep.theta_rescaled && lhs == rhs && div.KVn1() == star.KVn1();
    if (!rep.equal)
        rep.detail = "theta " + rep.theta.str() + " vs " + rep.theta_rescaled.str() + ", weighted integrals " +
                     lhs.str() + " vs " + rhs.str() + ", (-K_V)^{n-1} " + div.KVn1().str() + " vs " +
                     star.KVn1().str();
    return rep;
}

VolPair valpha(const DivisorialData& div, const Rational& alpha) {
    div.validate();
    if (alpha.sign() < 0) throw ValidationError("alpha must be nonnegative");
    const int n = div.n;
    Rational vol = div.Lvol;
    if (!alpha.is_zero())
        vol -= Rational(n) * alpha * pp_integrate_kernel(div.vol_curve_F, 1, alpha, n, Rational(0), std::nullopt);
    return {vol, (div.r + alpha * div.A_F).pow(n) * vol};
}

ConeSetup valpha_setup(const DivisorialData& div, const Rational& alpha) {
    div.validate();
    if (alpha.sign() <= 0) throw ValidationError("alpha must be positive");
    ConeSetup s;
    s.n = div.n;
    s.r = div.r;
    s.Lvol = div.Lvol;
    s.c1 = 1;
    s.A1 = div.r + alpha * div.A_F;
    s.vol_curve = div.vol_curve_F.compose_affine(Rational(1) / alpha, -Rational(1) / alpha);
    s.label = div.label + ", v_alpha alpha=" + alpha.str();
    return s;
}

Rational valpha_nvol_derivative(const DivisorialData& div) {
    div.validate();
    const int n = div.n;
    // vol(v_alpha) = Lvol - n alpha K(alpha), so vol'(0) = -n K(0)
    Rational dvol = -Rational(n) * pp_integrate_kernel(div.vol_curve_F, 1, 0, n, Rational(0), std::nullopt);
    return Rational(n) * div.r.pow(n - 1) * div.A_F * div.Lvol + div.r.pow(n) * dvol;
}

Rational wbeta_logdisc(const Rational& r, const Rational& beta, const Rational& q, const Rational& A_F) {
    if (r.sign() <= 0 || q.sign() <= 0) throw ValidationError("r and q must be positive");
    if (beta.sign() < 0) throw ValidationError("beta must be nonnegative");
    // the identity is algebraic; admissibility 1 + beta a1 > 0 is enforced where w_beta is built
    Rational a1 = -q * A_F / r;
    return (Rational(1) + beta * a1) * r + beta * q * A_F;
}

ConeSetup wbeta_setup(const DivisorialData& div, const Rational& beta) {
    div.validate();
    if (beta.sign() <= 0) throw ValidationError("beta must be positive");
    Rational c1 = Rational(1) + beta * div.a1();
    if (c1.sign() <= 0) throw ValidationError("beta too large: 1 + beta a1 must be positive");
    Rational width = beta * div.q;
    ConeSetup s;
    s.n = div.n;
    s.r = div.r;
    s.Lvol = div.Lvol;
    s.c1 = c1;
    s.A1 = wbeta_logdisc(div.r, beta, div.q, div.A_F);
    s.vol_curve = div.vol_curve_F.compose_affine(Rational(1) / width, -c1 / width);
    s.label = div.label + ", w_beta beta=" + beta.str();
    return s;
}

VolPair wbeta(const DivisorialData& div, const Rational& beta) {
    if (beta.is_zero()) {
        div.validate();
        return {div.Lvol, div.r.pow(div.n) * div.Lvol};
    }
    ConeSetup s = wbeta_setup(div, beta);
    Rational v = vol_v1(s);
    return {v, s.A1.pow(s.n) * v};
}

Rational wbeta_vol_derivative(const DivisorialData& div) {
    div.validate();
    const Rational n(div.n);
    return -n * div.a1() * div.Lvol - n * div.q * pp_integrate(div.vol_curve_F, Rational(0), std::nullopt);
}

Rational wbeta_nvol_derivative(const DivisorialData& div) { return div.r.pow(div.n) * wbeta_vol_derivative(div); }

PiecewisePolynomial test_configuration_curve(const DivisorialData& div) {
    div.validate();
    return div.vol_curve_F.compose_affine(Rational(1) / div.q, -div.a1() / div.q);
}

Rational cm_from_dh(const Measure1D& dh, int n, const Rational& r, const Rational& KVn1) {
    if (KVn1.sign() <= 0) throw ValidationError("(-K_V)^{n-1} must be positive");
    // dh = -d vol, so Phi'(0) = n r^n int x d vol = -n r^n int x d(dh); CM = Phi'(0) / (n (-K_V)^{n-1})
    return -r.pow(n) * measure_moment(dh, 1) / KVn1;
}

Rational d_infinity(const PiecewisePolynomial& vol, int n, const Rational& r, const Rational& KVn1,
                    const Rational& e_plus, const Rational& e_minus) {
    if (e_minus > e_plus) throw ValidationError("e- must not exceed e+");
    auto [lo, hi] = support_bounds(vol);
    if (e_plus < hi) throw ValidationError("e+ must be at least lambda_max = " + hi.str());
    if (e_minus > lo) throw ValidationError("e- must be at most lambda_min = " + lo.str());
    return Rational(1) - r * (e_plus - e_minus) + r.pow(n) / KVn1 * pp_integrate(vol, e_minus, e_plus);
}

DivisorialData pn_hyperplane(int n) {
    if (n < 2) throw ValidationError("hyperplane preset needs n >= 2");
    DivisorialData d;
    d.n = n;
    d.r = 1;
    d.Lvol = Rational(n).pow(n - 1);
    d.A_F = 1;
    d.q = 1;
    d.vol_curve_F = PiecewisePolynomial({0, n}, {Polynomial::linear(n, -1).pow(n - 1)}, d.Lvol, 0);
    d.label = "pn-hyperplane:n=" + std::to_string(n);
    return d;
}

NormalCone normal_cone_preset(int n, long p, const Rational& lambda, const Rational& KV) {
    if (n < 2) throw ValidationError("normal-cone preset needs n >= 2");
    if (p < 1) throw ValidationError("p must be a positive integer");
    if (!(lambda.sign() > 0 && lambda < 1)) throw ValidationError("lambda must lie in (0, 1)");
    if (KV.sign() <= 0) throw ValidationError("KV must be positive");
    NormalCone nc;
    nc.n = n;
    nc.p = p;
    nc.lambda = lambda;
    nc.KV = KV;
    const Rational P(p);
    DivisorialData& d = nc.div;
    d.n = n;
    d.r = Rational(1) / P;
    d.Lvol = P.pow(n - 1) * KV;
    d.A_F = 1;
    d.q = 1;
    d.vol_curve_F =
        PiecewisePolynomial({0, P / lambda}, {Polynomial::linear(1, -lambda / P).pow(n - 1) * d.Lvol}, d.Lvol, 0);
    d.label = "normal-cone:n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",lambda=" + lambda.str();
    d.validate();
    const Rational gap = Rational(n) - Rational(1) / lambda;
    nc.derivative_vol_closed = P * gap * d.Lvol;
    nc.derivative_nvol_closed = P.pow(1 - n) * gap * d.Lvol;
    if (wbeta_vol_derivative(d) != nc.derivative_vol_closed || wbeta_nvol_derivative(d) != nc.derivative_nvol_closed)
        throw ConsistencyError("normal-cone derivative: integration route disagrees with the closed form");
    nc.tabulated = KV == Rational(n).pow(n - 1) && (lambda * Rational(n)).is_integer();
    if (gap.sign() < 0)
        nc.warning = "1/lambda = " + (Rational(1) / lambda).str() + " exceeds n = " + std::to_string(n) +
                     ", which the Fano index bound rules out geometrically";
    return nc;
}

NormalCone normal_cone_preset(int n, long p, const Rational& lambda) {
    return normal_cone_preset(n, p, lambda, Rational(n).pow(n - 1));
}

TabulatedSource normal_cone_divisorial_source(const NormalCone& nc, long max_level) {
    if (!nc.tabulated)
        throw ValidationError("section counts need V = P^{n-1} (KV = n^{n-1}) and lambda n integral");
    const long n = nc.n, deg = nc.p * n, j = to_int64((nc.lambda * Rational(n)).numerator());
    TabulatedSource s;
    s.n = nc.n;
    s.Lvol = nc.div.Lvol;
    s.max_level = max_level;
    s.dim_R = [=](long k) { return binomial(deg * k + n - 1, n - 1); };
    s.dims = [=](const Rational& y, long k) {
        long order = std::max<long>(0, to_int64(y.ceil()));
        long d = deg * k - j * order;
        return d < 0 ? Integer(0) : binomial(d + n - 1, n - 1);
    };
    s.jumps = [=](long k) {
        std::vector<Rational> out;
        for (long y = 0; y * j <= deg * k; ++y) out.emplace_back(y);
        return out;
    };
    s.label = nc.div.label + " (divisorial)";
    return s;
}

TabulatedSource affine_source(const TabulatedSource& base, const Rational& shift, const Rational& scale) {
    if (scale.sign() <= 0) throw ValidationError("scale must be positive");
    TabulatedSource s = base;
    auto dims = base.dims;
    auto jumps = base.jumps;
    s.dims = [=](const Rational& x, long k) { return dims((x - shift * Rational(k)) / scale, k); };
    s.jumps = [=](long k) {
        std::vector<Rational> out;
        for (const auto& y : jumps(k)) out.push_back(shift * Rational(k) + scale * y);
        return out;
    };
    return s;
}

}  // namespace nvol
