#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nvol/cone.hpp"
#include "nvol/errors.hpp"
#include "nvol/filtration.hpp"
#include "oracles.hpp"

using nvol::ConeSetup;
using nvol::DivisorialData;
using nvol::Rational;

namespace {

std::vector<ConeSetup> preset_setups() {
    return {nvol::valpha_setup(nvol::normal_cone_preset(2, 1, Rational(1, 2)).div, 1),
            nvol::valpha_setup(nvol::normal_cone_preset(3, 2, Rational(1, 2)).div, 1),
            nvol::valpha_setup(nvol::pn_hyperplane(2), 1),
            nvol::valpha_setup(nvol::pn_hyperplane(3), 1),
            nvol::wbeta_setup(nvol::normal_cone_preset(3, 2, Rational(1, 2)).div, Rational(1, 8))};
}

ConeSetup trivial_setup(int n, const Rational& c) {
    ConeSetup s;
    s.n = n;
    s.c1 = c;
    s.A1 = c;
    s.Lvol = 1;
    s.vol_curve = nvol::trivial_curve(1, c);
    return s;
}

// Phi by numerical quadrature of the kernel form
double phi_numeric(const ConeSetup& s, double lambda, double sv) {
    const int n = s.n;
    double c1 = s.c1.to_double();
    double head = s.Lvol.to_double() / std::pow(lambda * c1 * sv + 1 - sv, n);
    std::function<double(double)> f = [&](double t) {
        return oracle::eval(s.vol_curve, t) / std::pow((1 - sv) + lambda * sv * t, n + 1);
    };
    return head - n * lambda * sv * oracle::quad_to_inf(f, c1, 1e-11);
}

}  // namespace

TEST_CASE("volume of v1 by both formulas") {
    auto t = trivial_setup(3, Rational(3, 2));
    CHECK(nvol::vol_v1(t) == Rational(8, 27));
    // v_alpha on the P^2 hyperplane at alpha = 1 is C^3/Z_3 with vol 9/4
    auto p2 = nvol::valpha(nvol::pn_hyperplane(3), 1);
    CHECK(p2.vol == Rational(9, 4));
    CHECK(p2.nvol == 18);
    // brute force: monomials x^k y^a of the cone with k + a < m, weighted by sections 3k - a + 1 on P^2
    const long m = 60;
    long long count = 0;
    for (long k = 0; k < m; ++k)
        for (long a = 0; k + a < m && a <= 3 * k; ++a) count += 3 * k - a + 1;
    double approx = 6.0 * static_cast<double>(count) / (double(m) * m * m);
    CHECK(std::fabs(approx - 9.0 / 4) < 0.05 * 9.0 / 4);
}

TEST_CASE("Phi endpoints and forms agree") {
    for (const auto& s : preset_setups()) {
        INFO(s.label);
        Rational v1 = nvol::vol_v1(s);
        for (Rational lambda : {s.lambda_star(), Rational(1), Rational(2), Rational(1, 3)}) {
            CHECK(nvol::phi(s, lambda, 0) == s.Lvol);
            CHECK(nvol::phi(s, lambda, 1) == v1 / lambda.pow(s.n));
            for (int j = 0; j <= 20; j += 5) {
                auto both = nvol::phi_both(s, lambda, Rational(j, 20));
                CHECK(both.kernel_form == both.measure_form);
                CHECK(std::fabs(both.kernel_form.to_double() -
                                phi_numeric(s, lambda.to_double(), j / 20.0)) < 1e-7);
            }
        }
    }
}

TEST_CASE("Phi is convex in s") {
    for (const auto& s : preset_setups()) {
        INFO(s.label);
        for (Rational lambda : {s.lambda_star(), Rational(1), Rational(2)}) {
            std::vector<Rational> vals;
            for (int j = 0; j <= 20; ++j) vals.push_back(nvol::phi(s, lambda, Rational(j, 20)));
            for (int j = 1; j < 20; ++j) CHECK(vals[j - 1] - 2 * vals[j] + vals[j + 1] >= 0);
            CHECK(2 * vals[10] <= vals[0] + vals[20]);
            for (int j = 0; j <= 20; ++j) CHECK(nvol::phi_second(s, lambda, Rational(j, 20)) >= 0);
        }
    }
}

TEST_CASE("Phi second derivative") {
    auto t = trivial_setup(2, 2);
    CHECK(nvol::phi_second(t, Rational(1, 2), Rational(1, 3)) == 0);
    // single atom closed form n(n+1)(lambda c - 1)^2 Lvol / (lambda s c + 1 - s)^{n+2}
    Rational lam(1), s(1, 4);
    Rational expect = Rational(6) * (lam * 2 - 1).pow(2) / (lam * s * 2 + 1 - s).pow(4);
    CHECK(nvol::phi_second(t, lam, s) == expect);

    auto nc = preset_setups()[1];
    Rational h(1, 10000);
    Rational lambda = nc.lambda_star();
    Rational fd = (nvol::phi(nc, lambda, 2 * h) - 2 * nvol::phi(nc, lambda, h) + nvol::phi(nc, lambda, 0)) / (h * h);
    Rational exact = nvol::phi_second(nc, lambda, 0);
    INFO("fd " << fd.to_double() << " exact " << exact.to_double());
    CHECK((fd - exact).abs() < Rational(1, 1000) * exact.abs());
}

TEST_CASE("Phi_s at 0") {
    auto t = trivial_setup(3, Rational(5, 2));
    CHECK(nvol::phi_s_at_0(t, Rational(2, 5)) == 0);

    for (const auto& s : preset_setups()) {
        INFO(s.label);
        Rational lambda = s.lambda_star();
        Rational d = nvol::phi_s_at_0(s, lambda);
        // closed form at lambda_*: n Lvol / A1 (A1 - c1 r - (r / Lvol) int vol)
        Rational integral = nvol::pp_integrate(s.vol_curve, s.c1, std::nullopt);
        CHECK(d == Rational(s.n) * s.Lvol / s.A1 * (s.A1 - s.c1 * s.r - s.r / s.Lvol * integral));
        Rational p0 = nvol::phi(s, lambda, 0);
        Rational e3 = ((nvol::phi(s, lambda, Rational(1, 1000)) - p0) * 1000 - d).abs();
        Rational e4 = ((nvol::phi(s, lambda, Rational(1, 10000)) - p0) * 10000 - d).abs();
        Rational ratio = e4 / e3;
        CHECK(ratio >= Rational(5, 100));
        CHECK(ratio <= Rational(2, 10));
    }
    // hyperplane: Theta = 0 so v_alpha minimizes to first order
    auto hyp = nvol::pn_hyperplane(3);
    CHECK(nvol::phi_s_at_0(nvol::valpha_setup(hyp, 1), nvol::valpha_setup(hyp, 1).lambda_star()) == 0);
    // normal cone with 1/lambda < n: strictly positive
    auto nc = nvol::normal_cone_preset(3, 1, Rational(1, 2)).div;
    CHECK(nvol::phi_s_at_0(nvol::valpha_setup(nc, 1), nvol::valpha_setup(nc, 1).lambda_star()) > 0);
    auto ss = nvol::normal_cone_preset(3, 1, Rational(1, 3)).div;
    CHECK(nvol::phi_s_at_0(nvol::valpha_setup(ss, 1), nvol::valpha_setup(ss, 1).lambda_star()) >= 0);
}

TEST_CASE("v_s interpolation") {
    for (const auto& s : preset_setups()) {
        CHECK(nvol::vs_interpolation(s, 0) == s.Lvol);
        CHECK(nvol::vs_interpolation(s, 1) == nvol::vol_v1(s));
        CHECK(nvol::vs_interpolation(s, Rational(1, 2)) == nvol::phi(s, 1, Rational(1, 2)));
    }
}

TEST_CASE("uniqueness detector") {
    CHECK(nvol::uniqueness_detector(trivial_setup(2, 1)));
    CHECK(nvol::uniqueness_detector(trivial_setup(4, Rational(7, 3))));
    for (const auto& s : preset_setups()) CHECK_FALSE(nvol::uniqueness_detector(s));
}

TEST_CASE("Theta") {
    for (int n = 2; n <= 5; ++n) {
        auto h = nvol::pn_hyperplane(n);
        // oracle: int_0^n (n-t)^{n-1} dt = n^n / n
        double integral = oracle::quad([&](double t) { return std::pow(n - t, n - 1); }, 0, n, 1e-12);
        CHECK(std::fabs(integral - std::pow(n, n - 1)) < 1e-8);
        CHECK(nvol::theta(h) == 0);
    }
    struct T {
        int n;
        long p;
        Rational lambda;
    };
    for (auto [n, p, lambda] : {T{2, 1, Rational(1, 2)}, T{3, 1, Rational(1, 3)}, T{3, 2, Rational(1, 2)},
                                T{4, 3, Rational(1, 4)}, T{4, 1, Rational(2, 3)}, T{5, 2, Rational(3, 5)}}) {
        auto nc = nvol::normal_cone_preset(n, p, lambda);
        CHECK(nvol::theta(nc.div) == (Rational(n) - Rational(1) / lambda) / n);
    }
    DivisorialData empty = nvol::pn_hyperplane(3);
    empty.vol_curve_F = nvol::PiecewisePolynomial::step(0, 9, 0);
    empty.A_F = Rational(5, 2);
    CHECK(nvol::theta(empty) == Rational(5, 2));
}

TEST_CASE("Theta is invariant under rescaling") {
    std::vector<DivisorialData> divs = {nvol::pn_hyperplane(2), nvol::pn_hyperplane(3),
                                        nvol::normal_cone_preset(3, 2, Rational(1, 2)).div,
                                        nvol::normal_cone_preset(4, 3, Rational(1, 4)).div};
    for (const auto& d : divs)
        for (long sigma : {1, 2, 3, 5}) {
            auto rep = nvol::theta_rescale_check(d, sigma);
            CHECK(rep.equal);
            CHECK(rep.theta == rep.theta_rescaled);
        }
    auto d = nvol::pn_hyperplane(3);
    auto same = nvol::rescale(d, 1);
    CHECK(same.vol_curve_F == d.vol_curve_F);
    CHECK(same.r == d.r);
}

TEST_CASE("v_alpha family") {
    auto h = nvol::pn_hyperplane(3);
    auto zero = nvol::valpha(h, 0);
    CHECK(zero.vol == 9);
    CHECK(zero.nvol == 9);
    // nvol(v_alpha) >= nvol(v_0) with vanishing first derivative
    CHECK(nvol::valpha_nvol_derivative(h) == 0);
    for (Rational a : {Rational(1, 10), Rational(1, 2), Rational(1), Rational(3)}) CHECK(nvol::valpha(h, a).nvol >= 9);
    // oracle for vol(v_alpha) by quadrature
    for (Rational a : {Rational(1, 3), Rational(2)}) {
        double ad = a.to_double();
        double integ = oracle::quad([&](double t) { return std::pow(3 - t, 2) * ad / std::pow(1 + ad * t, 4); }, 0, 3,
                                    1e-12);
        CHECK(std::fabs(nvol::valpha(h, a).vol.to_double() - (9 - 3 * integ)) < 1e-9);
    }
    for (int n = 2; n <= 5; ++n) {
        auto nc = nvol::normal_cone_preset(n, 2, Rational(1, n > 2 ? 2 : 3));
        CHECK(nvol::valpha_nvol_derivative(nc.div) == Rational(n) * nc.div.KVn1() * nvol::theta(nc.div));
    }
}

TEST_CASE("w_beta family") {
    struct T {
        int n;
        long p;
        Rational lambda;
    };
    for (auto [n, p, lambda] :
         {T{2, 1, Rational(1, 2)}, T{3, 1, Rational(1, 3)}, T{3, 2, Rational(1, 2)}, T{4, 3, Rational(1, 4)}}) {
        auto nc = nvol::normal_cone_preset(n, p, lambda);
        Rational closed_vol = Rational(p) * (Rational(n) - Rational(1) / lambda) * nc.div.Lvol;
        Rational closed_nvol = Rational(p).pow(1 - n) * (Rational(n) - Rational(1) / lambda) * nc.div.Lvol;
        CHECK(nc.derivative_vol_closed == closed_vol);
        CHECK(nc.derivative_nvol_closed == closed_nvol);
        CHECK(nvol::wbeta_vol_derivative(nc.div) == closed_vol);
        CHECK(nvol::wbeta_nvol_derivative(nc.div) == closed_nvol);
        CHECK(nvol::wbeta_nvol_derivative(nc.div) == nc.div.q * nvol::valpha_nvol_derivative(nc.div));
        // finite differences of the exact volume
        Rational prev;
        for (int e = 3; e <= 5; ++e) {
            Rational h = Rational(1) / Rational(10).pow(e);
            Rational fd = (nvol::wbeta(nc.div, h).vol - nc.div.Lvol) / h;
            Rational err = (fd - closed_vol).abs();
            if (e > 3) CHECK(err <= prev);
            prev = err;
        }
        INFO("err " << prev.to_double() << " closed " << closed_vol.to_double());
        CHECK(prev < Rational(1, 1000) * nc.div.Lvol);
        // log discrepancy of w_beta is constant
        CHECK(nvol::wbeta_logdisc(nc.div.r, Rational(1, 2 * p), 1, 1) == Rational(1, p));
    }
    CHECK(nvol::wbeta_logdisc(Rational(1, 2), Rational(1, 10), 2, 3) == Rational(1, 2));
    CHECK(nvol::wbeta_logdisc(Rational(4), 0, 7, 5) == 4);
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        Rational r = oracle::random_rational(rng, 1, 50, 12) / 10;
        Rational q = oracle::random_rational(rng, 1, 50, 12) / 10;
        Rational A = oracle::random_rational(rng, 1, 50, 12) / 10;
        Rational a1 = -q * A / r;
        Rational beta = oracle::random_rational(rng, 0, 99, 20) / 100 / (-a1);
        CHECK(nvol::wbeta_logdisc(r, beta, q, A) == r);
    }
    // w_beta = kappa v_alpha, so nvol(w_beta) = nvol(v_alpha)
    auto nc = nvol::normal_cone_preset(3, 2, Rational(1, 2)).div;
    Rational beta(1, 10);
    Rational kappa = 1 + beta * nc.a1();
    CHECK(nvol::wbeta(nc, beta).nvol == nvol::valpha(nc, beta * nc.q / kappa).nvol);
}

TEST_CASE("CM weight from DH moments") {
    auto h = nvol::pn_hyperplane(3);
    auto dh = nvol::neg_differential(nvol::test_configuration_curve(h));
    CHECK(dh.total_mass() == h.Lvol);
    CHECK(nvol::cm_from_dh(dh, h.n, h.r, h.KVn1()) == 0);
    for (auto [n, p, lambda] : {std::tuple{3, 2L, Rational(1, 2)}, std::tuple{4, 1L, Rational(1, 2)}}) {
        auto nc = nvol::normal_cone_preset(n, p, lambda);
        auto d = nvol::neg_differential(nvol::test_configuration_curve(nc.div));
        Rational cm = nvol::cm_from_dh(d, n, nc.div.r, nc.div.KVn1());
        CHECK(cm == nvol::theta(nc.div));
        CHECK(cm * n * nc.div.KVn1() == nc.derivative_nvol_closed);
    }
    // single atom at c: -r^n c Lvol / KVn1
    nvol::Measure1D atom(nvol::PiecewisePolynomial::constant(0), {{Rational(-2), Rational(3)}});
    CHECK(nvol::cm_from_dh(atom, 2, 1, 3) == 2);
}

TEST_CASE("d_infinity") {
    CHECK(nvol::d_infinity(nvol::trivial_curve(1, 1), 2, 1, 1, 1, 1) == 1);
    auto h = nvol::pn_hyperplane(3);
    CHECK(nvol::d_infinity(h.vol_curve_F, 3, 1, 9, 3, 0) == -1);
    auto nc = nvol::normal_cone_preset(2, 1, Rational(1, 2));
    CHECK(nvol::d_infinity(nc.div.vol_curve_F, 2, nc.div.r, nc.div.KVn1(), 2, 0) == 0);
    CHECK_THROWS_AS(nvol::d_infinity(h.vol_curve_F, 3, 1, 9, 2, 0), nvol::ValidationError);
    CHECK_THROWS_AS(nvol::d_infinity(h.vol_curve_F, 3, 1, 9, 3, 1), nvol::ValidationError);
}

TEST_CASE("preset validation") {
    auto warn = nvol::normal_cone_preset(2, 1, Rational(1, 3));
    CHECK_FALSE(warn.warning.empty());
    CHECK(nvol::normal_cone_preset(2, 1, Rational(1, 2)).warning.empty());
    CHECK_THROWS_AS(nvol::normal_cone_preset(2, 1, Rational(1)), nvol::ValidationError);
    CHECK_THROWS_AS(nvol::normal_cone_preset(2, 0, Rational(1, 2)), nvol::ValidationError);
    auto d = nvol::pn_hyperplane(2);
    CHECK_THROWS_AS(nvol::wbeta_setup(d, 2), nvol::ValidationError);
    auto s = nvol::valpha_setup(d, 1);
    s.A1 = Rational(1, 2);
    CHECK_THROWS_AS(s.validate(), nvol::ValidationError);
}
