#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nvol/errors.hpp"
#include "nvol/json.hpp"
#include "nvol/piecewise.hpp"
#include "oracles.hpp"

using nvol::Atom;
using nvol::Kernel;
using nvol::Measure1D;
using nvol::PiecewisePolynomial;
using nvol::Polynomial;
using nvol::Rational;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

PiecewisePolynomial three_minus_t_squared() {
    return PiecewisePolynomial::supported(0, 3, Polynomial::linear(3, -1).pow(2));
}

// (3-t)^2 on [0,3], head 9
PiecewisePolynomial hyperplane_curve() { return {{0, 3}, {Polynomial::linear(3, -1).pow(2)}, 9, 0}; }

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Q("-0.05") == Rational(-1, 20));
    CHECK(Q("0.58643") == Rational(58643, 100000));
    CHECK(Q("0.09") == Rational(9, 100));
    CHECK(Q("08/09") == Rational(8, 9));
    CHECK(Q("-007") == -7);
    CHECK(Q("22/7").to_decimal(4) == "3.143");
    CHECK(Rational(19, 25).to_fixed(5, true) == "0.76");
    CHECK(Rational(10, 9).to_fixed(5) == "1.11111");
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK_THROWS_AS(Rational(1) / Rational(0), nvol::ValidationError);
    CHECK_THROWS_AS(Q("1/0"), nvol::ValidationError);
    CHECK_THROWS_AS(Q("abc"), nvol::ValidationError);
}

TEST_CASE("rational decimal rendering rounds correctly") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational q = oracle::random_rational(rng, -1000, 1000, 997);
        std::string s = q.to_decimal(6);
        double back = std::stod(s);
        CHECK(std::fabs(back - q.to_double()) <= 5.0001e-6 * std::max(1.0, std::fabs(q.to_double())));
    }
}

TEST_CASE("polynomial arithmetic") {
    Polynomial p({1, 2, 3});
    CHECK(p(2) == 17);
    CHECK(p.derivative() == Polynomial({2, 6}));
    CHECK(p.antiderivative().derivative() == p);
    CHECK(p.compose_affine(2, 1)(3) == p(7));
    auto [q, r] = Polynomial::divmod(p, Polynomial::linear(-1, 1));
    CHECK(q * Polynomial::linear(-1, 1) + r == p);
    CHECK(r.degree() <= 0);
    CHECK(Polynomial::gcd(Polynomial::linear(-1, 1) * Polynomial::linear(2, 1),
                          Polynomial::linear(-1, 1) * Polynomial::linear(5, 1)) == Polynomial::linear(-1, 1));
}

TEST_CASE("polynomial nonnegativity is exact") {
    Polynomial sq = Polynomial::linear(-1, 1).pow(2);
    CHECK(sq.nonnegative_on(-5, 5));
    CHECK_FALSE((sq - Polynomial::constant(Rational(1, 1000000))).nonnegative_on(0, 2));
    CHECK((sq - Polynomial::constant(Rational(1, 1000000))).nonnegative_on(2, 3));
    Polynomial cube = Polynomial::linear(-1, 1).pow(3);
    CHECK(cube.nonnegative_on(1, 2));
    CHECK_FALSE(cube.nonnegative_on(Rational(999, 1000), 2));
    CHECK(Polynomial::linear(0, 1).count_roots(-1, 1) == 1);
}

TEST_CASE("piecewise evaluation conventions") {
    auto step = PiecewisePolynomial::step(2, 1, 0);
    CHECK(step(2) == 1);
    CHECK(step(Rational(201, 100)) == 0);
    PiecewisePolynomial f({0, 1, 2}, {Polynomial::constant(3), Polynomial::constant(2)}, 4, 0);
    CHECK(f(0) == 4);
    CHECK(f(1) == 2);
    CHECK(f(2) == 2);
    CHECK(f.left_limit(1) == 3);
    CHECK(f.right_limit(2) == 0);
    PiecewisePolynomial merged({0, 1, 2}, {Polynomial::constant(3), Polynomial::constant(3)}, 4, 0);
    CHECK(merged.breakpoints().size() == 2);
    CHECK_THROWS_AS(PiecewisePolynomial({1, 0}, {Polynomial()}, 0, 0), nvol::ValidationError);
}

TEST_CASE("pp_integrate") {
    CHECK(pp_integrate(PiecewisePolynomial::supported(0, 2, Polynomial::constant(1)), Rational(0), Rational(2)) == 2);
    CHECK(pp_integrate(hyperplane_curve(), Rational(0), std::nullopt) == 9);
    CHECK(pp_integrate(three_minus_t_squared(), std::nullopt, std::nullopt) == 9);
    CHECK(pp_integrate(hyperplane_curve(), Rational(-1), Rational(1)) == 9 + Rational(19, 3));
    CHECK_THROWS_AS(pp_integrate(hyperplane_curve(), std::nullopt, Rational(0)), nvol::ValidationError);
    CHECK_THROWS_AS(pp_integrate(PiecewisePolynomial::constant(1), Rational(0), std::nullopt), nvol::ValidationError);
    // normal-cone curve n=2, p=1, lambda=1/2: L (1 - s/2) on [0, 2]
    Rational L = 2;
    PiecewisePolynomial nc({0, 2}, {Polynomial::linear(1, Rational(-1, 2)) * L}, L, 0);
    CHECK(pp_integrate(nc, Rational(0), std::nullopt) == L);
}

TEST_CASE("pp_integrate_kernel small cases") {
    auto box = PiecewisePolynomial::supported(0, 1, Polynomial::constant(1));
    CHECK(pp_integrate_kernel(box, 1, 0, 1) == 1);
    auto boxv = PiecewisePolynomial::supported(1, 4, Polynomial::constant(5));
    CHECK(pp_integrate_kernel(boxv, 1, 0, 3) == 15);
    // 1/(1+t)^2 on [0, inf)
    auto tail1 = PiecewisePolynomial::step(0, 0, 1);
    CHECK(pp_integrate_kernel(tail1, 1, 1, 1, Rational(0), std::nullopt) == 1);
    // degree >= n refused
    CHECK_THROWS_AS(pp_integrate_kernel(three_minus_t_squared(), 1, 1, 2), nvol::ValidationError);
    // kernel nonpositive on support
    CHECK_THROWS_AS(pp_integrate_kernel(box, -1, 1, 2), nvol::ValidationError);
}

TEST_CASE("pp_integrate_kernel normal-cone curve matches quadrature") {
    Rational L = 2;
    PiecewisePolynomial nc = PiecewisePolynomial::supported(0, 2, Polynomial::linear(1, Rational(-1, 2)) * L);
    Rational exact = pp_integrate_kernel(nc, Rational(1, 2), Rational(1, 2), 2);
    double num = oracle::kernel_integral(nc, 0.5, 0.5, 2);
    CHECK(std::fabs(exact.to_double() - num) <= 1e-9 * std::fabs(num));
}

TEST_CASE("pp_integrate_kernel agrees with adaptive quadrature on random inputs") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> ndist(1, 5), pdist(1, 4), cdist(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        int n = ndist(rng);
        int k = pdist(rng);
        std::vector<Rational> br{oracle::random_rational(rng, 0, 2)};
        std::vector<Polynomial> pieces;
        for (int i = 0; i < k; ++i) {
            br.push_back(br.back() + oracle::random_rational(rng, 1, 2));
            std::vector<Rational> c;
            for (int j = 0; j < n; ++j) c.push_back(Rational(cdist(rng), 1 + j));
            pieces.emplace_back(c);
        }
        PiecewisePolynomial f(br, pieces, 0, 0);
        Rational a = oracle::random_rational(rng, 1, 3), b = oracle::random_rational(rng, 0, 2);
        Rational exact = pp_integrate_kernel(f, a, b, n);
        double num = oracle::kernel_integral(f, a.to_double(), b.to_double(), n);
        double scale = std::max(std::fabs(num), 1e-12);
        INFO("trial " << trial << " n=" << n);
        CHECK(std::fabs(exact.to_double() - num) <= 1e-9 * scale);
    }
}

TEST_CASE("kernel with b = 0 reduces to plain integration") {
    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        auto f = oracle::random_vol_curve(rng, 3);
        auto g = PiecewisePolynomial(f.breakpoints(), f.pieces(), 0, 0);
        CHECK(pp_integrate_kernel(g, 1, 0, 3) == pp_integrate(g, std::nullopt, std::nullopt));
    }
}

TEST_CASE("neg_differential") {
    auto dirac = neg_differential(PiecewisePolynomial::step(Rational(3, 2), 1, 0));
    REQUIRE(dirac.atoms().size() == 1);
    CHECK(dirac.atoms()[0] == Atom{Rational(3, 2), 1});
    CHECK(pp_integrate(dirac.density(), std::nullopt, std::nullopt) == 0);

    auto mu = neg_differential(hyperplane_curve());
    CHECK(mu.atoms().empty());
    CHECK(mu.density().pieces().at(0) == Polynomial::linear(6, -2));
    CHECK(mu.total_mass() == 9);

    PiecewisePolynomial up({0, 1}, {Polynomial::linear(0, 1)}, 0, 0);
    CHECK_THROWS_AS(neg_differential(up), nvol::ValidationError);
    CHECK_THROWS_AS(neg_differential(PiecewisePolynomial::step(0, 0, 1)), nvol::ValidationError);
}

TEST_CASE("neg_differential conserves mass on random curves") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto f = oracle::random_vol_curve(rng, 1 + i % 4);
        REQUIRE(f.is_nonincreasing());
        CHECK(neg_differential(f).total_mass() == f.head());
    }
}

TEST_CASE("measure_moment") {
    Measure1D atom(PiecewisePolynomial(), {{Rational(5, 2), 1}});
    CHECK(measure_moment(atom, 1) == Rational(5, 2));
    CHECK(measure_moment(atom, 0, Kernel{1, 0, 4}) == 1);
    auto mu = neg_differential(hyperplane_curve());
    CHECK(measure_moment(mu, 1) == 9);
    CHECK(measure_moment(mu, 2) == Rational(27, 2));
    CHECK_THROWS_AS(measure_moment(atom, 0, Kernel{-5, 2, 1}), nvol::ValidationError);
}

TEST_CASE("integration by parts between the two volume formulas") {
    std::mt19937 rng(99);
    for (int i = 0; i < 50; ++i) {
        int n = 1 + i % 4;
        auto f = oracle::random_vol_curve(rng, n);
        Rational c1 = f.breakpoints().front();
        Rational lhs = f.head() / c1.pow(n) - Rational(n) * pp_integrate_kernel(f, 0, 1, n, c1, std::nullopt);
        Rational rhs = measure_moment(neg_differential(f), 0, Kernel{0, 1, n});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("json round trip") {
    auto f = hyperplane_curve();
    nlohmann::json j = f;
    CHECK(j["head"] == "9");
    CHECK(j["pieces"][0] == nlohmann::json::array({"9", "-6", "1"}));
    CHECK(j.get<PiecewisePolynomial>() == f);
    CHECK(nlohmann::json(Rational(-3, 4)) == "-3/4");
}
