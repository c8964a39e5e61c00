#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nvol/errors.hpp"
#include "nvol/presets.hpp"
#include "nvol/verify.hpp"

using nvol::Rational;

TEST_CASE("preset strings") {
    auto s = nvol::parse_preset("normal-cone:n=3,p=2,lambda=1/2");
    CHECK(s.name == "normal-cone");
    CHECK(s.params.at("lambda") == "1/2");
    CHECK(s.positional.empty());
    auto m = nvol::parse_preset("monomial:2,3");
    CHECK(m.positional == std::vector<std::string>{"2", "3"});
    auto k = nvol::parse_preset("skp:zariski-primes:5");
    CHECK(k.positional == std::vector<std::string>{"zariski-primes", "5"});
    CHECK(nvol::parse_preset("trivial").params.empty());
    CHECK_THROWS_AS(nvol::parse_preset("normal-cone:n=3,p"), nvol::ValidationError);
    CHECK_THROWS_AS(nvol::parse_preset("normal-cone:n=3,n=4"), nvol::ValidationError);
    CHECK_THROWS_AS(nvol::parse_preset(""), nvol::ValidationError);
}

TEST_CASE("preset resolution") {
    CHECK_THROWS_AS(nvol::resolve_preset("normal-cone:n=3,p=2,lambda=1/2,foo=1"), nvol::ValidationError);
    CHECK_THROWS_AS(nvol::resolve_preset("normal-cone:n=3,p=2"), nvol::ValidationError);
    CHECK_THROWS_AS(nvol::resolve_preset("pn-hyperplane:n=3,alpha=1,beta=1/10"), nvol::ValidationError);
    CHECK_THROWS_AS(nvol::resolve_preset("nope:n=2"), nvol::ValidationError);
    CHECK_THROWS_AS(nvol::resolve_preset("normal-cone:n=x,p=1,lambda=1/2"), nvol::ValidationError);

    auto nc = nvol::resolve_preset("normal-cone:n=3,p=2,lambda=2/3");
    REQUIRE(nc.setup);
    CHECK(nc.setup->c1 == 1);
    CHECK(nc.setup->A1 == Rational(3, 2));
    CHECK(nc.source);
    CHECK(nc.setup_source);
    CHECK_FALSE(nvol::resolve_preset("normal-cone:n=3,p=2,lambda=2/5").source);
    CHECK_FALSE(nvol::resolve_preset("normal-cone:n=3,p=1,lambda=1/2,KV=8").source);

    auto w = nvol::resolve_preset("normal-cone:n=2,p=1,lambda=1/2,beta=1/4");
    CHECK(w.setup->c1 == Rational(3, 4));
    CHECK(w.setup->A1 == 1);

    auto h = nvol::resolve_preset("pn-hyperplane:n=3");
    CHECK(h.curve.Lvol == 9);
    CHECK(h.source->dim_R(2) == 28);  // sections of O(6) on P^2
}

TEST_CASE("section counts match the closed-form curves") {
    // the level-m sample of the tabulated filtration approaches the closed-form curve
    for (const char* p : {"pn-hyperplane:n=3", "normal-cone:n=3,p=1,lambda=2/3", "normal-cone:n=2,p=2,lambda=1/2,alpha=2",
                          "normal-cone:n=2,p=1,lambda=1/2,beta=1/3"}) {
        auto r = nvol::resolve_preset(p);
        INFO(p);
        std::vector<Rational> grid{Rational(1, 2), 1, Rational(3, 2)};
        auto tab = nvol::vol_curve(*r.source, grid);
        for (size_t i = 0; i < grid.size(); ++i) {
            Rational exact = r.curve.vol_curve(grid[i]);
            CHECK((tab.value[i] - exact).abs() <= Rational(1, 10) * r.curve.Lvol);
        }
        // and the filtration of v_1 against its curve
        std::vector<Rational> g2{r.setup->c1, r.setup->c1 + Rational(1, 3), r.setup->c1 + 1};
        auto tab2 = nvol::vol_curve(*r.setup_source, g2);
        for (size_t i = 0; i < g2.size(); ++i)
            CHECK((tab2.value[i] - r.setup->vol_curve(g2[i])).abs() <= Rational(1, 10) * r.curve.Lvol);
    }
}

TEST_CASE("flag sources") {
    auto m = nvol::resolve_flag_source("monomial:2,3");
    CHECK_FALSE(m.is_skp());
    CHECK(m.edge_values() == std::pair<Rational, Rational>{2, 3});
    auto s = nvol::resolve_flag_source("skp:zariski-primes:4");
    CHECK(s.is_skp());
    CHECK(s.skp().depth() == 4);
    CHECK_THROWS_AS(nvol::resolve_flag_source("monomial:2"), nvol::ValidationError);
    CHECK_THROWS_AS(nvol::resolve_flag_source("skp:zariski-primes:13"), nvol::ValidationError);
    CHECK_THROWS_AS(nvol::resolve_flag_source("monomial:a=1"), nvol::ValidationError);
}

TEST_CASE("verify suites") {
    CHECK(nvol::suite_criteria("all").size() == 11);
    CHECK(nvol::suite_criteria("paper-table") == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(nvol::suite_criteria("bogus"), nvol::ValidationError);
    auto r = nvol::run_criterion(1);
    CHECK(r.pass);
    CHECK(r.checks.size() == 11);
    auto rep = nvol::to_report({r});
    CHECK(rep["pass"].get<bool>());
}
