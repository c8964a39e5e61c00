#include "nvol/verify.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "nvol/cone.hpp"
#include "nvol/errors.hpp"
#include "nvol/filtration.hpp"
#include "nvol/json.hpp"
#include "nvol/monomial.hpp"
#include "nvol/okounkov.hpp"
#include "nvol/presets.hpp"
#include "nvol/skp.hpp"

namespace nvol {

namespace {

using nlohmann::json;

class Checker {
public:
    explicit Checker(CriterionResult& r) : r_(r) {}
    void equal(const std::string& label, const Rational& value, const Rational& expected) {
        add(label, value == expected, {{"value", value}, {"expected", expected}});
    }
    void that(const std::string& label, bool ok, json extra = json::object()) { add(label, ok, std::move(extra)); }

private:
    void add(const std::string& label, bool ok, json extra) {
        extra["label"] = label;
        extra["pass"] = ok;
        r_.checks.push_back(std::move(extra));
    }
    CriterionResult& r_;
};

struct Tuple {
    int n;
    long p;
    Rational lambda;
};

const std::vector<Tuple>& derivative_tuples() {
    static const std::vector<Tuple> t = {
        {2, 1, Rational(1, 2)}, {3, 1, Rational(1, 3)}, {3, 2, Rational(1, 2)}, {4, 3, Rational(1, 4)}};
    return t;
}

Rational random_rational(std::mt19937& rng, long lo, long hi, long den_max) {
    std::uniform_int_distribution<long> den(1, den_max);
    long d = den(rng);
    std::uniform_int_distribution<long> num(lo * d, hi * d);
    return Rational(num(rng), d);
}

void colength_table(Checker& c) {
    const std::vector<long> counts = {5, 38, 810, 37923, 4553318};
    const std::vector<std::string> ratios = {"1.11111", "0.76000", "0.62284", "0.59179", "0.58693"};
    auto start = std::chrono::steady_clock::now();
    for (int k = 1; k <= 5; ++k) {
        SKPData data = skp_preset("zariski-primes", k);
        Rational m = Rational(data.c(k)) * data.beta(k);
        Integer count = skp_codim(data, m);
        Rational ratio = Rational(2) * Rational(count) / (m * m);
        c.equal("count at m = c_" + std::to_string(k) + " beta_" + std::to_string(k), Rational(count), counts[k - 1]);
        c.that("ratio k = " + std::to_string(k), ratio.to_fixed(5) == ratios[k - 1],
               {{"value", ratio.to_fixed(5)}, {"expected", ratios[k - 1]}, {"exact", ratio}});
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.that("table runtime < 1 s", secs < 1.0);
}

void volume_limit(Checker& c) {
    SKPData data = skp_preset("zariski-primes", 6);
    bool decreasing = true;
    for (int k = 2; k <= 6; ++k) decreasing = decreasing && skp_vol_approx(data, k) < skp_vol_approx(data, k - 1);
    c.that("vol approximants strictly decreasing", decreasing);
    Rational v6 = skp_vol_approx(data, 6);
    c.that("|vol_6 - 0.58643| < 1e-4", (v6 - Rational::parse("0.58643")).abs() < Rational(1, 10000),
           {{"value", v6}, {"decimal", v6.to_decimal(8)}});
    bool increasing = true;
    for (int k = 1; k <= 6; ++k) increasing = increasing && skp_logdisc(data, k) > skp_logdisc(data, k - 1);
    c.that("log discrepancies strictly increasing", increasing);
    c.equal("A_5", skp_logdisc(data, 5),
            Rational(2) + Rational(1, 2) + Rational(1, 3) + Rational(1, 5) + Rational(1, 7) + Rational(1, 11));
}

void basis_dims(Checker& c) {
    SKPData data = skp_preset("zariski-primes", 5);
    const std::vector<long> expect = {0, 0, 0, 0, 0, 0, 1, 3, 5, 8};
    bool ok = true;
    json got = json::array();
    for (long k = 0; k < 10; ++k) {
        long d = skp_filtration_dim(data, 10, k);
        got.push_back(d);
        ok = ok && d == expect[static_cast<size_t>(k)];
    }
    c.that("dims of F^10 R_k, k = 0..9", ok, {{"value", got}});
    bool tail = true;
    for (long k = 10; k <= 40; ++k) tail = tail && skp_filtration_dim(data, 10, k) == k + 1;
    c.that("dims of F^10 R_k = k + 1 for k = 10..40", tail);
    auto codim_sum = [&](const Rational& m) {
        Integer s = 0;
        for (long k = 0; k <= to_int64(m.ceil()) + 1; ++k) s += (k + 1) - skp_filtration_dim(data, m, k);
        return Rational(s);
    };
    c.equal("sum of codimensions at m = 10", codim_sum(10), 38);
    bool grid = true;
    json bad = json::array();
    for (long j = 2; j <= 24; ++j) {
        Rational m(j, 2);
        Rational lhs = codim_sum(m), rhs = Rational(skp_codim(data, m));
        if (lhs != rhs) {
            grid = false;
            bad.push_back({{"m", m}, {"sum", lhs}, {"codim", rhs}});
        }
    }
    c.that("codimension identity on m = 1, 3/2, ..., 12", grid, {{"mismatches", bad}});
}

void monomial_identities(Checker& c) {
    for (Rational g : {Rational(1), Rational(2, 3), Rational(7, 2)})
        c.equal("nvol(g, g), g = " + g.str(), mono_nvol(MonomialValuation({g, g})), 4);
    c.equal("nvol(2, 3)", mono_nvol(MonomialValuation({2, 3})), Rational(25, 6));
    std::mt19937 rng(20240601);
    bool above = true;
    for (int i = 0; i < 100;) {
        Rational a = random_rational(rng, 0, 6, 12), b = random_rational(rng, 0, 6, 12);
        if (a.sign() <= 0 || b.sign() <= 0 || a == b) continue;
        ++i;
        above = above && mono_nvol(MonomialValuation({a, b})) > 4;
    }
    c.that("nvol > 4 for 100 random unequal pairs", above);
    bool counts = true;
    json rows = json::array();
    for (int i = 0; i < 20;) {
        Rational a = random_rational(rng, 1, 3, 6), b = random_rational(rng, 1, 3, 6);
        if (a.sign() <= 0 || b.sign() <= 0) continue;
        ++i;
        MonomialValuation v({a, b});
        Rational m = Rational(500) * max(a, b);
        Rational ratio = Rational(2) * Rational(mono_count_oracle(v, m)) / (m * m);
        Rational target = Rational(1) / (a * b);
        bool ok = (ratio - target).abs() < Rational(2, 100) * target;
        counts = counts && ok;
        rows.push_back({{"gamma", {a, b}}, {"ratio", ratio.to_decimal(8)}, {"target", target}});
    }
    c.that("count ratios within 2% at m = 500 max(gamma)", counts, {{"pairs", rows}});
    auto s2 = mono_min_scan(2, 40);
    c.that("grid minimizer n = 2 at equal weights", s2.at_center && s2.value == 4, {{"value", s2.value}});
    auto s3 = mono_min_scan(3, 30);
    c.that("grid minimizer n = 3 at equal weights", s3.at_center && s3.value == 27, {{"value", s3.value}});
}

std::vector<ConeSetup> phi_presets() {
    std::vector<ConeSetup> out;
    for (const char* p :
         {"normal-cone:n=2,p=1,lambda=1/2", "normal-cone:n=3,p=2,lambda=1/2", "pn-hyperplane:n=2", "pn-hyperplane:n=3"}) {
        auto r = resolve_preset(p);
        r.setup->label = p;
        out.push_back(*r.setup);
    }
    return out;
}

void phi_functional(Checker& c) {
    for (const auto& s : phi_presets()) {
        Rational v1 = vol_v1(s);
        bool ends = true, dual = true, second_diff = true, second = true;
        for (Rational lambda : {s.lambda_star(), Rational(1), Rational(2)}) {
            std::vector<Rational> vals;
            for (int j = 0; j <= 20; ++j) {
                PhiValue pv = phi_both(s, lambda, Rational(j, 20));
                dual = dual && pv.kernel_form == pv.measure_form;
                vals.push_back(pv.kernel_form);
                second = second && phi_second(s, lambda, Rational(j, 20)).sign() >= 0;
            }
            ends = ends && vals.front() == s.Lvol && vals.back() == v1 / lambda.pow(s.n);
            for (int j = 1; j < 20; ++j) second_diff = second_diff && (vals[j - 1] - 2 * vals[j] + vals[j + 1]).sign() >= 0;
        }
        c.that(s.label + ": Phi(l,0) = L^{n-1}, Phi(l,1) = l^{-n} vol(v_1)", ends);
        c.that(s.label + ": kernel and measure forms agree", dual);
        c.that(s.label + ": second differences >= 0 on s = j/20", second_diff);
        c.that(s.label + ": Phi'' >= 0 on s = j/20", second);
        Rational lambda = s.lambda_star();
        Rational d = phi_s_at_0(s, lambda);
        Rational p0 = phi(s, lambda, 0);
        Rational e1 = ((phi(s, lambda, Rational(1, 1000)) - p0) * 1000 - d).abs();
        Rational e2 = ((phi(s, lambda, Rational(1, 10000)) - p0) * 10000 - d).abs();
        bool ok = !e1.is_zero() && e2 / e1 >= Rational(5, 100) && e2 / e1 <= Rational(2, 10);
        c.that(s.label + ": forward-difference error ratio in [0.05, 0.2]", ok,
               {{"phi_s", d}, {"ratio", e1.is_zero() ? std::string("undefined") : (e2 / e1).to_decimal(6)}});
    }
}

void normal_cone_derivatives(Checker& c) {
    for (const auto& [n, p, lambda] : derivative_tuples()) {
        NormalCone nc = normal_cone_preset(n, p, lambda);
        std::string tag = "(n,p,lambda) = (" + std::to_string(n) + "," + std::to_string(p) + "," + lambda.str() + ")";
        Rational factor = Rational(n) - Rational(1) / lambda;
        c.equal(tag + " d vol(w_beta)/d beta", wbeta_vol_derivative(nc.div), Rational(p) * factor * nc.div.Lvol);
        c.equal(tag + " d nvol(w_beta)/d beta", wbeta_nvol_derivative(nc.div),
                Rational(p).pow(1 - n) * factor * nc.div.Lvol);
    }
}

void theta_invariant(Checker& c) {
    for (int n = 2; n <= 5; ++n) {
        DivisorialData h = pn_hyperplane(n);
        // oracle: antiderivative of (n - t)^{n-1}
        Polynomial prim = Polynomial::linear(n, -1).pow(n - 1).antiderivative();
        Rational integral = prim(Rational(n)) - prim(Rational(0));
        c.equal("int_0^n (n-t)^{n-1} = n^{n-1}, n = " + std::to_string(n), integral, Rational(n).pow(n - 1));
        c.equal("Theta(hyperplane in P^" + std::to_string(n - 1) + ")", theta(h), 0);
    }
    std::vector<Tuple> family = derivative_tuples();
    family.push_back({4, 2, Rational(2, 3)});
    family.push_back({5, 1, Rational(3, 5)});
    for (const auto& [n, p, lambda] : family) {
        NormalCone nc = normal_cone_preset(n, p, lambda);
        std::string tag = "(" + std::to_string(n) + "," + std::to_string(p) + "," + lambda.str() + ")";
        Rational closed = (Rational(n) - Rational(1) / lambda) / n;
        c.equal("Theta normal cone " + tag, theta(nc.div), closed);
        // the alpha-derivative of nvol(v_alpha) equals n (-K_V)^{n-1} Theta
        c.equal("d nvol(v_alpha)/d alpha = n (-K)^{n-1} Theta " + tag, valpha_nvol_derivative(nc.div),
                Rational(n) * nc.div.KVn1() * closed);
    }
    std::vector<DivisorialData> divs = {pn_hyperplane(2), pn_hyperplane(3), normal_cone_preset(3, 2, Rational(1, 2)).div,
                                        normal_cone_preset(4, 3, Rational(1, 4)).div};
    for (const auto& d : divs)
        for (long sigma : {1, 2, 3, 5}) {
            RescaleReport rep = theta_rescale_check(d, sigma);
            c.that(d.label + ", sigma = " + std::to_string(sigma), rep.equal, {{"detail", rep.detail}});
        }
}

void logdisc_constancy(Checker& c) {
    std::mt19937 rng(77);
    bool ok = true;
    json bad = json::array();
    for (int i = 0; i < 100; ++i) {
        Rational r = random_rational(rng, 1, 40, 12) / 10, q = random_rational(rng, 1, 40, 12) / 10,
                 A = random_rational(rng, 1, 40, 12) / 10;
        Rational a1 = -q * A / r;
        Rational beta = random_rational(rng, 0, 99, 16) / 100 / (-a1);  // 1 + beta a1 > 0
        Rational got = wbeta_logdisc(r, beta, q, A);
        if (got != r) {
            ok = false;
            bad.push_back({{"r", r}, {"beta", beta}, {"q", q}, {"A_F", A}, {"value", got}});
        }
    }
    c.that("A_X(w_beta) = r on 100 random tuples", ok, {{"mismatches", bad}});
    bool mono = true;
    std::uniform_int_distribution<long> len(1, 6), wt(-5, 5);
    for (int i = 0; i < 100; ++i) {
        std::vector<long> l(static_cast<size_t>(len(rng)));
        for (auto& x : l) x = wt(rng);
        long spread = 1;
        for (long x : l) spread = std::max(spread, std::abs(x));
        Rational beta = random_rational(rng, 0, 9, 10) / (20 * spread);
        mono = mono && mono_wt_logdisc(l, beta) == static_cast<long>(l.size());
    }
    c.that("A(wt_beta) = n on 100 random integer weight tuples", mono);
}

void summation_lemma(Checker& c) {
    ResolvedPreset nc = resolve_preset("normal-cone:n=2,p=1,lambda=1/2");
    for (Rational beta : {Rational(0), Rational(1, 2)}) {
        auto g100 = lemlim_check(nc.setup->vol_curve, *nc.setup_source, nc.setup->c1, 1, beta, 100);
        auto g400 = lemlim_check(nc.setup->vol_curve, *nc.setup_source, nc.setup->c1, 1, beta, 400);
        std::string tag = "(alpha, beta) = (1, " + beta.str() + ")";
        c.that(tag + ": gap(400) < gap(100)", g400.gap < g100.gap,
               {{"gap100", g100.gap.to_decimal(6)}, {"gap400", g400.gap.to_decimal(6)}});
        c.that(tag + ": gap(400) < 5% of the integral", g400.gap < Rational(5, 100) * g400.rhs,
               {{"gap400", g400.gap.to_decimal(6)}, {"integral", g400.rhs}});
    }
}

void okounkov_geometry(Checker& c) {
    for (auto [a, b] : {std::pair{Rational(2), Rational(3)}, std::pair{Rational(1), Rational(1)},
                        std::pair{Rational(3, 2), Rational(5, 7)}}) {
        FlagValuation2D fv(MonomialValuation({a, b}));
        c.equal("2 covol = vol, " + fv.label(), 2 * covolume(gamma_region(fv)), mono_vol(fv.monomial()));
        auto f3 = form3_check(fv);
        c.equal("int H^2 = vol, " + fv.label(), f3.integral, f3.volume);
    }
    for (int k = 1; k <= 6; ++k) {
        FlagValuation2D fv(skp_preset("zariski-primes", k));
        c.equal("2 covol = vol, " + fv.label(), 2 * covolume(gamma_region(fv)), skp_vol_approx(fv.skp(), k));
        auto f3 = form3_check(fv);
        c.equal("int H^2 = vol, " + fv.label(), f3.integral, f3.volume);
    }
    for (int k = 1; k <= 4; ++k) {
        SKPData data = skp_preset("zariski-primes", k);
        Rational m = Rational(data.c(k)) * data.beta(k);
        c.equal("complement count = codimension at m = " + m.str(),
                Rational(primary_complement(FlagValuation2D(data), m).count), Rational(skp_codim(data, m)));
    }
    auto slice_entry = [&](const FlagValuation2D& fv, const Rational& t) {
        SliceReport rep = slice_check(fv, t, {10, 20, 30});
        json gaps = json::array();
        for (const auto& l : rep.levels) gaps.push_back(l.gap ? l.gap->str() : std::string("undefined"));
        c.that("slice inclusion, " + fv.label() + ", t = " + t.str(), rep.contained, {{"gaps", gaps}});
        c.that("slice gap shrinks, " + fv.label() + ", t = " + t.str(),
               rep.shrinking && rep.levels.back().gap && *rep.levels.back().gap < *rep.levels.front().gap,
               {{"gaps", gaps}});
    };
    slice_entry(FlagValuation2D(MonomialValuation({2, 3})), Rational(7, 3));
    slice_entry(FlagValuation2D(skp_preset("zariski-primes", 5)), Rational(3, 2));
    c.that("slice inclusion, key polynomials, t = 1", slice_check(FlagValuation2D(skp_preset("zariski-primes", 5)), 1,
                                                                   {10, 20, 30})
                                                          .contained);
    c.equal("d_inf trivial", d_infinity(trivial_curve(1, 1), 2, 1, 1, 1, 1), 1);
    DivisorialData h = pn_hyperplane(3);
    c.equal("d_inf P^2 hyperplane", d_infinity(h.vol_curve_F, 3, h.r, h.KVn1(), 3, 0), -1);
    DivisorialData nc = normal_cone_preset(2, 1, Rational(1, 2)).div;
    c.equal("d_inf normal cone (2,1,1/2)", d_infinity(nc.vol_curve_F, 2, nc.r, nc.KVn1(), 2, 0), 0);
}

void uniqueness(Checker& c) {
    for (auto [n, cval] : {std::pair{2, Rational(1)}, std::pair{3, Rational(5, 2)}, std::pair{4, Rational(1, 3)}}) {
        auto r = resolve_preset("trivial:n=" + std::to_string(n) + ",c=" + cval.str());
        c.that("detector true, " + r.setup->label, uniqueness_detector(*r.setup));
    }
    for (const char* p : {"normal-cone:n=2,p=1,lambda=1/2", "normal-cone:n=3,p=2,lambda=1/2", "pn-hyperplane:n=2",
                          "pn-hyperplane:n=3"}) {
        auto r = resolve_preset(p);
        c.that(std::string("detector false, ") + p, !uniqueness_detector(*r.setup));
        c.equal(std::string("mass of -d vol = Lvol, ") + p, neg_differential(r.curve.vol_curve).total_mass(),
                r.curve.Lvol);
        c.equal(std::string("dh_limit probability, ") + p, dh_limit(r.curve.vol_curve, r.curve.Lvol).total_mass(), 1);
    }
    auto r = resolve_preset("normal-cone:n=3,p=1,lambda=2/3");
    Rational target = measure_moment(dh_limit(r.curve.vol_curve, r.curve.Lvol), 1);
    auto gap = [&](long m) {
        Measure1D e = dh_empirical(*r.source, m);
        return (measure_moment(e, 1) / e.total_mass() - target).abs();
    };
    Rational g10 = gap(10), g40 = gap(40);
    c.that("DH first moment gap(40) < gap(10), normal-cone:n=3,p=1,lambda=2/3", g40 < g10,
           {{"gap10", g10.to_decimal(6)}, {"gap40", g40.to_decimal(6)}, {"limit", target}});
}

struct Entry {
    int id;
    const char* name;
    void (*run)(Checker&);
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = {
        {1, "colength table", colength_table},
        {2, "volume limit and log discrepancies", volume_limit},
        {3, "filtration basis dimensions", basis_dims},
        {4, "monomial identities", monomial_identities},
        {5, "Phi functional", phi_functional},
        {6, "normal-cone derivative identity", normal_cone_derivatives},
        {7, "Theta invariant", theta_invariant},
        {8, "log-discrepancy constancy", logdisc_constancy},
        {9, "summation lemma", summation_lemma},
        {10, "Okounkov geometry", okounkov_geometry},
        {11, "uniqueness detector and DH measures", uniqueness},
    };
    return e;
}

}  // namespace

std::vector<int> suite_criteria(const std::string& suite) {
    if (suite == "paper-table") return {1, 2, 3};
    if (suite == "identities") return {4, 5, 6, 7, 8, 10};
    if (suite == "convergence") return {9, 11};
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    throw ValidationError("unknown suite '" + suite + "' (paper-table, identities, convergence, all)");
}

CriterionResult run_criterion(int id) {
    for (const auto& e : entries()) {
        if (e.id != id) continue;
        CriterionResult r;
        r.id = id;
        r.name = e.name;
        Checker c(r);
        auto start = std::chrono::steady_clock::now();
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.that("no exception", false, {{"error", ex.what()}});
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.pass = !r.checks.empty();
        for (const auto& ch : r.checks) r.pass = r.pass && ch.at("pass").get<bool>();
        return r;
    }
    throw ValidationError("unknown criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_suite(const std::string& suite) {
    std::vector<CriterionResult> out;
    for (int id : suite_criteria(suite)) out.push_back(run_criterion(id));
    return out;
}

nlohmann::json to_report(const std::vector<CriterionResult>& results) {
    json crit = json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        crit.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"checks", r.checks}});
    }
    return {{"pass", all}, {"criteria", crit}};
}

}  // namespace nvol
