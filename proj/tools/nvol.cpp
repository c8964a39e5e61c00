// nvol: command-line front end for the exact volume / filtration toolkit.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "nvol/bipoly.hpp"
#include "nvol/cone.hpp"
#include "nvol/errors.hpp"
#include "nvol/filtration.hpp"
#include "nvol/json.hpp"
#include "nvol/monomial.hpp"
#include "nvol/okounkov.hpp"
#include "nvol/presets.hpp"
#include "nvol/skp.hpp"
#include "nvol/verify.hpp"

using namespace nvol;

namespace {

struct Options {
    std::string format = "csv";
    int precision = 6;
};
Options opt;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void write_table(std::ostream& os, const Table& t, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : t.rows) {
            nlohmann::ordered_json o;
            for (size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = r[i];
            arr.push_back(o);
        }
        os << arr.dump(2) << "\n";
        return;
    }
    for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_cell(t.columns[i]);
    os << "\n";
    for (const auto& r : t.rows) {
        for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
        os << "\n";
    }
}

void emit(const Table& t) { write_table(std::cout, t, opt.format); }

std::string dec(const Rational& q) { return q.to_decimal(opt.precision); }

/// label, exact, decimal, note
struct Report {
    Table t{{"quantity", "exact", "decimal", "note"}, {}};
    void add(const std::string& label, const Rational& v, const std::string& note = "") {
        t.rows.push_back({label, v.str(), dec(v), note});
    }
    void text(const std::string& label, const std::string& v, const std::string& note = "") {
        t.rows.push_back({label, v, v, note});
    }
};

Rational Q(const std::string& s) { return Rational::parse(s); }

std::vector<Rational> parse_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Q(item));
    if (out.empty()) throw ValidationError("empty list '" + s + "'");
    return out;
}

/// "a:b:step" or "a:b" (step 1) or a single value; exact
std::vector<Rational> parse_range(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() == 1) return {Q(parts[0])};
    if (parts.size() > 3) throw ValidationError("range must look like a:b or a:b:step");
    Rational a = Q(parts[0]), b = Q(parts[1]), step = parts.size() == 3 ? Q(parts[2]) : Rational(1);
    if (step.sign() <= 0) throw ValidationError("range step must be positive");
    if (b < a) throw ValidationError("range end is below its start");
    std::vector<Rational> out;
    for (Rational x = a; x <= b; x += step) {
        out.push_back(x);
        if (out.size() > 100000) throw ValidationError("range has too many points");
    }
    return out;
}

long to_long(const Rational& q, const std::string& what) {
    if (!q.is_integer()) throw ValidationError(what + " must be an integer");
    return to_int64(q.numerator());
}

void warn_preset(const ResolvedPreset& p) {
    if (p.normal_cone && !p.normal_cone->warning.empty()) std::cerr << "warning: " << p.normal_cone->warning << "\n";
}

const ConeSetup& need_setup(const ResolvedPreset& p) {
    if (!p.setup) throw ValidationError("preset '" + p.text + "' does not define a valuation on the cone");
    return *p.setup;
}

const DivisorialData& need_div(const ResolvedPreset& p) {
    if (!p.div) throw ValidationError("preset '" + p.text + "' is not divisorial (use normal-cone or pn-hyperplane)");
    return *p.div;
}

// ---- commands ----

void cmd_monomial(const std::string& weights, const std::string& count_m) {
    MonomialValuation v(parse_list(weights));
    Report r;
    r.add("vol", mono_vol(v), "1 / prod gamma_i");
    r.add("A", mono_logdisc(v), "sum gamma_i");
    r.add("nvol", mono_nvol(v), "A^n vol");
    if (!count_m.empty()) {
        Rational m = Q(count_m);
        Integer c = mono_count_oracle(v, m);
        r.add("count(m)", Rational(c), "#{e : <e, gamma> < m}");
        r.add("n! count / m^n", factorial(v.dim()) * Rational(c) / m.pow(v.dim()), "tends to vol");
    }
    emit(r.t);
}

void cmd_skp_table(const std::string& preset, int depth, bool precision_given) {
    SKPData data = skp_preset(preset, depth);
    Table t{{"k", "c_k", "beta_k", "m", "ratio_exact", "vol_approx", "count", "ratio"}, {}};
    for (int k = 1; k <= depth; ++k) {
        SKPData dk = skp_preset(preset, k);
        Rational m = Rational(dk.c(k)) * dk.beta(k);
        Integer count = skp_codim(dk, m);
        Rational ratio = Rational(2) * Rational(count) / (m * m);
        t.rows.push_back({std::to_string(k), std::to_string(data.c(k)), data.beta(k).str(), m.str(), ratio.str(),
                          skp_vol_approx(data, k).str(), count.get_str(),
                          precision_given ? dec(ratio) : ratio.to_fixed(5)});
    }
    emit(t);
}

void cmd_skp_dims(const std::string& preset, const std::string& m_text, const std::string& k_range, int depth) {
    Rational m = Q(m_text);
    std::vector<Rational> ks = parse_range(k_range);
    if (depth <= 0) {
        // deep enough for the colength at m and for every degree in the range
        depth = skp_preset_depth_for(preset, max(m, Rational(2)));
        while (depth < 12 && Rational(skp_preset(preset, depth).d(depth + 1)) <= ks.back()) ++depth;
    }
    SKPData data = skp_preset(preset, depth);
    Table t{{"k", "dim_R_k", "dim_F_m_R_k", "codim"}, {}};
    Integer total = 0;
    for (const Rational& kq : ks) {
        long k = to_long(kq, "k");
        long d = skp_filtration_dim(data, m, k);
        total += (k + 1) - d;
        t.rows.push_back({std::to_string(k), std::to_string(k + 1), std::to_string(d), std::to_string(k + 1 - d)});
    }
    emit(t);
    std::cerr << "sum of codimensions over the range: " << total.get_str()
              << "; colength of {v >= " << m.str() << "}: " << skp_codim(data, m).get_str() << "\n";
}

void cmd_skp_value(const std::string& preset, const std::string& poly, int depth) {
    SKPData data = skp_preset(preset, depth);
    BiPoly f = BiPoly::parse(poly);
    Report r;
    r.add("v(f)", skp_value(data, f), "min over the key-polynomial expansion");
    Table terms{{"coefficient", "a0", "a", "value"}, {}};
    for (const auto& term : skp_expand(data, f)) {
        std::string a;
        for (size_t i = 0; i < term.exponent.a.size(); ++i) a += (i ? " " : "") + std::to_string(term.exponent.a[i]);
        terms.rows.push_back(
            {term.coefficient.str(), std::to_string(term.exponent.a0), a, qmon_value(data, term.exponent).str()});
    }
    if (opt.format == "json") {
        std::ostringstream a, b;
        write_table(a, r.t, "json");
        write_table(b, terms, "json");
        nlohmann::ordered_json out;
        out["summary"] = nlohmann::ordered_json::parse(a.str());
        out["terms"] = nlohmann::ordered_json::parse(b.str());
        std::cout << out.dump(2) << "\n";
        return;
    }
    emit(r.t);
    std::cout << "\n";
    emit(terms);
}

void cmd_filtration_dh(const std::string& preset, long level, int samples) {
    ResolvedPreset p = resolve_preset(preset);
    warn_preset(p);
    if (!p.source) throw ValidationError("preset '" + preset + "' has no section counts (tabulated backend)");
    if (level < 1 || level > p.source->max_level)
        throw ValidationError("level must lie in [1, " + std::to_string(p.source->max_level) + "]");
    Measure1D emp = dh_empirical(*p.source, level);
    Measure1D lim = dh_limit(p.curve.vol_curve, p.curve.Lvol);
    Table t{{"kind", "x", "x_decimal", "value", "value_decimal"}, {}};
    for (const auto& a : emp.atoms()) t.rows.push_back({"atom", a.location.str(), dec(a.location), a.mass.str(), dec(a.mass)});
    for (const auto& a : lim.atoms())
        t.rows.push_back({"limit-atom", a.location.str(), dec(a.location), a.mass.str(), dec(a.mass)});
    auto [lo, hi] = support_bounds(p.curve.vol_curve);
    if (samples > 1 && lo < hi)
        for (int i = 0; i < samples; ++i) {
            Rational x = lo + (hi - lo) * Rational(i, samples - 1);
            Rational d = lim.density()(x);
            t.rows.push_back({"limit-density", x.str(), dec(x), d.str(), dec(d)});
        }
    for (int k = 0; k <= 2; ++k) {
        Rational me = measure_moment(emp, k), ml = measure_moment(lim, k);
        t.rows.push_back({"moment" + std::to_string(k) + "-empirical", std::to_string(k), std::to_string(k), me.str(), dec(me)});
        t.rows.push_back({"moment" + std::to_string(k) + "-limit", std::to_string(k), std::to_string(k), ml.str(), dec(ml)});
    }
    emit(t);
}

void cmd_filtration_lemlim(const std::string& preset, const std::string& alpha, const std::string& beta,
                           const std::string& ps) {
    ResolvedPreset p = resolve_preset(preset);
    warn_preset(p);
    const ConeSetup& s = need_setup(p);
    if (!p.setup_source) throw ValidationError("preset '" + preset + "' has no section counts for its filtration");
    Table t{{"p", "lhs", "rhs", "gap", "gap_decimal", "relative_gap"}, {}};
    for (const Rational& pq : parse_list(ps)) {
        long pp = to_long(pq, "p");
        LemlimResult r = lemlim_check(s.vol_curve, *p.setup_source, s.c1, Q(alpha), Q(beta), pp);
        t.rows.push_back({std::to_string(pp), r.lhs.str(), r.rhs.str(), r.gap.str(), dec(r.gap),
                          r.rhs.is_zero() ? "undefined" : dec(r.gap / r.rhs)});
    }
    emit(t);
}

void cmd_cone_phi(const std::string& preset, const std::string& lambda_text, const std::string& s_range) {
    ResolvedPreset p = resolve_preset(preset);
    warn_preset(p);
    const ConeSetup& s = need_setup(p);
    Rational lambda = lambda_text.empty() ? s.lambda_star() : Q(lambda_text);
    Table t{{"s", "phi", "phi_decimal", "phi_second"}, {}};
    for (const Rational& sv : parse_range(s_range))
        t.rows.push_back({sv.str(), phi(s, lambda, sv).str(), dec(phi(s, lambda, sv)), phi_second(s, lambda, sv).str()});
    emit(t);
    std::cerr << "lambda = " << lambda.str() << ", Phi_s(lambda, 0) = " << phi_s_at_0(s, lambda).str() << "\n";
}

void cmd_cone_summary(const std::string& preset) {
    ResolvedPreset p = resolve_preset(preset);
    warn_preset(p);
    const ConeSetup& s = need_setup(p);
    Report r;
    r.add("c1", s.c1);
    r.add("A_X(v1)", s.A1);
    r.add("lambda_*", s.lambda_star(), "r / A_X(v1)");
    Rational v = vol_v1(s);
    r.add("vol(v1)", v, "kernel and measure forms agree");
    r.add("nvol(v1)", s.A1.pow(s.n) * v);
    r.add("Phi_s(lambda_*, 0)", phi_s_at_0(s, s.lambda_star()));
    auto [lo, hi] = support_bounds(s.vol_curve);
    r.add("lambda_min", lo);
    r.add("lambda_max", hi);
    r.text("dirac", uniqueness_detector(s) ? "true" : "false", "lambda_min = lambda_max");
    emit(r.t);
}

void cmd_cone_theta(const std::string& preset) {
    ResolvedPreset p = resolve_preset(preset);
    warn_preset(p);
    const DivisorialData& d = need_div(p);
    Report r;
    Rational th = theta(d);
    r.add("Theta", th, "A_F - (r^n / (-K)^{n-1}) int vol_F");
    r.add("A_F", d.A_F);
    r.add("int vol_F", pp_integrate(d.vol_curve_F, Rational(0), std::nullopt));
    r.add("(-K)^{n-1}", d.KVn1());
    Measure1D dh = neg_differential(test_configuration_curve(d));
    r.add("CM from DH moment", cm_from_dh(dh, d.n, d.r, d.KVn1()), "-r^n int x d(-dvol) / (-K)^{n-1}");
    if (p.normal_cone) r.add("closed form (n - 1/lambda)/n", (Rational(d.n) - Rational(1) / p.normal_cone->lambda) / d.n);
    emit(r.t);
}

void cmd_cone_derivative(const std::string& preset) {
    ResolvedPreset p = resolve_preset(preset);
    warn_preset(p);
    const DivisorialData& d = need_div(p);
    Report r;
    Rational dv = wbeta_vol_derivative(d), dn = wbeta_nvol_derivative(d), da = valpha_nvol_derivative(d);
    r.add("d vol(w_beta)/d beta (integration)", dv);
    r.add("d nvol(w_beta)/d beta (integration)", dn);
    r.add("q d nvol(v_alpha)/d alpha", d.q * da, "w_beta is a multiple of v_alpha");
    r.add("difference (chain rule)", dn - d.q * da);
    if (p.normal_cone) {
        r.add("d vol(w_beta)/d beta (closed form)", p.normal_cone->derivative_vol_closed, "p (n - 1/lambda) L^{n-1}");
        r.add("d nvol(w_beta)/d beta (closed form)", p.normal_cone->derivative_nvol_closed,
              "p^{1-n} (n - 1/lambda) L^{n-1}");
        r.add("difference (vol)", dv - p.normal_cone->derivative_vol_closed);
        r.add("difference (nvol)", dn - p.normal_cone->derivative_nvol_closed);
    }
    emit(r.t);
}

void cmd_cone_dinf(const std::string& preset, const std::string& eplus, const std::string& eminus) {
    ResolvedPreset p = resolve_preset(preset);
    warn_preset(p);
    Rational value;
    if (p.div) {
        value = d_infinity(p.div->vol_curve_F, p.div->n, p.div->r, p.div->KVn1(), Q(eplus), Q(eminus));
    } else {
        const ConeSetup& s = need_setup(p);
        value = d_infinity(s.vol_curve, s.n, s.r, s.r.pow(s.n - 1) * s.Lvol, Q(eplus), Q(eminus));
    }
    Report r;
    r.add("d_inf", value, "1 - r(e+ - e-) + (r^n / (-K)^{n-1}) int_{e-}^{e+} vol");
    emit(r.t);
}

std::string fmt_point(const Point2& p) { return "(" + p.first.str() + ", " + p.second.str() + ")"; }
std::string fmt_point_dec(const Point2& p) { return "(" + dec(p.first) + ", " + dec(p.second) + ")"; }

void cmd_okounkov_complement(const std::string& source, const std::string& m_text, const std::string& svg,
                             const std::string& csv) {
    FlagValuation2D fv = resolve_flag_source(source);
    Rational m = Q(m_text);
    Complement c = primary_complement(fv, m);
    Report r;
    r.add("count", Rational(c.count));
    if (fv.is_skp()) r.add("codimension", Rational(skp_codim(fv.skp(), m)));
    if (m.sign() > 0) r.add("2 count / m^2", Rational(2) * Rational(c.count) / (m * m));
    emit(r.t);
    if (!csv.empty()) {
        Table t{{"tau", "mu", "tau_over_m", "mu_over_m", "tau_over_m_decimal", "mu_over_m_decimal"}, {}};
        for (auto [x, y] : c.points) {
            Rational a = Rational(x) / m, b = Rational(y) / m;
            t.rows.push_back({std::to_string(x), std::to_string(y), a.str(), b.str(), dec(a), dec(b)});
        }
        std::ofstream out(csv, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + csv + "'");
        write_table(out, t, "csv");
    }
    if (!svg.empty()) {
        Figure fig;
        fig.title = "complement of the primary sequence, " + fv.label() + ", m = " + m.str();
        for (auto [x, y] : c.points) fig.points.emplace_back(Rational(x) / m, Rational(y) / m);
        fig.regions.push_back(gamma_region(fv));
        emit_figure(fig, svg);
    }
}

void cmd_okounkov_region(const std::string& source, const std::string& svg, const std::string& t_text) {
    FlagValuation2D fv = resolve_flag_source(source);
    ConvexRegion2D reg = gamma_region(fv);
    Report r;
    for (size_t i = 0; i < reg.vertices.size(); ++i)
        r.t.rows.push_back({"vertex " + std::to_string(i), fmt_point(reg.vertices[i]), fmt_point_dec(reg.vertices[i]),
                            i == 0 ? reg.note : ""});
    Rational cov = covolume(reg);
    r.add("covolume", cov);
    r.add("2! covolume", 2 * cov, "= vol");
    Form3Report f3 = form3_check(fv);
    r.add("int_0^1 H^2", f3.integral, f3.equal ? "equals 2! covolume" : "MISMATCH");
    r.add("vol (module)", fv.is_skp() ? skp_vol_approx(fv.skp(), fv.skp().depth()) : mono_vol(fv.monomial()));
    if (!t_text.empty()) {
        SliceReport s = slice_check(fv, Q(t_text), {10, 20, 30});
        r.text("exact slice", s.exact ? "[" + s.exact->first.str() + ", " + s.exact->second.str() + "]" : "empty");
        for (const auto& l : s.levels)
            r.text("slice gap at level " + std::to_string(l.level), l.gap ? l.gap->str() : "undefined",
                   l.contained ? "contained" : "NOT contained");
    }
    emit(r.t);
    if (!svg.empty()) {
        Figure fig;
        fig.title = "Gamma, " + fv.label();
        fig.regions.push_back(reg);
        emit_figure(fig, svg);
    }
}

int cmd_verify(const std::string& suite) {
    auto results = run_suite(suite);
    nlohmann::json rep = to_report(results);
    if (opt.format == "csv") {
        Table t{{"id", "name", "pass"}, {}};
        for (const auto& r : results) t.rows.push_back({std::to_string(r.id), r.name, r.pass ? "true" : "false"});
        emit(t);
    } else {
        std::cout << rep.dump(2) << "\n";
    }
    if (!rep["pass"].get<bool>()) {
        for (const auto& r : results)
            for (const auto& c : r.checks)
                if (!c.at("pass").get<bool>())
                    std::cerr << "criterion " << r.id << " failed: " << c.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nvol: exact normalized volumes, filtrations and Okounkov regions"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    auto* prec = app.add_option("--precision", opt.precision, "Significant digits of decimals")->check(CLI::Range(1, 60));
    app.footer([] {
        std::string s = "Presets:\n";
        for (const auto& [name, desc] : preset_catalog()) s += "  " + name + "  " + desc + "\n";
        return s;
    }());

    int code = 0;
    std::function<void()> action;

    auto* mono = app.add_subcommand("monomial", "Monomial valuation: vol, log discrepancy, nvol");
    std::string weights, count_m;
    mono->add_option("--weights", weights, "Comma-separated positive weights, e.g. 2,3")->required();
    mono->add_option("--count-m", count_m, "Also count lattice points of value < m");
    mono->callback([&] { action = [&] { cmd_monomial(weights, count_m); }; });

    auto* skp = app.add_subcommand("skp", "Key-polynomial valuations");
    skp->require_subcommand(1);
    std::string skp_preset_name = "zariski-primes", m_text, k_range = "0:12", poly;
    int depth = 5, dims_depth = 0, value_depth = 6;
    auto* table = skp->add_subcommand("table", "Colength table at m = c_k beta_k");
    table->add_option("--preset", skp_preset_name, "Family name");
    table->add_option("--depth", depth, "Number of rows")->check(CLI::Range(1, 12));
    table->callback([&] { action = [&] { cmd_skp_table(skp_preset_name, depth, prec->count() > 0); }; });
    auto* dims = skp->add_subcommand("dims", "dim F^m R_k per degree k");
    dims->add_option("--preset", skp_preset_name, "Family name");
    dims->add_option("--m", m_text, "Level m")->required();
    dims->add_option("--k", k_range, "Degrees, a:b");
    dims->add_option("--depth", dims_depth, "Truncation depth (default: enough for m)");
    dims->callback([&] { action = [&] { cmd_skp_dims(skp_preset_name, m_text, k_range, dims_depth); }; });
    auto* value = skp->add_subcommand("value", "Valuation of a polynomial in x, y");
    value->add_option("--preset", skp_preset_name, "Family name");
    value->add_option("--poly", poly, "Polynomial, e.g. \"y^2 - x^3\"")->required();
    value->add_option("--depth", value_depth, "Truncation depth")->check(CLI::Range(1, 12));
    value->callback([&] { action = [&] { cmd_skp_value(skp_preset_name, poly, value_depth); }; });

    auto* filt = app.add_subcommand("filtration", "Filtrations of section rings");
    filt->require_subcommand(1);
    std::string preset, alpha = "1", beta = "0", ps = "100,200,400";
    long level = 40;
    int samples = 11;
    auto* dh = filt->add_subcommand("dh", "Empirical and limit Duistermaat-Heckman measures");
    dh->add_option("--preset", preset, "Preset")->required();
    dh->add_option("--level", level, "Level m");
    dh->add_option("--samples", samples, "Density sample points");
    dh->callback([&] { action = [&] { cmd_filtration_dh(preset, level, samples); }; });
    auto* lem = filt->add_subcommand("lemlim", "Riemann sum of dimensions against the volume integral");
    lem->add_option("--preset", preset, "Cone preset")->required();
    lem->add_option("--alpha", alpha, "alpha");
    lem->add_option("--beta", beta, "beta");
    lem->add_option("--p", ps, "Comma-separated p values");
    lem->callback([&] { action = [&] { cmd_filtration_lemlim(preset, alpha, beta, ps); }; });

    auto* cone = app.add_subcommand("cone", "Valuations on the cone over (V, L)");
    cone->require_subcommand(1);
    std::string lambda_text, s_range = "0:1:1/20", eplus, eminus;
    bool lambda_star = false;
    auto* phic = cone->add_subcommand("phi", "Phi(lambda, s) on an s grid");
    phic->add_option("--preset", preset, "Cone preset")->required();
    auto* lam = phic->add_option("--lambda", lambda_text, "lambda (default lambda_*)");
    phic->add_flag("--lambda-star", lambda_star, "Use lambda_* = r / A_X(v1)")->excludes(lam);
    phic->add_option("--s", s_range, "s grid a:b:step");
    phic->callback([&] { action = [&] { cmd_cone_phi(preset, lambda_star ? "" : lambda_text, s_range); }; });
    auto* summ = cone->add_subcommand("summary", "vol, nvol, lambda_*, support of the DH measure");
    summ->add_option("--preset", preset, "Cone preset")->required();
    summ->callback([&] { action = [&] { cmd_cone_summary(preset); }; });
    auto* th = cone->add_subcommand("theta", "Theta of a divisorial preset");
    th->add_option("--preset", preset, "Divisorial preset")->required();
    th->callback([&] { action = [&] { cmd_cone_theta(preset); }; });
    auto* der = cone->add_subcommand("derivative", "Derivatives of vol and nvol along w_beta and v_alpha");
    der->add_option("--preset", preset, "Divisorial preset")->required();
    der->callback([&] { action = [&] { cmd_cone_derivative(preset); }; });
    auto* dinf = cone->add_subcommand("dinf", "The number d_inf on a window [e-, e+]");
    dinf->add_option("--preset", preset, "Preset")->required();
    dinf->add_option("--eplus", eplus, "e+")->required();
    dinf->add_option("--eminus", eminus, "e-")->required();
    dinf->callback([&] { action = [&] { cmd_cone_dinf(preset, eplus, eminus); }; });

    auto* ok = app.add_subcommand("okounkov", "Flag valuations on C^2 and their regions");
    ok->require_subcommand(1);
    std::string source, svg, csv, t_text;
    auto* comp = ok->add_subcommand("complement", "Complement of the primary sequence at level m");
    comp->add_option("--source", source, "skp:zariski-primes:K or monomial:a,b")->required();
    comp->add_option("--m", m_text, "Level m")->required();
    comp->add_option("--svg", svg, "Write a figure");
    comp->add_option("--csv", csv, "Write the points");
    comp->callback([&] { action = [&] { cmd_okounkov_complement(source, m_text, svg, csv); }; });
    auto* reg = ok->add_subcommand("region", "Removed triangle, covolume and H^2 integral");
    reg->add_option("--source", source, "skp:zariski-primes:K or monomial:a,b")->required();
    reg->add_option("--svg", svg, "Write a figure");
    reg->add_option("--t", t_text, "Also check the slice at V_0 = 1/t");
    reg->callback([&] { action = [&] { cmd_okounkov_region(source, svg, t_text); }; });

    auto* ver = app.add_subcommand("verify", "Run the acceptance battery");
    std::string suite = "all";
    ver->add_option("--suite", suite, "paper-table, identities, convergence, all")
        ->check(CLI::IsMember({"paper-table", "identities", "convergence", "all"}));
    ver->callback([&] { action = [&] { code = cmd_verify(suite); }; });

    std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* sub : a->get_subcommands({})) fall(sub);
    };
    fall(&app);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    try {
        if (action) action();
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
