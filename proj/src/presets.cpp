#include "nvol/presets.hpp"

#include <set>

#include "nvol/errors.hpp"
#include "nvol/skp.hpp"

namespace nvol {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void allow_keys(const PresetSpec& spec, std::set<std::string> keys) {
    for (const auto& [k, v] : spec.params)
        if (!keys.count(k)) {
            std::string list;
            for (const auto& a : keys) list += (list.empty() ? "" : ", ") + a;
            throw ValidationError("unknown key '" + k + "' for preset '" + spec.name + "' (allowed: " + list + ")");
        }
    if (!spec.positional.empty())
        throw ValidationError("preset '" + spec.name + "' takes key=value parameters only");
}

Rational get(const PresetSpec& spec, const std::string& key, std::optional<Rational> fallback = std::nullopt) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        if (fallback) return *fallback;
        throw ValidationError("preset '" + spec.name + "' needs " + key + "=...");
    }
    try {
        return Rational::parse(it->second);
    } catch (const std::exception&) {
        throw ValidationError("cannot read " + key + "=" + it->second + " as a rational number");
    }
}

long get_int(const PresetSpec& spec, const std::string& key, std::optional<long> fallback = std::nullopt) {
    Rational v = get(spec, key, fallback ? std::optional<Rational>(Rational(*fallback)) : std::nullopt);
    if (!v.is_integer()) throw ValidationError(key + " must be an integer");
    return to_int64(v.numerator());
}

int get_dim(const PresetSpec& spec) {
    long n = get_int(spec, "n");
    if (n < 2 || n > 12) throw ValidationError("n must lie in [2, 12]");
    return static_cast<int>(n);
}

// v_1 as v_alpha (default alpha = 1) or w_beta
void attach_setup(ResolvedPreset& out, const PresetSpec& spec, const std::optional<TabulatedSource>& base) {
    const DivisorialData& div = *out.div;
    bool has_beta = spec.params.count("beta") > 0;
    if (has_beta && spec.params.count("alpha")) throw ValidationError("give alpha or beta, not both");
    if (has_beta) {
        Rational beta = get(spec, "beta");
        out.setup = wbeta_setup(div, beta);
        if (base) out.setup_source = affine_source(*base, out.setup->c1, beta * div.q);
    } else {
        Rational alpha = get(spec, "alpha", Rational(1));
        out.setup = valpha_setup(div, alpha);
        if (base) out.setup_source = affine_source(*base, 1, alpha);
    }
}

}  // namespace

PresetSpec parse_preset(const std::string& text) {
    if (text.empty()) throw ValidationError("empty preset");
    auto colon = text.find(':');
    PresetSpec spec;
    spec.name = text.substr(0, colon);
    if (colon == std::string::npos) return spec;
    std::string rest = text.substr(colon + 1);
    if (rest.find('=') == std::string::npos) {
        for (const auto& part : split(rest, ':'))
            for (const auto& p : split(part, ',')) {
                if (p.empty()) throw ValidationError("empty argument in preset '" + text + "'");
                spec.positional.push_back(p);
            }
        return spec;
    }
    for (const auto& kv : split(rest, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size())
            throw ValidationError("expected key=value in preset '" + text + "', got '" + kv + "'");
        std::string key = kv.substr(0, eq);
        if (spec.params.count(key)) throw ValidationError("duplicate key '" + key + "'");
        spec.params[key] = kv.substr(eq + 1);
    }
    return spec;
}

ResolvedPreset resolve_preset(const std::string& text) {
    PresetSpec spec = parse_preset(text);
    ResolvedPreset out;
    out.text = text;
    out.name = spec.name;
    if (spec.name == "normal-cone") {
        allow_keys(spec, {"n", "p", "lambda", "KV", "alpha", "beta"});
        int n = get_dim(spec);
        long p = get_int(spec, "p");
        Rational lambda = get(spec, "lambda");
        NormalCone nc = spec.params.count("KV") ? normal_cone_preset(n, p, lambda, get(spec, "KV"))
                                                : normal_cone_preset(n, p, lambda);
        out.normal_cone = nc;
        out.div = nc.div;
        out.curve = {nc.div.vol_curve_F, n, nc.div.Lvol};
        if (nc.tabulated) out.source = normal_cone_divisorial_source(nc);
        attach_setup(out, spec, out.source);
    } else if (spec.name == "pn-hyperplane") {
        allow_keys(spec, {"n", "alpha", "beta"});
        int n = get_dim(spec);
        out.div = pn_hyperplane(n);
        out.curve = {out.div->vol_curve_F, n, out.div->Lvol};
        // same sections as the normal cone of a hyperplane with p = 1
        out.source = normal_cone_divisorial_source(normal_cone_preset(n, 1, Rational(1, n)));
        out.source->label = "hyperplane in P^" + std::to_string(n - 1);
        attach_setup(out, spec, out.source);
    } else if (spec.name == "trivial") {
        allow_keys(spec, {"n", "c", "Lvol"});
        int n = get_dim(spec);
        Rational c = get(spec, "c", Rational(1));
        if (c.sign() <= 0) throw ValidationError("c must be positive");
        Rational L = get(spec, "Lvol", Rational(1));
        out.curve = {trivial_curve(L, c), n, L};
        if (L == 1) out.source = trivial_source(n, c);
        ConeSetup s;
        s.n = n;
        s.r = 1;
        s.Lvol = L;
        s.c1 = c;
        s.A1 = c;
        s.vol_curve = out.curve.vol_curve;
        s.label = "trivial filtration, c = " + c.str();
        s.validate();
        out.setup = s;
        out.setup_source = out.source;
    } else if (spec.name == "skp" || spec.name == "zariski-primes") {
        std::vector<std::string> args = spec.positional;
        if (!spec.params.empty()) throw ValidationError("preset '" + spec.name + "' takes positional arguments");
        if (spec.name == "zariski-primes") args.insert(args.begin(), "zariski-primes");
        if (args.empty() || args.size() > 2) throw ValidationError("expected skp:<family>:<depth>");
        long depth = args.size() == 2 ? to_int64(Rational::parse(args[1]).floor()) : 6;
        SKPData data = skp_preset(args[0], static_cast<int>(depth));
        out.source = skp_source(data);
        out.curve = {skp_limit_curve(skp_vol_approx(data, data.depth())), 2, 1};
    } else {
        throw ValidationError("unknown preset '" + spec.name +
                              "' (known: normal-cone, pn-hyperplane, trivial, skp:zariski-primes:K)");
    }
    return out;
}

FlagValuation2D resolve_flag_source(const std::string& text) {
    PresetSpec spec = parse_preset(text);
    if (!spec.params.empty()) throw ValidationError("source '" + text + "' takes positional arguments");
    if (spec.name == "monomial") {
        if (spec.positional.size() != 2) throw ValidationError("expected monomial:a,b");
        return FlagValuation2D(MonomialValuation({Rational::parse(spec.positional[0]), Rational::parse(spec.positional[1])}));
    }
    if (spec.name == "skp") {
        if (spec.positional.size() != 2) throw ValidationError("expected skp:<family>:<depth>");
        Rational depth = Rational::parse(spec.positional[1]);
        if (!depth.is_integer()) throw ValidationError("depth must be an integer");
        return FlagValuation2D(skp_preset(spec.positional[0], static_cast<int>(to_int64(depth.numerator()))));
    }
    throw ValidationError("unknown source '" + spec.name + "' (known: monomial:a,b, skp:zariski-primes:K)");
}

std::vector<std::pair<std::string, std::string>> preset_catalog() {
    return {{"normal-cone:n=,p=,lambda=[,KV=,alpha=|beta=]",
             "deformation to the normal cone of D ~ lambda(-K_V), L = -pK_V"},
            {"pn-hyperplane:n=[,alpha=|beta=]", "hyperplane in P^{n-1}, L = -K"},
            {"trivial:n=[,c=,Lvol=]", "trivial filtration jumping at c"},
            {"skp:zariski-primes:K", "key-polynomial valuation, c_i = primes, depth K"},
            {"monomial:a,b", "monomial valuation on C^2 (okounkov sources)"}};
}

}  // namespace nvol
