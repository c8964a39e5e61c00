#include "nvol/skp.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "nvol/errors.hpp"

namespace nvol {

SKPData::SKPData(std::vector<long> c, std::vector<Rational> beta) : c_(std::move(c)), beta_(std::move(beta)) {
    if (c_.empty()) throw ValidationError("key-polynomial data needs depth >= 1");
    if (c_.size() != beta_.size()) throw ValidationError("c and beta must have the same length");
    d_.push_back(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        const long ci = c_[i];
        const auto idx = std::to_string(i + 1);
        if (ci <= 1) throw ValidationError("c_" + idx + " must exceed 1");
        if (beta_[i].denominator() != ci)
            throw ValidationError("beta_" + idx + " = " + beta_[i].str() + " must have denominator c_" + idx);
        if (std::gcd(ci, d_.back()) != 1) throw ValidationError("c_" + idx + " must be coprime to d_" + idx);
        if (i == 0 && !(beta_[0] > 1)) throw ValidationError("beta_1 must exceed 1");
        if (i > 0 && !(beta_[i] > Rational(c_[i - 1]) * beta_[i - 1]))
            throw ValidationError("beta_" + idx + " must exceed c_" + std::to_string(i) + " beta_" + std::to_string(i));
        if (d_.back() > std::numeric_limits<long>::max() / ci) throw ValidationError("depth too large");
        d_.push_back(d_.back() * ci);
    }
}

long SKPData::c(int i) const {
    if (i == 0) return 1;
    if (i < 1 || i > depth()) throw ValidationError("index out of range");
    return c_[static_cast<size_t>(i - 1)];
}

const Rational& SKPData::beta(int i) const {
    static const Rational one(1);
    if (i == 0) return one;
    if (i < 1 || i > depth()) throw ValidationError("index out of range");
    return beta_[static_cast<size_t>(i - 1)];
}

long SKPData::d(int i) const {
    if (i < 1 || i > depth() + 1) throw ValidationError("index out of range");
    return d_[static_cast<size_t>(i - 1)];
}

namespace {

void check_exponent(const SKPData& data, const QMonomial& q) {
    if (q.a0 < 0 || static_cast<int>(q.a.size()) > data.depth()) throw ValidationError("invalid q-monomial exponent");
    for (size_t i = 0; i < q.a.size(); ++i)
        if (q.a[i] < 0 || q.a[i] >= data.c(static_cast<int>(i) + 1))
            throw ValidationError("q-monomial exponent a_" + std::to_string(i + 1) + " out of range");
}

}  // namespace

Rational qmon_value(const SKPData& data, const QMonomial& q) {
    check_exponent(data, q);
    Rational v(q.a0);
    for (size_t i = 0; i < q.a.size(); ++i) v += Rational(q.a[i]) * data.beta(static_cast<int>(i) + 1);
    return v;
}

long qmon_order(const SKPData& data, const QMonomial& q) {
    auto [ye, xe] = qmon_initial(data, q);
    return ye + xe;
}

std::pair<long, long> qmon_initial(const SKPData& data, const QMonomial& q) {
    check_exponent(data, q);
    long x = 0;
    for (size_t i = 0; i < q.a.size(); ++i) x += q.a[i] * data.d(static_cast<int>(i) + 1);
    return {q.a0, x};
}

Integer skp_codim(const SKPData& data, const Rational& m) {
    const int K = data.depth();
    const Rational top = Rational(data.c(K)) * data.beta(K);
    if (top < m)
        throw ValidationError("depth " + std::to_string(K) + " is insufficient for m = " + m.str() + " (c_K beta_K = " +
                              top.str() + "); use a deeper truncation");
    if (m.sign() <= 0) return 0;
    Integer total = 0;
    std::function<void(int, const Rational&)> rec = [&](int i, const Rational& s) {
        if (i > K) {
            total += (m - s).ceil();
            return;
        }
        Rational cur = s;
        for (long a = 0; a < data.c(i) && cur < m; ++a, cur += data.beta(i)) rec(i + 1, cur);
    };
    rec(1, Rational(0));
    return total;
}

QMonomial skp_degree_monomial(const SKPData& data, long k, long e) {
    if (e < 0 || e > k) throw ValidationError("x exponent must lie in [0, k]");
    if (e >= data.d(data.depth() + 1))
        throw ValidationError("x exponent " + std::to_string(e) + " needs more than depth " +
                              std::to_string(data.depth()) + " to be represented");
    QMonomial q{k - e, std::vector<long>(static_cast<size_t>(data.depth()), 0)};
    for (int i = 1; i <= data.depth() && e > 0; ++i) {
        q.a[static_cast<size_t>(i - 1)] = e % data.c(i);
        e /= data.c(i);
    }
    return q;
}

std::vector<Rational> skp_level_values(const SKPData& data, long k) {
    if (k < 0) throw ValidationError("degree must be nonnegative");
    std::vector<Rational> out;
    for (long e = 0; e <= k; ++e) out.push_back(qmon_value(data, skp_degree_monomial(data, k, e)));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

long skp_filtration_dim(const SKPData& data, const Rational& m, long k) {
    long count = 0;
    for (const auto& v : skp_level_values(data, k))
        if (v >= m) ++count;
    return count;
}

Rational skp_vol_approx(const SKPData& data, int k) {
    if (k < 1 || k > data.depth()) throw ValidationError("k must lie in [1, depth]");
    return Rational(data.d(k)) / data.beta(k);
}

Rational skp_logdisc(const SKPData& data, int k) {
    if (k < 0 || k > data.depth()) throw ValidationError("k must lie in [0, depth]");
    Rational a(2);
    for (int i = 1; i <= k; ++i) a += data.beta(i) - Rational(data.c(i - 1)) * data.beta(i - 1);
    return a;
}

BiPoly skp_key_polynomial(const SKPData& data, int i) {
    if (i < 0 || i > data.depth() + 1) throw ValidationError("key polynomial index out of range");
    if (i == 0) return BiPoly::monomial(1, 0, 1);
    BiPoly q = BiPoly::monomial(1, 1, 0);
    for (int j = 1; j < i; ++j) {
        long b = to_int64((Rational(data.c(j)) * data.beta(j)).numerator());
        q = q.pow(static_cast<int>(data.c(j))) + BiPoly::monomial(1, 0, static_cast<int>(b));
    }
    return q;
}

std::vector<QTerm> skp_expand(const SKPData& data, const BiPoly& f) {
    const int K = data.depth();
    if (f.degree_x() >= data.d(K + 1))
        throw ValidationError("x degree " + std::to_string(f.degree_x()) + " needs more than depth " +
                              std::to_string(K));
    // q_i has x-degree d_i, so keys beyond deg_x f never occur
    int top = 1;
    while (top < K && data.d(top + 1) <= f.degree_x()) ++top;
    std::vector<BiPoly> keys;
    for (int i = 0; i <= top; ++i) keys.push_back(skp_key_polynomial(data, i));

    std::vector<QTerm> out;
    std::vector<long> a(static_cast<size_t>(K), 0);
    // expand g (deg_x g < d_{i+1}) in powers of q_i, ..., q_1
    std::function<void(const BiPoly&, int)> rec = [&](const BiPoly& g, int i) {
        if (g.is_zero()) return;
        if (i == 0) {
            // only y remains
            for (const auto& [e, c] : g.terms()) out.push_back({c, QMonomial{e.second, a}});
            return;
        }
        BiPoly rest = g;
        for (long j = 0; !rest.is_zero(); ++j) {
            auto [q, r] = BiPoly::divmod_x(rest, keys[static_cast<size_t>(i)]);
            a[static_cast<size_t>(i - 1)] = j;
            rec(r, i - 1);
            rest = q;
        }
        a[static_cast<size_t>(i - 1)] = 0;
    };
    rec(f, top);
    std::sort(out.begin(), out.end(), [](const QTerm& x, const QTerm& y) { return x.exponent < y.exponent; });
    return out;
}

Rational skp_value(const SKPData& data, const BiPoly& f) {
    auto terms = skp_expand(data, f);
    if (terms.empty()) throw ValidationError("the zero polynomial has infinite value");
    Rational best = qmon_value(data, terms.front().exponent);
    for (const auto& t : terms) best = min(best, qmon_value(data, t.exponent));
    return best;
}

namespace {

std::vector<long> first_primes(int k) {
    std::vector<long> out;
    for (long p = 2; static_cast<int>(out.size()) < k; ++p)
        if (std::all_of(out.begin(), out.end(), [&](long q) { return p % q != 0; })) out.push_back(p);
    return out;
}

}  // namespace

std::vector<std::string> skp_preset_names() { return {"zariski-primes"}; }

SKPData skp_preset(const std::string& name, int depth) {
    if (depth < 1) throw ValidationError("depth must be at least 1");
    if (name == "zariski-primes") {
        if (depth > 12) throw ValidationError("zariski-primes supports depth up to 12");
        auto c = first_primes(depth);
        std::vector<Rational> beta{Rational(3, 2)};
        for (int i = 1; i < depth; ++i)
            beta.push_back(Rational(c[static_cast<size_t>(i - 1)]) * beta.back() +
                           Rational(1, c[static_cast<size_t>(i)]));
        return {c, beta};
    }
    throw ValidationError("unknown key-polynomial preset '" + name + "'");
}

int skp_preset_depth_for(const std::string& name, const Rational& m) {
    for (int k = 1; k <= 12; ++k) {
        SKPData data = skp_preset(name, k);
        if (Rational(data.c(k)) * data.beta(k) >= m) return k;
    }
    throw ValidationError("level " + m.str() + " is beyond the supported depth of preset '" + name + "'");
}

}  // namespace nvol
