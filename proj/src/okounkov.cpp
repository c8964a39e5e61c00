#include "nvol/okounkov.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "nvol/errors.hpp"
#include "nvol/piecewise.hpp"

namespace nvol {

FlagValuation2D::FlagValuation2D(MonomialValuation v) : source_(std::move(v)) {
    if (monomial().dim() != 2) throw ValidationError("flag valuations are implemented on C^2 only");
}

FlagValuation2D::FlagValuation2D(SKPData data) : source_(std::move(data)) {}

std::pair<Rational, Rational> FlagValuation2D::edge_values() const {
    if (is_skp()) {
        const auto& d = skp();
        return {d.beta(d.depth()) / Rational(d.d(d.depth())), Rational(1)};
    }
    return {monomial().weights()[0], monomial().weights()[1]};
}

std::string FlagValuation2D::label() const {
    if (is_skp()) return "key polynomials, depth " + std::to_string(skp().depth());
    return "monomial (" + monomial().weights()[0].str() + ", " + monomial().weights()[1].str() + ")";
}

std::vector<LatticePoint> semigroup_points(const FlagValuation2D&, long degree_bound) {
    // both families reach every lattice point of the cone: y^b x^a for monomials, and for key polynomials
    // y^{a0} times the standard monomial with x-part in mixed radix
    if (degree_bound < 0) throw ValidationError("degree bound must be nonnegative");
    std::vector<LatticePoint> out;
    for (long tau = 0; tau <= degree_bound; ++tau)
        for (long mu = 0; mu <= tau; ++mu) out.emplace_back(tau, mu);
    return out;
}

Complement primary_complement(const FlagValuation2D& fv, const Rational& m) {
    Complement out;
    if (m.sign() <= 0) {
        out.count = 0;
        return out;
    }
    if (fv.is_skp()) {
        const SKPData& data = fv.skp();
        const int K = data.depth();
        Integer expected = skp_codim(data, m);  // validates the depth
        std::function<void(int, const Rational&, long)> rec = [&](int i, const Rational& s, long x) {
            if (i > K) {
                for (long a0 = 0; s + a0 < m; ++a0) out.points.emplace_back(a0 + x, a0);
                return;
            }
            Rational cur = s;
            for (long a = 0; a < data.c(i) && cur < m; ++a, cur += data.beta(i)) rec(i + 1, cur, x + a * data.d(i));
        };
        rec(1, Rational(0), 0);
        out.count = static_cast<long>(out.points.size());
        if (out.count != expected)
            throw ConsistencyError("complement count " + out.count.get_str() + " differs from codimension " +
                                   expected.get_str());
    } else {
        const auto& w = fv.monomial().weights();
        for (long a = 0; w[0] * a < m; ++a)
            for (long b = 0; w[0] * a + w[1] * b < m; ++b) out.points.emplace_back(a + b, b);
        out.count = static_cast<long>(out.points.size());
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

ConvexRegion2D gamma_region(const FlagValuation2D& fv) {
    auto [g1, g2] = fv.edge_values();
    ConvexRegion2D r;
    r.vertices = {{0, 0}, {Rational(1) / g1, 0}, {Rational(1) / g2, Rational(1) / g2}};
    r.note = fv.is_skp() ? "depth-" + std::to_string(fv.skp().depth()) + " approximant d_K/beta_K = " +
                               (Rational(1) / g1).str()
                         : "exact";
    return r;
}

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
    return min(a.first, b.first) <= p.first && p.first <= max(a.first, b.first) && min(a.second, b.second) <= p.second &&
           p.second <= max(a.second, b.second);
}

bool segments_meet(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    int d1 = cross(c, d, a).sign(), d2 = cross(c, d, b).sign(), d3 = cross(a, b, c).sign(), d4 = cross(a, b, d).sign();
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    return (d1 == 0 && on_segment(a, c, d)) || (d2 == 0 && on_segment(b, c, d)) || (d3 == 0 && on_segment(c, a, b)) ||
           (d4 == 0 && on_segment(d, a, b));
}

}  // namespace

Rational covolume(const ConvexRegion2D& region) {
    const auto& v = region.vertices;
    const size_t n = v.size();
    if (n < 3) throw ValidationError("polygon needs at least 3 vertices");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (v[i] == v[j]) throw ValidationError("polygon has repeated vertices");
            bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (!adjacent && segments_meet(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                throw ValidationError("polygon is not simple");
        }
    Rational twice;
    for (size_t i = 0; i < n; ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % n];
        twice += p.first * q.second - q.first * p.second;
    }
    if (twice.is_zero()) throw ValidationError("polygon is degenerate");
    return twice.abs() / 2;
}

ConvexRegion2D convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return {pts, "hull"};
    std::vector<Point2> h(2 * pts.size());
    size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p).sign() <= 0) --k;
        h[k++] = p;
    }
    for (size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return {h, "hull"};
}

namespace {

// {nu in [0, 1] : g1 (1 - nu) + g2 nu >= t}
std::optional<std::pair<Rational, Rational>> exact_slice(const Rational& g1, const Rational& g2, const Rational& t) {
    Rational lo(0), hi(1);
    Rational slope = g2 - g1;
    Rational rhs = t - g1;  // slope * nu >= rhs
    if (slope.is_zero()) {
        if (rhs.sign() > 0) return std::nullopt;
    } else if (slope.sign() > 0) {
        lo = max(lo, rhs / slope);
    } else {
        hi = min(hi, rhs / slope);
    }
    if (lo > hi) return std::nullopt;
    return std::pair{lo, hi};
}

// y-exponents a0 of the degree-k basis elements with value >= kt
std::vector<long> level_exponents(const FlagValuation2D& fv, const Rational& t, long k) {
    std::vector<long> out;
    const Rational target = t * k;
    if (fv.is_skp()) {
        for (long e = 0; e <= k; ++e) {
            QMonomial q = skp_degree_monomial(fv.skp(), k, e);
            if (qmon_value(fv.skp(), q) >= target) out.push_back(q.a0);
        }
    } else {
        const auto& w = fv.monomial().weights();
        for (long b = 0; b <= k; ++b)
            if (w[0] * (k - b) + w[1] * b >= target) out.push_back(b);
    }
    return out;
}

}  // namespace

SliceReport slice_check(const FlagValuation2D& fv, const Rational& t, const std::vector<long>& levels) {
    if (t.sign() <= 0) throw ValidationError("t must be positive");
    auto [g1, g2] = fv.edge_values();
    SliceReport rep;
    rep.t = t;
    rep.exact = exact_slice(g1, g2, t);
    rep.contained = true;
    for (long k : levels) {
        if (k < 1) throw ValidationError("levels must be positive");
        SliceLevel row;
        row.level = k;
        auto ex = level_exponents(fv, t, k);
        if (!ex.empty()) {
            auto [mn, mx] = std::minmax_element(ex.begin(), ex.end());
            row.segment = std::pair{Rational(*mn, k), Rational(*mx, k)};
        }
        if (!row.segment) {
            row.contained = true;
            if (!rep.exact) row.gap = Rational(0);
        } else if (rep.exact) {
            const auto& [lo, hi] = *rep.exact;
            const auto& [flo, fhi] = *row.segment;
            row.contained = lo <= flo && fhi <= hi;
            row.gap = max((flo - lo).abs(), (fhi - hi).abs());
        }
        rep.contained = rep.contained && row.contained;
        rep.levels.push_back(row);
    }
    bool defined = std::all_of(rep.levels.begin(), rep.levels.end(), [](const SliceLevel& r) { return r.gap.has_value(); });
    if (defined && !rep.levels.empty()) {
        bool mono = true, all_zero = true;
        for (size_t i = 0; i < rep.levels.size(); ++i) {
            if (!rep.levels[i].gap->is_zero()) all_zero = false;
            if (i > 0 && *rep.levels[i].gap > *rep.levels[i - 1].gap) mono = false;
        }
        rep.shrinking = mono && (all_zero || *rep.levels.back().gap < *rep.levels.front().gap);
    }
    return rep;
}

Rational h_function(const FlagValuation2D& fv, const Rational& x) {
    if (x.sign() < 0 || x > 1) throw ValidationError("x must lie in the degree-one body [0, 1]");
    auto [g1, g2] = fv.edge_values();
    return Rational(1) / (g1 + (g2 - g1) * x);
}

Form3Report form3_check(const FlagValuation2D& fv) {
    auto [g1, g2] = fv.edge_values();
    Form3Report rep;
    // H^2 = 1 / (g1 + (g2 - g1) x)^2
    rep.integral = pp_integrate_kernel(PiecewisePolynomial::constant(1), g1, g2 - g1, 1, Rational(0), Rational(1));
    rep.volume = 2 * covolume(gamma_region(fv));
    rep.equal = rep.integral == rep.volume;
    return rep;
}

namespace {

constexpr double kCanvas = 400, kMargin = 30;

std::string fmt(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << v;
    return os.str();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string render_svg(const Figure& fig) {
    // data window: [0, T] x [0, T] with T covering every point and vertex
    Rational T(1);
    for (const auto& p : fig.points) T = max(T, max(p.first, p.second));
    for (const auto& r : fig.regions)
        for (const auto& p : r.vertices) T = max(T, max(p.first, p.second));
    const double scale = (kCanvas - 2 * kMargin) / T.to_double();
    auto X = [&](const Rational& x) { return fmt(kMargin + x.to_double() * scale); };
    auto Y = [&](const Rational& y) { return fmt(kCanvas - kMargin - y.to_double() * scale); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas << "\" height=\"" << kCanvas
       << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
    os << "<title>" << escape(fig.title) << "</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas << "\" fill=\"white\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(T) << "\" y2=\"" << Y(0)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(T)
       << "\" stroke=\"black\"/>\n";
    if (fig.draw_cone && !fig.regions.empty())
        os << "<polygon points=\"" << X(0) << "," << Y(0) << " " << X(T) << "," << Y(0) << " " << X(T) << "," << Y(T)
           << "\" fill=\"#e8eef8\" stroke=\"#8899bb\"/>\n";
    for (const auto& r : fig.regions) {
        os << "<polygon points=\"";
        for (size_t i = 0; i < r.vertices.size(); ++i)
            os << (i ? " " : "") << X(r.vertices[i].first) << "," << Y(r.vertices[i].second);
        os << "\" fill=\"#f4c7a1\" stroke=\"#b05a1e\"/>\n";
    }
    auto pts = fig.points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const auto& p : pts)
        os << "<circle cx=\"" << X(p.first) << "\" cy=\"" << Y(p.second) << "\" r=\"2\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

void emit_figure(const Figure& fig, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write figure to '" + path + "'");
    out << render_svg(fig);
    if (!out) throw std::runtime_error("failed writing figure to '" + path + "'");
}

}  // namespace nvol
