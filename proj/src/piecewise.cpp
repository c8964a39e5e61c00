#include "nvol/piecewise.hpp"

#include <algorithm>

#include "nvol/errors.hpp"

namespace nvol {

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces,
                                         Rational head, Rational tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
    if (breakpoints.empty()) {
        if (!pieces.empty()) throw ValidationError("pieces given without breakpoints");
        if (head_ != tail_) throw ValidationError("head and tail differ but there is no breakpoint");
        return;
    }
    if (pieces.size() + 1 != breakpoints.size())
        throw ValidationError("need exactly one piece per interval between breakpoints");
    for (size_t i = 1; i < breakpoints.size(); ++i)
        if (!(breakpoints[i - 1] < breakpoints[i])) throw ValidationError("breakpoints must be strictly increasing");

    breaks_.push_back(breakpoints[0]);
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (!pieces_.empty() && pieces_.back() == pieces[i]) {
            breaks_.back() = breakpoints[i + 1];
            continue;
        }
        pieces_.push_back(std::move(pieces[i]));
        breaks_.push_back(breakpoints[i + 1]);
    }
}

int PiecewisePolynomial::max_degree() const {
    int d = 0;
    for (const auto& p : pieces_) d = std::max(d, p.degree());
    return d;
}

namespace {

// index i with b_i <= t < b_{i+1}; caller guarantees b_0 <= t < b_N
size_t piece_index_right(const std::vector<Rational>& b, const Rational& t) {
    auto it = std::upper_bound(b.begin(), b.end(), t);
    return static_cast<size_t>(it - b.begin()) - 1;
}

// index i with b_i < t <= b_{i+1}; caller guarantees b_0 < t <= b_N
size_t piece_index_left(const std::vector<Rational>& b, const Rational& t) {
    auto it = std::lower_bound(b.begin(), b.end(), t);
    return static_cast<size_t>(it - b.begin()) - 1;
}

}  // namespace

Rational PiecewisePolynomial::operator()(const Rational& t) const {
    if (breaks_.empty() || t <= breaks_.front()) return head_;
    if (t > breaks_.back()) return tail_;
    if (t == breaks_.back()) return pieces_.back()(t);
    return pieces_[piece_index_right(breaks_, t)](t);
}

Rational PiecewisePolynomial::left_limit(const Rational& t) const {
    if (breaks_.empty() || t <= breaks_.front()) return head_;
    if (t > breaks_.back()) return tail_;
    return pieces_[piece_index_left(breaks_, t)](t);
}

Rational PiecewisePolynomial::right_limit(const Rational& t) const {
    if (breaks_.empty() || t < breaks_.front()) return head_;
    if (t >= breaks_.back()) return tail_;
    return pieces_[piece_index_right(breaks_, t)](t);
}

PiecewisePolynomial PiecewisePolynomial::compose_affine(const Rational& scale, const Rational& shift) const {
    if (scale.sign() <= 0) throw ValidationError("affine reparametrization needs a positive scale");
    std::vector<Rational> b;
    std::vector<Polynomial> p;
    for (const auto& x : breaks_) b.push_back((x - shift) / scale);
    for (const auto& q : pieces_) p.push_back(q.compose_affine(scale, shift));
    return {std::move(b), std::move(p), head_, tail_};
}

PiecewisePolynomial PiecewisePolynomial::scaled(const Rational& c) const {
    std::vector<Polynomial> p;
    for (const auto& q : pieces_) p.push_back(q * c);
    return {breaks_, std::move(p), head_ * c, tail_ * c};
}

bool PiecewisePolynomial::is_nonincreasing() const {
    for (const auto& b : breaks_)
        if (left_limit(b) < right_limit(b)) return false;
    for (size_t i = 0; i < pieces_.size(); ++i)
        if (!(-pieces_[i].derivative()).nonnegative_on(breaks_[i], breaks_[i + 1])) return false;
    return true;
}

Measure1D::Measure1D(PiecewisePolynomial density, std::vector<Atom> atoms) : density_(std::move(density)) {
    if (!density_.head().is_zero() || !density_.tail().is_zero())
        throw ValidationError("measure density must vanish outside a bounded interval");
    std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) { return x.location < y.location; });
    for (auto& a : atoms) {
        if (a.mass.sign() < 0) throw ValidationError("negative atom mass");
        if (a.mass.is_zero()) continue;
        if (!atoms_.empty() && atoms_.back().location == a.location)
            atoms_.back().mass += a.mass;
        else
            atoms_.push_back(std::move(a));
    }
}

Rational Measure1D::total_mass() const {
    Rational m = pp_integrate(density_, std::nullopt, std::nullopt);
    for (const auto& a : atoms_) m += a.mass;
    return m;
}

Measure1D Measure1D::scaled(const Rational& c) const {
    std::vector<Atom> atoms;
    for (const auto& a : atoms_) atoms.push_back({a.location, a.mass * c});
    return {density_.scaled(c), std::move(atoms)};
}

std::pair<Rational, Rational> Measure1D::support() const {
    std::optional<Rational> lo, hi;
    auto widen = [&](const Rational& x, const Rational& y) {
        lo = lo ? min(*lo, x) : x;
        hi = hi ? max(*hi, y) : y;
    };
    for (const auto& a : atoms_) widen(a.location, a.location);
    const auto& b = density_.breakpoints();
    for (size_t i = 0; i < density_.pieces().size(); ++i)
        if (!density_.pieces()[i].is_zero()) widen(b[i], b[i + 1]);
    if (!lo) throw ValidationError("zero measure has empty support");
    return {*lo, *hi};
}

namespace {

bool le(const Bound& lo, const Bound& hi) { return !lo || !hi || *lo <= *hi; }

// Antiderivative term y^(k+1)/(k+1) evaluated at y; k != -1.
Rational power_term(const Rational& y, long k) { return y.pow(k + 1) / Rational(k + 1); }

}  // namespace

Rational integrate_over_linear_power(const Polynomial& p, const Kernel& k, const Bound& lo, const Bound& hi) {
    if (!le(lo, hi)) throw ValidationError("integration bounds out of order");
    if (p.is_zero() || (lo && hi && *lo == *hi)) return Rational(0);
    if (k.power < 0) throw ValidationError("kernel power must be nonnegative");

    if (k.power == 0 || k.b.is_zero()) {
        if (k.power > 0 && k.a.sign() <= 0) throw ValidationError("kernel is not positive on the integration range");
        if (!lo || !hi) throw ValidationError("integral of a nonzero polynomial over an unbounded range diverges");
        Polynomial anti = p.antiderivative();
        Rational value = anti(*hi) - anti(*lo);
        return k.power == 0 ? value : value / k.a.pow(k.power);
    }

    // infinite ends are only admissible where a + bt -> +inf
    if (!lo && k.b.sign() > 0) throw ValidationError("kernel is not positive on the integration range");
    if (!hi && k.b.sign() < 0) throw ValidationError("kernel is not positive on the integration range");
    if (lo && (k.a + k.b * *lo).sign() <= 0) throw ValidationError("kernel is not positive on the integration range");
    if (hi && (k.a + k.b * *hi).sign() <= 0) throw ValidationError("kernel is not positive on the integration range");

    // t = (y - a)/b
    Polynomial q = p.compose_affine(Rational(1) / k.b, -k.a / k.b);
    Rational total(0);
    auto coeffs = q.coefficients();
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        long e = static_cast<long>(j) - k.power;
        if (e == -1) throw ValidationError("kernel integral would produce a logarithm (polynomial degree too high)");
        if ((!lo || !hi) && e >= -1) throw ValidationError("kernel integral diverges at infinity");
        Rational upper = hi ? power_term(k.a + k.b * *hi, e) : Rational(0);
        Rational lower = lo ? power_term(k.a + k.b * *lo, e) : Rational(0);
        total += coeffs[j] * (upper - lower);
    }
    return total / k.b;
}

namespace {

// Sum of integral over the head, every piece and the tail, each clipped to [lo, hi].
template <class F>
Rational over_segments(const PiecewisePolynomial& f, const Bound& lo, const Bound& hi, F&& segment) {
    if (!le(lo, hi)) throw ValidationError("integration bounds out of order");
    auto clip = [&](const Bound& a, const Bound& b, const Polynomial& p) -> Rational {
        Bound x = a, y = b;
        if (lo && (!x || *x < *lo)) x = lo;
        if (hi && (!y || *y > *hi)) y = hi;
        if (x && y && *x >= *y) return Rational(0);
        return segment(p, x, y);
    };
    const auto& b = f.breakpoints();
    if (b.empty()) return clip(std::nullopt, std::nullopt, Polynomial::constant(f.head()));
    Rational total = clip(std::nullopt, b.front(), Polynomial::constant(f.head()));
    for (size_t i = 0; i < f.pieces().size(); ++i) total += clip(b[i], b[i + 1], f.pieces()[i]);
    total += clip(b.back(), std::nullopt, Polynomial::constant(f.tail()));
    return total;
}

}  // namespace

Rational pp_integrate(const PiecewisePolynomial& f, const Bound& lo, const Bound& hi) {
    return over_segments(f, lo, hi, [](const Polynomial& p, const Bound& x, const Bound& y) {
        return integrate_over_linear_power(p, Kernel{}, x, y);
    });
}

Rational pp_integrate_kernel(const PiecewisePolynomial& f, const Rational& a, const Rational& b, int n,
                             const Bound& lo, const Bound& hi) {
    if (n < 1) throw ValidationError("kernel order n must be positive");
    Kernel k{a, b, n + 1};
    return over_segments(f, lo, hi, [&](const Polynomial& p, const Bound& x, const Bound& y) {
        if (!b.is_zero() && p.degree() >= n)
            throw ValidationError("piece degree " + std::to_string(p.degree()) + " >= n = " + std::to_string(n) +
                                  " would produce a logarithm");
        return integrate_over_linear_power(p, k, x, y);
    });
}

Rational pp_integrate_kernel(const PiecewisePolynomial& f, const Rational& a, const Rational& b, int n) {
    return pp_integrate_kernel(f, a, b, n, std::nullopt, std::nullopt);
}

Measure1D neg_differential(const PiecewisePolynomial& f) {
    if (!f.tail().is_zero()) throw ValidationError("curve must vanish for large t");
    if (!f.is_nonincreasing()) throw ValidationError("curve is increasing somewhere");
    std::vector<Polynomial> density;
    for (const auto& p : f.pieces()) density.push_back(-p.derivative());
    std::vector<Atom> atoms;
    for (const auto& b : f.breakpoints()) {
        Rational jump = f.left_limit(b) - f.right_limit(b);
        if (!jump.is_zero()) atoms.push_back({b, jump});
    }
    if (f.breakpoints().empty()) return {};
    return {PiecewisePolynomial(f.breakpoints(), std::move(density), Rational(0), Rational(0)), std::move(atoms)};
}

Rational measure_moment(const Measure1D& mu, int power, const std::optional<Kernel>& kernel) {
    if (power < 0) throw ValidationError("moment power must be nonnegative");
    Kernel k = kernel.value_or(Kernel{});
    Polynomial monomial = Polynomial::linear(0, 1).pow(power);
    Rational total(0);
    for (const auto& a : mu.atoms()) {
        Rational base = k.a + k.b * a.location;
        if (k.power > 0 && base.sign() <= 0) throw ValidationError("kernel vanishes on the support of the measure");
        total += a.mass * a.location.pow(power) / base.pow(k.power);
    }
    const auto& d = mu.density();
    for (size_t i = 0; i < d.pieces().size(); ++i)
        total += integrate_over_linear_power(d.pieces()[i] * monomial, k, d.breakpoints()[i], d.breakpoints()[i + 1]);
    return total;
}

}  // namespace nvol
