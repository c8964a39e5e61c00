#include "nvol/polynomial.hpp"

#include <sstream>

#include "nvol/errors.hpp"

namespace nvol {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw ValidationError("negative polynomial power");
    Polynomial result = constant(1), base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
    if (is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::compose_affine(const Rational& scale, const Rational& shift) const {
    Polynomial inner = linear(shift, scale);
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw ValidationError("polynomial division by zero");
    Polynomial rem = num;
    std::vector<Rational> quot(num.degree() >= den.degree() ? num.coeffs_.size() - den.coeffs_.size() + 1 : 0,
                               Rational(0));
    const Rational lead = den.leading();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int shift = rem.degree() - den.degree();
        Rational c = rem.leading() / lead;
        quot[static_cast<size_t>(shift)] = c;
        std::vector<Rational> sub(static_cast<size_t>(rem.degree() + 1), Rational(0));
        for (size_t j = 0; j < den.coeffs_.size(); ++j) sub[j + static_cast<size_t>(shift)] = den.coeffs_[j] * c;
        rem -= Polynomial(std::move(sub));
    }
    return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        Polynomial r = Polynomial::divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

int sign_changes(const std::vector<Polynomial>& chain, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = p(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

Polynomial squarefree_part(const Polynomial& p) {
    Polynomial g = Polynomial::gcd(p, p.derivative());
    return Polynomial::divmod(p, g).first;
}

// Product of the factors of odd multiplicity (Yun's square-free decomposition).
Polynomial odd_multiplicity_part(const Polynomial& p) {
    Polynomial a0 = Polynomial::gcd(p, p.derivative());
    Polynomial b = Polynomial::divmod(p, a0).first;
    Polynomial c = Polynomial::divmod(p.derivative(), a0).first;
    Polynomial d = c - b.derivative();
    Polynomial odd = Polynomial::constant(1);
    for (int i = 1; b.degree() > 0; ++i) {
        Polynomial a = Polynomial::gcd(b, d);
        if (i % 2 == 1) odd = odd * a;
        b = Polynomial::divmod(b, a).first;
        c = Polynomial::divmod(d, a).first;
        d = c - b.derivative();
    }
    return odd;
}

}  // namespace

int Polynomial::count_roots(const Rational& lo, const Rational& hi) const {
    if (is_zero()) throw ValidationError("root count of the zero polynomial");
    if (hi <= lo || degree() == 0) return 0;
    auto chain = sturm_chain(squarefree_part(*this));
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

bool Polynomial::nonnegative_on(const Rational& lo, const Rational& hi) const {
    if (is_zero()) return true;
    if ((*this)(lo).sign() < 0 || (*this)(hi).sign() < 0) return false;
    if (hi <= lo) return true;
    // sign immediately to the right of lo: first nonvanishing derivative
    Polynomial q = *this;
    while (q(lo).is_zero()) q = q.derivative();
    if (q(lo).sign() < 0) return false;
    Polynomial odd = odd_multiplicity_part(*this);
    if (odd.degree() <= 0) return true;
    int inside = odd.count_roots(lo, hi) - (odd(hi).is_zero() ? 1 : 0);
    return inside == 0;
}

std::string Polynomial::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeffs_[i].str() << ")";
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace nvol
