#include "nvol/bipoly.hpp"

#include <cctype>

#include "nvol/errors.hpp"

namespace nvol {

BiPoly BiPoly::monomial(const Rational& c, int xe, int ye) {
    BiPoly p;
    p.add_term({xe, ye}, c);
    return p;
}

void BiPoly::add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int BiPoly::degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
}

BiPoly BiPoly::pow(int e) const {
    if (e < 0) throw ValidationError("negative power");
    BiPoly result = monomial(1, 0, 0), base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::pair<BiPoly, BiPoly> BiPoly::divmod_x(const BiPoly& num, const BiPoly& den) {
    const int dd = den.degree_x();
    if (dd < 0) throw ValidationError("division by zero polynomial");
    // leading coefficient in x must be the constant 1
    for (const auto& [e, c] : den.terms_)
        if (e.first == dd && (e.second != 0 || c != 1)) throw ValidationError("divisor must be monic in x");
    BiPoly q, r = num;
    while (r.degree_x() >= dd) {
        const int rd = r.degree_x();
        BiPoly lead;
        for (const auto& [e, c] : r.terms_)
            if (e.first == rd) lead.add_term({rd - dd, e.second}, c);
        q += lead;
        r -= lead * den;
    }
    return {q, r};
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c.abs();
        out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        bool unit = a == 1 && (e.first || e.second);
        std::string body = unit ? "" : a.str();
        auto var = [&](char v, int k) {
            if (k == 0) return;
            if (!body.empty()) body += "*";
            body += v;
            if (k > 1) body += "^" + std::to_string(k);
        };
        var('x', e.first);
        var('y', e.second);
        out += body;
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    BiPoly run() {
        BiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw ValidationError("cannot parse polynomial at position " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiPoly expr() {
        BiPoly acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        BiPoly t = term();
        acc = neg ? acc - t : t;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    BiPoly term() {
        BiPoly acc = factor();
        for (;;) {
            skip();
            if (eat('*')) {
                acc = acc * factor();
            } else if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 'x' || s_[pos_] == 'y')) {
                acc = acc * factor();  // implicit product, e.g. 3x^2
            } else {
                return acc;
            }
        }
    }

    BiPoly factor() {
        BiPoly base = atom();
        if (eat('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    BiPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            return c == 'x' ? BiPoly::monomial(1, 1, 0) : BiPoly::monomial(1, 0, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            // p/q literal only when the slash is directly followed by a digit
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            return BiPoly::monomial(Rational::parse(s_.substr(start, pos_ - start)), 0, 0);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace

BiPoly BiPoly::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace nvol
