#include "nvol/rational.hpp"

#include <limits>

#include "nvol/errors.hpp"

namespace nvol {

namespace {

Integer pow10(long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
}

// round(|num/den|) with ties away from zero, for den > 0
Integer round_half_up(const Integer& num, const Integer& den) {
    Integer twice = 2 * abs(num) + den;
    Integer twice_den = 2 * den;
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
    return out;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw ValidationError("empty rational literal");
    auto bad = [&]() { return ValidationError("malformed rational literal '" + std::string(text) + "'"); };
    auto is_int = [](const std::string& t) {
        size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw bad();
        return Rational(Integer(num, 10), Integer(den, 10));
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (neg) whole.erase(whole.begin());
        if (whole.empty()) whole = "0";
        if (frac.empty() || !is_int(whole) || !is_int(frac) || frac[0] == '-') throw bad();
        Rational v(Integer(whole + frac, 10), pow10(static_cast<long>(frac.size())));
        return neg ? -v : v;
    }
    if (!is_int(s)) throw bad();
    return Rational(Integer(s, 10));
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw ValidationError("zero to a negative power");
        return Rational(1) / pow(-exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Integer Rational::floor() const {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

Integer Rational::ceil() const {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_fixed(int places, bool trim_zeros) const {
    Integer scaled = round_half_up(q_.get_num() * pow10(places), q_.get_den());
    std::string digits = scaled.get_str();
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(0, static_cast<size_t>(places + 1 - static_cast<int>(digits.size())), '0');
    std::string out = digits.substr(0, digits.size() - static_cast<size_t>(places));
    if (places > 0) out += "." + digits.substr(digits.size() - static_cast<size_t>(places));
    if (trim_zeros && places > 0) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    if (sign() < 0 && scaled != 0) out.insert(out.begin(), '-');
    return out;
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 1) digits = 1;
    if (is_zero()) return "0";
    Rational mag = abs();
    // exponent e with 10^e <= |x| < 10^(e+1)
    long e = static_cast<long>(mpz_sizeinbase(mag.floor().get_mpz_t(), 10)) - 1;
    if (mag < Rational(1)) {
        e = -1;
        while (mag * Rational(pow10(-e)) < Rational(1)) --e;
    } else {
        while (mag < Rational(pow10(e))) --e;
        while (mag >= Rational(pow10(e + 1))) ++e;
    }
    long shift = digits - 1 - e;
    Rational scaled = shift >= 0 ? mag * Rational(pow10(shift)) : mag / Rational(pow10(-shift));
    Integer n = round_half_up(scaled.numerator(), scaled.denominator());
    if (n == pow10(digits)) {
        n /= 10;
        ++e;
        --shift;
    }
    std::string d = n.get_str();
    std::string out;
    if (e >= -7 && e < 21) {
        if (shift <= 0) {
            out = d + std::string(static_cast<size_t>(-shift), '0');
        } else if (shift < static_cast<long>(d.size())) {
            out = d.substr(0, d.size() - static_cast<size_t>(shift)) + "." +
                  d.substr(d.size() - static_cast<size_t>(shift));
        } else {
            out = "0." + std::string(static_cast<size_t>(shift) - d.size(), '0') + d;
        }
        if (out.find('.') != std::string::npos) {
            while (out.back() == '0') out.pop_back();
            if (out.back() == '.') out.pop_back();
        }
    } else {
        out = d.substr(0, 1);
        if (d.size() > 1) out += "." + d.substr(1);
        out += "e" + std::to_string(e);
    }
    return sign() < 0 ? "-" + out : out;
}

std::int64_t to_int64(const Integer& v) {
    if (!v.fits_slong_p()) throw ValidationError("integer " + v.get_str() + " exceeds 64-bit range");
    return v.get_si();
}

}  // namespace nvol
