#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tpcert {

// Exact rational scalar. Values are kept canonical (reduced, positive
// denominator), so equality and sign queries are error-free.
class Rational {
 public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {}
    Rational(int value) : q_(value) {}
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p/q", integers, and decimal literals with an optional
    // exponent ("-3", "1/3", "0.25", "2.5e-3"). Decimal text converts
    // exactly, never through a double.
    static Rational parse(std::string_view text);

    int sign() const { return sgn(q_); }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    double to_double() const { return q_.get_d(); }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return q_; }

 private:
    mpq_class q_;
};

inline int sign(const Rational& r) { return r.sign(); }
inline Rational abs(const Rational& r) { return r.abs(); }
inline std::string to_string(const Rational& r) { return r.to_string(); }

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

[[noreturn]] inline void bad_rational(std::string_view text) {
    throw std::invalid_argument("cannot parse '" + std::string(text) + "' as a rational number");
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) detail::bad_rational(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
        if (s.empty()) detail::bad_rational(text);
    }

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        bool den_negative = false;
        if (!den.empty() && (den.front() == '+' || den.front() == '-')) {
            den_negative = den.front() == '-';
            den.remove_prefix(1);
        }
        if (!detail::all_digits(num) || !detail::all_digits(den)) detail::bad_rational(text);
        mpq_class q(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        q.canonicalize();
        if (negative != den_negative) q = -q;
        return Rational(std::move(q));
    }

    // Decimal or plain integer, with optional exponent.
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        std::string_view exp = s.substr(e + 1);
        bool exp_neg = false;
        if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
            exp_neg = exp.front() == '-';
            exp.remove_prefix(1);
        }
        if (!detail::all_digits(exp) || exp.size() > 6) detail::bad_rational(text);
        exponent = std::strtol(std::string(exp).c_str(), nullptr, 10);
        if (exp_neg) exponent = -exponent;
    }

    std::string digits;
    long frac_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mantissa.substr(0, dot);
        std::string_view fp = mantissa.substr(dot + 1);
        if (ip.empty() && fp.empty()) detail::bad_rational(text);
        if (!ip.empty() && !detail::all_digits(ip)) detail::bad_rational(text);
        if (!fp.empty() && !detail::all_digits(fp)) detail::bad_rational(text);
        digits = std::string(ip) + std::string(fp);
        frac_digits = static_cast<long>(fp.size());
    } else {
        if (!detail::all_digits(mantissa)) detail::bad_rational(text);
        digits = std::string(mantissa);
    }
    if (digits.empty()) detail::bad_rational(text);

    mpz_class num(digits, 10);
    mpz_class den(1);
    long scale = exponent - frac_digits;
    if (scale > 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(scale));
        num *= p;
    } else if (scale < 0) {
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-scale));
    }
    mpq_class q(num, den);
    q.canonicalize();
    if (negative) q = -q;
    return Rational(std::move(q));
}

}  // namespace tpcert
