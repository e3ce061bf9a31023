#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vckm {

// Exact rational over int64, always reduced with positive denominator.
// Intermediate products run through __int128 and are range-checked on the
// way back, so arithmetic either returns the exact value or throws.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t g = std::gcd(a.den_, b.den_);
        __int128 num = (__int128)a.num_ * (b.den_ / g) + (__int128)b.num_ * (a.den_ / g);
        __int128 den = (__int128)(a.den_ / g) * b.den_;
        return make_checked(num, den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        std::int64_t g1 = std::gcd(abs64(a.num_), b.den_);
        std::int64_t g2 = std::gcd(abs64(b.num_), a.den_);
        __int128 num = (__int128)(a.num_ / g1) * (b.num_ / g2);
        __int128 den = (__int128)(a.den_ / g2) * (b.den_ / g1);
        return make_checked(num, den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return a * Rational(b.den_, b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Largest integer <= value.
    std::int64_t floor() const {
        if (num_ >= 0) return num_ / den_;
        return -((-num_ + den_ - 1) / den_);
    }
    // Smallest integer >= value.
    std::int64_t ceil() const { return -(-*this).floor(); }

    double to_double() const { return (double)num_ / (double)den_; }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "3", "-7/2", or decimal notation like "21.7" (parsed exactly).
    static Rational parse(std::string_view text);

private:
    static std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

    static Rational make_checked(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("Rational: value out of int64 range");
        Rational r;
        r.num_ = (std::int64_t)num;
        r.den_ = (std::int64_t)den;
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(abs64(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'"); };
    // trim
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r' || text.back() == '\n'))
        text.remove_suffix(1);
    if (text.empty()) fail();

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
        if (text.empty()) fail();
    }

    auto digits_to_i64 = [&](std::string_view s, std::int64_t& out) {
        if (s.empty()) return false;
        __int128 acc = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
            acc = acc * 10 + (c - '0');
            if (acc > INT64_MAX) return false;
        }
        out = (std::int64_t)acc;
        return true;
    };

    std::int64_t num = 0, den = 1;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        if (!digits_to_i64(text.substr(0, slash), num)) fail();
        if (!digits_to_i64(text.substr(slash + 1), den) || den == 0) fail();
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) fail();
        if (frac_part.size() > 18) fail();
        std::int64_t ip = 0, fp = 0;
        if (!int_part.empty() && !digits_to_i64(int_part, ip)) fail();
        if (!frac_part.empty() && !digits_to_i64(frac_part, fp)) fail();
        __int128 scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        __int128 n = (__int128)ip * scale + fp;
        if (n > INT64_MAX) fail();
        num = (std::int64_t)n;
        den = (std::int64_t)scale;
    } else {
        if (!digits_to_i64(text, num)) fail();
    }
    return Rational(negative ? -num : num, den);
}

}  // namespace vckm
