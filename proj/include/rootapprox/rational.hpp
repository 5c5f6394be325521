#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "rootapprox/errors.hpp"

namespace rootapprox {

/// Exact rational number on int64, always normalized: den > 0, gcd(|num|, den) = 1.
/// Holds grid exponents and nest powers, where float drift would break the
/// telescoping identities between level powers and term exponents.
class rational {
public:
    constexpr rational() = default;
    constexpr rational(std::int64_t n) : num_(n), den_(1) {}
    rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const { return den_ == 1; }

    friend rational operator+(rational a, rational b) {
        return make128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend rational operator-(rational a, rational b) {
        return make128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend rational operator*(rational a, rational b) {
        return make128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend rational operator/(rational a, rational b) {
        if (b.num_ == 0) raise(errc::zero_power, "division of rational by zero");
        return make128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    rational operator-() const {
        rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    rational& operator+=(rational b) { return *this = *this + b; }
    rational& operator-=(rational b) { return *this = *this - b; }
    rational& operator*=(rational b) { return *this = *this * b; }
    rational& operator/=(rational b) { return *this = *this / b; }

    friend bool operator==(rational a, rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(rational a, rational b) { return !(a == b); }
    friend bool operator<(rational a, rational b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(rational a, rational b) { return b < a; }
    friend bool operator<=(rational a, rational b) { return !(b < a); }
    friend bool operator>=(rational a, rational b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, rational r) { return os << r.str(); }

private:
    using i128 = __int128;

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static rational make128(i128 n, i128 d) {
        if (d == 0) raise(errc::validation_error, "rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr i128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            raise(errc::validation_error, "rational overflow past 64 bits");
        rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    void normalize() {
        if (den_ == 0) raise(errc::validation_error, "rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(std::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline rational abs(rational r) { return r < rational(0) ? -r : r; }

/// gcd on rationals: the coarsest grid spacing containing both.
inline rational gcd(rational a, rational b) {
    a = abs(a);
    b = abs(b);
    if (a.num() == 0) return b;
    if (b.num() == 0) return a;
    std::int64_t n = std::gcd(a.num() * b.den(), b.num() * a.den());
    return rational(n, a.den() * b.den());
}

/// True if a is an integer multiple of b (b != 0).
inline bool divides(rational b, rational a) {
    if (b.num() == 0) return a.num() == 0;
    rational q = a / b;
    return q.is_integer();
}

/// Parse "p/q", "p", or a plain decimal ("0.5" -> 1/2). Decimal parsing is
/// exact for short fractions; config exponents are required to be rational.
inline rational parse_rational(const std::string& s) {
    auto bad = [&] { raise(errc::parse_error, "not a rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            std::int64_t n = std::stoll(s.substr(0, slash));
            std::int64_t d = std::stoll(s.substr(slash + 1));
            return rational(n, d);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return rational(std::stoll(s));
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (fp.size() > 15) bad();
        bool neg = !ip.empty() && ip[0] == '-';
        std::int64_t whole = ip.empty() || ip == "-" || ip == "+" ? 0 : std::stoll(ip);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        std::int64_t frac = fp.empty() ? 0 : std::stoll(fp);
        std::int64_t n = std::abs(whole) * den + frac;
        return rational(neg || whole < 0 ? -n : n, den);
    } catch (const std::invalid_argument&) {
        bad();
    } catch (const std::out_of_range&) {
        bad();
    }
    return rational(0);
}

} // namespace rootapprox
