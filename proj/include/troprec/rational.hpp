#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over 64-bit integers.
 *
 * Values are kept in canonical form: gcd(num, den) = 1 and den > 0.
 * Intermediate products are formed in 128 bits; a result that does not fit
 * back into 64 bits throws errc::arithmetic_overflow instead of wrapping.
 */

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "troprec/error.hpp"

namespace troprec {

class rational {
public:
    constexpr rational() = default;
    constexpr rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design of a number type
    rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }

    /// Largest integer <= *this.
    constexpr std::int64_t floor() const noexcept {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    rational frac() const { return *this - rational(floor()); }

    friend rational operator+(const rational& x, const rational& y) {
        __int128 n = static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_;
        __int128 d = static_cast<__int128>(x.den_) * y.den_;
        return from_wide(n, d);
    }
    friend rational operator-(const rational& x, const rational& y) {
        __int128 n = static_cast<__int128>(x.num_) * y.den_ - static_cast<__int128>(y.num_) * x.den_;
        __int128 d = static_cast<__int128>(x.den_) * y.den_;
        return from_wide(n, d);
    }
    friend rational operator*(const rational& x, const rational& y) {
        return from_wide(static_cast<__int128>(x.num_) * y.num_,
                         static_cast<__int128>(x.den_) * y.den_);
    }
    friend rational operator/(const rational& x, const rational& y) {
        if (y.num_ == 0) throw error(errc::division_by_zero, "rational division by zero");
        return from_wide(static_cast<__int128>(x.num_) * y.den_,
                         static_cast<__int128>(x.den_) * y.num_);
    }
    rational operator-() const {
        if (num_ == INT64_MIN) throw error(errc::arithmetic_overflow, "rational negation");
        rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    friend constexpr bool operator==(const rational&, const rational&) = default;
    friend std::strong_ordering operator<=>(const rational& x, const rational& y) {
        __int128 l = static_cast<__int128>(x.num_) * y.den_;
        __int128 r = static_cast<__int128>(y.num_) * x.den_;
        return l <=> r;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "-p" or "p/q". Throws errc::malformed_token.
    static rational parse(std::string_view text) {
        auto bad = [&] { return error(errc::malformed_token, "not a rational: '" + std::string(text) + "'"); };
        auto to_int = [&](std::string_view s) {
            std::int64_t v = 0;
            if (!s.empty() && s.front() == '+') s.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw bad();
            return v;
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return rational(to_int(text));
        std::string_view den = text.substr(slash + 1);
        if (!den.empty() && (den.front() == '-' || den.front() == '+')) throw bad();
        std::int64_t d = to_int(den);
        if (d == 0) throw bad();
        return rational(to_int(text.substr(0, slash)), d);
    }

    friend std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

private:
    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw error(errc::division_by_zero, "zero denominator");
        *this = from_wide(n, d);
    }

    static rational from_wide(__int128 n, __int128 d) {
        if (d == 0) throw error(errc::division_by_zero, "zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        constexpr __int128 lo = INT64_MIN + 1;  // keep negation total
        constexpr __int128 hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) throw error(errc::arithmetic_overflow, "rational result exceeds 64 bits");
        rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline rational min(const rational& x, const rational& y) { return y < x ? y : x; }
inline rational max(const rational& x, const rational& y) { return x < y ? y : x; }

/// Least common multiple of denominators; the smallest q > 0 with q*r integral for every r.
template <typename Range>
std::int64_t common_denominator(const Range& values) {
    std::int64_t q = 1;
    for (const rational& r : values) {
        std::int64_t g = std::gcd(q, r.den());
        __int128 l = static_cast<__int128>(q / g) * r.den();
        if (l > INT64_MAX) throw error(errc::arithmetic_overflow, "common denominator exceeds 64 bits");
        q = static_cast<std::int64_t>(l);
    }
    return q;
}

}  // namespace troprec
