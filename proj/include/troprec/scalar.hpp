#pragma once

/**
 * @file scalar.hpp
 * @brief Elements of the min-plus semiring: an exact rational or +infinity.
 *
 * Infinity is a distinct state, not a large sentinel value:
 *   inf + x = inf,  min(inf, x) = x,  inf > every finite value.
 */

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "troprec/rational.hpp"

namespace troprec {

class trop_scalar {
public:
    /// Defaults to the additive (min) identity.
    constexpr trop_scalar() = default;
    trop_scalar(rational v) : value_(v) {}  // NOLINT: implicit lift of finite values
    trop_scalar(std::int64_t v) : value_(rational(v)) {}  // NOLINT

    static constexpr trop_scalar infinity() { return trop_scalar(); }

    bool is_finite() const noexcept { return value_.has_value(); }
    bool is_infinite() const noexcept { return !value_.has_value(); }

    /// The finite value; precondition is_finite().
    const rational& value() const { return *value_; }

    /// Tropical multiplication (ordinary +).
    friend trop_scalar operator+(const trop_scalar& x, const trop_scalar& y) {
        if (x.is_infinite() || y.is_infinite()) return infinity();
        return trop_scalar(*x.value_ + *y.value_);
    }

    /// Tropical addition (min).
    friend trop_scalar tmin(const trop_scalar& x, const trop_scalar& y) { return y < x ? y : x; }

    friend bool operator==(const trop_scalar& x, const trop_scalar& y) { return x.value_ == y.value_; }
    friend std::strong_ordering operator<=>(const trop_scalar& x, const trop_scalar& y) {
        if (x.is_infinite() && y.is_infinite()) return std::strong_ordering::equal;
        if (x.is_infinite()) return std::strong_ordering::greater;
        if (y.is_infinite()) return std::strong_ordering::less;
        return *x.value_ <=> *y.value_;
    }

    std::string str() const { return is_finite() ? value_->str() : "inf"; }

    /// Accepts the forms understood by rational::parse plus "inf".
    static trop_scalar parse(std::string_view text) {
        if (text == "inf" || text == "+inf") return infinity();
        return trop_scalar(rational::parse(text));
    }

    friend std::ostream& operator<<(std::ostream& os, const trop_scalar& s) { return os << s.str(); }

private:
    std::optional<rational> value_;
};

}  // namespace troprec
