#pragma once

/**
 * @file coefficient_vector.hpp
 * @brief The coefficient vector a = (a_0, ..., a_n) of a tropical recurrence.
 *
 * A sequence y satisfies a when, for every shift k, the minimum of
 * a_i + y_{i+k} over 0 <= i <= n is attained at least twice.
 * a_0 and a_n are always finite; interior entries may be +infinity.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "troprec/error.hpp"
#include "troprec/scalar.hpp"

namespace troprec {

class coefficient_vector {
public:
    explicit coefficient_vector(std::vector<trop_scalar> entries) : entries_(std::move(entries)) {
        if (entries_.size() < 2)
            throw error(errc::too_few_entries, "a coefficient vector needs at least two entries");
        if (entries_.front().is_infinite()) throw error(errc::first_entry_infinite, "a_0 must be finite");
        if (entries_.back().is_infinite()) throw error(errc::last_entry_infinite, "a_n must be finite");
    }

    /// Comma-separated rationals and "inf", e.g. "0,1/2,inf,0".
    static coefficient_vector parse(std::string_view text) {
        std::vector<trop_scalar> out;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
            while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
            while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\n' || tok.back() == '\r'))
                tok.remove_suffix(1);
            if (tok.empty()) throw error(errc::malformed_token, "empty entry in vector '" + std::string(text) + "'");
            out.push_back(trop_scalar::parse(tok));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return coefficient_vector(std::move(out));
    }

    int n() const noexcept { return static_cast<int>(entries_.size()) - 1; }
    std::size_t size() const noexcept { return entries_.size(); }
    const trop_scalar& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<trop_scalar>& entries() const noexcept { return entries_; }

    bool finite(int i) const { return entries_[static_cast<std::size_t>(i)].is_finite(); }
    const rational& value(int i) const { return entries_[static_cast<std::size_t>(i)].value(); }

    /// Support J: indices with a finite entry, ascending.
    std::vector<int> support() const {
        std::vector<int> j;
        for (int i = 0; i <= n(); ++i)
            if (finite(i)) j.push_back(i);
        return j;
    }

    /// Zero set S: indices with a_i = 0.
    std::vector<int> zero_set() const {
        std::vector<int> s;
        for (int i = 0; i <= n(); ++i)
            if (finite(i) && value(i) == rational(0)) s.push_back(i);
        return s;
    }

    /// M: the largest finite entry.
    rational max_finite() const {
        rational m = value(0);
        for (int i : support()) m = max(m, value(i));
        return m;
    }

    bool all_finite() const {
        for (const auto& e : entries_)
            if (e.is_infinite()) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ',';
            s += entries_[i].str();
        }
        return s;
    }

    friend bool operator==(const coefficient_vector&, const coefficient_vector&) = default;

private:
    std::vector<trop_scalar> entries_;
};

/// True when the ascending index list is {first + t*g : 0 <= t <= m} for some g >= 1.
/// Lists with fewer than two elements do not count as progressions.
inline bool is_arithmetic_progression(const std::vector<int>& idx, int* difference = nullptr) {
    if (idx.size() < 2) return false;
    int g = idx[1] - idx[0];
    if (g < 1) return false;
    for (std::size_t t = 2; t < idx.size(); ++t)
        if (idx[t] - idx[t - 1] != g) return false;
    if (difference) *difference = g;
    return true;
}

}  // namespace troprec
