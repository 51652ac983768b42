#pragma once

/**
 * @file recurrence.hpp
 * @brief Satisfaction and minimality of finite words and periodic sequences.
 *
 * For a finite word z_0..z_N and a vector a of length n+1:
 *   - z satisfies a when every complete window k in [0, N-n] attains
 *     min_i {a_i + z_{k+i}} at least twice (infinite a_i never compete);
 *   - a satisfying z is minimal when every interior position j in
 *     [n, N-n] is tight in some window k in [j-n, j], i.e.
 *     a_{j-k} + z_j equals that window's minimum.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "troprec/coefficient_vector.hpp"
#include "troprec/error.hpp"
#include "troprec/rational.hpp"

namespace troprec {

/// Finite view z_0..z_N of a sequence; first_index records where z_0 sits in Z.
struct finite_word {
    std::vector<rational> values;
    std::int64_t first_index = 0;

    int last() const noexcept { return static_cast<int>(values.size()) - 1; }
    std::size_t size() const noexcept { return values.size(); }
    const rational& operator[](std::size_t i) const { return values[i]; }

    /// Comma-separated rationals.
    static finite_word parse(std::string_view text) {
        finite_word w;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\n')) tok.remove_suffix(1);
            w.values.push_back(rational::parse(tok));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return w;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s += ',';
            s += values[i].str();
        }
        return s;
    }

    friend bool operator==(const finite_word&, const finite_word&) = default;
};

struct window_report {
    int k = 0;
    std::optional<rational> min_value;  ///< empty only when every coefficient is infinite
    std::vector<int> argmin;            ///< coefficient indices i attaining the minimum
    bool vacuous = false;
};

namespace detail {
template <typename ValueAt>
window_report evaluate_window(const coefficient_vector& a, std::int64_t k, ValueAt&& value_at) {
    window_report r;
    r.k = static_cast<int>(k);
    for (int i = 0; i <= a.n(); ++i) {
        if (!a.finite(i)) continue;
        rational v = a.value(i) + value_at(k + i);
        if (!r.min_value || v < *r.min_value) {
            r.min_value = v;
            r.argmin.assign(1, i);
        } else if (v == *r.min_value) {
            r.argmin.push_back(i);
        }
    }
    r.vacuous = !r.min_value.has_value();
    return r;
}

inline bool window_ok(const window_report& r) { return r.vacuous || r.argmin.size() >= 2; }
}  // namespace detail

inline window_report evaluate_window(const coefficient_vector& a, const finite_word& z, int k) {
    if (k < 0 || k > z.last() - a.n())
        throw error(errc::window_out_of_range, "window " + std::to_string(k) + " is not inside a word of length " +
                                                   std::to_string(z.size()));
    return detail::evaluate_window(a, k, [&](std::int64_t p) -> const rational& {
        return z.values[static_cast<std::size_t>(p)];
    });
}

/// Full verdict for a word: failing windows, and minimality when satisfied.
struct word_check {
    bool satisfies = false;
    bool minimal = false;
    std::vector<int> failing_windows;
    std::vector<int> non_minimal_positions;
    /// (j, k): interior position j is tight in window k.
    std::vector<std::pair<int, int>> tight_witness;
};

inline word_check check_word(const coefficient_vector& a, const finite_word& z) {
    const int n = a.n();
    if (z.last() < n)
        throw error(errc::word_too_short, "word of length " + std::to_string(z.size()) + " has no complete window for n=" +
                                              std::to_string(n));
    word_check out;
    std::vector<window_report> windows;
    windows.reserve(static_cast<std::size_t>(z.last() - n + 1));
    for (int k = 0; k <= z.last() - n; ++k) {
        windows.push_back(evaluate_window(a, z, k));
        if (!detail::window_ok(windows.back())) out.failing_windows.push_back(k);
    }
    out.satisfies = out.failing_windows.empty();
    if (!out.satisfies) return out;

    for (int j = n; j <= z.last() - n; ++j) {
        std::optional<int> witness;
        for (int k = j - n; k <= j && !witness; ++k) {
            const auto& w = windows[static_cast<std::size_t>(k)];
            if (w.vacuous) continue;
            if (std::find(w.argmin.begin(), w.argmin.end(), j - k) != w.argmin.end()) witness = k;
        }
        if (witness)
            out.tight_witness.emplace_back(j, *witness);
        else
            out.non_minimal_positions.push_back(j);
    }
    out.minimal = out.non_minimal_positions.empty();
    return out;
}

inline bool satisfies(const coefficient_vector& a, const finite_word& z) { return check_word(a, z).satisfies; }

struct minimality_result {
    bool minimal = false;
    std::vector<std::pair<int, int>> witnesses;
    std::vector<int> failing_positions;
};

/// Minimality is only defined for satisfying words; throws errc::not_satisfying otherwise.
inline minimality_result is_minimal(const coefficient_vector& a, const finite_word& z) {
    auto c = check_word(a, z);
    if (!c.satisfies)
        throw error(errc::not_satisfying, "window " + std::to_string(c.failing_windows.front()) +
                                              " attains its minimum only once");
    return {c.minimal, std::move(c.tight_witness), std::move(c.non_minimal_positions)};
}

inline bool satisfies_and_minimal(const coefficient_vector& a, const finite_word& z) {
    auto c = check_word(a, z);
    return c.satisfies && c.minimal;
}

/**
 * Bi-infinite sequence y_{q*d + r} = values[r] + q * drift.
 * Sloped solutions along an edge of slope sigma have drift = -sigma * d.
 */
struct periodic_sequence {
    int period = 1;
    std::vector<rational> values;
    rational drift;

    rational at(std::int64_t i) const {
        std::int64_t q = i / period;
        std::int64_t r = i % period;
        if (r < 0) {
            r += period;
            --q;
        }
        return values[static_cast<std::size_t>(r)] + rational(q) * drift;
    }

    finite_word materialize(std::int64_t lo, std::int64_t hi) const {
        finite_word w;
        w.first_index = lo;
        for (std::int64_t i = lo; i <= hi; ++i) w.values.push_back(at(i));
        return w;
    }

    /// "d:v0,v1,...:drift", the drift part optional.
    static periodic_sequence parse(std::string_view text) {
        auto bad = [&] { return error(errc::invalid_period, "expected 'd:v0,...,v(d-1)[:drift]', got '" + std::string(text) + "'"); };
        auto c1 = text.find(':');
        if (c1 == std::string_view::npos) throw bad();
        auto c2 = text.find(':', c1 + 1);
        periodic_sequence p;
        rational d = rational::parse(text.substr(0, c1));
        if (!d.is_integer() || d <= rational(0) || d > rational(1 << 20)) throw bad();
        p.period = static_cast<int>(d.num());
        p.values = finite_word::parse(text.substr(c1 + 1, c2 == std::string_view::npos ? text.npos : c2 - c1 - 1)).values;
        if (c2 != std::string_view::npos) p.drift = rational::parse(text.substr(c2 + 1));
        if (static_cast<int>(p.values.size()) != p.period) throw bad();
        return p;
    }
};

struct periodic_check {
    bool satisfies = false;
    bool minimal = false;
    std::vector<int> failing_windows;        ///< residues k in [0, d)
    std::vector<int> non_minimal_positions;  ///< residues j in [0, d)
};

/**
 * Decides the bi-infinite conditions. Windows k and k+d differ by the constant
 * drift in every entry, so they share argmin sets; checking k, j in [0, d)
 * therefore covers all of Z.
 */
inline periodic_check verify_periodic(const coefficient_vector& a, const periodic_sequence& p) {
    if (p.period <= 0 || static_cast<int>(p.values.size()) != p.period)
        throw error(errc::invalid_period, "period must be positive and match the number of values");
    const int n = a.n();
    auto value_at = [&](std::int64_t i) { return p.at(i); };

    periodic_check out;
    for (int k = 0; k < p.period; ++k)
        if (!detail::window_ok(detail::evaluate_window(a, k, value_at))) out.failing_windows.push_back(k);
    out.satisfies = out.failing_windows.empty();
    if (!out.satisfies) return out;

    for (int j = 0; j < p.period; ++j) {
        bool tight = false;
        for (int k = j - n; k <= j && !tight; ++k) {
            auto w = detail::evaluate_window(a, k, value_at);
            tight = std::find(w.argmin.begin(), w.argmin.end(), j - k) != w.argmin.end();
        }
        if (!tight) out.non_minimal_positions.push_back(j);
    }
    out.minimal = out.non_minimal_positions.empty();
    return out;
}

/**
 * Grid pair for the equalizing map. c and e list the grid points below 1:
 * 0 = c_0 < c_1 < ... < c_m < 1 (the closing point c_{m+1} = 1 is implicit),
 * likewise for e.
 */
struct equalize_grids {
    std::vector<rational> c;
    std::vector<rational> e;

    void validate() const {
        auto check = [](const std::vector<rational>& g, const char* name) {
            if (g.empty() || g.front() != rational(0))
                throw error(errc::invalid_grid, std::string(name) + " grid must start at 0");
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (g[i] >= rational(1)) throw error(errc::invalid_grid, std::string(name) + " grid points must be < 1");
                if (i && g[i] <= g[i - 1]) throw error(errc::invalid_grid, std::string(name) + " grid must increase strictly");
            }
        };
        check(c, "c");
        check(e, "e");
        if (c.size() != e.size()) throw error(errc::invalid_grid, "c and e grids differ in length");
    }
};

/// x_i = floor(y_i) + e_j where c_j <= frac(y_i) < c_{j+1}.
inline rational equalize_value(const rational& y, const equalize_grids& g) {
    rational f = y.frac();
    auto it = std::upper_bound(g.c.begin(), g.c.end(), f);
    auto j = static_cast<std::size_t>(it - g.c.begin()) - 1;
    return rational(y.floor()) + g.e[j];
}

inline finite_word equalize(const finite_word& y, const equalize_grids& g) {
    g.validate();
    finite_word x;
    x.first_index = y.first_index;
    x.values.reserve(y.size());
    for (const auto& v : y.values) x.values.push_back(equalize_value(v, g));
    return x;
}

/// Coordinatewise min(b1 + z1_i, b2 + z2_i).
inline finite_word pointwise_min(const finite_word& z1, const finite_word& z2, const rational& b1, const rational& b2) {
    if (z1.size() != z2.size())
        throw error(errc::length_mismatch, "words of lengths " + std::to_string(z1.size()) + " and " +
                                               std::to_string(z2.size()));
    finite_word out;
    out.first_index = z1.first_index;
    for (std::size_t i = 0; i < z1.size(); ++i) out.values.push_back(min(b1 + z1[i], b2 + z2[i]));
    return out;
}

}  // namespace troprec
