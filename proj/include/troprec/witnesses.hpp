#pragma once

/**
 * @file witnesses.hpp
 * @brief Constructive families of sequences satisfying a vector.
 *
 * Each generator returns a finite view over a caller-chosen index range of a
 * bi-infinite sequence. Only windows lying fully inside the range are
 * meaningful; callers check them with check_word.
 *
 *  - bump family:      zero sequence raised by b_l on k_l + S when the zero
 *                      set S is not an arithmetic progression;
 *  - parity family:    period-2 background modified on [0, n] when the zero
 *                      set is the even indices and odd entries differ;
 *  - period-3 family:  period-3 background (0, 2b, b) with three raised
 *                      entries for a = (0, b, c, 0), c > 2b (or mirrored);
 *  - polygon family:   piecewise-linear concave sequence whose slopes are the
 *                      negated edge slopes of P(a).
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "troprec/coefficient_vector.hpp"
#include "troprec/error.hpp"
#include "troprec/newton_polygon.hpp"
#include "troprec/recurrence.hpp"

namespace troprec {

/// Inclusive index interval [lo, hi].
struct index_range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t length() const noexcept { return hi - lo + 1; }
};

namespace detail {

inline void require_axis_normalized(const coefficient_vector& a) {
    if (a.value(0) != rational(0) || a.value(a.n()) != rational(0))
        throw error(errc::not_normalized, "expected a_0 = a_n = 0 (normalize an edge first)");
    for (int i : a.support())
        if (a.value(i) < rational(0)) throw error(errc::not_normalized, "expected nonnegative entries");
}

inline void require_range(const index_range& r) {
    if (r.hi < r.lo) throw error(errc::word_too_short, "empty index range");
}

template <typename F>
finite_word tabulate(const index_range& r, F&& f) {
    require_range(r);
    finite_word w;
    w.first_index = r.lo;
    w.values.reserve(static_cast<std::size_t>(r.length()));
    for (std::int64_t i = r.lo; i <= r.hi; ++i) w.values.push_back(f(i));
    return w;
}

}  // namespace detail

/**
 * Zero sequence with y_{k_l + i} = b_l for every i in S and every shift k_l.
 * Requires an axis-normalized a whose zero set S is not an arithmetic
 * progression, shifts increasing by more than 2n, and 0 < b_l below every
 * positive a_i.
 */
inline finite_word generate_bump_witness(const coefficient_vector& a, const std::vector<std::int64_t>& shifts,
                                         const std::vector<rational>& bumps, const index_range& range) {
    detail::require_axis_normalized(a);
    const auto zero = a.zero_set();
    if (is_arithmetic_progression(zero))
        throw error(errc::progression_support, "the zero set is an arithmetic progression; every minimal sequence is periodic");
    if (shifts.size() != bumps.size()) throw error(errc::length_mismatch, "one bump per shift is required");
    if (shifts.empty()) throw error(errc::length_mismatch, "at least one shift is required");
    for (std::size_t l = 1; l < shifts.size(); ++l)
        if (shifts[l] - shifts[l - 1] <= 2 * a.n())
            throw error(errc::shifts_too_close, "consecutive shifts must differ by more than 2n = " + std::to_string(2 * a.n()));

    std::optional<rational> min_positive;
    for (int i : a.support())
        if (a.value(i) > rational(0) && (!min_positive || a.value(i) < *min_positive)) min_positive = a.value(i);
    for (const auto& b : bumps)
        if (b <= rational(0) || (min_positive && b >= *min_positive))
            throw error(errc::bump_out_of_range, "bump " + b.str() + " must be positive and below every positive a_i");

    return detail::tabulate(range, [&](std::int64_t x) {
        for (std::size_t l = 0; l < shifts.size(); ++l) {
            std::int64_t off = x - shifts[l];
            if (std::binary_search(zero.begin(), zero.end(), static_cast<int>(off)) && off >= 0 && off <= a.n())
                return bumps[l];
        }
        return rational(0);
    });
}

/**
 * Non-periodic sequence for an axis-normalized a whose zero set is exactly the
 * even indices. With c the least odd entry, e the next larger one and C the
 * odd indices carrying c, the background (even -> c, odd -> 0) is modified on
 * [0, n]: even -> c + q, odd in C -> q, other odd -> 0. Requires 0 < q <= e - c.
 */
inline finite_word generate_parity_witness(const coefficient_vector& a, const rational& q, const index_range& range) {
    detail::require_axis_normalized(a);
    const int n = a.n();
    std::vector<int> evens;
    for (int i = 0; i <= n; i += 2) evens.push_back(i);
    if (n % 2 != 0 || a.zero_set() != evens)
        throw error(errc::inapplicable_shape, "the zero set must be exactly the even indices 0, 2, ..., n");

    std::vector<trop_scalar> odd;
    for (int i = 1; i < n; i += 2) odd.push_back(a[static_cast<std::size_t>(i)]);
    const trop_scalar c = *std::min_element(odd.begin(), odd.end());
    trop_scalar e = trop_scalar::infinity();
    for (const auto& v : odd)
        if (v > c) e = tmin(e, v);
    if (c.is_infinite() || std::all_of(odd.begin(), odd.end(), [&](const trop_scalar& v) { return v == c; }))
        throw error(errc::odd_entries_equal, "all odd entries are equal; every minimal sequence has period 2");
    if (q <= rational(0) || (e.is_finite() && q > e.value() - c.value()))
        throw error(errc::q_out_of_range, "q must satisfy 0 < q <= e - c = " +
                                              (e.is_finite() ? (e.value() - c.value()).str() : std::string("inf")));

    const rational cv = c.value();
    return detail::tabulate(range, [&](std::int64_t x) {
        const bool even = x % 2 == 0;
        if (x < 0 || x > n) return even ? cv : rational(0);
        if (even) return cv + q;
        return a[static_cast<std::size_t>(x)] == c ? q : rational(0);
    });
}

/**
 * For a = (0, b, c, 0) with c > 2b > 0: background y_{3i} = 0, y_{3i+1} = 2b,
 * y_{3i+2} = b, raised to y_1 = 2b + e, y_2 = b + e, y_4 = 2b + e with
 * 0 < e <= c - 2b. The mirrored case b > 2c is produced by reflection.
 */
inline finite_word generate_period3_witness(const coefficient_vector& a, const rational& e, const index_range& range) {
    detail::require_range(range);
    if (a.n() != 3 || !a.all_finite() || a.value(0) != rational(0) || a.value(3) != rational(0))
        throw error(errc::inapplicable_shape, "expected a = (0, b, c, 0) with finite b, c");
    const rational b = a.value(1);
    const rational c = a.value(2);
    if (b <= rational(0) || c <= rational(0))
        throw error(errc::inapplicable_shape, "expected b, c > 0");

    if (b > rational(2) * c) {
        coefficient_vector mirrored({rational(0), c, b, rational(0)});
        auto w = generate_period3_witness(mirrored, e, {-range.hi, -range.lo});
        std::reverse(w.values.begin(), w.values.end());
        w.first_index = range.lo;
        return w;
    }
    if (!(c > rational(2) * b))
        throw error(errc::inapplicable_shape, "need c > 2b or b > 2c; otherwise every minimal sequence has period 3");
    if (e <= rational(0) || e > c - rational(2) * b)
        throw error(errc::bump_out_of_range, "e must satisfy 0 < e <= c - 2b = " + (c - rational(2) * b).str());

    return detail::tabulate(range, [&](std::int64_t x) {
        if (x == 1 || x == 4) return rational(2) * b + e;
        if (x == 2) return b + e;
        std::int64_t r = ((x % 3) + 3) % 3;
        return r == 0 ? rational(0) : (r == 1 ? rational(2) * b : b);
    });
}

/**
 * Concave piecewise-linear sequence with consecutive slope blocks
 * -sigma_1, ..., -sigma_k (left to right), where sigma_1 < ... < sigma_k are
 * the bounded edge slopes of P(a). It is the pointwise minimum of the sloped
 * solutions z_i = c - sigma_j * i, so every window ties. edge_lengths[j] is
 * the horizontal length of the block for edge j and must be at least that
 * edge's own horizontal length. The blocks are centred in the range; the
 * outermost slopes continue to both ends.
 */
inline finite_word generate_polygon_witness(const coefficient_vector& a, const std::vector<int>& edge_lengths,
                                            const index_range& range) {
    detail::require_range(range);
    const auto poly = compute_newton_polygon(a);
    const auto k = poly.edges.size();
    if (edge_lengths.size() != k)
        throw error(errc::edge_count_mismatch, "P(a) has " + std::to_string(k) + " bounded edge(s), got " +
                                                   std::to_string(edge_lengths.size()) + " length(s)");
    std::int64_t total = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (edge_lengths[j] < poly.edges[j].horizontal_length())
            throw error(errc::edge_too_short, "edge " + std::to_string(j) + " needs length >= " +
                                                  std::to_string(poly.edges[j].horizontal_length()));
        total += edge_lengths[j];
    }

    // Step x -> x+1 lies in block t; blocks run from edge 0 up to edge k-1.
    const std::int64_t start = range.lo + std::max<std::int64_t>(0, (range.length() - 1 - total) / 2);
    auto step_slope = [&](std::int64_t x) {
        std::int64_t offset = x - start;
        std::size_t block = 0;
        while (block + 1 < k && offset >= edge_lengths[block]) offset -= edge_lengths[block++];
        return -poly.edges[block].slope;
    };

    finite_word w;
    w.first_index = range.lo;
    rational y(0);
    for (std::int64_t x = range.lo; x <= range.hi; ++x) {
        w.values.push_back(y);
        y += step_slope(x);
    }
    return w;
}

}  // namespace troprec
