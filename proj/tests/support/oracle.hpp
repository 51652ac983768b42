#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force references for the tests.
 *
 * These share only the evaluators (check_word, polyhedron_dimension) with the
 * library and none of its search or pruning logic.
 */

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "troprec/coefficient_vector.hpp"
#include "troprec/detector.hpp"
#include "troprec/entropy.hpp"
#include "troprec/error.hpp"
#include "troprec/recurrence.hpp"

namespace troprec::oracle {

struct oracle_config {
    std::uint64_t max_enumeration = 50'000'000;
    std::uint64_t random_seed = 20240601;
};

/// All |V|^(2n+1) words filtered by satisfaction plus tightness of the middle letter; lexicographic.
inline std::vector<std::vector<letter>> brute_windows(const coefficient_vector& a, const alphabet& v,
                                                      const oracle_config& cfg = {}) {
    const int width = 2 * a.n() + 1;
    std::uint64_t total = 1;
    for (int i = 0; i < width; ++i) {
        total *= v.size();
        if (total > cfg.max_enumeration)
            throw error(errc::budget_exceeded, "|V|^(2n+1) exceeds the budget of " + std::to_string(cfg.max_enumeration));
    }
    std::vector<std::vector<letter>> out;
    std::vector<letter> w(static_cast<std::size_t>(width), 0);
    for (std::uint64_t c = 0; c < total; ++c) {
        std::uint64_t x = c;
        for (int i = width - 1; i >= 0; --i) {
            w[static_cast<std::size_t>(i)] = static_cast<letter>(x % v.size());
            x /= v.size();
        }
        auto check = check_word(a, window_word(v, w));
        if (check.satisfies && check.minimal) out.push_back(w);
    }
    return out;
}

/**
 * Max polyhedron dimension over every pattern: each window ranges over all
 * subsets of the support with at least two elements. In minimal mode a
 * pattern counts only when every interior position lies in some A_k.
 */
inline int brute_dimension(const coefficient_vector& a, int s, entropy_mode mode, const oracle_config& cfg = {}) {
    const int n = a.n();
    const int windows = s - n;
    if (windows < 1) throw error(errc::s_too_small, "s must be at least n+1");
    const auto support = a.support();
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t mask = 0; mask < (1u << support.size()); ++mask) {
        std::vector<int> A;
        for (std::size_t b = 0; b < support.size(); ++b)
            if (mask & (1u << b)) A.push_back(support[b]);
        if (A.size() >= 2) subsets.push_back(std::move(A));
    }
    std::uint64_t total = 1;
    for (int k = 0; k < windows; ++k) {
        total *= subsets.size();
        if (total > cfg.max_enumeration)
            throw error(errc::budget_exceeded, "pattern count exceeds the budget of " + std::to_string(cfg.max_enumeration));
    }

    int best = -1;
    tightness_pattern p;
    p.windows.resize(static_cast<std::size_t>(windows));
    p.minimality_witness.assign(static_cast<std::size_t>(s), -1);
    std::vector<std::size_t> choice(static_cast<std::size_t>(windows), 0);
    for (std::uint64_t c = 0; c < total; ++c) {
        std::uint64_t x = c;
        for (int k = 0; k < windows; ++k) {
            p.windows[static_cast<std::size_t>(k)] = subsets[x % subsets.size()];
            x /= subsets.size();
        }
        if (mode == entropy_mode::minimal) {
            bool covered = true;
            for (int j = n; j <= s - 1 - n && covered; ++j) {
                p.minimality_witness[static_cast<std::size_t>(j)] = -1;
                for (int k = std::max(0, j - n); k <= std::min(j, windows - 1); ++k) {
                    const auto& A = p.windows[static_cast<std::size_t>(k)];
                    if (std::find(A.begin(), A.end(), j - k) != A.end()) {
                        p.minimality_witness[static_cast<std::size_t>(j)] = k;
                        break;
                    }
                }
                covered = p.minimality_witness[static_cast<std::size_t>(j)] >= 0;
            }
            if (!covered) continue;
        }
        if (auto d = polyhedron_dimension(a, s, p, mode); d && *d > best) best = *d;
    }
    return best;
}

/**
 * Left-to-right sampling on a grid of step 1/4: the letter closing window k
 * equals the tie value when the window's partial minimum is attained once and
 * is drawn at or above it otherwise. Every draw satisfies a; with
 * minimal = true, ties are preferred and non-minimal draws are rejected.
 */
inline std::vector<finite_word> random_satisfying_words(const coefficient_vector& a, int length, int count,
                                                        std::uint64_t seed, bool minimal = false,
                                                        int max_attempts_per_word = 1000) {
    const int n = a.n();
    if (length < n + 1) throw error(errc::word_too_short, "length must be at least n+1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> start(0, 12);
    std::uniform_int_distribution<int> raise(1, 8);
    std::bernoulli_distribution take_tie(minimal ? 0.85 : 0.5);
    std::vector<finite_word> out;
    long attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > static_cast<long>(max_attempts_per_word) * std::max(count, 1))
            throw error(errc::sampling_exhausted, "gave up after " + std::to_string(attempts - 1) + " attempts");
        finite_word z;
        for (int p = 0; p < n; ++p) z.values.push_back(rational(start(rng), 4));
        for (int k = 0; k + n < length; ++k) {
            std::optional<rational> m;
            int hits = 0;
            for (int i = 0; i < n; ++i) {
                if (!a.finite(i)) continue;
                rational v = a.value(i) + z[static_cast<std::size_t>(k + i)];
                if (!m || v < *m) {
                    m = v;
                    hits = 1;
                } else if (v == *m) {
                    ++hits;
                }
            }
            rational tie = *m - a.value(n);
            if (hits >= 2 && !take_tie(rng)) tie = tie + rational(raise(rng), 4);
            z.values.push_back(tie);
        }
        auto check = check_word(a, z);
        if (!check.satisfies) throw error(errc::sampling_exhausted, "internal: sampled word does not satisfy a");
        if (minimal && !check.minimal) continue;
        out.push_back(std::move(z));
    }
    return out;
}

}  // namespace troprec::oracle
