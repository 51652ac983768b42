#pragma once

/**
 * @file entropy.hpp
 * @brief Dimensions d_s = dim D_s and m_s = dim M_s, and entropy brackets.
 *
 * D_s is the set of words of length s satisfying a; M_s adds minimality at the
 * interior positions j in [n, s-1-n]. Both are finite unions of polyhedra,
 * one per tightness pattern: for every window k a set A_k (|A_k| >= 2) of
 * indices on which the minimum is attained. Such a polyhedron is cut out by
 * difference constraints
 *     z_{k+i} - z_{k+r} = a_r - a_i          (i, r in A_k)
 *     z_{k+r} + a_r    <= z_{k+i} + a_i      (i not in A_k, a_i finite)
 * and its dimension is the number of classes of variables whose pairwise
 * differences are not fixed, i.e. u ~ v iff dist(u,v) + dist(v,u) = 0 in the
 * constraint digraph. A superset A_k only shrinks the polyhedron, so the
 * search may restrict every A_k to a pair plus the positions it must make
 * tight for minimality.
 *
 * d_s and m_s are subadditive, so d_s / s decreases to its infimum H(a) and
 * every computed ratio is an upper bound on H(a) (likewise for h(a)).
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "troprec/coefficient_vector.hpp"
#include "troprec/error.hpp"
#include "troprec/newton_polygon.hpp"
#include "troprec/rational.hpp"
#include "troprec/recurrence.hpp"

namespace troprec {

enum class entropy_mode { satisfy, minimal };

inline std::string_view to_string(entropy_mode m) { return m == entropy_mode::satisfy ? "satisfy" : "minimal"; }

struct tightness_pattern {
    /// A_k for windows k = 0 .. s-1-n, each ascending.
    std::vector<std::vector<int>> windows;
    /// k(j) for every position j (minimal mode; -1 where unused).
    std::vector<int> minimality_witness;
};

/**
 * Closed shortest-path matrix of a system x_v - x_u <= w. Adding a constraint
 * keeps the matrix closed in O(s^2).
 */
class difference_system {
public:
    static constexpr std::int64_t unbounded = std::numeric_limits<std::int64_t>::max() / 4;

    explicit difference_system(int vars)
        : s_(vars), d_(static_cast<std::size_t>(vars) * static_cast<std::size_t>(vars), unbounded) {
        for (int i = 0; i < vars; ++i) at(i, i) = 0;
    }

    int variables() const noexcept { return s_; }
    std::int64_t dist(int u, int v) const { return d_[idx(u, v)]; }

    /// Adds x_v - x_u <= w. Returns false (leaving the system unusable) on a negative cycle.
    bool add(int u, int v, std::int64_t w) {
        if (dist(v, u) != unbounded && dist(v, u) + w < 0) return false;
        if (w >= dist(u, v)) return true;
        std::vector<std::int64_t> into_u(static_cast<std::size_t>(s_)), from_v(static_cast<std::size_t>(s_));
        for (int i = 0; i < s_; ++i) {
            into_u[static_cast<std::size_t>(i)] = dist(i, u);
            from_v[static_cast<std::size_t>(i)] = dist(v, i);
        }
        for (int i = 0; i < s_; ++i) {
            std::int64_t iu = into_u[static_cast<std::size_t>(i)];
            if (iu == unbounded) continue;
            for (int j = 0; j < s_; ++j) {
                std::int64_t vj = from_v[static_cast<std::size_t>(j)];
                if (vj == unbounded) continue;
                std::int64_t cand = iu + w + vj;
                if (cand < at(i, j)) at(i, j) = cand;
            }
        }
        return true;
    }

    bool add_equal(int u, int v, std::int64_t diff) { return add(u, v, diff) && add(v, u, -diff); }  // x_v - x_u = diff

    /// Number of forced-equality classes = dimension of the affine hull.
    int classes() const {
        std::vector<char> seen(static_cast<std::size_t>(s_), 0);
        int c = 0;
        for (int i = 0; i < s_; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            ++c;
            for (int j = i; j < s_; ++j)
                if (dist(i, j) != unbounded && dist(j, i) != unbounded && dist(i, j) + dist(j, i) == 0)
                    seen[static_cast<std::size_t>(j)] = 1;
        }
        return c;
    }

private:
    std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * static_cast<std::size_t>(s_) + static_cast<std::size_t>(v); }
    std::int64_t& at(int u, int v) { return d_[idx(u, v)]; }

    int s_;
    std::vector<std::int64_t> d_;
};

namespace detail {

struct scaled_vector {
    int n = 0;
    std::vector<int> support;
    std::vector<std::int64_t> coef;  // scaled finite entries; meaningless where infinite
    std::vector<char> finite;
};

inline scaled_vector scale(const coefficient_vector& a) {
    scaled_vector sv;
    sv.n = a.n();
    sv.support = a.support();
    std::vector<rational> vals;
    for (int i : sv.support) vals.push_back(a.value(i));
    const std::int64_t q = common_denominator(vals);
    sv.coef.assign(a.size(), 0);
    sv.finite.assign(a.size(), 0);
    for (int i : sv.support) {
        sv.coef[static_cast<std::size_t>(i)] = (a.value(i) * rational(q)).num();
        sv.finite[static_cast<std::size_t>(i)] = 1;
    }
    return sv;
}

inline bool is_interior(int j, int n, int s) { return j >= n && j <= s - 1 - n; }

// Constraints of window k with A = members (ascending, nonempty).
inline bool add_window(difference_system& sys, const scaled_vector& a, int k, const std::vector<int>& members) {
    const int r = members.front();
    const auto ar = a.coef[static_cast<std::size_t>(r)];
    for (int i : a.support) {
        const auto ai = a.coef[static_cast<std::size_t>(i)];
        if (std::binary_search(members.begin(), members.end(), i)) {
            if (i != r && !sys.add_equal(k + r, k + i, ar - ai)) return false;
        } else if (!sys.add(k + i, k + r, ai - ar)) {  // z_{k+r} - z_{k+i} <= a_i - a_r
            return false;
        }
    }
    return true;
}

}  // namespace detail

/**
 * Dimension of the polyhedron of one tightness pattern, or nullopt when it is
 * empty. All-pairs shortest paths over the full system decide forced equality,
 * including equalities implied by opposing inequalities from different windows.
 */
inline std::optional<int> polyhedron_dimension(const coefficient_vector& a, int s, const tightness_pattern& p,
                                               entropy_mode mode = entropy_mode::satisfy) {
    const int n = a.n();
    const int windows = s - n;
    if (windows < 1) throw error(errc::s_too_small, "s must be at least n+1");
    if (static_cast<int>(p.windows.size()) != windows)
        throw error(errc::malformed_pattern, "expected " + std::to_string(windows) + " window sets");
    for (const auto& A : p.windows) {
        if (A.size() < 2) throw error(errc::malformed_pattern, "every window needs at least two tight indices");
        for (std::size_t t = 0; t < A.size(); ++t) {
            if (A[t] < 0 || A[t] > n || !a.finite(A[t]))
                throw error(errc::malformed_pattern, "tight index " + std::to_string(A[t]) + " is not in the support");
            if (t && A[t] <= A[t - 1]) throw error(errc::malformed_pattern, "window sets must be strictly ascending");
        }
    }
    if (mode == entropy_mode::minimal) {
        for (int j = n; j <= s - 1 - n; ++j) {
            int k = static_cast<std::size_t>(j) < p.minimality_witness.size() ? p.minimality_witness[static_cast<std::size_t>(j)] : -1;
            if (k < std::max(0, j - n) || k > j || k >= windows ||
                !std::binary_search(p.windows[static_cast<std::size_t>(k)].begin(), p.windows[static_cast<std::size_t>(k)].end(), j - k))
                throw error(errc::malformed_pattern, "interior position " + std::to_string(j) + " has no tight window");
        }
    }

    auto sv = detail::scale(a);
    constexpr std::int64_t inf = difference_system::unbounded;
    std::vector<std::int64_t> d(static_cast<std::size_t>(s * s), inf);
    auto at = [&](int u, int v) -> std::int64_t& { return d[static_cast<std::size_t>(u * s + v)]; };
    auto edge = [&](int u, int v, std::int64_t w) { at(u, v) = std::min(at(u, v), w); };
    for (int i = 0; i < s; ++i) at(i, i) = 0;
    for (int k = 0; k < windows; ++k) {
        const auto& A = p.windows[static_cast<std::size_t>(k)];
        const int r = A.front();
        const auto ar = sv.coef[static_cast<std::size_t>(r)];
        for (int i : sv.support) {
            const auto ai = sv.coef[static_cast<std::size_t>(i)];
            if (std::binary_search(A.begin(), A.end(), i)) {
                edge(k + r, k + i, ar - ai);
                edge(k + i, k + r, ai - ar);
            } else {
                edge(k + i, k + r, ai - ar);
            }
        }
    }
    for (int m = 0; m < s; ++m)
        for (int i = 0; i < s; ++i) {
            if (at(i, m) == inf) continue;
            for (int j = 0; j < s; ++j)
                if (at(m, j) != inf && at(i, m) + at(m, j) < at(i, j)) at(i, j) = at(i, m) + at(m, j);
        }
    for (int i = 0; i < s; ++i)
        if (at(i, i) < 0) return std::nullopt;

    std::vector<char> seen(static_cast<std::size_t>(s), 0);
    int classes = 0;
    for (int i = 0; i < s; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++classes;
        for (int j = i; j < s; ++j)
            if (at(i, j) != inf && at(j, i) != inf && at(i, j) + at(j, i) == 0) seen[static_cast<std::size_t>(j)] = 1;
    }
    return classes;
}

/// Pair-counting bound s - floor(s/n), at least 1; checked per row, never used to prune (it fails for small s).
inline int dimension_cap(int s, int n) { return std::max(1, s - s / n); }

struct dimension_result {
    int value = 0;
    tightness_pattern witness;
    std::uint64_t nodes = 0;  ///< search nodes; varies with the thread count
};

namespace detail {

class pattern_search {
public:
    pattern_search(const coefficient_vector& a, int s, entropy_mode mode)
        : a_(scale(a)), n_(a.n()), s_(s), windows_(s - a.n()), mode_(mode) {
        for (std::size_t x = 0; x < a_.support.size(); ++x)
            for (std::size_t y = x + 1; y < a_.support.size(); ++y) pairs_.push_back({a_.support[x], a_.support[y]});
    }

    struct candidate {
        difference_system sys;
        std::vector<int> members;
        int classes;
    };

    /// Feasible pair choices for window k, fewest merges first (stable in pair order).
    std::vector<candidate> candidates(const difference_system& sys, int k) const {
        std::vector<candidate> out;
        for (const auto& pr : pairs_) {
            difference_system next = sys;
            if (!add_window(next, a_, k, pr)) continue;
            int c = next.classes();
            out.push_back({std::move(next), pr, c});
        }
        std::stable_sort(out.begin(), out.end(), [](const candidate& x, const candidate& y) { return x.classes > y.classes; });
        return out;
    }

    struct state {
        int best = 0;
        tightness_pattern best_pattern;
        std::uint64_t nodes = 0;
        const std::atomic<int>* shared_best = nullptr;
        std::atomic<int>* publish = nullptr;
    };

    void run_from(int k, const difference_system& sys, tightness_pattern& pat, state& st) const {
        ++st.nodes;
        const int bound = sys.classes();
        const int global = st.shared_best ? st.shared_best->load(std::memory_order_relaxed) : 0;
        if (bound < std::max(st.best, global)) return;
        if (k == windows_) {
            if (bound > st.best) {
                st.best = bound;
                st.best_pattern = pat;
                if (st.publish) {
                    int cur = st.publish->load();
                    while (cur < bound && !st.publish->compare_exchange_weak(cur, bound)) {
                    }
                }
            }
            return;
        }
        for (auto& c : candidates(sys, k)) {
            pat.windows[static_cast<std::size_t>(k)] = c.members;
            close_position(k, c.sys, pat, st);
        }
    }

    // After window k is fixed, interior position j = k must be tight in one of windows j-n..j.
    void close_position(int k, const difference_system& sys, tightness_pattern& pat, state& st) const {
        const int j = k;
        if (mode_ != entropy_mode::minimal || !is_interior(j, n_, s_)) {
            run_from(k + 1, sys, pat, st);
            return;
        }
        for (int w = std::max(0, j - n_); w <= j; ++w) {
            const auto& A = pat.windows[static_cast<std::size_t>(w)];
            if (std::binary_search(A.begin(), A.end(), j - w)) {
                pat.minimality_witness[static_cast<std::size_t>(j)] = w;
                run_from(k + 1, sys, pat, st);
                return;
            }
        }
        for (int w = std::max(0, j - n_); w <= j; ++w) {
            const int i = j - w;
            if (!a_.finite[static_cast<std::size_t>(i)]) continue;
            auto& A = pat.windows[static_cast<std::size_t>(w)];
            difference_system next = sys;
            const int r = A.front();
            if (!next.add_equal(w + r, j, a_.coef[static_cast<std::size_t>(r)] - a_.coef[static_cast<std::size_t>(i)])) continue;
            const auto saved = A;
            A.insert(std::upper_bound(A.begin(), A.end(), i), i);
            pat.minimality_witness[static_cast<std::size_t>(j)] = w;
            run_from(k + 1, next, pat, st);
            A = saved;
            pat.minimality_witness[static_cast<std::size_t>(j)] = -1;
        }
    }

    tightness_pattern empty_pattern() const {
        tightness_pattern p;
        p.windows.assign(static_cast<std::size_t>(windows_), {});
        p.minimality_witness.assign(static_cast<std::size_t>(s_), -1);
        return p;
    }

    int windows() const noexcept { return windows_; }
    int variables() const noexcept { return s_; }

private:
    scaled_vector a_;
    int n_, s_, windows_;
    entropy_mode mode_;
    std::vector<std::vector<int>> pairs_;
};

}  // namespace detail

/**
 * Maximum polyhedron dimension over all tightness patterns: windows are fixed
 * left to right, a branch is cut when its current class count (an upper bound
 * for any completion) falls below the best found. The first maximal pattern in search order
 * is returned, so the witness does not depend on the thread count.
 */
inline dimension_result dimension_search(const coefficient_vector& a, int s, entropy_mode mode, unsigned threads = 1) {
    if (s < a.n() + 1) throw error(errc::s_too_small, "s = " + std::to_string(s) + " < n+1 = " + std::to_string(a.n() + 1));
    detail::pattern_search search(a, s, mode);
    const difference_system root(s);
    auto first = search.candidates(root, 0);

    std::atomic<int> global{0};
    std::vector<detail::pattern_search::state> states(first.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t b; (b = next.fetch_add(1)) < first.size();) {
            auto& st = states[b];
            st.shared_best = &global;
            st.publish = &global;
            auto pat = search.empty_pattern();
            pat.windows[0] = first[b].members;
            search.close_position(0, first[b].sys, pat, st);
        }
    };
    const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(first.size())));
    if (t <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    dimension_result out;
    out.value = -1;
    for (const auto& st : states) {
        out.nodes += st.nodes;
        if (st.best > out.value && !st.best_pattern.windows.empty()) {
            out.value = st.best;
            out.witness = st.best_pattern;
        }
    }
    if (out.value < 0) throw error(errc::not_satisfying, "no tightness pattern is feasible");
    return out;
}

/// One scaffold cell of a lower-bound family: a fixed value, or a free value >= floor.
struct family_cell {
    bool free = false;
    rational value;  ///< fixed value, or the lower bound of a free cell
};

/**
 * Periodic scaffold certifying H(a) >= rate for a non-regular a. Cells are
 * given in the frame of the normalized vector; position x uses
 * cells[(x - offset) mod period]. A member word assigns arbitrary values
 * >= floor to the free cells and is mapped back through the normalization.
 */
struct lower_bound_family {
    int case_id = 0;  ///< 1: an edge carries >= 3 support points; 2: two-point edges only
    std::string description;
    rational certified_rate;
    int edge_index = 0;
    coefficient_vector normalized{std::vector<trop_scalar>{trop_scalar(rational(0)), trop_scalar(rational(0))}};
    affine_normalization transform;
    std::int64_t period = 1;
    std::int64_t offset = 0;
    std::vector<family_cell> cells;
    int verified_draws = 0;

    const family_cell& cell(std::int64_t x) const {
        std::int64_t r = (x - offset) % period;
        if (r < 0) r += period;
        return cells[static_cast<std::size_t>(r)];
    }

    std::int64_t free_count(std::int64_t length) const {
        std::int64_t c = 0;
        for (std::int64_t x = 0; x < length; ++x) c += cell(x).free ? 1 : 0;
        return c;
    }

    /// Member over positions 0..length-1 in the original frame; free values from rng.
    template <typename Rng>
    finite_word member(std::int64_t length, Rng& rng) const {
        std::uniform_int_distribution<int> step(0, 12);
        finite_word w;
        for (std::int64_t x = 0; x < length; ++x) {
            const auto& c = cell(x);
            rational v = c.free ? c.value + rational(step(rng)) / rational(4) : c.value;
            w.values.push_back(transform.word_to_original(x, v));
        }
        return w;
    }
};

namespace detail {

inline std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

inline lower_bound_family family_case1(const coefficient_vector& a, const newton_polygon& poly, int edge) {
    lower_bound_family f;
    f.case_id = 1;
    f.edge_index = edge;
    std::tie(f.normalized, f.transform) = normalize_edge(a, edge);
    const auto& on = poly.edges[static_cast<std::size_t>(edge)].on_edge;
    const int base = on.front();
    int g = 0;
    for (int i : on) g = std::gcd(g, i - base);
    std::vector<int> red;
    for (int i : on) red.push_back((i - base) / g);

    // p1 < p2 of equal parity, p3 of the other parity (exists since gcd of red is 1).
    int p1 = -1, p2 = -1, p3 = -1;
    for (std::size_t x = 0; x < red.size() && p1 < 0; ++x)
        for (std::size_t y = x + 1; y < red.size() && p1 < 0; ++y) {
            if ((red[x] - red[y]) % 2 != 0) continue;
            for (int r : red)
                if ((r - red[x]) % 2 != 0) {
                    p1 = red[x];
                    p2 = red[y];
                    p3 = r;
                    break;
                }
        }
    if (p1 < 0) throw error(errc::uncertified_family, "no three on-edge points of mixed parity");
    const std::int64_t half = (p2 - p1) / 2;  // i in "0, 2i, j"
    f.period = 4 * half * g;
    f.offset = base + static_cast<std::int64_t>(g) * p1;
    for (std::int64_t y = 0; y < f.period; ++y) {
        const std::int64_t m = y / g;
        family_cell c;
        if (m % 2 == 0 && floor_mod(m / 2, 2 * half) >= half) c.free = true;
        f.cells.push_back(c);
    }
    f.description = "edge " + std::to_string(edge) + " carries " + std::to_string(on.size()) +
                    " support points; stride " + std::to_string(g) + ", anchors 0, " + std::to_string(2 * half) +
                    ", " + std::to_string(p3 - p1) + "; free cells >= 0 on half of the even blocks";
    return f;
}

inline lower_bound_family family_case2(const coefficient_vector& a, const newton_polygon& poly) {
    int edge = 0;
    for (std::size_t e = 1; e < poly.edges.size(); ++e)
        if (poly.edges[e].horizontal_length() > poly.edges[static_cast<std::size_t>(edge)].horizontal_length())
            edge = static_cast<int>(e);
    lower_bound_family f;
    f.case_id = 2;
    f.edge_index = edge;
    std::tie(f.normalized, f.transform) = normalize_edge(a, edge);
    const int e0 = poly.edges[static_cast<std::size_t>(edge)].start.index;
    const std::int64_t L = poly.edges[static_cast<std::size_t>(edge)].horizontal_length();

    std::optional<int> i0;
    for (int i : a.support()) {
        if (floor_mod(i - e0, L) == 0) continue;
        if (!i0 || f.normalized.value(i) < f.normalized.value(*i0)) i0 = i;
    }
    if (!i0) throw error(errc::uncertified_family, "every support index is congruent to the edge start mod its length");
    const std::int64_t d0 = *i0 - e0;
    const rational c = f.normalized.value(*i0);
    const std::int64_t k = std::gcd(L, d0 < 0 ? -d0 : d0);

    f.period = 2 * L;
    f.offset = e0;
    f.cells.assign(static_cast<std::size_t>(f.period), {});
    std::vector<char> hit(static_cast<std::size_t>(f.period), 0);
    for (std::int64_t t = 0; t < 2; ++t)
        for (std::int64_t j = 0; j < L / k; ++j)
            for (std::int64_t i = 0; i < k; ++i) {
                const auto y = static_cast<std::size_t>(floor_mod(t * L - j * d0 + i, f.period));
                hit[y] = 1;
                family_cell cell;
                if (j % 2 == 1) {
                    cell.value = c;
                    cell.free = t == 1;
                }
                f.cells[y] = cell;
            }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
        throw error(errc::uncertified_family, "residue layout does not cover a full period");
    f.description = "longest edge " + std::to_string(edge) + " of length " + std::to_string(L) + "; i0 = " +
                    std::to_string(*i0) + " with c = " + c.str() + ", k = gcd = " + std::to_string(k) +
                    "; free cells >= c on odd blocks of odd tiers";
    return f;
}

}  // namespace detail

/**
 * Builds the scaffold family for a non-regular a and certifies it: `draws`
 * random members (each several periods long) must satisfy a. The certified
 * rate is the share of free cells per period.
 */
inline lower_bound_family make_lower_bound_family(const coefficient_vector& a, int draws = 100, std::uint64_t seed = 1) {
    if (classify_regular(a).is_regular) throw error(errc::regular_vector, "a is regular, so H(a) = 0");
    const auto poly = compute_newton_polygon(a);
    std::optional<int> rich;
    for (std::size_t e = 0; e < poly.edges.size() && !rich; ++e)
        if (poly.edges[e].on_edge.size() >= 3) rich = static_cast<int>(e);
    lower_bound_family f = rich ? detail::family_case1(a, poly, *rich) : detail::family_case2(a, poly);

    std::int64_t free = 0;
    for (const auto& c : f.cells) free += c.free ? 1 : 0;
    f.certified_rate = rational(free) / rational(f.period);

    std::mt19937_64 rng(seed);
    const std::int64_t length = std::max<std::int64_t>(60, 4 * f.period + 2 * a.n());
    for (int d = 0; d < draws; ++d) {
        auto w = f.member(length, rng);
        auto check = check_word(a, w);
        if (!check.satisfies)
            throw error(errc::uncertified_family, "draw " + std::to_string(d) + " violates window " +
                                                      std::to_string(check.failing_windows.front()) + " (" +
                                                      f.description + ")");
        ++f.verified_draws;
    }
    return f;
}

struct dimension_row {
    int s = 0;
    int value = 0;
    rational ratio;
    tightness_pattern witness;
};

struct dimension_table {
    entropy_mode mode = entropy_mode::satisfy;
    std::vector<dimension_row> rows;
    rational h_upper;
    std::optional<rational> h_lower;
    std::string lower_family;          ///< description, or why no bound is attached
    bool subadditive = true;
    bool within_cap = true;
    std::vector<std::pair<int, int>> residue_deltas;  ///< (s, value(s) - value(s-n-1))

    const dimension_row* row(int s) const {
        for (const auto& r : rows)
            if (r.s == s) return &r;
        return nullptr;
    }
};

/**
 * Rows s = n+1..s_max. h_upper = min ratio bounds the limit from above
 * because the limit is the infimum. In satisfy mode a certified lower-bound
 * family is attached for non-regular a.
 */
inline dimension_table entropy_report(const coefficient_vector& a, int s_max, entropy_mode mode, unsigned threads = 1) {
    const int n = a.n();
    if (s_max < n + 1) throw error(errc::s_too_small, "s_max must be at least n+1 = " + std::to_string(n + 1));
    dimension_table t;
    t.mode = mode;
    for (int s = n + 1; s <= s_max; ++s) {
        auto r = dimension_search(a, s, mode, threads);
        dimension_row row{s, r.value, rational(r.value) / rational(s), std::move(r.witness)};
        if (t.rows.empty() || row.ratio < t.h_upper) t.h_upper = row.ratio;
        if (row.value > dimension_cap(s, n)) t.within_cap = false;
        t.rows.push_back(std::move(row));
    }
    for (const auto& x : t.rows)
        for (const auto& y : t.rows)
            if (const auto* z = t.row(x.s + y.s); z && z->value > x.value + y.value) t.subadditive = false;
    for (const auto& x : t.rows)
        if (const auto* p = t.row(x.s - n - 1)) t.residue_deltas.emplace_back(x.s, x.value - p->value);

    if (mode == entropy_mode::satisfy) {
        if (classify_regular(a).is_regular) {
            t.h_lower = rational(0);
            t.lower_family = "regular vector";
        } else {
            try {
                auto f = make_lower_bound_family(a);
                t.h_lower = f.certified_rate;
                t.lower_family = f.description;
            } catch (const error& e) {
                if (e.code() != errc::uncertified_family) throw;
                t.lower_family = std::string("no certified family: ") + e.what();
            }
        }
    }
    return t;
}

}  // namespace troprec
