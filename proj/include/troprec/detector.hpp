#pragma once

/**
 * @file detector.hpp
 * @brief Decides whether a non-periodic minimal sequence satisfies a.
 *
 * Input: integer a with 0 <= a_i <= M and a_0 = a_n = 0. Minimal sequences
 * take values in [0, M] after a shift, and the equalizing map moves them onto
 * the grid V = {j + i/(2n+2)} without changing their periodicity status.
 * Windows of length 2n+1 over V that satisfy a and whose middle letter is
 * tight form the vertices of a de Bruijn-style graph G0 (arrows = overlap of
 * 2n letters). Repeatedly deleting sources and sinks leaves G; every minimal
 * sequence over V is periodic iff G is a disjoint union of simple cycles.
 *
 * Letters are stored as integers u meaning u / (2n+2).
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "troprec/coefficient_vector.hpp"
#include "troprec/error.hpp"
#include "troprec/rational.hpp"
#include "troprec/recurrence.hpp"

namespace troprec {

using letter = std::uint16_t;
using vertex_id = std::uint32_t;

struct alphabet {
    int n = 0;
    std::int64_t max_entry = 0;  ///< M
    std::int64_t denom = 1;      ///< 2n+2
    std::vector<rational> values;

    std::size_t size() const noexcept { return values.size(); }
    letter max_letter() const noexcept { return static_cast<letter>(values.size() - 1); }
    rational value(letter u) const { return rational(u, denom); }
};

/// V = {j + i/(2n+2) : 0 <= j < M, 0 <= i <= 2n+2}, deduplicated; V = {0} when M = 0.
inline alphabet build_alphabet(const coefficient_vector& a) {
    for (int i = 0; i <= a.n(); ++i)
        if (!a.finite(i))
            throw error(errc::infinite_coefficient,
                        "a_" + std::to_string(i) + " is infinite; the window-graph detector needs finite entries");
    for (int i = 0; i <= a.n(); ++i)
        if (!a.value(i).is_integer())
            throw error(errc::non_integer_coefficient, "a_" + std::to_string(i) + " = " + a.value(i).str() + " is not an integer");
    for (int i = 0; i <= a.n(); ++i)
        if (a.value(i) < rational(0)) throw error(errc::negative_coefficient, "a_" + std::to_string(i) + " is negative");
    if (a.value(0) != rational(0) || a.value(a.n()) != rational(0))
        throw error(errc::endpoints_not_zero, "expected a_0 = a_n = 0");

    alphabet v;
    v.n = a.n();
    v.max_entry = a.max_finite().num();
    v.denom = 2 * static_cast<std::int64_t>(a.n()) + 2;
    const std::int64_t count = v.max_entry * v.denom + 1;
    if (count > 65535) throw error(errc::arithmetic_overflow, "alphabet of " + std::to_string(count) + " letters is too large");
    for (std::int64_t u = 0; u < count; ++u) v.values.emplace_back(u, v.denom);
    return v;
}

/// Flat storage of equal-length windows.
class window_set {
public:
    window_set() = default;
    explicit window_set(int width) : width_(width) {}

    int width() const noexcept { return width_; }
    std::size_t size() const noexcept { return width_ ? letters_.size() / static_cast<std::size_t>(width_) : 0; }
    bool empty() const noexcept { return letters_.empty(); }

    std::span<const letter> operator[](std::size_t v) const {
        return {letters_.data() + v * static_cast<std::size_t>(width_), static_cast<std::size_t>(width_)};
    }
    void push_back(std::span<const letter> w) { letters_.insert(letters_.end(), w.begin(), w.end()); }
    void append(const window_set& other) { letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end()); }

    friend bool operator==(const window_set&, const window_set&) = default;

private:
    int width_ = 0;
    std::vector<letter> letters_;
};

inline finite_word window_word(const alphabet& v, std::span<const letter> w) {
    finite_word z;
    for (letter u : w) z.values.push_back(v.value(u));
    return z;
}

inline std::string window_label(const alphabet& v, std::span<const letter> w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += v.value(w[i]).str();
    }
    return s;
}

struct enumeration_options {
    std::optional<std::uint64_t> max_states;
    unsigned threads = 1;
};

struct enumeration_stats {
    std::uint64_t nodes = 0;  ///< DFS prefixes visited
};

namespace detail {

struct window_enumerator {
    const alphabet& v;
    std::vector<std::int64_t> coef;  // a_i * (2n+2)
    int n;
    int width;
    std::atomic<std::uint64_t>* accepted;
    std::atomic<bool>* abort;
    std::optional<std::uint64_t> limit;

    std::vector<letter> z;
    window_set out;
    std::uint64_t nodes = 0;

    // min and multiplicity of coef[i] + z[k+i] over i in [0, upto)
    std::pair<std::int64_t, int> partial_min(int k, int upto) const {
        std::int64_t m = INT64_MAX;
        int cnt = 0;
        for (int i = 0; i < upto; ++i) {
            std::int64_t t = coef[static_cast<std::size_t>(i)] + z[static_cast<std::size_t>(k + i)];
            if (t < m) {
                m = t;
                cnt = 1;
            } else if (t == m) {
                ++cnt;
            }
        }
        return {m, cnt};
    }

    bool middle_tight() const {
        for (int k = 0; k <= n; ++k) {
            auto [m, cnt] = partial_min(k, n + 1);
            if (coef[static_cast<std::size_t>(n - k)] + z[static_cast<std::size_t>(n)] == m) return true;
        }
        return false;
    }

    void extend(int p) {
        if (abort->load(std::memory_order_relaxed)) return;
        ++nodes;
        if (p == width) {
            if (!middle_tight()) return;
            out.push_back(z);
            std::uint64_t c = accepted->fetch_add(1, std::memory_order_relaxed) + 1;
            if (limit && c > *limit) abort->store(true, std::memory_order_relaxed);
            return;
        }
        std::int64_t lo = 0;
        std::int64_t hi = v.max_letter();
        if (p >= n) {
            // Window k = p - n is completed by letter p with coefficient a_n.
            auto [m, cnt] = partial_min(p - n, n);
            std::int64_t target = m - coef[static_cast<std::size_t>(n)];
            if (cnt >= 2) {
                lo = std::max<std::int64_t>(lo, target);
            } else {
                lo = target;
                hi = std::min<std::int64_t>(hi, target);
            }
        }
        for (std::int64_t u = lo; u <= hi; ++u) {
            z[static_cast<std::size_t>(p)] = static_cast<letter>(u);
            extend(p + 1);
        }
    }
};

}  // namespace detail

/**
 * All windows of length 2n+1 over V that satisfy a and have a tight middle
 * letter, in lexicographic order. Prefixes are extended letter by letter and a
 * letter closing a window is restricted to values that keep its minimum
 * attained twice. Subtrees under different first letters may run on separate
 * threads; the result does not depend on the thread count.
 */
inline window_set enumerate_windows(const coefficient_vector& a, const alphabet& v,
                                    const enumeration_options& opt = {}, enumeration_stats* stats = nullptr) {
    const int n = a.n();
    const int width = 2 * n + 1;
    std::vector<std::int64_t> coef;
    for (int i = 0; i <= n; ++i) coef.push_back(a.value(i).num() * v.denom);

    std::atomic<std::uint64_t> accepted{0};
    std::atomic<bool> abort{false};
    const std::size_t roots = v.size();
    std::vector<window_set> parts(roots, window_set(width));
    std::vector<std::uint64_t> nodes(roots, 0);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t r; (r = next.fetch_add(1)) < roots && !abort.load();) {
            detail::window_enumerator e{v, coef, n, width, &accepted, &abort, opt.max_states,
                                        std::vector<letter>(static_cast<std::size_t>(width), 0), window_set(width), 0};
            e.z[0] = static_cast<letter>(r);
            e.extend(1);
            parts[r] = std::move(e.out);
            nodes[r] = e.nodes + 1;
        }
    };
    const unsigned t = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(roots)));
    if (t == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (abort.load()) throw state_limit_error(*opt.max_states, accepted.load());

    window_set all(width);
    for (const auto& p : parts) all.append(p);
    if (stats) {
        stats->nodes = 0;
        for (auto x : nodes) stats->nodes += x;
    }
    return all;
}

/// Directed graph on windows with compressed adjacency in both directions.
class window_graph {
public:
    window_graph() = default;
    window_graph(alphabet v, window_set vertices, std::vector<std::uint64_t> out_offsets,
                 std::vector<vertex_id> out_targets, bool pruned)
        : alphabet_(std::move(v)), vertices_(std::move(vertices)), out_off_(std::move(out_offsets)),
          out_to_(std::move(out_targets)), pruned_(pruned) {
        build_reverse();
    }

    const alphabet& letters() const noexcept { return alphabet_; }
    const window_set& vertices() const noexcept { return vertices_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return out_to_.size(); }
    bool pruned() const noexcept { return pruned_; }

    std::span<const vertex_id> successors(vertex_id v) const {
        return {out_to_.data() + out_off_[v], static_cast<std::size_t>(out_off_[v + 1] - out_off_[v])};
    }
    std::span<const vertex_id> predecessors(vertex_id v) const {
        return {in_from_.data() + in_off_[v], static_cast<std::size_t>(in_off_[v + 1] - in_off_[v])};
    }

private:
    void build_reverse() {
        const std::size_t nv = vertices_.size();
        in_off_.assign(nv + 1, 0);
        for (vertex_id t : out_to_) ++in_off_[t + 1];
        for (std::size_t i = 0; i < nv; ++i) in_off_[i + 1] += in_off_[i];
        in_from_.assign(out_to_.size(), 0);
        std::vector<std::uint64_t> fill(in_off_.begin(), in_off_.end() - 1);
        for (vertex_id s = 0; s < nv; ++s)
            for (auto e = out_off_[s]; e < out_off_[s + 1]; ++e) in_from_[fill[out_to_[e]]++] = s;
    }

    alphabet alphabet_;
    window_set vertices_;
    std::vector<std::uint64_t> out_off_{0};
    std::vector<vertex_id> out_to_;
    std::vector<std::uint64_t> in_off_{0};
    std::vector<vertex_id> in_from_;
    bool pruned_ = false;
};

/// G0: arrow w -> w' iff w'[0..2n-1] = w[1..2n]. Vertices must be in lexicographic order.
inline window_graph build_graph(const alphabet& v, window_set windows) {
    const std::size_t nv = windows.size();
    const auto w = static_cast<std::size_t>(windows.width());
    std::vector<std::uint64_t> off(nv + 1, 0);
    std::vector<vertex_id> to;

    std::vector<vertex_id> order(nv);
    for (std::size_t i = 0; i < nv; ++i) order[i] = static_cast<vertex_id>(i);
    for (std::size_t s = 0; s < nv; ++s) {
        auto suffix = windows[s].subspan(1);
        auto lo = std::lower_bound(order.begin(), order.end(), suffix, [&](vertex_id x, std::span<const letter> key) {
            auto p = windows[x].first(w - 1);
            return std::lexicographical_compare(p.begin(), p.end(), key.begin(), key.end());
        });
        for (auto it = lo; it != order.end(); ++it) {
            auto p = windows[*it].first(w - 1);
            if (!std::equal(p.begin(), p.end(), suffix.begin())) break;
            to.push_back(*it);
        }
        off[s + 1] = to.size();
    }
    return window_graph(v, std::move(windows), std::move(off), std::move(to), false);
}

struct prune_stats {
    std::uint64_t rounds = 0;
    std::uint64_t removed = 0;
};

/// G: delete vertices with no incoming or no outgoing arrow, round by round, until none remain.
inline window_graph prune(const window_graph& g, prune_stats* stats = nullptr) {
    const std::size_t nv = g.vertex_count();
    std::vector<std::uint64_t> indeg(nv), outdeg(nv);
    std::vector<char> alive(nv, 1), queued(nv, 0);
    std::vector<vertex_id> frontier;
    for (vertex_id v = 0; v < nv; ++v) {
        indeg[v] = g.predecessors(v).size();
        outdeg[v] = g.successors(v).size();
        if (indeg[v] == 0 || outdeg[v] == 0) {
            frontier.push_back(v);
            queued[v] = 1;
        }
    }
    prune_stats st;
    while (!frontier.empty()) {
        ++st.rounds;
        std::vector<vertex_id> next;
        for (vertex_id v : frontier) {
            alive[v] = 0;
            ++st.removed;
        }
        auto touch = [&](vertex_id u) {
            if (alive[u] && !queued[u] && (indeg[u] == 0 || outdeg[u] == 0)) {
                queued[u] = 1;
                next.push_back(u);
            }
        };
        for (vertex_id v : frontier) {
            for (vertex_id u : g.successors(v))
                if (alive[u]) --indeg[u], touch(u);
            for (vertex_id u : g.predecessors(v))
                if (alive[u]) --outdeg[u], touch(u);
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    if (stats) *stats = st;

    std::vector<vertex_id> remap(nv, 0);
    window_set kept(g.vertices().width());
    vertex_id count = 0;
    for (vertex_id v = 0; v < nv; ++v)
        if (alive[v]) {
            remap[v] = count++;
            kept.push_back(g.vertices()[v]);
        }
    if (count == 0)
        throw error(errc::empty_graph_after_pruning,
                    "pruning removed every vertex; the zero window should always survive (implementation bug)");
    std::vector<std::uint64_t> off{0};
    std::vector<vertex_id> to;
    for (vertex_id v = 0; v < nv; ++v) {
        if (!alive[v]) continue;
        for (vertex_id u : g.successors(v))
            if (alive[u]) to.push_back(remap[u]);
        off.push_back(to.size());
    }
    return window_graph(g.letters(), std::move(kept), std::move(off), std::move(to), true);
}

/// Strongly connected components (iterative Tarjan); comp[v] numbers components.
inline std::vector<std::uint32_t> strongly_connected_components(const window_graph& g, std::uint32_t* count = nullptr) {
    const std::size_t nv = g.vertex_count();
    constexpr std::uint32_t unset = UINT32_MAX;
    std::vector<std::uint32_t> index(nv, unset), low(nv, 0), comp(nv, unset);
    std::vector<char> on_stack(nv, 0);
    std::vector<vertex_id> stack;
    std::vector<std::pair<vertex_id, std::size_t>> call;
    std::uint32_t next_index = 0, next_comp = 0;

    for (vertex_id root = 0; root < nv; ++root) {
        if (index[root] != unset) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            auto succ = g.successors(v);
            if (pos < succ.size()) {
                vertex_id u = succ[pos++];
                if (index[u] == unset) {
                    index[u] = low[u] = next_index++;
                    stack.push_back(u);
                    on_stack[u] = 1;
                    call.emplace_back(u, 0);
                } else if (on_stack[u]) {
                    low[v] = std::min(low[v], index[u]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                vertex_id u;
                do {
                    u = stack.back();
                    stack.pop_back();
                    on_stack[u] = 0;
                    comp[u] = next_comp;
                } while (u != v);
                ++next_comp;
            }
            vertex_id done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    if (count) *count = next_comp;
    return comp;
}

enum class verdict_kind { all_periodic, non_periodic_exists };

inline std::string_view to_string(verdict_kind k) {
    return k == verdict_kind::all_periodic ? "AllPeriodic" : "NonPeriodicExists";
}

struct witness_structure {
    enum class kind { branching, two_cycles } type = kind::branching;
    // branching: v0 -> v1 and v0 -> v2 inside one component; loop_a runs v0, v1, ..., back
    // to (excluding) v0 and loop_b likewise through v2.
    vertex_id v0 = 0, v1 = 0, v2 = 0;
    std::vector<vertex_id> loop_a, loop_b;
    // two_cycles: cycle_a and cycle_b start at the connector's endpoints;
    // connector runs from cycle_a.front() to cycle_b.front() inclusive.
    std::vector<vertex_id> cycle_a, connector, cycle_b;
};

struct detector_stats {
    std::uint64_t alphabet_size = 0;
    std::uint64_t enumeration_nodes = 0;
    std::uint64_t g0_vertices = 0;
    std::uint64_t g0_arrows = 0;
    std::uint64_t prune_rounds = 0;
    std::uint64_t g_vertices = 0;
    std::uint64_t g_arrows = 0;
    std::uint64_t components = 0;
};

struct detector_verdict {
    verdict_kind verdict = verdict_kind::all_periodic;
    bool stable_periodic_only = true;
    std::vector<std::vector<vertex_id>> cycles;  ///< each starts at its smallest vertex; sorted
    std::optional<witness_structure> witness;
    detector_stats stats;
};

namespace detail {

// Shortest path from -> to (inclusive) using only vertices accepted by keep.
template <typename Keep>
std::vector<vertex_id> bfs_path(const window_graph& g, vertex_id from, vertex_id to, Keep&& keep) {
    std::vector<vertex_id> parent(g.vertex_count(), UINT32_MAX);
    std::deque<vertex_id> q{from};
    parent[from] = from;
    while (!q.empty()) {
        vertex_id v = q.front();
        q.pop_front();
        if (v == to) break;
        for (vertex_id u : g.successors(v))
            if (parent[u] == UINT32_MAX && keep(u)) {
                parent[u] = v;
                q.push_back(u);
            }
    }
    if (parent[to] == UINT32_MAX) return {};
    std::vector<vertex_id> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// Simple cycle through v inside its component: v, succ, ..., (excluding the return to v).
inline std::vector<vertex_id> cycle_through(const window_graph& g, const std::vector<std::uint32_t>& comp,
                                            vertex_id v, vertex_id first_step) {
    auto same = [&](vertex_id u) { return comp[u] == comp[v]; };
    if (first_step == v) return {v};
    auto back = bfs_path(g, first_step, v, same);
    std::vector<vertex_id> cyc{v};
    cyc.insert(cyc.end(), back.begin(), back.end() - 1);
    return cyc;
}

}  // namespace detail

/// Verdict on a pruned graph: AllPeriodic iff every vertex has in- and out-degree exactly 1.
inline detector_verdict decide(const window_graph& g) {
    detector_verdict out;
    const std::size_t nv = g.vertex_count();
    out.stats.g_vertices = nv;
    out.stats.g_arrows = g.arrow_count();

    bool union_of_cycles = true;
    for (vertex_id v = 0; v < nv; ++v)
        if (g.successors(v).size() != 1 || g.predecessors(v).size() != 1) union_of_cycles = false;

    std::uint32_t ncomp = 0;
    auto comp = strongly_connected_components(g, &ncomp);
    out.stats.components = ncomp;

    // A component is nontrivial when it contains an arrow; it is a simple cycle
    // when each of its vertices has exactly one arrow staying inside it.
    std::vector<std::uint32_t> size(ncomp, 0), internal_arrows(ncomp, 0);
    std::vector<char> branching(ncomp, 0);
    for (vertex_id v = 0; v < nv; ++v) {
        ++size[comp[v]];
        std::uint32_t inside = 0;
        for (vertex_id u : g.successors(v))
            if (comp[u] == comp[v]) ++inside;
        internal_arrows[comp[v]] += inside;
        if (inside >= 2) branching[comp[v]] = 1;
    }
    out.stable_periodic_only = true;
    for (std::uint32_t c = 0; c < ncomp; ++c)
        if (internal_arrows[c] > 0 && branching[c]) out.stable_periodic_only = false;

    if (union_of_cycles) {
        out.verdict = verdict_kind::all_periodic;
        std::vector<char> seen(nv, 0);
        for (vertex_id v = 0; v < nv; ++v) {
            if (seen[v]) continue;
            std::vector<vertex_id> cyc;
            for (vertex_id u = v; !seen[u]; u = g.successors(u)[0]) {
                seen[u] = 1;
                cyc.push_back(u);
            }
            out.cycles.push_back(std::move(cyc));
        }
        return out;
    }

    out.verdict = verdict_kind::non_periodic_exists;
    witness_structure w;
    for (vertex_id v = 0; v < nv && !out.witness; ++v) {
        if (!branching[comp[v]]) continue;
        std::vector<vertex_id> inside;
        for (vertex_id u : g.successors(v))
            if (comp[u] == comp[v]) inside.push_back(u);
        if (inside.size() < 2) continue;
        w.type = witness_structure::kind::branching;
        w.v0 = v;
        w.v1 = inside[0];
        w.v2 = inside[1];
        w.loop_a = detail::cycle_through(g, comp, v, w.v1);
        w.loop_b = detail::cycle_through(g, comp, v, w.v2);
        out.witness = w;
    }
    if (out.witness) return out;

    // No branching inside a component, so some arrow crosses components. Walk back
    // from its tail and forward from its head to the nearest nontrivial components.
    auto nontrivial = [&](vertex_id u) { return internal_arrows[comp[u]] > 0; };
    for (vertex_id s = 0; s < nv && !out.witness; ++s) {
        for (vertex_id t : g.successors(s)) {
            if (comp[t] == comp[s]) continue;
            vertex_id a = s;
            while (!nontrivial(a)) a = g.predecessors(a)[0];
            vertex_id b = t;
            while (!nontrivial(b)) b = g.successors(b)[0];
            auto first_inside = [&](vertex_id x) {
                for (vertex_id u : g.successors(x))
                    if (comp[u] == comp[x]) return u;
                return x;
            };
            w.type = witness_structure::kind::two_cycles;
            w.cycle_a = detail::cycle_through(g, comp, a, first_inside(a));
            w.cycle_b = detail::cycle_through(g, comp, b, first_inside(b));
            w.connector = detail::bfs_path(g, a, b, [](vertex_id) { return true; });
            out.witness = w;
            break;
        }
    }
    return out;
}

/// Reads a vertex path as a word: first letters of every vertex, then the rest of the last one.
inline finite_word path_word(const window_graph& g, const std::vector<vertex_id>& path) {
    finite_word z;
    const auto& v = g.letters();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) z.values.push_back(v.value(g.vertices()[path[i]][0]));
    for (letter u : g.vertices()[path.back()]) z.values.push_back(v.value(u));
    return z;
}

/**
 * Unrolls a witness into a finite word of length >= min_length.
 * Branching: blocks of t repetitions of loop_a then loop_b for t = 1, 2, ...
 * (variant 1 starts with loop_b). Two cycles: A^r, connector, B^r with r >= 3.
 */
inline finite_word unroll_witness(const window_graph& g, const witness_structure& w, std::size_t min_length,
                                  int variant = 0) {
    const std::size_t extra = static_cast<std::size_t>(g.vertices().width()) - 1;
    std::vector<vertex_id> path;
    if (w.type == witness_structure::kind::branching) {
        const auto& first = variant == 0 ? w.loop_a : w.loop_b;
        const auto& second = variant == 0 ? w.loop_b : w.loop_a;
        for (int t = 1; path.size() + extra < min_length; ++t) {
            for (int r = 0; r < t; ++r) path.insert(path.end(), first.begin(), first.end());
            for (int r = 0; r < t; ++r) path.insert(path.end(), second.begin(), second.end());
        }
        path.push_back(w.v0);
    } else {
        for (int reps = 3;; ++reps) {
            path.clear();
            for (int r = 0; r < reps; ++r) path.insert(path.end(), w.cycle_a.begin(), w.cycle_a.end());
            path.insert(path.end(), w.connector.begin(), w.connector.end());
            for (int r = 0; r < reps; ++r) {
                path.insert(path.end(), w.cycle_b.begin() + 1, w.cycle_b.end());
                path.push_back(w.cycle_b.front());
            }
            if (path.size() + extra >= min_length) break;
        }
    }
    return path_word(g, path);
}

/// One sequence per simple cycle, read off the first letters around the cycle.
inline std::vector<periodic_sequence> periodic_solutions(const window_graph& g, const detector_verdict& verdict) {
    if (verdict.verdict != verdict_kind::all_periodic)
        throw error(errc::not_all_periodic, "the pruned graph is not a disjoint union of simple cycles");
    std::vector<periodic_sequence> out;
    for (const auto& cyc : verdict.cycles) {
        periodic_sequence p;
        p.period = static_cast<int>(cyc.size());
        for (vertex_id v : cyc) p.values.push_back(g.letters().value(g.vertices()[v][0]));
        out.push_back(std::move(p));
    }
    return out;
}

/// Graphviz text; nodes in vertex (lexicographic) order, arrows by source then target.
inline std::string to_dot(const window_graph& g) {
    std::ostringstream os;
    os << "digraph " << (g.pruned() ? "G" : "G0") << " {\n";
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        os << "  n" << v << " [label=\"" << window_label(g.letters(), g.vertices()[v]) << "\"];\n";
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        for (vertex_id u : g.successors(v)) os << "  n" << v << " -> n" << u << ";\n";
    os << "}\n";
    return os.str();
}

inline void export_dot(const window_graph& g, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw error(errc::io_error, "cannot open '" + path + "' for writing");
    f << to_dot(g);
    if (!f) throw error(errc::io_error, "failed writing '" + path + "'");
}

struct detection {
    window_graph full;    ///< G0
    window_graph pruned;  ///< G
    detector_verdict verdict;
};

/// build_alphabet -> enumerate_windows -> build_graph -> prune -> decide.
inline detection detect(const coefficient_vector& a, const enumeration_options& opt = {}) {
    alphabet v = build_alphabet(a);
    enumeration_stats es;
    window_set windows = enumerate_windows(a, v, opt, &es);
    detection d;
    d.full = build_graph(v, std::move(windows));
    prune_stats ps;
    d.pruned = prune(d.full, &ps);
    d.verdict = decide(d.pruned);
    auto& s = d.verdict.stats;
    s.alphabet_size = v.size();
    s.enumeration_nodes = es.nodes;
    s.g0_vertices = d.full.vertex_count();
    s.g0_arrows = d.full.arrow_count();
    s.prune_rounds = ps.rounds;
    return d;
}

}  // namespace troprec
