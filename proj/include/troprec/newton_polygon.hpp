#pragma once

/**
 * @file newton_polygon.hpp
 * @brief Newton polygon P(a), regularity, and axis normalization of an edge.
 *
 * P(a) is the convex hull of the upward rays {(i, b) : b >= a_i}; only its
 * lower boundary carries information. The bounded edges of that boundary,
 * with slopes sigma_1 < ... < sigma_k, govern which sloped or periodic
 * sequences satisfy a.
 */

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "troprec/coefficient_vector.hpp"
#include "troprec/error.hpp"
#include "troprec/rational.hpp"

namespace troprec {

struct lattice_point {
    int index;
    rational value;
    friend bool operator==(const lattice_point&, const lattice_point&) = default;
};

struct polygon_edge {
    lattice_point start;
    lattice_point end;
    rational slope;
    /// Support indices whose point lies on the closed segment, ascending.
    std::vector<int> on_edge;

    int horizontal_length() const noexcept { return end.index - start.index; }
};

struct newton_polygon {
    std::vector<lattice_point> points;         ///< the Newton graph {(i, a_i) : i in J}
    std::vector<lattice_point> hull_vertices;  ///< lower hull, left to right, no collinear points
    std::vector<polygon_edge> edges;           ///< bounded edges, slopes strictly increasing

    /// Height of the lower boundary over abscissa x, for hull_vertices.front().index <= x <= back().index.
    rational height_at(int x) const {
        for (const auto& e : edges)
            if (x >= e.start.index && x <= e.end.index) return e.start.value + e.slope * rational(x - e.start.index);
        return hull_vertices.front().value;  // single-vertex hull cannot occur for n >= 1
    }

    bool is_vertex(int index) const {
        for (const auto& v : hull_vertices)
            if (v.index == index) return true;
        return false;
    }
};

namespace detail {
// > 0 for a counter-clockwise turn o -> p -> q.
inline rational cross(const lattice_point& o, const lattice_point& p, const lattice_point& q) {
    return rational(p.index - o.index) * (q.value - o.value) - (p.value - o.value) * rational(q.index - o.index);
}
}  // namespace detail

/// Lower hull by monotone chain over the support points.
inline newton_polygon compute_newton_polygon(const coefficient_vector& a) {
    newton_polygon poly;
    for (int i : a.support()) poly.points.push_back({i, a.value(i)});

    auto& hull = poly.hull_vertices;
    for (const auto& p : poly.points) {
        while (hull.size() >= 2 && detail::cross(hull[hull.size() - 2], hull.back(), p) <= rational(0))
            hull.pop_back();
        hull.push_back(p);
    }

    for (std::size_t v = 0; v + 1 < hull.size(); ++v) {
        polygon_edge e{hull[v], hull[v + 1],
                       (hull[v + 1].value - hull[v].value) / rational(hull[v + 1].index - hull[v].index),
                       {}};
        for (const auto& p : poly.points) {
            if (p.index < e.start.index || p.index > e.end.index) continue;
            if (p.value == e.start.value + e.slope * rational(p.index - e.start.index)) e.on_edge.push_back(p.index);
        }
        poly.edges.push_back(std::move(e));
    }
    return poly;
}

struct regularity_report {
    bool is_regular = false;
    bool j_is_progression = false;
    bool all_points_are_vertices = false;
    std::optional<int> progression_difference;
};

/// Regular: J is an arithmetic progression and every support point is a vertex of P(a).
inline regularity_report classify_regular(const coefficient_vector& a) {
    regularity_report r;
    int d = 0;
    r.j_is_progression = is_arithmetic_progression(a.support(), &d);
    if (r.j_is_progression) r.progression_difference = d;
    auto poly = compute_newton_polygon(a);
    r.all_points_are_vertices = poly.hull_vertices.size() == poly.points.size();
    r.is_regular = r.j_is_progression && r.all_points_are_vertices;
    return r;
}

/**
 * Affine change a_i -> scale * (a_i + alpha * i + beta) that puts one bounded
 * edge of P(a) on the abscissa axis with integer entries.
 *
 * A word z' satisfying the normalized vector corresponds to the word
 * z_m = z'_m / scale + alpha * m satisfying the original one.
 */
struct affine_normalization {
    rational alpha;
    rational beta;
    std::int64_t scale = 1;

    rational apply(int index, const rational& a_i) const {
        return rational(scale) * (a_i + alpha * rational(index) + beta);
    }
    rational invert(int index, const rational& normalized) const {
        return normalized / rational(scale) - alpha * rational(index) - beta;
    }
    /// Normalized-frame word value at position m -> original-frame value.
    rational word_to_original(std::int64_t m, const rational& z) const {
        return z / rational(scale) + alpha * rational(m);
    }
    rational word_to_normalized(std::int64_t m, const rational& z) const {
        return rational(scale) * (z - alpha * rational(m));
    }
};

inline std::pair<coefficient_vector, affine_normalization> normalize_edge(const coefficient_vector& a, int edge_index) {
    auto poly = compute_newton_polygon(a);
    if (edge_index < 0 || edge_index >= static_cast<int>(poly.edges.size()))
        throw error(errc::edge_index_out_of_range, "P(a) has " + std::to_string(poly.edges.size()) +
                                                       " bounded edge(s), requested index " +
                                                       std::to_string(edge_index));
    const auto& e = poly.edges[static_cast<std::size_t>(edge_index)];
    affine_normalization t;
    t.alpha = -e.slope;
    t.beta = -(e.start.value + t.alpha * rational(e.start.index));

    std::vector<rational> shifted;
    for (int i : a.support()) shifted.push_back(a.value(i) + t.alpha * rational(i) + t.beta);
    t.scale = common_denominator(shifted);

    std::vector<trop_scalar> out;
    for (int i = 0; i <= a.n(); ++i)
        out.push_back(a.finite(i) ? trop_scalar(t.apply(i, a.value(i))) : trop_scalar::infinity());
    return {coefficient_vector(std::move(out)), t};
}

}  // namespace troprec
