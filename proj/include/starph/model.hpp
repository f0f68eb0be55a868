/**
 * The combinatorial model graph of pairs of points on a metric star.
 *
 * A star with k edges of lengths L = L_1 (the varying parameter) and
 * ℓ_2 ≥ … ≥ ℓ_k carries a model graph whose vertices are ordered pairs
 * (x, y) of distinct edge labels in {0, …, k} — label 0 standing for the
 * center — and whose edges record the elementary moves of one of the two
 * points through the center.  Vertices and edges carry filtering values;
 * the superlevel subgraph at threshold r (keep filter ≥ r) models the
 * configurations of two points at distance ≥ r.
 *
 * Two graph kinds are provided: the full model, and a homotopy-equivalent
 * reduced model on the 2k "one point at the center" vertices only, which
 * keeps every first-homology computation small.
 */

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace starph {

/**
 * The metric data (L; ℓ_2, …, ℓ_k) with the tail normalized descending.
 */
struct EdgeLengthVector
{
    int k;                            // number of star edges, ≥ 3
    Rational first;                   // the varying length L = L_1
    std::vector<Rational> tail;       // ℓ_2 ≥ ℓ_3 ≥ … ≥ ℓ_k
    std::vector<int> input_permutation;   // tail[i] = user_tail[input_permutation[i]]

    /** Length of edge i, for i in 1..k (i = 1 is the varying length). */
    const Rational& length(int i) const
    {
        return (i == 1 ? this->first : this->tail[i - 2]);
    }

    /** Smallest tail length ℓ_k. */
    const Rational& ell_min() const { return this->tail.back(); }

    /** Largest tail length ℓ_2. */
    const Rational& ell_max() const { return this->tail.front(); }

    /** Copy with the varying length replaced (tail untouched). */
    EdgeLengthVector with_first(const Rational& L) const
    {
        EdgeLengthVector out = *this;
        out.first = L;
        return out;
    }
};

/**
 * Normalize raw user lengths (L; t_2, …, t_k) into an EdgeLengthVector.
 *
 * The first entry is preserved as the varying L; the remaining entries are
 * stably sorted into descending order with the permutation recorded.
 *
 * @param raw All k lengths, user order, first entry the varying L.
 * @returns Normalized vector.
 * @throws std::invalid_argument if k < 3 or any entry is not positive.
 */
inline EdgeLengthVector normalize_lengths(const std::vector<Rational>& raw)
{
    if (raw.size() < 3)
        throw std::invalid_argument("normalize_lengths: need k >= 3 lengths");
    for (const auto& x : raw)
        if (x <= 0)
            throw std::invalid_argument("normalize_lengths: lengths must be positive");

    EdgeLengthVector out;
    out.k = static_cast<int>(raw.size());
    out.first = raw[0];
    std::vector<int> perm(raw.size() - 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b){ return raw[a + 1] > raw[b + 1]; });
    for (int p : perm)
        out.tail.push_back(raw[p + 1]);
    out.input_permutation = perm;
    return out;
}

/**
 * A model-graph vertex: the ordered pair (x, y) of edge labels, x ≠ y,
 * label 0 meaning "at the center".
 */
struct ModelVertex
{
    int x;
    int y;

    friend bool operator==(const ModelVertex&, const ModelVertex&) = default;
    friend auto operator<=>(const ModelVertex&, const ModelVertex&) = default;
};

/**
 * A model-graph edge with its weight and filtering value.  The `index` is
 * the position in the unfiltered parent graph's edge list and is stable
 * across filtration levels, so cycle vectors at different thresholds share
 * one coordinate system.
 */
struct ModelEdge
{
    int index;
    ModelVertex a;
    ModelVertex b;
    Rational weight;
    Rational filter_value;
};

enum class GraphKind { Full, Reduced };

/**
 * The (possibly filtered) model graph.
 */
struct ModelGraph
{
    GraphKind kind;
    int k;
    EdgeLengthVector lengths;
    std::vector<std::pair<ModelVertex, Rational> > vertices;   // sorted, with f_V
    std::vector<ModelEdge> edges;
    std::size_t global_edge_count;    // size of the stable edge index space

    bool has_vertex(const ModelVertex& v) const
    {
        auto it = std::lower_bound(
            this->vertices.begin(), this->vertices.end(), v,
            [](const auto& p, const ModelVertex& key){ return p.first < key; }
        );
        return it != this->vertices.end() && it->first == v;
    }

    /** Neighbors of `v` (by scanning the edge list; graphs are small). */
    std::vector<ModelVertex> neighbors(const ModelVertex& v) const
    {
        std::vector<ModelVertex> out;
        for (const auto& e : this->edges)
        {
            if (e.a == v)
                out.push_back(e.b);
            else if (e.b == v)
                out.push_back(e.a);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

/**
 * Build the full model graph.
 *
 * Vertices: all (x, y), x ≠ y, x, y ∈ {0..k}, with f_V(x, y) = L_x + L_y
 * (L_0 = 0).  Edges: {(x,0),(x,y)} with filter L_x and weight L_y, and
 * {(0,y),(x,y)} with filter L_y and weight L_x, for x, y ≥ 1, x ≠ y —
 * i.e. two labels are adjacent when one coordinate agrees and the other
 * passes through the center.
 */
inline ModelGraph build_full_model(const EdgeLengthVector& lengths)
{
    const int k = lengths.k;
    ModelGraph g;
    g.kind = GraphKind::Full;
    g.k = k;
    g.lengths = lengths;

    for (int x = 0; x <= k; ++x)
        for (int y = 0; y <= k; ++y)
        {
            if (x == y)
                continue;
            Rational fv = (x ? lengths.length(x) : Rational(0)) +
                          (y ? lengths.length(y) : Rational(0));
            g.vertices.emplace_back(ModelVertex{x, y}, fv);
        }
    std::sort(g.vertices.begin(), g.vertices.end());

    int idx = 0;
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y)
        {
            if (x == y)
                continue;
            // One point fixed on edge x, the other moving through the center.
            g.edges.push_back(ModelEdge{
                idx++, ModelVertex{x, 0}, ModelVertex{x, y},
                lengths.length(y), lengths.length(x)
            });
            // Symmetrically with the first point moving through the center.
            g.edges.push_back(ModelEdge{
                idx++, ModelVertex{0, y}, ModelVertex{x, y},
                lengths.length(x), lengths.length(y)
            });
        }
    g.global_edge_count = g.edges.size();
    return g;
}

/**
 * Build the reduced model graph.
 *
 * Every interior vertex (x, y) with x, y ≠ 0 has degree two; removing it
 * and joining its neighbors yields the graph on vertices {(x,0), (0,y)}
 * with one edge {(x,0),(0,y)} per ordered pair x ≠ y, filtered at
 * min(f_V(x,0), f_V(0,y)).  First homology is unchanged at every
 * threshold.
 */
inline ModelGraph build_reduced_model(const EdgeLengthVector& lengths)
{
    const int k = lengths.k;
    ModelGraph g;
    g.kind = GraphKind::Reduced;
    g.k = k;
    g.lengths = lengths;

    for (int i = 1; i <= k; ++i)
    {
        g.vertices.emplace_back(ModelVertex{i, 0}, lengths.length(i));
        g.vertices.emplace_back(ModelVertex{0, i}, lengths.length(i));
    }
    std::sort(g.vertices.begin(), g.vertices.end());

    int idx = 0;
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y)
        {
            if (x == y)
                continue;
            const Rational fe = std::min(lengths.length(x), lengths.length(y));
            g.edges.push_back(ModelEdge{
                idx++, ModelVertex{x, 0}, ModelVertex{0, y}, fe, fe
            });
        }
    g.global_edge_count = g.edges.size();
    return g;
}

/**
 * Superlevel subgraph at threshold r: keep vertices with f_V ≥ r and edges
 * with f_E ≥ r.  Edge indices are inherited from the parent, and every
 * surviving edge's endpoints survive (the edge filter is bounded by both
 * endpoint filters in both graph kinds).
 *
 * @throws std::invalid_argument if r ≤ 0.
 */
inline ModelGraph filter_at(const ModelGraph& g, const Rational& r)
{
    if (r <= 0)
        throw std::invalid_argument("filter_at: r must be positive");
    ModelGraph out;
    out.kind = g.kind;
    out.k = g.k;
    out.lengths = g.lengths;
    out.global_edge_count = g.global_edge_count;
    for (const auto& [v, fv] : g.vertices)
        if (fv >= r)
            out.vertices.emplace_back(v, fv);
    for (const auto& e : g.edges)
        if (e.filter_value >= r)
        {
            if (!out.has_vertex(e.a) || !out.has_vertex(e.b))
                throw std::logic_error("filter_at: edge outlived an endpoint");
            out.edges.push_back(e);
        }
    return out;
}

/**
 * Verify that g_small is a weighted subgraph of g_large: vertex and edge
 * sets contained (edges by stable index) and every shared edge at most as
 * heavy in g_small as in g_large.
 *
 * @throws std::invalid_argument on mismatched k or kind.
 */
inline bool subgraph_monotonicity_check(const ModelGraph& g_small,
                                        const ModelGraph& g_large)
{
    if (g_small.k != g_large.k || g_small.kind != g_large.kind)
        throw std::invalid_argument("subgraph_monotonicity_check: mismatched graphs");
    for (const auto& [v, fv] : g_small.vertices)
        if (!g_large.has_vertex(v))
            return false;
    std::map<int, const ModelEdge*> large_edges;
    for (const auto& e : g_large.edges)
        large_edges[e.index] = &e;
    for (const auto& e : g_small.edges)
    {
        auto it = large_edges.find(e.index);
        if (it == large_edges.end())
            return false;
        if (e.weight > it->second->weight)
            return false;
    }
    return true;
}

}   // namespace starph
