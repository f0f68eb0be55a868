/**
 * Biased spanning trees.
 *
 * Every vertex of the model graph carries a weight (its filter value); an
 * edge's priority is the minimum of its endpoint weights, and a biased
 * spanning tree is one maximizing the total priority.  Prim's algorithm for
 * maximum spanning trees — seeded at a heaviest vertex — produces one, and a
 * tree of G − v₀ for a minimum-weight vertex v₀ extends to one of G by any
 * edge incident to v₀.  Fundamental cycles of biased trees are the raw
 * material for the adapted bases of the decomposition pipeline.
 *
 * A brute-force enumerator of all spanning trees (contraction/deletion with
 * a bridge test, guarded to ≤ 20 edges) serves as the exactness oracle.
 */

#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "model.hpp"
#include "rational.hpp"

namespace starph {

typedef std::map<ModelVertex, Rational> VertexWeights;

/**
 * A spanning forest of (the vertices of) a model graph, stored as the list
 * of chosen edge indices plus one root per component.
 */
struct SpanningTree
{
    std::vector<int> edge_indices;     // sorted
    std::vector<ModelVertex> roots;    // one per component, sorted
};

/** Vertex weights used throughout: the filter values f_V. */
inline VertexWeights filter_weights(const ModelGraph& g)
{
    VertexWeights w;
    for (const auto& [v, fv] : g.vertices)
        w[v] = fv;
    return w;
}

/**
 * Priority of an edge: the minimum of its endpoint weights.
 *
 * @throws std::invalid_argument if an endpoint has no weight.
 */
inline Rational edge_priority(const ModelEdge& e, const VertexWeights& weights)
{
    auto ia = weights.find(e.a);
    auto ib = weights.find(e.b);
    if (ia == weights.end() || ib == weights.end())
        throw std::invalid_argument("edge_priority: unweighted endpoint");
    return std::min(ia->second, ib->second);
}

/** Total priority of a set of edges (by index into g.edges). */
inline Rational total_priority(const ModelGraph& g,
                               const std::vector<int>& edge_indices,
                               const VertexWeights& weights)
{
    std::map<int, const ModelEdge*> by_index;
    for (const auto& e : g.edges)
        by_index[e.index] = &e;
    Rational total(0);
    for (int i : edge_indices)
        total += edge_priority(*by_index.at(i), weights);
    return total;
}

namespace detail {

/** Normalized endpoint pair for deterministic lexicographic tie-breaking. */
inline std::pair<ModelVertex, ModelVertex> sorted_endpoints(const ModelEdge& e)
{
    return (e.a < e.b) ? std::make_pair(e.a, e.b) : std::make_pair(e.b, e.a);
}

}   // namespace detail

/**
 * Prim's algorithm for a maximum-priority spanning forest, one tree per
 * component.  Each tree starts at its component's maximum-weight vertex
 * (smallest label on ties); among equal-priority frontier edges the one
 * with lexicographically smallest sorted endpoints wins.  The greedy is
 * exact for this objective (matroid optimality).
 */
inline SpanningTree biased_spanning_forest(const ModelGraph& g,
                                           const VertexWeights& weights)
{
    SpanningTree out;
    std::map<ModelVertex, bool> in_tree;
    for (const auto& [v, fv] : g.vertices)
        in_tree[v] = false;

    auto grow_from = [&](const ModelVertex& root) {
        in_tree[root] = true;
        out.roots.push_back(root);
        for (;;)
        {
            const ModelEdge* best = nullptr;
            for (const auto& e : g.edges)
            {
                if (in_tree.at(e.a) == in_tree.at(e.b))
                    continue;   // both inside or both outside
                if (!best)
                {
                    best = &e;
                    continue;
                }
                const Rational pe = edge_priority(e, weights);
                const Rational pb = edge_priority(*best, weights);
                if (pe > pb ||
                    (pe == pb &&
                     detail::sorted_endpoints(e) < detail::sorted_endpoints(*best)))
                    best = &e;
            }
            if (!best)
                break;
            // Frontier edges of other components are excluded because this
            // loop only runs while the current component is incomplete; an
            // edge with exactly one endpoint marked touches this component.
            out.edge_indices.push_back(best->index);
            in_tree[in_tree.at(best->a) ? best->b : best->a] = true;
        }
    };

    for (;;)
    {
        // Heaviest unreached vertex (smallest label on ties) seeds a tree.
        const ModelVertex* root = nullptr;
        const Rational* best_w = nullptr;
        for (const auto& [v, fv] : g.vertices)
        {
            if (in_tree.at(v))
                continue;
            auto it = weights.find(v);
            if (it == weights.end())
                throw std::invalid_argument("biased_spanning_forest: unweighted vertex");
            if (!root || it->second > *best_w)
            {
                root = &v;
                best_w = &it->second;
            }
        }
        if (!root)
            break;
        grow_from(*root);
    }
    std::sort(out.edge_indices.begin(), out.edge_indices.end());
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

/**
 * As biased_spanning_forest, but the graph must be connected.
 *
 * @throws std::invalid_argument if g is disconnected.
 */
inline SpanningTree biased_spanning_tree(const ModelGraph& g,
                                         const VertexWeights& weights)
{
    SpanningTree t = biased_spanning_forest(g, weights);
    if (t.roots.size() > 1)
        throw std::invalid_argument("biased_spanning_tree: graph is disconnected");
    return t;
}

/**
 * Extend a biased spanning tree of g − v₀ to one of g, where v₀ has the
 * minimum vertex weight.  Any edge incident to v₀ has priority w(v₀), so
 * each choice is optimal; the lexicographically smallest is taken.
 *
 * @throws std::invalid_argument if v₀ is not minimum-weight or has no
 *         incident edge.
 */
inline SpanningTree extend_biased_tree(const SpanningTree& t,
                                       const ModelGraph& g,
                                       const ModelVertex& v0,
                                       const VertexWeights& weights)
{
    auto it = weights.find(v0);
    if (it == weights.end())
        throw std::invalid_argument("extend_biased_tree: v0 unweighted");
    for (const auto& [v, w] : weights)
        if (w < it->second)
            throw std::invalid_argument("extend_biased_tree: v0 not minimum-weight");

    const ModelEdge* pick = nullptr;
    for (const auto& e : g.edges)
    {
        if (e.a != v0 && e.b != v0)
            continue;
        if (!pick ||
            detail::sorted_endpoints(e) < detail::sorted_endpoints(*pick))
            pick = &e;
    }
    if (!pick)
        throw std::invalid_argument("extend_biased_tree: v0 has no incident edge");

    SpanningTree out = t;
    out.edge_indices.push_back(pick->index);
    std::sort(out.edge_indices.begin(), out.edge_indices.end());
    return out;
}

/**
 * Enumerate every spanning tree of a connected graph exactly once, by
 * recursive contraction/deletion: the first live edge is either included
 * (endpoints contracted) or excluded — exclusion allowed only when the
 * edge is not a bridge of the remaining graph.
 *
 * @param g       Connected graph with at most 20 edges (guard).
 * @param visitor Called once per spanning tree with sorted edge indices.
 * @throws std::invalid_argument if the guard is exceeded.
 */
inline void all_spanning_trees(const ModelGraph& g,
                               const std::function<void(const std::vector<int>&)>& visitor)
{
    if (g.edges.size() > 20)
        throw std::invalid_argument("all_spanning_trees: more than 20 edges");
    const std::size_t n = g.vertices.size();
    if (n == 0)
        return;

    std::map<ModelVertex, int> vid;
    for (const auto& [v, fv] : g.vertices)
        vid.emplace(v, static_cast<int>(vid.size()));

    struct Dsu
    {
        std::vector<int> parent;
        explicit Dsu(std::size_t n) : parent(n)
        {
            std::iota(parent.begin(), parent.end(), 0);
        }
        int find(int x)
        {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        }
        bool unite(int a, int b)
        {
            a = find(a);
            b = find(b);
            if (a == b)
                return false;
            parent[b] = a;
            return true;
        }
    };

    std::vector<std::pair<int, int> > ends;   // by edge list position
    for (const auto& e : g.edges)
        ends.emplace_back(vid.at(e.a), vid.at(e.b));

    // Whether the edges at positions >= pos, plus the already-contracted
    // classes in base, connect everything.
    auto connects = [&](const Dsu& base, std::size_t pos, std::size_t skip) {
        Dsu d = base;
        std::size_t classes = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (d.find(static_cast<int>(v)) == static_cast<int>(v))
                ++classes;
        for (std::size_t i = pos; i < ends.size() && classes > 1; ++i)
            if (i != skip && d.unite(ends[i].first, ends[i].second))
                --classes;
        return classes == 1;
    };

    std::vector<int> chosen;
    std::function<void(Dsu, std::size_t, std::size_t)> recurse =
        [&](Dsu dsu, std::size_t pos, std::size_t classes) {
            if (classes == 1)
            {
                std::vector<int> tree;
                for (int p : chosen)
                    tree.push_back(g.edges[p].index);
                std::sort(tree.begin(), tree.end());
                visitor(tree);
                return;
            }
            if (pos >= ends.size())
                return;
            const auto [a, b] = ends[pos];
            Dsu probe = dsu;
            if (probe.find(a) == probe.find(b))
            {
                // Self-loop after contraction: never in a tree.
                recurse(std::move(dsu), pos + 1, classes);
                return;
            }
            // Include the edge.
            chosen.push_back(static_cast<int>(pos));
            probe.unite(a, b);
            recurse(probe, pos + 1, classes - 1);
            chosen.pop_back();
            // Exclude it, unless it is a bridge of what remains.
            if (connects(dsu, pos + 1, pos))
                recurse(std::move(dsu), pos + 1, classes);
        };
    recurse(Dsu(n), 0, n);
}

/** Materializing convenience wrapper around the visitor form. */
inline std::vector<SpanningTree> all_spanning_trees(const ModelGraph& g)
{
    std::vector<SpanningTree> out;
    all_spanning_trees(g, [&](const std::vector<int>& edges) {
        SpanningTree t;
        t.edge_indices = edges;
        if (!g.vertices.empty())
            t.roots.push_back(g.vertices.front().first);
        out.push_back(std::move(t));
    });
    return out;
}

}   // namespace starph
