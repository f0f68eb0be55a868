/**
 * First homology of filtered model graphs over GF(2).
 *
 * For a graph, rank H₁ = E − V + C by the Euler–Poincaré formula, and the
 * cycle space has a basis of fundamental cycles: one per non-tree edge of a
 * spanning forest, namely that edge plus the unique tree path between its
 * endpoints.  All cycle vectors live in the fixed coordinate system
 * GF(2)^{edges of the unfiltered parent graph}, so the maps induced by
 * subgraph inclusions are literal coordinate inclusions, and their ranks are
 * plain dimension counts.
 *
 * Closed-form ranks are provided for the chambers where a formula applies:
 * k² − 3k + 1 at small r, k² − 5k + 5 in the adjacent band and below the
 * diagonal, 1 in the (ℓ₄, ℓ₃] Above band, 0 beyond.
 */

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arrangement.hpp"
#include "gf2.hpp"
#include "model.hpp"
#include "spanning.hpp"

namespace starph {

/** A GF(2) vector over a parent graph's stable edge index space whose
 *  support is an edge-disjoint union of cycles. */
typedef Gf2Vector CycleVector;

/**
 * A subspace of the cycle space of (a filtered stage of) a model graph,
 * with an independent basis over the shared ambient coordinates.
 */
struct CycleSubspace
{
    std::size_t ambient_dim;
    std::vector<CycleVector> basis;

    std::size_t dim() const { return this->basis.size(); }
};

/**
 * Path components by union-find with path compression.  Component labels
 * are 0, 1, … in order of each component's smallest vertex.
 *
 * @returns (component count, vertex → label map).
 */
inline std::pair<int, std::map<ModelVertex, int> >
connected_components(const ModelGraph& g)
{
    std::map<ModelVertex, int> vid;
    for (const auto& [v, fv] : g.vertices)
        vid.emplace(v, static_cast<int>(vid.size()));

    std::vector<int> parent(vid.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges)
    {
        int a = find(vid.at(e.a)), b = find(vid.at(e.b));
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }

    // Vertices are sorted, so numbering components by first appearance
    // orders them by smallest vertex.
    std::map<int, int> label_of_root;
    std::map<ModelVertex, int> labeling;
    for (const auto& [v, fv] : g.vertices)
    {
        const int root = find(vid.at(v));
        auto [it, fresh] =
            label_of_root.emplace(root, static_cast<int>(label_of_root.size()));
        labeling[v] = it->second;
    }
    return {static_cast<int>(label_of_root.size()), labeling};
}

/** rank H₁ = E − V + C (0 for the empty graph). */
inline std::size_t betti1_euler(const ModelGraph& g)
{
    if (g.vertices.empty())
        return 0;
    const long long b1 = static_cast<long long>(g.edges.size()) -
                         static_cast<long long>(g.vertices.size()) +
                         connected_components(g).first;
    if (b1 < 0)
        throw std::logic_error("betti1_euler: negative rank");
    return static_cast<std::size_t>(b1);
}

/**
 * Closed-form rank H₁ over a chamber of the reduced arrangement, when one
 * of the rank theorems covers it; std::nullopt for the intermediate
 * chambers with no formula.
 *
 * Cases (descending tail ℓ₂ ≥ … ≥ ℓ_k; band (a, b], side Above means
 * L ≥ r): r ≤ min(L, ℓ_k) → k²−3k+1; for k ≥ 4 only: ℓ_k < r ≤ ℓ_{k−1}
 * Above and r ≤ ℓ_k Below → k²−5k+5, ℓ₄ < r ≤ ℓ₃ Above → 1, ℓ₄ < r Below
 * → 0; and r > ℓ₂ → 0 on either side.  The k ≥ 4 guard matters: at k = 3
 * the literal k²−5k+5 would be negative while the true rank is 0.
 */
inline std::optional<std::size_t> closed_form_betti1(
    int k, const Chamber& chamber, const EdgeLengthVector& lengths)
{
    const auto band_at_most = [&](const Rational& v) {
        return chamber.b && *chamber.b <= v;
    };
    const auto band_above = [&](const Rational& v) {
        return chamber.a >= v;
    };
    const std::size_t kk = static_cast<std::size_t>(k);

    if (chamber.side == Side::Above && band_at_most(lengths.ell_min()))
        return kk * kk - 3 * kk + 1;
    if (k >= 4)
    {
        if (chamber.side == Side::Above && band_above(lengths.ell_min()) &&
            band_at_most(lengths.length(k - 1)))
            return kk * kk - 5 * kk + 5;
        if (chamber.side == Side::Below && band_at_most(lengths.ell_min()))
            return kk * kk - 5 * kk + 5;
        if (chamber.side == Side::Above && band_above(lengths.length(4)) &&
            band_at_most(lengths.length(3)))
            return 1;
        if (chamber.side == Side::Below && band_above(lengths.length(4)))
            return 0;
    }
    if (band_above(lengths.ell_max()))
        return 0;
    return std::nullopt;
}

/**
 * Fundamental cycles of a spanning forest: one cycle per non-forest edge,
 * supported on that edge plus the forest path between its endpoints.
 * Together they form a basis of the cycle space.
 *
 * @throws std::invalid_argument if the forest is not a spanning subgraph.
 */
inline std::vector<CycleVector> fundamental_cycles(const ModelGraph& g,
                                                   const SpanningTree& forest)
{
    std::map<int, const ModelEdge*> by_index;
    for (const auto& e : g.edges)
        by_index[e.index] = &e;

    std::map<ModelVertex, std::vector<const ModelEdge*> > tree_adj;
    for (const auto& [v, fv] : g.vertices)
        tree_adj[v];
    for (int idx : forest.edge_indices)
    {
        auto it = by_index.find(idx);
        if (it == by_index.end())
            throw std::invalid_argument("fundamental_cycles: forest edge not in graph");
        tree_adj[it->second->a].push_back(it->second);
        tree_adj[it->second->b].push_back(it->second);
    }

    // The forest must be acyclic and reach every vertex of its component:
    // |forest edges| = V − C guarantees both, given it is a subgraph.
    const int comps = connected_components(g).first;
    if (forest.edge_indices.size() + comps != g.vertices.size())
        throw std::invalid_argument("fundamental_cycles: not a spanning forest");

    // BFS through forest edges from `from`, returning the edge path to `to`.
    auto tree_path = [&](const ModelVertex& from, const ModelVertex& to) {
        std::map<ModelVertex, const ModelEdge*> via;
        std::vector<ModelVertex> queue = {from};
        via[from] = nullptr;
        for (std::size_t head = 0; head < queue.size(); ++head)
        {
            const ModelVertex u = queue[head];
            if (u == to)
                break;
            for (const ModelEdge* e : tree_adj.at(u))
            {
                const ModelVertex w = (e->a == u) ? e->b : e->a;
                if (via.emplace(w, e).second)
                    queue.push_back(w);
            }
        }
        std::vector<int> path;
        ModelVertex cur = to;
        while (!(cur == from))
        {
            const ModelEdge* e = via.at(cur);
            if (!e)
                throw std::invalid_argument("fundamental_cycles: endpoints not connected in forest");
            path.push_back(e->index);
            cur = (e->a == cur) ? e->b : e->a;
        }
        return path;
    };

    std::vector<CycleVector> cycles;
    std::vector<bool> in_forest_by_pos(g.edges.size(), false);
    {
        std::map<int, bool> in_forest;
        for (int idx : forest.edge_indices)
            in_forest[idx] = true;
        for (std::size_t p = 0; p < g.edges.size(); ++p)
            in_forest_by_pos[p] = in_forest.count(g.edges[p].index) > 0;
    }
    for (std::size_t p = 0; p < g.edges.size(); ++p)
    {
        if (in_forest_by_pos[p])
            continue;
        const ModelEdge& e = g.edges[p];
        CycleVector cyc(g.global_edge_count);
        cyc.set(static_cast<std::size_t>(e.index), true);
        for (int idx : tree_path(e.a, e.b))
            cyc.set(static_cast<std::size_t>(idx), true);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

/**
 * Basis of the GF(2) cycle space of g, in the parent graph's global edge
 * coordinates, via the biased spanning forest (any forest gives the same
 * span; the biased one keeps the basis aligned with the decomposition
 * pipeline's conventions).  dim = E − V + C.
 */
inline CycleSubspace cycle_space(const ModelGraph& g)
{
    CycleSubspace out;
    out.ambient_dim = g.global_edge_count;
    if (g.vertices.empty())
        return out;
    out.basis = fundamental_cycles(g, biased_spanning_forest(g, filter_weights(g)));
    if (out.basis.size() != betti1_euler(g))
        throw std::logic_error("cycle_space: dimension mismatch");
    return out;
}

/**
 * Rank of the inclusion-induced map between cycle subspaces sharing the
 * global coordinates.  Verifies span(sub) ⊆ span(super) and injectivity
 * (rank = dim sub), both of which the theory guarantees.
 *
 * @throws std::invalid_argument if containment fails or ambients differ.
 */
inline std::size_t structure_map_rank(const CycleSubspace& sub,
                                      const CycleSubspace& super)
{
    if (sub.ambient_dim != super.ambient_dim)
        throw std::invalid_argument("structure_map_rank: ambient mismatch");
    Gf2Echelon ech(super.ambient_dim);
    for (const auto& v : super.basis)
        ech.insert(v);
    for (const auto& v : sub.basis)
        if (!ech.contains(v))
            throw std::invalid_argument("structure_map_rank: containment violated");
    const std::size_t rank = gf2_rank(sub.basis, sub.ambient_dim);
    if (rank != sub.dim())
        throw std::logic_error("structure_map_rank: basis not independent");
    return rank;
}

}   // namespace starph
