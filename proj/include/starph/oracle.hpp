/**
 * Independent geometric oracle: the restricted two-point configuration
 * space of the metric star, built directly as a polytopal complex.
 *
 * A configuration is an ordered pair of points on the star (k legs of
 * lengths ℓ₁ = L, ℓ₂, …, ℓ_k joined at a center) at path distance ≥ r.
 * Parametrizing each particle by (leg, distance from center) tiles the
 * space by one cell per ordered leg pair: for legs i ≠ j the rectangle
 * [0, ℓ_i] × [0, ℓ_j] clipped by x + y ≥ r (a pentagon, quadrilateral,
 * triangle, point, or nothing, depending on r), and for i = j the two
 * triangles |x − y| ≥ r inside the square.  Cells glue along the loci
 * where a particle sits at the center, which the canonical vertex naming
 * below makes automatic.  Betti numbers of the glued complex are computed
 * over GF(2) and serve as ground truth for the model graph.
 */

#pragma once

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "gf2.hpp"
#include "model.hpp"

namespace starph {

/**
 * A point of the star in canonical form: the center is (0, 0), a point at
 * distance 0 < x ≤ ℓ_i along leg i is (i, x) — so a leaf is (i, ℓ_i), and
 * every point has exactly one representation.
 */
struct ConfigPoint
{
    int leg;        // 0 for the center
    Rational pos;   // distance from the center; 0 only at the center

    friend bool operator==(const ConfigPoint& a, const ConfigPoint& b)
    {
        return a.leg == b.leg && a.pos == b.pos;
    }
    friend bool operator<(const ConfigPoint& a, const ConfigPoint& b)
    {
        if (a.leg != b.leg)
            return a.leg < b.leg;
        return a.pos < b.pos;
    }
};

/** Canonicalize (leg, distance): distance 0 is the center. */
inline ConfigPoint config_point(int leg, const Rational& pos,
                                const EdgeLengthVector& lengths)
{
    if (pos < 0 || pos > lengths.length(leg))
        throw std::invalid_argument("config_point: off the leg");
    if (pos == 0)
        return ConfigPoint{0, Rational(0)};
    return ConfigPoint{leg, pos};
}

enum class CellShape
{
    Empty,
    DegeneratePoint,
    Triangle,
    Quadrilateral,
    Pentagon,
    DiagTriangle
};

/**
 * One cell of the tiling: the ordered leg pair and the clipped polygon in
 * its (x, y) chart, corners in orientation order without repeats.
 */
struct PolytopalCell
{
    int leg1;
    int leg2;
    CellShape shape;
    std::vector<std::pair<Rational, Rational> > corners;
};

namespace detail {

/** Sutherland–Hodgman step: keep the part of `poly` with a·x + b·y ≥ c. */
inline std::vector<std::pair<Rational, Rational> > clip_halfplane(
    const std::vector<std::pair<Rational, Rational> >& poly,
    const Rational& a, const Rational& b, const Rational& c)
{
    std::vector<std::pair<Rational, Rational> > out;
    const auto value = [&](const std::pair<Rational, Rational>& p) {
        return Rational(a * p.first + b * p.second - c);
    };
    for (std::size_t i = 0; i < poly.size(); ++i)
    {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        const Rational fp = value(p), fq = value(q);
        if (fp >= 0)
            out.push_back(p);
        if ((fp < 0) != (fq < 0))
        {
            const Rational t = fp / (fp - fq);
            out.emplace_back(Rational(p.first + t * (q.first - p.first)),
                             Rational(p.second + t * (q.second - p.second)));
        }
    }
    // Collapse duplicates introduced by clipping through corners.
    std::vector<std::pair<Rational, Rational> > dedup;
    for (const auto& p : out)
        if (dedup.empty() || !(dedup.back() == p))
            dedup.push_back(p);
    while (dedup.size() > 1 && dedup.front() == dedup.back())
        dedup.pop_back();
    return dedup;
}

inline CellShape classify(bool diagonal, std::size_t corners)
{
    switch (corners)
    {
        case 0:  return CellShape::Empty;
        case 1:  return CellShape::DegeneratePoint;
        case 3:  return diagonal ? CellShape::DiagTriangle : CellShape::Triangle;
        case 4:  return CellShape::Quadrilateral;
        case 5:  return CellShape::Pentagon;
        default:
            throw std::logic_error("classify: impossible corner count");
    }
}

}   // namespace detail

/**
 * All nonempty cells of the distance-≥-r configuration space, ordered by
 * (leg1, leg2); the diagonal pair (i, i) contributes up to two triangles
 * (one per particle order).
 *
 * @throws std::invalid_argument unless r > 0.
 */
inline std::vector<PolytopalCell> enumerate_cells(
    const EdgeLengthVector& lengths, const Rational& r)
{
    if (r <= 0)
        throw std::invalid_argument("enumerate_cells: r must be positive");
    std::vector<PolytopalCell> out;
    const auto rect = [](const Rational& w, const Rational& h) {
        return std::vector<std::pair<Rational, Rational> >{
            {Rational(0), Rational(0)}, {w, Rational(0)},
            {w, h}, {Rational(0), h}};
    };
    for (int i = 1; i <= lengths.k; ++i)
        for (int j = 1; j <= lengths.k; ++j)
        {
            const Rational li = lengths.length(i), lj = lengths.length(j);
            if (i != j)
            {
                // Distance through the center: x + y ≥ r.
                auto poly = detail::clip_halfplane(rect(li, lj),
                                                   Rational(1), Rational(1), r);
                if (poly.empty())
                    continue;
                out.push_back(PolytopalCell{
                    i, j, detail::classify(false, poly.size()), std::move(poly)});
            }
            else
            {
                // Same leg: |x − y| ≥ r splits into two triangles.
                for (int sign : {+1, -1})
                {
                    auto poly = detail::clip_halfplane(
                        rect(li, li), Rational(-sign), Rational(sign), r);
                    if (poly.empty())
                        continue;
                    out.push_back(PolytopalCell{
                        i, j, detail::classify(true, poly.size()),
                        std::move(poly)});
                }
            }
        }
    return out;
}

/**
 * The glued simplicial complex: vertices are canonical configuration
 * pairs, so corners shared between charts (a particle at the center)
 * identify automatically; cells are fan-triangulated from their first
 * corner, which subdivides no boundary segment and therefore glues
 * adjacent cells coherently.
 */
struct ConfigComplex
{
    std::vector<std::pair<ConfigPoint, ConfigPoint> > vertices;
    std::set<std::pair<std::size_t, std::size_t> > edges;        // id pairs, a < b
    std::set<std::array<std::size_t, 3> > triangles;             // sorted ids
};

inline ConfigComplex triangulate(const std::vector<PolytopalCell>& cells,
                                 const EdgeLengthVector& lengths)
{
    ConfigComplex cx;
    std::map<std::pair<ConfigPoint, ConfigPoint>, std::size_t> vid;
    const auto vertex = [&](int leg1, int leg2,
                            const std::pair<Rational, Rational>& p) {
        const auto key = std::make_pair(config_point(leg1, p.first, lengths),
                                        config_point(leg2, p.second, lengths));
        auto [it, fresh] = vid.emplace(key, cx.vertices.size());
        if (fresh)
            cx.vertices.push_back(key);
        return it->second;
    };
    const auto edge = [&](std::size_t a, std::size_t b) {
        cx.edges.emplace(std::min(a, b), std::max(a, b));
    };

    for (const auto& cell : cells)
    {
        std::vector<std::size_t> ids;
        for (const auto& p : cell.corners)
            ids.push_back(vertex(cell.leg1, cell.leg2, p));
        if (ids.size() == 1)
            continue;   // an isolated vertex
        if (ids.size() == 2)
            throw std::logic_error("triangulate: degenerate segment cell");
        for (std::size_t t = 1; t + 1 < ids.size(); ++t)
        {
            std::array<std::size_t, 3> tri = {ids[0], ids[t], ids[t + 1]};
            std::sort(tri.begin(), tri.end());
            cx.triangles.insert(tri);
            edge(tri[0], tri[1]);
            edge(tri[0], tri[2]);
            edge(tri[1], tri[2]);
        }
    }
    return cx;
}

/**
 * (b₀, b₁) of the complex over GF(2), from the boundary-map ranks:
 * b₀ = V − rank ∂₁ and b₁ = E − rank ∂₁ − rank ∂₂.
 */
inline std::pair<std::size_t, std::size_t> complex_betti(const ConfigComplex& cx)
{
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> eid;
    for (const auto& e : cx.edges)
        eid.emplace(e, eid.size());

    std::vector<Gf2Vector> d1;
    for (const auto& [a, b] : cx.edges)
        d1.push_back(Gf2Vector(cx.vertices.size(), {a, b}));
    const std::size_t r1 = gf2_rank(d1, cx.vertices.size());

    std::vector<Gf2Vector> d2;
    for (const auto& [a, b, c] : cx.triangles)
        d2.push_back(Gf2Vector(cx.edges.size(),
                               {eid.at({a, b}), eid.at({a, c}), eid.at({b, c})}));
    const std::size_t r2 = gf2_rank(d2, cx.edges.size());

    return {cx.vertices.size() - r1, cx.edges.size() - r1 - r2};
}

/** Convenience: (b₀, b₁) of the configuration space at distance bound r. */
inline std::pair<std::size_t, std::size_t> oracle_betti(
    const EdgeLengthVector& lengths, const Rational& r)
{
    return complex_betti(triangulate(enumerate_cells(lengths, r), lengths));
}

}   // namespace starph
