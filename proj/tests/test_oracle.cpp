/**
 * Tests for the geometric configuration-space oracle: polygon clipping,
 * cell census, gluing, Betti numbers, and agreement with the model graph.
 */

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "../include/starph/homology.hpp"
#include "../include/starph/oracle.hpp"

using namespace starph;

static EdgeLengthVector lv(const std::vector<Rational>& raw)
{
    return normalize_lengths(raw);
}

/* The cell for the ordered leg pair (i, j), which must be unique. */
static const PolytopalCell& cell_of(const std::vector<PolytopalCell>& cells,
                                    int i, int j)
{
    const PolytopalCell* found = nullptr;
    for (const auto& c : cells)
        if (c.leg1 == i && c.leg2 == j)
        {
            REQUIRE(found == nullptr);
            found = &c;
        }
    REQUIRE(found != nullptr);
    return *found;
}

TEST_CASE("config_point canonicalization", "[oracle]")
{
    auto l = lv({Rational(2), Rational(1), Rational(1)});
    REQUIRE(config_point(2, Rational(0), l) == (ConfigPoint{0, Rational(0)}));
    REQUIRE(config_point(1, Rational(0), l) ==
            config_point(3, Rational(0), l));
    REQUIRE(config_point(2, Rational(1), l) == (ConfigPoint{2, Rational(1)}));
    REQUIRE_THROWS_AS(config_point(2, Rational(3, 2), l),
                      std::invalid_argument);
}

TEST_CASE("cell shapes across the r range", "[oracle]")
{
    // Legs 1 and 2 of lengths 2 and 1.
    auto l = lv({Rational(2), Rational(1), Rational(1)});
    typedef std::vector<std::pair<Rational, Rational> > Poly;

    SECTION("r below both lengths: pentagon")
    {
        auto c = cell_of(enumerate_cells(l, Rational(1, 2)), 1, 2);
        REQUIRE(c.shape == CellShape::Pentagon);
        REQUIRE(c.corners == Poly{{Rational(1, 2), Rational(0)},
                                  {Rational(2), Rational(0)},
                                  {Rational(2), Rational(1)},
                                  {Rational(0), Rational(1)},
                                  {Rational(0), Rational(1, 2)}});
    }
    SECTION("r between the lengths: quadrilateral")
    {
        auto c = cell_of(enumerate_cells(l, Rational(3, 2)), 1, 2);
        REQUIRE(c.shape == CellShape::Quadrilateral);
        REQUIRE(c.corners == Poly{{Rational(3, 2), Rational(0)},
                                  {Rational(2), Rational(0)},
                                  {Rational(2), Rational(1)},
                                  {Rational(1, 2), Rational(1)}});
    }
    SECTION("r between max and the sum: triangle")
    {
        auto c = cell_of(enumerate_cells(l, Rational(5, 2)), 1, 2);
        REQUIRE(c.shape == CellShape::Triangle);
        REQUIRE(c.corners == Poly{{Rational(2), Rational(1, 2)},
                                  {Rational(2), Rational(1)},
                                  {Rational(3, 2), Rational(1)}});
    }
    SECTION("r equal to the sum: a single point (both leaves)")
    {
        auto c = cell_of(enumerate_cells(l, Rational(3)), 1, 2);
        REQUIRE(c.shape == CellShape::DegeneratePoint);
        REQUIRE(c.corners == Poly{{Rational(2), Rational(1)}});
    }
    SECTION("r beyond the sum: no cell")
    {
        for (const auto& c : enumerate_cells(l, Rational(4)))
            REQUIRE(!(c.leg1 == 1 && c.leg2 == 2));
    }
    SECTION("diagonal cell: two triangles with legs ℓ − r")
    {
        auto cells = enumerate_cells(l, Rational(1, 2));
        int diag = 0;
        for (const auto& c : cells)
            if (c.leg1 == 1 && c.leg2 == 1)
            {
                ++diag;
                REQUIRE(c.shape == CellShape::DiagTriangle);
                REQUIRE(c.corners.size() == 3);
            }
        REQUIRE(diag == 2);
    }
    SECTION("r must be positive")
    {
        REQUIRE_THROWS_AS(enumerate_cells(l, Rational(0)),
                          std::invalid_argument);
    }
}

TEST_CASE("equilateral k = 3 census and Betti numbers", "[oracle]")
{
    auto l = lv({Rational(1), Rational(1), Rational(1)});
    auto cells = enumerate_cells(l, Rational(1, 2));
    std::size_t pentagons = 0, diag_triangles = 0;
    for (const auto& c : cells)
    {
        if (c.shape == CellShape::Pentagon)
            ++pentagons;
        if (c.shape == CellShape::DiagTriangle)
            ++diag_triangles;
    }
    REQUIRE(cells.size() == 12);
    REQUIRE(pentagons == 6);
    REQUIRE(diag_triangles == 6);

    auto [b0, b1] = oracle_betti(l, Rational(1, 2));
    REQUIRE(b0 == 1);
    REQUIRE(b1 == 1);
}

TEST_CASE("gluing identifies shared boundary vertices", "[oracle]")
{
    auto l = lv({Rational(2), Rational(1), Rational(1)});
    auto cells = enumerate_cells(l, Rational(1, 2));
    auto cx = triangulate(cells, l);

    std::size_t raw_corners = 0;
    for (const auto& c : cells)
        raw_corners += c.corners.size();
    REQUIRE(cx.vertices.size() < raw_corners);

    // (Center, leaf of leg 2) lies on the boundary of the cells (i, 2) for
    // every i ≠ 2 — one glued vertex, not three.
    const auto key = std::make_pair(ConfigPoint{0, Rational(0)},
                                    ConfigPoint{2, Rational(1)});
    REQUIRE(std::count(cx.vertices.begin(), cx.vertices.end(), key) == 1);

    // Euler characteristic agrees with the rank computation.
    auto [b0, b1] = complex_betti(cx);
    const long long euler =
        static_cast<long long>(cx.vertices.size()) -
        static_cast<long long>(cx.edges.size()) +
        static_cast<long long>(cx.triangles.size());
    REQUIRE(euler == static_cast<long long>(b0) - static_cast<long long>(b1));
}

TEST_CASE("fixed Betti values and degeneracies", "[oracle]")
{
    SECTION("k = 4, tail (3, 2, 1), L = 10, r = 3/2")
    {
        auto l = lv({Rational(10), Rational(3), Rational(2), Rational(1)});
        auto [b0, b1] = oracle_betti(l, Rational(3, 2));
        REQUIRE(b0 == 1);
        REQUIRE(b1 == 1);   // k²−5k+5 at k = 4
    }
    SECTION("r beyond every pairwise distance: empty complex")
    {
        auto l = lv({Rational(1), Rational(1), Rational(1)});
        auto [b0, b1] = oracle_betti(l, Rational(3));
        REQUIRE(b0 == 0);
        REQUIRE(b1 == 0);
    }
}

TEST_CASE("complex-level invariants", "[oracle]")
{
    auto l = lv({Rational(3), Rational(2), Rational(1), Rational(1, 2)});
    for (const Rational r : {Rational(1, 3), Rational(3, 4), Rational(5, 4)})
    {
        auto cells = enumerate_cells(l, r);
        auto cx = triangulate(cells, l);

        // Path distance ≥ r at every vertex of the complex.
        for (const auto& [p, q] : cx.vertices)
        {
            const Rational dist = (p.leg == q.leg)
                ? Rational(p.pos > q.pos ? p.pos - q.pos : q.pos - p.pos)
                : Rational(p.pos + q.pos);
            REQUIRE(dist >= r);
        }

        // Triangle boundaries are independent (b₂ = 0): rank ∂₂ = #F.
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> eid;
        for (const auto& e : cx.edges)
            eid.emplace(e, eid.size());
        std::vector<Gf2Vector> d2;
        for (const auto& [a, b, c] : cx.triangles)
            d2.push_back(Gf2Vector(cx.edges.size(),
                                   {eid.at({a, b}), eid.at({a, c}),
                                    eid.at({b, c})}));
        REQUIRE(gf2_rank(d2, cx.edges.size()) == cx.triangles.size());
    }
}

TEST_CASE("oracle agrees with the full model graph", "[oracle]")
{
    std::mt19937 rng(91823);
    for (int k = 3; k <= 5; ++k)
        for (int trial = 0; trial < 6; ++trial)
        {
            std::vector<Rational> raw;
            Rational mx(1);
            for (int i = 1; i < k; ++i)
            {
                const int num = 1 + static_cast<int>(rng() % 12);
                raw.push_back(Rational(num, 3));
                mx = std::max(mx, raw.back());
            }
            raw.insert(raw.begin(), Rational(10) * mx);
            auto lengths = lv(raw);

            auto poset =
                chamber_poset(enumerate_chambers(reduced_hyperplanes(lengths)));
            for (const auto& chamber : poset.chambers)
                for (const auto& [r, L] : refined_witnesses(lengths, chamber))
                {
                    auto at = lengths.with_first(L);
                    auto g = filter_at(build_full_model(at), r);
                    const auto [b0, b1] = oracle_betti(at, r);
                    INFO("k=" << k << " r=" << rational_to_string(r)
                              << " L=" << rational_to_string(L));
                    REQUIRE(b0 == static_cast<std::size_t>(
                                      connected_components(g).first));
                    REQUIRE(b1 == betti1_euler(g));
                }
        }
}
