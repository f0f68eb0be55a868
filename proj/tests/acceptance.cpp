/**
 * Acceptance suite: ten end-to-end checks, one PASS/FAIL line each, all
 * exact (rational/integer equality, no tolerances).  Exit code 0 iff every
 * criterion passes.
 */

#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../include/starph/cli.hpp"
#include "../include/starph/homology.hpp"
#include "../include/starph/model.hpp"
#include "../include/starph/oracle.hpp"
#include "../include/starph/persistence.hpp"
#include "../include/starph/spanning.hpp"

using namespace starph;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool pass)
{
    std::cout << "Criterion " << number << " ("
              << what << "): " << (pass ? "PASS" : "FAIL") << std::endl;
    if (!pass)
        ++failures;
}

/* Random tail of k−1 entries in {1/4, …, 6}; distinct entries on request.
 * Returns the normalized lengths with L = 10·max(tail). */
EdgeLengthVector random_lengths(int k, std::mt19937& rng, bool distinct)
{
    std::set<Rational> used;
    std::vector<Rational> raw;
    Rational mx(0);
    for (int i = 1; i < k; ++i)
    {
        Rational x;
        do
            x = Rational(1 + static_cast<int>(rng() % 24), 4);
        while (distinct && used.count(x));
        used.insert(x);
        raw.push_back(x);
        mx = std::max(mx, x);
    }
    raw.insert(raw.begin(), Rational(10) * mx);
    return normalize_lengths(raw);
}

/* Criterion 1: closed-form ranks agree with Euler ranks at every chamber
 * witness for k = 3..8, 25 random tails each. */
void criterion_1()
{
    std::mt19937 rng(101);
    bool pass = true;
    for (int k = 3; k <= 8 && pass; ++k)
        for (int t = 0; t < 25 && pass; ++t)
        {
            const auto lengths = random_lengths(k, rng, false);
            const auto rep = build_representation(lengths);
            for (std::size_t i = 0; i < rep.poset.chambers.size(); ++i)
            {
                const auto cf =
                    closed_form_betti1(k, rep.poset.chambers[i], lengths);
                if (cf && *cf != rep.dim(i))
                    pass = false;
            }
        }
    report(1, "closed-form rank formulas", pass);
}

/* Criterion 2: the k = 5 rank table with ascending input tail (1,2,3,4). */
void criterion_2()
{
    const auto rep = build_representation(normalize_lengths(
        {Rational(10), Rational(1), Rational(2), Rational(3), Rational(4)}));
    std::map<std::pair<int, int>, std::size_t> got;   // (band, above?1:0)
    for (std::size_t i = 0; i < rep.poset.chambers.size(); ++i)
    {
        const Chamber& c = rep.poset.chambers[i];
        got[{c.id / 2, c.side == Side::Above ? 1 : 0}] = rep.dim(i);
    }
    const std::map<std::pair<int, int>, std::size_t> want = {
        {{0, 1}, 11}, {{1, 1}, 5}, {{2, 1}, 1}, {{3, 1}, 0}, {{4, 1}, 0},
        {{0, 0}, 5},  {{1, 0}, 1}, {{2, 0}, 0}, {{3, 0}, 0}, {{4, 0}, 0}};
    report(2, "k=5 worked rank table", got == want);
}

/* Criterion 3: interval decompositions equal the closed-form multiset and
 * sum pointwise to the ranks, for distinct tails, k = 3..8 x 25. */
void criterion_3()
{
    std::mt19937 rng(303);
    bool pass = true;
    for (int k = 3; k <= 8 && pass; ++k)
        for (int t = 0; t < 25 && pass; ++t)
        {
            const auto lengths = random_lengths(k, rng, true);
            const auto rep = build_representation(lengths);
            const auto dec = interval_decomposition(rep);
            const auto verification = verify_decomposition(rep, dec);
            pass = verification.matches_predicted &&
                   verification.pointwise_dims_match;
        }
    report(3, "decomposition vs closed-form table", pass);
}

/* Criterion 4: with an all-equal tail the summands merge to k²−5k+5
 * rectangles and 2k−4 trapezoids, k = 4..8. */
void criterion_4()
{
    bool pass = true;
    for (int k = 4; k <= 8; ++k)
    {
        std::vector<Rational> raw(static_cast<std::size_t>(k), Rational(2));
        raw[0] = Rational(20);
        const auto rep = build_representation(normalize_lengths(raw));
        const auto dec = interval_decomposition(rep);
        pass = pass && dec.size() == 2 &&
               dec[0].kind == RegionKind::Rectangle &&
               dec[0].bound == 2 &&
               dec[0].multiplicity == k * k - 5 * k + 5 &&
               dec[1].kind == RegionKind::Trapezoid &&
               dec[1].bound == 2 && dec[1].multiplicity == 2 * k - 4;
    }
    report(4, "equal-length merged multiplicities", pass);
}

/* Criterion 5: the documented k = 4 cycle chains generate the adapted
 * basis and the Below-chamber space. */
void criterion_5()
{
    const auto lengths = normalize_lengths(
        {Rational(10), Rational(3), Rational(2), Rational(1)});
    const auto g = build_reduced_model(lengths);
    const auto rep = build_representation(lengths);

    // Edge {(x,0),(0,y)} of the reduced model by its vertex labels.
    const auto edge_index = [&](int x, int y) {
        for (const auto& e : g.edges)
            if (e.a == ModelVertex{x, 0} && e.b == ModelVertex{0, y})
                return static_cast<std::size_t>(e.index);
        throw std::logic_error("edge not found");
    };
    const auto chain = [&](const std::vector<std::pair<int, int> >& labels) {
        Gf2Vector v(g.global_edge_count);
        for (const auto& [x, y] : labels)
            v.set(edge_index(x, y), true);
        return v;
    };
    const std::vector<Gf2Vector> sigma = {
        chain({{1, 2}, {3, 2}, {3, 1}, {2, 1}, {2, 3}, {1, 3}}),
        chain({{1, 2}, {3, 2}, {3, 1}, {2, 1}, {2, 4}, {1, 4}}),
        chain({{2, 1}, {3, 1}, {3, 4}, {2, 4}}),
        chain({{3, 1}, {4, 1}, {4, 2}, {3, 2}}),
        chain({{2, 1}, {3, 1}, {3, 2}, {4, 2}, {4, 3}, {2, 3}})};

    bool pass = true;
    try
    {
        const auto basis = adapted_basis(rep);
        Gf2Echelon span_B(rep.ambient_dim);
        for (const auto& [v, supp] : basis)
            span_B.insert(v);
        pass = pass && basis.size() == 5 && span_B.rank() == 5;
        for (const auto& s : sigma)
            pass = pass && span_B.contains(s);
        pass = pass && gf2_rank(sigma, rep.ambient_dim) == 5;

        // tau = sigma_3 + sigma_5 spans the Below-chamber space.
        const Gf2Vector tau = sigma[2] ^ sigma[4];
        const CycleSubspace* below = nullptr;
        for (std::size_t i = 0; i < rep.poset.chambers.size(); ++i)
            if (rep.poset.chambers[i].id == 1)
                below = &rep.spaces[i];
        Gf2Echelon span_below(rep.ambient_dim);
        for (const auto& v : below->basis)
            span_below.insert(v);
        pass = pass && below->dim() == 1 && !tau.is_zero() &&
               span_below.contains(tau);

        // Summands: one rectangle and one trapezoid at the smallest
        // length, one trapezoid at the next, multiplicities 1, 3, 1.
        const auto dec = interval_decomposition(rep);
        pass = pass && dec.size() == 3 &&
               dec[0].kind == RegionKind::Rectangle && dec[0].bound == 1 &&
               dec[0].multiplicity == 1 &&
               dec[1].kind == RegionKind::Trapezoid && dec[1].bound == 1 &&
               dec[1].multiplicity == 3 &&
               dec[2].kind == RegionKind::Trapezoid && dec[2].bound == 2 &&
               dec[2].multiplicity == 1;
    }
    catch (const std::exception&)
    {
        pass = false;
    }
    report(5, "k=4 base-case cycle chains", pass);
}

/* Criterion 6: structure maps along the poset are injective, k <= 8. */
void criterion_6()
{
    std::mt19937 rng(606);
    bool pass = true;
    for (int k = 3; k <= 8 && pass; ++k)
        for (int t = 0; t < 3 && pass; ++t)
        {
            const auto rep =
                build_representation(random_lengths(k, rng, false));
            for (std::size_t p = 0; p < rep.poset.chambers.size(); ++p)
                for (std::size_t q = 0; q < rep.poset.chambers.size(); ++q)
                    if (rep.poset.le(p, q))
                    {
                        try
                        {
                            if (structure_map_rank(rep.spaces[p],
                                                   rep.spaces[q]) !=
                                rep.dim(p))
                                pass = false;
                        }
                        catch (const std::exception&)
                        {
                            pass = false;
                        }
                    }
        }
    report(6, "structure-map injectivity", pass);
}

/* Criterion 7: greedy biased trees are exhaustively optimal for k <= 5,
 * and the minimum-vertex extension preserves the optimum. */
void criterion_7()
{
    std::mt19937 rng(707);
    bool pass = true;
    for (int k = 3; k <= 5 && pass; ++k)
        for (int t = 0; t < 3 && pass; ++t)
        {
            const auto lengths = random_lengths(k, rng, false);
            const auto g = build_reduced_model(lengths);
            const auto w = filter_weights(g);
            Rational best(-1);
            all_spanning_trees(g, [&](const std::vector<int>& tree) {
                best = std::max(best, total_priority(g, tree, w));
            });
            const auto greedy = biased_spanning_tree(g, w);
            pass = pass && total_priority(g, greedy.edge_indices, w) == best;

            // Remove a minimum-weight center vertex, re-solve, extend.
            const ModelVertex v0{0, k};
            ModelGraph without = g;
            std::erase_if(without.vertices,
                          [&](const auto& p) { return p.first == v0; });
            std::erase_if(without.edges, [&](const ModelEdge& e) {
                return e.a == v0 || e.b == v0;
            });
            const auto small =
                biased_spanning_tree(without, filter_weights(without));
            const auto ext = extend_biased_tree(small, g, v0, w);
            pass = pass && total_priority(g, ext.edge_indices, w) == best;
        }
    report(7, "biased spanning trees optimal", pass);
}

/* Criterion 8: configuration-space Betti numbers equal model component
 * counts and Euler ranks at every refined witness, k = 3..5 x 10 tails. */
void criterion_8()
{
    std::mt19937 rng(808);
    bool pass = true;
    for (int k = 3; k <= 5 && pass; ++k)
        for (int t = 0; t < 10 && pass; ++t)
        {
            const auto lengths = random_lengths(k, rng, false);
            const auto poset = chamber_poset(
                enumerate_chambers(reduced_hyperplanes(lengths)));
            for (const auto& chamber : poset.chambers)
                for (const auto& [r, L] : refined_witnesses(lengths, chamber))
                {
                    const auto at = lengths.with_first(L);
                    const auto g = filter_at(build_full_model(at), r);
                    const auto [b0, b1] = oracle_betti(at, r);
                    if (b0 != static_cast<std::size_t>(
                                  connected_components(g).first) ||
                        b1 != betti1_euler(g))
                        pass = false;
                }
        }
    report(8, "geometric oracle agreement", pass);
}

/* Criterion 9: ranks are constant across the full-arrangement refinement
 * of each reduced chamber and equal the reduced-model rank, k <= 6. */
void criterion_9()
{
    std::mt19937 rng(909);
    bool pass = true;
    for (int k = 3; k <= 6 && pass; ++k)
        for (int t = 0; t < 3 && pass; ++t)
        {
            const auto lengths = random_lengths(k, rng, false);
            const auto rep = build_representation(lengths);
            for (std::size_t i = 0; i < rep.poset.chambers.size(); ++i)
                for (const auto& [r, L] :
                     refined_witnesses(lengths, rep.poset.chambers[i]))
                {
                    const auto at = lengths.with_first(L);
                    if (betti1_euler(filter_at(build_full_model(at), r)) !=
                            rep.dim(i) ||
                        betti1_euler(filter_at(build_reduced_model(at), r)) !=
                            rep.dim(i))
                        pass = false;
                }
        }
    report(9, "rank constancy across refinement", pass);
}

/* Criterion 10: the structural property suite — fundamental-cycle counts,
 * even degrees of cycle vectors, filtration monotonicity on 100 random
 * comparable pairs, and scale invariance of the decomposition. */
void criterion_10()
{
    std::mt19937 rng(1010);
    bool pass = true;

    for (int n = 0; n < 20 && pass; ++n)
    {
        const int k = 3 + static_cast<int>(rng() % 4);
        const auto lengths = random_lengths(k, rng, false);
        const Rational r(1 + static_cast<int>(rng() % 24), 4);
        const auto g = filter_at(build_reduced_model(lengths), r);
        if (g.vertices.empty())
            continue;
        const auto space = cycle_space(g);
        pass = pass && space.dim() == betti1_euler(g);
        for (const auto& cyc : space.basis)
        {
            std::map<ModelVertex, int> degree;
            for (const auto& e : g.edges)
                if (cyc.get(static_cast<std::size_t>(e.index)))
                {
                    ++degree[e.a];
                    ++degree[e.b];
                }
            for (const auto& [v, d] : degree)
                pass = pass && d % 2 == 0;
        }
    }

    for (int n = 0; n < 100 && pass; ++n)
    {
        const int k = 3 + static_cast<int>(rng() % 4);
        const auto lengths = random_lengths(k, rng, false);
        const Rational r2(1 + static_cast<int>(rng() % 24), 4);
        const Rational r1 = Rational(r2 + Rational(static_cast<int>(rng() % 8), 4));
        const Rational L1(1 + static_cast<int>(rng() % 40), 2);
        const Rational L2 = Rational(L1 + Rational(static_cast<int>(rng() % 8), 2));
        const auto small =
            filter_at(build_reduced_model(lengths.with_first(L1)), r1);
        const auto large =
            filter_at(build_reduced_model(lengths.with_first(L2)), r2);
        pass = pass && subgraph_monotonicity_check(small, large);
    }

    {
        const auto lengths = normalize_lengths({Rational(10), Rational(4),
                                                Rational(3), Rational(2),
                                                Rational(1)});
        std::vector<Rational> scaled = {Rational(35)};
        for (const auto& x : lengths.tail)
            scaled.push_back(Rational(x * Rational(7, 2)));
        const auto dec =
            interval_decomposition(build_representation(lengths));
        const auto dec2 = interval_decomposition(
            build_representation(normalize_lengths(scaled)));
        pass = pass && dec.size() == dec2.size();
        for (std::size_t i = 0; pass && i < dec.size(); ++i)
            pass = dec[i].kind == dec2[i].kind &&
                   Rational(dec[i].bound * Rational(7, 2)) == dec2[i].bound &&
                   dec[i].multiplicity == dec2[i].multiplicity;
    }
    report(10, "structural property suite", pass);
}

}   // namespace

int main()
{
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS"
                                : std::to_string(failures) + " CRITERIA FAILED")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
