/**
 * Hyperplane arrangements and chambers of the (r, L) parameter plane.
 *
 * First homology of the filtered model graph can only change across finitely
 * many lines in the positive quadrant: verticals r = c for critical values c
 * built from the tail lengths, the diagonal r = L, and (for the full
 * arrangement) slope lines r = L + ℓ_i.  The reduced arrangement keeps just
 * the verticals r = ℓ_i and the diagonal — the only lines across which the
 * rank actually jumps — so its chambers are r-bands split by the diagonal.
 *
 * Boundary convention: superlevel sets are closed (filter ≥ r), so chambers
 * are half-open bands (a, b] and the diagonal itself belongs to the Above
 * (L ≥ r) side.
 */

#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "model.hpp"
#include "rational.hpp"

namespace starph {

enum class HyperplaneForm { VerticalR, Diagonal, SlopeLine };

/**
 * One line of an arrangement.  `value` is the r-intercept of a vertical,
 * the L-offset of a slope line (r = L + offset), and unused (zero) for the
 * diagonal r = L.  Coincident lines are merged with a multiplicity.
 */
struct Hyperplane
{
    HyperplaneForm form;
    Rational value;
    int multiplicity;
    std::string origin;     // which length combination produced the line

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

enum class Side { Above, Below };

/**
 * A chamber of the reduced arrangement: the set of points (r, L) with
 * a < r ≤ b and L ≥ r (Above) or L < r (Below).  b may be +∞ (absent).
 */
struct Chamber
{
    Rational a;
    std::optional<Rational> b;     // std::nullopt means +infinity
    Side side;
    int id;

    bool contains(const Rational& r, const Rational& L) const
    {
        if (!(this->a < r && (!this->b || r <= *this->b)))
            return false;
        return (this->side == Side::Above) ? (L >= r) : (L < r);
    }
};

/**
 * The chambers of a reduced arrangement with the order induced from the
 * parameter poset (r descending, L ascending): P ⪯ Q when some point of P
 * is ⪯ some point of Q, in which case the filtered graph over P is a
 * subgraph of the one over Q.
 */
struct ChamberPoset
{
    std::vector<Rational> critical_values;           // distinct, ascending
    std::vector<Chamber> chambers;
    std::vector<std::vector<bool> > relation;        // relation[p][q] = p ⪯ q
    std::vector<std::optional<std::size_t> > dims;   // optional rank annotations

    bool le(std::size_t p, std::size_t q) const { return this->relation[p][q]; }

    /** Index of the chamber containing (r, L), if r, L > 0. */
    std::optional<std::size_t> chamber_of(const Rational& r,
                                          const Rational& L) const
    {
        if (r <= 0 || L <= 0)
            return std::nullopt;
        for (std::size_t i = 0; i < this->chambers.size(); ++i)
            if (this->chambers[i].contains(r, L))
                return i;
        return std::nullopt;
    }
};

/**
 * The full arrangement: the diagonal (from r = L_1 = L), verticals r = ℓ_i,
 * slope lines r = L + ℓ_i, and pair-sum verticals r = ℓ_i + ℓ_j for
 * 2 ≤ i < j ≤ k, with coincident lines merged.
 */
inline std::vector<Hyperplane> full_hyperplanes(const EdgeLengthVector& lengths)
{
    std::vector<Hyperplane> out;
    out.push_back(Hyperplane{HyperplaneForm::Diagonal, Rational(0), 1, "r=L"});

    auto add = [&out](HyperplaneForm form, const Rational& value,
                      const std::string& origin) {
        for (auto& h : out)
            if (h.form == form && h.value == value)
            {
                ++h.multiplicity;
                return;
            }
        out.push_back(Hyperplane{form, value, 1, origin});
    };

    const int k = lengths.k;
    for (int i = 2; i <= k; ++i)
    {
        add(HyperplaneForm::VerticalR, lengths.length(i),
            "r=l" + std::to_string(i));
        add(HyperplaneForm::SlopeLine, lengths.length(i),
            "r=L+l" + std::to_string(i));
    }
    for (int i = 2; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            add(HyperplaneForm::VerticalR, lengths.length(i) + lengths.length(j),
                "r=l" + std::to_string(i) + "+l" + std::to_string(j));
    return out;
}

/**
 * The reduced arrangement: the diagonal plus the verticals r = ℓ_i only.
 * Pair-sum verticals and slope lines never change the rank of first
 * homology and are dropped.
 */
inline std::vector<Hyperplane> reduced_hyperplanes(const EdgeLengthVector& lengths)
{
    std::vector<Hyperplane> out;
    out.push_back(Hyperplane{HyperplaneForm::Diagonal, Rational(0), 1, "r=L"});
    for (int i = 2; i <= lengths.k; ++i)
    {
        bool merged = false;
        for (auto& h : out)
            if (h.form == HyperplaneForm::VerticalR &&
                h.value == lengths.length(i))
            {
                ++h.multiplicity;
                merged = true;
                break;
            }
        if (!merged)
            out.push_back(Hyperplane{HyperplaneForm::VerticalR,
                                     lengths.length(i), 1,
                                     "r=l" + std::to_string(i)});
    }
    return out;
}

/**
 * Enumerate the chambers of a reduced arrangement: bands (c_j, c_{j+1}]
 * between consecutive distinct critical values (with c_0 = 0 and the last
 * band unbounded), each split into an Above and a Below chamber.
 * Chamber ids: 2·band for Above, 2·band + 1 for Below.
 */
inline ChamberPoset enumerate_chambers(const std::vector<Hyperplane>& reduced)
{
    ChamberPoset cs;
    std::set<Rational> values;
    for (const auto& h : reduced)
        if (h.form == HyperplaneForm::VerticalR)
            values.insert(h.value);
    cs.critical_values.assign(values.begin(), values.end());

    Rational lo(0);
    for (std::size_t j = 0; j <= cs.critical_values.size(); ++j)
    {
        std::optional<Rational> hi;
        if (j < cs.critical_values.size())
            hi = cs.critical_values[j];
        const int base = static_cast<int>(2 * j);
        cs.chambers.push_back(Chamber{lo, hi, Side::Above, base});
        cs.chambers.push_back(Chamber{lo, hi, Side::Below, base + 1});
        if (hi)
            lo = *hi;
    }
    cs.dims.assign(cs.chambers.size(), std::nullopt);
    return cs;
}

/**
 * Fill in the order relation: P ⪯ Q iff sup(P's r-interval) > inf(Q's
 * r-interval) and not (P Above, Q Below).  This closed form reproduces the
 * existential "some point of P lies below some point of Q" definition
 * because L is unbounded within each side; it is already reflexive,
 * antisymmetric, and transitive (verified).
 */
inline ChamberPoset chamber_poset(ChamberPoset cs)
{
    const std::size_t n = cs.chambers.size();
    cs.relation.assign(n, std::vector<bool>(n, false));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
        {
            const Chamber& P = cs.chambers[p];
            const Chamber& Q = cs.chambers[q];
            const bool r_ok = !P.b || *P.b > Q.a;
            const bool side_ok =
                !(P.side == Side::Above && Q.side == Side::Below);
            cs.relation[p][q] = r_ok && side_ok;
        }
    // Sanity: partial-order axioms.
    for (std::size_t p = 0; p < n; ++p)
    {
        if (!cs.relation[p][p])
            throw std::logic_error("chamber_poset: not reflexive");
        for (std::size_t q = 0; q < n; ++q)
        {
            if (p != q && cs.relation[p][q] && cs.relation[q][p])
                throw std::logic_error("chamber_poset: not antisymmetric");
            for (std::size_t s = 0; s < n; ++s)
                if (cs.relation[p][q] && cs.relation[q][s] &&
                    !cs.relation[p][s])
                    throw std::logic_error("chamber_poset: not transitive");
        }
    }
    return cs;
}

/**
 * A representative interior point of a chamber: r is the band midpoint
 * (or a + 1 for the unbounded band); L = r + 1 on the Above side,
 * L = r/2 on the Below side.
 */
inline std::pair<Rational, Rational> chamber_witness(const Chamber& c)
{
    const Rational r = c.b ? Rational((c.a + *c.b) / 2) : Rational(c.a + 1);
    const Rational L = (c.side == Side::Above) ? Rational(r + 1) : Rational(r / 2);
    return {r, L};
}

/**
 * Witness points of every cell of the full-arrangement refinement of one
 * reduced-arrangement chamber.
 *
 * The r-interval of the chamber is refined by all vertical lines of the
 * full arrangement (tail lengths and pair sums) and a midpoint r is taken
 * in each sub-band (lo + 1 in the final unbounded one).  For each such r,
 * the L-range of the chamber side is refined by the slope lines
 * L = r − ℓ_i and the diagonal, and a representative L is taken per cell.
 * Every returned point avoids every hyperplane of the full arrangement,
 * so each sits at a single combinatorial type.
 */
inline std::vector<std::pair<Rational, Rational> > refined_witnesses(
    const EdgeLengthVector& lengths, const Chamber& chamber)
{
    std::set<Rational> verticals;
    for (const auto& h : full_hyperplanes(lengths))
        if (h.form == HyperplaneForm::VerticalR)
            verticals.insert(h.value);

    std::vector<Rational> breaks = {chamber.a};
    for (const auto& v : verticals)
        if (chamber.a < v && (!chamber.b || v < *chamber.b))
            breaks.push_back(v);
    if (chamber.b)
        breaks.push_back(*chamber.b);
    else
        breaks.push_back(breaks.back() + 2);

    std::vector<std::pair<Rational, Rational> > out;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    {
        const Rational r = (breaks[i] + breaks[i + 1]) / 2;
        if (chamber.side == Side::Above)
        {
            // Slope lines L = r − ℓ_i lie strictly below the diagonal, so
            // the Above side is a single cell; one interior point suffices.
            out.emplace_back(r, r + 1);
        }
        else
        {
            // Below side: refine 0 < L < r at the slope-line crossings.
            std::set<Rational> cuts = {Rational(0), r};
            for (int j = 2; j <= lengths.k; ++j)
            {
                const Rational c = r - lengths.length(j);
                if (c > 0 && c < r)
                    cuts.insert(c);
            }
            std::vector<Rational> cv(cuts.begin(), cuts.end());
            for (std::size_t j = 0; j + 1 < cv.size(); ++j)
                out.emplace_back(r, (cv[j] + cv[j + 1]) / 2);
        }
    }
    return out;
}

}   // namespace starph
