/**
 * Command-line surface: scenario ingestion and the report generators
 * behind the `starph` tool (rank tables, arrangement diagrams as
 * SVG/ASCII/JSON, decomposition reports, the verification suite, biased
 * spanning trees, and oracle comparisons).
 *
 * Everything here is a pure function from a scenario to a document, so the
 * tool and the tests share one implementation.  Rationals appear in every
 * external format as "p/q" strings, never decimals; SVG geometry alone
 * uses floating point (it is a picture, not data).
 */

#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "homology.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "persistence.hpp"
#include "rational.hpp"
#include "spanning.hpp"

namespace starph {

/**
 * A parsed scenario: the star's size and lengths in user order (first
 * entry is the varying L), optional query points, and an output format.
 */
struct Scenario
{
    int k = 0;
    std::vector<Rational> lengths;
    std::vector<std::pair<Rational, Rational> > query_points;
    std::string format = "text";

    EdgeLengthVector normalized() const
    {
        return normalize_lengths(this->lengths);
    }
};

namespace detail {

inline Rational parse_rational_or_throw(const std::string& text)
{
    auto r = parse_rational(text);
    if (!r)
        throw std::invalid_argument("malformed rational \"" + text + "\"");
    return *r;
}

}   // namespace detail

/**
 * Parse a scenario JSON object: {"k": N, "lengths": ["p/q", …]} with
 * optional "query_points" ([[r, L], …]) and "format".  Unknown fields are
 * rejected; lengths must number exactly k.
 *
 * @throws std::invalid_argument with a description on any violation.
 */
inline Scenario parse_scenario(const nlohmann::json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("scenario must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "k" && key != "lengths" && key != "query_points" &&
            key != "format")
            throw std::invalid_argument("unknown scenario field \"" + key + "\"");

    Scenario sc;
    if (!j.contains("k") || !j["k"].is_number_integer())
        throw std::invalid_argument("scenario needs an integer \"k\"");
    sc.k = j["k"].get<int>();
    if (!j.contains("lengths") || !j["lengths"].is_array())
        throw std::invalid_argument("scenario needs a \"lengths\" array");
    for (const auto& entry : j["lengths"])
    {
        if (!entry.is_string())
            throw std::invalid_argument("lengths must be \"p/q\" strings");
        sc.lengths.push_back(detail::parse_rational_or_throw(entry));
    }
    if (static_cast<int>(sc.lengths.size()) != sc.k)
        throw std::invalid_argument("scenario lists " +
                                    std::to_string(sc.lengths.size()) +
                                    " lengths for k = " + std::to_string(sc.k));
    if (j.contains("query_points"))
    {
        if (!j["query_points"].is_array())
            throw std::invalid_argument("query_points must be an array");
        for (const auto& qp : j["query_points"])
        {
            if (!qp.is_array() || qp.size() != 2 || !qp[0].is_string() ||
                !qp[1].is_string())
                throw std::invalid_argument("query point must be [\"r\", \"L\"]");
            sc.query_points.emplace_back(
                detail::parse_rational_or_throw(qp[0]),
                detail::parse_rational_or_throw(qp[1]));
        }
    }
    if (j.contains("format"))
    {
        if (!j["format"].is_string())
            throw std::invalid_argument("format must be a string");
        sc.format = j["format"].get<std::string>();
    }
    sc.normalized();   // validates positivity and k ≥ 3
    return sc;
}

namespace detail {

inline nlohmann::json lengths_json(const std::vector<Rational>& lengths)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : lengths)
        out.push_back(rational_to_string(x));
    return out;
}

inline nlohmann::json band_json(const Chamber& c)
{
    nlohmann::json band = nlohmann::json::array();
    band.push_back(rational_to_string(c.a));
    if (c.b)
        band.push_back(rational_to_string(*c.b));
    else
        band.push_back("inf");
    return band;
}

inline std::string side_name(Side s)
{
    return s == Side::Above ? "above" : "below";
}

inline nlohmann::json chambers_json(const Representation& rep)
{
    const auto& lengths = rep.lengths;
    nlohmann::json chambers = nlohmann::json::array();
    for (std::size_t i = 0; i < rep.poset.chambers.size(); ++i)
    {
        const Chamber& c = rep.poset.chambers[i];
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["band"] = band_json(c);
        jc["side"] = side_name(c.side);
        jc["rank"] = rep.dim(i);
        const auto cf = closed_form_betti1(lengths.k, c, lengths);
        jc["closed_form"] = cf ? nlohmann::json(*cf) : nlohmann::json(nullptr);
        jc["match"] = !cf || *cf == rep.dim(i);
        chambers.push_back(jc);
    }
    return chambers;
}

}   // namespace detail

/**
 * Rank table: per chamber the band, side, Euler rank, closed-form rank
 * (null when no formula applies), and a match flag; plus ranks at any
 * query points.
 */
inline nlohmann::json ranks_report(const Scenario& sc)
{
    const auto lengths = sc.normalized();
    const auto rep = build_representation(lengths);

    nlohmann::json out;
    out["k"] = sc.k;
    out["lengths"] = detail::lengths_json(sc.lengths);
    nlohmann::json cvs = nlohmann::json::array();
    for (const auto& v : rep.poset.critical_values)
        cvs.push_back(rational_to_string(v));
    out["critical_values"] = cvs;
    out["chambers"] = detail::chambers_json(rep);

    if (!sc.query_points.empty())
    {
        nlohmann::json qps = nlohmann::json::array();
        for (const auto& [r, L] : sc.query_points)
        {
            nlohmann::json qp;
            qp["r"] = rational_to_string(r);
            qp["L"] = rational_to_string(L);
            const auto c = rep.poset.chamber_of(r, L);
            qp["rank"] = c ? nlohmann::json(rep.dim(*c))
                           : nlohmann::json(nullptr);
            qps.push_back(qp);
        }
        out["query_points"] = qps;
    }
    return out;
}

/** The rank table as aligned text. */
inline std::string ranks_text(const Scenario& sc)
{
    const auto report = ranks_report(sc);
    std::ostringstream os;
    os << "k = " << report["k"].get<int>() << ", lengths =";
    for (const auto& l : report["lengths"])
        os << " " << l.get<std::string>();
    os << "\n\n";
    os << "  band              side    rank  closed-form  match\n";
    for (const auto& c : report["chambers"])
    {
        std::string band = "(" + c["band"][0].get<std::string>() + ", " +
                           c["band"][1].get<std::string>() + "]";
        band.resize(std::max<std::size_t>(band.size(), 17), ' ');
        std::string side = c["side"].get<std::string>();
        side.resize(7, ' ');
        std::string rank = std::to_string(c["rank"].get<std::size_t>());
        rank.resize(6, ' ');
        std::string cf = c["closed_form"].is_null()
                             ? std::string("-")
                             : std::to_string(c["closed_form"].get<std::size_t>());
        cf.resize(13, ' ');
        os << "  " << band << " " << side << " " << rank << cf
           << (c["match"].get<bool>() ? "yes" : "NO") << "\n";
    }
    if (report.contains("query_points"))
        for (const auto& qp : report["query_points"])
            os << "  rank(" << qp["r"].get<std::string>() << ", "
               << qp["L"].get<std::string>() << ") = "
               << (qp["rank"].is_null()
                       ? std::string("-")
                       : std::to_string(qp["rank"].get<std::size_t>()))
               << "\n";
    return os.str();
}

/** Arrangement as JSON: hyperplanes with multiplicities plus the chambers. */
inline nlohmann::json arrangement_json(const Scenario& sc)
{
    const auto lengths = sc.normalized();
    const auto rep = build_representation(lengths);

    nlohmann::json out;
    out["k"] = sc.k;
    out["lengths"] = detail::lengths_json(sc.lengths);
    nlohmann::json planes = nlohmann::json::array();
    for (const auto& h : reduced_hyperplanes(lengths))
    {
        nlohmann::json jh;
        jh["form"] = (h.form == HyperplaneForm::Diagonal) ? "diagonal"
                                                          : "vertical";
        jh["value"] = rational_to_string(h.value);
        jh["multiplicity"] = h.multiplicity;
        jh["origin"] = h.origin;
        planes.push_back(jh);
    }
    out["hyperplanes"] = planes;
    out["chambers"] = detail::chambers_json(rep);
    return out;
}

/** An optional shaded region for the arrangement renderers. */
struct Overlay
{
    RegionKind kind;
    Rational bound;
};

namespace detail {

inline double to_double(const Rational& x)
{
    return x.convert_to<double>();
}

inline bool in_overlay(const Overlay& ov, const Rational& r, const Rational& L)
{
    if (r <= 0 || r > ov.bound)
        return false;
    return ov.kind == RegionKind::Rectangle || L >= r;
}

}   // namespace detail

/**
 * Arrangement diagram as SVG: r horizontal, L vertical, the diagonal, one
 * vertical per distinct ℓ_i with a multiplicity label, per-chamber rank
 * annotations, and an optional shaded interval-summand region.
 */
inline std::string arrangement_svg(const Scenario& sc,
                                   const std::optional<Overlay>& overlay =
                                       std::nullopt)
{
    const auto lengths = sc.normalized();
    const auto rep = build_representation(lengths);
    const Rational rmax = Rational(lengths.ell_max() * Rational(5, 4));
    const double W = 400, H = 200, M = 30;
    const auto X = [&](const Rational& r) {
        return M + W * detail::to_double(r) / detail::to_double(rmax);
    };
    const auto Y = [&](const Rational& L) {
        return M + H - H * detail::to_double(L) / detail::to_double(rmax);
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (W + 2 * M)
       << "\" height=\"" << (H + 2 * M) << "\" viewBox=\"0 0 " << (W + 2 * M)
       << " " << (H + 2 * M) << "\">\n";

    if (overlay)
    {
        os << "  <polygon points=\"";
        if (overlay->kind == RegionKind::Trapezoid)
            os << X(Rational(0)) << "," << Y(Rational(0)) << " "
               << X(overlay->bound) << "," << Y(overlay->bound) << " "
               << X(overlay->bound) << "," << Y(rmax) << " "
               << X(Rational(0)) << "," << Y(rmax);
        else
            os << X(Rational(0)) << "," << Y(Rational(0)) << " "
               << X(overlay->bound) << "," << Y(Rational(0)) << " "
               << X(overlay->bound) << "," << Y(rmax) << " "
               << X(Rational(0)) << "," << Y(rmax);
        os << "\" fill=\"#88aaff\" fill-opacity=\"0.35\"/>\n";
    }

    os << "  <rect x=\"" << M << "\" y=\"" << M << "\" width=\"" << W
       << "\" height=\"" << H << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << X(Rational(0)) << "\" y1=\"" << Y(Rational(0))
       << "\" x2=\"" << X(rmax) << "\" y2=\"" << Y(rmax)
       << "\" stroke=\"gray\"/>\n";
    os << "  <text x=\"" << (M + W / 2) << "\" y=\"" << (H + 2 * M - 6)
       << "\" font-size=\"12\">r</text>\n";
    os << "  <text x=\"8\" y=\"" << (M + H / 2)
       << "\" font-size=\"12\">L</text>\n";

    for (const auto& h : reduced_hyperplanes(lengths))
        if (h.form == HyperplaneForm::VerticalR)
        {
            os << "  <line x1=\"" << X(h.value) << "\" y1=\"" << M
               << "\" x2=\"" << X(h.value) << "\" y2=\"" << (M + H)
               << "\" stroke=\"black\" stroke-dasharray=\"4 2\"/>\n";
            os << "  <text x=\"" << X(h.value) << "\" y=\"" << (M - 6)
               << "\" font-size=\"10\">" << rational_to_string(h.value)
               << " (x" << h.multiplicity << ")</text>\n";
        }

    for (std::size_t i = 0; i < rep.poset.chambers.size(); ++i)
    {
        const Chamber& c = rep.poset.chambers[i];
        if (c.a >= rmax)
            continue;
        const Rational hi = (c.b && *c.b < rmax) ? *c.b : rmax;
        const Rational r = (c.a + hi) / 2;
        const Rational L = (c.side == Side::Above) ? Rational((r + rmax) / 2)
                                                   : Rational(r / 2);
        os << "  <text x=\"" << X(r) << "\" y=\"" << Y(L)
           << "\" font-size=\"11\" text-anchor=\"middle\">" << rep.dim(i)
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

/**
 * Arrangement diagram as a fixed 40×20 character grid: '|' on the
 * verticals, '/' on the diagonal, rank digits (base 36, '.' for zero)
 * elsewhere, '+' on overlay cells of rank zero.
 */
inline std::string arrangement_ascii(const Scenario& sc,
                                     const std::optional<Overlay>& overlay =
                                         std::nullopt)
{
    const int COLS = 40, ROWS = 20;
    const auto lengths = sc.normalized();
    const auto rep = build_representation(lengths);
    const Rational rmax = Rational(lengths.ell_max() * Rational(5, 4));

    std::ostringstream os;
    for (int row = 0; row < ROWS; ++row)
    {
        for (int col = 0; col < COLS; ++col)
        {
            // Parameter ranges of this cell (L decreasing with the row).
            const Rational r_lo = Rational(rmax * col / COLS);
            const Rational r_hi = Rational(rmax * (col + 1) / COLS);
            const Rational L_lo = Rational(rmax * (ROWS - 1 - row) / ROWS);
            const Rational L_hi = Rational(rmax * (ROWS - row) / ROWS);
            const Rational r_mid = Rational((r_lo + r_hi) / 2);
            const Rational L_mid = Rational((L_lo + L_hi) / 2);

            char ch = ' ';
            bool on_vertical = false;
            for (const auto& v : rep.poset.critical_values)
                if (r_lo <= v && v < r_hi)
                    on_vertical = true;
            if (on_vertical)
                ch = '|';
            else if (r_lo < L_hi && L_lo < r_hi)
                ch = '/';
            else
            {
                const auto c = rep.poset.chamber_of(r_mid, L_mid);
                const std::size_t rank = c ? rep.dim(*c) : 0;
                if (rank == 0)
                    ch = '.';
                else if (rank < 10)
                    ch = static_cast<char>('0' + rank);
                else if (rank < 36)
                    ch = static_cast<char>('a' + rank - 10);
                else
                    ch = '+';
                if (ch == '.' && overlay &&
                    detail::in_overlay(*overlay, r_mid, L_mid))
                    ch = '+';
            }
            os << ch;
        }
        os << "\n";
    }
    return os.str();
}

namespace detail {

inline nlohmann::json summands_json(const std::vector<IntervalSummand>& s)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : s)
    {
        nlohmann::json jx;
        jx["kind"] = (x.kind == RegionKind::Rectangle) ? "rectangle"
                                                       : "trapezoid";
        jx["bound"] = rational_to_string(x.bound);
        jx["multiplicity"] = x.multiplicity;
        out.push_back(jx);
    }
    return out;
}

}   // namespace detail

/** A report plus the overall pass flag that decides the exit code. */
struct CheckedReport
{
    nlohmann::json report;
    bool pass;
};

/**
 * Decomposition report: computed and predicted summands plus the full
 * verification record; `pass` iff every check holds.
 */
inline CheckedReport decompose_report(const Scenario& sc)
{
    const auto lengths = sc.normalized();
    const auto rep = build_representation(lengths);
    const auto summands = interval_decomposition(rep);
    const auto verification = verify_decomposition(rep, summands);

    nlohmann::json out;
    out["k"] = sc.k;
    out["lengths"] = detail::lengths_json(sc.lengths);
    out["summands"] = detail::summands_json(summands);
    out["predicted"] = detail::summands_json(predicted_decomposition(lengths));
    nlohmann::json v;
    v["pointwise_dims_match"] = verification.pointwise_dims_match;
    v["supports_are_intervals"] = verification.supports_are_intervals;
    v["structure_maps_injective"] = verification.structure_maps_injective;
    v["matches_predicted"] = verification.matches_predicted;
    v["detail"] = verification.detail;
    out["verification"] = v;
    return {out, verification.pass()};
}

/**
 * Biased-spanning-tree report for the reduced model: roots, tree edges
 * with their priorities, and the total priority.
 */
inline nlohmann::json tree_report(const Scenario& sc)
{
    const auto lengths = sc.normalized();
    const auto g = build_reduced_model(lengths);
    const auto w = filter_weights(g);
    const auto t = biased_spanning_tree(g, w);

    nlohmann::json out;
    out["kind"] = "reduced";
    out["k"] = sc.k;
    out["lengths"] = detail::lengths_json(sc.lengths);
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& v : t.roots)
        roots.push_back({v.x, v.y});
    out["roots"] = roots;
    nlohmann::json edges = nlohmann::json::array();
    std::map<int, const ModelEdge*> by_index;
    for (const auto& e : g.edges)
        by_index[e.index] = &e;
    for (int idx : t.edge_indices)
    {
        const ModelEdge& e = *by_index.at(idx);
        edges.push_back({idx,
                         {e.a.x, e.a.y},
                         {e.b.x, e.b.y},
                         rational_to_string(edge_priority(e, w))});
    }
    out["edges"] = edges;
    out["total_priority"] =
        rational_to_string(total_priority(g, t.edge_indices, w));
    return out;
}

/**
 * Oracle comparison: at every refined witness of every chamber, Betti
 * numbers of the triangulated configuration complex against component
 * count and Euler rank of the full model graph.
 */
inline CheckedReport oracle_check_report(const Scenario& sc)
{
    const auto lengths = sc.normalized();
    const auto poset =
        chamber_poset(enumerate_chambers(reduced_hyperplanes(lengths)));

    nlohmann::json points = nlohmann::json::array();
    bool pass = true;
    for (const auto& chamber : poset.chambers)
        for (const auto& [r, L] : refined_witnesses(lengths, chamber))
        {
            const auto at = lengths.with_first(L);
            const auto g = filter_at(build_full_model(at), r);
            const auto [b0, b1] = oracle_betti(at, r);
            const auto components =
                static_cast<std::size_t>(connected_components(g).first);
            const auto model_b1 = betti1_euler(g);
            const bool ok = (b0 == components) && (b1 == model_b1);
            pass = pass && ok;
            nlohmann::json p;
            p["r"] = rational_to_string(r);
            p["L"] = rational_to_string(L);
            p["oracle_b0"] = b0;
            p["oracle_b1"] = b1;
            p["model_components"] = components;
            p["model_b1"] = model_b1;
            p["match"] = ok;
            points.push_back(p);
        }

    nlohmann::json out;
    out["k"] = sc.k;
    out["lengths"] = detail::lengths_json(sc.lengths);
    out["points"] = points;
    out["pass"] = pass;
    return {out, pass};
}

namespace detail {

/** A random scenario with tail entries in {1/4, …, 6} and L = 10·max. */
inline EdgeLengthVector random_lengths(int k, std::mt19937& rng)
{
    std::vector<Rational> raw;
    Rational mx(0);
    for (int i = 1; i < k; ++i)
    {
        raw.push_back(Rational(1 + static_cast<int>(rng() % 24), 4));
        mx = std::max(mx, raw.back());
    }
    raw.insert(raw.begin(), Rational(10) * mx);
    return normalize_lengths(raw);
}

}   // namespace detail

/**
 * The verification suite: closed-form ranks at chamber witnesses,
 * decomposition checks, splitting agreement, filtration monotonicity on
 * random comparable pairs, and (optionally) oracle comparisons for k ≤ 5.
 * Deterministic for a fixed seed.
 */
inline CheckedReport verify_report(const std::optional<Scenario>& sc,
                                   unsigned seed, int trials,
                                   bool with_oracle)
{
    std::mt19937 rng(seed);
    std::vector<int> ks;
    if (sc)
        ks.push_back(sc->k);
    else
        for (int k = 3; k <= 6; ++k)
            ks.push_back(k);

    nlohmann::json checks = nlohmann::json::array();
    bool all_pass = true;
    const auto add_check = [&](const std::string& name, bool pass,
                               const std::string& detail) {
        nlohmann::json c;
        c["name"] = name;
        c["pass"] = pass;
        c["detail"] = detail;
        checks.push_back(c);
        all_pass = all_pass && pass;
    };

    // Closed-form ranks and decomposition checks per trial.
    {
        bool ranks_ok = true, dec_ok = true, split_ok = true;
        std::string note;
        for (int k : ks)
            for (int t = 0; t < trials; ++t)
            {
                const auto lengths = (sc && t == 0)
                                         ? sc->normalized()
                                         : detail::random_lengths(k, rng);
                const auto rep = build_representation(lengths);
                for (std::size_t i = 0; i < rep.poset.chambers.size(); ++i)
                {
                    const auto cf = closed_form_betti1(
                        k, rep.poset.chambers[i], lengths);
                    if (cf && *cf != rep.dim(i))
                    {
                        ranks_ok = false;
                        note += "rank mismatch k=" + std::to_string(k) + "; ";
                    }
                }
                const auto dec = interval_decomposition(rep);
                if (!verify_decomposition(rep, dec).pass())
                {
                    dec_ok = false;
                    note += "decomposition failed k=" + std::to_string(k) + "; ";
                }
                const auto split = decompose_by_splitting(rep);
                if (split.size() != dec.size())
                    split_ok = false;
                else
                    for (std::size_t i = 0; i < dec.size(); ++i)
                        if (split[i].kind != dec[i].kind ||
                            split[i].bound != dec[i].bound ||
                            split[i].multiplicity != dec[i].multiplicity)
                            split_ok = false;
            }
        add_check("closed_form_ranks", ranks_ok, note);
        add_check("decomposition", dec_ok, "");
        add_check("splitting_agreement", split_ok, "");
    }

    // Filtration monotonicity on 100 random comparable parameter pairs.
    {
        bool ok = true;
        for (int n = 0; n < 100; ++n)
        {
            const int k = ks[n % ks.size()];
            const auto lengths = detail::random_lengths(k, rng);
            const Rational r2(1 + static_cast<int>(rng() % 24), 4);
            const Rational r1 = Rational(r2 + Rational(static_cast<int>(rng() % 8), 4));
            const Rational L1(1 + static_cast<int>(rng() % 40), 2);
            const Rational L2 = Rational(L1 + Rational(static_cast<int>(rng() % 8), 2));
            // (r1, L1) ⪯ (r2, L2): larger threshold, smaller L.
            const auto small =
                filter_at(build_reduced_model(lengths.with_first(L1)), r1);
            const auto large =
                filter_at(build_reduced_model(lengths.with_first(L2)), r2);
            ok = ok && subgraph_monotonicity_check(small, large);
        }
        add_check("monotonicity", ok, "");
    }

    if (with_oracle)
    {
        bool ok = true;
        std::string note;
        for (int k : ks)
        {
            if (k > 5)
            {
                note += "k=" + std::to_string(k) + " skipped (oracle is k<=5); ";
                continue;
            }
            const auto lengths = sc ? sc->normalized()
                                    : detail::random_lengths(k, rng);
            const Scenario probe{
                k,
                [&] {
                    std::vector<Rational> ls = {lengths.first};
                    ls.insert(ls.end(), lengths.tail.begin(),
                              lengths.tail.end());
                    return ls;
                }(),
                {},
                "json"};
            ok = ok && oracle_check_report(probe).pass;
        }
        add_check("oracle_agreement", ok, note);
    }

    nlohmann::json out;
    out["seed"] = seed;
    out["trials"] = trials;
    out["with_oracle"] = with_oracle;
    out["checks"] = checks;
    out["pass"] = all_pass;
    return {out, all_pass};
}

}   // namespace starph
