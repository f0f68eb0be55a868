/**
 * starph — persistent first homology of two-point configuration spaces of
 * metric star graphs, over the (r, L) parameter plane.
 *
 * Subcommands: ranks, arrangement, decompose, verify, tree, oracle-check.
 * Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
 * If STARPH_OUT names a directory, reports are written there instead of
 * stdout and the file path is printed.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "../include/starph/cli.hpp"

using namespace starph;

namespace {

/* Scenario from --scenario FILE or from --k/--lengths flags. */
Scenario load_scenario(const std::string& scenario_file, int k,
                       const std::string& lengths_csv,
                       const std::string& format)
{
    Scenario sc;
    if (!scenario_file.empty())
    {
        std::ifstream in(scenario_file);
        if (!in)
            throw std::invalid_argument("cannot open scenario file " +
                                        scenario_file);
        nlohmann::json j;
        try
        {
            in >> j;
        }
        catch (const nlohmann::json::exception& e)
        {
            throw std::invalid_argument(std::string("scenario JSON: ") +
                                        e.what());
        }
        sc = parse_scenario(j);
    }
    else
    {
        if (lengths_csv.empty())
            throw std::invalid_argument(
                "need --scenario FILE or --k N --lengths CSV");
        std::stringstream ss(lengths_csv);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            auto r = parse_rational(item);
            if (!r)
                throw std::invalid_argument("malformed rational \"" + item +
                                            "\"");
            sc.lengths.push_back(*r);
        }
        sc.k = (k > 0) ? k : static_cast<int>(sc.lengths.size());
        if (sc.k != static_cast<int>(sc.lengths.size()))
            throw std::invalid_argument("--k disagrees with --lengths count");
        sc.normalized();   // validates
    }
    if (!format.empty())
        sc.format = format;
    return sc;
}

/* Print to stdout, or into $STARPH_OUT/<name>.<ext> if set. */
void emit(const std::string& name, const std::string& ext,
          const std::string& content)
{
    const char* dir = std::getenv("STARPH_OUT");
    if (dir && *dir)
    {
        const std::string path = std::string(dir) + "/" + name + "." + ext;
        std::ofstream out(path);
        if (!out)
            throw std::invalid_argument("cannot write " + path);
        out << content;
        std::cout << path << "\n";
    }
    else
        std::cout << content;
}

std::optional<Overlay> parse_overlay(const std::string& text)
{
    if (text.empty())
        return std::nullopt;
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument(
            "overlay must be trapezoid:BOUND or rectangle:BOUND");
    const std::string kind = text.substr(0, colon);
    auto bound = parse_rational(text.substr(colon + 1));
    if (!bound || (kind != "trapezoid" && kind != "rectangle"))
        throw std::invalid_argument("malformed overlay \"" + text + "\"");
    return Overlay{kind == "trapezoid" ? RegionKind::Trapezoid
                                       : RegionKind::Rectangle,
                   *bound};
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Persistent homology of star-graph configuration spaces"};
    app.require_subcommand(1);

    std::string scenario_file, lengths_csv, format, overlay_text;
    int k = 0, trials = 10;
    unsigned seed = 1;
    bool with_oracle = false;

    const auto add_scenario_flags = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", scenario_file, "Scenario JSON file");
        cmd->add_option("--k", k, "Number of star edges");
        cmd->add_option("--lengths", lengths_csv,
                        "Comma-separated lengths, first entry the varying L");
    };

    auto* ranks = app.add_subcommand("ranks", "Per-chamber rank table");
    add_scenario_flags(ranks);
    ranks->add_option("--format", format, "json|text");

    auto* arrangement =
        app.add_subcommand("arrangement", "Chamber diagram of the (r, L) plane");
    add_scenario_flags(arrangement);
    arrangement->add_option("--format", format, "svg|ascii|json");
    arrangement->add_option("--overlay", overlay_text,
                            "Shade a summand region, e.g. trapezoid:1/2");

    auto* decompose =
        app.add_subcommand("decompose", "Interval decomposition report");
    add_scenario_flags(decompose);

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    add_scenario_flags(verify);
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--trials", trials, "Trials per star size");
    verify->add_flag("--with-oracle", with_oracle,
                     "Also compare against the configuration-space oracle");

    auto* tree =
        app.add_subcommand("tree", "Biased spanning tree of the reduced model");
    add_scenario_flags(tree);

    auto* oracle_check = app.add_subcommand(
        "oracle-check", "Model vs configuration-space Betti numbers");
    add_scenario_flags(oracle_check);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        if (ranks->parsed())
        {
            const auto sc = load_scenario(scenario_file, k, lengths_csv,
                                          format.empty() ? "text" : format);
            if (sc.format == "json")
                emit("ranks", "json", ranks_report(sc).dump(2) + "\n");
            else if (sc.format == "text")
                emit("ranks", "txt", ranks_text(sc));
            else
                throw std::invalid_argument("unknown format " + sc.format);
        }
        else if (arrangement->parsed())
        {
            const auto sc = load_scenario(scenario_file, k, lengths_csv,
                                          format.empty() ? "ascii" : format);
            const auto overlay = parse_overlay(overlay_text);
            if (sc.format == "json")
                emit("arrangement", "json",
                     arrangement_json(sc).dump(2) + "\n");
            else if (sc.format == "svg")
                emit("arrangement", "svg", arrangement_svg(sc, overlay));
            else if (sc.format == "ascii")
                emit("arrangement", "txt", arrangement_ascii(sc, overlay));
            else
                throw std::invalid_argument("unknown format " + sc.format);
        }
        else if (decompose->parsed())
        {
            const auto sc =
                load_scenario(scenario_file, k, lengths_csv, "json");
            const auto result = decompose_report(sc);
            emit("decompose", "json", result.report.dump(2) + "\n");
            return result.pass ? 0 : 1;
        }
        else if (verify->parsed())
        {
            std::optional<Scenario> sc;
            if (!scenario_file.empty() || !lengths_csv.empty())
                sc = load_scenario(scenario_file, k, lengths_csv, "json");
            const auto result = verify_report(sc, seed, trials, with_oracle);
            emit("verify", "json", result.report.dump(2) + "\n");
            return result.pass ? 0 : 1;
        }
        else if (tree->parsed())
        {
            const auto sc =
                load_scenario(scenario_file, k, lengths_csv, "json");
            emit("tree", "json", tree_report(sc).dump(2) + "\n");
        }
        else if (oracle_check->parsed())
        {
            const auto sc =
                load_scenario(scenario_file, k, lengths_csv, "json");
            const auto result = oracle_check_report(sc);
            emit("oracle-check", "json", result.report.dump(2) + "\n");
            return result.pass ? 0 : 1;
        }
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
