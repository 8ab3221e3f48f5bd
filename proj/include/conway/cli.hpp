#pragma once

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "conway/combination.hpp"
#include "conway/core.hpp"
#include "conway/fixture_table.hpp"
#include "conway/gauss_diagram.hpp"
#include "conway/pairing.hpp"
#include "conway/polynomial.hpp"
#include "conway/skein.hpp"
#include "conway/state_sum.hpp"

namespace conway {

namespace cli_detail {

inline std::string render(const Polynomial& p, bool machine) {
    return machine ? p.machine_str() : p.str();
}

inline CombinationStore make_store(const std::string& cache_dir) {
    if (cache_dir.empty()) return CombinationStore();
    return CombinationStore(std::filesystem::path(cache_dir));
}

} // namespace cli_detail

/// Runs one CLI invocation. Exit status: 0 on success, 1 when validation or
/// verification fails, 2 on usage errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conway polynomials of knots and two-component links from Gauss codes"};
    app.require_subcommand(1);

    std::string code;
    std::string cache_dir;
    std::string direction = "asc";
    std::string out_path;
    std::string table_path;
    std::string method = "skein";
    int max_degree = 0;
    int degree = 0;
    int combo_size = 0;
    bool machine = false;

    auto* validate = app.add_subcommand("validate", "parse a Gauss code and echo it canonically");
    validate->add_option("code", code, "Gauss code")->required();

    auto* pairing = app.add_subcommand("pairing", "Conway polynomial via arrow-diagram pairing");
    pairing->add_option("--code", code, "Gauss code")->required();
    pairing->add_option("--max-degree", max_degree, "highest degree to compute")->required();
    pairing->add_option("--combo-cache", cache_dir, "directory holding combination caches");
    pairing->add_flag("--machine", machine, "coefficient-list output");

    auto* statesum = app.add_subcommand("statesum", "Conway polynomial via the subset state sum");
    statesum->add_option("--code", code, "Gauss code")->required();
    statesum->add_option("--direction", direction, "asc or des")
        ->check(CLI::IsMember({"asc", "des"}));
    statesum->add_flag("--machine", machine, "coefficient-list output");

    auto* skein = app.add_subcommand("skein", "Conway polynomial via the skein recursion");
    skein->add_option("--code", code, "Gauss code")->required();
    skein->add_flag("--machine", machine, "coefficient-list output");

    auto* coeff = app.add_subcommand("coeff", "single Conway coefficient via the pairing");
    coeff->add_option("--code", code, "Gauss code")->required();
    coeff->add_option("--degree", degree, "coefficient degree")->required();
    coeff->add_option("--combo-cache", cache_dir, "directory holding combination caches");

    auto* combo = app.add_subcommand("combo", "generate the weight-m template combination");
    combo->add_option("--size", combo_size, "number of arrows")->required();
    combo->add_option("--out", out_path, "write the cache file here");
    combo->add_option("--combo-cache", cache_dir, "directory holding combination caches");

    auto* table = app.add_subcommand("table-verify", "check a fixture table with one method");
    table->add_option("--file", table_path, "fixture table path")->required();
    table->add_option("--method", method, "pairing, statesum, or skein")
        ->check(CLI::IsMember({"pairing", "statesum", "skein"}));
    table->add_option("--combo-cache", cache_dir, "directory holding combination caches");

    auto* lk = app.add_subcommand("lk", "linking number of a two-component link");
    lk->add_option("--code", code, "Gauss code")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (validate->parsed()) {
            out << GaussDiagram::parse(code).serialize() << "\n";
            return 0;
        }
        if (pairing->parsed()) {
            GaussDiagram g = GaussDiagram::parse(code);
            CombinationStore store = cli_detail::make_store(cache_dir);
            out << cli_detail::render(conway_polynomial_pairing(g, max_degree, store), machine)
                << "\n";
            return 0;
        }
        if (statesum->parsed()) {
            GaussDiagram g = GaussDiagram::parse(code);
            Direction dir = direction == "asc" ? Direction::ascending : Direction::descending;
            out << cli_detail::render(nabla_state(g, dir), machine) << "\n";
            return 0;
        }
        if (skein->parsed()) {
            GaussDiagram g = GaussDiagram::parse(code);
            out << cli_detail::render(conway_skein(g), machine) << "\n";
            return 0;
        }
        if (coeff->parsed()) {
            GaussDiagram g = GaussDiagram::parse(code);
            CombinationStore store = cli_detail::make_store(cache_dir);
            out << conway_coefficient(g, degree, store) << "\n";
            return 0;
        }
        if (combo->parsed()) {
            CombinationStore store = cli_detail::make_store(cache_dir);
            const Combination& c = store.get(combo_size);
            out << "count=" << c.size() << "\n";
            for (const auto& [key, term] : c.terms) out << key << "\n";
            if (!out_path.empty()) save_combination(c, out_path);
            return 0;
        }
        if (table->parsed()) {
            auto fixtures = load_fixture_table(table_path);
            CombinationStore store = cli_detail::make_store(cache_dir);
            bool all_ok = true;
            for (const auto& fx : fixtures) {
                GaussDiagram g = GaussDiagram::parse(fx.code);
                Polynomial got;
                if (method == "pairing") {
                    int top = std::max(g.chord_count(), fx.expected.degree());
                    got = conway_polynomial_pairing(g, top, store);
                } else if (method == "statesum") {
                    got = nabla_state(g, Direction::ascending);
                } else {
                    got = conway_skein(g);
                }
                if (got == fx.expected) {
                    out << fx.name << " PASS\n";
                } else {
                    out << fx.name << " FAIL expected=" << fx.expected.str()
                        << " got=" << got.str() << "\n";
                    all_ok = false;
                }
            }
            return all_ok ? 0 : 1;
        }
        if (lk->parsed()) {
            GaussDiagram g = GaussDiagram::parse(code);
            if (g.circle_count() != 2)
                fail(errc::circle_count_mismatch, "linking numbers need a two-component code");
            CombinationStore store = cli_detail::make_store(cache_dir);
            out << conway_coefficient(g, 1, store) << "\n";
            return 0;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace conway
