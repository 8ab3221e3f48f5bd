#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "conway/core.hpp"
#include "conway/gauss_diagram.hpp"
#include "conway/polynomial.hpp"

namespace conway {

/// One row of the reference table: a named diagram and the Conway polynomial
/// it must evaluate to.
struct KnotFixture {
    std::string name;
    std::string code;
    Polynomial expected;
};

/// Reads a tab-separated table: `name<TAB>gauss-code<TAB>c0 c1 c2 ...` per
/// line, `#` starting a comment. Every embedded code is validated.
inline std::vector<KnotFixture> load_fixture_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot read " + path.string());
    std::vector<KnotFixture> fixtures;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string where = path.filename().string() + ":" + std::to_string(line_no);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t tab1 = line.find('\t');
        std::size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos)
            fail(errc::parse_error, where + ": expected name<TAB>code<TAB>coefficients");
        KnotFixture fx;
        fx.name = line.substr(0, tab1);
        fx.code = line.substr(tab1 + 1, tab2 - tab1 - 1);
        try {
            fx.expected = Polynomial::parse_machine(line.substr(tab2 + 1));
        } catch (const error&) {
            fail(errc::parse_error, where + ": bad coefficient list");
        }
        try {
            GaussDiagram::parse(fx.code);
        } catch (const error& e) {
            fail(errc::invalid_code, where + ": " + e.what());
        }
        fixtures.push_back(std::move(fx));
    }
    return fixtures;
}

} // namespace conway
