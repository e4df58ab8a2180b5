/**
 * Line-oriented problem files, the CLI wire format:
 *
 *   rootsystem SO4            # or Sp4
 *   posroot 1 -1              # repeated lines declare a custom system
 *   facet 1 0 3               # a1 y1 + ... + ar yr <= c, rationals as p/q
 *   # full-line comment; blank lines ignored
 *
 * Exactly one root-system declaration (a label or a nonempty posroot
 * block), at least one facet, and every facet arity must match the rank.
 * Anything else is a ParseError carrying the offending line number.
 */
#ifndef KESTAB_PROBLEM_HPP
#define KESTAB_PROBLEM_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kestab/polytope.hpp"
#include "kestab/rootsystem.hpp"

namespace kestab {

struct ParseError : std::runtime_error {
    std::size_t line; ///< 1-based; 0 for file-level problems
    ParseError(std::size_t line_no, const std::string& message)
        : std::runtime_error(line_no == 0 ? message
                                          : "line " + std::to_string(line_no) + ": " + message),
          line(line_no) {}
};

struct Problem {
    RootSystem root_system;
    std::vector<HalfSpace> facets;
};

inline Problem parse_problem(const std::string& text) {
    std::string label;
    std::vector<RatVector> posroots;
    std::vector<std::pair<std::size_t, HalfSpace>> facets; // with line numbers

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;

        if (tok[0] == "rootsystem") {
            if (tok.size() != 2)
                throw ParseError(line_no, "rootsystem takes exactly one label");
            if (tok[1] != "SO4" && tok[1] != "Sp4")
                throw ParseError(line_no, "unknown root system '" + tok[1] + "'");
            if (!label.empty())
                throw ParseError(line_no, "duplicate rootsystem declaration");
            label = tok[1];
        } else if (tok[0] == "posroot") {
            if (tok.size() < 2) throw ParseError(line_no, "posroot needs coordinates");
            RatVector root(tok.size() - 1);
            for (std::size_t i = 1; i < tok.size(); ++i) {
                Rational q;
                try {
                    q = parse_rational(tok[i]);
                } catch (const std::invalid_argument& err) {
                    throw ParseError(line_no, err.what());
                }
                if (denominator(q) != 1)
                    throw ParseError(line_no, "posroot coordinates must be integers");
                root[i - 1] = q;
            }
            if (!posroots.empty() && posroots[0].size() != root.size())
                throw ParseError(line_no, "posroot arity differs from earlier roots");
            posroots.push_back(std::move(root));
        } else if (tok[0] == "facet") {
            if (tok.size() < 3)
                throw ParseError(line_no, "facet needs coefficients and an offset");
            RatVector normal(tok.size() - 2);
            Rational offset;
            try {
                for (std::size_t i = 1; i + 1 < tok.size(); ++i)
                    normal[i - 1] = parse_rational(tok[i]);
                offset = parse_rational(tok.back());
            } catch (const std::invalid_argument& err) {
                throw ParseError(line_no, err.what());
            }
            if (normal.is_zero()) throw ParseError(line_no, "facet normal is zero");
            facets.emplace_back(line_no, half_space(std::move(normal), std::move(offset)));
        } else {
            throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
        }
    }

    if (label.empty() && posroots.empty())
        throw ParseError(0, "missing rootsystem (or posroot lines)");
    if (!label.empty() && !posroots.empty())
        throw ParseError(0, "both rootsystem and posroot given; declare exactly one");
    if (facets.empty()) throw ParseError(0, "no facet lines");

    Problem prob;
    if (!label.empty()) {
        prob.root_system = make_root_system(label);
    } else {
        try {
            prob.root_system = make_custom(posroots[0].size(), posroots);
        } catch (const std::invalid_argument& err) {
            throw ParseError(0, err.what());
        }
    }
    for (auto& [ln, h] : facets) {
        if (h.normal.size() != prob.root_system.rank)
            throw ParseError(ln, "rank mismatch: facet has " +
                                     std::to_string(h.normal.size()) +
                                     " coefficients, root system has rank " +
                                     std::to_string(prob.root_system.rank));
        prob.facets.push_back(std::move(h));
    }
    return prob;
}

inline std::string render_problem(const Problem& prob) {
    std::string out;
    if (prob.root_system.is_builtin()) {
        out += "rootsystem " + prob.root_system.label + "\n";
    } else {
        for (const auto& root : prob.root_system.positive_roots)
            out += "posroot " + format_vector(root) + "\n";
    }
    for (const auto& h : prob.facets)
        out += "facet " + format_vector(h.normal) + " " + format_rational(h.offset) + "\n";
    return out;
}

} // namespace kestab

#endif // KESTAB_PROBLEM_HPP
