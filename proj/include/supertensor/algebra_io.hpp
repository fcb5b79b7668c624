#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "supertensor/superalgebra.hpp"

namespace supertensor {

// Line-oriented structure-constants file, format_version 1:
//
//   format_version: 1
//   field: Q
//   basis: x1 even
//   basis: x2 even
//   basis: z even
//   bracket: x1 x2 = z
//   bracket: y1 y1 = -1/2*z + x1
//
// Names are unique whitespace-free tokens; coefficients are exact
// rationals p or p/q; unlisted brackets are zero; each unordered basis
// pair may appear at most once. '#' starts a comment.

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::pair<Rational, std::string>> parse_terms(const std::string& text,
                                                                 std::size_t line_no) {
    // sum of terms: [coeff*]name, joined by + or -
    std::vector<std::pair<Rational, std::string>> terms;
    std::size_t pos = 0;
    Rational pending_sign(1);
    auto fail = [&](const std::string& why) {
        throw ParseError("line " + std::to_string(line_no) + ": " + why);
    };
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') pending_sign = -pending_sign;
            ++pos;
            continue;
        }
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '+' && text[pos] != '-')
            ++pos;
        std::string token = text.substr(start, pos - start);
        Rational coeff = pending_sign;
        std::string name;
        auto star = token.find('*');
        if (star != std::string::npos) {
            coeff = pending_sign * parse_rational(token.substr(0, star));
            name = token.substr(star + 1);
        } else if (std::isdigit(static_cast<unsigned char>(token[0]))) {
            fail("term '" + token + "' needs the form coeff*name");
        } else {
            name = token;
        }
        if (name.empty()) fail("missing basis name in term '" + token + "'");
        terms.emplace_back(coeff, name);
        pending_sign = 1;
    }
    if (terms.empty()) fail("empty bracket value");
    return terms;
}

}  // namespace detail

inline LieSuperAlgebra load_algebra(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool version_seen = false;
    std::vector<BasisElement> basis;
    std::map<std::string, std::size_t> index;
    std::vector<std::tuple<std::string, std::string, std::string, std::size_t>> raw_brackets;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        auto fail = [&](const std::string& why) {
            throw ParseError("line " + std::to_string(line_no) + ": " + why);
        };
        auto colon = line.find(':');
        if (colon == std::string::npos) fail("expected 'key: value'");
        std::string key = detail::trim(line.substr(0, colon));
        std::string value = detail::trim(line.substr(colon + 1));
        if (key == "format_version") {
            if (value != "1") fail("unsupported format_version '" + value + "'");
            version_seen = true;
        } else if (key == "field") {
            if (value != "Q") fail("unsupported field '" + value + "' (only Q)");
        } else if (key == "basis") {
            std::istringstream is(value);
            std::string name, parity;
            is >> name >> parity;
            if (name.empty() || (parity != "even" && parity != "odd"))
                fail("expected 'basis: NAME even|odd'");
            std::string rest;
            if (is >> rest) fail("trailing input '" + rest + "'");
            if (index.count(name)) fail("duplicate basis name '" + name + "'");
            index[name] = basis.size();
            basis.push_back({name, parity == "even" ? Parity::even : Parity::odd});
        } else if (key == "bracket") {
            auto eq = value.find('=');
            if (eq == std::string::npos) fail("expected 'bracket: A B = terms'");
            std::istringstream is(value.substr(0, eq));
            std::string left, right, rest;
            is >> left >> right;
            if (left.empty() || right.empty() || (is >> rest))
                fail("expected exactly two basis names before '='");
            raw_brackets.emplace_back(left, right, value.substr(eq + 1), line_no);
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!version_seen) throw ParseError("missing format_version header");
    LieSuperAlgebra::Table table;
    for (const auto& [left, right, terms_text, ln] : raw_brackets) {
        auto fail = [&, ln = ln](const std::string& why) {
            throw ParseError("line " + std::to_string(ln) + ": " + why);
        };
        if (!index.count(left)) fail("unknown basis name '" + left + "'");
        if (!index.count(right)) fail("unknown basis name '" + right + "'");
        SparseVec sparse;
        for (const auto& [coeff, name] : detail::parse_terms(terms_text, ln)) {
            if (!index.count(name)) fail("unknown basis name '" + name + "'");
            sparse.emplace_back(index.at(name), coeff);
        }
        auto key = std::make_pair(index.at(left), index.at(right));
        if (table.count(key)) fail("duplicate bracket for '" + left + " " + right + "'");
        table[key] = std::move(sparse);
    }
    try {
        return LieSuperAlgebra(std::move(basis), table);
    } catch (const InvalidParams& e) {
        throw ParseError(e.what());
    }
}

inline void save_algebra(std::ostream& out, const LieSuperAlgebra& L) {
    out << "format_version: 1\n";
    out << "field: Q\n";
    for (const auto& e : L.basis())
        out << "basis: " << e.name << " " << to_cstring(e.parity) << "\n";
    for (const auto& [key, value] : L.table()) {
        if (value.empty()) continue;
        out << "bracket: " << L.name(key.first) << " " << L.name(key.second) << " =";
        bool first = true;
        for (const auto& [k, c] : value) {
            if (first) {
                out << " ";
                if (c == 1)
                    out << L.name(k);
                else if (c == -1)
                    out << "-" << L.name(k);
                else
                    out << to_string(c) << "*" << L.name(k);
                first = false;
            } else {
                Rational abs_c = c < 0 ? Rational(-c) : c;
                out << (c < 0 ? " - " : " + ");
                if (abs_c == 1)
                    out << L.name(k);
                else
                    out << to_string(abs_c) << "*" << L.name(k);
            }
        }
        out << "\n";
    }
}

}  // namespace supertensor
