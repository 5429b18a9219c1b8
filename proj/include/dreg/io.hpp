#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "macaulay.hpp"
#include "monomial.hpp"

namespace dreg {

namespace detail {

inline std::string trim(std::string_view s)
{
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    return std::string(s.substr(a, b - a));
}

// non-empty lines with '#' comments removed
inline std::vector<std::string> content_lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        auto t = trim(line);
        if (!t.empty()) {
            out.push_back(t);
        }
    }
    return out;
}

inline std::size_t parse_count(const std::string& s, const std::string& what)
{
    if (s.empty() || s.size() > 6 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw FormatError("bad " + what + " '" + s + "'");
    }
    return static_cast<std::size_t>(std::stoul(s));
}

// "key=value" tokens of a header line
inline std::vector<std::pair<std::string, std::string>> header_fields(const std::string& line)
{
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
            throw FormatError("header token '" + tok + "' is not key=value");
        }
        out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return out;
}

} // namespace detail

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Header "n=<int>", then one monomial per line.
inline MonomialIdeal parse_ideal(const std::string& text)
{
    auto lines = detail::content_lines(text);
    if (lines.empty()) {
        throw FormatError("ideal file is missing its 'n=<int>' header");
    }
    auto fields = detail::header_fields(lines[0]);
    if (fields.size() != 1 || fields[0].first != "n") {
        throw FormatError("ideal header must be 'n=<int>', got '" + lines[0] + "'");
    }
    auto n = detail::parse_count(fields[0].second, "variable count");
    if (n == 0) {
        throw FormatError("n must be positive");
    }
    std::vector<Monomial> gens;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        gens.push_back(parse_monomial(lines[k], n));
    }
    return MonomialIdeal(n, std::move(gens));
}

/// Comma- or whitespace-separated monomials, e.g. "x1*x2, x3*x4".
inline MonomialIdeal parse_generator_list(const std::string& text, std::size_t n)
{
    if (n == 0) {
        throw FormatError("n must be positive");
    }
    std::vector<Monomial> gens;
    std::string cur;
    auto flush = [&]() {
        auto t = detail::trim(cur);
        if (!t.empty()) {
            gens.push_back(parse_monomial(t, n));
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ';') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return MonomialIdeal(n, std::move(gens));
}

inline std::string format_ideal(const MonomialIdeal& I)
{
    std::string out = "n=" + std::to_string(I.num_vars()) + "\n";
    for (const auto& g : I.generators()) {
        out += to_string(g) + "\n";
    }
    return out;
}

/// "(g1, g2, ...)" on one line.
inline std::string format_ideal_inline(const MonomialIdeal& I)
{
    std::string out = "(";
    for (std::size_t k = 0; k < I.generators().size(); ++k) {
        if (k > 0) {
            out += ", ";
        }
        out += to_string(I.generators()[k]);
    }
    return out + ")";
}

/// Header "n=<int> role=<ideal|quotient>", then H(0), H(1), ... one per line.
inline HilbertSpec parse_hilbert_spec(const std::string& text)
{
    auto lines = detail::content_lines(text);
    if (lines.empty()) {
        throw FormatError("Hilbert function file is missing its header");
    }
    HilbertSpec H;
    bool have_n = false;
    bool have_role = false;
    for (const auto& [key, value] : detail::header_fields(lines[0])) {
        if (key == "n") {
            H.num_vars = detail::parse_count(value, "variable count");
            have_n = H.num_vars > 0;
        } else if (key == "role") {
            if (value == "ideal") {
                H.role = HilbertRole::ideal;
            } else if (value == "quotient") {
                H.role = HilbertRole::quotient;
            } else {
                throw FormatError("role must be 'ideal' or 'quotient'");
            }
            have_role = true;
        } else {
            throw FormatError("unknown header field '" + key + "'");
        }
    }
    if (!have_n || !have_role) {
        throw FormatError("Hilbert function header must be 'n=<int> role=<ideal|quotient>'");
    }
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& s = lines[k];
        if (!std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw FormatError("Hilbert function value '" + s + "' is not a nonnegative integer");
        }
        H.values.emplace_back(s);
    }
    return H;
}

inline std::string format_hilbert_spec(const HilbertSpec& H)
{
    std::string out = "n=" + std::to_string(H.num_vars) +
                      (H.role == HilbertRole::ideal ? " role=ideal\n" : " role=quotient\n");
    for (const auto& v : H.values) {
        out += v.str() + "\n";
    }
    return out;
}

/// Header "vertices=<n>", then one facet per line ("1,2,3"; "{}" is the empty facet).
inline SimplicialComplex parse_complex(const std::string& text)
{
    auto lines = detail::content_lines(text);
    if (lines.empty()) {
        throw FormatError("complex file is missing its 'vertices=<n>' header");
    }
    auto fields = detail::header_fields(lines[0]);
    if (fields.size() != 1 || fields[0].first != "vertices") {
        throw FormatError("complex header must be 'vertices=<n>'");
    }
    auto n = detail::parse_count(fields[0].second, "vertex count");
    if (n == 0 || n > 24) {
        throw FormatError("vertex count must be in 1..24");
    }
    std::vector<FaceMask> facets;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        std::string s;
        for (char c : lines[k]) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                s.push_back(c);
            }
        }
        if (s == "{}") {
            facets.push_back(0);
            continue;
        }
        FaceMask f = 0;
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            auto v = detail::parse_count(tok, "vertex");
            if (v < 1 || v > n) {
                throw FormatError("vertex " + tok + " outside 1.." + std::to_string(n));
            }
            f |= FaceMask{1} << (v - 1);
        }
        facets.push_back(f);
    }
    return SimplicialComplex(n, std::move(facets));
}

inline std::string format_complex(const SimplicialComplex& G)
{
    std::string out = "vertices=" + std::to_string(G.num_vertices()) + "\n";
    for (auto f : G.facets()) {
        if (f == 0) {
            out += "{}\n";
            continue;
        }
        std::string line;
        for (auto v : face_vertices(f)) {
            if (!line.empty()) {
                line += ',';
            }
            line += std::to_string(v);
        }
        out += line + "\n";
    }
    return out;
}

} // namespace dreg
