#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "dlex.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "monomial.hpp"

namespace dreg {

using Cell = std::pair<int, int>; // (i, j): beta_{i, i+j}

inline constexpr int area_max_j = 64;

/// A finite staircase subset of {0..n-1} x {1, 2, ...}, kept as its corners:
/// i ascending, j descending.
class ExtremalArea {
public:
    ExtremalArea(std::size_t n, const std::vector<Cell>& points) : n_(n)
    {
        for (auto [i, j] : points) {
            if (i < 0 || i >= static_cast<int>(n) || j < 1 || j > area_max_j) {
                throw DomainError("area point (" + std::to_string(i) + "," + std::to_string(j) + ") outside [0," +
                                  std::to_string(n - 1) + "] x [1," + std::to_string(area_max_j) + "]");
            }
        }
        for (auto c : points) {
            bool dominated = std::any_of(points.begin(), points.end(), [c](Cell o) {
                return o != c && o.first >= c.first && o.second >= c.second;
            });
            if (!dominated) {
                corners_.push_back(c);
            }
        }
        std::sort(corners_.begin(), corners_.end());
        corners_.erase(std::unique(corners_.begin(), corners_.end()), corners_.end());
    }

    std::size_t bound() const { return n_; }
    const std::vector<Cell>& corners() const { return corners_; }
    bool empty() const { return corners_.empty(); }

    bool contains(int i, int j) const
    {
        return std::any_of(corners_.begin(), corners_.end(),
                           [i, j](Cell c) { return i >= 0 && j >= 1 && i <= c.first && j <= c.second; });
    }
    bool contains(Cell c) const { return contains(c.first, c.second); }

    /// Every cell, sorted.
    std::vector<Cell> cells() const
    {
        std::set<Cell> s;
        for (auto [ci, cj] : corners_) {
            for (int i = 0; i <= ci; ++i) {
                for (int j = 1; j <= cj; ++j) {
                    s.insert({i, j});
                }
            }
        }
        return {s.begin(), s.end()};
    }

    /// p_j = max{i : (i,j) in A}, or -1.
    int p(int j) const
    {
        int best = -1;
        for (auto [ci, cj] : corners_) {
            if (j >= 1 && j <= cj) {
                best = std::max(best, ci);
            }
        }
        return best;
    }

    friend bool operator==(const ExtremalArea&, const ExtremalArea&) = default;

private:
    std::size_t n_;
    std::vector<Cell> corners_;
};

inline ExtremalArea parse_area(std::string_view text, std::size_t n)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    std::vector<Cell> pts;
    std::size_t pos = 0;
    auto read_int = [&]() {
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-') {
            ++pos;
        }
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
        if (pos == start || (pos == start + 1 && s[start] == '-') || pos - start > 6) {
            throw FormatError("expected an integer in area '" + s + "'");
        }
        return std::stoi(s.substr(start, pos - start));
    };
    auto expect = [&](char c) {
        if (pos >= s.size() || s[pos] != c) {
            throw FormatError(std::string("expected '") + c + "' in area '" + s + "'");
        }
        ++pos;
    };
    while (pos < s.size()) {
        expect('(');
        int i = read_int();
        expect(',');
        int j = read_int();
        expect(')');
        pts.emplace_back(i, j);
        if (pos < s.size()) {
            expect(';');
        }
    }
    if (pts.empty()) {
        throw FormatError("empty area");
    }
    return ExtremalArea(n, pts);
}

inline std::string format_area(const ExtremalArea& A)
{
    std::string out;
    for (auto [i, j] : A.corners()) {
        if (!out.empty()) {
            out += ';';
        }
        out += '(' + std::to_string(i) + ',' + std::to_string(j) + ')';
    }
    return out;
}

inline std::vector<Cell> standard_representation(const ExtremalArea& A)
{
    if (A.empty()) {
        throw DomainError("the empty area has no standard representation");
    }
    return A.corners();
}

/// Some r with j_1 = j_2 + 1 = ... = j_r + r - 1 and i_r = i_{r+1} - 1 = ... = i_t - (t - r).
inline bool is_semi_convex(const ExtremalArea& A)
{
    const auto& c = A.corners();
    const auto t = c.size();
    for (std::size_t r = 0; r < t; ++r) {
        bool ok = true;
        for (std::size_t k = 0; k <= r && ok; ++k) {
            ok = c[k].second == c[0].second - static_cast<int>(k);
        }
        for (std::size_t k = r; k < t && ok; ++k) {
            ok = c[k].first == c[r].first + static_cast<int>(k - r);
        }
        if (ok) {
            return true;
        }
    }
    return t == 0;
}

/// Corners with maximal i + j.
inline std::vector<Cell> top_points(const ExtremalArea& A)
{
    int best = -1;
    for (auto [i, j] : A.corners()) {
        best = std::max(best, i + j);
    }
    std::vector<Cell> out;
    for (auto c : A.corners()) {
        if (c.first + c.second == best) {
            out.push_back(c);
        }
    }
    return out;
}

/// Cells (i,j) of A with i > 0 and (i-1, j+1) outside A.
inline std::vector<Cell> reducible_points(const ExtremalArea& A)
{
    std::vector<Cell> out;
    for (auto [i, j] : A.cells()) {
        if (i > 0 && !A.contains(i - 1, j + 1)) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

/// A with its reducible points removed (as a plain cell set).
inline std::vector<Cell> a_check(const ExtremalArea& A)
{
    auto red = reducible_points(A);
    std::vector<Cell> out;
    for (auto c : A.cells()) {
        if (!std::binary_search(red.begin(), red.end(), c)) {
            out.push_back(c);
        }
    }
    return out;
}

/// The semi-convex hull, evaluated at the top corner of index `top` (default: the first).
inline ExtremalArea conv_hull(const ExtremalArea& A, std::optional<std::size_t> top = std::nullopt)
{
    const auto& c = A.corners();
    if (c.empty()) {
        return A;
    }
    int best = -1;
    for (auto [i, j] : c) {
        best = std::max(best, i + j);
    }
    std::size_t r = 0;
    if (top) {
        r = *top;
        if (r >= c.size() || c[r].first + c[r].second != best) {
            throw DomainError("corner " + std::to_string(r) + " is not a top point");
        }
    } else {
        while (c[r].first + c[r].second != best) {
            ++r;
        }
    }
    auto [ir, jr] = c[r];
    std::vector<Cell> pts{c[r]};
    for (std::size_t k = 0; k < r; ++k) {
        for (int p = 0; p <= c[k].second - jr - 1; ++p) {
            pts.emplace_back(c[k].first + p, c[k].second - p);
        }
    }
    for (std::size_t k = r + 1; k < c.size(); ++k) {
        for (int p = 0; p <= c[k].first - ir - 1; ++p) {
            pts.emplace_back(c[k].first - p, c[k].second + p);
        }
    }
    return ExtremalArea(A.bound(), pts);
}

/// beta_{i,i+j} = 0 for every (i,j) outside A.
inline bool admits(const BettiDiagram& D, const ExtremalArea& A)
{
    for (const auto& [key, v] : D.entries()) {
        if (!A.contains(key.first, key.second - key.first)) {
            return false;
        }
    }
    return true;
}

/// A ∩ {(i,j) : i + j <= n}.
inline ExtremalArea intersect_q(const ExtremalArea& A)
{
    std::vector<Cell> pts;
    auto n = static_cast<int>(A.bound());
    for (auto c : A.cells()) {
        if (c.first + c.second <= n) {
            pts.push_back(c);
        }
    }
    if (pts.empty()) {
        throw DomainError("the area misses {(i,j) : i + j <= n}");
    }
    return ExtremalArea(A.bound(), pts);
}

/// The unique d-linear lexsegment W, read in the first N variables (N = V.num_vars() by default), with
/// l_k(W) = l_k(V) for k >= r and M_{<=r-1}(W) the lexsegment of size |M_{<=r-1}(V)| in x_1..x_{r-1}.
inline MonomialSet relex_above(const MonomialSet& V, std::size_t r, std::size_t N = 0,
                               const Limits& lim = default_limits())
{
    const std::size_t n = V.num_vars();
    if (N == 0) {
        N = n;
    }
    if (r < 2 || r > N + 1 || N > n) {
        throw DomainError("relex_above needs 1 < r <= N + 1");
    }
    if (V.degree() < 1) {
        throw DomainError("relex_above needs a positive degree");
    }
    for (const auto& u : V) {
        if (u.max_index() > N) {
            throw DomainError("relex_above: " + to_string(u) + " lives outside x1..x" + std::to_string(N));
        }
    }
    if (!is_strongly_stable(V)) {
        throw DomainError("relex_above needs a strongly stable set");
    }
    Integer low = 0;
    for (const auto& u : V) {
        if (u.max_index() <= r - 1) {
            ++low;
        }
    }
    auto W1 = lex_prefix(n, r - 1, V.degree(), low, lim);
    LSequence l{V.degree(), std::vector<Integer>(N, 0)};
    for (const auto& u : W1) {
        l.entries[u.max_index() - 1] += 1;
    }
    for (const auto& u : V) {
        if (u.max_index() >= r) {
            l.entries[u.max_index() - 1] += 1;
        }
    }
    return dlinear_lex_set(n, l, lim);
}

/// Lex(I, A) for I strongly stable admitting the semi-convex area A. `top` picks the
/// top corner (index into the standard representation); default is the first.
inline MonomialIdeal lex_i_a(const MonomialIdeal& I, const ExtremalArea& A, std::optional<std::size_t> top = std::nullopt,
                             const Limits& lim = default_limits())
{
    const std::size_t n = I.num_vars();
    if (A.bound() != n) {
        throw RingMismatch(n, A.bound());
    }
    if (I.is_zero() || I.is_unit()) {
        throw DomainError("Lex(I,A) needs a nonzero nonunit ideal");
    }
    if (!is_strongly_stable_ideal(I)) {
        throw DomainError("Lex(I,A) needs a strongly stable ideal");
    }
    if (!is_semi_convex(A)) {
        throw DomainError("Lex(I,A) needs a semi-convex area");
    }
    if (!admits(ek_betti(I), A)) {
        throw DomainError("I does not admit the area " + format_area(A));
    }
    const auto& c = A.corners();
    auto tops = top_points(A);
    std::size_t r = 0;
    if (top) {
        r = *top;
        if (r >= c.size() || std::find(tops.begin(), tops.end(), c[r]) == tops.end()) {
            throw DomainError("corner " + std::to_string(r) + " is not a top point");
        }
    } else {
        while (std::find(tops.begin(), tops.end(), c[r]) == tops.end()) {
            ++r;
        }
    }
    const int jr = c[r].second;
    const int j1 = c.front().second;
    std::vector<Monomial> gens;
    for (int j = 1; j <= j1; ++j) {
        auto pj = static_cast<std::size_t>(A.p(j));
        auto V = m_le_slice(I, static_cast<std::uint64_t>(j), pj + 1, lim);
        if (j < jr) {
            auto L = lex_prefix(n, pj + 1, static_cast<std::uint64_t>(j), Integer(V.size()), lim);
            gens.insert(gens.end(), L.begin(), L.end());
        } else {
            auto r_split = static_cast<std::size_t>(A.p(j + 1) + 3);
            auto L = relex_above(V, r_split, pj + 1, lim);
            gens.insert(gens.end(), L.begin(), L.end());
        }
    }
    return MonomialIdeal(n, std::move(gens));
}

} // namespace dreg
