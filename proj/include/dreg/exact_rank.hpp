#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace dreg {

/// A sparse integer row: (column, nonzero value) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;

namespace detail {

inline void remove_content(SparseRow& row)
{
    if (row.empty()) {
        return;
    }
    Integer g = 0;
    for (const auto& [c, v] : row) {
        g = gcd(g, v);
        if (g == 1) {
            break;
        }
    }
    bool flip = row.front().second < 0;
    if (g != 1 || flip) {
        if (flip) {
            g = -g;
        }
        for (auto& [c, v] : row) {
            v /= g;
        }
    }
}

// a*row - b*pivot, where a and b cancel the shared leading column
inline SparseRow combine(const SparseRow& row, const SparseRow& pivot)
{
    Integer a = pivot.front().second;
    Integer b = row.front().second;
    Integer g = gcd(a, b);
    a /= g;
    b /= g;
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t x = 1;
    std::size_t y = 1;
    while (x < row.size() || y < pivot.size()) {
        if (y == pivot.size() || (x < row.size() && row[x].first < pivot[y].first)) {
            out.emplace_back(row[x].first, a * row[x].second);
            ++x;
        } else if (x == row.size() || pivot[y].first < row[x].first) {
            out.emplace_back(pivot[y].first, -b * pivot[y].second);
            ++y;
        } else {
            Integer v = a * row[x].second - b * pivot[y].second;
            if (v != 0) {
                out.emplace_back(row[x].first, std::move(v));
            }
            ++x;
            ++y;
        }
    }
    return out;
}

} // namespace detail

/// Rank over Q of a sparse integer matrix, by fraction-free elimination with
/// content reduction. Exact for every input.
inline std::size_t exact_rank(std::vector<SparseRow> rows)
{
    std::map<std::uint32_t, SparseRow> pivots;
    for (auto& row : rows) {
        detail::remove_content(row);
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            row = detail::combine(row, it->second);
            detail::remove_content(row);
        }
    }
    return pivots.size();
}

} // namespace dreg
