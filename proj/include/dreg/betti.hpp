#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"
#include "integer.hpp"

namespace dreg {

/// Graded Betti numbers beta_{i,j}(I) of an ideal, stored sparsely.
class BettiDiagram {
public:
    using Key = std::pair<int, int>; // (i, j)

    explicit BettiDiagram(std::size_t n) : n_(n) {}

    std::size_t num_vars() const { return n_; }

    Integer get(int i, int j) const
    {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? Integer(0) : it->second;
    }

    /// beta_{i, i+k}.
    Integer row_entry(int k, int i) const { return get(i, i + k); }

    void add(int i, int j, const Integer& v)
    {
        if (v == 0) {
            return;
        }
        if (i < 0 || j < 0) {
            throw DomainError("Betti indices must be nonnegative");
        }
        auto& slot = entries_[{i, j}];
        slot += v;
        if (slot == 0) {
            entries_.erase({i, j});
        }
    }

    void set(int i, int j, const Integer& v)
    {
        entries_.erase({i, j});
        add(i, j, v);
    }

    const std::map<Key, Integer>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    int regularity() const
    {
        require_nonzero("regularity");
        int r = entries_.begin()->first.second - entries_.begin()->first.first;
        for (const auto& [key, v] : entries_) {
            r = std::max(r, key.second - key.first);
        }
        return r;
    }

    int min_row() const
    {
        require_nonzero("min_row");
        int r = entries_.begin()->first.second - entries_.begin()->first.first;
        for (const auto& [key, v] : entries_) {
            r = std::min(r, key.second - key.first);
        }
        return r;
    }

    /// Projective dimension of I (not of S/I).
    int projdim() const
    {
        require_nonzero("projdim");
        int p = 0;
        for (const auto& [key, v] : entries_) {
            p = std::max(p, key.first);
        }
        return p;
    }

    /// depth(S/I) = n - projdim(S/I) = n - (projdim(I) + 1); the zero ideal gives n.
    int depth_quotient() const
    {
        if (is_zero()) {
            return static_cast<int>(n_);
        }
        return static_cast<int>(n_) - (projdim() + 1);
    }

    /// beta_{i,j}(S/I): beta_{0,0} = 1 and beta_{i,j}(S/I) = beta_{i-1,j}(I).
    std::map<Key, Integer> quotient_entries() const
    {
        std::map<Key, Integer> q;
        q[{0, 0}] = 1;
        for (const auto& [key, v] : entries_) {
            q[{key.first + 1, key.second}] = v;
        }
        return q;
    }

    /// Column sums sum_j beta_{i,j}, i = 0..projdim.
    std::vector<Integer> totals() const
    {
        if (is_zero()) {
            return {};
        }
        std::vector<Integer> t(static_cast<std::size_t>(projdim()) + 1, 0);
        for (const auto& [key, v] : entries_) {
            t[static_cast<std::size_t>(key.first)] += v;
        }
        return t;
    }

    /// Nonzero beta_{i,i+k} with beta_{p,p+q} = 0 for every other (p,q) with p >= i and q >= k.
    /// Returned as (i, j, value) triples.
    std::vector<std::tuple<int, int, Integer>> extremal_points() const
    {
        std::vector<std::tuple<int, int, Integer>> out;
        for (const auto& [key, v] : entries_) {
            int i = key.first;
            int k = key.second - key.first;
            bool extremal = true;
            for (const auto& [other, w] : entries_) {
                int p = other.first;
                int q = other.second - other.first;
                if (other != key && p >= i && q >= k) {
                    extremal = false;
                    break;
                }
            }
            if (extremal) {
                out.emplace_back(i, key.second, v);
            }
        }
        return out;
    }

    /// Every entry of *this is at most the matching entry of other.
    bool dominated_by(const BettiDiagram& other) const
    {
        for (const auto& [key, v] : entries_) {
            if (v > other.get(key.first, key.second)) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const BettiDiagram& a, const BettiDiagram& b)
    {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    void require_nonzero(const char* what) const
    {
        if (entries_.empty()) {
            throw DomainError(std::string(what) + " is undefined for the zero ideal");
        }
    }

    std::size_t n_;
    std::map<Key, Integer> entries_;
};

/// Rows "k: v0 v1 ..." listing beta_{i,i+k} for i = 0..projdim, '-' for zero, then a total row.
inline std::string format_table(const BettiDiagram& D)
{
    if (D.is_zero()) {
        return "zero ideal\n";
    }
    int p = D.projdim();
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> labels;
    for (int k = D.min_row(); k <= D.regularity(); ++k) {
        labels.push_back(std::to_string(k) + ":");
        std::vector<std::string> cells;
        for (int i = 0; i <= p; ++i) {
            Integer v = D.row_entry(k, i);
            cells.push_back(v == 0 ? "-" : v.str());
        }
        rows.push_back(std::move(cells));
    }
    labels.push_back("total:");
    std::vector<std::string> tot;
    for (const auto& v : D.totals()) {
        tot.push_back(v.str());
    }
    rows.push_back(std::move(tot));

    std::size_t label_w = 0;
    for (const auto& l : labels) {
        label_w = std::max(label_w, l.size());
    }
    std::vector<std::size_t> width(static_cast<std::size_t>(p) + 1, 1);
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            width[c] = std::max(width[c], r[c].size());
        }
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << std::string(label_w - labels[r].size(), ' ') << labels[r];
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            out << ' ' << std::string(width[c] - rows[r][c].size(), ' ') << rows[r][c];
        }
        out << '\n';
    }
    return out.str();
}

/// One "(i, j, value)" line per entry, sorted by (j - i, i).
inline std::string format_triples(const BettiDiagram& D)
{
    std::vector<std::tuple<int, int, Integer>> items;
    for (const auto& [key, v] : D.entries()) {
        items.emplace_back(key.first, key.second, v);
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        auto ka = std::get<1>(a) - std::get<0>(a);
        auto kb = std::get<1>(b) - std::get<0>(b);
        return ka != kb ? ka < kb : std::get<0>(a) < std::get<0>(b);
    });
    std::ostringstream out;
    for (const auto& [i, j, v] : items) {
        out << '(' << i << ", " << j << ", " << v.str() << ")\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Closed forms.

/// beta_{i,i+k}(I) = sum over generators u of degree k of C(max(u) - 1, i), for stable I.
inline BettiDiagram ek_betti(const MonomialIdeal& I)
{
    if (I.is_unit()) {
        throw DomainError("Betti numbers of the unit ideal are not handled");
    }
    if (!is_stable(I)) {
        throw DomainError("the Eliahou-Kervaire formula needs a stable ideal");
    }
    BettiDiagram D(I.num_vars());
    for (const auto& u : I.generators()) {
        auto k = static_cast<int>(u.degree());
        auto m = static_cast<std::int64_t>(u.max_index());
        for (int i = 0; i < m; ++i) {
            D.add(i, i + k, binomial(m - 1, i));
        }
    }
    return D;
}

/// beta_{i,i+k}(I) = sum over generators u of degree k of C(max(u) - k, i), for squarefree strongly stable I.
inline BettiDiagram ahh_betti(const MonomialIdeal& I)
{
    if (I.is_unit()) {
        throw DomainError("Betti numbers of the unit ideal are not handled");
    }
    if (!is_squarefree_strongly_stable(I)) {
        throw DomainError("the squarefree Eliahou-Kervaire formula needs a squarefree strongly stable ideal");
    }
    BettiDiagram D(I.num_vars());
    for (const auto& u : I.generators()) {
        auto k = static_cast<int>(u.degree());
        auto top = static_cast<std::int64_t>(u.max_index()) - k;
        for (int i = 0; i <= top; ++i) {
            D.add(i, i + k, binomial(top, i));
        }
    }
    return D;
}

/// beta_{i,i+k}(J) from dim J_k and the counts |M_{<=q}(J,k)|, |M_{<=q}(J,k-1)|, for strongly stable J.
inline Integer bigatti_degreewise(const MonomialIdeal& J, int i, int k, const Limits& lim = default_limits())
{
    if (!is_strongly_stable_ideal(J)) {
        throw DomainError("the degreewise formula needs a strongly stable ideal");
    }
    if (J.is_zero() || i < 0 || k < 1) {
        return 0;
    }
    auto n = static_cast<std::int64_t>(J.num_vars());
    auto kk = static_cast<std::uint64_t>(k);
    Integer v = hilbert(J, kk, lim) * binomial(n - 1, i);
    for (std::int64_t q = i; q <= n - 1; ++q) {
        v -= count_m_le(J, kk, static_cast<std::size_t>(q), lim) * binomial(q - 1, i - 1);
    }
    for (std::int64_t q = i + 1; q <= n; ++q) {
        v -= count_m_le(J, kk - 1, static_cast<std::size_t>(q), lim) * binomial(q - 1, i);
    }
    return v;
}

/// Squarefree analogue from the counts of squarefree members |M*_{<=t}(J,k)|.
inline Integer sq_degreewise(const MonomialIdeal& J, int i, int k)
{
    if (!is_squarefree_strongly_stable(J)) {
        throw DomainError("the degreewise formula needs a squarefree strongly stable ideal");
    }
    if (J.is_zero() || i < 0 || k < 1) {
        return 0;
    }
    auto n = static_cast<std::int64_t>(J.num_vars());
    auto kk = static_cast<std::uint64_t>(k);
    auto count = [&](std::uint64_t deg, std::int64_t t) -> Integer {
        if (t <= 0) {
            return (deg == 0 && J.contains(Monomial(J.num_vars()))) ? 1 : 0;
        }
        return squarefree_count(J, deg, static_cast<std::size_t>(t));
    };
    Integer v = squarefree_count(J, kk) * binomial(n - k, i);
    for (std::int64_t t = k; t <= n - 1; ++t) {
        v -= count(kk, t) * binomial(t - k, i - 1);
    }
    for (std::int64_t t = k; t <= n; ++t) {
        v -= count(kk - 1, t - 1) * binomial(t - k, i);
    }
    return v;
}

/// The full diagram assembled from bigatti_degreewise.
inline BettiDiagram bigatti_betti(const MonomialIdeal& J, const Limits& lim = default_limits())
{
    BettiDiagram D(J.num_vars());
    if (J.is_zero()) {
        return D;
    }
    for (int k = 1; k <= static_cast<int>(J.max_degree()); ++k) {
        for (int i = 0; i < static_cast<int>(J.num_vars()); ++i) {
            D.add(i, i + k, bigatti_degreewise(J, i, k, lim));
        }
    }
    return D;
}

inline BettiDiagram sq_degreewise_betti(const MonomialIdeal& J)
{
    BettiDiagram D(J.num_vars());
    if (J.is_zero()) {
        return D;
    }
    for (int k = 1; k <= static_cast<int>(J.max_degree()); ++k) {
        for (int i = 0; i < static_cast<int>(J.num_vars()); ++i) {
            D.add(i, i + k, sq_degreewise(J, i, k));
        }
    }
    return D;
}

/// Hilbert function of S/I at t read off the diagram:
/// sum_j [sum_i (-1)^i beta_{i,j}(S/I)] C(n - 1 + t - j, n - 1).
inline Integer hilbert_from_betti(const BettiDiagram& D, std::uint64_t t)
{
    auto n = static_cast<std::int64_t>(D.num_vars());
    Integer h = 0;
    for (const auto& [key, v] : D.quotient_entries()) {
        auto [i, j] = key;
        auto shift = static_cast<std::int64_t>(t) - j;
        if (shift < 0) {
            continue;
        }
        Integer term = v * count_monomials(n, shift);
        if (i % 2 == 0) {
            h += term;
        } else {
            h -= term;
        }
    }
    return h;
}

} // namespace dreg
