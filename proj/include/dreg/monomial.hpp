#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

namespace dreg {

/// The polynomial ring K[x_1, ..., x_n]; only the number of variables matters.
struct GroundRing {
    std::size_t num_vars = 1;

    explicit GroundRing(std::size_t n) : num_vars(n)
    {
        if (n == 0) {
            throw DomainError("a ground ring needs at least one variable");
        }
    }
    friend bool operator==(const GroundRing&, const GroundRing&) = default;
};

/// A monomial x_1^{a_1} ... x_n^{a_n}, stored as its dense exponent vector.
///
/// Comparison operators order monomials lexicographically on exponent
/// vectors, which is the lex order x_1 > x_2 > ... > x_n when degrees agree.
class Monomial {
public:
    using exponent_type = std::uint32_t;

    Monomial() = default;

    /// The unit monomial in n variables.
    explicit Monomial(std::size_t n) : exps_(n, 0) {}

    explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {}

    /// The variable x_i (1-based) in n variables.
    static Monomial variable(std::size_t n, std::size_t i)
    {
        if (i == 0 || i > n) {
            throw DomainError("variable index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        }
        Monomial m(n);
        m.exps_[i - 1] = 1;
        return m;
    }

    std::size_t num_vars() const { return exps_.size(); }
    std::span<const exponent_type> exponents() const { return exps_; }

    /// Exponent of x_i, 1-based.
    exponent_type exponent(std::size_t i) const { return exps_[i - 1]; }
    void set_exponent(std::size_t i, exponent_type e) { exps_[i - 1] = e; }

    std::uint64_t degree() const
    {
        std::uint64_t d = 0;
        for (auto e : exps_) {
            d += e;
        }
        return d;
    }

    /// Largest i with x_i dividing the monomial; 0 for the unit monomial.
    std::size_t max_index() const
    {
        for (std::size_t i = exps_.size(); i > 0; --i) {
            if (exps_[i - 1] > 0) {
                return i;
            }
        }
        return 0;
    }

    /// Smallest i with x_i dividing the monomial; 0 for the unit monomial.
    std::size_t min_index() const
    {
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] > 0) {
                return i + 1;
            }
        }
        return 0;
    }

    bool is_unit() const
    {
        return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
    }

    bool is_squarefree() const
    {
        return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
    }

    bool divides(const Monomial& other) const
    {
        check_ring(other);
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] > other.exps_[i]) {
                return false;
            }
        }
        return true;
    }

    Monomial operator*(const Monomial& other) const
    {
        check_ring(other);
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            r.exps_[i] += other.exps_[i];
        }
        return r;
    }

    /// this / other; other must divide this.
    Monomial operator/(const Monomial& other) const
    {
        if (!other.divides(*this)) {
            throw DomainError("monomial division is not exact");
        }
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            r.exps_[i] -= other.exps_[i];
        }
        return r;
    }

    /// Multiply by x_i (1-based).
    Monomial times_var(std::size_t i) const
    {
        Monomial r(*this);
        ++r.exps_[i - 1];
        return r;
    }

    /// Divide by x_i (1-based); x_i must divide.
    Monomial over_var(std::size_t i) const
    {
        if (exps_[i - 1] == 0) {
            throw DomainError("x" + std::to_string(i) + " does not divide the monomial");
        }
        Monomial r(*this);
        --r.exps_[i - 1];
        return r;
    }

    /// The same exponents viewed in a ring with m variables (extra exponents must be zero).
    Monomial in_ring(std::size_t m) const
    {
        if (m < exps_.size() && max_index() > m) {
            throw DomainError("monomial does not live in " + std::to_string(m) + " variables");
        }
        std::vector<exponent_type> e(m, 0);
        std::copy_n(exps_.begin(), std::min(m, exps_.size()), e.begin());
        return Monomial(std::move(e));
    }

    /// Indices (1-based) of the variables dividing the monomial, ascending.
    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] > 0) {
                s.push_back(i + 1);
            }
        }
        return s;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        return a.exps_ <=> b.exps_;
    }

    void check_ring(const Monomial& other) const
    {
        if (other.exps_.size() != exps_.size()) {
            throw RingMismatch(exps_.size(), other.exps_.size());
        }
    }

private:
    std::vector<exponent_type> exps_;
};

inline Monomial lcm(const Monomial& a, const Monomial& b)
{
    a.check_ring(b);
    std::vector<Monomial::exponent_type> e(a.num_vars());
    for (std::size_t i = 1; i <= a.num_vars(); ++i) {
        e[i - 1] = std::max(a.exponent(i), b.exponent(i));
    }
    return Monomial(std::move(e));
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto e : m.exponents()) {
            h = (h ^ e) * 1099511628211ull;
        }
        return h;
    }
};

using MonomialHashSet = std::unordered_set<Monomial, MonomialHash>;

// ---------------------------------------------------------------------------
// Text syntax: x<i> factors joined by '*', exponents by '^', unit is "1".

inline Monomial parse_monomial(std::string_view text, std::size_t n)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw FormatError("empty monomial");
    }
    Monomial m(n);
    if (s == "1") {
        return m;
    }
    auto read_number = [&](std::size_t& pos) -> std::uint64_t {
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > 1'000'000'000ull) {
                throw FormatError("number too large in monomial '" + s + "'");
            }
            ++pos;
        }
        if (pos == start) {
            throw FormatError("expected a number in monomial '" + s + "'");
        }
        return v;
    };
    std::size_t pos = 0;
    while (true) {
        if (pos >= s.size() || s[pos] != 'x') {
            throw FormatError("expected 'x<i>' in monomial '" + s + "'");
        }
        ++pos;
        auto idx = read_number(pos);
        if (idx == 0 || idx > n) {
            throw FormatError("variable x" + std::to_string(idx) + " outside x1..x" + std::to_string(n));
        }
        std::uint64_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            e = read_number(pos);
        }
        m.set_exponent(idx, m.exponent(idx) + static_cast<Monomial::exponent_type>(e));
        if (pos == s.size()) {
            break;
        }
        if (s[pos] != '*') {
            throw FormatError("unexpected '" + std::string(1, s[pos]) + "' in monomial '" + s + "'");
        }
        ++pos;
    }
    return m;
}

inline std::string to_string(const Monomial& m)
{
    if (m.is_unit()) {
        return "1";
    }
    std::string out;
    for (std::size_t i = 1; i <= m.num_vars(); ++i) {
        auto e = m.exponent(i);
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += 'x' + std::to_string(i);
        if (e > 1) {
            out += '^' + std::to_string(e);
        }
    }
    return out;
}

/// Degree-lex comparison of two monomials of the same degree.
inline std::strong_ordering lex_compare(const Monomial& u, const Monomial& v)
{
    u.check_ring(v);
    if (u.degree() != v.degree()) {
        throw DomainError("lex_compare needs monomials of equal degree");
    }
    return u <=> v;
}

// ---------------------------------------------------------------------------
// Lex order on one degree: enumeration, ranks and successors.

/// Calls f on every degree-d monomial in x_1..x_k (embedded in n variables) in
/// lex-descending order until f returns false.
inline void for_each_monomial(std::size_t n, std::size_t k, std::uint64_t d,
                              const std::function<bool(const Monomial&)>& f)
{
    if (k > n) {
        throw DomainError("subring larger than the ring");
    }
    if (k == 0) {
        if (d == 0) {
            f(Monomial(n));
        }
        return;
    }
    std::vector<Monomial::exponent_type> e(n, 0);
    bool stop = false;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos, std::uint64_t rem) {
        if (stop) {
            return;
        }
        if (pos + 1 == k) {
            e[pos] = static_cast<Monomial::exponent_type>(rem);
            if (!f(Monomial(e))) {
                stop = true;
            }
            e[pos] = 0;
            return;
        }
        for (std::uint64_t a = rem + 1; a-- > 0;) {
            e[pos] = static_cast<Monomial::exponent_type>(a);
            rec(pos + 1, rem - a);
            if (stop) {
                break;
            }
        }
        e[pos] = 0;
    };
    rec(0, d);
}

/// Number of degree-deg(u) monomials in x_1..x_k that are lex-greater than u.
/// u must be supported on x_1..x_k.
inline Integer lex_rank(const Monomial& u, std::size_t k)
{
    if (u.max_index() > k) {
        throw DomainError("monomial " + to_string(u) + " is not supported on x1..x" + std::to_string(k));
    }
    Integer rank = 0;
    std::uint64_t rem = u.degree();
    for (std::size_t pos = 1; pos < k; ++pos) {
        std::uint64_t a = u.exponent(pos);
        // monomials agreeing before pos with a larger exponent at pos
        for (std::uint64_t b = a + 1; b <= rem; ++b) {
            rank += count_monomials(static_cast<std::int64_t>(k - pos), static_cast<std::int64_t>(rem - b));
        }
        rem -= a;
    }
    return rank;
}

inline Integer lex_rank(const Monomial& u) { return lex_rank(u, u.num_vars()); }

/// Inverse of lex_rank: the degree-d monomial in x_1..x_k with the given rank.
inline Monomial lex_unrank(std::size_t n, std::size_t k, std::uint64_t d, Integer rank)
{
    if (rank < 0 || rank >= count_monomials(static_cast<std::int64_t>(k), static_cast<std::int64_t>(d))) {
        throw DomainError("lex rank out of range");
    }
    Monomial m(n);
    std::uint64_t rem = d;
    for (std::size_t pos = 1; pos < k; ++pos) {
        for (std::uint64_t b = rem + 1; b-- > 0;) {
            Integer block = count_monomials(static_cast<std::int64_t>(k - pos), static_cast<std::int64_t>(rem - b));
            if (rank < block) {
                m.set_exponent(pos, static_cast<Monomial::exponent_type>(b));
                rem -= b;
                break;
            }
            rank -= block;
        }
    }
    if (k >= 1) {
        m.set_exponent(k, static_cast<Monomial::exponent_type>(rem));
    }
    return m;
}

/// The next monomial in lex-descending order of the same degree within x_1..x_k.
inline std::optional<Monomial> lex_successor(const Monomial& u, std::size_t k)
{
    if (k <= 1) {
        return std::nullopt;
    }
    std::size_t pos = 0;
    for (std::size_t i = k - 1; i >= 1; --i) {
        if (u.exponent(i) > 0) {
            pos = i;
            break;
        }
    }
    if (pos == 0) {
        return std::nullopt;
    }
    Monomial v(u);
    Monomial::exponent_type tail = 0;
    for (std::size_t i = pos + 1; i <= k; ++i) {
        tail += v.exponent(i);
        v.set_exponent(i, 0);
    }
    v.set_exponent(pos, v.exponent(pos) - 1);
    v.set_exponent(pos + 1, tail + 1);
    return v;
}

// ---------------------------------------------------------------------------

/// A finite set of monomials of one degree, kept sorted lex-descending.
class MonomialSet {
public:
    MonomialSet(std::size_t n, std::uint64_t degree) : n_(n), degree_(degree) {}

    MonomialSet(std::size_t n, std::uint64_t degree, std::vector<Monomial> members)
        : n_(n), degree_(degree), members_(std::move(members))
    {
        for (const auto& m : members_) {
            if (m.num_vars() != n_) {
                throw RingMismatch(n_, m.num_vars());
            }
            if (m.degree() != degree_) {
                throw DomainError("monomial " + to_string(m) + " does not have degree " + std::to_string(degree_));
            }
        }
        std::sort(members_.begin(), members_.end(), std::greater<>());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::size_t num_vars() const { return n_; }
    std::uint64_t degree() const { return degree_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    const std::vector<Monomial>& members() const { return members_; }
    const Monomial& operator[](std::size_t i) const { return members_[i]; }

    bool contains(const Monomial& u) const
    {
        return std::binary_search(members_.begin(), members_.end(), u, std::greater<>());
    }

    friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

private:
    std::size_t n_;
    std::uint64_t degree_;
    std::vector<Monomial> members_;
};

inline void check_cap(const Integer& count, const Limits& lim, const char* what)
{
    if (count > lim.enumeration_cap) {
        throw CapExceeded(std::string(what) + ": " + count.str() + " monomials exceed the enumeration cap of " +
                          std::to_string(lim.enumeration_cap));
    }
}

/// All degree-d monomials in n variables, lex-descending.
inline MonomialSet enumerate_degree(std::size_t n, std::uint64_t d, const Limits& lim = default_limits())
{
    check_cap(count_monomials(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)), lim, "enumerate_degree");
    std::vector<Monomial> out;
    for_each_monomial(n, n, d, [&](const Monomial& m) {
        out.push_back(m);
        return true;
    });
    return MonomialSet(n, d, std::move(out));
}

/// The first `count` degree-d monomials of K[x_1..x_k] in lex order, in n variables.
inline MonomialSet lex_prefix(std::size_t n, std::size_t k, std::uint64_t d, const Integer& count,
                              const Limits& lim = default_limits())
{
    if (count > count_monomials(static_cast<std::int64_t>(k), static_cast<std::int64_t>(d))) {
        throw DomainError("no lexsegment of size " + count.str() + " in degree " + std::to_string(d) + " of x1..x" +
                          std::to_string(k));
    }
    check_cap(count, lim, "lex_prefix");
    auto c = static_cast<std::size_t>(count);
    std::vector<Monomial> out;
    out.reserve(c);
    if (c > 0) {
        for_each_monomial(n, k, d, [&](const Monomial& m) {
            out.push_back(m);
            return out.size() < c;
        });
    }
    return MonomialSet(n, d, std::move(out));
}

/// Is V an initial lex segment of the degree-d monomials in x_1..x_k?
inline bool is_lexsegment_in(const MonomialSet& V, std::size_t k)
{
    if (V.empty()) {
        return true;
    }
    for (const auto& u : V) {
        if (u.max_index() > k) {
            return false;
        }
    }
    // members are distinct and sorted, so the set is a prefix iff its last rank is size-1
    return lex_rank(V.members().back(), k) == Integer(V.size() - 1);
}

// ---------------------------------------------------------------------------
// Squarefree monomials.

/// Calls f on every squarefree degree-d monomial in x_1..x_k (n variables),
/// lex-descending, until f returns false.
inline void for_each_squarefree(std::size_t n, std::size_t k, std::uint64_t d,
                                const std::function<bool(const Monomial&)>& f)
{
    if (d > k) {
        return;
    }
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) {
        idx[i] = i + 1;
    }
    while (true) {
        Monomial m(n);
        for (auto i : idx) {
            m.set_exponent(i, 1);
        }
        if (!f(m)) {
            return;
        }
        // next combination in lexicographic order of index tuples = lex-descending monomials
        std::size_t p = d;
        while (p > 0 && idx[p - 1] == k - d + p) {
            --p;
        }
        if (p == 0) {
            return;
        }
        ++idx[p - 1];
        for (std::size_t i = p; i < d; ++i) {
            idx[i] = idx[i - 1] + 1;
        }
    }
}

inline MonomialSet squarefree_prefix(std::size_t n, std::size_t k, std::uint64_t d, const Integer& count,
                                     const Limits& lim = default_limits())
{
    if (count > binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(d))) {
        throw DomainError("no squarefree lexsegment of size " + count.str() + " in degree " + std::to_string(d) +
                          " of x1..x" + std::to_string(k));
    }
    check_cap(count, lim, "squarefree_prefix");
    auto c = static_cast<std::size_t>(count);
    std::vector<Monomial> out;
    if (c > 0) {
        for_each_squarefree(n, k, d, [&](const Monomial& m) {
            out.push_back(m);
            return out.size() < c;
        });
    }
    return MonomialSet(n, d, std::move(out));
}

/// Is V (squarefree) an initial segment of the squarefree degree-d monomials in x_1..x_k?
inline bool is_squarefree_lexsegment_in(const MonomialSet& V, std::size_t k)
{
    for (const auto& u : V) {
        if (!u.is_squarefree() || u.max_index() > k) {
            return false;
        }
    }
    if (V.empty()) {
        return true;
    }
    auto prefix = squarefree_prefix(V.num_vars(), k, V.degree(), Integer(V.size()));
    return prefix == V;
}

// ---------------------------------------------------------------------------
// Strongly stable sets and the D_k / M_{<=k} decompositions.

inline bool is_strongly_stable(const MonomialSet& V)
{
    for (const auto& u : V) {
        for (std::size_t q = 2; q <= V.num_vars(); ++q) {
            if (u.exponent(q) == 0) {
                continue;
            }
            for (std::size_t p = 1; p < q; ++p) {
                if (!V.contains(u.over_var(q).times_var(p))) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Smallest strongly stable set of the same degree containing V.
inline MonomialSet strongly_stable_closure(const MonomialSet& V)
{
    MonomialHashSet seen(V.begin(), V.end());
    std::vector<Monomial> work(V.begin(), V.end());
    while (!work.empty()) {
        Monomial u = std::move(work.back());
        work.pop_back();
        for (std::size_t q = 2; q <= V.num_vars(); ++q) {
            if (u.exponent(q) == 0) {
                continue;
            }
            Monomial base = u.over_var(q);
            for (std::size_t p = 1; p < q; ++p) {
                Monomial w = base.times_var(p);
                if (seen.insert(w).second) {
                    work.push_back(std::move(w));
                }
            }
        }
    }
    return MonomialSet(V.num_vars(), V.degree(), std::vector<Monomial>(seen.begin(), seen.end()));
}

/// D_k(V) = { u / x_k : u in V, max(u) = k } for k = 1..n (index k-1).
inline std::vector<MonomialSet> dk_decompose(const MonomialSet& V)
{
    if (V.degree() == 0) {
        throw DomainError("D_k is undefined in degree 0");
    }
    std::vector<std::vector<Monomial>> parts(V.num_vars());
    for (const auto& u : V) {
        auto k = u.max_index();
        parts[k - 1].push_back(u.over_var(k));
    }
    std::vector<MonomialSet> out;
    out.reserve(V.num_vars());
    for (auto& p : parts) {
        out.emplace_back(V.num_vars(), V.degree() - 1, std::move(p));
    }
    return out;
}

/// M_{<=k}(V) = { u in V : max(u) <= k }.
inline MonomialSet m_le_k(const MonomialSet& V, std::size_t k)
{
    if (k < 1 || k > V.num_vars()) {
        throw DomainError("M_{<=k} needs 1 <= k <= n");
    }
    std::vector<Monomial> out;
    for (const auto& u : V) {
        if (u.max_index() <= k) {
            out.push_back(u);
        }
    }
    return MonomialSet(V.num_vars(), V.degree(), std::move(out));
}

/// Sorted indices of the variables of a squarefree monomial; shorthand for support().
inline std::vector<std::size_t> index_set(const Monomial& u)
{
    if (!u.is_squarefree()) {
        throw DomainError("monomial " + to_string(u) + " is not squarefree");
    }
    return u.support();
}

} // namespace dreg
