#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "monomial.hpp"

namespace dreg {

/// A monomial ideal held by its minimal generators, sorted by degree and then
/// lex-descending within a degree.
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t n) : n_(n)
    {
        if (n == 0) {
            throw DomainError("a ground ring needs at least one variable");
        }
    }

    MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : MonomialIdeal(n)
    {
        for (const auto& g : gens) {
            if (g.num_vars() != n_) {
                throw RingMismatch(n_, g.num_vars());
            }
        }
        std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
            auto da = a.degree();
            auto db = b.degree();
            return da != db ? da < db : a > b;
        });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        // a divisor always has degree <= its multiple, so earlier gens suffice
        for (auto& g : gens) {
            bool redundant = false;
            for (const auto& h : gens_) {
                if (h.degree() < g.degree() && h.divides(g)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) {
                gens_.push_back(std::move(g));
            }
        }
    }

    std::size_t num_vars() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

    std::uint64_t max_degree() const
    {
        if (gens_.empty()) {
            throw DomainError("the zero ideal has no generators");
        }
        return gens_.back().degree();
    }

    std::uint64_t min_degree() const
    {
        if (gens_.empty()) {
            throw DomainError("the zero ideal has no generators");
        }
        return gens_.front().degree();
    }

    /// Generated in a single degree?
    bool is_equigenerated() const { return !gens_.empty() && min_degree() == max_degree(); }

    std::vector<Monomial> generators_of_degree(std::uint64_t t) const
    {
        std::vector<Monomial> out;
        for (const auto& g : gens_) {
            if (g.degree() == t) {
                out.push_back(g);
            }
        }
        return out;
    }

    bool contains(const Monomial& u) const
    {
        if (u.num_vars() != n_) {
            throw RingMismatch(n_, u.num_vars());
        }
        for (const auto& g : gens_) {
            if (g.degree() > u.degree()) {
                break;
            }
            if (g.divides(u)) {
                return true;
            }
        }
        return false;
    }

    Monomial lcm_of_generators() const
    {
        Monomial l(n_);
        for (const auto& g : gens_) {
            l = lcm(l, g);
        }
        return l;
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    void check_ring(const MonomialIdeal& other) const
    {
        if (other.n_ != n_) {
            throw RingMismatch(n_, other.n_);
        }
    }

private:
    std::size_t n_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) { return MonomialIdeal(n, std::move(gens)); }

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b)
{
    a.check_ring(b);
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.num_vars(), std::move(gens));
}

inline MonomialIdeal ideal_from_set(const MonomialSet& V)
{
    return MonomialIdeal(V.num_vars(), V.members());
}

/// The ideal generated by the generators supported on x_1..x_q, as an ideal of K[x_1..x_q].
inline MonomialIdeal restrict_to_first(const MonomialIdeal& I, std::size_t q)
{
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        if (g.max_index() <= q) {
            gens.push_back(g.in_ring(q));
        }
    }
    return MonomialIdeal(q, std::move(gens));
}

// ---------------------------------------------------------------------------
// Hilbert functions.

namespace detail {

// sum over nonempty generator subsets S with deg lcm(S) <= t of (-1)^{|S|+1} f(lcm(S))
inline Integer inclusion_exclusion(const std::vector<Monomial>& gens, std::uint64_t t,
                                   const std::function<Integer(const Monomial&)>& f)
{
    Integer total = 0;
    std::function<void(std::size_t, const Monomial&, int)> rec = [&](std::size_t start, const Monomial& cur,
                                                                      int size) {
        for (std::size_t k = start; k < gens.size(); ++k) {
            Monomial next = size == 0 ? gens[k] : lcm(cur, gens[k]);
            if (next.degree() > t) {
                continue; // every superset has an even larger lcm
            }
            Integer v = f(next);
            if (size % 2 == 0) {
                total += v;
            } else {
                total -= v;
            }
            rec(k + 1, next, size + 1);
        }
    };
    if (!gens.empty()) {
        rec(0, Monomial(gens.front().num_vars()), 0);
    }
    return total;
}

inline constexpr std::size_t inclusion_exclusion_limit = 20;

} // namespace detail

/// dim_K I_t.
inline Integer hilbert(const MonomialIdeal& I, std::uint64_t t, const Limits& lim = default_limits())
{
    auto n = static_cast<std::int64_t>(I.num_vars());
    if (I.is_zero()) {
        return 0;
    }
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        if (g.degree() <= t) {
            gens.push_back(g);
        }
    }
    if (gens.empty()) {
        return 0;
    }
    if (gens.size() <= detail::inclusion_exclusion_limit) {
        return detail::inclusion_exclusion(gens, t, [&](const Monomial& m) {
            return count_monomials(n, static_cast<std::int64_t>(t - m.degree()));
        });
    }
    check_cap(count_monomials(n, static_cast<std::int64_t>(t)), lim, "hilbert");
    Integer count = 0;
    MonomialIdeal J(I.num_vars(), gens);
    for_each_monomial(I.num_vars(), I.num_vars(), t, [&](const Monomial& m) {
        if (J.contains(m)) {
            ++count;
        }
        return true;
    });
    return count;
}

/// dim_K (S/I)_t.
inline Integer hilbert_quotient(const MonomialIdeal& I, std::uint64_t t, const Limits& lim = default_limits())
{
    return count_monomials(static_cast<std::int64_t>(I.num_vars()), static_cast<std::int64_t>(t)) - hilbert(I, t, lim);
}

/// |M_{<=q}(I, t)|: degree-t monomials of I supported on x_1..x_q.
inline Integer count_m_le(const MonomialIdeal& I, std::uint64_t t, std::size_t q, const Limits& lim = default_limits())
{
    if (q == 0) {
        return (t == 0 && I.contains(Monomial(I.num_vars()))) ? 1 : 0;
    }
    return hilbert(restrict_to_first(I, q), t, lim);
}

/// Squarefree monomials of degree t in I, supported on x_1..x_q (q = n by default).
inline Integer squarefree_count(const MonomialIdeal& I, std::uint64_t t, std::size_t q = 0)
{
    if (q == 0) {
        q = I.num_vars();
    }
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        if (g.is_squarefree() && g.degree() <= t && g.max_index() <= q) {
            gens.push_back(g);
        }
    }
    if (gens.empty()) {
        return 0;
    }
    if (gens.size() <= detail::inclusion_exclusion_limit) {
        return detail::inclusion_exclusion(gens, t, [&](const Monomial& m) {
            if (!m.is_squarefree()) {
                return Integer(0);
            }
            auto s = static_cast<std::int64_t>(m.degree());
            return binomial(static_cast<std::int64_t>(q) - s, static_cast<std::int64_t>(t) - s);
        });
    }
    MonomialIdeal J(I.num_vars(), gens);
    Integer count = 0;
    for_each_squarefree(I.num_vars(), q, t, [&](const Monomial& m) {
        if (J.contains(m)) {
            ++count;
        }
        return true;
    });
    return count;
}

/// All degree-t monomials of I, lex-descending.
inline MonomialSet degree_slice(const MonomialIdeal& I, std::uint64_t t, const Limits& lim = default_limits())
{
    check_cap(count_monomials(static_cast<std::int64_t>(I.num_vars()), static_cast<std::int64_t>(t)), lim,
              "degree_slice");
    std::vector<Monomial> out;
    for_each_monomial(I.num_vars(), I.num_vars(), t, [&](const Monomial& m) {
        if (I.contains(m)) {
            out.push_back(m);
        }
        return true;
    });
    return MonomialSet(I.num_vars(), t, std::move(out));
}

/// Degree-t monomials of I supported on x_1..x_q.
inline MonomialSet m_le_slice(const MonomialIdeal& I, std::uint64_t t, std::size_t q,
                              const Limits& lim = default_limits())
{
    std::vector<Monomial> out;
    if (q > 0) {
        check_cap(count_monomials(static_cast<std::int64_t>(q), static_cast<std::int64_t>(t)), lim, "m_le_slice");
        for_each_monomial(I.num_vars(), q, t, [&](const Monomial& m) {
            if (I.contains(m)) {
                out.push_back(m);
            }
            return true;
        });
    } else if (t == 0 && I.contains(Monomial(I.num_vars()))) {
        out.emplace_back(I.num_vars());
    }
    return MonomialSet(I.num_vars(), t, std::move(out));
}

/// Squarefree degree-t monomials of I, lex-descending.
inline MonomialSet squarefree_slice(const MonomialIdeal& I, std::uint64_t t, const Limits& lim = default_limits())
{
    check_cap(binomial(static_cast<std::int64_t>(I.num_vars()), static_cast<std::int64_t>(t)), lim,
              "squarefree_slice");
    std::vector<Monomial> out;
    for_each_squarefree(I.num_vars(), I.num_vars(), t, [&](const Monomial& m) {
        if (I.contains(m)) {
            out.push_back(m);
        }
        return true;
    });
    return MonomialSet(I.num_vars(), t, std::move(out));
}

/// I_{>=k}.
inline MonomialIdeal truncate_geq(const MonomialIdeal& I, std::uint64_t k, const Limits& lim = default_limits())
{
    auto gens = degree_slice(I, k, lim).members();
    for (const auto& g : I.generators()) {
        if (g.degree() > k) {
            gens.push_back(g);
        }
    }
    return MonomialIdeal(I.num_vars(), std::move(gens));
}

/// I_{<=k}.
inline MonomialIdeal truncate_leq(const MonomialIdeal& I, std::uint64_t k)
{
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        if (g.degree() <= k) {
            gens.push_back(g);
        }
    }
    return MonomialIdeal(I.num_vars(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Structural predicates. For monomial ideals each exchange condition holds
// on all of I as soon as it holds on the minimal generators.

/// u in I and k < max(u) imply u x_k / x_max(u) in I.
inline bool is_stable(const MonomialIdeal& I)
{
    for (const auto& u : I.generators()) {
        auto m = u.max_index();
        if (m == 0) {
            continue;
        }
        Monomial base = u.over_var(m);
        for (std::size_t k = 1; k < m; ++k) {
            if (!I.contains(base.times_var(k))) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_strongly_stable_ideal(const MonomialIdeal& I)
{
    for (const auto& u : I.generators()) {
        for (std::size_t q = 2; q <= I.num_vars(); ++q) {
            if (u.exponent(q) == 0) {
                continue;
            }
            Monomial base = u.over_var(q);
            for (std::size_t p = 1; p < q; ++p) {
                if (!I.contains(base.times_var(p))) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_squarefree(const MonomialIdeal& I)
{
    return std::all_of(I.generators().begin(), I.generators().end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

/// Squarefree, and u x_p / x_q in I for every generator u, x_q | u, p < q, x_p not dividing u.
inline bool is_squarefree_strongly_stable(const MonomialIdeal& I)
{
    if (!is_squarefree(I)) {
        return false;
    }
    for (const auto& u : I.generators()) {
        for (std::size_t q = 2; q <= I.num_vars(); ++q) {
            if (u.exponent(q) == 0) {
                continue;
            }
            Monomial base = u.over_var(q);
            for (std::size_t p = 1; p < q; ++p) {
                if (u.exponent(p) == 0 && !I.contains(base.times_var(p))) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Is I_t a lexsegment for every t up to `through_degree` (default: max generator degree)?
/// Beyond the max generator degree the slices are products with the maximal ideal,
/// which keeps lexsegments lexsegment.
inline bool is_lexsegment_ideal(const MonomialIdeal& I, std::int64_t through_degree = -1,
                                const Limits& lim = default_limits())
{
    if (I.is_zero() || I.is_unit()) {
        return true;
    }
    auto n = I.num_vars();
    std::uint64_t top = through_degree < 0 ? I.max_degree() : static_cast<std::uint64_t>(through_degree);
    for (std::uint64_t t = I.min_degree(); t <= top; ++t) {
        // the lex-smallest degree-t member is g * x_n^{t - deg g} for some generator g
        Integer worst = -1;
        for (const auto& g : I.generators()) {
            if (g.degree() > t) {
                break;
            }
            Monomial m = g;
            m.set_exponent(n, m.exponent(n) + static_cast<Monomial::exponent_type>(t - g.degree()));
            Integer r = lex_rank(m, n);
            if (r > worst) {
                worst = r;
            }
        }
        if (worst + 1 != hilbert(I, t, lim)) {
            return false;
        }
    }
    return true;
}

/// Is the set of squarefree members of every I_t a squarefree lexsegment?
inline bool is_squarefree_lexsegment(const MonomialIdeal& I, const Limits& lim = default_limits())
{
    if (!is_squarefree(I)) {
        return false;
    }
    for (std::uint64_t t = 1; t <= I.num_vars(); ++t) {
        if (!is_squarefree_lexsegment_in(squarefree_slice(I, t, lim), I.num_vars())) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Lex(I) and SqLex(I).

/// Macaulay's lexsegment ideal with the Hilbert function of I.
///
/// Built degree by degree from lex ranks. Stops at the first t >= max generator
/// degree of I with dim I_{t+1} equal to the size of the span of Lex(I)_t; by
/// Gotzmann persistence nothing changes above that degree.
inline MonomialIdeal lexify(const MonomialIdeal& I, const Limits& lim = default_limits())
{
    auto n = I.num_vars();
    if (I.is_zero()) {
        return I;
    }
    if (I.is_unit()) {
        return I;
    }
    const std::uint64_t maxdeg = I.max_degree();
    std::vector<Monomial> gens;
    std::optional<Monomial> last; // lex-smallest member of Lex(I)_t
    for (std::uint64_t t = 0;; ++t) {
        if (t > static_cast<std::uint64_t>(lim.max_lex_degree)) {
            throw CapExceeded("Lex(I) did not stabilize by degree " + std::to_string(lim.max_lex_degree));
        }
        Integer span = 0;
        if (last) {
            Monomial shifted = last->times_var(n);
            span = lex_rank(shifted, n) + 1;
        }
        Integer h = hilbert(I, t, lim);
        if (h < span) {
            throw DomainError("Hilbert function of I grows below the Macaulay bound");
        }
        if (last && t > maxdeg && h == span) {
            break;
        }
        check_cap(h - span, lim, "lexify");
        for (Integer r = span; r < h; ++r) {
            gens.push_back(lex_unrank(n, n, t, r));
        }
        if (h > 0) {
            last = lex_unrank(n, n, t, h - 1);
        }
    }
    return MonomialIdeal(n, std::move(gens));
}

/// The squarefree lexsegment ideal whose squarefree part has the counts of I.
inline MonomialIdeal sq_lexify(const MonomialIdeal& I, const Limits& lim = default_limits())
{
    if (!is_squarefree(I)) {
        throw DomainError("SqLex needs a squarefree monomial ideal");
    }
    auto n = I.num_vars();
    std::vector<Monomial> gens;
    for (std::uint64_t t = 0; t <= n; ++t) {
        auto f = squarefree_count(I, t);
        auto prefix = squarefree_prefix(n, n, t, f, lim);
        gens.insert(gens.end(), prefix.begin(), prefix.end());
    }
    if (I.is_unit()) {
        gens.emplace_back(n);
    }
    return MonomialIdeal(n, std::move(gens));
}

} // namespace dreg
