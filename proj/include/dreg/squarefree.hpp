#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "betti_dispatch.hpp"
#include "dlex.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "monomial.hpp"

namespace dreg {

/// x_{i1} x_{i2} ... x_{id} (i1 <= ... <= id) to x_{i1} x_{i2+1} ... x_{id+d-1}, in m variables.
inline Monomial phi(const Monomial& u, std::size_t m)
{
    auto d = u.degree();
    if (u.is_unit()) {
        return Monomial(m);
    }
    if (u.max_index() + d - 1 > m) {
        throw DomainError("the squarefree image of " + to_string(u) + " needs " +
                          std::to_string(u.max_index() + d - 1) + " variables, have " + std::to_string(m));
    }
    Monomial v(m);
    std::size_t shift = 0;
    for (std::size_t i = 1; i <= u.num_vars(); ++i) {
        for (std::uint32_t e = 0; e < u.exponent(i); ++e) {
            v.set_exponent(i + shift, 1);
            ++shift;
        }
    }
    return v;
}

/// Default target: n + deg(u) - 1 variables.
inline Monomial phi(const Monomial& u)
{
    auto d = u.degree();
    return phi(u, u.num_vars() + (d == 0 ? 0 : d - 1));
}

/// Inverse of phi, landing in m variables.
inline Monomial phi_inv(const Monomial& v, std::size_t m)
{
    if (!v.is_squarefree()) {
        throw DomainError("phi_inv needs a squarefree monomial, got " + to_string(v));
    }
    auto idx = v.support();
    Monomial u(m);
    for (std::size_t p = 0; p < idx.size(); ++p) {
        std::size_t target = idx[p] - p;
        if (target < 1 || target > m) {
            throw DomainError("phi_inv of " + to_string(v) + " does not fit in " + std::to_string(m) + " variables");
        }
        u.set_exponent(target, u.exponent(target) + 1);
    }
    return u;
}

inline Monomial phi_inv(const Monomial& v) { return phi_inv(v, v.num_vars()); }

/// Phi(I) in n + d - 1 variables for I strongly stable generated in degree d.
inline MonomialIdeal phi_ideal(const MonomialIdeal& I)
{
    if (!I.is_equigenerated() || I.is_unit()) {
        throw DomainError("phi_ideal needs an ideal generated in one positive degree");
    }
    if (!is_strongly_stable_ideal(I)) {
        throw DomainError("phi_ideal needs a strongly stable ideal");
    }
    auto m = I.num_vars() + I.min_degree() - 1;
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        gens.push_back(phi(g, m));
    }
    return MonomialIdeal(m, std::move(gens));
}

/// Phi^{-1}(J) for J squarefree strongly stable generated in degree d; lands in
/// `target` variables (default n - d + 1).
inline MonomialIdeal phi_inv_ideal(const MonomialIdeal& J, std::size_t target = 0)
{
    if (!J.is_equigenerated() || J.is_unit()) {
        throw DomainError("phi_inv_ideal needs an ideal generated in one positive degree");
    }
    if (!is_squarefree_strongly_stable(J)) {
        throw DomainError("phi_inv_ideal needs a squarefree strongly stable ideal");
    }
    auto d = J.min_degree();
    if (target == 0) {
        if (J.num_vars() + 1 <= d) {
            throw DomainError("degree exceeds the number of variables");
        }
        target = J.num_vars() - d + 1;
    }
    std::vector<Monomial> gens;
    for (const auto& g : J.generators()) {
        gens.push_back(phi_inv(g, target));
    }
    return MonomialIdeal(target, std::move(gens));
}

/// Phi applied generator-wise inside the same ring; needs max(u) + deg(u) - 1 <= n.
inline MonomialIdeal phi_tilde(const MonomialIdeal& I)
{
    if (I.is_unit()) {
        throw DomainError("phi_tilde needs a nonunit ideal");
    }
    if (!is_strongly_stable_ideal(I)) {
        throw DomainError("phi_tilde needs a strongly stable ideal");
    }
    const auto n = I.num_vars();
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        if (g.max_index() + g.degree() - 1 > n) {
            throw DomainError("phi_tilde: generator " + to_string(g) + " has max + deg - 1 > n, so beta_{ij} != 0 "
                              "for some j > n");
        }
        gens.push_back(phi(g, n));
    }
    return MonomialIdeal(n, std::move(gens));
}

/// l*_k = number of generators with max(u) = k + d - 1, k = 1..n-d+1.
inline LSequence l_star(const MonomialIdeal& J)
{
    if (!J.is_equigenerated() || J.is_unit()) {
        throw DomainError("the l*-sequence needs an ideal generated in one positive degree");
    }
    if (!is_squarefree_strongly_stable(J)) {
        throw DomainError("the l*-sequence needs a squarefree strongly stable ideal");
    }
    auto d = J.min_degree();
    auto n = J.num_vars();
    LSequence l{d, std::vector<Integer>(n - d + 1, 0)};
    for (const auto& g : J.generators()) {
        l.entries[g.max_index() - d] += 1;
    }
    return l;
}

/// l* from squarefree counts f_t = sum_k l*_k C(n - (k + d - 1), t - d), t = d..n.
/// f[t] holds f_t. Solved from t = n downwards; the system is unitriangular.
inline LSequence l_star_from_counts(std::size_t n, std::uint64_t d, const std::vector<Integer>& f)
{
    if (d < 1 || d > n) {
        throw DomainError("need 1 <= d <= n");
    }
    const std::size_t slots = n - d + 1;
    LSequence l{d, std::vector<Integer>(slots, 0)};
    auto N = static_cast<std::int64_t>(n);
    auto D = static_cast<std::int64_t>(d);
    for (std::int64_t s = N - D; s >= 0; --s) {
        // equation for t = d + s involves k <= n - d + 1 - s; the largest has coefficient 1
        std::int64_t kmax = N - D + 1 - s;
        Integer rhs = f.at(static_cast<std::size_t>(D + s));
        for (std::int64_t k = 1; k < kmax; ++k) {
            rhs -= l.entries[static_cast<std::size_t>(k - 1)] * binomial(N - (k + D - 1), s);
        }
        if (rhs < 0) {
            throw DomainError("squarefree counts are not those of a d-linear squarefree ideal");
        }
        l.entries[static_cast<std::size_t>(kmax - 1)] = rhs;
    }
    return l;
}

/// Squarefree strongly stable with every D_k(V) a squarefree lexsegment in x_1..x_{k-1}.
inline bool is_dlinear_sq_lex(const MonomialSet& V)
{
    if (V.empty() || V.degree() == 0) {
        return true;
    }
    for (const auto& u : V) {
        if (!u.is_squarefree()) {
            return false;
        }
    }
    MonomialIdeal I = ideal_from_set(V);
    if (!is_squarefree_strongly_stable(I)) {
        return false;
    }
    auto parts = dk_decompose(V);
    for (std::size_t k = 1; k <= parts.size(); ++k) {
        if (!is_squarefree_lexsegment_in(parts[k - 1], k - 1)) {
            return false;
        }
    }
    return true;
}

/// The squarefree d-linear lexsegment set with l*-sequence l in n variables (Phi of the d-linear lexsegment).
inline MonomialSet dlinear_sq_lex_set(std::size_t n, const LSequence& lstar, const Limits& lim = default_limits())
{
    const auto d = lstar.degree;
    if (d < 1 || d > n) {
        throw DomainError("need 1 <= d <= n");
    }
    auto base = dlinear_lex_set(n - d + 1, lstar, lim);
    std::vector<Monomial> out;
    for (const auto& u : base) {
        out.push_back(phi(u, n));
    }
    return MonomialSet(n, d, std::move(out));
}

/// SqLex^(d)(I): the squarefree d-lexsegment ideal with the Hilbert function of I.
inline MonomialIdeal sq_lexd(const MonomialIdeal& I, std::uint64_t d, const Limits& lim = default_limits())
{
    const auto n = I.num_vars();
    if (!is_squarefree(I) || I.is_zero() || I.is_unit()) {
        throw DomainError("SqLex^(d) needs a nonzero nonunit squarefree ideal");
    }
    if (d < 1 || d > n) {
        throw DomainError("SqLex^(d) needs 1 <= d <= n");
    }
    int r = regularity(I, lim);
    if (static_cast<std::uint64_t>(r) > d) {
        throw DomainError("reg(I) = " + std::to_string(r) + " exceeds d = " + std::to_string(d));
    }
    std::vector<Monomial> gens;
    for (std::uint64_t t = 0; t < d; ++t) {
        auto prefix = squarefree_prefix(n, n, t, squarefree_count(I, t), lim);
        gens.insert(gens.end(), prefix.begin(), prefix.end());
    }
    std::vector<Integer> f(n + 1, 0);
    for (std::uint64_t t = d; t <= n; ++t) {
        f[t] = squarefree_count(I, t);
    }
    LSequence lstar = l_star_from_counts(n, d, f);
    auto top = dlinear_sq_lex_set(n, lstar, lim);
    gens.insert(gens.end(), top.begin(), top.end());
    MonomialIdeal out(n, std::move(gens));
    for (std::uint64_t t = 0; t <= n; ++t) {
        if (squarefree_count(out, t) != squarefree_count(I, t)) {
            throw DomainError("no squarefree " + std::to_string(d) + "-lexsegment ideal matches the Hilbert function");
        }
    }
    return out;
}

/// {reg(I), ..., reg(SqLex(I))} with witnesses SqLex^(r)(I).
inline RegularityRange sq_regularity_range(const MonomialIdeal& I, const Limits& lim = default_limits())
{
    if (!is_squarefree(I) || I.is_zero() || I.is_unit()) {
        throw DomainError("the squarefree regularity range needs a nonzero nonunit squarefree ideal");
    }
    RegularityRange R;
    R.low = regularity(I, lim);
    R.high = ahh_betti(sq_lexify(I, lim)).regularity();
    for (int r = R.low; r <= R.high; ++r) {
        MonomialIdeal W = sq_lexd(I, static_cast<std::uint64_t>(r), lim);
        int got = ahh_betti(W).regularity();
        if (got != r) {
            throw std::logic_error("SqLex^(" + std::to_string(r) + ") has regularity " + std::to_string(got));
        }
        R.witnesses.emplace_back(r, std::move(W));
    }
    return R;
}

} // namespace dreg
