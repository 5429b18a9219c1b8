#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "betti_dispatch.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "integer.hpp"
#include "macaulay.hpp"
#include "monomial.hpp"

namespace dreg {

/// (l_1, ..., l_n): l_k counts degree-d generators with max index k.
struct LSequence {
    std::uint64_t degree = 1;
    std::vector<Integer> entries;

    std::size_t num_vars() const { return entries.size(); }
    const Integer& operator[](std::size_t k) const { return entries.at(k - 1); } // 1-based
    friend bool operator==(const LSequence&, const LSequence&) = default;
};

inline std::string to_string(const LSequence& l)
{
    std::string s = "(";
    for (std::size_t k = 0; k < l.entries.size(); ++k) {
        if (k > 0) {
            s += ',';
        }
        s += l.entries[k].str();
    }
    return s + ")";
}

/// l-sequence of a set of degree-d monomials (no structural check).
inline LSequence l_sequence_of_set(const MonomialSet& V)
{
    LSequence l{V.degree(), std::vector<Integer>(V.num_vars(), 0)};
    for (const auto& u : V) {
        auto k = u.max_index();
        if (k == 0) {
            throw DomainError("the l-sequence is undefined in degree 0");
        }
        l.entries[k - 1] += 1;
    }
    return l;
}

inline LSequence l_sequence(const MonomialIdeal& I)
{
    if (I.is_zero() || I.is_unit()) {
        throw DomainError("the l-sequence needs a nonzero nonunit ideal");
    }
    if (!I.is_equigenerated()) {
        throw DomainError("the l-sequence needs an ideal generated in one degree");
    }
    if (!is_strongly_stable_ideal(I)) {
        throw DomainError("the l-sequence needs a strongly stable ideal");
    }
    return l_sequence_of_set(MonomialSet(I.num_vars(), I.min_degree(), I.generators()));
}

/// An M-vector with l_2 <= d.
inline bool is_admissible_l(const LSequence& l)
{
    if (l.degree < 1 || !is_m_vector(l.entries)) {
        return false;
    }
    return l.entries.size() < 2 || l.entries[1] <= Integer(l.degree);
}

/// The union of x_k B_k, B_k the first l_k monomials of degree d-1 in x_1..x_k.
/// No admissibility check.
inline MonomialSet dlinear_lex_set(std::size_t n, const LSequence& l, const Limits& lim = default_limits())
{
    if (l.entries.size() > n) {
        throw DomainError("l-sequence longer than the number of variables");
    }
    if (l.degree < 1) {
        throw DomainError("d-linear sets need d >= 1");
    }
    const std::uint64_t d = l.degree;
    std::vector<Monomial> out;
    for (std::size_t k = 1; k <= l.entries.size(); ++k) {
        const Integer& c = l.entries[k - 1];
        if (c < 0) {
            throw DomainError("negative l-sequence entry");
        }
        if (c > count_monomials(static_cast<std::int64_t>(k), static_cast<std::int64_t>(d - 1))) {
            throw DomainError("l_" + std::to_string(k) + " = " + c.str() + " exceeds the " +
                              count_monomials(static_cast<std::int64_t>(k), static_cast<std::int64_t>(d - 1)).str() +
                              " monomials of degree " + std::to_string(d - 1) + " in x1..x" + std::to_string(k));
        }
        for (const auto& b : lex_prefix(n, k, d - 1, c, lim)) {
            out.push_back(b.times_var(k));
        }
    }
    return MonomialSet(n, d, std::move(out));
}

/// The unique d-linear lexsegment ideal with l-sequence l, in l.num_vars() variables.
inline MonomialIdeal dlinear_lex_from_l(const LSequence& l, const Limits& lim = default_limits())
{
    if (!is_admissible_l(l)) {
        throw DomainError("inadmissible l-sequence " + to_string(l) + " for d = " + std::to_string(l.degree));
    }
    return ideal_from_set(dlinear_lex_set(l.num_vars(), l, lim));
}

/// Strongly stable with every D_k(V) a lexsegment in x_1..x_k.
inline bool is_dlinear_lex(const MonomialSet& V)
{
    if (V.empty() || V.degree() == 0) {
        return true;
    }
    if (!is_strongly_stable(V)) {
        return false;
    }
    auto parts = dk_decompose(V);
    for (std::size_t k = 1; k <= parts.size(); ++k) {
        if (!is_lexsegment_in(parts[k - 1], k)) {
            return false;
        }
    }
    return true;
}

/// H(I, t) = sum_k l_k C(n - k + t - d, n - k), t >= d.
inline Integer hilbert_from_l(const LSequence& l, std::uint64_t t)
{
    if (t < l.degree) {
        throw DomainError("hilbert_from_l needs t >= d");
    }
    auto n = static_cast<std::int64_t>(l.num_vars());
    auto m = static_cast<std::int64_t>(t - l.degree);
    Integer h = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        h += l.entries[static_cast<std::size_t>(k - 1)] * binomial(n - k + m, n - k);
    }
    return h;
}

/// Solves hilbert_from_l(l, t) = H(t) for t = d..d+n-1; later supplied values are checked.
inline LSequence l_from_hilbert_tail(const HilbertSpec& spec, std::uint64_t d)
{
    HilbertSpec H = spec.as_ideal();
    const std::size_t n = H.num_vars;
    if (d < 1) {
        throw DomainError("d must be positive");
    }
    if (H.values.size() < d + n) {
        throw DomainError("the Hilbert function must be given through degree d + n - 1 = " +
                          std::to_string(d + n - 1));
    }
    // A[m][k] = C(n - k + m, n - k), rows m = 0..n-1, columns k = 1..n
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n + 1));
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = 1; k <= n; ++k) {
            auto a = static_cast<std::int64_t>(n - k);
            A[m][k - 1] = Rational(binomial(a + static_cast<std::int64_t>(m), a));
        }
        A[m][n] = Rational(H.values[d + m]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (A[p][c] == 0) {
            ++p;
        }
        std::swap(A[p], A[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && A[r][c] != 0) {
                Rational f = A[r][c] / A[c][c];
                for (std::size_t k = c; k <= n; ++k) {
                    A[r][k] -= f * A[c][k];
                }
            }
        }
    }
    LSequence l{d, {}};
    for (std::size_t k = 0; k < n; ++k) {
        Rational v = A[k][n] / A[k][k];
        if (denominator(v) != 1 || v < 0) {
            throw DomainError("no nonnegative integer l-sequence matches the Hilbert function tail (l_" +
                              std::to_string(k + 1) + " = " + v.str() + ")");
        }
        l.entries.push_back(numerator(v));
    }
    for (std::size_t t = d + n; t < H.values.size(); ++t) {
        if (hilbert_from_l(l, t) != H.values[t]) {
            throw DomainError("tail not eventually polynomial of the claimed shape: H(" + std::to_string(t) +
                              ") = " + H.values[t].str() + " but the l-sequence predicts " +
                              hilbert_from_l(l, t).str());
        }
    }
    return l;
}

struct Verdict {
    bool admissible = false;
    std::optional<LSequence> witness;
    std::string failed_condition; // "(i)(a)", "(i)(b)", "(i)(c)", "(ii)" or "(iii)"
    std::string detail;
};

/// Is H the Hilbert function of an ideal with regularity <= d (exact: = d)?
/// Conditions are evaluated in the order (i)(b), (i)(a), (i)(c), (ii), (iii):
/// (i)(a) and (i)(c) need the l-sequence that (i)(b) produces.
inline Verdict characterize(const HilbertSpec& spec, std::uint64_t d, bool exact = false)
{
    HilbertSpec H = spec.as_ideal();
    const std::size_t n = H.num_vars;
    Verdict v;
    LSequence l;
    try {
        l = l_from_hilbert_tail(H, d);
    } catch (const DomainError& e) {
        if (H.values.size() < d + n || d < 1) {
            throw;
        }
        v.failed_condition = "(i)(b)";
        v.detail = e.what();
        return v;
    }
    if (!is_admissible_l(l)) {
        v.failed_condition = "(i)(a)";
        v.detail = "l = " + to_string(l) + " is not an M-vector with l_2 <= " + std::to_string(d);
        return v;
    }
    if (H.values[d - 1] > l.entries.back()) {
        v.failed_condition = "(i)(c)";
        v.detail = "H(d-1) = " + H.values[d - 1].str() + " exceeds l_n = " + l.entries.back().str();
        return v;
    }
    if (H.values[0] != 0) {
        v.failed_condition = "(ii)";
        v.detail = "H(0) = " + H.values[0].str() + " is not 0";
        return v;
    }
    for (std::uint64_t t = 0; t + 1 < d; ++t) {
        Integer g = ideal_growth(H.values[t], n);
        if (g > H.values[t + 1]) {
            v.failed_condition = "(ii)";
            v.detail = "H(" + std::to_string(t) + ") grows to at least " + g.str() + " > H(" + std::to_string(t + 1) +
                       ") = " + H.values[t + 1].str();
            return v;
        }
    }
    if (exact) {
        Integer g = ideal_growth(H.values[d - 1], n);
        if (!(g < H.values[d])) {
            v.failed_condition = "(iii)";
            v.detail = "H(d-1) grows to " + g.str() + ", not below H(d) = " + H.values[d].str();
            return v;
        }
    }
    v.admissible = true;
    v.witness = l;
    return v;
}

inline Verdict characterize_exact(const HilbertSpec& spec, std::uint64_t d) { return characterize(spec, d, true); }

/// Generators of the lexsegment ideal with dim I_t = values[t] for t < top (exclusive).
inline std::vector<Monomial> lex_generators_through(std::size_t n, const std::vector<Integer>& values,
                                                    std::uint64_t top, const Limits& lim = default_limits())
{
    std::vector<Monomial> gens;
    std::optional<Monomial> last;
    for (std::uint64_t t = 0; t < top; ++t) {
        Integer span = last ? lex_rank(last->times_var(n), n) + 1 : Integer(0);
        const Integer& h = values.at(t);
        if (h < span) {
            throw DomainError("Hilbert function grows below the Macaulay bound at degree " + std::to_string(t));
        }
        if (h > count_monomials(static_cast<std::int64_t>(n), static_cast<std::int64_t>(t))) {
            throw DomainError("Hilbert function exceeds dim S_t at degree " + std::to_string(t));
        }
        check_cap(h - span, lim, "lex generators");
        for (Integer r = span; r < h; ++r) {
            gens.push_back(lex_unrank(n, n, t, r));
        }
        if (h > 0) {
            last = lex_unrank(n, n, t, h - 1);
        }
    }
    return gens;
}

/// The d-lexsegment ideal with Hilbert function H.
inline MonomialIdeal dlex_from_hilbert(const HilbertSpec& spec, std::uint64_t d, const Limits& lim = default_limits())
{
    Verdict v = characterize(spec, d);
    if (!v.admissible) {
        throw DomainError("Hilbert function fails condition " + v.failed_condition + ": " + v.detail);
    }
    HilbertSpec H = spec.as_ideal();
    auto gens = lex_generators_through(H.num_vars, H.values, d, lim);
    auto top = dlinear_lex_set(H.num_vars, *v.witness, lim);
    gens.insert(gens.end(), top.begin(), top.end());
    return MonomialIdeal(H.num_vars, std::move(gens));
}

/// H(I, 0..T) as an ideal-side spec.
inline HilbertSpec hilbert_spec(const MonomialIdeal& I, std::uint64_t T, const Limits& lim = default_limits())
{
    HilbertSpec H{I.num_vars(), {}, HilbertRole::ideal};
    for (std::uint64_t t = 0; t <= T; ++t) {
        H.values.push_back(hilbert(I, t, lim));
    }
    return H;
}

/// Lex^(d)(I): the d-lexsegment ideal with the Hilbert function of I (needs reg(I) <= d).
inline MonomialIdeal lexd(const MonomialIdeal& I, std::uint64_t d, const Limits& lim = default_limits())
{
    if (I.is_zero() || I.is_unit()) {
        throw DomainError("Lex^(d) needs a nonzero nonunit ideal");
    }
    int r = regularity(I, lim);
    if (static_cast<std::uint64_t>(r) > d) {
        throw DomainError("reg(I) = " + std::to_string(r) + " exceeds d = " + std::to_string(d));
    }
    return dlex_from_hilbert(hilbert_spec(I, d + I.num_vars() - 1, lim), d, lim);
}

struct RegularityRange {
    int low = 0;
    int high = 0;
    std::vector<std::pair<int, MonomialIdeal>> witnesses; // (r, Lex^(r)(I)), reg exactly r
};

/// {reg(I), ..., reg(Lex(I))} with a witness of each regularity. reg(I) is taken
/// as the lower end, so the caller supplies a representative of minimal regularity.
inline RegularityRange regularity_range(const MonomialIdeal& I, const Limits& lim = default_limits())
{
    if (I.is_zero() || I.is_unit()) {
        throw DomainError("the regularity range needs a nonzero nonunit ideal");
    }
    RegularityRange R;
    R.low = regularity(I, lim);
    R.high = ek_betti(lexify(I, lim)).regularity();
    for (int r = R.low; r <= R.high; ++r) {
        MonomialIdeal W = lexd(I, static_cast<std::uint64_t>(r), lim);
        int got = ek_betti(W).regularity();
        if (got != r) {
            throw std::logic_error("Lex^(" + std::to_string(r) + ") has regularity " + std::to_string(got));
        }
        R.witnesses.emplace_back(r, std::move(W));
    }
    return R;
}

} // namespace dreg
