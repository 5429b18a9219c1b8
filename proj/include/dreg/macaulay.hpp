#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

namespace dreg {

/// a = C(a(d), d) + C(a(d-1), d-1) + ... + C(a(j), j) with a(d) > ... > a(j) >= j >= 1.
struct MacaulayRep {
    std::int64_t degree = 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> terms; // (a(i), i), i descending

    Integer value() const
    {
        Integer v = 0;
        for (auto [top, bottom] : terms) {
            v += binomial(top, bottom);
        }
        return v;
    }
};

/// The d-th Macaulay representation of a >= 1 (greedy).
inline MacaulayRep macaulay_rep(const Integer& a, std::int64_t d)
{
    if (a < 1) {
        throw DomainError("a Macaulay representation needs a >= 1");
    }
    if (d < 1) {
        throw DomainError("a Macaulay representation needs d >= 1");
    }
    if (a > Integer(std::numeric_limits<std::int64_t>::max() / 4)) {
        throw DomainError("integer too large for a Macaulay representation");
    }
    MacaulayRep rep;
    rep.degree = d;
    Integer rem = a;
    for (std::int64_t i = d; i >= 1 && rem > 0; --i) {
        // largest x with C(x, i) <= rem; C(i, i) = 1 <= rem so x >= i
        std::int64_t lo = i;
        std::int64_t hi = i + 1;
        while (binomial(hi, i) <= rem) {
            lo = hi;
            hi = i + 2 * (hi - i) + 1;
        }
        while (hi - lo > 1) {
            std::int64_t mid = lo + (hi - lo) / 2;
            if (binomial(mid, i) <= rem) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rep.terms.emplace_back(lo, i);
        rem -= binomial(lo, i);
    }
    return rep;
}

/// a↑d: every top raised by one, bottoms fixed. 0↑d = 0.
inline Integer up(const Integer& a, std::int64_t d)
{
    if (a == 0) {
        return 0;
    }
    Integer v = 0;
    for (auto [top, bottom] : macaulay_rep(a, d).terms) {
        v += binomial(top + 1, bottom);
    }
    return v;
}

/// a↓d: every top and bottom raised by one. 0↓d = 0.
inline Integer down(const Integer& a, std::int64_t d)
{
    if (a == 0) {
        return 0;
    }
    Integer v = 0;
    for (auto [top, bottom] : macaulay_rep(a, d).terms) {
        v += binomial(top + 1, bottom + 1);
    }
    return v;
}

/// Growth bound of an ideal-side Hilbert function in n variables: a↑(n-1),
/// with the one-variable ring read as a↑0 = a.
inline Integer ideal_growth(const Integer& a, std::size_t n)
{
    if (n <= 1) {
        return a;
    }
    return up(a, static_cast<std::int64_t>(n - 1));
}

/// h_0 = 1 and h_t↓t >= h_{t+1} for every t >= 1.
inline bool is_m_vector(const std::vector<Integer>& h)
{
    if (h.empty() || h[0] != 1) {
        return false;
    }
    for (std::size_t t = 1; t + 1 < h.size(); ++t) {
        if (h[t] < 0 || down(h[t], static_cast<std::int64_t>(t)) < h[t + 1]) {
            return false;
        }
    }
    return h.size() < 2 || h[1] >= 0;
}

enum class HilbertRole { ideal, quotient };

/// A finite Hilbert function H(0), ..., H(T) of an ideal or of a quotient S/I.
struct HilbertSpec {
    std::size_t num_vars = 1;
    std::vector<Integer> values;
    HilbertRole role = HilbertRole::ideal;

    std::size_t top() const { return values.empty() ? 0 : values.size() - 1; }

    /// The same function seen from the other side (H(S,t) - H(t)).
    HilbertSpec flipped() const
    {
        HilbertSpec out{num_vars, {}, role == HilbertRole::ideal ? HilbertRole::quotient : HilbertRole::ideal};
        for (std::size_t t = 0; t < values.size(); ++t) {
            out.values.push_back(count_monomials(static_cast<std::int64_t>(num_vars), static_cast<std::int64_t>(t)) -
                                 values[t]);
        }
        return out;
    }

    HilbertSpec as_ideal() const { return role == HilbertRole::ideal ? *this : flipped(); }
};

/// H(0) = 1, H(1) <= n and H(t)↓t >= H(t+1) for t >= 1, over the supplied range.
inline bool admissible_quotient(const HilbertSpec& H)
{
    if (H.role != HilbertRole::quotient) {
        throw DomainError("admissible_quotient needs a quotient-side Hilbert function");
    }
    const auto& v = H.values;
    if (v.empty() || v[0] != 1) {
        return false;
    }
    for (const auto& x : v) {
        if (x < 0) {
            return false;
        }
    }
    if (v.size() > 1 && v[1] > Integer(H.num_vars)) {
        return false;
    }
    for (std::size_t t = 1; t + 1 < v.size(); ++t) {
        if (down(v[t], static_cast<std::int64_t>(t)) < v[t + 1]) {
            return false;
        }
    }
    return true;
}

/// H(0) = 0 and H(t)↑(n-1) <= H(t+1) <= H(S, t+1) over the supplied range.
inline bool admissible_ideal(const HilbertSpec& H)
{
    if (H.role != HilbertRole::ideal) {
        throw DomainError("admissible_ideal needs an ideal-side Hilbert function");
    }
    const auto& v = H.values;
    if (v.empty() || v[0] != 0) {
        return false;
    }
    auto n = static_cast<std::int64_t>(H.num_vars);
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] < 0 || v[t] > count_monomials(n, static_cast<std::int64_t>(t))) {
            return false;
        }
        if (t + 1 < v.size() && ideal_growth(v[t], H.num_vars) > v[t + 1]) {
            return false;
        }
    }
    return true;
}

} // namespace dreg
