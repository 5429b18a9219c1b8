#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "betti.hpp"
#include "betti_dispatch.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "monomial.hpp"

namespace dreg {

using FaceMask = std::uint64_t; // bit i-1 <-> vertex i

/// A simplicial complex on [n] stored by its facets. No facets = the void complex;
/// the single facet {} = the irrelevant complex {∅}.
class SimplicialComplex {
public:
    SimplicialComplex(std::size_t n, std::vector<FaceMask> faces) : n_(n)
    {
        if (n == 0 || n > 24) {
            throw DomainError("complexes are supported on 1..24 vertices");
        }
        const FaceMask all = full();
        for (auto f : faces) {
            if (f & ~all) {
                throw DomainError("face uses a vertex outside 1.." + std::to_string(n));
            }
        }
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        for (auto f : faces) {
            bool covered = std::any_of(faces.begin(), faces.end(),
                                       [f](FaceMask g) { return g != f && (f & g) == f; });
            if (!covered) {
                facets_.push_back(f);
            }
        }
        std::sort(facets_.begin(), facets_.end(), [](FaceMask a, FaceMask b) {
            auto pa = std::popcount(a);
            auto pb = std::popcount(b);
            return pa != pb ? pa > pb : a < b;
        });
    }

    std::size_t num_vertices() const { return n_; }
    const std::vector<FaceMask>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    FaceMask full() const { return n_ == 64 ? ~FaceMask{0} : ((FaceMask{1} << n_) - 1); }

    bool contains(FaceMask f) const
    {
        return std::any_of(facets_.begin(), facets_.end(), [f](FaceMask g) { return (f & g) == f; });
    }

    /// dim = max facet size - 1; the void complex has no dimension.
    int dimension() const
    {
        if (is_void()) {
            throw DomainError("the void complex has no dimension");
        }
        return std::popcount(facets_.front()) - 1;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t n_;
    std::vector<FaceMask> facets_;
};

inline std::vector<std::size_t> face_vertices(FaceMask f)
{
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < 64; ++i) {
        if (f & (FaceMask{1} << i)) {
            v.push_back(i + 1);
        }
    }
    return v;
}

inline Monomial face_monomial(std::size_t n, FaceMask f)
{
    Monomial m(n);
    for (auto i : face_vertices(f)) {
        m.set_exponent(i, 1);
    }
    return m;
}

inline FaceMask monomial_face(const Monomial& m)
{
    FaceMask f = 0;
    for (auto i : m.support()) {
        f |= FaceMask{1} << (i - 1);
    }
    return f;
}

/// (f_0, f_1, ..., f_dim); f_{-1} = 1 is implicit. Empty for {∅}.
inline std::vector<Integer> f_vector(const SimplicialComplex& G, const Limits& lim = default_limits())
{
    if (G.is_void()) {
        return {};
    }
    check_cap(Integer(1) << G.num_vertices(), lim, "f_vector");
    std::vector<Integer> f(static_cast<std::size_t>(G.dimension() + 1), 0);
    const FaceMask all = G.full();
    for (FaceMask s = 1;; ++s) {
        if ((s & all) != s) {
            break;
        }
        if (G.contains(s)) {
            f[static_cast<std::size_t>(std::popcount(s) - 1)] += 1;
        }
        if (s == all) {
            break;
        }
    }
    return f;
}

/// h_k = sum_{i=0}^k (-1)^{k-i} C(d-i, k-i) f_{i-1}, k = 0..d, d = dim + 1.
inline std::vector<Integer> h_vector(const SimplicialComplex& G)
{
    if (G.is_void()) {
        throw DomainError("the h-vector of the void complex is undefined");
    }
    auto f = f_vector(G);
    auto d = static_cast<std::int64_t>(f.size());
    auto fm1 = [&](std::int64_t i) { return i == 0 ? Integer(1) : f[static_cast<std::size_t>(i - 1)]; };
    std::vector<Integer> h;
    for (std::int64_t k = 0; k <= d; ++k) {
        Integer v = 0;
        for (std::int64_t i = 0; i <= k; ++i) {
            Integer term = binomial(d - i, k - i) * fm1(i);
            if ((k - i) % 2 == 0) {
                v += term;
            } else {
                v -= term;
            }
        }
        h.push_back(v);
    }
    return h;
}

/// Minimal non-faces of G.
inline std::vector<FaceMask> minimal_nonfaces(const SimplicialComplex& G, const Limits& lim = default_limits())
{
    check_cap(Integer(1) << G.num_vertices(), lim, "minimal_nonfaces");
    std::vector<FaceMask> out;
    const FaceMask all = G.full();
    for (FaceMask s = 0;; ++s) {
        if (!G.contains(s)) {
            bool minimal = true;
            for (auto v : face_vertices(s)) {
                if (!G.contains(s & ~(FaceMask{1} << (v - 1)))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                out.push_back(s);
            }
        }
        if (s == all) {
            break;
        }
    }
    return out;
}

/// I_G, generated by the squarefree monomials of the minimal non-faces. The void complex gives (1).
inline MonomialIdeal stanley_reisner(const SimplicialComplex& G, const Limits& lim = default_limits())
{
    std::vector<Monomial> gens;
    for (auto f : minimal_nonfaces(G, lim)) {
        gens.push_back(face_monomial(G.num_vertices(), f));
    }
    return MonomialIdeal(G.num_vertices(), std::move(gens));
}

/// The complex whose faces are the F with x_F outside I.
inline SimplicialComplex complex_from_ideal(const MonomialIdeal& I, const Limits& lim = default_limits())
{
    if (!is_squarefree(I)) {
        throw DomainError("complex_from_ideal needs a squarefree ideal");
    }
    const std::size_t n = I.num_vars();
    if (n > 24) {
        throw DomainError("complexes are supported on 1..24 vertices");
    }
    check_cap(Integer(1) << n, lim, "complex_from_ideal");
    std::vector<FaceMask> gens;
    for (const auto& g : I.generators()) {
        gens.push_back(monomial_face(g));
    }
    auto is_face = [&](FaceMask s) {
        return std::none_of(gens.begin(), gens.end(), [s](FaceMask g) { return (g & s) == g; });
    };
    const FaceMask all = (FaceMask{1} << n) - 1;
    std::vector<FaceMask> facets;
    for (FaceMask s = 0;; ++s) {
        if (is_face(s)) {
            bool maximal = true;
            for (std::size_t v = 0; v < n; ++v) {
                FaceMask bit = FaceMask{1} << v;
                if (!(s & bit) && is_face(s | bit)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) {
                facets.push_back(s);
            }
        }
        if (s == all) {
            break;
        }
    }
    return SimplicialComplex(n, std::move(facets));
}

/// G* = {F : [n] \ F not in G}; its facets are the complements of the minimal non-faces of G.
inline SimplicialComplex alexander_dual(const SimplicialComplex& G, const Limits& lim = default_limits())
{
    std::vector<FaceMask> facets;
    for (auto f : minimal_nonfaces(G, lim)) {
        facets.push_back(G.full() & ~f);
    }
    return SimplicialComplex(G.num_vertices(), std::move(facets));
}

/// Eagon-Reiner: G is Cohen-Macaulay iff I_{G*} has a linear resolution, i.e. is
/// generated in one degree d and has regularity d. The unit ideal (G the full simplex) counts as linear.
inline bool eagon_reiner_cm(const SimplicialComplex& G, const Limits& lim = default_limits())
{
    if (G.is_void()) {
        throw DomainError("Cohen-Macaulayness of the void complex is not defined");
    }
    MonomialIdeal J = stanley_reisner(alexander_dual(G, lim), lim);
    if (J.is_unit()) {
        return true;
    }
    if (!J.is_equigenerated()) {
        return false;
    }
    return betti(J, BettiMethod::automatic, 1, lim).regularity() == static_cast<int>(J.min_degree());
}

} // namespace dreg
