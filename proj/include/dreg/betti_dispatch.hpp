#pragma once

#include <string>

#include "betti.hpp"
#include "error.hpp"
#include "koszul.hpp"

namespace dreg {

enum class BettiMethod { automatic, ek, ahh, koszul };

inline BettiMethod parse_betti_method(const std::string& s)
{
    if (s == "auto") {
        return BettiMethod::automatic;
    }
    if (s == "ek") {
        return BettiMethod::ek;
    }
    if (s == "ahh") {
        return BettiMethod::ahh;
    }
    if (s == "koszul") {
        return BettiMethod::koszul;
    }
    throw FormatError("unknown Betti method '" + s + "' (expected auto, ek, ahh or koszul)");
}

/// Eliahou-Kervaire for stable ideals, the squarefree formula for squarefree
/// strongly stable ones, the Koszul oracle for everything else.
inline BettiDiagram betti(const MonomialIdeal& I, BettiMethod method = BettiMethod::automatic, unsigned jobs = 1,
                          const Limits& lim = default_limits())
{
    switch (method) {
    case BettiMethod::ek:
        return ek_betti(I);
    case BettiMethod::ahh:
        return ahh_betti(I);
    case BettiMethod::koszul:
        return koszul_betti(I, {}, jobs, lim);
    case BettiMethod::automatic:
        break;
    }
    if (I.is_zero()) {
        return BettiDiagram(I.num_vars());
    }
    if (is_stable(I)) {
        return ek_betti(I);
    }
    if (is_squarefree_strongly_stable(I)) {
        return ahh_betti(I);
    }
    return koszul_betti(I, {}, jobs, lim);
}

/// reg(I) through the automatic backend.
inline int regularity(const MonomialIdeal& I, const Limits& lim = default_limits())
{
    return betti(I, BettiMethod::automatic, 1, lim).regularity();
}

} // namespace dreg
