#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "betti.hpp"
#include "error.hpp"
#include "exact_rank.hpp"
#include "ideal.hpp"

namespace dreg {

/// Bounds on the computed part of the diagram (ideal-indexed i and j).
struct RankWindow {
    int max_homological = -1; // default: n - 1 for the ideal
    int max_internal = -1;    // default: degree of the lcm of the generators
    bool auto_extend = true;  // ignore the bounds when they would cut nonzero entries
};

namespace detail {

// beta_{i,b}(S/I) for one multidegree b, i = 0..|supp b|
inline std::vector<Integer> koszul_multidegree(const MonomialIdeal& I, const std::vector<std::uint32_t>& b)
{
    std::size_t n = b.size();
    std::vector<std::size_t> supp;
    for (std::size_t k = 0; k < n; ++k) {
        if (b[k] > 0) {
            supp.push_back(k);
        }
    }
    const std::size_t s = supp.size();
    const std::uint32_t full = (s == 32) ? 0xffffffffu : ((1u << s) - 1);

    // e_F (x) x^{b - 1_F} is a basis element iff the monomial is outside I
    auto monomial_for = [&](std::uint32_t mask) {
        std::vector<Monomial::exponent_type> e(b.begin(), b.end());
        for (std::size_t p = 0; p < s; ++p) {
            if (mask & (1u << p)) {
                --e[supp[p]];
            }
        }
        return Monomial(std::move(e));
    };
    std::vector<std::int64_t> index(static_cast<std::size_t>(full) + 1, -1);
    std::vector<std::vector<std::uint32_t>> basis(s + 1);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (!I.contains(monomial_for(mask))) {
            auto i = static_cast<std::size_t>(std::popcount(mask));
            index[mask] = static_cast<std::int64_t>(basis[i].size());
            basis[i].push_back(mask);
        }
        if (mask == full) {
            break;
        }
    }
    // rank of d_i : C_i -> C_{i-1}
    std::vector<std::size_t> rank(s + 2, 0);
    for (std::size_t i = 1; i <= s; ++i) {
        if (basis[i].empty() || basis[i - 1].empty()) {
            continue;
        }
        std::vector<SparseRow> rows;
        rows.reserve(basis[i].size());
        for (auto mask : basis[i]) {
            SparseRow row;
            int pos = 0;
            for (std::size_t p = 0; p < s; ++p) {
                if (!(mask & (1u << p))) {
                    continue;
                }
                auto target = index[mask & ~(1u << p)];
                if (target >= 0) {
                    row.emplace_back(static_cast<std::uint32_t>(target), Integer(pos % 2 == 0 ? 1 : -1));
                }
                ++pos;
            }
            std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            if (!row.empty()) {
                rows.push_back(std::move(row));
            }
        }
        rank[i] = exact_rank(std::move(rows));
    }
    std::vector<Integer> h(s + 1, 0);
    for (std::size_t i = 0; i <= s; ++i) {
        std::size_t dim = basis[i].size();
        std::size_t kernel = dim - rank[i];
        if (kernel < rank[i + 1]) {
            throw std::logic_error("Koszul strand: image larger than kernel");
        }
        h[i] = kernel - rank[i + 1];
    }
    return h;
}

} // namespace detail

/// Exact graded Betti numbers of any monomial ideal from Koszul homology of S/I.
///
/// Works one multidegree b <= lcm(G(I)) at a time; each graded strand splits
/// into these blocks. Multidegrees with x^b outside I (b != 0) are acyclic and skipped.
inline BettiDiagram koszul_betti(const MonomialIdeal& I, const RankWindow& window = {}, unsigned jobs = 1,
                                 const Limits& lim = default_limits())
{
    const std::size_t n = I.num_vars();
    BettiDiagram D(n);
    if (I.is_zero()) {
        return D;
    }
    if (I.is_unit()) {
        throw DomainError("Betti numbers of the unit ideal are not handled");
    }
    if (n > 30) {
        throw CapExceeded("the Koszul oracle handles at most 30 variables");
    }
    Monomial L = I.lcm_of_generators();
    Integer boxes = 1;
    for (auto e : L.exponents()) {
        boxes *= Integer(e) + 1;
    }
    check_cap(boxes, lim, "koszul_betti");
    const auto total = static_cast<std::size_t>(boxes);

    auto unrank = [&](std::size_t code) {
        std::vector<std::uint32_t> b(n);
        for (std::size_t k = 0; k < n; ++k) {
            auto base = static_cast<std::size_t>(L.exponent(k + 1)) + 1;
            b[k] = static_cast<std::uint32_t>(code % base);
            code /= base;
        }
        return b;
    };

    jobs = std::max(1u, jobs);
    std::vector<std::map<std::pair<int, int>, Integer>> partial(jobs);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](unsigned id) {
        try {
            for (std::size_t code = next++; code < total; code = next++) {
                auto b = unrank(code);
                Monomial xb(std::vector<Monomial::exponent_type>(b.begin(), b.end()));
                if (xb.is_unit() || !I.contains(xb)) {
                    continue;
                }
                auto h = detail::koszul_multidegree(I, b);
                int j = static_cast<int>(xb.degree());
                for (std::size_t i = 1; i < h.size(); ++i) {
                    if (h[i] != 0) {
                        partial[id][{static_cast<int>(i) - 1, j}] += h[i];
                    }
                }
            }
        } catch (...) {
            errors[id] = std::current_exception();
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned id = 0; id < jobs; ++id) {
            threads.emplace_back(worker, id);
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    for (const auto& part : partial) {
        for (const auto& [key, v] : part) {
            D.add(key.first, key.second, v);
        }
    }

    int max_i = window.max_homological < 0 ? static_cast<int>(n) - 1 : window.max_homological;
    int max_j = window.max_internal < 0 ? static_cast<int>(L.degree()) : window.max_internal;
    BettiDiagram cut(n);
    for (const auto& [key, v] : D.entries()) {
        if (key.first <= max_i && key.second <= max_j) {
            cut.add(key.first, key.second, v);
        } else if (!window.auto_extend) {
            throw DomainError("rank window too small: beta_{" + std::to_string(key.first) + "," +
                              std::to_string(key.second) + "} is nonzero outside it");
        }
    }
    return window.auto_extend ? D : cut;
}

} // namespace dreg
