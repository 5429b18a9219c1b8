#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace dreg;

namespace {

MonomialIdeal ideal(std::size_t n, const char* gens) { return parse_generator_list(gens, n); }

MonomialIdeal load(const std::string& name) { return parse_ideal(read_file(std::string(DREG_DATA_DIR) + "/" + name)); }

std::vector<std::string> names(const MonomialIdeal& I)
{
    std::vector<std::string> out;
    for (const auto& g : I.generators()) {
        out.push_back(to_string(g));
    }
    return out;
}

} // namespace

TEST_CASE("minimalize")
{
    CHECK(ideal(2, "x1, x1*x2") == ideal(2, "x1"));
    CHECK(ideal(4, "x1*x2, x3*x4").size() == 2);
    auto c = oracle::closure({parse_monomial("x1*x3", 3)}, 3);
    std::vector<Monomial> g(c.begin(), c.end());
    g.push_back(parse_monomial("x1^2*x2", 3));
    CHECK(names(MonomialIdeal(3, g)) == std::vector<std::string>{"x1^2", "x1*x2", "x1*x3"});
    CHECK(MonomialIdeal(3, g) == MonomialIdeal(3, MonomialIdeal(3, g).generators()));
    CHECK_THROWS_AS(ideal_sum(ideal(2, "x1"), ideal(3, "x1")), RingMismatch);
}

TEST_CASE("hilbert of two disjoint edges")
{
    auto I = ideal(4, "x1*x2, x3*x4");
    CHECK(hilbert(I, 2) == 2);
    CHECK(hilbert(I, 3) == 8);
    CHECK(hilbert(I, 5) == 36);
    CHECK(hilbert(I, 0) == 0);
    CHECK(hilbert_quotient(I, 2) == 8);
    CHECK(degree_slice(I, 2).size() == 2);
    CHECK(degree_slice(I, 3).size() == 8);
    CHECK(degree_slice(I, 5).size() == 36);
    CHECK(hilbert(MonomialIdeal(3), 4) == 0);
    CHECK(hilbert(ideal(3, "1"), 2) == 6);
}

TEST_CASE("truncations")
{
    CHECK(names(truncate_geq(ideal(2, "x1, x2^2"), 2)) == std::vector<std::string>{"x1^2", "x1*x2", "x2^2"});
    auto I = ideal(3, "x1^2, x1*x2, x2^2");
    CHECK(truncate_geq(I, 2) == I);
    auto T = truncate_geq(ideal(4, "x1*x2, x3*x4"), 3);
    CHECK(T.size() == 8);
    CHECK(T.is_equigenerated());
    CHECK(T.min_degree() == 3);
    CHECK(names(truncate_leq(ideal(3, "x1, x2^3"), 2)) == std::vector<std::string>{"x1"});
    Limits tiny;
    tiny.enumeration_cap = 3;
    CHECK_THROWS_AS(truncate_geq(ideal(4, "x1*x2, x3*x4"), 3, tiny), CapExceeded);
}

TEST_CASE("structural predicates")
{
    CHECK(is_strongly_stable_ideal(ideal(2, "x1^2, x1*x2, x2^3")));
    CHECK_FALSE(is_stable(ideal(4, "x1*x2, x3*x4")));
    CHECK(is_lexsegment_ideal(ideal(2, "x1^2, x1*x2")));
    CHECK(is_lexsegment_ideal(ideal(3, "x1^2, x1*x2")));
    CHECK_FALSE(is_lexsegment_ideal(ideal(3, "x1^2, x1*x2, x2^2")));
    CHECK_FALSE(is_lexsegment_ideal(ideal(3, "x1^2, x2^2")));
    // stable but not strongly stable: x2*x3 -> x1*x3 is missing
    auto S = ideal(3, "x1^2, x1*x2, x2^2, x2*x3");
    CHECK(is_stable(S));
    CHECK_FALSE(is_strongly_stable_ideal(S));
    CHECK_FALSE(is_strongly_stable_ideal(ideal(3, "x1^2, x2*x3")));
    CHECK(is_squarefree_strongly_stable(ideal(4, "x1*x2, x1*x3, x2*x3")));
    CHECK_FALSE(is_squarefree_strongly_stable(ideal(4, "x1*x2, x2*x3")));
}

TEST_CASE("property: structural predicates agree with slice closure")
{
    oracle::Rng rng(31);
    int stable_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng() % 3;
        auto I = trial % 2 ? oracle::random_strongly_stable(rng, n, 3, 2) : oracle::random_ideal(rng, n, 3, 3);
        bool ss = true;
        bool st = true;
        bool lex = true;
        for (std::uint64_t t = 1; t <= I.max_degree() + 1; ++t) {
            auto s = oracle::slice(I, t);
            ss = ss && oracle::strongly_stable(s, n);
            for (const auto& u : s) {
                auto m = u.max_index();
                for (std::size_t k = 1; k < m; ++k) {
                    st = st && s.count(u.over_var(m).times_var(k));
                }
            }
            // a slice is lex iff it equals the lex prefix of its size
            auto sorted = oracle::lex_sorted(n, n, t);
            std::set<Monomial> prefix(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(s.size()));
            lex = lex && prefix == s;
        }
        CHECK(is_strongly_stable_ideal(I) == ss);
        CHECK(is_stable(I) == st);
        CHECK(is_lexsegment_ideal(I) == lex);
        stable_seen += ss ? 1 : 0;
    }
    CHECK(stable_seen >= 100);
}

TEST_CASE("lexify examples")
{
    auto L = ideal(3, "x1^2, x1*x2, x1*x3^2");
    CHECK(lexify(L) == L);
    auto I = load("two_edges.txt");
    auto LI = lexify(I);
    CHECK(LI.max_degree() == 6);
    CHECK(is_lexsegment_ideal(LI));

    auto I5 = load("five_vars_I.txt");
    auto L5 = lexify(I5);
    CHECK(L5.max_degree() == 17);
    CHECK(L5.size() == 38);
    CHECK(ek_betti(L5).regularity() == 17);

    Limits low;
    low.max_lex_degree = 10;
    CHECK_THROWS_AS(lexify(I5, low), CapExceeded);
}

TEST_CASE("sq_lexify examples")
{
    auto I = load("squarefree_six.txt");
    CHECK(names(sq_lexify(I)) == std::vector<std::string>{"x1*x2*x3", "x1*x2*x4", "x1*x2*x5", "x1*x2*x6",
                                                          "x1*x3*x4*x5", "x1*x3*x4*x6", "x1*x3*x5*x6",
                                                          "x2*x3*x4*x5*x6"});
    auto L = sq_lexify(I);
    CHECK(sq_lexify(L) == L);
    CHECK(is_squarefree_lexsegment(L));
    auto e = ideal(2, "x1*x2");
    CHECK(sq_lexify(e) == e);
    CHECK_THROWS_AS(sq_lexify(ideal(2, "x1^2")), DomainError);
}

TEST_CASE("property: inclusion-exclusion equals enumeration")
{
    oracle::Rng rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 4;
        auto I = oracle::random_ideal(rng, n, 4, 1 + rng() % 6);
        for (std::uint64_t t = 0; t <= 6; ++t) {
            CHECK(hilbert(I, t) == oracle::hilbert(I, t));
        }
        auto q = 1 + rng() % n;
        for (std::uint64_t t = 0; t <= 4; ++t) {
            CHECK(count_m_le(I, t, q) == Integer(m_le_slice(I, t, q).size()));
        }
    }
}

TEST_CASE("property: lexify keeps the Hilbert function and is lexsegment")
{
    oracle::Rng rng(33);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + rng() % 4;
        auto I = oracle::random_ideal(rng, n, 4, 1 + rng() % 4);
        auto L = lexify(I);
        CHECK(is_lexsegment_ideal(L));
        auto top = std::max(I.max_degree(), L.max_degree()) + n;
        for (std::uint64_t t = 0; t <= top; ++t) {
            CHECK(hilbert(L, t) == hilbert(I, t));
        }
        for (std::uint64_t t = 0; t <= std::min<std::uint64_t>(top, 6); ++t) {
            CHECK(oracle::hilbert(L, t) == oracle::hilbert(I, t));
        }
    }
}

TEST_CASE("property: sq_lexify keeps squarefree counts")
{
    oracle::Rng rng(34);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 2 + rng() % 5;
        auto I = oracle::random_squarefree_ideal(rng, n, 4, 1 + rng() % 4);
        auto L = sq_lexify(I);
        CHECK(is_squarefree_lexsegment(L));
        CHECK(is_squarefree_strongly_stable(L));
        for (std::uint64_t t = 0; t <= n; ++t) {
            CHECK(squarefree_count(L, t) == squarefree_count(I, t));
        }
    }
}

TEST_CASE("property: Betti numbers of I are bounded by those of Lex(I)")
{
    oracle::Rng rng(35);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 2;
        auto I = oracle::random_ideal(rng, n, 3, 1 + rng() % 3);
        auto BI = koszul_betti(I);
        auto BL = ek_betti(lexify(I));
        CHECK(BI.dominated_by(BL));
    }
}
