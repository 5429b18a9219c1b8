#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace dreg;

namespace {

MonomialIdeal ideal(std::size_t n, const char* gens) { return parse_generator_list(gens, n); }

MonomialIdeal load(const std::string& name) { return parse_ideal(read_file(std::string(DREG_DATA_DIR) + "/" + name)); }

MonomialSet gens_set(const MonomialIdeal& I) { return MonomialSet(I.num_vars(), I.min_degree(), I.generators()); }

LSequence lseq(std::uint64_t d, std::initializer_list<int> xs) { return {d, {xs.begin(), xs.end()}}; }

const char* ex1 = "x1^3, x1^2*x2, x1*x2^2, x2^3, x1^2*x3, x1*x2*x3, x2^2*x3, x1^2*x4";

} // namespace

TEST_CASE("l-sequences")
{
    CHECK(l_sequence(ideal(4, ex1)) == lseq(3, {1, 3, 3, 1}));
    CHECK(l_sequence(ideal(5, "x1^4")) == lseq(4, {1, 0, 0, 0, 0}));
    CHECK(l_sequence(ideal(3, "x1^2, x1*x2, x1*x3")) == lseq(2, {1, 1, 1}));
    CHECK_THROWS_AS(l_sequence(ideal(3, "x1^2, x1*x2^2")), DomainError);
    CHECK_THROWS_AS(l_sequence(ideal(3, "x2^2")), DomainError);
    CHECK(to_string(lseq(3, {1, 3, 3, 1})) == "(1,3,3,1)");
}

TEST_CASE("admissible l-sequences")
{
    CHECK(is_admissible_l(lseq(3, {1, 3, 3, 1})));
    CHECK_FALSE(is_admissible_l(lseq(3, {1, 4, 0, 0})));
    CHECK_FALSE(is_admissible_l(lseq(3, {0, 0, 0})));
    CHECK(is_admissible_l(lseq(5, {1, 0, 0})));
}

TEST_CASE("d-linear lexsegment ideals from l")
{
    CHECK(dlinear_lex_from_l(lseq(4, {1, 0, 0})) == ideal(3, "x1^4"));
    CHECK(dlinear_lex_from_l(lseq(2, {1, 2, 1})) == ideal(3, "x1^2, x1*x2, x2^2, x1*x3"));
    auto W = dlinear_lex_from_l(lseq(3, {1, 3, 3, 1}));
    CHECK(W == ideal(4, "x1^3, x1^2*x2, x1*x2^2, x2^3, x1^2*x3, x1*x2*x3, x1*x3^2, x1^2*x4"));
    CHECK(l_sequence(W) == lseq(3, {1, 3, 3, 1}));
    CHECK(oracle::strongly_stable(std::set<Monomial>(W.generators().begin(), W.generators().end()), 4));
    CHECK_THROWS_AS(dlinear_lex_from_l(lseq(3, {1, 4, 0, 0})), DomainError);
    CHECK_THROWS_AS(dlinear_lex_set(3, lseq(3, {2, 0, 0})), DomainError);
}

TEST_CASE("the d-linear lexsegment set with l = (1,3,3,1) is unique")
{
    auto all = oracle::lex_sorted(4, 4, 3);
    REQUIRE(all.size() == 20);
    std::vector<MonomialSet> hits;
    for (std::uint32_t mask = 0; mask < (1u << 20); ++mask) {
        if (std::popcount(mask) != 8) {
            continue;
        }
        std::vector<Monomial> pick;
        for (std::size_t b = 0; b < 20; ++b) {
            if (mask & (1u << b)) {
                pick.push_back(all[b]);
            }
        }
        MonomialSet V(4, 3, pick);
        if (l_sequence_of_set(V) == lseq(3, {1, 3, 3, 1}) && is_dlinear_lex(V)) {
            hits.push_back(V);
        }
    }
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == dlinear_lex_set(4, lseq(3, {1, 3, 3, 1})));
}

TEST_CASE("is_dlinear_lex")
{
    CHECK(is_dlinear_lex(gens_set(ideal(3, "x1^3, x1^2*x2, x1*x2^2, x2^3, x1^2*x3"))));
    CHECK_FALSE(is_dlinear_lex(gens_set(ideal(4, ex1))));
    CHECK(is_dlinear_lex(MonomialSet(4, 3)));
}

TEST_CASE("Hilbert function from l")
{
    auto l = lseq(3, {1, 3, 3, 1});
    CHECK(hilbert_from_l(l, 3) == 8);
    CHECK(hilbert_from_l(l, 4) == 20);
    auto V = ideal(4, ex1);
    for (std::uint64_t t = 3; t <= 7; ++t) {
        CHECK(hilbert_from_l(l, t) == oracle::hilbert(V, t));
    }
    CHECK(oracle::hilbert(V, 5) == 38);
    CHECK(oracle::hilbert(V, 6) == 63);
    for (std::uint64_t m = 0; m <= 4; ++m) {
        CHECK(hilbert_from_l(lseq(2, {1, 0, 0, 0}), 2 + m) == binomial(3 + static_cast<std::int64_t>(m), 3));
    }
    CHECK_THROWS_AS(hilbert_from_l(l, 2), DomainError);
}

TEST_CASE("l from a Hilbert tail")
{
    HilbertSpec H{4, {0, 0, 0, 8, 20, 38, 63}, HilbertRole::ideal};
    CHECK(l_from_hilbert_tail(H, 3) == lseq(3, {1, 3, 3, 1}));
    auto P = hilbert_spec(ideal(3, "x1^2"), 5);
    CHECK(l_from_hilbert_tail(P, 2) == lseq(2, {1, 0, 0}));
    HilbertSpec bad{3, {0, 1, 0, 0}, HilbertRole::ideal};
    CHECK_THROWS_AS(l_from_hilbert_tail(bad, 1), DomainError);
    HilbertSpec short_tail{4, {0, 0, 0, 8, 20}, HilbertRole::ideal};
    CHECK_THROWS_AS(l_from_hilbert_tail(short_tail, 3), DomainError);
    HilbertSpec wrong{4, {0, 0, 0, 8, 20, 38, 63, 111}, HilbertRole::ideal};
    CHECK_THROWS_AS(l_from_hilbert_tail(wrong, 3), DomainError);
}

TEST_CASE("d-lexsegment ideals of two disjoint edges")
{
    auto I = load("two_edges.txt");
    auto L3 = lexd(I, 3);
    CHECK(L3 == ideal(4, "x1^2, x1*x2, x2^3"));
    auto D3 = ek_betti(L3);
    CHECK(D3.get(0, 2) == 2);
    CHECK(D3.get(1, 3) == 1);
    CHECK(D3.get(0, 3) == 1);
    CHECK(D3.get(1, 4) == 1);
    CHECK(D3.totals() == std::vector<Integer>{3, 2});

    CHECK(lexd(I, 4) == ideal(4, "x1^2, x1*x2, x1*x3^2, x2^4"));
    CHECK(ek_betti(lexd(I, 4)).totals() == std::vector<Integer>{4, 4, 1});
    CHECK(lexd(I, 5) == load("lex5.txt"));
    CHECK(lexd(I, 6) == lexify(I));
    CHECK_THROWS_AS(lexd(I, 2), DomainError);

    CHECK(dlex_from_hilbert(hilbert_spec(I, 7), 4) == lexd(I, 4));
    CHECK(dlex_from_hilbert(hilbert_spec(ideal(3, "x1^3"), 5), 3) == ideal(3, "x1^3"));

    auto L = ideal(3, "x1^2, x1*x2, x1*x3^2");
    CHECK(lexd(L, 4) == L);
}

TEST_CASE("characterize")
{
    auto H = parse_hilbert_spec(read_file(std::string(DREG_DATA_DIR) + "/two_edges_hilbert.txt"));
    auto v = characterize(H, 3);
    CHECK(v.admissible);
    REQUIRE(v.witness.has_value());
    CHECK(H.values[2] <= (*v.witness)[4]);
    CHECK(*v.witness == l_sequence(truncate_geq(lexd(load("two_edges.txt"), 3), 3)));
    CHECK(characterize(H.flipped(), 3).admissible);

    auto bad = H;
    bad.values[0] = 1;
    auto w = characterize(bad, 3);
    CHECK_FALSE(w.admissible);
    CHECK(w.failed_condition == "(ii)");

    // a lexsegment ideal with reg 2 < 3 fails the exact test at (iii) and passes the plain one
    auto L = hilbert_spec(ideal(3, "x1^2, x1*x2"), 6);
    CHECK(characterize(L, 3).admissible);
    auto e = characterize_exact(L, 3);
    CHECK_FALSE(e.admissible);
    CHECK(e.failed_condition == "(iii)");
    CHECK(characterize_exact(H, 3).admissible);

    // reg 3 data tested at d = 2
    auto low = characterize(hilbert_spec(load("two_edges.txt"), 6), 2);
    CHECK_FALSE(low.admissible);

    HilbertSpec tiny{4, {0, 0, 2}, HilbertRole::ideal};
    CHECK_THROWS_AS(characterize(tiny, 3), DomainError);
}

TEST_CASE("regularity range")
{
    auto R = regularity_range(load("two_edges.txt"));
    CHECK(R.low == 3);
    CHECK(R.high == 6);
    REQUIRE(R.witnesses.size() == 4);
    for (const auto& [r, W] : R.witnesses) {
        CHECK(ek_betti(W).regularity() == r);
    }
    auto L = ideal(3, "x1^2, x1*x2, x1*x3^2");
    auto RL = regularity_range(L);
    CHECK(RL.low == RL.high);
    CHECK(RL.low == 3);
    auto RX = regularity_range(ideal(2, "x1, x2"));
    CHECK(RX.low == 1);
    CHECK(RX.high == 1);
}

TEST_CASE("property: EK from l")
{
    oracle::Rng rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + rng() % 5;
        std::uint64_t d = 1 + rng() % 4;
        auto I = oracle::random_strongly_stable_equi(rng, n, d);
        auto l = l_sequence(I);
        auto D = ek_betti(I);
        for (int i = 0; i < static_cast<int>(n); ++i) {
            Integer s = 0;
            for (std::size_t k = 1; k <= n; ++k) {
                s += l[k] * binomial(static_cast<std::int64_t>(k) - 1, i);
            }
            CHECK(D.get(i, i + static_cast<int>(d)) == s);
        }
        CHECK(is_admissible_l(l));
    }
}

TEST_CASE("property: Lex^(d) of a d-regular ideal has regularity d")
{
    oracle::Rng rng(62);
    int hits = 0;
    for (int trial = 0; trial < 300 && hits < 120; ++trial) {
        std::size_t n = 2 + rng() % 3;
        auto I = trial % 2 ? oracle::random_strongly_stable(rng, n, 4) : oracle::random_ideal(rng, n, 3, 2);
        auto r = regularity(I);
        auto L = lexd(I, static_cast<std::uint64_t>(r));
        CHECK(ek_betti(L).regularity() == r);
        ++hits;
    }
    CHECK(hits >= 100);
}
