// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "property_suites.hpp"

using namespace dreg;

namespace {

struct Check {
    std::vector<std::string> problems;
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            problems.push_back(what);
        }
    }
};

std::string data(const char* name) { return std::string(DREG_DATA_DIR) + "/" + name; }

MonomialIdeal ideal(std::size_t n, const char* gens) { return parse_generator_list(gens, n); }

// runs the CLI in-process; a nonzero exit is recorded as a problem
std::string cli(Check& c, std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    if (code != 0) {
        std::string line;
        for (const auto& a : args) {
            line += a + " ";
        }
        c.require(false, "dreg " + line + "exited " + std::to_string(code) + ": " + err.str());
    }
    return out.str();
}

std::vector<Integer> row(const BettiDiagram& D, int k)
{
    std::vector<Integer> out;
    for (int i = 0; i <= D.projdim(); ++i) {
        out.push_back(D.row_entry(k, i));
    }
    while (!out.empty() && out.back() == 0) {
        out.pop_back();
    }
    return out;
}

std::vector<Integer> iv(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

void rows_are(Check& c, const std::string& label, const BettiDiagram& D,
              std::initializer_list<std::pair<int, std::vector<Integer>>> rows, std::vector<Integer> totals)
{
    int lo = D.min_row();
    int hi = D.regularity();
    std::size_t k = 0;
    std::vector<std::pair<int, std::vector<Integer>>> want(rows);
    for (int r = lo; r <= hi; ++r) {
        auto got = row(D, r);
        if (got.empty()) {
            continue;
        }
        c.require(k < want.size() && want[k].first == r && want[k].second == got,
                  label + ": unexpected row " + std::to_string(r));
        ++k;
    }
    c.require(k == want.size(), label + ": missing rows");
    auto t = D.totals();
    while (totals.size() < t.size()) {
        totals.push_back(0);
    }
    while (t.size() < totals.size()) {
        t.push_back(0);
    }
    c.require(t == totals, label + ": totals differ");
}

Check criterion_1()
{
    Check c;
    auto in = data("two_edges.txt");
    auto L3 = parse_ideal(cli(c, {"dlex", "-d", "3", in}));
    auto L4 = parse_ideal(cli(c, {"dlex", "-d", "4", in}));
    auto L5 = parse_ideal(cli(c, {"dlex", "-d", "5", in}));
    c.require(L3 == ideal(4, "x1^2, x1*x2, x2^3"), "Lex^(3) generators");
    c.require(L4 == ideal(4, "x1^2, x1*x2, x1*x3^2, x2^4"), "Lex^(4) generators");
    c.require(L5 == ideal(4, "x1^2, x1*x2, x1*x3^2, x1*x3*x4^2, x2^5, x2^4*x3"), "Lex^(5) generators");
    rows_are(c, "Lex^(3)", ek_betti(L3), {{2, iv({2, 1})}, {3, iv({1, 1})}}, iv({3, 2}));
    rows_are(c, "Lex^(4)", ek_betti(L4), {{2, iv({2, 1})}, {3, iv({1, 2, 1})}, {4, iv({1, 1})}}, iv({4, 4, 1}));
    rows_are(c, "Lex^(5)", ek_betti(L5),
             {{2, iv({2, 1})}, {3, iv({1, 2, 1})}, {4, iv({1, 3, 3, 1})}, {5, iv({2, 3, 1})}}, iv({6, 9, 5, 1}));
    c.require(cli(c, {"betti", "--method", "ek", data("lex5.txt")}) == format_table(ek_betti(L5)),
              "betti verb disagrees with the library table");
    return c;
}

Check criterion_2()
{
    Check c;
    auto in = data("two_edges.txt");
    auto out = cli(c, {"reg-range", in});
    c.require(out.rfind("{3,4,5,6}\n", 0) == 0, "reg-range prints " + out.substr(0, out.find('\n')));
    auto R = regularity_range(parse_ideal(read_file(in)));
    c.require(R.low == 3 && R.high == 6 && R.witnesses.size() == 4, "range bounds");
    for (const auto& [r, W] : R.witnesses) {
        c.require(koszul_betti(W).regularity() == r, "witness for r = " + std::to_string(r));
    }
    auto I = parse_ideal(read_file(in));
    std::set<int> depths{koszul_betti(I).depth_quotient()};
    for (std::uint64_t d = 3; d <= 5; ++d) {
        depths.insert(ek_betti(lexd(I, d)).depth_quotient());
    }
    c.require(depths == std::set<int>{0, 1, 2}, "depth values");
    return c;
}

Check criterion_3()
{
    Check c;
    auto in = data("squarefree_six.txt");
    auto S3 = parse_ideal(cli(c, {"sqdlex", "-d", "3", in}));
    auto S4 = parse_ideal(cli(c, {"sqdlex", "-d", "4", in}));
    auto SL = parse_ideal(cli(c, {"sqlex", in}));
    c.require(S3 == ideal(6, "x1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4"), "SqLex^(3) generators");
    c.require(S4 == ideal(6, "x1*x2*x3, x1*x2*x4, x1*x2*x5, x1*x2*x6, x1*x3*x4*x5, x1*x3*x4*x6, x2*x3*x4*x5"),
              "SqLex^(4) generators");
    c.require(SL == ideal(6, "x1*x2*x3, x1*x2*x4, x1*x2*x5, x1*x2*x6, x1*x3*x4*x5, x1*x3*x4*x6, x1*x3*x5*x6, "
                             "x2*x3*x4*x5*x6"),
              "SqLex generators");
    rows_are(c, "SqLex^(3)", ahh_betti(S3), {{3, iv({4, 3})}}, iv({4, 3, 0, 0}));
    rows_are(c, "SqLex^(4)", ahh_betti(S4), {{3, iv({4, 6, 4, 1})}, {4, iv({3, 4, 1})}}, iv({7, 10, 5, 1}));
    rows_are(c, "SqLex", ahh_betti(SL), {{3, iv({4, 6, 4, 1})}, {4, iv({3, 5, 2})}, {5, iv({1, 1})}},
             iv({8, 12, 6, 1}));
    for (const auto* J : {&S3, &S4, &SL}) {
        c.require(koszul_betti(*J) == ahh_betti(*J), "oracle disagrees with the closed form");
    }
    return c;
}

Check criterion_4()
{
    Check c;
    c.require(cli(c, {"area", "conv", "(2,4);(4,2)"}) == "(2,4);(3,3);(4,2)\n", "semi-convex hull");
    auto in = data("five_vars_I.txt");
    auto L = parse_ideal(cli(c, {"lexarea", "--area", "(2,4);(3,3);(4,2)", in}));
    c.require(L == ideal(5, "x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x2^3, x2^2*x3, x2^2*x4, x2*x3^3, x3^4"),
              "Lex(I,B) generators");
    rows_are(c, "Lex(I,B)", ek_betti(L), {{2, iv({5, 10, 10, 5, 1})}, {3, iv({3, 6, 4, 1})}, {4, iv({2, 4, 2})}},
             iv({10, 20, 16, 6, 1}));
    auto X = parse_ideal(cli(c, {"lex", in}));
    c.require(ek_betti(X).regularity() == 17, "reg(Lex(I))");
    c.require(X.size() == 38, "|G(Lex(I))|");
    return c;
}

Check criterion_5()
{
    Check c;
    auto I = parse_ideal(read_file(data("five_vars_I.txt")));
    auto J = parse_ideal(read_file(data("five_vars_J.txt")));
    auto A = parse_area("(2,4);(4,2)", 5);
    auto BI = koszul_betti(I);
    auto BJ = koszul_betti(J);
    c.require(BI == ek_betti(I) && BJ == ek_betti(J), "oracle and closed form disagree");
    c.require(admits(BI, A), "I does not admit A");
    c.require(admits(BJ, A), "J does not admit A");
    for (std::uint64_t t = 0; t <= 10; ++t) {
        c.require(hilbert(I, t) == hilbert(J, t) && hilbert(I, t) == oracle::hilbert(J, t),
                  "Hilbert functions differ at t = " + std::to_string(t));
    }
    auto alt = [](const BettiDiagram& D, int j) {
        Integer s = 0;
        for (int i = 0; i <= j; ++i) {
            s += (i % 2 == 0 ? 1 : -1) * D.get(i, j);
        }
        return s;
    };
    c.require(alt(BI, 6) == 2 && alt(BJ, 6) == 2, "alternating sums at degree 6");
    c.require(BI.get(2, 6) == 2, "beta_{2,6}(I)");
    c.require(BJ.get(4, 6) == 1, "beta_{4,6}(J)");
    // a diagram admitting A has beta_{i,6} = 0 unless (i, 6 - i) is in A; every such i is even,
    // so its alternating sum at degree 6 is at least beta_{2,6} + beta_{4,6} >= 3 > 2 if it dominates both
    Integer lower = 0;
    for (int i = 0; i <= 6; ++i) {
        if (A.contains(i, 6 - i)) {
            c.require(i % 2 == 0, "odd homological degree allowed at degree 6");
            lower += std::max(BI.get(i, 6), BJ.get(i, 6));
        }
    }
    c.require(lower > alt(BI, 6), "a dominating diagram would be consistent");
    return c;
}

Check criterion_6()
{
    Check c;
    oracle::Rng rng(6006);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 4;
        auto I = oracle::random_strongly_stable(rng, n, 4);
        auto E = ek_betti(I);
        c.require(koszul_betti(I) == E, "EK vs oracle on " + props::show(I));
        c.require(bigatti_betti(I) == E, "degreewise formula vs EK on " + props::show(I));
    }
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng() % 5;
        auto I = oracle::random_sq_strongly_stable(rng, n, 4);
        auto E = ahh_betti(I);
        c.require(koszul_betti(I) == E, "AHH vs oracle on " + props::show(I));
        c.require(sq_degreewise_betti(I) == E, "squarefree degreewise formula vs AHH on " + props::show(I));
    }
    return c;
}

Check criterion_7()
{
    Check c;
    for (const auto& suite : props::all_suites()) {
        auto r = suite();
        std::cout << "    " << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
        c.require(r.cases >= 100, r.name + ": only " + std::to_string(r.cases) + " cases");
        c.require(r.failures == 0, r.name + ": " + std::to_string(r.failures) + " failures");
        for (const auto& note : r.notes) {
            c.require(false, r.name + ": " + note);
        }
    }
    return c;
}

} // namespace

int main()
{
    struct Criterion {
        const char* label;
        Check (*run)();
    };
    const Criterion criteria[] = {
        {"d-lexsegment ideals of (x1x2, x3x4) at d = 3, 4, 5", criterion_1},
        {"regularity range {3,4,5,6} and depths {0,1,2}", criterion_2},
        {"squarefree d-lexsegment ideals at d = 3, 4 and SqLex", criterion_3},
        {"semi-convex hull, Lex(I,B) and Lex(I) with reg 17", criterion_4},
        {"no maximal Betti numbers for the non-semi-convex area", criterion_5},
        {"closed forms agree with the Koszul oracle (200 + 200)", criterion_6},
        {"randomized property suites", criterion_7},
    };
    int failed = 0;
    int k = 1;
    for (const auto& cr : criteria) {
        Check c;
        try {
            c = cr.run();
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        bool ok = c.problems.empty();
        std::cout << (ok ? "PASS" : "FAIL") << " [" << k << "] " << cr.label << "\n";
        for (const auto& p : c.problems) {
            std::cout << "    " << p << "\n";
        }
        failed += ok ? 0 : 1;
        ++k;
    }
    return failed == 0 ? 0 : 1;
}
