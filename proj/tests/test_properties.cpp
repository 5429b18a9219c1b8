#include <catch_amalgamated.hpp>

#include "property_suites.hpp"

namespace {

void check_suite(const props::SuiteResult& r)
{
    INFO(r.name);
    for (const auto& note : r.notes) {
        UNSCOPED_INFO(note);
    }
    CHECK(r.cases >= 100);
    CHECK(r.failures == 0);
}

} // namespace

TEST_CASE("suite: strong stability through slices") { check_suite(props::strong_stability_by_slices()); }
TEST_CASE("suite: lexsegment minimality") { check_suite(props::lexsegment_minimality()); }
TEST_CASE("suite: shadow counts") { check_suite(props::shadow_counts()); }
TEST_CASE("suite: squarefree operation") { check_suite(props::squarefree_operation()); }
TEST_CASE("suite: linear triads") { check_suite(props::linear_triads()); }
TEST_CASE("suite: maximal Betti numbers") { check_suite(props::maximal_betti()); }
TEST_CASE("suite: d-lexsegment uniqueness") { check_suite(props::dlex_uniqueness()); }
TEST_CASE("suite: Lex(I,A)") { check_suite(props::lex_area_invariance()); }
TEST_CASE("suite: characterize round trip") { check_suite(props::characterize_round_trip()); }
TEST_CASE("suite: K-polynomial identity") { check_suite(props::k_polynomial_everywhere()); }
