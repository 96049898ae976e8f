#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hncalc/acyclic_pushforward.hpp"
#include "hncalc/hn_core.hpp"

using namespace hncalc;

namespace {

AcyclicSpec spec_of(long long cover, long long rank, long long degree, long long genus) {
    AcyclicSpec spec;
    spec.cover_degree = cover;
    spec.bundle_rank = rank;
    spec.bundle_degree = degree;
    spec.genus = genus;
    return spec;
}

} // namespace

TEST_CASE("euler characteristic on a curve") {
    CHECK(euler_char(2, 2, 2) == 0);
    CHECK(euler_char(0, 1, 1) == 0);
    CHECK(euler_char(0, 1, 0) == 1);
    CHECK(euler_char(-3, 3, 2) == -6);
    CHECK_THROWS_AS(euler_char(0, 0, 0), DomainError);
    CHECK_THROWS_AS(euler_char(0, 1, -1), DomainError);
}

TEST_CASE("admissibility is exactly chi equal to zero") {
    CHECK_NOTHROW(spec_of(3, 2, 2, 2).validate());
    CHECK_NOTHROW(spec_of(2, 1, 0, 1).validate());
    CHECK_THROWS_AS(spec_of(5, 1, 0, 0).validate(), AdmissibilityError);
    CHECK_THROWS_AS(spec_of(1, 1, 0, 0).validate(), AdmissibilityError);
    CHECK_THROWS_AS(spec_of(0, 1, 0, 1).validate(), DomainError);
    CHECK_THROWS_AS(spec_of(2, 0, 0, 1).validate(), DomainError);
}

TEST_CASE("frozen pushforwards") {
    SplittingType st = pushforward_splitting(spec_of(3, 2, 2, 2));
    CHECK(st.multiplicity(0) == 0);
    CHECK(st.multiplicity(1) == 6);
    CHECK(st.max_degree_index() == 1);
    CHECK(bundle_string(st) == "O(−1)^6");

    SplittingType elliptic = pushforward_splitting(spec_of(2, 1, 0, 1));
    CHECK(bundle_string(elliptic) == "O(−1)^2");
}

TEST_CASE("inadmissible inputs are rejected by the operation") {
    CHECK_THROWS_AS(pushforward_splitting(spec_of(1, 1, 0, 0)), AdmissibilityError);
    CHECK_THROWS_AS(pushforward_splitting(spec_of(4, 2, 5, 2)), AdmissibilityError);
}

TEST_CASE("random admissible specs give a semistable slope -1 sum") {
    std::mt19937 rng(50505);
    std::uniform_int_distribution<long long> pick_cover(1, 6);
    std::uniform_int_distribution<long long> pick_rank(1, 5);
    std::uniform_int_distribution<long long> pick_genus(0, 6);
    for (int trial = 0; trial < 60; ++trial) {
        long long cover = pick_cover(rng);
        long long rank = pick_rank(rng);
        long long genus = pick_genus(rng);
        long long degree = rank * (genus - 1); // forces chi = 0
        AcyclicSpec spec = spec_of(cover, rank, degree, genus);
        SplittingType st = pushforward_splitting(spec);

        CHECK(st.multiplicity(0) == 0);
        CHECK(st.multiplicity(1) == to_integer(cover * rank));
        CHECK(st.total_rank() == to_integer(cover * rank));

        HNPolygon polygon = polygon_from_splitting(st);
        REQUIRE(polygon.pieces().size() == 1);
        CHECK(polygon.pieces()[0].degree == -polygon.pieces()[0].rank);

        Integer chi = 0;
        for (long j = 0; j <= st.max_degree_index(); ++j) {
            chi += st.multiplicity(j) * Integer(1 - j);
        }
        CHECK(chi == 0);
    }
}
