#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "hilb/criteria.hpp"
#include "hilb/errors.hpp"
#include "hilb/graded_hom.hpp"
#include "hilb/groebner.hpp"
#include "hilb/staircase.hpp"

using namespace hilb;

namespace {

struct LimitsGuard {
    Limits saved = global_limits();
    ~LimitsGuard() { global_limits() = saved; }
};

} // namespace

TEST_CASE("tangent space of a single point in the plane") {
    const RingPtr r3 = PolyRing::standard(3);
    const Ideal point = Ideal::span(r3, {"a0", "a1"});
    const HomComputation hom = hom_graded_dim(point, 0);
    CHECK(hom.dimension == 2);
    CHECK(hom.stabilized);
    CHECK(hom.degree == 0);
    REQUIRE_FALSE(hom.trace.empty());
    CHECK(hom.trace.back().second == hom.dimension);
    CHECK(tangent_dim_hilb(point) == 2);
}

TEST_CASE("the irrelevant ideal admits no degree-zero homomorphisms") {
    const RingPtr r3 = PolyRing::standard(3);
    CHECK(hom_graded_dim(Ideal::span(r3, {"a0", "a1", "a2"}), 0).dimension == 0);
}

TEST_CASE("explicit truncation reproduces the stabilized dimension") {
    const RingPtr r2 = PolyRing::standard(2);
    const Ideal ideal = Ideal::span(r2, {"a0", "a1^2"});
    const HomComputation autod = hom_graded_dim(ideal, 0);
    CHECK(autod.stabilized);

    const HomComputation fixed = hom_graded_dim(ideal, 0, autod.truncation + 2);
    CHECK_FALSE(fixed.stabilized);
    CHECK(fixed.truncation == autod.truncation + 2);
    CHECK(fixed.dimension == autod.dimension);
}

TEST_CASE("positive-degree and total Hom oracles on line subschemes") {
    const RingPtr r2 = PolyRing::standard(2);
    const Ideal ideal = Ideal::span(r2, {"a0", "a1^4"});
    CHECK(hom_positive_oracle(ideal) == 2);
    CHECK(hom_total_oracle(ideal) == 8);

    const Ideal point = Ideal::span(r2, {"a0", "a1"});
    CHECK(hom_positive_oracle(point) == 0);
    CHECK(hom_total_oracle(point) == 2);
}

TEST_CASE("oracles reject rings and ideals outside their contract") {
    const RingPtr r2 = PolyRing::standard(2);
    const RingPtr r3 = PolyRing::standard(3);
    CHECK_THROWS_AS(hom_positive_oracle(Ideal::span(r3, {"a0", "a1", "a2"})), InputError);
    CHECK_THROWS_AS(hom_positive_oracle(Ideal::span(r2, {"a0"})), InputError);
    CHECK_THROWS_AS(hom_total_oracle(Ideal::span(r2, {"a0"})), InputError);
}

TEST_CASE("graded pieces of Hom agree with the staircase formula degree by degree") {
    const RingPtr r2 = PolyRing::standard(2);
    // heights (3, 1): ideal (a0^2, a0*a1, a1^3)
    const Ideal corner = Ideal::span(r2, {"a0^2", "a0*a1", "a1^3"});
    long positive = 0;
    for (long d = 1; d <= 4; ++d) positive += hom_graded_dim(corner, d).dimension;
    CHECK(positive == hom_positive_oracle(corner));

    long total = 0;
    for (long d = -3; d <= 4; ++d) total += hom_graded_dim(corner, d).dimension;
    CHECK(total == hom_total_oracle(corner));
    CHECK(total == 2 * 4);

    // heights (4): ideal (a0, a1^4) has a nonzero positive part
    const Ideal segment = Ideal::span(r2, {"a0", "a1^4"});
    long seg_positive = 0;
    for (long d = 1; d <= 4; ++d) seg_positive += hom_graded_dim(segment, d).dimension;
    CHECK(seg_positive == 2);
    CHECK(seg_positive == hom_positive_oracle(segment));
}

TEST_CASE("Hom between different modules: the degeneration pairing") {
    const PlaneFamily fam = family_jik(5, 4, 2);
    const HomComputation hom = hom_graded_dim(fam.j, fam.i, 0);
    CHECK(hom.dimension == 2 * fam.r);
    CHECK(hom.stabilized);
}

TEST_CASE("tangent dimension of the family limit stays within the bound") {
    const PlaneFamily fam = family_jik(5, 4, 2);
    const long dim = tangent_dim_hilb(fam.i);
    CHECK(dim <= 2 * fam.r);
    CHECK(dim >= 0);
}

TEST_CASE("socle dimensions") {
    const RingPtr r2 = PolyRing::standard(2);
    const RingPtr r3 = PolyRing::standard(3);
    CHECK(socle_dim(Ideal::span(r3, {"a0", "a1", "a2"}), 0) == 1);
    CHECK(socle_dim(Ideal::span(r2, {"a0", "a1^2"}), 1) == 1);
    CHECK(socle_dim(Ideal::span(r2, {"a0", "a1^2"}), 0) == 0);
    CHECK(socle_dim(Ideal::span(r2, {"a0^2", "a0*a1", "a1^2"}), 1) == 2);
    CHECK(socle_dim(Ideal::span(r2, {"a0^3", "a1^2"}), 3) == 1);
    CHECK(socle_dim(Ideal::span(r2, {"a0^3", "a1^2"}), 2) == 0);
    CHECK(socle_dim(Ideal::span(r2, {"a0^3", "a1^2"}), 1) == 0);
}

TEST_CASE("the truncation cap raises LimitError") {
    LimitsGuard guard;
    // a zero-step search can never observe two agreeing truncations
    global_limits().max_truncation = 0;
    const RingPtr r2 = PolyRing::standard(2);
    const Ideal ideal = Ideal::span(r2, {"a0", "a1^4"});
    CHECK_THROWS_AS(hom_graded_dim(ideal, 0), LimitError);
}

TEST_CASE("oracles cover every staircase of small colength") {
    const RingPtr r2 = PolyRing::standard(2);
    for (int r = 1; r <= 5; ++r) {
        for (const auto& diag : enumerate_staircases(r)) {
            const Ideal ideal = diag.to_ideal(r2);
            CHECK(diag.hom_positive() == hom_positive_oracle(ideal));
            CHECK(hom_total_oracle(ideal) == 2 * r);
        }
    }
}
