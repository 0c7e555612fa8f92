#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "hilb/apolarity.hpp"
#include "hilb/errors.hpp"
#include "hilb/hilbert.hpp"
#include "hilb/ideal.hpp"

using namespace hilb;

namespace {

Polynomial random_form(std::mt19937& rng, const RingPtr& ring, int degree) {
    const auto monomials = monomials_of_degree(ring->var_count(), degree);
    for (;;) {
        Polynomial f = Polynomial::zero(ring);
        for (const auto& m : monomials) {
            const long c = static_cast<long>(rng() % 5) - 2;
            if (c != 0) f.add_term(m, Rational(c));
        }
        if (!f.is_zero()) return f;
    }
}

} // namespace

TEST_CASE("derivatives and contraction act by partial differentiation") {
    const RingPtr dual = dual_ring(3);
    const Polynomial f = Polynomial::parse(dual, "x0^2*x1 + x2^3");
    CHECK(derivative(f, 0).str() == "2*x0*x1");
    CHECK(derivative(f, 1).str() == "x0^2");
    CHECK(derivative(f, 2).str() == "3*x2^2");
    CHECK(derivative(Polynomial::constant(dual, Rational(5)), 1).is_zero());

    const RingPtr ops = operator_ring(3);
    CHECK(contract(Polynomial::parse(ops, "a1*a2"), Polynomial::parse(dual, "x1^2*x2")).str() ==
          "2*x1");
    CHECK(contract(Polynomial::parse(ops, "a2^3"), Polynomial::parse(dual, "x2^4")).str() ==
          "24*x2");
    CHECK(contract(Polynomial::parse(ops, "a0^2"), Polynomial::parse(dual, "x1^2")).is_zero());
    // mixed operators distribute over sums
    CHECK(contract(Polynomial::parse(ops, "a0 + a1"), Polynomial::parse(dual, "x0*x1")).str() ==
          "x0 + x1");
}

TEST_CASE("contraction requires matching variable counts") {
    const Polynomial theta = Polynomial::parse(operator_ring(3), "a0");
    const Polynomial f = Polynomial::parse(dual_ring(2), "x0^2");
    CHECK_THROWS_AS(contract(theta, f), InputError);
}

TEST_CASE("catalecticant ranks and kernels of binary forms") {
    const RingPtr dual = dual_ring(2);
    const Polynomial two_cubes = Polynomial::parse(dual, "x0^3 + x1^3");
    const Catalecticant full = catalecticant(two_cubes, 1);
    CHECK(full.rank == 2);
    CHECK(full.kernel_basis.empty());

    const Polynomial one_cube = Polynomial::parse(dual, "x0^3");
    const Catalecticant degenerate = catalecticant(one_cube, 1);
    CHECK(degenerate.rank == 1);
    REQUIRE(degenerate.kernel_basis.size() == 1);
    CHECK(degenerate.kernel_basis[0].str() == "a1");

    CHECK(catalecticant(two_cubes, 0).rank == 1);
    CHECK(catalecticant(two_cubes, 3).rank == 1);
}

TEST_CASE("catalecticant rejects out-of-range degrees and bad forms") {
    const RingPtr dual = dual_ring(2);
    const Polynomial f = Polynomial::parse(dual, "x0^3 + x1^3");
    CHECK_THROWS_AS(catalecticant(f, -1), InputError);
    CHECK_THROWS_AS(catalecticant(f, 4), InputError);
    CHECK_THROWS_AS(catalecticant(Polynomial::zero(dual), 0), InputError);
    CHECK_THROWS_AS(catalecticant(Polynomial::parse(dual, "x0 + x0^2"), 1), InputError);
}

TEST_CASE("catalecticant ranks are symmetric about the middle degree") {
    std::mt19937 rng(321u);
    const RingPtr dual = dual_ring(3);
    for (int trial = 0; trial < 6; ++trial) {
        const int d = 3 + static_cast<int>(rng() % 2);
        const Polynomial f = random_form(rng, dual, d);
        for (long e = 0; e <= d; ++e) {
            CHECK(catalecticant(f, e).rank == catalecticant(f, d - e).rank);
        }
    }
}

TEST_CASE("annihilators of monomials") {
    const RingPtr ops = operator_ring(3);
    const Ideal cube_ann = annihilator_generators(Polynomial::parse(dual_ring(3), "x0^3"));
    CHECK(ideal_equal(cube_ann, Ideal::span(ops, {"a1", "a2", "a0^4"})));

    const Ideal product_ann = annihilator_generators(Polynomial::parse(dual_ring(3), "x0*x1"));
    CHECK(ideal_equal(product_ann, Ideal::span(ops, {"a2", "a0^2", "a1^2"})));
}

TEST_CASE("the quotient by an annihilator has catalecticant ranks as its Hilbert function") {
    std::mt19937 rng(654u);
    const RingPtr dual = dual_ring(3);
    for (int trial = 0; trial < 5; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 3);
        const Polynomial f = random_form(rng, dual, d);
        const Ideal ann = annihilator_generators(f);
        CHECK(is_apolar(ann, f));
        for (long e = 0; e <= d; ++e) {
            CHECK(hilbert_function(ann, e) == catalecticant(f, e).rank);
        }
        CHECK(hilbert_function(ann, d + 1) == 0);
    }
}

TEST_CASE("apolarity membership test") {
    const Polynomial f = Polynomial::parse(dual_ring(2), "x0^3 + x1^3");
    const RingPtr ops = operator_ring(2);
    CHECK(is_apolar(Ideal::span(ops, {"a0*a1"}), f));
    CHECK_FALSE(is_apolar(Ideal::span(ops, {"a0"}), f));
    CHECK(is_apolar(Ideal::zero(ops), f));
}

TEST_CASE("conciseness detects degenerate forms") {
    CHECK(is_concise(Polynomial::parse(dual_ring(2), "x0^3 + x1^3")));
    CHECK_FALSE(is_concise(Polynomial::parse(dual_ring(2), "x0^3")));
    CHECK_FALSE(is_concise(Polynomial::parse(dual_ring(3), "x0*x1")));
    CHECK(is_concise(concise_cubic()));
}

TEST_CASE("Hessian determinants") {
    CHECK(hessian_det(Polynomial::parse(dual_ring(3), "x0^3 + x1^3 + x2^3")).str() ==
          "216*x0*x1*x2");
    CHECK(hessian_det(Polynomial::parse(dual_ring(2), "x0*x1")).str() == "-1");
    CHECK(hessian_det(concise_cubic()).is_zero());
}

TEST_CASE("the concise cubic expands as stated") {
    CHECK(concise_cubic().str() == "x0*x3^2 - x1*x3^2 - 2*x1*x3*x4 - x1*x4^2 + x2*x4^2");
    CHECK(concise_cubic().degree() == 3);
}

TEST_CASE("quartic case names round trip") {
    for (const QuarticCase c : all_quartic_cases()) {
        CHECK(parse_quartic_case(quartic_case_name(c)) == c);
    }
    CHECK(all_quartic_cases().size() == 9);
    CHECK(quartic_case_name(QuarticCase::C2A0) == "2A0");
    CHECK_THROWS_AS(parse_quartic_case("5X"), InputError);
}

TEST_CASE("quartic family constructors produce frozen generator sets") {
    const RingPtr ops = operator_ring(4);
    const RingPtr dual = dual_ring(4);
    const Rational zero;
    const Polynomial no_q = Polynomial::zero(dual);

    SUBCASE("case 1C with a pure fourth power") {
        const QuarticFamily fam =
            quartic_case_family(QuarticCase::C1C, zero, zero, Polynomial::parse(dual, "x2^4"));
        CHECK(fam.coeff_a == Rational(24));
        CHECK(fam.coeff_b == Rational(0));
        CHECK(ideal_member(Polynomial::parse(ops, "a2^3 - 12*a0*a3^2"), fam.ideal));
        CHECK(is_apolar(fam.ideal, fam.dual_f));
    }

    SUBCASE("case 2B with a = 1 and no quartic tail") {
        const QuarticFamily fam = quartic_case_family(QuarticCase::C2B, Rational(1), zero, no_q);
        const Ideal expected = Ideal::span(
            ops, {"a0^2", "a0*a1", "a1^2", "a1*a2", "a0*a2*a3 - 1/3*a1*a3^2", "a2^2*a3"});
        CHECK(ideal_equal(fam.ideal, expected));
        CHECK(is_apolar(fam.ideal, fam.dual_f));
    }

    SUBCASE("case 1A with a = 0 and no quartic tail") {
        const QuarticFamily fam = quartic_case_family(QuarticCase::C1A, zero, zero, no_q);
        const Ideal expected = Ideal::span(
            ops, {"a0^2", "a0*a1", "a1^2", "a0*a2 - a1*a3", "a1*a2^2", "a2^3"});
        CHECK(ideal_equal(fam.ideal, expected));
        CHECK(is_apolar(fam.ideal, fam.dual_f));
    }
}

TEST_CASE("quartic family preconditions") {
    const RingPtr dual = dual_ring(4);
    const Rational zero;
    const Polynomial no_q = Polynomial::zero(dual);
    CHECK_THROWS_AS(quartic_case_family(QuarticCase::C2A, zero, zero, no_q), InputError);
    CHECK_THROWS_AS(quartic_case_family(QuarticCase::C3B, zero, zero, no_q), InputError);
    CHECK_THROWS_AS(quartic_case_family(QuarticCase::C2A0, Rational(1), zero, no_q), InputError);
    CHECK_THROWS_AS(
        quartic_case_family(QuarticCase::C1C, zero, zero, Polynomial::parse(dual, "x2^3")),
        InputError);
    CHECK_THROWS_AS(
        quartic_case_family(QuarticCase::C1C, zero, zero, Polynomial::parse(dual, "x0^4")),
        InputError);
}

TEST_CASE("every quartic case yields a valid rank-six certificate") {
    const RingPtr dual = dual_ring(4);
    const Polynomial q = Polynomial::parse(dual, "x2^4 - 2*x2^2*x3^2 + 3*x3^4");
    for (const QuarticCase c : all_quartic_cases()) {
        Rational a;
        switch (c) {
        case QuarticCase::C2A:
        case QuarticCase::C3A:
        case QuarticCase::C3B:
            a = Rational(2);
            break;
        default:
            break;
        }
        const QuarticFamily fam = quartic_case_family(c, a, Rational(-1), q);
        const RankCertificate cert = cactus_bound_certificate(fam.ideal, fam.dual_f, 6);
        CHECK(cert.apolar);
        CHECK(cert.constant_value_matches);
        CHECK(cert.degree_piece_saturated);
        CHECK(cert.valid());
    }
}

TEST_CASE("certificates fail for the wrong rank or a non-apolar ideal") {
    const Polynomial f = Polynomial::parse(dual_ring(2), "x0^3 + x1^3");
    const RingPtr ops = operator_ring(2);

    const RankCertificate good = cactus_bound_certificate(Ideal::span(ops, {"a0*a1"}), f, 2);
    CHECK(good.valid());
    CHECK(good.r == 2);

    const RankCertificate wrong_r = cactus_bound_certificate(Ideal::span(ops, {"a0*a1"}), f, 3);
    CHECK(wrong_r.apolar);
    CHECK_FALSE(wrong_r.constant_value_matches);
    CHECK_FALSE(wrong_r.valid());

    const RankCertificate not_apolar = cactus_bound_certificate(Ideal::span(ops, {"a0"}), f, 2);
    CHECK_FALSE(not_apolar.apolar);
    CHECK_FALSE(not_apolar.valid());
}
