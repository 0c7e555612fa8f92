#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "hilb/corpus.hpp"
#include "hilb/errors.hpp"
#include "hilb/hilbert.hpp"
#include "hilb/ideal.hpp"

using namespace hilb;

namespace {

Ideal span3(const std::vector<std::string>& texts) {
    return Ideal::span(PolyRing::standard(3), texts);
}

} // namespace

TEST_CASE("Hilbert function of the full ring and of the unit ideal") {
    const RingPtr r3 = PolyRing::standard(3);
    const Ideal zero = Ideal::zero(r3);
    for (long d = 0; d <= 5; ++d)
        CHECK(hilbert_function(zero, d) == graded_piece_dim(*r3, d));
    CHECK(hilbert_function(zero, -2) == 0);

    const Ideal unit = Ideal::unit(r3);
    const HilbertTable t = hilbert_table(unit, 4);
    for (long d = 0; d <= 4; ++d) CHECK(t.at(d) == 0);
    CHECK(hilbert_function(unit, 0) == 0);
}

TEST_CASE("Hilbert function values of small quotients") {
    const Ideal fat = span3({"a0^2", "a0*a1", "a1^2"});
    const std::vector<long> expect{1, 3, 3, 3, 3};
    for (long d = 0; d < static_cast<long>(expect.size()); ++d)
        CHECK(hilbert_function(fat, d) == expect[d]);

    // a non-monomial ideal: values come from the initial ideal
    const Ideal a = span3({"a0*a1 - a2^2", "a1^2"});
    const std::vector<long> expect_a{1, 3, 4, 4, 4, 4, 4};
    for (long d = 0; d < static_cast<long>(expect_a.size()); ++d)
        CHECK(hilbert_function(a, d) == expect_a[d]);
}

TEST_CASE("Hilbert values equal the rank-based count for every order") {
    const Ideal a = span3({"a0*a1 - a2^2", "a1^2"});
    const Ideal lex_in = initial_ideal(a, MonomialOrder::lex(3));
    for (long d = 0; d <= 6; ++d) {
        const long oracle = hf_by_linear_algebra(a, d);
        CHECK(hilbert_function(a, d) == oracle);
        CHECK(hilbert_function(lex_in, d) == oracle);
    }
}

TEST_CASE("tables carry the eventually-constant tail only when provable") {
    const Ideal triangle = span3({"a0*a1", "a0*a2", "a1*a2"});
    const HilbertTable t = hilbert_table(triangle, 6);
    CHECK(t.values == std::vector<long>{1, 3, 3, 3, 3, 3, 3});
    REQUIRE(t.eventual_constant.has_value());
    CHECK(*t.eventual_constant == 3);
    CHECK(t.at(100) == 3);
    CHECK(t.at(-1) == 0);

    // not saturated: the tail must stay unknown
    const Ideal collinear = span3({"a0*a1", "a0*a2", "a0^3", "a1^4"});
    const HilbertTable u = hilbert_table(collinear, 6);
    CHECK_FALSE(u.eventual_constant.has_value());
    CHECK(u.at(6) == 4);
    CHECK_THROWS_AS(u.at(7), InputError);

    // saturated but the table stops too early to see two stable values
    const HilbertTable tiny = hilbert_table(span3({"a0", "a1^4"}), 2);
    CHECK_FALSE(tiny.eventual_constant.has_value());
}

TEST_CASE("constant Hilbert values") {
    CHECK(constant_hilbert_value(span3({"a0^2", "a0*a1", "a1^2"})) == 3);
    CHECK(constant_hilbert_value(span3({"a0", "a1^4"})) == 4);
    CHECK(constant_hilbert_value(ideal_power(span3({"a0", "a1"}), 3)) == 6);
    // saturates first: the collinear scheme has length 4
    CHECK(constant_hilbert_value(span3({"a0*a1", "a0*a2", "a0^3", "a1^4"})) == 4);
    // a curve is not zero-dimensional
    CHECK_THROWS_AS(constant_hilbert_value(span3({"a0"})), InputError);
}

TEST_CASE("generic Hilbert tables") {
    const HilbertTable h42 = generic_hf(4, 2);
    CHECK(h42.values == std::vector<long>{1, 3, 4, 4});
    REQUIRE(h42.eventual_constant.has_value());
    CHECK(*h42.eventual_constant == 4);

    CHECK(generic_hf(8, 2).values == std::vector<long>{1, 3, 6, 8, 8});
    CHECK(generic_hf(6, 3).values == std::vector<long>{1, 4, 6, 6});
    CHECK(generic_hf(1, 2).values == std::vector<long>{1, 1});
    CHECK(generic_hf(3, 1).values == std::vector<long>{1, 2, 3, 3});
    CHECK_THROWS_AS(generic_hf(0, 2), InputError);
}

TEST_CASE("least degree attaining the constant") {
    CHECK(min_degree_e(generic_hf(4, 2), 4) == 2);
    CHECK(min_degree_e(generic_hf(8, 2), 8) == 3);
    CHECK(min_degree_e(generic_hf(1, 2), 1) == 0);
    CHECK_THROWS_AS(min_degree_e(generic_hf(4, 2), 5), InputError);
}

TEST_CASE("finite-colength detection") {
    const RingPtr r2 = PolyRing::standard(2);
    const Ideal a = Ideal::span(r2, {"a0", "a1^3"});
    REQUIRE(satisfies_condition_asterisk(a).has_value());
    CHECK(*satisfies_condition_asterisk(a) == 3);

    CHECK(*satisfies_condition_asterisk(span3({"a0", "a1", "a2"})) == 1);
    CHECK(*satisfies_condition_asterisk(Ideal::unit(r2)) == 0);
    CHECK_FALSE(satisfies_condition_asterisk(span3({"a0*a1"})).has_value());
    CHECK_FALSE(satisfies_condition_asterisk(span3({"a0", "a1^4"})).has_value());
}

TEST_CASE("standard monomial counts for explicit leading terms") {
    const RingPtr r3 = PolyRing::standard(3);
    const std::vector<Monomial> lts{Monomial::variable(3, 0)};
    for (long d = 0; d <= 4; ++d)
        CHECK(standard_monomial_count(r3, lts, d) == d + 1);
    CHECK(standard_monomial_count(r3, {}, 2) == 6);
    CHECK(standard_monomial_count(r3, {Monomial::one(3)}, 2) == 0);
}

TEST_CASE("the limit ideal in four variables has the published values") {
    const RingPtr r4 = PolyRing::standard(4);
    const Ideal p3 = Ideal::span(
        r4, {"a0^2*a1", "a0*a1^2", "a0*a2", "a0*a3", "a1*a2", "a1*a3", "a2^4"});
    const std::vector<long> expect{1, 4, 6, 6, 6};
    for (long d = 0; d < static_cast<long>(expect.size()); ++d)
        CHECK(hilbert_function(p3, d) == expect[d]);
}

TEST_CASE("rank-based Hilbert oracle handles edge cases") {
    const RingPtr r3 = PolyRing::standard(3);
    CHECK(hf_by_linear_algebra(Ideal::zero(r3), 3) == 10);
    CHECK(hf_by_linear_algebra(Ideal::unit(r3), 3) == 0);
    CHECK(hf_by_linear_algebra(span3({"a0"}), -1) == 0);
}
