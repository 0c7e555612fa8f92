#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "hilb/errors.hpp"
#include "hilb/polynomial.hpp"
#include "hilb/rational.hpp"
#include "hilb/ring.hpp"

using namespace hilb;

TEST_CASE("rational construction and canonical form") {
    CHECK(Rational().is_zero());
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(0, 5).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("rational parse/str round-trips") {
    for (const char* text : {"0", "1", "-1", "3/2", "-7/3", "1000000000000/7"}) {
        const Rational q = Rational::parse(text);
        CHECK(q.str() == text);
        CHECK(Rational::parse(q.str()) == q);
    }
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("x"), InputError);
    CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
}

TEST_CASE("rational arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((-a).str() == "-1/3");
    CHECK(a.inverse() == Rational(3));
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK(Rational(-2).sign() == -1);
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK_THROWS_AS(a / Rational(0), InputError);
    CHECK_THROWS_AS(Rational(0).inverse(), InputError);

    // a value that overflows doubles long before rationals notice
    Rational big(1);
    for (int i = 0; i < 40; ++i) big *= Rational(1000000);
    CHECK((big * big.inverse()).is_one());
}

TEST_CASE("ring identity is the variable-name list") {
    const RingPtr r1 = PolyRing::standard(3);
    const RingPtr r2 = std::make_shared<const PolyRing>(
        std::vector<std::string>{"a0", "a1", "a2"});
    CHECK(*r1 == *r2);
    CHECK(*r1 != *PolyRing::standard(3, "x"));
    CHECK(r1->var_count() == 3);
    CHECK(r1->name(2) == "a2");
    CHECK(r1->index_of("a1") == 1);
    CHECK(r1->index_of("b9") == -1);
}

TEST_CASE("graded piece dimensions and binomials") {
    const RingPtr r3 = PolyRing::standard(3);
    CHECK(graded_piece_dim(*r3, 0) == 1);
    CHECK(graded_piece_dim(*r3, 1) == 3);
    CHECK(graded_piece_dim(*r3, 2) == 6);
    CHECK(graded_piece_dim(*r3, 5) == 21);
    CHECK(graded_piece_dim(*r3, -1) == 0);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("monomial operations") {
    const Monomial one = Monomial::one(3);
    const Monomial a0 = Monomial::variable(3, 0);
    const Monomial a1sq = Monomial::variable(3, 1, 2);
    CHECK(one.degree() == 0);
    CHECK(one.is_one());
    CHECK(a1sq.degree() == 2);
    CHECK((a0 * a1sq).degree() == 3);
    CHECK(a0.divides(a0 * a1sq));
    CHECK_FALSE(a1sq.divides(a0));
    CHECK((a0 * a1sq).divided_by(a0) == a1sq);
    CHECK(Monomial::lcm(a0, a1sq) == a0 * a1sq);
    CHECK(Monomial::gcd(a0 * a1sq, a1sq) == a1sq);
    CHECK(a0.coprime_with(a1sq));
    CHECK_FALSE((a0 * a1sq).coprime_with(a1sq));
}

TEST_CASE("monomials_of_degree is complete and canonically ordered") {
    const auto quadrics = monomials_of_degree(3, 2);
    REQUIRE(quadrics.size() == 6);
    CHECK(quadrics.front() == Monomial(std::vector<int>{2, 0, 0}));
    CHECK(quadrics.back() == Monomial(std::vector<int>{0, 0, 2}));
    for (size_t i = 0; i + 1 < quadrics.size(); ++i)
        CHECK(Monomial::lex_cmp(quadrics[i], quadrics[i + 1]) > 0);
    CHECK(monomials_of_degree(2, 0).size() == 1);
    CHECK(monomials_of_degree(4, 3).size() == 20);
}

TEST_CASE("polynomial parse and print round-trip bit-exactly") {
    const RingPtr r3 = PolyRing::standard(3);
    for (const char* text : {"3/2*a0^2*a1 - a2^3", "a0", "-a1^4", "1", "a0*a1*a2",
                             "2*a0^2 - 3*a0*a1 + a1^2", "a0*a1^4 - 1/7*a2^5"}) {
        const Polynomial f = Polynomial::parse(r3, text);
        CHECK(f.str() == text);
        CHECK(Polynomial::parse(r3, f.str()) == f);
    }
    CHECK(Polynomial::parse(r3, "0").is_zero());
    CHECK(Polynomial::parse(r3, "a0 - a0").is_zero());
    CHECK(Polynomial::parse(r3, "a0 + a0").str() == "2*a0");
    CHECK(Polynomial::parse(r3, "a1*a0").str() == "a0*a1");
}

TEST_CASE("polynomial parse rejects malformed input") {
    const RingPtr r3 = PolyRing::standard(3);
    CHECK_THROWS_AS(Polynomial::parse(r3, "b0"), InputError);
    CHECK_THROWS_AS(Polynomial::parse(r3, "a0 +"), InputError);
    CHECK_THROWS_AS(Polynomial::parse(r3, "a0^"), InputError);
    CHECK_THROWS_AS(Polynomial::parse(r3, "3/0*a0"), InputError);
    CHECK_THROWS_AS(Polynomial::parse(r3, ""), InputError);
    CHECK_THROWS_AS(Polynomial::parse(r3, "a0**a1"), InputError);
}

TEST_CASE("polynomial queries") {
    const RingPtr r3 = PolyRing::standard(3);
    const Polynomial f = Polynomial::parse(r3, "3/2*a0^2*a1 - a2^3 + a0");
    CHECK(f.degree() == 3);
    CHECK_FALSE(f.is_homogeneous());
    CHECK(f.term_count() == 3);
    CHECK(f.coeff(Monomial(std::vector<int>{2, 1, 0})) == Rational(3, 2));
    CHECK(f.coeff(Monomial(std::vector<int>{0, 3, 0})).is_zero());
    CHECK(f.homogeneous_component(3).term_count() == 2);
    CHECK(f.homogeneous_component(1) == Polynomial::parse(r3, "a0"));
    CHECK(f.homogeneous_component(2).is_zero());
    CHECK(Polynomial(r3).degree() == -1);
    CHECK(Polynomial::parse(r3, "a0^2 - a1*a2").is_homogeneous());
}

TEST_CASE("polynomial arithmetic") {
    const RingPtr r2 = PolyRing::standard(2);
    const Polynomial f = Polynomial::parse(r2, "a0 + a1");
    const Polynomial g = Polynomial::parse(r2, "a0 - a1");
    CHECK(f * g == Polynomial::parse(r2, "a0^2 - a1^2"));
    CHECK(f + g == Polynomial::parse(r2, "2*a0"));
    CHECK(f - f == Polynomial(r2));
    CHECK(f.scaled(Rational(1, 2)) == Polynomial::parse(r2, "1/2*a0 + 1/2*a1"));
    CHECK(f.times_term(Monomial::variable(2, 1), Rational(3)) ==
          Polynomial::parse(r2, "3*a0*a1 + 3*a1^2"));
    Polynomial acc(r2);
    acc.add_term(Monomial::variable(2, 0), Rational(1));
    acc.add_term(Monomial::variable(2, 0), Rational(-1));
    CHECK(acc.is_zero());
}

TEST_CASE("linear substitution") {
    const RingPtr r2 = PolyRing::standard(2);
    const Polynomial f = Polynomial::parse(r2, "a0^2");
    // a0 -> a0 + a1, a1 -> a1
    const std::vector<std::vector<Rational>> shear{{Rational(1), Rational(1)},
                                                   {Rational(0), Rational(1)}};
    CHECK(apply_linear_substitution(f, shear) ==
          Polynomial::parse(r2, "a0^2 + 2*a0*a1 + a1^2"));

    const std::vector<std::vector<Rational>> singular{{Rational(1), Rational(1)},
                                                      {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(apply_linear_substitution(f, singular, true), InputError);
    // without the check the substitution is applied as-is
    CHECK(apply_linear_substitution(f, singular) ==
          Polynomial::parse(r2, "a0^2 + 2*a0*a1 + a1^2"));

    const std::vector<std::vector<Rational>> wrong_shape{{Rational(1)}};
    CHECK_THROWS_AS(apply_linear_substitution(f, wrong_shape), InputError);
}

TEST_CASE("cross-ring operations are rejected") {
    const RingPtr r2 = PolyRing::standard(2);
    const RingPtr x2 = PolyRing::standard(2, "x");
    const Polynomial f = Polynomial::parse(r2, "a0");
    const Polynomial g = Polynomial::parse(x2, "x0");
    CHECK_THROWS_AS(require_same_ring(f, g), InputError);
}
