#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilb/rational.hpp"
#include "hilb/ring.hpp"

namespace hilb {

// Sparse multivariate polynomial over Q.  Invariants: no stored zero
// coefficients; all monomials have the ring's variable count; terms are kept
// in canonical (plain lex, descending) order, which fixes serialization.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLexDesc>;

    Polynomial() = default; // zero polynomial of no ring; only for containers
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial term(RingPtr ring, const Monomial& m, const Rational& c);
    static Polynomial variable(RingPtr ring, int i, int power = 1);

    // Grammar: terms joined by +/-; term = coeff '*' mono | coeff | mono;
    // coeff = integer or p/q; mono = var['^'exp] factors joined by '*'.
    // Example: "3/2*a0^2*a1 - a2^3".  parse(ring, f.str()) == f bit-exactly.
    static Polynomial parse(RingPtr ring, std::string_view text);
    std::string str() const;

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Rational coeff(const Monomial& m) const;

    Polynomial homogeneous_component(int d) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Monomial& m, const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    void add_term(const Monomial& m, const Rational& c); // merges, drops zeros

private:
    RingPtr ring_;
    TermMap terms_;
};

void require_same_ring(const Polynomial& a, const Polynomial& b);
void require_ring(const Polynomial& f, const PolyRing& ring, const char* what);

// Substitute variable i by the linear form sum_j M[i][j] * var_j.  M is
// (n+1)x(n+1).  With check_invertible, throws InputError when det M == 0.
Polynomial apply_linear_substitution(const Polynomial& f,
                                     const std::vector<std::vector<Rational>>& M,
                                     bool check_invertible = false);

} // namespace hilb
