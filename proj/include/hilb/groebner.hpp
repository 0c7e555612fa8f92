#pragma once

#include <optional>
#include <vector>

#include "hilb/order.hpp"
#include "hilb/polynomial.hpp"

namespace hilb {

// Caps that turn runaway computations into LimitError instead of hangs.
struct Limits {
    int max_basis = 4096;     // Groebner basis element count
    int max_degree = 64;      // degree of any basis element / S-pair
    int max_truncation = 32;  // Hom truncation ceiling
};

Limits& global_limits();

struct GroebnerBasis {
    std::vector<Polynomial> elements; // monic; reduced form is canonical
    MonomialOrder order;
    bool reduced = false;

    std::vector<Monomial> leading_monomials() const;
};

// Remainder of f on division by the listed divisors: repeatedly cancels the
// largest (w.r.t. order) reducible term, trying divisors in list order.  The
// result has no term divisible by any divisor's leading monomial.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& order);

// Buchberger with the coprime-leading-monomial skip criterion and
// degree-ascending pair selection; ties broken by input position.  Input
// generators must be homogeneous unless require_homogeneous is false (the
// elimination internals need that).  With up_to_degree set, S-pairs above
// that degree are discarded: for homogeneous input the result generates the
// same ideal and its leading monomials agree with the full basis in all
// degrees <= up_to_degree (degree-truncated basis).
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const Limits& limits = global_limits(),
                         std::optional<int> up_to_degree = std::nullopt,
                         bool require_homogeneous = true);

// Full Buchberger criterion: every S-polynomial reduces to zero (no skips).
bool is_groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order);

} // namespace hilb
