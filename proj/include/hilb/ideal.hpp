#pragma once

#include <memory>
#include <vector>

#include "hilb/groebner.hpp"
#include "hilb/order.hpp"
#include "hilb/polynomial.hpp"
#include "hilb/rational.hpp"

namespace hilb {

// A homogeneous ideal, immutable after construction.  Reduced Groebner bases
// are cached per order (compute once, read many); the cache is shared by
// copies since copies denote the same ideal.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);
    static Ideal span(RingPtr ring, const std::vector<std::string>& gen_texts);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_monomial_ideal() const;

    std::shared_ptr<const GroebnerBasis> reduced_gb(const MonomialOrder& order) const;
    std::shared_ptr<const GroebnerBasis> reduced_gb() const; // default order

private:
    struct Cache;
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
// Naive expansion (all k-fold products of generators), no interreduction.
Ideal ideal_power(const Ideal& a, int k);
// Via one auxiliary elimination variable and a block (lex) order; the
// auxiliary variable never escapes.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
// (a : f), f homogeneous nonzero.
Ideal ideal_colon(const Ideal& a, const Polynomial& f);
// (a : b) = intersection of (a : g) over generators g of b.
Ideal ideal_colon(const Ideal& a, const Ideal& b);
// (a : m) for the irrelevant maximal ideal m = (all variables).
Ideal colon_irrelevant(const Ideal& a);
// a : m^infinity, computed as the colon fixpoint.
Ideal saturate_irrelevant(const Ideal& a);
bool is_saturated(const Ideal& a);
// Radical of a monomial ideal (exponent truncation); InputError otherwise.
Ideal monomial_radical(const Ideal& a);
// Vanishing ideal of distinct projective points (rows of homogeneous
// coordinates); the result is radical and saturated by construction.
Ideal points_ideal(RingPtr ring, const std::vector<std::vector<Rational>>& points);

bool ideal_member(const Polynomial& f, const Ideal& a);
bool ideal_member(const Polynomial& f, const Ideal& a, const MonomialOrder& order);
Ideal initial_ideal(const Ideal& a, const MonomialOrder& order);
// Compares reduced Groebner bases under the default order.
bool ideal_equal(const Ideal& a, const Ideal& b);

// Distinct minimal generators of the monomial ideal generated by ms.
std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> ms);

void require_same_ring(const Ideal& a, const Ideal& b);

} // namespace hilb
