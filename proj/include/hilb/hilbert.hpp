#pragma once

#include <optional>
#include <vector>

#include "hilb/ideal.hpp"

namespace hilb {

// Hilbert function values H(0..horizon) of a graded quotient, with an
// optional eventually-constant tail.
struct HilbertTable {
    std::vector<long> values;
    std::optional<long> eventual_constant;

    long horizon() const { return static_cast<long>(values.size()) - 1; }
    // d < 0 -> 0; d <= horizon -> stored; beyond: tail value if known,
    // otherwise InputError.
    long at(long d) const;

    friend bool operator==(const HilbertTable&, const HilbertTable&) = default;
};

// H_{S/I}(d) = number of degree-d standard monomials of in(I)
// (Macaulay; order choice does not matter for the value).
long hilbert_function(const Ideal& ideal, long d);

// Values for d = 0..max_degree.  The eventual_constant is set when the ideal
// is saturated and two consecutive values beyond the largest reduced-GB
// generator degree agree (at which point the function is provably constant).
HilbertTable hilbert_table(const Ideal& ideal, long max_degree);

// The constant value of the Hilbert polynomial of S/I.  Requires the
// projective scheme to be zero-dimensional (checked on in(I)); saturates
// first when I is not saturated.
long constant_hilbert_value(const Ideal& ideal);

// h_{r,n}(a) = min(dim S_a, r) for n+1 variables; horizon just past the
// degree where the value reaches r.
HilbertTable generic_hf(long r, long n);

// least a with h(a) = r; InputError when never attained.
long min_degree_e(const HilbertTable& h, long r);

// Least d with S_d contained in I, when the quotient has finite length
// (iff in(I) contains a pure power of every variable); nullopt otherwise.
std::optional<long> satisfies_condition_asterisk(const Ideal& ideal);

// Degree-d standard monomial count for a set of leading monomials.
long standard_monomial_count(const RingPtr& ring, const std::vector<Monomial>& lts, long d);

} // namespace hilb
