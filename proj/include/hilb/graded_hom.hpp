#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hilb/ideal.hpp"

namespace hilb {

// Result of a graded Hom dimension computation.  A homomorphism is encoded
// by its values on the source generators inside the target quotient;
// degree-wise syzygy kernels up to the truncation impose the constraints.
struct HomComputation {
    long dimension = 0;
    long degree = 0;     // internal degree d of Hom(source, S/target)_d
    long truncation = 0; // syzygy degrees explored
    bool stabilized = false;
    std::vector<std::pair<long, long>> trace; // (truncation, dimension) steps
};

// dim Hom_S(I, S/I)_d.  Auto truncation starts at max reduced-GB generator
// degree + 2 and grows until two consecutive truncations agree (the
// stabilization flag records that this heuristic fired); an explicit
// truncation skips the search.
HomComputation hom_graded_dim(const Ideal& ideal, long d,
                              std::optional<long> truncation = std::nullopt);

// dim Hom_S(source, S/target)_d, same machinery.
HomComputation hom_graded_dim(const Ideal& source, const Ideal& target, long d,
                              std::optional<long> truncation = std::nullopt);

// Sum of dim Hom_T(I, T/I)_d over d > 0 for a finite-colength monomial ideal
// in 2 variables, computed by plain linear algebra (serves as the
// independent cross-check for the staircase formula).
long hom_positive_oracle(const Ideal& ideal);

// Sum over all internal degrees d (negative included) of dim Hom_T(I, T/I)_d
// for a finite-colength 2-variable monomial ideal.
long hom_total_oracle(const Ideal& ideal);

// dim Hom_S(I, S/I)_0: the Hilbert-scheme tangent space dimension at [I].
long tangent_dim_hilb(const Ideal& ideal);

// dim of the degree-e socle (0 : m) of S/I.
long socle_dim(const Ideal& ideal, long e);

} // namespace hilb
