#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hilb/ideal.hpp"

namespace hilb {

// Staircase data of a finite-colength monomial ideal in two variables
// (exponent pairs (s, t) meaning var0^s * var1^t):
//   boxes       -- monomials outside the ideal
//   generators  -- minimal monomial generators, first coordinate descending
//   relations   -- componentwise maxima of consecutive generators
// Always: #relations == #generators - 1.
class StaircaseDiagram {
public:
    static StaircaseDiagram from_heights(const std::vector<int>& heights);
    static StaircaseDiagram from_ideal(const Ideal& ideal);

    const std::vector<std::pair<int, int>>& boxes() const { return boxes_; }
    const std::vector<std::pair<int, int>>& generators() const { return gens_; }
    const std::vector<std::pair<int, int>>& relations() const { return rels_; }
    long colength() const { return static_cast<long>(boxes_.size()); }

    // degree counts: boxes / generators / relations of total degree a
    long lambda(long a) const;
    long mu(long a) const;
    long rho(long a) const;
    long max_box_degree() const;

    // sum over generators u of sum_{a > |u|} lambda(a), minus the same sum
    // over relations: the positive-degree tangent contribution.
    long hom_positive() const;
    // 2 * colength - hom_positive()
    long extended_tangent_dim() const;

    // Monomial ideal in the given 2-variable ring.
    Ideal to_ideal(const RingPtr& ring) const;

    // Rows top to bottom; '#' boxes, 'o' generators, '*' relations.
    std::string render() const;

private:
    std::vector<std::pair<int, int>> boxes_, gens_, rels_;
};

// All staircase diagrams of the given colength (integer partitions of r).
std::vector<StaircaseDiagram> enumerate_staircases(int r);

} // namespace hilb
