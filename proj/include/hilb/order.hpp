#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hilb/polynomial.hpp"
#include "hilb/ring.hpp"

namespace hilb {

// A global monomial order on a fixed ring.
//   lex      -- lexicographic on the listed variable significance order
//   grevlex  -- graded reverse lexicographic (total degree, then reverse lex)
//   wlex     -- strictly positive weight vector dot product first, then lex
//               tiebreak on the listed variable order
// Text forms: "lex:a0,a1,a2", "grevlex:a0,a1,a2", "wlex:1,2,2/a0,a1,a2".
class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex, WeightedLex };

    static MonomialOrder lex(int nvars);
    static MonomialOrder grevlex(int nvars);
    // perm lists variable indices from most to least significant.
    static MonomialOrder lex(std::vector<int> perm);
    static MonomialOrder grevlex(std::vector<int> perm);
    // weights[i] applies to variable perm[i]; all weights must be positive.
    static MonomialOrder weighted_lex(std::vector<long> weights, std::vector<int> perm);

    static MonomialOrder parse(const PolyRing& ring, std::string_view text);
    std::string str(const PolyRing& ring) const;
    // Ring-independent cache key.
    std::string key() const;

    Kind kind() const { return kind_; }
    int var_count() const { return static_cast<int>(perm_.size()); }

    // -1, 0, 1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    MonomialOrder(Kind kind, std::vector<int> perm, std::vector<long> weights);

    Kind kind_;
    std::vector<int> perm_;
    std::vector<long> weights_;
};

// Leading term data of a nonzero polynomial under an order.
const Monomial& leading_monomial(const Polynomial& f, const MonomialOrder& order);
Rational leading_coeff(const Polynomial& f, const MonomialOrder& order);
Polynomial make_monic(const Polynomial& f, const MonomialOrder& order);

// Default order used whenever a caller does not specify one.
MonomialOrder default_order(const PolyRing& ring);

} // namespace hilb
