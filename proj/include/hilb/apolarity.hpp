#pragma once

#include <string>
#include <vector>

#include "hilb/ideal.hpp"

namespace hilb {

// The operator ring S = Q[a0..an] acts on the dual ring S* = Q[x0..xn] by
// partial differentiation (a_i acts as d/dx_i).  Over Q this convention and
// the divided-power contraction differ only by nonzero factorial scalars,
// so annihilators and catalecticant ranks agree.

// Q[x0..x{count-1}] / Q[a0..a{count-1}] with positionally matched variables.
RingPtr dual_ring(int count);
RingPtr operator_ring(int count);

// d/dx_i, within the polynomial's own ring.
Polynomial derivative(const Polynomial& f, int var);

// theta (operators) applied to f (dual); result lives in f's ring.
// Requires equal variable counts.
Polynomial contract(const Polynomial& theta, const Polynomial& f);

// The degree-(e, d-e) pairing S_e x {F} -> S*_{d-e}: rank plus a basis of
// the kernel Ann(F)_e, expressed in Q[a0..an].
struct Catalecticant {
    long rank = 0;
    std::vector<Polynomial> kernel_basis;
};
Catalecticant catalecticant(const Polynomial& dual_f, long e);

// Generators of Ann(F) = { theta : theta applied to F is 0 }, obtained from
// catalecticant kernels in degrees 1..deg(F)+1 and minimalized by membership
// checks (every operator of degree > deg F annihilates F, so the sweep stops
// there).  Requires F homogeneous nonzero.
Ideal annihilator_generators(const Polynomial& dual_f);

// true iff every generator of the ideal annihilates F.
bool is_apolar(const Ideal& ideal, const Polynomial& dual_f);

// Ann(F)_1 = 0: no variable-count reduction is possible.
bool is_concise(const Polynomial& dual_f);

// Determinant of the matrix of second partials, as a dual polynomial.
Polynomial hessian_det(const Polynomial& dual_f);

// Witness that the cactus rank of F is at most r: an apolar ideal whose
// quotient has constant Hilbert value r and whose degree-deg(F) piece
// already agrees with its saturation.
struct RankCertificate {
    Ideal ideal;
    Polynomial target;
    long r = 0;
    bool apolar = false;
    bool constant_value_matches = false;
    bool degree_piece_saturated = false;
    bool valid() const { return apolar && constant_value_matches && degree_piece_saturated; }
};
RankCertificate cactus_bound_certificate(const Ideal& ideal, const Polynomial& dual_f, long r);

// The nine constructors used to certify cactus rank <= 6 for wild quartics
// in four variables: F = x0*C1 + x1*C2 + Q with C1, C2 cubics in x2, x3
// fixed per case and Q a free binary quartic in x2, x3.  The trailing
// generators of J involve A, B read off from a case-specific contraction
// theta applied to Q (theta in {a2^3, a2^2*a3, a2^2*a3 - a2*a3^2}).
enum class QuarticCase { C1A, C1B, C1C, C2A, C2A0, C2B, C3A, C3A0, C3B };

QuarticCase parse_quartic_case(const std::string& name); // "1A".."3B"
std::string quartic_case_name(QuarticCase c);
const std::vector<QuarticCase>& all_quartic_cases();

struct QuarticFamily {
    Polynomial dual_f; // the quartic F in Q[x0..x3]
    Ideal ideal;       // the apolar ideal J in Q[a0..a3]
    Rational coeff_a;  // the contraction readout theta . Q = A*x2 + B*x3
    Rational coeff_b;
};
// Q must be homogeneous of degree 4 in x2, x3 only (zero allowed).  Cases
// 2A, 3A, 3B require a != 0; cases 2A0, 3A0 are the a = 0 variants and
// require a = 0.  Case 1C and 2A0/3A0 ignore a; 1A/1B/2B/3B ignore b.
QuarticFamily quartic_case_family(QuarticCase c, const Rational& a, const Rational& b,
                                  const Polynomial& q);

// x0*x3^2 - x1*(x3+x4)^2 + x2*x4^2 in Q[x0..x4]: a concise cubic with
// vanishing Hessian determinant.
Polynomial concise_cubic();

} // namespace hilb
