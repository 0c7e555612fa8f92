#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilb/hilbert.hpp"
#include "hilb/ideal.hpp"

namespace hilb {

// The membership criteria are one-sided: a failed necessary check rules the
// ideal out, a passed sufficient check rules it in, and anything else is an
// honest Unknown.  Every check returns a report with exact numbers so the
// conclusion can be audited.

enum class CheckOutcome { Pass, Fail, NotApplicable };
std::string check_outcome_name(CheckOutcome o);

struct CheckReport {
    std::string criterion; // "power-necessary" | "line-dagger" | "star-sufficient"
    std::string rule;      // plain statement of the inequality/containment tested
    std::vector<std::pair<std::string, long>> parameters;
    std::vector<std::string> observed; // probe values and witnesses, exact
    CheckOutcome outcome = CheckOutcome::NotApplicable;
    bool passed() const { return outcome == CheckOutcome::Pass; }
    bool failed() const { return outcome == CheckOutcome::Fail; }
};

// Necessary check: with e the least degree where h attains r, every power
// I^k (k <= k_max) must satisfy H_{S/I^k}(d) >= r * dim S_{k-1} for
// d = k(e+1) .. k(e+1)+window.  The ideal's Hilbert function is verified
// against h up to the table horizon first (mismatch is an input error).
CheckReport power_necessary_check(const Ideal& ideal, const HilbertTable& h, long r,
                                  long k_max = 3, long window = 2);

// Necessary check for ideals whose saturation cuts out a subscheme of a
// line: when H_{S/I} is generic for r points, r >= 4, and the saturation
// has H(1) = 2, every product of two saturation generators times every
// degree-(r-4) monomial must already lie in I.  Unmet preconditions yield
// NotApplicable, never Fail.
CheckReport line_dagger_check(const Ideal& ideal, long r);

// f differs from the generic table for r points in the plane in at most
// one degree; the strict variant also demands dim S_{e-1} < f(e) < r <
// dim S_e at the differing degree e.
bool star_predicate(const HilbertTable& f, long r);
bool star2_predicate(const HilbertTable& f, long r);

// Sufficient check, plane only: pass iff the ideal is saturated or the
// Hilbert table of its saturation satisfies the one-degree-drop predicate.
CheckReport sufficient_star_check(const Ideal& ideal, long r);

enum class SlipStatus { InSlip, NotInSlip, Unknown };
std::string slip_status_name(SlipStatus s);

struct SlipVerdict {
    SlipStatus status = SlipStatus::Unknown;
    std::vector<CheckReport> evidence;
};

struct SlipOptions {
    long k_max = 3;
    long window = 2;
    // expected Hilbert table; defaults to the generic table for r points
    std::optional<HilbertTable> table;
};

// Composition: verify H_{S/I} = h, run the sufficient check (3-variable
// rings with the generic table only), then the necessary checks; the first
// conclusive outcome decides, with the full evidence trail attached.
SlipVerdict slip_verdict(const Ideal& ideal, long r, const SlipOptions& options = {});

// The one-parameter degeneration witnesses in the plane: J is saturated
// with a single Hilbert-value drop d at degree e, I is its flat limit with
// the generic Hilbert function, K is a saturated ideal whose initial ideal
// under lex a0 > a2 > a1 is I.  Requires dim S_{e-1} < d < r < dim S_e.
struct PlaneFamily {
    Ideal j, i, k;
    long r, d, e;
};
PlaneFamily family_jik(long r, long d, long e);
// all parameter triples passing the chain test with the given bound on r
std::vector<PlaneFamily> all_plane_families(long max_r);

// Three fixed plane ideals with generic Hilbert function for 8 points used
// to probe interior singularities: i1 deforms to its initial ideal i2 (a
// smooth-point witness), i3 has excess tangent dimension 17.
struct InteriorExamples {
    Ideal i1, i2, i3;
};
InteriorExamples singular_interior_examples();

} // namespace hilb
