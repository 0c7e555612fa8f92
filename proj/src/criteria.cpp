#include "hilb/criteria.hpp"

#include <algorithm>

#include "hilb/errors.hpp"
#include "hilb/groebner.hpp"

namespace hilb {

std::string check_outcome_name(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::Pass: return "pass";
        case CheckOutcome::Fail: return "fail";
        case CheckOutcome::NotApplicable: return "not-applicable";
    }
    throw InputError("unknown outcome");
}

std::string slip_status_name(SlipStatus s) {
    switch (s) {
        case SlipStatus::InSlip: return "InSlip";
        case SlipStatus::NotInSlip: return "NotInSlip";
        case SlipStatus::Unknown: return "Unknown";
    }
    throw InputError("unknown status");
}

namespace {

void verify_table_matches(const Ideal& ideal, const HilbertTable& h) {
    for (long d = 0; d <= h.horizon(); ++d)
        if (hilbert_function(ideal, d) != h.at(d))
            throw InputError("Hilbert function of the ideal disagrees with the expected table "
                             "at degree " +
                             std::to_string(d));
}

bool tables_agree(const HilbertTable& a, const HilbertTable& b) {
    if (a.eventual_constant != b.eventual_constant) return false;
    const long top = std::max(a.horizon(), b.horizon());
    for (long d = 0; d <= top; ++d) {
        if (!a.eventual_constant && d > a.horizon()) return false;
        if (!b.eventual_constant && d > b.horizon()) return false;
        if (a.at(d) != b.at(d)) return false;
    }
    return true;
}

} // namespace

CheckReport power_necessary_check(const Ideal& ideal, const HilbertTable& h, long r,
                                  long k_max, long window) {
    if (r <= 0 || k_max <= 0 || window < 0) throw InputError("bad power-check parameters");
    verify_table_matches(ideal, h);
    const long e = min_degree_e(h, r);

    CheckReport report;
    report.criterion = "power-necessary";
    report.rule = "H(S/I^k)(d) >= r * dim S_{k-1} for k <= k_max, d = k(e+1) .. k(e+1)+window";
    report.parameters = {{"r", r}, {"e", e}, {"k_max", k_max}, {"window", window}};

    for (long k = 1; k <= k_max; ++k) {
        const Ideal power = ideal_power(ideal, static_cast<int>(k));
        const long threshold = r * graded_piece_dim(*ideal.ring(), k - 1);
        for (long d = k * (e + 1); d <= k * (e + 1) + window; ++d) {
            const long value = hilbert_function(power, d);
            report.observed.push_back("k=" + std::to_string(k) + " d=" + std::to_string(d) +
                                      " H=" + std::to_string(value) +
                                      " threshold=" + std::to_string(threshold));
            if (value < threshold) {
                report.observed.push_back("violation at k=" + std::to_string(k) +
                                          ", d=" + std::to_string(d) + ": " +
                                          std::to_string(value) + " < " +
                                          std::to_string(threshold));
                report.outcome = CheckOutcome::Fail;
                return report;
            }
        }
    }
    report.outcome = CheckOutcome::Pass;
    return report;
}

CheckReport line_dagger_check(const Ideal& ideal, long r) {
    CheckReport report;
    report.criterion = "line-dagger";
    report.rule = "every product of two saturation generators and a degree-(r-4) monomial "
                  "lies in the ideal";
    const long n = ideal.ring()->var_count() - 1;
    report.parameters = {{"r", r}, {"n", n}};

    auto not_applicable = [&](const std::string& why) {
        report.observed.push_back("not applicable: " + why);
        report.outcome = CheckOutcome::NotApplicable;
        return report;
    };
    if (n < 2) return not_applicable("needs at least 3 variables");
    if (r < 4) return not_applicable("needs r >= 4");
    const HilbertTable h = generic_hf(r, n);
    for (long d = 0; d <= h.horizon(); ++d)
        if (hilbert_function(ideal, d) != h.at(d))
            return not_applicable("Hilbert function differs from the generic table at degree " +
                                  std::to_string(d));

    const Ideal sat = saturate_irrelevant(ideal);
    const long h1 = hilbert_function(sat, 1);
    report.observed.push_back("H(S/saturation)(1) = " + std::to_string(h1));
    if (h1 != 2) return not_applicable("saturation does not cut out a subscheme of a line");

    const auto& gens = sat.generators();
    const auto monoms =
        monomials_of_degree(ideal.ring()->var_count(), static_cast<int>(r - 4));
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i; j < gens.size(); ++j) {
            const Polynomial square = gens[i] * gens[j];
            for (const auto& u : monoms) {
                const Polynomial probe = square.times_term(u, Rational(1));
                if (!ideal_member(probe, ideal)) {
                    report.observed.push_back("witness outside the ideal: " + probe.str());
                    report.outcome = CheckOutcome::Fail;
                    return report;
                }
            }
        }
    }
    report.observed.push_back("all " + std::to_string(gens.size() * (gens.size() + 1) / 2) +
                              " generator products times " + std::to_string(monoms.size()) +
                              " monomials are members");
    report.outcome = CheckOutcome::Pass;
    return report;
}

namespace {

// degrees where f and the generic table for r plane points disagree
std::vector<long> differing_degrees(const HilbertTable& f, long r) {
    if (!f.eventual_constant) throw InputError("table has no constant tail");
    const HilbertTable h = generic_hf(r, 2);
    std::vector<long> diffs;
    if (*f.eventual_constant != r) {
        diffs.push_back(-1); // tails disagree: not expressible as finitely many degrees
        return diffs;
    }
    const long top = std::max(f.horizon(), h.horizon());
    for (long d = 0; d <= top; ++d)
        if (f.at(d) != h.at(d)) diffs.push_back(d);
    return diffs;
}

} // namespace

bool star_predicate(const HilbertTable& f, long r) {
    const auto diffs = differing_degrees(f, r);
    if (!diffs.empty() && diffs.front() < 0) return false;
    return diffs.size() <= 1;
}

bool star2_predicate(const HilbertTable& f, long r) {
    const auto diffs = differing_degrees(f, r);
    if (diffs.size() != 1 || diffs.front() < 0) return false;
    const long e = diffs.front();
    const long d = f.at(e);
    return binomial(e + 1, 2) < d && d < r && r < binomial(e + 2, 2);
}

CheckReport sufficient_star_check(const Ideal& ideal, long r) {
    if (ideal.ring()->var_count() != 3)
        throw InputError("the sufficient check applies to 3-variable rings only");
    verify_table_matches(ideal, generic_hf(r, 2));

    CheckReport report;
    report.criterion = "star-sufficient";
    report.rule = "the ideal is saturated, or its saturation's Hilbert table differs from "
                  "the generic one in at most one degree";
    report.parameters = {{"r", r}};

    const Ideal sat = saturate_irrelevant(ideal);
    if (ideal_equal(sat, ideal)) {
        report.observed.push_back("ideal is saturated");
        report.outcome = CheckOutcome::Pass;
        return report;
    }

    long top = generic_hf(r, 2).horizon();
    for (const auto& g : sat.reduced_gb()->elements)
        top = std::max(top, static_cast<long>(g.degree()));
    top += 2;
    HilbertTable table = hilbert_table(sat, top);
    while (!table.eventual_constant) {
        top += 2;
        if (top > global_limits().max_degree)
            throw LimitError("saturation Hilbert table did not stabilize within the cap");
        table = hilbert_table(sat, top);
    }
    std::string values = "saturation table:";
    for (long d = 0; d <= table.horizon(); ++d)
        values += " " + std::to_string(table.at(d));
    report.observed.push_back(values);

    const bool star = star_predicate(table, r);
    report.observed.push_back(std::string("one-degree-drop predicate: ") +
                              (star ? "holds" : "does not hold"));
    report.outcome = star ? CheckOutcome::Pass : CheckOutcome::Fail;
    return report;
}

SlipVerdict slip_verdict(const Ideal& ideal, long r, const SlipOptions& options) {
    const long n = ideal.ring()->var_count() - 1;
    const HilbertTable h = options.table ? *options.table : generic_hf(r, n);
    verify_table_matches(ideal, h);

    SlipVerdict verdict;
    if (n == 2 && tables_agree(h, generic_hf(r, 2))) {
        verdict.evidence.push_back(sufficient_star_check(ideal, r));
        if (verdict.evidence.back().passed()) {
            verdict.status = SlipStatus::InSlip;
            return verdict;
        }
    }
    verdict.evidence.push_back(line_dagger_check(ideal, r));
    if (verdict.evidence.back().failed()) {
        verdict.status = SlipStatus::NotInSlip;
        return verdict;
    }
    verdict.evidence.push_back(power_necessary_check(ideal, h, r, options.k_max, options.window));
    if (verdict.evidence.back().failed()) {
        verdict.status = SlipStatus::NotInSlip;
        return verdict;
    }
    verdict.status = SlipStatus::Unknown;
    return verdict;
}

namespace {

// a1^i * a2^j in the 3-variable ring, optionally times a0^p
Monomial plane_mono(int p, int i, int j) { return Monomial(std::vector<int>{p, i, j}); }

Polynomial plane_term(const RingPtr& ring, int p, int i, int j) {
    return Polynomial::term(ring, plane_mono(p, i, j), Rational(1));
}

} // namespace

PlaneFamily family_jik(long r, long d, long e) {
    const long s = binomial(e + 1, 2);      // dim S_{e-1}
    const long dim_e = binomial(e + 2, 2);  // dim S_e
    if (e < 1 || !(s < d && d < r && r < dim_e))
        throw InputError("parameters must satisfy dim S_{e-1} < d < r < dim S_e");
    // Macaulay growth in two variables forces the degree-(e+1) drop r-d to be
    // at most the degree-e drop d-s; beyond that no saturated ideal has the table.
    if (r - d > d - s)
        throw InputError("parameters must satisfy r - d <= d - s: no saturated ideal attains this Hilbert table");
    const RingPtr ring = PolyRing::standard(3);
    const int ie = static_cast<int>(e);

    // A_i = a1^i a2^(e-i), B_i = a1^i a2^(e+1-i), C_i = a1^i a2^(e+2-i)
    auto A = [&](long i) { return plane_term(ring, 0, static_cast<int>(i), ie - static_cast<int>(i)); };
    auto B = [&](long i) { return plane_term(ring, 0, static_cast<int>(i), ie + 1 - static_cast<int>(i)); };
    auto C = [&](long i) { return plane_term(ring, 0, static_cast<int>(i), ie + 2 - static_cast<int>(i)); };
    auto A_times_a0 = [&](long i) {
        return plane_term(ring, 1, static_cast<int>(i), ie - static_cast<int>(i));
    };

    std::vector<Polynomial> jg, ig, kg;
    for (long i = e; i >= d - s; --i) jg.push_back(A(i));
    for (long i = d - s - 1; i >= r - d; --i) jg.push_back(B(i));
    for (long i = r - d - 1; i >= 0; --i) jg.push_back(C(i));

    for (long i = e; i >= r - s; --i) {
        ig.push_back(A(i));
        kg.push_back(A(i));
    }
    for (long i = r - s - 1; i >= d - s; --i) {
        ig.push_back(B(i)); // A_i * a2
        ig.push_back(A_times_a0(i));
        kg.push_back(B(i));
        kg.push_back(A_times_a0(i) + B(i - (d - s)));
    }
    for (long i = d - s - 1; i >= r - d; --i) {
        ig.push_back(B(i));
        kg.push_back(B(i));
    }
    for (long i = r - d - 1; i >= 0; --i) {
        ig.push_back(C(i));
        kg.push_back(C(i));
    }

    return PlaneFamily{Ideal(ring, jg), Ideal(ring, ig), Ideal(ring, kg), r, d, e};
}

std::vector<PlaneFamily> all_plane_families(long max_r) {
    std::vector<PlaneFamily> out;
    for (long e = 1;; ++e) {
        const long s = binomial(e + 1, 2);
        if (s + 2 > max_r) break; // need d > s and r > d
        for (long d = s + 1; d < max_r; ++d)
            for (long r = d + 1; r <= max_r && r < binomial(e + 2, 2); ++r)
                if (r - d <= d - s) out.push_back(family_jik(r, d, e));
    }
    return out;
}

InteriorExamples singular_interior_examples() {
    const RingPtr ring = PolyRing::standard(3);
    auto mk = [&](const std::vector<std::string>& texts) { return Ideal::span(ring, texts); };
    return InteriorExamples{
        mk({"a1^2*a2", "a0*a1^2 + a1*a2^2", "a1^4", "a1*a2^3", "a2^5"}),
        mk({"a0*a1^2", "a1^2*a2", "a1^4", "a1*a2^3", "a2^5"}),
        mk({"a1^3", "a1^2*a2", "a1^2*a0^2", "a1*a2^3", "a2^5"}),
    };
}

} // namespace hilb
