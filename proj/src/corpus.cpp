#include "hilb/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "hilb/apolarity.hpp"
#include "hilb/criteria.hpp"
#include "hilb/errors.hpp"
#include "hilb/graded_hom.hpp"
#include "hilb/hilbert.hpp"
#include "hilb/linalg.hpp"
#include "hilb/staircase.hpp"

namespace hilb {

namespace {

Ideal mk(const RingPtr& ring, const std::vector<std::string>& texts) {
    return Ideal::span(ring, texts);
}

} // namespace

const std::vector<CorpusItem>& corpus() {
    static const std::vector<CorpusItem> items = [] {
        const RingPtr r2 = PolyRing::standard(2);
        const RingPtr r3 = PolyRing::standard(3);
        const RingPtr r4 = PolyRing::standard(4);
        const InteriorExamples interior = singular_interior_examples();
        const PlaneFamily fam = family_jik(5, 4, 2);
        std::vector<CorpusItem> v;
        v.push_back({"collinear-four-points",
                     "non-saturated ideal of a length-4 subscheme of a line in the plane; "
                     "rejected by the line criterion with witness a0^2",
                     mk(r3, {"a0*a1", "a0*a2", "a0^3", "a1^4"}), 4});
        v.push_back({"fat-point-square",
                     "square of the ideal of a plane point: constant Hilbert value 3; its own "
                     "square has constant value 10",
                     mk(r3, {"a0^2", "a0*a1", "a1^2"}), 3});
        v.push_back({"p3-power-gap",
                     "length-6 limit ideal in four variables whose square has Hilbert value "
                     "23 < 24 in degree 6",
                     mk(r4, {"a0^2*a1", "a0*a1^2", "a0*a2", "a0*a3", "a1*a2", "a1*a3", "a2^4"}),
                     6});
        v.push_back({"line-supported-pass",
                     "length-4 subscheme of a line that passes the line criterion",
                     mk(r3, {"a0^2", "a0*a1", "a0*a2^2", "a1^4"}), 4});
        v.push_back({"interior-singular-deform",
                     "plane ideal with generic Hilbert function for 8 points; degenerates to "
                     "its initial ideal under lex a0>a1>a2",
                     interior.i1, 8});
        v.push_back({"interior-singular-initial",
                     "monomial plane ideal for 8 points with tangent dimension 16",
                     interior.i2, 8});
        v.push_back({"interior-singular-excess",
                     "monomial plane ideal for 8 points with excess tangent dimension 17",
                     interior.i3, 8});
        v.push_back({"coordinate-triangle",
                     "radical ideal of the three coordinate points of the plane",
                     mk(r3, {"a0*a1", "a0*a2", "a1*a2"}), 3});
        v.push_back({"staircase-corner-cut",
                     "two-variable monomial ideal of colength 5 with staircase heights (2,2,1)",
                     mk(r2, {"a0^3", "a0^2*a1", "a1^2"}), 5});
        v.push_back({"plane-family-saturated-5-4-2",
                     "saturated plane ideal with a single Hilbert-value drop, (r,d,e)=(5,4,2)",
                     fam.j, 5});
        v.push_back({"plane-family-limit-5-4-2",
                     "flat limit with generic Hilbert function for 5 points; its saturation is "
                     "the saturated family member",
                     fam.i, 5});
        v.push_back({"plane-family-deform-5-4-2",
                     "saturated witness whose initial ideal under lex a0>a2>a1 is the limit "
                     "family member",
                     fam.k, 5});
        return v;
    }();
    return items;
}

const CorpusItem& corpus_item(const std::string& name) {
    for (const auto& item : corpus())
        if (item.name == name) return item;
    throw InputError("unknown example: " + name);
}

long hf_by_linear_algebra(const Ideal& ideal, long d) {
    if (d < 0) return 0;
    const RingPtr& ring = ideal.ring();
    const int nvars = ring->var_count();
    const long dim = graded_piece_dim(*ring, d);
    const auto basis = monomials_of_degree(nvars, static_cast<int>(d));
    std::map<Monomial, long, MonomialLexDesc> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<long>(i));

    RowReducer reducer(dim);
    for (const auto& g : ideal.generators()) {
        const long mdeg = d - g.degree();
        if (mdeg < 0) continue;
        for (const auto& u : monomials_of_degree(nvars, static_cast<int>(mdeg))) {
            std::vector<Rational> row(static_cast<size_t>(dim));
            for (const auto& [m, c] : g.terms())
                row[static_cast<size_t>(index.at(m * u))] = c;
            reducer.add_row(std::move(row));
        }
    }
    return dim - reducer.rank();
}

namespace {

using Body = std::function<std::string()>;

VerifyItem run_item(const std::string& name, const std::string& expected, const Body& body) {
    VerifyItem item;
    item.name = name;
    item.expected = expected;
    try {
        item.observed = body();
    } catch (const std::exception& ex) {
        item.observed = std::string("error: ") + ex.what();
    }
    item.pass = item.observed == expected;
    return item;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

// ---- randomized-instance helpers (all randomness flows through one engine
// with fixed seeds; std distributions are avoided to keep the values
// reproducible across standard-library implementations) ----

long pick(std::mt19937& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Ideal random_monomial_ideal(std::mt19937& rng, const RingPtr& ring, long max_gens,
                            long max_deg) {
    const int nvars = ring->var_count();
    const long count = pick(rng, 1, max_gens);
    std::vector<Monomial> ms;
    for (long i = 0; i < count; ++i) {
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        const long deg = pick(rng, 1, max_deg);
        for (long d = 0; d < deg; ++d) e[static_cast<size_t>(pick(rng, 0, nvars - 1))]++;
        ms.emplace_back(e);
    }
    std::vector<Polynomial> gens;
    for (const auto& m : minimal_monomial_generators(std::move(ms)))
        gens.push_back(Polynomial::term(ring, m, Rational(1)));
    return Ideal(ring, gens);
}

Polynomial random_homogeneous(std::mt19937& rng, const RingPtr& ring, long degree, long terms) {
    const auto basis = monomials_of_degree(ring->var_count(), static_cast<int>(degree));
    Polynomial f(ring);
    while (f.is_zero()) {
        f = Polynomial(ring);
        for (long t = 0; t < terms; ++t) {
            const auto& m = basis[static_cast<size_t>(pick(rng, 0, static_cast<long>(basis.size()) - 1))];
            const long c = pick(rng, -3, 3);
            if (c != 0) f.add_term(m, Rational(c));
        }
    }
    return f;
}

Ideal point_prime(const RingPtr& ring, long u, long w) {
    Polynomial g1(ring), g2(ring);
    g1.add_term(Monomial::variable(3, 1), Rational(1));
    g1.add_term(Monomial::variable(3, 0), Rational(-u));
    g2.add_term(Monomial::variable(3, 2), Rational(1));
    g2.add_term(Monomial::variable(3, 0), Rational(-w));
    return Ideal(ring, {g1, g2});
}

std::vector<std::pair<long, long>> random_distinct_pairs(std::mt19937& rng, long count,
                                                         long span) {
    std::set<std::pair<long, long>> pts;
    while (static_cast<long>(pts.size()) < count)
        pts.emplace(pick(rng, -span, span), pick(rng, -span, span));
    return {pts.begin(), pts.end()};
}

std::vector<std::vector<Rational>> affine_plane_coords(
    const std::vector<std::pair<long, long>>& pts) {
    std::vector<std::vector<Rational>> coords;
    for (const auto& [u, w] : pts)
        coords.push_back({Rational(1), Rational(u), Rational(w)});
    return coords;
}

// saturation commutes with intersection
long suite_sat_intersection(std::mt19937& rng) {
    const RingPtr r3 = PolyRing::standard(3);
    long ok = 0;
    for (int i = 0; i < 50; ++i) {
        const Ideal a = random_monomial_ideal(rng, r3, 4, 5);
        const Ideal b = random_monomial_ideal(rng, r3, 4, 5);
        const Ideal lhs = saturate_irrelevant(ideal_intersection(a, b));
        const Ideal rhs = ideal_intersection(saturate_irrelevant(a), saturate_irrelevant(b));
        if (ideal_equal(lhs, rhs)) ++ok;
    }
    return ok;
}

// for ideals supported at pairwise distinct points, the saturations of the
// product and of the intersection agree
long suite_sat_product(std::mt19937& rng) {
    const RingPtr r3 = PolyRing::standard(3);
    long ok = 0;
    for (int i = 0; i < 50; ++i) {
        const long m = pick(rng, 2, 3);
        std::vector<Ideal> factors;
        for (const auto& [u, w] : random_distinct_pairs(rng, m, 3))
            factors.push_back(
                ideal_power(point_prime(r3, u, w), static_cast<int>(pick(rng, 1, 2))));
        Ideal prod = factors[0];
        Ideal inter = factors[0];
        for (size_t j = 1; j < factors.size(); ++j) {
            prod = ideal_product(prod, factors[j]);
            inter = ideal_intersection(inter, factors[j]);
        }
        if (ideal_equal(saturate_irrelevant(prod), saturate_irrelevant(inter))) ++ok;
    }
    return ok;
}

// equal saturations have equal saturations of powers
long suite_sat_power(std::mt19937& rng) {
    const RingPtr r3 = PolyRing::standard(3);
    long ok = 0;
    for (int i = 0; i < 50; ++i) {
        const Ideal a = random_monomial_ideal(rng, r3, 4, 4);
        const Ideal b = saturate_irrelevant(a);
        const int k = static_cast<int>(pick(rng, 2, 3));
        const Ideal lhs = saturate_irrelevant(ideal_power(a, k));
        const Ideal rhs = saturate_irrelevant(ideal_power(b, k));
        if (ideal_equal(lhs, rhs)) ++ok;
    }
    return ok;
}

// the initial ideal of the saturation sits inside the saturation of the
// initial ideal
long suite_initial_containment(std::mt19937& rng) {
    const RingPtr r3 = PolyRing::standard(3);
    long ok = 0;
    for (int i = 0; i < 50; ++i) {
        std::vector<Polynomial> gens;
        gens.push_back(random_homogeneous(rng, r3, 2, 2));
        gens.push_back(random_homogeneous(rng, r3, pick(rng, 2, 3), 2));
        if (pick(rng, 0, 1) == 1)
            gens.push_back(Polynomial::term(
                r3, Monomial::variable(3, static_cast<int>(pick(rng, 0, 2)), 3), Rational(1)));
        const Ideal a(r3, gens);
        const MonomialOrder order =
            (i % 2 == 0) ? default_order(*r3) : MonomialOrder::lex(3);
        const Ideal lhs = initial_ideal(saturate_irrelevant(a), order);
        const Ideal rhs = saturate_irrelevant(initial_ideal(a, order));
        bool contained = true;
        for (const auto& g : lhs.generators())
            if (!ideal_member(g, rhs)) { contained = false; break; }
        if (contained) ++ok;
    }
    return ok;
}

// standard-monomial counts agree across orders and match the rank oracle
long suite_count_invariance(std::mt19937& rng) {
    const RingPtr r3 = PolyRing::standard(3);
    long ok = 0;
    for (int i = 0; i < 50; ++i) {
        std::vector<Polynomial> gens;
        gens.push_back(random_homogeneous(rng, r3, 2, 2));
        if (pick(rng, 0, 1) == 1) gens.push_back(random_homogeneous(rng, r3, 3, 2));
        gens.push_back(Polynomial::term(
            r3, Monomial::variable(3, static_cast<int>(pick(rng, 0, 2)), 2), Rational(1)));
        const Ideal a(r3, gens);
        const Ideal lex_initial = initial_ideal(a, MonomialOrder::lex(3));
        bool good = true;
        for (long d = 0; d <= 5 && good; ++d) {
            const long oracle = hf_by_linear_algebra(a, d);
            good = hilbert_function(a, d) == oracle &&
                   hilbert_function(lex_initial, d) == oracle;
        }
        if (good) ++ok;
    }
    return ok;
}

// Hilbert tables of saturated ideals with constant Hilbert polynomial are
// weakly increasing and stay flat once flat
bool monotone_flat_table(const Ideal& ideal, long colength) {
    long top = 4;
    for (const auto& g : ideal.reduced_gb()->elements)
        top = std::max(top, static_cast<long>(g.degree()) + 4);
    const HilbertTable table = hilbert_table(ideal, top);
    if (!table.eventual_constant || *table.eventual_constant != colength) return false;
    bool flat = false;
    for (long d = 0; d < table.horizon(); ++d) {
        const long a = table.at(d), b = table.at(d + 1);
        if (b < a) return false;
        if (flat && b != a) return false;
        if (a == b) flat = true;
    }
    return true;
}

long suite_monotone_table(std::mt19937& rng, long* total) {
    const RingPtr r3 = PolyRing::standard(3);
    long ok = 0;
    *total = 0;
    for (int r = 6; r <= 8; ++r) {
        for (const auto& diag : enumerate_staircases(r)) {
            ++*total;
            std::vector<Polynomial> gens;
            for (const auto& [s, t] : diag.generators())
                gens.push_back(
                    Polynomial::term(r3, Monomial(std::vector<int>{s, t, 0}), Rational(1)));
            if (monotone_flat_table(Ideal(r3, gens), diag.colength())) ++ok;
        }
    }
    for (int i = 0; i < 5; ++i) {
        ++*total;
        const long r = pick(rng, 2, 5);
        const Ideal pts =
            points_ideal(r3, affine_plane_coords(random_distinct_pairs(rng, r, 4)));
        if (monotone_flat_table(pts, r)) ++ok;
    }
    return ok;
}

} // namespace

std::vector<VerifyItem> verification_battery() {
    std::vector<VerifyItem> items;

    items.push_back(run_item(
        "collinear-rejection", "NotInSlip via line-dagger; witness outside the ideal: a0^2",
        [] {
            const CorpusItem& it = corpus_item("collinear-four-points");
            const SlipVerdict v = slip_verdict(it.ideal, it.r);
            std::string out = slip_status_name(v.status);
            if (!v.evidence.empty()) {
                const CheckReport& decider = v.evidence.back();
                out += " via " + decider.criterion;
                for (const auto& line : decider.observed)
                    if (line.rfind("witness", 0) == 0) out += "; " + line;
            }
            return out;
        }));

    items.push_back(run_item(
        "fat-point-constants", "constant value 3; squared constant value 10", [] {
            const CorpusItem& it = corpus_item("fat-point-square");
            const long c1 = constant_hilbert_value(it.ideal);
            const long c2 = constant_hilbert_value(ideal_power(it.ideal, 2));
            return "constant value " + std::to_string(c1) + "; squared constant value " +
                   std::to_string(c2);
        }));

    items.push_back(run_item(
        "power-gap-rejection",
        "H(S/I^2)(6)=23 oracle=23 threshold=24 power-check=fail verdict=NotInSlip", [] {
            const CorpusItem& it = corpus_item("p3-power-gap");
            const Ideal square = ideal_power(it.ideal, 2);
            const long engine = hilbert_function(square, 6);
            const long oracle = hf_by_linear_algebra(square, 6);
            const long threshold = it.r * graded_piece_dim(*it.ideal.ring(), 1);
            const CheckReport rep = power_necessary_check(it.ideal, generic_hf(it.r, 3), it.r);
            const SlipVerdict v = slip_verdict(it.ideal, it.r);
            return "H(S/I^2)(6)=" + std::to_string(engine) + " oracle=" +
                   std::to_string(oracle) + " threshold=" + std::to_string(threshold) +
                   " power-check=" + check_outcome_name(rep.outcome) + " verdict=" +
                   slip_status_name(v.status);
        }));

    items.push_back(run_item(
        "interior-tangent-dimensions", "tangent(i2)=16 tangent(i3)=17 initial(i1)==i2: yes",
        [] {
            const InteriorExamples ex = singular_interior_examples();
            const long t2 = tangent_dim_hilb(ex.i2);
            const long t3 = tangent_dim_hilb(ex.i3);
            const bool same =
                ideal_equal(initial_ideal(ex.i1, MonomialOrder::lex(3)), ex.i2);
            return "tangent(i2)=" + std::to_string(t2) + " tangent(i3)=" + std::to_string(t3) +
                   " initial(i1)==i2: " + yn(same);
        }));

    items.push_back(run_item(
        "staircase-hom-oracle",
        "all 44 staircases of colength <= 7: positive formula == oracle, total == 2r, "
        "extended == 2r - positive",
        [] {
            const RingPtr r2 = PolyRing::standard(2);
            long count = 0;
            std::vector<std::string> bad;
            for (int r = 1; r <= 7; ++r) {
                for (const auto& diag : enumerate_staircases(r)) {
                    ++count;
                    const Ideal ideal = diag.to_ideal(r2);
                    const long oracle = hom_positive_oracle(ideal);
                    const long total = hom_total_oracle(ideal);
                    if (diag.hom_positive() != oracle || total != 2 * r ||
                        diag.extended_tangent_dim() != 2 * r - oracle)
                        bad.push_back("colength " + std::to_string(r) + ": formula " +
                                      std::to_string(diag.hom_positive()) + " oracle " +
                                      std::to_string(oracle) + " total " +
                                      std::to_string(total));
                }
            }
            if (!bad.empty())
                return "mismatch at " + bad.front() + " (+" +
                       std::to_string(bad.size() - 1) + " more)";
            return "all " + std::to_string(count) +
                   " staircases of colength <= 7: positive formula == oracle, total == 2r, "
                   "extended == 2r - positive";
        }));

    items.push_back(run_item(
        "point-power-values", "all 90 probes: H(S/I^k)(d) == r * dim S_{k-1}", [] {
            std::mt19937 rng(20250814u);
            const RingPtr r3 = PolyRing::standard(3);
            long probes = 0, good = 0;
            std::string first_bad;
            for (int set = 0; set < 10; ++set) {
                const long r = 1 + set % 5;
                const Ideal ideal =
                    points_ideal(r3, affine_plane_coords(random_distinct_pairs(rng, r, 5)));
                long e = 0;
                while (hilbert_function(ideal, e) != r) ++e;
                for (long k = 1; k <= 3; ++k) {
                    const Ideal power = ideal_power(ideal, static_cast<int>(k));
                    const long want = r * graded_piece_dim(*r3, k - 1);
                    for (long d = k * (e + 1); d <= k * (e + 1) + 2; ++d) {
                        ++probes;
                        const long got = hilbert_function(power, d);
                        if (got == want) {
                            ++good;
                        } else if (first_bad.empty()) {
                            first_bad = "r=" + std::to_string(r) + " k=" + std::to_string(k) +
                                        " d=" + std::to_string(d) + ": " + std::to_string(got) +
                                        " != " + std::to_string(want);
                        }
                    }
                }
            }
            if (good != probes)
                return std::to_string(good) + "/" + std::to_string(probes) +
                       " probes matched; first mismatch " + first_bad;
            return "all " + std::to_string(probes) + " probes: H(S/I^k)(d) == r * dim S_{k-1}";
        }));

    items.push_back(run_item(
        "plane-family-suite",
        "families (5,4,2) (8,7,3) (9,8,3): saturation, Hilbert table, initial ideal, "
        "saturated witness, tangent <= 2r, InSlip",
        [] {
            std::string names;
            std::vector<std::string> bad;
            for (const auto& f : all_plane_families(9)) {
                const std::string tag = "(" + std::to_string(f.r) + "," + std::to_string(f.d) +
                                        "," + std::to_string(f.e) + ")";
                names += " " + tag;
                std::string why;
                if (!ideal_equal(saturate_irrelevant(f.i), f.j)) why = "saturation mismatch";
                const HilbertTable g = generic_hf(f.r, 2);
                for (long a = 0; why.empty() && a <= g.horizon(); ++a)
                    if (hilbert_function(f.i, a) != g.at(a))
                        why = "Hilbert value mismatch at degree " + std::to_string(a);
                if (why.empty() && constant_hilbert_value(f.i) != f.r)
                    why = "constant value mismatch";
                if (why.empty() &&
                    !ideal_equal(initial_ideal(f.k, MonomialOrder::lex({0, 2, 1})), f.i))
                    why = "initial ideal mismatch";
                if (why.empty() && !is_saturated(f.k)) why = "witness not saturated";
                if (why.empty() && tangent_dim_hilb(f.i) > 2 * f.r) why = "tangent above 2r";
                if (why.empty() && slip_verdict(f.i, f.r).status != SlipStatus::InSlip)
                    why = "not InSlip";
                if (!why.empty()) bad.push_back(tag + " " + why);
            }
            if (!bad.empty()) return "failed: " + bad.front();
            return "families" + names +
                   ": saturation, Hilbert table, initial ideal, saturated witness, "
                   "tangent <= 2r, InSlip";
        }));

    items.push_back(run_item(
        "quartic-certificate-suite",
        "45 samples across 9 cases: apolar, Groebner under lex a2>a3>a1>a0, saturated "
        "initial ideal, constant value 6, certificate valid",
        [] {
            std::mt19937 rng(777u);
            const RingPtr dual = dual_ring(4);
            const MonomialOrder order = MonomialOrder::lex({2, 3, 1, 0});
            long samples = 0;
            std::vector<std::string> bad;
            for (QuarticCase c : all_quartic_cases()) {
                for (int s = 0; s < 5; ++s) {
                    const bool needs_nonzero =
                        c == QuarticCase::C2A || c == QuarticCase::C3A || c == QuarticCase::C3B;
                    const bool forces_zero = c == QuarticCase::C2A0 || c == QuarticCase::C3A0;
                    long av = forces_zero ? 0 : pick(rng, -4, 4);
                    if (needs_nonzero)
                        while (av == 0) av = pick(rng, -4, 4);
                    const Rational a(av), b(pick(rng, -4, 4));
                    Polynomial q(dual);
                    for (int i = 0; i <= 4; ++i) {
                        const long cq = pick(rng, -4, 4);
                        if (cq != 0) q.add_term(Monomial(std::vector<int>{0, 0, i, 4 - i}),
                                                Rational(cq));
                    }
                    const QuarticFamily fam = quartic_case_family(c, a, b, q);
                    ++samples;
                    std::string why;
                    if (!is_apolar(fam.ideal, fam.dual_f)) why = "not apolar";
                    if (why.empty() && !is_groebner(fam.ideal.generators(), order))
                        why = "generators are not a Groebner basis";
                    if (why.empty()) {
                        const Ideal init = initial_ideal(fam.ideal, order);
                        if (!is_saturated(init)) why = "initial ideal not saturated";
                        else if (constant_hilbert_value(init) != 6)
                            why = "constant value differs from 6";
                    }
                    if (why.empty() &&
                        !cactus_bound_certificate(fam.ideal, fam.dual_f, 6).valid())
                        why = "certificate invalid";
                    if (!why.empty())
                        bad.push_back("case " + quartic_case_name(c) + " sample " +
                                      std::to_string(s) + ": " + why);
                }
            }
            if (!bad.empty()) return "failed: " + bad.front();
            return std::to_string(samples) +
                   " samples across 9 cases: apolar, Groebner under lex a2>a3>a1>a0, "
                   "saturated initial ideal, constant value 6, certificate valid";
        }));

    items.push_back(run_item(
        "concise-cubic-wildness",
        "concise: yes; Hessian determinant zero: yes; square of (a0,a1,a2) annihilates: yes",
        [] {
            const Polynomial cubic = concise_cubic();
            const bool concise = is_concise(cubic);
            const bool hessian_zero = hessian_det(cubic).is_zero();
            const RingPtr op = operator_ring(5);
            bool kills = true;
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j) {
                    const Polynomial quad = Polynomial::term(
                        op, Monomial::variable(5, i) * Monomial::variable(5, j), Rational(1));
                    if (!contract(quad, cubic).is_zero()) kills = false;
                }
            return "concise: " + yn(concise) + "; Hessian determinant zero: " +
                   yn(hessian_zero) + "; square of (a0,a1,a2) annihilates: " + yn(kills);
        }));

    items.push_back(run_item(
        "algebra-property-suites",
        "sat-intersection 50/50 sat-product 50/50 sat-power 50/50 initial-containment 50/50 "
        "count-invariance 50/50 monotone-table 53/53",
        [] {
            std::mt19937 rng(424242u);
            const long s1 = suite_sat_intersection(rng);
            const long s2 = suite_sat_product(rng);
            const long s3 = suite_sat_power(rng);
            const long s4 = suite_initial_containment(rng);
            const long s5 = suite_count_invariance(rng);
            long total6 = 0;
            const long s6 = suite_monotone_table(rng, &total6);
            return "sat-intersection " + std::to_string(s1) + "/50 sat-product " +
                   std::to_string(s2) + "/50 sat-power " + std::to_string(s3) +
                   "/50 initial-containment " + std::to_string(s4) +
                   "/50 count-invariance " + std::to_string(s5) + "/50 monotone-table " +
                   std::to_string(s6) + "/" + std::to_string(total6);
        }));

    items.push_back(run_item(
        "power-check-boundary",
        "count(6,7,8)=(11,12,12) engine=(11,12,12) threshold=12 outcome=fail; "
        "violation at k=2, d=6: 11 < 12",
        [] {
            const CorpusItem& it = corpus_item("collinear-four-points");
            const Ideal square = ideal_power(it.ideal, 2);
            std::vector<Monomial> gens;
            for (const auto& g : square.generators()) gens.push_back(g.terms().begin()->first);
            const auto brute = [&](long d) {
                long count = 0;
                for (const auto& m : monomials_of_degree(3, static_cast<int>(d))) {
                    bool inside = false;
                    for (const auto& g : gens)
                        if (g.divides(m)) { inside = true; break; }
                    if (!inside) ++count;
                }
                return count;
            };
            std::string counts, engine;
            for (long d = 6; d <= 8; ++d) {
                if (d > 6) { counts += ","; engine += ","; }
                counts += std::to_string(brute(d));
                engine += std::to_string(hilbert_function(square, d));
            }
            const long threshold = it.r * graded_piece_dim(*it.ideal.ring(), 1);
            const CheckReport rep = power_necessary_check(it.ideal, generic_hf(it.r, 2), it.r);
            std::string violation = "no violation";
            for (const auto& line : rep.observed)
                if (line.rfind("violation", 0) == 0) violation = line;
            return "count(6,7,8)=(" + counts + ") engine=(" + engine + ") threshold=" +
                   std::to_string(threshold) + " outcome=" + check_outcome_name(rep.outcome) +
                   "; " + violation;
        }));

    return items;
}

bool all_pass(const std::vector<VerifyItem>& items) {
    return std::all_of(items.begin(), items.end(),
                       [](const VerifyItem& i) { return i.pass; });
}

} // namespace hilb
