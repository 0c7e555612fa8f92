#include "hilb/hilbert.hpp"

#include <algorithm>

#include "hilb/errors.hpp"

namespace hilb {

long HilbertTable::at(long d) const {
    if (d < 0) return 0;
    if (d <= horizon()) return values[static_cast<size_t>(d)];
    if (eventual_constant) return *eventual_constant;
    throw InputError("Hilbert table evaluated beyond its horizon (degree " +
                     std::to_string(d) + ") without a known tail");
}

long standard_monomial_count(const RingPtr& ring, const std::vector<Monomial>& lts, long d) {
    if (d < 0) return 0;
    long count = 0;
    for (const auto& m : monomials_of_degree(ring->var_count(), static_cast<int>(d))) {
        bool inside = false;
        for (const auto& lt : lts) {
            if (lt.divides(m)) {
                inside = true;
                break;
            }
        }
        if (!inside) ++count;
    }
    return count;
}

namespace {

// Leading monomials of a degree-truncated basis: enough to know in(I) in all
// degrees <= d, much cheaper than the full reduced basis.
std::vector<Monomial> truncated_lts(const Ideal& ideal, long d) {
    if (ideal.is_zero_ideal()) return {};
    const MonomialOrder order = default_order(*ideal.ring());
    const GroebnerBasis gb =
        buchberger(ideal.generators(), order, global_limits(), static_cast<int>(d));
    std::vector<Monomial> lts;
    for (const auto& g : gb.elements) {
        const Monomial& lt = leading_monomial(g, order);
        if (lt.degree() <= d) lts.push_back(lt);
    }
    return lts;
}

// Krull dim (S/M) <= 1 for a monomial ideal M given by lts: every pair of
// variables must support some generator (coordinate-subspace criterion).
// This is exactly "the Hilbert polynomial of S/I is a constant".
bool projective_dim_at_most_zero(int nvars, const std::vector<Monomial>& lts) {
    for (int u = 0; u < nvars; ++u) {
        for (int v = u + 1; v < nvars; ++v) {
            bool supported = false;
            for (const auto& m : lts) {
                bool inside_pair = true;
                for (int i = 0; i < nvars && inside_pair; ++i)
                    if (i != u && i != v && m[i] > 0) inside_pair = false;
                if (inside_pair) {
                    supported = true;
                    break;
                }
            }
            if (!supported) return false;
        }
    }
    return true;
}

} // namespace

long hilbert_function(const Ideal& ideal, long d) {
    if (d < 0) return 0;
    return standard_monomial_count(ideal.ring(), truncated_lts(ideal, d), d);
}

HilbertTable hilbert_table(const Ideal& ideal, long max_degree) {
    if (max_degree < 0) throw InputError("hilbert_table needs max_degree >= 0");
    const std::vector<Monomial> lts = truncated_lts(ideal, max_degree);
    HilbertTable t;
    t.values.reserve(static_cast<size_t>(max_degree) + 1);
    for (long d = 0; d <= max_degree; ++d)
        t.values.push_back(standard_monomial_count(ideal.ring(), lts, d));

    if (is_saturated(ideal)) {
        long max_gen_degree = 0;
        for (const auto& g : ideal.reduced_gb()->elements)
            max_gen_degree = std::max(max_gen_degree, static_cast<long>(g.degree()));
        for (long d = std::max(max_gen_degree, 0L); d + 1 <= max_degree; ++d) {
            if (t.values[static_cast<size_t>(d)] == t.values[static_cast<size_t>(d + 1)]) {
                t.eventual_constant = t.values[static_cast<size_t>(d)];
                break;
            }
        }
    }
    return t;
}

long constant_hilbert_value(const Ideal& ideal) {
    const auto gb = ideal.reduced_gb();
    if (!projective_dim_at_most_zero(ideal.ring()->var_count(), gb->leading_monomials()))
        throw InputError("constant_hilbert_value: quotient is not zero-dimensional");

    const Ideal sat = is_saturated(ideal) ? ideal : saturate_irrelevant(ideal);
    const auto sat_gb = sat.reduced_gb();
    long base = 0;
    for (const auto& g : sat_gb->elements)
        base = std::max(base, static_cast<long>(g.degree()));
    const std::vector<Monomial> lts = sat_gb->leading_monomials();

    long previous = standard_monomial_count(sat.ring(), lts, base);
    for (long d = base + 1; d <= base + global_limits().max_degree; ++d) {
        const long current = standard_monomial_count(sat.ring(), lts, d);
        if (current == previous) return current;
        previous = current;
    }
    throw LimitError("constant_hilbert_value did not stabilize within the degree cap");
}

HilbertTable generic_hf(long r, long n) {
    if (r < 1) throw InputError("generic Hilbert function needs r >= 1");
    if (n < 1) throw InputError("generic Hilbert function needs n >= 1");
    HilbertTable t;
    long a = 0;
    while (true) {
        const long dim = binomial(a + n, n);
        t.values.push_back(std::min(dim, r));
        if (dim >= r) break;
        ++a;
    }
    t.values.push_back(r); // one degree past attainment: tail starts inside the table
    t.eventual_constant = r;
    return t;
}

long min_degree_e(const HilbertTable& h, long r) {
    for (long d = 0; d <= h.horizon(); ++d)
        if (h.values[static_cast<size_t>(d)] == r) return d;
    throw InputError("Hilbert table never attains the value " + std::to_string(r));
}

std::optional<long> satisfies_condition_asterisk(const Ideal& ideal) {
    const auto gb = ideal.reduced_gb();
    const std::vector<Monomial> lts = gb->leading_monomials();
    const int nvars = ideal.ring()->var_count();

    for (const auto& m : lts)
        if (m.is_one()) return 0; // unit ideal: S_0 is already inside

    // finite length iff in(I) contains a pure power of every variable
    long pure_power_degree_sum = 0;
    for (int i = 0; i < nvars; ++i) {
        long best = -1;
        for (const auto& m : lts) {
            bool pure = m[i] > 0;
            for (int j = 0; j < nvars && pure; ++j)
                if (j != i && m[j] > 0) pure = false;
            if (pure) best = best < 0 ? m[i] : std::min(best, static_cast<long>(m[i]));
        }
        if (best < 0) return std::nullopt;
        pure_power_degree_sum += best;
    }

    for (long d = 0; d <= pure_power_degree_sum; ++d)
        if (standard_monomial_count(ideal.ring(), lts, d) == 0) return d;
    return pure_power_degree_sum; // unreachable: S_d inside I by then
}

} // namespace hilb
