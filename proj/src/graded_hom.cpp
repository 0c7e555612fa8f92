#include "hilb/graded_hom.hpp"

#include <algorithm>
#include <map>

#include "hilb/errors.hpp"
#include "hilb/hilbert.hpp"
#include "hilb/linalg.hpp"

namespace hilb {

namespace {

struct QuotientBasis {
    std::vector<Monomial> monomials; // standard monomials of one degree
    std::map<Monomial, long, MonomialLexDesc> index;
};

QuotientBasis quotient_basis(const RingPtr& ring, const std::vector<Monomial>& lts, long degree) {
    QuotientBasis b;
    if (degree < 0) return b;
    for (const auto& m : monomials_of_degree(ring->var_count(), static_cast<int>(degree))) {
        bool inside = false;
        for (const auto& lt : lts)
            if (lt.divides(m)) { inside = true; break; }
        if (!inside) {
            b.index.emplace(m, static_cast<long>(b.monomials.size()));
            b.monomials.push_back(m);
        }
    }
    return b;
}

// coefficients of NF(w) over the standard basis of its degree
std::vector<Rational> reduce_to_basis(const Polynomial& w, const GroebnerBasis& gb,
                                      const QuotientBasis& basis) {
    std::vector<Rational> out(basis.monomials.size());
    if (w.is_zero() || basis.monomials.empty()) return out;
    const Polynomial nf = normal_form(w, gb.elements, gb.order);
    for (const auto& [m, c] : nf.terms()) {
        auto it = basis.index.find(m);
        if (it == basis.index.end())
            throw InputError("normal form landed outside the standard basis");
        out[static_cast<size_t>(it->second)] = c;
    }
    return out;
}

long hom_dim_at_truncation(const std::vector<Polynomial>& source_gens, const Ideal& target,
                           long d, long truncation) {
    const RingPtr& ring = target.ring();
    const MonomialOrder order = default_order(*ring);
    const auto target_gb = target.reduced_gb(order);
    const std::vector<Monomial> target_lts = target_gb->leading_monomials();
    const int nvars = ring->var_count();

    // unknowns: one block per source generator
    std::vector<long> gen_degree;
    std::vector<QuotientBasis> blocks;
    std::vector<long> offset;
    long total_unknowns = 0;
    for (const auto& g : source_gens) {
        gen_degree.push_back(g.degree());
        blocks.push_back(quotient_basis(ring, target_lts, g.degree() + d));
        offset.push_back(total_unknowns);
        total_unknowns += static_cast<long>(blocks.back().monomials.size());
    }
    if (total_unknowns == 0) return 0;

    long min_gen_degree = gen_degree[0];
    for (long dg : gen_degree) min_gen_degree = std::min(min_gen_degree, dg);

    RowReducer reducer(total_unknowns);
    for (long sdeg = min_gen_degree; sdeg <= truncation; ++sdeg) {
        // syzygy columns: (generator i, multiplier monomial of degree sdeg - d_i)
        struct Col { size_t gen; Monomial mult; };
        std::vector<Col> cols;
        for (size_t i = 0; i < source_gens.size(); ++i) {
            const long mdeg = sdeg - gen_degree[i];
            if (mdeg < 0) continue;
            for (const auto& u : monomials_of_degree(nvars, static_cast<int>(mdeg)))
                cols.push_back(Col{i, u});
        }
        if (cols.empty()) continue;

        const std::vector<Monomial> sdeg_monos =
            monomials_of_degree(nvars, static_cast<int>(sdeg));
        std::map<Monomial, long, MonomialLexDesc> sdeg_index;
        for (size_t k = 0; k < sdeg_monos.size(); ++k)
            sdeg_index.emplace(sdeg_monos[k], static_cast<long>(k));

        QMatrix syz(static_cast<long>(sdeg_monos.size()), static_cast<long>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
            for (const auto& [m, coeff] : source_gens[cols[c].gen].terms()) {
                const long r = sdeg_index.at(m * cols[c].mult);
                syz.at(r, static_cast<long>(c)) += coeff;
            }
        }
        const auto kernel = syz.nullspace();
        if (kernel.empty()) continue;

        // normal forms of every monomial of degree sdeg + d over the target basis
        const QuotientBasis out_basis = quotient_basis(ring, target_lts, sdeg + d);
        if (out_basis.monomials.empty()) continue;
        std::map<Monomial, std::vector<Rational>, MonomialLexDesc> nf_table;
        for (const auto& w : monomials_of_degree(nvars, static_cast<int>(sdeg + d)))
            nf_table.emplace(w, reduce_to_basis(Polynomial::term(ring, w, Rational(1)),
                                                *target_gb, out_basis));

        for (const auto& kv : kernel) {
            // rows: one per target standard monomial of degree sdeg + d
            std::vector<std::vector<Rational>> block_rows(
                out_basis.monomials.size(),
                std::vector<Rational>(static_cast<size_t>(total_unknowns)));
            for (size_t c = 0; c < cols.size(); ++c) {
                if (kv[c].is_zero()) continue;
                const size_t i = cols[c].gen;
                for (size_t b = 0; b < blocks[i].monomials.size(); ++b) {
                    const Monomial prod = cols[c].mult * blocks[i].monomials[b];
                    const auto& nf = nf_table.at(prod);
                    const size_t col = static_cast<size_t>(offset[i]) + b;
                    for (size_t s = 0; s < nf.size(); ++s) {
                        if (!nf[s].is_zero()) block_rows[s][col] += kv[c] * nf[s];
                    }
                }
            }
            for (auto& row : block_rows) reducer.add_row(std::move(row));
        }
    }

    return total_unknowns - reducer.rank();
}

HomComputation hom_dim_impl(const Ideal& source, const Ideal& target, long d,
                            std::optional<long> truncation) {
    require_same_ring(source, target);
    if (source.is_zero_ideal()) throw InputError("Hom from the zero ideal");

    HomComputation result;
    result.degree = d;

    if (truncation) {
        result.truncation = *truncation;
        result.dimension = hom_dim_at_truncation(source.generators(), target, d, *truncation);
        result.trace.emplace_back(result.truncation, result.dimension);
        result.stabilized = false; // caller-forced truncation: no stabilization claim
        return result;
    }

    long base = 0;
    for (const auto& g : source.reduced_gb()->elements)
        base = std::max(base, static_cast<long>(g.degree()));
    for (const auto& g : source.generators())
        base = std::max(base, static_cast<long>(g.degree()));
    base += 2;

    long previous = -1;
    for (long D = base; D <= base + global_limits().max_truncation; ++D) {
        const long dim = hom_dim_at_truncation(source.generators(), target, d, D);
        result.trace.emplace_back(D, dim);
        if (previous == dim) {
            result.truncation = D;
            result.dimension = dim;
            result.stabilized = true;
            return result;
        }
        previous = dim;
    }
    throw LimitError("Hom truncation did not stabilize within the cap");
}

} // namespace

HomComputation hom_graded_dim(const Ideal& ideal, long d, std::optional<long> truncation) {
    return hom_dim_impl(ideal, ideal, d, truncation);
}

HomComputation hom_graded_dim(const Ideal& source, const Ideal& target, long d,
                              std::optional<long> truncation) {
    return hom_dim_impl(source, target, d, truncation);
}

namespace {

// top nonzero degree of the finite quotient plus generator degree range
struct FiniteProfile {
    long top;
    long min_gen, max_gen;
};

FiniteProfile finite_profile(const Ideal& ideal) {
    const auto d0 = satisfies_condition_asterisk(ideal);
    if (!d0) throw InputError("finite colength required");
    FiniteProfile p{*d0 - 1, 0, 0};
    bool first = true;
    for (const auto& g : ideal.generators()) {
        const long dg = g.degree();
        p.min_gen = first ? dg : std::min(p.min_gen, dg);
        p.max_gen = first ? dg : std::max(p.max_gen, dg);
        first = false;
    }
    if (first) throw InputError("finite colength requires a nonzero ideal");
    return p;
}

} // namespace

long hom_positive_oracle(const Ideal& ideal) {
    if (ideal.ring()->var_count() != 2)
        throw InputError("positive-degree Hom oracle expects a 2-variable ring");
    const FiniteProfile p = finite_profile(ideal);
    long total = 0;
    for (long d = 1; d <= p.top - p.min_gen; ++d)
        total += hom_graded_dim(ideal, d).dimension;
    return total;
}

long hom_total_oracle(const Ideal& ideal) {
    if (ideal.ring()->var_count() != 2)
        throw InputError("total Hom oracle expects a 2-variable ring");
    const FiniteProfile p = finite_profile(ideal);
    long total = 0;
    for (long d = -p.max_gen; d <= p.top - p.min_gen; ++d)
        total += hom_graded_dim(ideal, d).dimension;
    return total;
}

long tangent_dim_hilb(const Ideal& ideal) {
    return hom_graded_dim(ideal, 0).dimension;
}

long socle_dim(const Ideal& ideal, long e) {
    const MonomialOrder order = default_order(*ideal.ring());
    const auto gb = ideal.reduced_gb(order);
    const std::vector<Monomial> lts = gb->leading_monomials();
    const QuotientBasis source = quotient_basis(ideal.ring(), lts, e);
    if (source.monomials.empty()) return 0;
    const QuotientBasis target = quotient_basis(ideal.ring(), lts, e + 1);
    const int nvars = ideal.ring()->var_count();

    QMatrix m(static_cast<long>(target.monomials.size()) * nvars,
              static_cast<long>(source.monomials.size()));
    for (size_t b = 0; b < source.monomials.size(); ++b) {
        for (int i = 0; i < nvars; ++i) {
            const Polynomial prod = Polynomial::term(
                ideal.ring(), source.monomials[b] * Monomial::variable(nvars, i), Rational(1));
            const auto nf = reduce_to_basis(prod, *gb, target);
            for (size_t s = 0; s < nf.size(); ++s)
                m.at(static_cast<long>(i) * static_cast<long>(target.monomials.size()) +
                         static_cast<long>(s),
                     static_cast<long>(b)) = nf[s];
        }
    }
    return static_cast<long>(source.monomials.size()) - m.rank();
}

} // namespace hilb
