#include "hilb/apolarity.hpp"

#include <map>

#include "hilb/errors.hpp"
#include "hilb/hilbert.hpp"
#include "hilb/linalg.hpp"

namespace hilb {

RingPtr dual_ring(int count) { return PolyRing::standard(count, "x"); }
RingPtr operator_ring(int count) { return PolyRing::standard(count, "a"); }

Polynomial derivative(const Polynomial& f, int var) {
    Polynomial out(f.ring());
    for (const auto& [m, c] : f.terms()) {
        if (m[var] == 0) continue;
        Monomial down = m;
        down = down.divided_by(Monomial::variable(f.ring()->var_count(), var));
        out.add_term(down, c * Rational(m[var]));
    }
    return out;
}

Polynomial contract(const Polynomial& theta, const Polynomial& f) {
    if (theta.ring()->var_count() != f.ring()->var_count())
        throw InputError("ring mismatch: operator and dual variable counts differ");
    const int nvars = f.ring()->var_count();
    Polynomial out(f.ring());
    for (const auto& [m, c] : theta.terms()) {
        Polynomial piece = f;
        for (int i = 0; i < nvars && !piece.is_zero(); ++i)
            for (int k = 0; k < m[i] && !piece.is_zero(); ++k)
                piece = derivative(piece, i);
        out += piece.scaled(c);
    }
    return out;
}

Catalecticant catalecticant(const Polynomial& dual_f, long e) {
    if (dual_f.is_zero() || !dual_f.is_homogeneous())
        throw InputError("catalecticant requires a nonzero homogeneous dual polynomial");
    const long d = dual_f.degree();
    if (e < 0 || e > d) throw InputError("catalecticant degree out of range");
    const int nvars = dual_f.ring()->var_count();
    const RingPtr src = operator_ring(nvars);

    const std::vector<Monomial> cols = monomials_of_degree(nvars, static_cast<int>(e));
    const std::vector<Monomial> rows = monomials_of_degree(nvars, static_cast<int>(d - e));
    std::map<Monomial, long, MonomialLexDesc> row_index;
    for (size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], static_cast<long>(r));

    QMatrix m(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        const Polynomial image =
            contract(Polynomial::term(src, cols[c], Rational(1)), dual_f);
        for (const auto& [mono, coeff] : image.terms())
            m.at(row_index.at(mono), static_cast<long>(c)) = coeff;
    }

    Catalecticant result;
    result.rank = m.rank();
    for (const auto& kv : m.nullspace()) {
        Polynomial g(src);
        for (size_t c = 0; c < cols.size(); ++c)
            if (!kv[c].is_zero()) g.add_term(cols[c], kv[c]);
        result.kernel_basis.push_back(std::move(g));
    }
    return result;
}

Ideal annihilator_generators(const Polynomial& dual_f) {
    if (dual_f.is_zero() || !dual_f.is_homogeneous())
        throw InputError("annihilator requires a nonzero homogeneous dual polynomial");
    const long d = dual_f.degree();
    const int nvars = dual_f.ring()->var_count();
    const RingPtr src = operator_ring(nvars);

    std::vector<Polynomial> gens;
    auto absorb = [&](const Polynomial& candidate) {
        if (gens.empty() || !ideal_member(candidate, Ideal(src, gens)))
            gens.push_back(candidate);
    };
    for (long e = 1; e <= d; ++e)
        for (const auto& g : catalecticant(dual_f, e).kernel_basis) absorb(g);
    // every operator of degree d+1 annihilates F
    for (const auto& m : monomials_of_degree(nvars, static_cast<int>(d + 1)))
        absorb(Polynomial::term(src, m, Rational(1)));
    return Ideal(src, gens);
}

bool is_apolar(const Ideal& ideal, const Polynomial& dual_f) {
    for (const auto& g : ideal.generators())
        if (!contract(g, dual_f).is_zero()) return false;
    return true;
}

bool is_concise(const Polynomial& dual_f) {
    return catalecticant(dual_f, 1).kernel_basis.empty();
}

namespace {

Polynomial poly_matrix_det(const std::vector<std::vector<Polynomial>>& m, size_t size,
                           const std::vector<size_t>& live_cols, const RingPtr& ring) {
    const size_t row = size - live_cols.size();
    if (live_cols.size() == 1) return m[row][live_cols[0]];
    Polynomial det(ring);
    for (size_t k = 0; k < live_cols.size(); ++k) {
        const Polynomial& entry = m[row][live_cols[k]];
        if (entry.is_zero()) continue;
        std::vector<size_t> rest;
        for (size_t j = 0; j < live_cols.size(); ++j)
            if (j != k) rest.push_back(live_cols[j]);
        const Polynomial minor = poly_matrix_det(m, size, rest, ring);
        if (k % 2 == 0)
            det += entry * minor;
        else
            det -= entry * minor;
    }
    return det;
}

} // namespace

Polynomial hessian_det(const Polynomial& dual_f) {
    if (!dual_f.is_zero() && !dual_f.is_homogeneous())
        throw InputError("Hessian requires a homogeneous dual polynomial");
    const int nvars = dual_f.ring()->var_count();
    std::vector<std::vector<Polynomial>> h(
        static_cast<size_t>(nvars), std::vector<Polynomial>(static_cast<size_t>(nvars)));
    for (int i = 0; i < nvars; ++i) {
        const Polynomial di = derivative(dual_f, i);
        for (int j = 0; j < nvars; ++j)
            h[static_cast<size_t>(i)][static_cast<size_t>(j)] = derivative(di, j);
    }
    std::vector<size_t> all_cols;
    for (int j = 0; j < nvars; ++j) all_cols.push_back(static_cast<size_t>(j));
    return poly_matrix_det(h, static_cast<size_t>(nvars), all_cols, dual_f.ring());
}

RankCertificate cactus_bound_certificate(const Ideal& ideal, const Polynomial& dual_f, long r) {
    if (dual_f.is_zero() || !dual_f.is_homogeneous())
        throw InputError("certificate requires a nonzero homogeneous dual polynomial");
    RankCertificate cert{ideal, dual_f, r, false, false, false};
    cert.apolar = is_apolar(ideal, dual_f);
    cert.constant_value_matches = constant_hilbert_value(ideal) == r;
    const long d = dual_f.degree();
    cert.degree_piece_saturated =
        hilbert_function(ideal, d) == hilbert_function(saturate_irrelevant(ideal), d);
    return cert;
}

QuarticCase parse_quartic_case(const std::string& name) {
    if (name == "1A") return QuarticCase::C1A;
    if (name == "1B") return QuarticCase::C1B;
    if (name == "1C") return QuarticCase::C1C;
    if (name == "2A") return QuarticCase::C2A;
    if (name == "2A0") return QuarticCase::C2A0;
    if (name == "2B") return QuarticCase::C2B;
    if (name == "3A") return QuarticCase::C3A;
    if (name == "3A0") return QuarticCase::C3A0;
    if (name == "3B") return QuarticCase::C3B;
    throw InputError("unknown quartic case '" + name + "'");
}

std::string quartic_case_name(QuarticCase c) {
    switch (c) {
        case QuarticCase::C1A: return "1A";
        case QuarticCase::C1B: return "1B";
        case QuarticCase::C1C: return "1C";
        case QuarticCase::C2A: return "2A";
        case QuarticCase::C2A0: return "2A0";
        case QuarticCase::C2B: return "2B";
        case QuarticCase::C3A: return "3A";
        case QuarticCase::C3A0: return "3A0";
        case QuarticCase::C3B: return "3B";
    }
    throw InputError("unknown quartic case");
}

const std::vector<QuarticCase>& all_quartic_cases() {
    static const std::vector<QuarticCase> cases{
        QuarticCase::C1A, QuarticCase::C1B, QuarticCase::C1C,
        QuarticCase::C2A, QuarticCase::C2A0, QuarticCase::C2B,
        QuarticCase::C3A, QuarticCase::C3A0, QuarticCase::C3B};
    return cases;
}

QuarticFamily quartic_case_family(QuarticCase c, const Rational& a, const Rational& b,
                                  const Polynomial& q) {
    const RingPtr dual = dual_ring(4);
    const RingPtr src = operator_ring(4);
    if (*q.ring() != *dual) throw InputError("Q must live in the 4-variable dual ring");
    if (!q.is_zero()) {
        if (!q.is_homogeneous() || q.degree() != 4)
            throw InputError("Q must be homogeneous of degree 4");
        for (const auto& [m, coeff] : q.terms()) {
            (void)coeff;
            if (m[0] != 0 || m[1] != 0)
                throw InputError("Q must involve only the last two dual variables");
        }
    }

    auto fx = [&](const char* s) { return Polynomial::parse(dual, s); };
    auto op = [&](const char* s) { return Polynomial::parse(src, s); };
    const bool needs_nonzero_a =
        c == QuarticCase::C2A || c == QuarticCase::C3A || c == QuarticCase::C3B;
    const bool needs_zero_a = c == QuarticCase::C2A0 || c == QuarticCase::C3A0;
    if (needs_nonzero_a && a.is_zero())
        throw InputError("case " + quartic_case_name(c) + " requires a != 0");
    if (needs_zero_a && !a.is_zero())
        throw InputError("case " + quartic_case_name(c) + " is the a = 0 variant");

    // readout theta . Q = A*x2 + B*x3
    Polynomial theta(src);
    switch (c) {
        case QuarticCase::C1A:
        case QuarticCase::C1B:
        case QuarticCase::C1C: theta = op("a2^3"); break;
        case QuarticCase::C2A:
        case QuarticCase::C2A0:
        case QuarticCase::C2B: theta = op("a2^2*a3"); break;
        case QuarticCase::C3A:
        case QuarticCase::C3A0:
        case QuarticCase::C3B: theta = op("a2^2*a3 - a2*a3^2"); break;
    }
    const Polynomial readout = contract(theta, q);
    const Rational A = readout.coeff(Monomial::variable(4, 2));
    const Rational B = readout.coeff(Monomial::variable(4, 3));

    Polynomial f(dual);
    std::vector<Polynomial> gens{op("a0^2"), op("a0*a1"), op("a1^2")};
    switch (c) {
        case QuarticCase::C1A:
            f = fx("x0*x2^2*x3 + x1*x2*x3^2") + fx("x0*x3^3").scaled(a) + q;
            gens.push_back(op("a0*a2 - a1*a3"));
            gens.push_back(op("a1*a2^2"));
            gens.push_back(op("a2^3") - op("a0*a2*a3").scaled(A / Rational(2)) -
                           op("a1*a2*a3").scaled(B / Rational(2)));
            break;
        case QuarticCase::C1B:
            f = fx("x0*x2^2*x3 + x1*x3^3") + fx("x0*x2*x3^2").scaled(a) + q;
            gens.push_back(op("a1*a2"));
            gens.push_back(op("a0*a2^2") - op("a1*a3^2").scaled(Rational(1, 3)));
            gens.push_back(op("a2^3") - op("a0*a2*a3").scaled(A / Rational(2)) +
                           op("a1*a3^2").scaled((a * A - B) / Rational(6)));
            break;
        case QuarticCase::C1C:
            f = fx("x0*x2*x3^2 + x1*x3^3") + q;
            gens.push_back(op("a1*a2"));
            gens.push_back(op("a0*a2^2"));
            gens.push_back(op("a2^3") - op("a0*a3^2").scaled(A / Rational(2)) -
                           op("a1*a3^2").scaled(B / Rational(6)));
            break;
        case QuarticCase::C2A:
            f = fx("x0*x2^3 + x1*x2*x3^2") + fx("x0*x3^3").scaled(a) +
                         fx("x1*x3^3").scaled(b) + q;
            gens.push_back(op("a1*a2").scaled(Rational(3) * a) - op("a0*a3"));
            gens.push_back(op("a0*a2*a3"));
            gens.push_back(op("a2^2*a3") - op("a0*a2^2").scaled(A / Rational(6)) -
                           op("a1*a2*a3").scaled(B / Rational(2)));
            break;
        case QuarticCase::C2A0:
            f = fx("x0*x2^3 + x1*x2*x3^2") + fx("x1*x3^3").scaled(b) + q;
            gens.push_back(op("a0*a3"));
            gens.push_back(op("a1*a2^2"));
            gens.push_back(op("a2^2*a3") - op("a0*a2^2").scaled(A / Rational(6)) -
                           op("a1*a2*a3").scaled(B / Rational(2)));
            break;
        case QuarticCase::C2B:
            f = fx("x0*x2^3 + x1*x3^3") + fx("x0*x2*x3^2").scaled(a) + q;
            gens.push_back(op("a1*a2"));
            gens.push_back(op("a0*a2*a3") - op("a1*a3^2").scaled(a / Rational(3)));
            gens.push_back(op("a2^2*a3") - op("a0*a2^2").scaled(A / Rational(6)) -
                           op("a1*a3^2").scaled(B / Rational(6)));
            break;
        case QuarticCase::C3A:
            f = fx("x0*x2^3 + x1*x2^2*x3 + x1*x2*x3^2") + fx("x0*x3^3").scaled(a) +
                         fx("x1*x3^3").scaled(b) + q;
            gens.push_back(op("a1*a2").scaled(a) + op("a0*a2").scaled(a / Rational(3)) -
                           op("a1*a3").scaled(a) + op("a0*a3").scaled(b - Rational(1, 3)));
            gens.push_back(op("a0*a2*a3"));
            gens.push_back(op("a2^2*a3 - a2*a3^2") - op("a0*a2^2").scaled(A / Rational(6)) -
                           op("a1*a2^2").scaled(B / Rational(2)));
            break;
        case QuarticCase::C3A0:
            f = fx("x0*x2^3 + x1*x2^2*x3 + x1*x2*x3^2") + fx("x1*x3^3").scaled(b) + q;
            gens.push_back(op("a0*a3"));
            gens.push_back(op("a1*a2^2") + op("a0*a2^2").scaled(Rational(1, 3)) -
                           op("a1*a2*a3"));
            gens.push_back(op("a2^2*a3 - a2*a3^2") - op("a0*a2^2").scaled(A / Rational(6)) -
                           op("a1*a2^2").scaled(B / Rational(2)));
            break;
        case QuarticCase::C3B:
            f = fx("x0*x2^3 + x1*x3^3") +
                         fx("x0*x2^2*x3 + x0*x2*x3^2").scaled(a) + q;
            gens.push_back(op("a1*a2"));
            gens.push_back(op("a0*a2*a3 - a0*a3^2") - op("a1*a3^2").scaled(a / Rational(3)));
            gens.push_back(op("a2^2*a3 - a2*a3^2") - op("a0*a2^2").scaled(A / Rational(6)) +
                           op("a1*a3^2").scaled((a * A - Rational(3) * B) / Rational(18)));
            break;
    }
    return QuarticFamily{f, Ideal(src, gens), A, B};
}

Polynomial concise_cubic() {
    return Polynomial::parse(
        dual_ring(5), "x0*x3^2 - x1*x3^2 - 2*x1*x3*x4 - x1*x4^2 + x2*x4^2");
}

} // namespace hilb
