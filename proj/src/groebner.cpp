#include "hilb/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hilb/errors.hpp"

namespace hilb {

Limits& global_limits() {
    static Limits limits;
    return limits;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements.size());
    for (const auto& g : elements) out.push_back(leading_monomial(g, order));
    return out;
}

namespace {

struct OrderDesc {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return order->compare(a, b) > 0;
    }
};

using WorkPoly = std::map<Monomial, Rational, OrderDesc>;

WorkPoly to_work(const Polynomial& f, const MonomialOrder& order) {
    WorkPoly w(OrderDesc{&order});
    for (const auto& [m, c] : f.terms()) w.emplace(m, c);
    return w;
}

void work_axpy(WorkPoly& w, const Rational& scale, const Monomial& shift, const Polynomial& g) {
    for (const auto& [m, c] : g.terms()) {
        const Monomial mm = m * shift;
        auto [it, inserted] = w.emplace(mm, scale * c);
        if (!inserted) {
            it->second += scale * c;
            if (it->second.is_zero()) w.erase(it);
        }
    }
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& order) {
    for (const auto& g : divisors) {
        require_same_ring(f, g);
        if (g.is_zero()) throw InputError("zero divisor polynomial in normal form");
    }
    std::vector<Monomial> lts;
    lts.reserve(divisors.size());
    for (const auto& g : divisors) lts.push_back(leading_monomial(g, order));
    std::vector<Rational> lcs;
    lcs.reserve(divisors.size());
    for (size_t i = 0; i < divisors.size(); ++i) lcs.push_back(divisors[i].coeff(lts[i]));

    WorkPoly work = to_work(f, order);
    Polynomial remainder(f.ring());
    while (!work.empty()) {
        const auto [m, c] = *work.begin();
        bool reduced = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (lts[i].divides(m)) {
                const Rational scale = -(c / lcs[i]);
                work_axpy(work, scale, m.divided_by(lts[i]), divisors[i]);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(m, c);
            work.erase(work.begin());
        }
    }
    return remainder;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    const Monomial& lf = leading_monomial(f, order);
    const Monomial& lg = leading_monomial(g, order);
    const Monomial l = Monomial::lcm(lf, lg);
    const Polynomial a = f.times_term(l.divided_by(lf), f.coeff(lf).inverse());
    const Polynomial b = g.times_term(l.divided_by(lg), g.coeff(lg).inverse());
    return a - b;
}

struct Pair {
    int degree; // lcm degree
    int i, j;
    bool operator<(const Pair& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

// Minimalize + tail-reduce + make monic + sort: the reduced basis.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const MonomialOrder& order) {
    // drop elements whose leading monomial is divisible by another's
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        const Monomial& li = leading_monomial(basis[i], order);
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& lj = leading_monomial(basis[j], order);
            if (lj.divides(li) && (li != lj || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(make_monic(basis[i], order));

    // tail-reduce each element against the others
    std::vector<Polynomial> reduced(minimal);
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(reduced.size() - 1);
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = make_monic(normal_form(reduced[i], others, order), order);
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(leading_monomial(a, order), leading_monomial(b, order));
    });
    return reduced;
}

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const Limits& limits, std::optional<int> up_to_degree,
                         bool require_homogeneous) {
    RingPtr ring;
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!ring) ring = g.ring();
        else if (*ring != *g.ring()) throw InputError("ring mismatch among generators");
        if (require_homogeneous && !g.is_homogeneous())
            throw InputError("Groebner input must be homogeneous: " + g.str());
        basis.push_back(make_monic(g, order));
    }
    if (!ring) {
        if (gens.empty()) throw InputError("Groebner basis of an empty generator list");
        ring = gens.front().ring();
    }
    if (static_cast<int>(order.var_count()) != ring->var_count())
        throw InputError("order variable count does not match ring");

    std::set<Pair> queue;
    auto push_pairs_with_last = [&]() {
        const int last = static_cast<int>(basis.size()) - 1;
        for (int i = 0; i < last; ++i) {
            queue.insert(Pair{Monomial::lcm(leading_monomial(basis[i], order),
                                            leading_monomial(basis[last], order))
                                  .degree(),
                              i, last});
        }
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j)
        for (int i = 0; i < j; ++i)
            queue.insert(Pair{Monomial::lcm(leading_monomial(basis[i], order),
                                            leading_monomial(basis[j], order))
                                  .degree(),
                              i, j});

    while (!queue.empty()) {
        const Pair p = *queue.begin();
        queue.erase(queue.begin());
        const Monomial& li = leading_monomial(basis[p.i], order);
        const Monomial& lj = leading_monomial(basis[p.j], order);
        if (li.coprime_with(lj)) continue; // first Buchberger criterion
        if (up_to_degree && p.degree > *up_to_degree) continue;
        if (p.degree > limits.max_degree)
            throw LimitError("S-pair degree " + std::to_string(p.degree) +
                             " exceeds cap " + std::to_string(limits.max_degree));
        const Polynomial s = s_polynomial(basis[p.i], basis[p.j], order);
        const Polynomial r = normal_form(s, basis, order);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r, order));
        if (static_cast<int>(basis.size()) > limits.max_basis)
            throw LimitError("Groebner basis size exceeds cap " +
                             std::to_string(limits.max_basis));
        push_pairs_with_last();
    }

    GroebnerBasis gb{reduce_basis(std::move(basis), order), order, true};
    return gb;
}

bool is_groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    std::vector<Polynomial> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) return true;
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            const Polynomial s = s_polynomial(basis[i], basis[j], order);
            if (!normal_form(s, basis, order).is_zero()) return false;
        }
    }
    return true;
}

} // namespace hilb
