#include "hilb/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hilb/errors.hpp"

namespace hilb {

struct Ideal::Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> by_key;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    if (!ring_) throw InputError("ideal needs a ring");
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (*g.ring() != *ring_) throw InputError("ring mismatch among ideal generators");
        if (!g.is_homogeneous())
            throw InputError("ideal generators must be homogeneous: " + g.str());
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(RingPtr ring) {
    std::vector<Polynomial> gens{Polynomial::constant(ring, Rational(1))};
    return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::span(RingPtr ring, const std::vector<std::string>& gen_texts) {
    std::vector<Polynomial> gens;
    gens.reserve(gen_texts.size());
    for (const auto& t : gen_texts) gens.push_back(Polynomial::parse(ring, t));
    return Ideal(std::move(ring), std::move(gens));
}

bool Ideal::is_monomial_ideal() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Polynomial& g) { return g.is_monomial(); });
}

std::shared_ptr<const GroebnerBasis> Ideal::reduced_gb(const MonomialOrder& order) const {
    const std::string key = order.key();
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->by_key.find(key);
    if (it != cache_->by_key.end()) return it->second;
    std::shared_ptr<const GroebnerBasis> gb;
    if (gens_.empty()) {
        gb = std::make_shared<const GroebnerBasis>(GroebnerBasis{{}, order, true});
    } else {
        gb = std::make_shared<const GroebnerBasis>(buchberger(gens_, order));
    }
    cache_->by_key.emplace(key, gb);
    return gb;
}

std::shared_ptr<const GroebnerBasis> Ideal::reduced_gb() const {
    return reduced_gb(default_order(*ring_));
}

void require_same_ring(const Ideal& a, const Ideal& b) {
    if (*a.ring() != *b.ring()) throw InputError("ring mismatch between ideals");
}

// ---------------------------------------------------------------------------
// sums, products, powers

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    std::vector<Polynomial> gens(a.generators());
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    std::vector<Polynomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

namespace {
Ideal from_monomials(const RingPtr& ring, const std::vector<Monomial>& ms);
} // namespace

Ideal ideal_power(const Ideal& a, int k) {
    if (k < 0) throw InputError("negative ideal power");
    if (k == 0) return Ideal::unit(a.ring());
    if (k == 1) return a;
    const auto& gens = a.generators();
    if (gens.empty()) return a;

    // products over multisets {i1 <= ... <= ik} of generator indices
    if (a.is_monomial_ideal()) {
        std::vector<Monomial> ms;
        std::vector<Monomial> stack;
        auto rec = [&](auto&& self, size_t from, int left, const Monomial& acc) -> void {
            if (left == 0) {
                ms.push_back(acc);
                return;
            }
            for (size_t i = from; i < gens.size(); ++i)
                self(self, i, left - 1, acc * gens[i].terms().begin()->first);
        };
        rec(rec, 0, k, Monomial::one(a.ring()->var_count()));
        return from_monomials(a.ring(), minimal_monomial_generators(std::move(ms)));
    }

    std::vector<Polynomial> out;
    auto rec = [&](auto&& self, size_t from, int left, const Polynomial& acc) -> void {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        for (size_t i = from; i < gens.size(); ++i) self(self, i, left - 1, acc * gens[i]);
    };
    rec(rec, 0, k, Polynomial::constant(a.ring(), Rational(1)));
    return Ideal(a.ring(), std::move(out));
}

// ---------------------------------------------------------------------------
// monomial-ideal fast paths

std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> ms) {
    std::vector<Monomial> out;
    for (const auto& m : ms) {
        bool redundant = false;
        for (const auto& o : ms) {
            if (&o == &m) continue;
            if (o.divides(m) && (o != m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return Monomial::lex_cmp(x, y) > 0;
    });
    return out;
}

namespace {

std::vector<Monomial> monomial_gens(const Ideal& a) {
    std::vector<Monomial> ms;
    ms.reserve(a.generators().size());
    for (const auto& g : a.generators()) ms.push_back(g.terms().begin()->first);
    return minimal_monomial_generators(std::move(ms));
}

Ideal from_monomials(const RingPtr& ring, const std::vector<Monomial>& ms) {
    std::vector<Polynomial> gens;
    gens.reserve(ms.size());
    for (const auto& m : ms) gens.push_back(Polynomial::term(ring, m, Rational(1)));
    return Ideal(ring, std::move(gens));
}

Ideal monomial_intersection(const Ideal& a, const Ideal& b) {
    std::vector<Monomial> out;
    for (const auto& ma : monomial_gens(a))
        for (const auto& mb : monomial_gens(b)) out.push_back(Monomial::lcm(ma, mb));
    return from_monomials(a.ring(), minimal_monomial_generators(std::move(out)));
}

Ideal monomial_colon_by_monomial(const Ideal& a, const Monomial& u) {
    std::vector<Monomial> out;
    for (const auto& g : monomial_gens(a)) out.push_back(g.divided_by(Monomial::gcd(g, u)));
    return from_monomials(a.ring(), minimal_monomial_generators(std::move(out)));
}

// ---------------------------------------------------------------------------
// elimination machinery

struct ExtendedRing {
    RingPtr ring;   // [aux, original vars...]
    RingPtr base;   // original ring
};

ExtendedRing extend_ring(const RingPtr& base) {
    std::string aux = "t";
    while (base->index_of(aux) >= 0) aux += "_";
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(base->var_count()) + 1);
    names.push_back(aux);
    names.insert(names.end(), base->names().begin(), base->names().end());
    return ExtendedRing{std::make_shared<const PolyRing>(std::move(names)), base};
}

Polynomial lift(const ExtendedRing& ext, const Polynomial& f, int aux_power) {
    Polynomial out(ext.ring);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e;
        e.reserve(m.exponents().size() + 1);
        e.push_back(aux_power);
        e.insert(e.end(), m.exponents().begin(), m.exponents().end());
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

Polynomial drop_aux(const ExtendedRing& ext, const Polynomial& f) {
    Polynomial out(ext.base);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(m.exponents().begin() + 1, m.exponents().end());
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

// Generators of a cap b via Groebner basis of t*a + (1-t)*b under a block
// order eliminating t.
Ideal elimination_intersection(const Ideal& a, const Ideal& b) {
    const ExtendedRing ext = extend_ring(a.ring());
    const Polynomial t = Polynomial::variable(ext.ring, 0);
    const Polynomial one_minus_t =
        Polynomial::constant(ext.ring, Rational(1)) - t;

    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(t * lift(ext, f, 0));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * lift(ext, g, 0));
    if (gens.empty()) return Ideal::zero(a.ring());

    const MonomialOrder elim = MonomialOrder::lex(ext.ring->var_count());
    const GroebnerBasis gb =
        buchberger(gens, elim, global_limits(), std::nullopt, /*require_homogeneous=*/false);

    std::vector<Polynomial> result;
    for (const auto& g : gb.elements) {
        bool has_aux = false;
        for (const auto& [m, c] : g.terms())
            if (m[0] > 0) { has_aux = true; break; }
        if (!has_aux) result.push_back(drop_aux(ext, g));
    }
    return Ideal(a.ring(), std::move(result));
}

// Exact quotient g / f (throws if f does not divide g).
Polynomial exact_divide(const Polynomial& g, const Polynomial& f, const MonomialOrder& order) {
    Polynomial rem = g;
    Polynomial quotient(g.ring());
    const Monomial& lf = leading_monomial(f, order);
    const Rational lc = f.coeff(lf);
    while (!rem.is_zero()) {
        const Monomial& lr = leading_monomial(rem, order);
        if (!lf.divides(lr))
            throw InputError("polynomial division is not exact: " + g.str() + " by " + f.str());
        const Monomial q = lr.divided_by(lf);
        const Rational c = rem.coeff(lr) / lc;
        quotient.add_term(q, c);
        rem -= f.times_term(q, c);
    }
    return quotient;
}

} // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(a.ring());
    if (a.is_monomial_ideal() && b.is_monomial_ideal()) return monomial_intersection(a, b);
    return elimination_intersection(a, b);
}

Ideal ideal_colon(const Ideal& a, const Polynomial& f) {
    require_ring(f, *a.ring(), "colon divisor");
    if (f.is_zero()) throw InputError("colon by the zero polynomial");
    if (!f.is_homogeneous()) throw InputError("colon divisor must be homogeneous");
    if (f.degree() == 0) return a;
    if (a.is_monomial_ideal() && f.is_monomial())
        return monomial_colon_by_monomial(a, f.terms().begin()->first);
    const Ideal fa(a.ring(), {f});
    const Ideal meet = ideal_intersection(a, fa);
    const MonomialOrder order = default_order(*a.ring());
    std::vector<Polynomial> gens;
    gens.reserve(meet.generators().size());
    for (const auto& g : meet.generators()) gens.push_back(exact_divide(g, f, order));
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    if (b.is_zero_ideal()) return Ideal::unit(a.ring());
    bool first = true;
    Ideal result = Ideal::zero(a.ring());
    for (const auto& g : b.generators()) {
        const Ideal c = ideal_colon(a, g);
        result = first ? c : ideal_intersection(result, c);
        first = false;
    }
    return result;
}

Ideal colon_irrelevant(const Ideal& a) {
    const int n = a.ring()->var_count();
    Ideal result = ideal_colon(a, Polynomial::variable(a.ring(), 0));
    for (int i = 1; i < n; ++i)
        result = ideal_intersection(result, ideal_colon(a, Polynomial::variable(a.ring(), i)));
    return result;
}

Ideal saturate_irrelevant(const Ideal& a) {
    Ideal current = a;
    for (int iter = 0; iter < 1024; ++iter) {
        Ideal next = colon_irrelevant(current);
        if (ideal_equal(next, current)) return current;
        current = std::move(next);
    }
    throw LimitError("saturation did not stabilize");
}

bool is_saturated(const Ideal& a) {
    return ideal_equal(a, colon_irrelevant(a));
}

Ideal monomial_radical(const Ideal& a) {
    if (!a.is_monomial_ideal())
        throw InputError("monomial radical requires a monomial ideal");
    std::vector<Monomial> out;
    for (const auto& m : monomial_gens(a)) {
        std::vector<int> e(m.exponents());
        for (int& x : e)
            if (x > 1) x = 1;
        out.emplace_back(std::move(e));
    }
    return [&] {
        std::vector<Polynomial> gens;
        for (const auto& m : minimal_monomial_generators(std::move(out)))
            gens.push_back(Polynomial::term(a.ring(), m, Rational(1)));
        return Ideal(a.ring(), std::move(gens));
    }();
}

Ideal points_ideal(RingPtr ring, const std::vector<std::vector<Rational>>& points) {
    const int n = ring->var_count();
    if (points.empty()) throw InputError("points_ideal needs at least one point");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != n)
            throw InputError("point coordinate count does not match ring");
        if (std::all_of(p.begin(), p.end(), [](const Rational& c) { return c.is_zero(); }))
            throw InputError("projective point with all coordinates zero");
    }
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = i + 1; j < points.size(); ++j) {
            bool proportional = true;
            for (int u = 0; u < n && proportional; ++u)
                for (int v = u + 1; v < n && proportional; ++v)
                    if (points[i][static_cast<size_t>(u)] * points[j][static_cast<size_t>(v)] !=
                        points[i][static_cast<size_t>(v)] * points[j][static_cast<size_t>(u)])
                        proportional = false;
            if (proportional)
                throw InputError("duplicate projective points at positions " + std::to_string(i) +
                                 " and " + std::to_string(j));
        }
    }

    auto point_prime = [&](const std::vector<Rational>& p) {
        int pivot = 0;
        while (p[static_cast<size_t>(pivot)].is_zero()) ++pivot;
        std::vector<Polynomial> gens;
        for (int i = 0; i < n; ++i) {
            if (i == pivot) continue;
            Polynomial g = Polynomial::variable(ring, i);
            g -= Polynomial::variable(ring, pivot)
                     .scaled(p[static_cast<size_t>(i)] / p[static_cast<size_t>(pivot)]);
            gens.push_back(std::move(g));
        }
        return Ideal(ring, std::move(gens));
    };

    Ideal result = point_prime(points[0]);
    for (size_t i = 1; i < points.size(); ++i)
        result = ideal_intersection(result, point_prime(points[i]));
    // canonical generators: the reduced basis under the default order
    return Ideal(ring, result.reduced_gb()->elements);
}

bool ideal_member(const Polynomial& f, const Ideal& a, const MonomialOrder& order) {
    require_ring(f, *a.ring(), "membership candidate");
    if (f.is_zero()) return true;
    return normal_form(f, a.reduced_gb(order)->elements, order).is_zero();
}

bool ideal_member(const Polynomial& f, const Ideal& a) {
    return ideal_member(f, a, default_order(*a.ring()));
}

Ideal initial_ideal(const Ideal& a, const MonomialOrder& order) {
    const auto gb = a.reduced_gb(order);
    std::vector<Polynomial> gens;
    gens.reserve(gb->elements.size());
    for (const auto& g : gb->elements)
        gens.push_back(Polynomial::term(a.ring(), leading_monomial(g, order), Rational(1)));
    return Ideal(a.ring(), std::move(gens));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    const auto ga = a.reduced_gb();
    const auto gc = b.reduced_gb();
    return ga->elements == gc->elements;
}

} // namespace hilb
