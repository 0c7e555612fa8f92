#include "hilb/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hilb/errors.hpp"

namespace hilb {

namespace {
std::vector<int> identity_perm(int nvars) {
    std::vector<int> p(static_cast<size_t>(nvars));
    std::iota(p.begin(), p.end(), 0);
    return p;
}
} // namespace

MonomialOrder::MonomialOrder(Kind kind, std::vector<int> perm, std::vector<long> weights)
    : kind_(kind), perm_(std::move(perm)), weights_(std::move(weights)) {
    if (perm_.empty()) throw InputError("monomial order needs at least one variable");
    std::vector<int> sorted(perm_);
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i))
            throw InputError("monomial order must list every ring variable exactly once");
    if (kind_ == Kind::WeightedLex) {
        if (weights_.size() != perm_.size())
            throw InputError("weighted order needs one weight per variable");
        for (long w : weights_)
            if (w <= 0) throw InputError("weighted order weights must be positive");
    }
}

MonomialOrder MonomialOrder::lex(int nvars) { return lex(identity_perm(nvars)); }
MonomialOrder MonomialOrder::grevlex(int nvars) { return grevlex(identity_perm(nvars)); }

MonomialOrder MonomialOrder::lex(std::vector<int> perm) {
    return MonomialOrder(Kind::Lex, std::move(perm), {});
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> perm) {
    return MonomialOrder(Kind::GrevLex, std::move(perm), {});
}

MonomialOrder MonomialOrder::weighted_lex(std::vector<long> weights, std::vector<int> perm) {
    return MonomialOrder(Kind::WeightedLex, std::move(perm), std::move(weights));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
    case Kind::Lex:
        for (int p : perm_) {
            if (a[p] != b[p]) return a[p] < b[p] ? -1 : 1;
        }
        return 0;
    case Kind::GrevLex: {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        // tie: smaller exponent on the least significant variable wins
        for (size_t i = perm_.size(); i-- > 0;) {
            const int p = perm_[i];
            if (a[p] != b[p]) return a[p] > b[p] ? -1 : 1;
        }
        return 0;
    }
    case Kind::WeightedLex: {
        long wa = 0, wb = 0;
        for (size_t i = 0; i < perm_.size(); ++i) {
            wa += weights_[i] * a[perm_[i]];
            wb += weights_[i] * b[perm_[i]];
        }
        if (wa != wb) return wa < wb ? -1 : 1;
        for (int p : perm_) {
            if (a[p] != b[p]) return a[p] < b[p] ? -1 : 1;
        }
        return 0;
    }
    }
    return 0;
}

MonomialOrder MonomialOrder::parse(const PolyRing& ring, std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw InputError("order text must look like kind:vars, got: " + std::string(text));
    const std::string kind(text.substr(0, colon));
    std::string rest(text.substr(colon + 1));

    std::vector<long> weights;
    if (kind == "wlex") {
        const auto slash = rest.find('/');
        if (slash == std::string::npos)
            throw InputError("wlex order needs weights/vars, got: " + std::string(text));
        std::stringstream ws(rest.substr(0, slash));
        std::string tok;
        while (std::getline(ws, tok, ',')) {
            try {
                weights.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw InputError("bad weight '" + tok + "' in order: " + std::string(text));
            }
        }
        rest = rest.substr(slash + 1);
    }

    std::vector<int> perm;
    std::stringstream vs(rest);
    std::string name;
    while (std::getline(vs, name, ',')) {
        // trim
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())))
            name.erase(name.begin());
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.pop_back();
        const int idx = ring.index_of(name);
        if (idx < 0) throw InputError("unknown variable '" + name + "' in order");
        perm.push_back(idx);
    }
    if (static_cast<int>(perm.size()) != ring.var_count())
        throw InputError("order must list every ring variable exactly once");

    if (kind == "lex") return lex(std::move(perm));
    if (kind == "grevlex") return grevlex(std::move(perm));
    if (kind == "wlex") return weighted_lex(std::move(weights), std::move(perm));
    throw InputError("unknown order kind: " + kind);
}

std::string MonomialOrder::str(const PolyRing& ring) const {
    std::string out;
    switch (kind_) {
    case Kind::Lex: out = "lex:"; break;
    case Kind::GrevLex: out = "grevlex:"; break;
    case Kind::WeightedLex: out = "wlex:"; break;
    }
    if (kind_ == Kind::WeightedLex) {
        for (size_t i = 0; i < weights_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(weights_[i]);
        }
        out += "/";
    }
    for (size_t i = 0; i < perm_.size(); ++i) {
        if (i) out += ",";
        out += ring.name(perm_[i]);
    }
    return out;
}

std::string MonomialOrder::key() const {
    std::string out;
    switch (kind_) {
    case Kind::Lex: out = "lex:"; break;
    case Kind::GrevLex: out = "grevlex:"; break;
    case Kind::WeightedLex: out = "wlex:"; break;
    }
    if (kind_ == Kind::WeightedLex) {
        for (size_t i = 0; i < weights_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(weights_[i]);
        }
        out += "/";
    }
    for (size_t i = 0; i < perm_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(perm_[i]);
    }
    return out;
}

const Monomial& leading_monomial(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw InputError("leading monomial of the zero polynomial");
    auto it = f.terms().begin();
    const Monomial* best = &it->first;
    for (++it; it != f.terms().end(); ++it)
        if (order.greater(it->first, *best)) best = &it->first;
    return *best;
}

Rational leading_coeff(const Polynomial& f, const MonomialOrder& order) {
    return f.coeff(leading_monomial(f, order));
}

Polynomial make_monic(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) return f;
    return f.scaled(leading_coeff(f, order).inverse());
}

MonomialOrder default_order(const PolyRing& ring) {
    return MonomialOrder::grevlex(ring.var_count());
}

} // namespace hilb
