#include "hilb/ring.hpp"

#include <algorithm>

#include "hilb/errors.hpp"

namespace hilb {

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InputError("ring needs at least one variable");
    for (const auto& n : names_) {
        if (n.empty()) throw InputError("empty variable name");
        if (std::count(names_.begin(), names_.end(), n) != 1)
            throw InputError("duplicate variable name: " + n);
    }
}

std::shared_ptr<const PolyRing> PolyRing::standard(int count, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
    return std::make_shared<const PolyRing>(std::move(names));
}

int PolyRing::index_of(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long result = 1;
    for (long i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

long graded_piece_dim(const PolyRing& ring, long d) {
    if (d < 0) return 0;
    const long n = ring.var_count() - 1;
    return binomial(d + n, n);
}

Monomial Monomial::variable(int nvars, int i, int power) {
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e.at(static_cast<size_t>(i)) = power;
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    int d = 0;
    for (int x : e_) d += x;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<int> e(e_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    std::vector<int> e(e_);
    for (size_t i = 0; i < e.size(); ++i) e[i] -= o.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.e_);
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.e_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.e_);
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.e_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime_with(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

int Monomial::lex_cmp(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e_.size(); ++i) {
        if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    }
    return 0;
}

namespace {
void enumerate(int nvars, int pos, int remaining, std::vector<int>& current,
               std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        current[static_cast<size_t>(pos)] = remaining;
        out.emplace_back(current);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current[static_cast<size_t>(pos)] = e;
        enumerate(nvars, pos + 1, remaining - e, current, out);
    }
}
} // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> current(static_cast<size_t>(nvars), 0);
    enumerate(nvars, 0, degree, current, out);
    return out;
}

} // namespace hilb
