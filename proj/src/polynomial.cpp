#include "hilb/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "hilb/errors.hpp"

namespace hilb {

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial f(std::move(ring));
    if (!c.is_zero()) f.terms_.emplace(Monomial::one(f.ring_->var_count()), c);
    return f;
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Rational& c) {
    Polynomial f(std::move(ring));
    if (m.var_count() != f.ring_->var_count())
        throw InputError("monomial does not match ring variable count");
    if (!c.is_zero()) f.terms_.emplace(m, c);
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, int i, int power) {
    const int n = ring->var_count();
    if (i < 0 || i >= n) throw InputError("variable index out of range");
    return term(std::move(ring), Monomial::variable(n, i, power), Rational(1));
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::homogeneous_component(int d) const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) out.terms_.emplace(m, c);
    return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    Polynomial out(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [mm, k] : terms_) out.terms_.emplace(mm * m, k * c);
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ && b.ring_ && *a.ring_ != *b.ring_) return false;
    return a.terms_ == b.terms_;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring() || !b.ring() || *a.ring() != *b.ring())
        throw InputError("ring mismatch between polynomials");
}

void require_ring(const Polynomial& f, const PolyRing& ring, const char* what) {
    if (!f.ring() || *f.ring() != ring)
        throw InputError(std::string("ring mismatch: ") + what);
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string monomial_str(const PolyRing& ring, const Monomial& m) {
    std::string out;
    for (int i = 0; i < m.var_count(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

} // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string ms = m.is_one() ? "" : monomial_str(*ring_, m);
        if (ms.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += ms;
        } else {
            out += mag.str() + "*" + ms;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Lexer {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
    bool take_if(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw InputError("expected a number in polynomial at position " +
                                           std::to_string(start) + ": " + std::string(s));
        return std::string(s.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw InputError("expected a variable in polynomial at position " +
                                           std::to_string(start) + ": " + std::string(s));
        return std::string(s.substr(start, pos - start));
    }
};

} // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
    Lexer lx{text};
    Polynomial out(ring);
    const int n = ring->var_count();

    bool expect_term = true;
    Rational sign(1);
    if (lx.done()) throw InputError("empty polynomial text");
    if (lx.take_if('-')) sign = Rational(-1);
    else lx.take_if('+');

    while (true) {
        // one term: optional coefficient, optional monomial
        Rational coeff = sign;
        bool saw_factor = false;
        std::vector<int> exps(static_cast<size_t>(n), 0);

        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            std::string num = lx.number();
            std::string lit = num;
            if (lx.take_if('/')) lit += "/" + lx.number();
            coeff *= Rational::parse(lit);
            saw_factor = true;
            if (lx.take_if('*')) saw_factor = false; // factors follow
        }
        if (!saw_factor || std::isalpha(static_cast<unsigned char>(lx.peek()))) {
            while (std::isalpha(static_cast<unsigned char>(lx.peek()))) {
                std::string name = lx.identifier();
                int idx = ring->index_of(name);
                if (idx < 0) throw InputError("unknown variable '" + name + "' in polynomial");
                int e = 1;
                if (lx.take_if('^')) e = std::stoi(lx.number());
                exps[static_cast<size_t>(idx)] += e;
                if (!lx.take_if('*')) break;
            }
        }
        out.add_term(Monomial(exps), coeff);
        expect_term = false;

        if (lx.done()) break;
        char c = lx.take();
        if (c == '+') sign = Rational(1);
        else if (c == '-') sign = Rational(-1);
        else throw InputError(std::string("unexpected character '") + c + "' in polynomial: " +
                              std::string(text));
        expect_term = true;
        if (lx.done()) break;
    }
    if (expect_term) throw InputError("dangling sign in polynomial: " + std::string(text));
    return out;
}

Polynomial apply_linear_substitution(const Polynomial& f,
                                     const std::vector<std::vector<Rational>>& M,
                                     bool check_invertible) {
    const RingPtr& ring = f.ring();
    const int n = ring->var_count();
    if (static_cast<int>(M.size()) != n)
        throw InputError("substitution matrix must have one row per variable");
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != n)
            throw InputError("substitution matrix must be square");

    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Polynomial img(ring);
        for (int j = 0; j < n; ++j)
            img.add_term(Monomial::variable(n, j), M[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        images.push_back(std::move(img));
    }
    if (check_invertible) {
        // forward declaration-free local determinant via expansion is avoided;
        // linalg provides it, but a direct Gauss pass here keeps layering flat.
        std::vector<std::vector<Rational>> A(M);
        bool singular = false;
        int row = 0;
        for (int col = 0; col < n && row < n; ++col) {
            int pivot = -1;
            for (int r = row; r < n; ++r)
                if (!A[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) { pivot = r; break; }
            if (pivot < 0) { singular = true; break; }
            std::swap(A[static_cast<size_t>(pivot)], A[static_cast<size_t>(row)]);
            for (int r = row + 1; r < n; ++r) {
                const Rational factor = A[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                                        A[static_cast<size_t>(row)][static_cast<size_t>(col)];
                for (int c = col; c < n; ++c)
                    A[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                        factor * A[static_cast<size_t>(row)][static_cast<size_t>(c)];
            }
            ++row;
        }
        if (singular || row < n) throw InputError("substitution matrix is not invertible");
    }

    Polynomial out(ring);
    for (const auto& [m, c] : f.terms()) {
        Polynomial term = Polynomial::constant(ring, c);
        for (int i = 0; i < n; ++i)
            for (int e = 0; e < m[i]; ++e) term = term * images[static_cast<size_t>(i)];
        out += term;
    }
    return out;
}

} // namespace hilb
