#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hilb {

// A polynomial ring over Q with named variables, standard Z-grading
// (every variable in degree 1).  Rings compare by variable-name lists, so
// independently constructed rings with the same names interoperate.
class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> names);

    // k[<prefix>0, ..., <prefix>{count-1}]
    static std::shared_ptr<const PolyRing> standard(int count, const std::string& prefix = "a");

    int var_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    // -1 when the name is not a variable of this ring.
    int index_of(std::string_view name) const;

    friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.names_ == b.names_; }
    friend bool operator!=(const PolyRing& a, const PolyRing& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

// dim_Q of the degree-d graded piece of the ring: binom(d + n, n) for
// n+1 variables; 0 for d < 0.
long graded_piece_dim(const PolyRing& ring, long d);
long binomial(long n, long k);

// A monomial: exponent vector, one entry per ring variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(static_cast<size_t>(nvars), 0)); }
    static Monomial variable(int nvars, int i, int power = 1);

    int var_count() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    const std::vector<int>& exponents() const { return e_; }
    int degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // this / o; requires o.divides(*this)
    Monomial divided_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

    // Plain lexicographic comparison in variable order; used only as the
    // canonical storage/serialization order, independent of any MonomialOrder.
    static int lex_cmp(const Monomial& a, const Monomial& b);

private:
    std::vector<int> e_;
};

// Comparator putting lex-larger monomials first (canonical term order for
// printing and term maps).
struct MonomialLexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::lex_cmp(a, b) > 0;
    }
};

// All monomials of the given total degree, in descending canonical order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

} // namespace hilb
