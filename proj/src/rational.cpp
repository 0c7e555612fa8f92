#include "hilb/rational.hpp"

#include <ostream>

#include "hilb/errors.hpp"

namespace hilb {

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1); // GMP accepts only '-'
    if (s.empty()) throw InputError("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r;
            r.v_ = mpq_class(mpz_class(s));
            return r;
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (sgn(den) == 0) throw InputError("rational with zero denominator: " + s);
        Rational r;
        r.v_ = mpq_class(num) / mpq_class(den);
        return r;
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational literal: " + s);
    }
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division of rational by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw InputError("inverse of zero rational");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

} // namespace hilb
