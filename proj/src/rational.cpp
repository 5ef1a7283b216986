#include "walkmom/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace walkmom {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

std::string Rational::str() const {
    std::string s = num().str();
    if (!is_integer()) {
        s += '/';
        s += den().str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

} // namespace walkmom
