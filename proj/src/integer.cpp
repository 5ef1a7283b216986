#include "walkmom/integer.hpp"

#include <cstring>
#include <ostream>
#include <stdexcept>

namespace walkmom {

Integer::Integer(std::string_view decimal) {
    const std::string buf(decimal);
    if (mpz_init_set_str(z_, buf.c_str(), 10) != 0) {
        mpz_clear(z_);
        throw std::invalid_argument("Integer: not a decimal integer: \"" + buf + "\"");
    }
}

long long Integer::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("Integer: value does not fit in 64 bits: " + str());
    return static_cast<long long>(mpz_get_si(z_));
}

std::string Integer::str() const {
    std::string s(mpz_sizeinbase(z_, 10) + 2, '\0');
    mpz_get_str(s.data(), 10, z_);
    s.resize(std::strlen(s.c_str()));
    return s;
}

Integer& Integer::operator/=(const Integer& o) {
    if (o.is_zero()) throw std::domain_error("Integer: division by zero");
    mpz_tdiv_q(z_, z_, o.z_);
    return *this;
}

Integer& Integer::operator%=(const Integer& o) {
    if (o.is_zero()) throw std::domain_error("Integer: modulo by zero");
    mpz_tdiv_r(z_, z_, o.z_);
    return *this;
}

Integer Integer::mod(const Integer& m) const {
    if (m.is_zero()) throw std::domain_error("Integer: modulo by zero");
    Integer r;
    mpz_mod(r.z_, z_, m.z_);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

} // namespace walkmom
