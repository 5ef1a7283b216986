#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace walkmom {

// Arbitrary-precision signed integer with value semantics. A thin RAII
// wrapper over GMP's mpz_t; every operation is exact.
class Integer {
public:
    Integer() noexcept { mpz_init(z_); }
    Integer(long long v) { mpz_init_set_si(z_, static_cast<long>(v)); }
    explicit Integer(std::string_view decimal);

    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    bool even() const { return mpz_even_p(z_) != 0; }
    bool odd() const { return mpz_odd_p(z_) != 0; }

    bool fits_int64() const { return mpz_fits_slong_p(z_) != 0; }
    // Throws std::overflow_error when the value does not fit.
    long long to_int64() const;

    std::string str() const;

    Integer& operator+=(const Integer& o) { mpz_add(z_, z_, o.z_); return *this; }
    Integer& operator-=(const Integer& o) { mpz_sub(z_, z_, o.z_); return *this; }
    Integer& operator*=(const Integer& o) { mpz_mul(z_, z_, o.z_); return *this; }
    // Quotient truncated toward zero; remainder carries the dividend's sign.
    Integer& operator/=(const Integer& o);
    Integer& operator%=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { a += b; return a; }
    friend Integer operator-(Integer a, const Integer& b) { a -= b; return a; }
    friend Integer operator*(Integer a, const Integer& b) { a *= b; return a; }
    friend Integer operator/(Integer a, const Integer& b) { a /= b; return a; }
    friend Integer operator%(Integer a, const Integer& b) { a %= b; return a; }

    Integer operator-() const {
        Integer r;
        mpz_neg(r.z_, z_);
        return r;
    }

    friend bool operator==(const Integer& a, const Integer& b) {
        return mpz_cmp(a.z_, b.z_) == 0;
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        const int c = mpz_cmp(a.z_, b.z_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Non-negative remainder in [0, |m|); m must be nonzero.
    Integer mod(const Integer& m) const;

    friend Integer abs(Integer a) {
        mpz_abs(a.z_, a.z_);
        return a;
    }
    friend Integer gcd(const Integer& a, const Integer& b) {
        Integer r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer lcm(const Integer& a, const Integer& b) {
        Integer r;
        mpz_lcm(r.z_, a.z_, b.z_);
        return r;
    }
    // a/b where b is known to divide a exactly.
    friend Integer exact_div(const Integer& a, const Integer& b) {
        Integer r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }
    bool divides(const Integer& a) const { return mpz_divisible_p(a.z_, z_) != 0; }

    static Integer pow(const Integer& base, unsigned long e) {
        Integer r;
        mpz_pow_ui(r.z_, base.z_, e);
        return r;
    }

    friend void swap(Integer& a, Integer& b) noexcept { mpz_swap(a.z_, b.z_); }
    friend std::ostream& operator<<(std::ostream& os, const Integer& v);

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

} // namespace walkmom
