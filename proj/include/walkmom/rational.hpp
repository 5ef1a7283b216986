#pragma once

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "walkmom/integer.hpp"

namespace walkmom {

// Exact rational number, always stored in canonical form: positive
// denominator, gcd(|num|, den) == 1. Reduction happens on construction, so
// reading the reduced denominator is a plain accessor.
class Rational {
public:
    Rational() noexcept { mpq_init(q_); }
    Rational(long long v) {
        mpq_init(q_);
        mpq_set_si(q_, static_cast<long>(v), 1);
    }
    Rational(const Integer& n) {
        mpq_init(q_);
        mpz_set(mpq_numref(q_), n.raw());
    }
    // num/den, canonicalized; den must be nonzero.
    Rational(const Integer& num, const Integer& den);

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    Integer num() const {
        Integer r;
        mpz_set(r.raw(), mpq_numref(q_));
        return r;
    }
    Integer den() const {
        Integer r;
        mpz_set(r.raw(), mpq_denref(q_));
        return r;
    }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }

    // "8/3", "-35/3", "35" (denominator omitted when 1).
    std::string str() const;

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend void swap(Rational& a, Rational& b) noexcept { mpq_swap(a.q_, b.q_); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

    mpq_srcptr raw() const { return q_; }

private:
    mpq_t q_;
};

} // namespace walkmom
