#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "walkmom/integer.hpp"

namespace walkmom {

// Prime factorization of a positive integer: primes strictly ascending,
// exponents >= 1, empty for 1.
class Factorization {
public:
    struct Entry {
        Integer prime;
        std::int64_t exponent;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    Factorization() = default;
    // Validates ordering, primality and positivity of exponents.
    static Factorization from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    // Product of p^e over all entries (1 when empty).
    Integer value() const;
    std::int64_t exponent_of(const Integer& p) const;

    // "2^4*3^2*5*7"; "1" when empty.
    std::string str() const;

    // Elementwise max of exponents.
    friend Factorization fact_lcm(const Factorization& a, const Factorization& b);

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<Entry> entries_;
};

// C(n, k). n must be >= 0; returns 0 when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);

// k! / (parts_0! * ... * parts_{n-1}!). Every part must be >= 0 and the parts
// must sum to k.
Integer multinomial(std::int64_t k, std::span<const std::int64_t> parts);

// Deterministic for the sizes this library handles.
bool is_prime(std::int64_t n);
bool is_prime(const Integer& n);

// Largest e with p^e | x. x must be nonzero, p prime.
std::int64_t p_adic_valuation(const Integer& x, std::int64_t p);

// v_p(n!) by Legendre's formula, sum of floor(n / p^i). n >= 0, p prime.
std::int64_t factorial_valuation(std::int64_t n, std::int64_t p);

// Number of carries when adding k and n-k in base p; equals v_p(C(n,k)).
// Requires 0 <= k <= n and p prime.
std::int64_t kummer_carries(std::int64_t n, std::int64_t k, std::int64_t p);

// Trial-division factorization. Intended for the small and smooth values this
// library produces (reduced denominators, binomials, factorials); inputs with
// a composite cofactor beyond the trial bound are rejected.
Factorization factorize(const Integer& n);

// gcd((j-nu+1)...j, (j+1)...(j+nu)) of the two nu-term runs around j.
// Requires 1 <= nu <= j.
Integer run_product_gcd(std::int64_t j, std::int64_t nu);

// Per-prime upper bound on run_product_gcd valuations for fixed nu >= 1:
// exponent of p is sum_{p^b <= nu} ceil(nu/p^b)
//              + sum_{nu < p^b <= 2 nu} (ceil(2 nu / p^b) - 1),
// primes with exponent 0 omitted.
Factorization star_bound(std::int64_t nu);

Integer factorial(std::int64_t n);

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

} // namespace walkmom
