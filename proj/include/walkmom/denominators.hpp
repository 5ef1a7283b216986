#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "walkmom/integer.hpp"
#include "walkmom/numtheory.hpp"
#include "walkmom/rational.hpp"

namespace walkmom {

// Result of checking one lower-bound witness entry: the entry at
// (k, j) = (p^r - 1, nu - 1) must have a reduced denominator divisible by
// p^alpha whenever p^alpha divides C(2 nu - 1, nu).
struct WitnessResult {
    std::int64_t nu = 0;
    std::int64_t p = 0;
    std::int64_t alpha = 0;
    std::int64_t r = 0; // the exponent that verified (or the last one tried)
    std::int64_t entry_k = 0;
    std::int64_t entry_j = 0;
    Integer denominator;
    bool verified = false;
    // The minimal admissible r is guaranteed to work; a failure there is a
    // red flag even if a larger r later verifies.
    bool minimal_r_failed = false;
};

// Per-nu denominator verdict over the truncated slab 0 <= j <= k <= K.
struct RnuReport {
    enum class Status {
        MatchesConjecture, // truncated LCM == C(2 nu - 1, nu)
        BelowConjecture,   // proper divisor: truncation too small to exhibit all factors
        ExceedsConjecture, // some denominator does not divide C(2 nu - 1, nu)
        ExceedsUpperBound, // some denominator escapes (2 nu - 1)!/nu!  (arithmetic bug)
    };
    struct Violation {
        std::int64_t k = 0;
        std::int64_t j = 0;
        Integer denominator;
    };

    std::int64_t nu = 0;
    std::int64_t K = 0;
    Integer truncated_r;  // LCM of reduced denominators over the slab
    Integer conjectured;  // C(2 nu - 1, nu)
    Integer upper;        // (2 nu - 1)!/nu!
    Factorization tightened;
    Status status = Status::MatchesConjecture;
    std::optional<Violation> violation; // set when status == ExceedsConjecture
    std::vector<WitnessResult> witnesses;
};

// v_p of the matrix entry at (k, j) for order nu, via factorial valuations
// only (no bignum is ever built). Negative exactly when p divides the
// reduced denominator.
std::int64_t entry_valuation(std::int64_t nu, std::int64_t k, std::int64_t j, std::int64_t p);

// Reduced denominator of the entry at (k, j), assembled from the negative
// valuations over every prime <= k + nu; equals a_entry(nu, k, j).den().
Integer entry_denominator(std::int64_t nu, std::int64_t k, std::int64_t j);

// LCM of the reduced denominators over 0 <= j <= k <= K; 1 when every entry
// in the slab is an integer.
Integer truncated_r(std::int64_t nu, std::int64_t K, unsigned threads = 0);

// (2 nu - 1)!/nu! for nu >= 1. Every reduced denominator divides this.
Integer upper_bound(std::int64_t nu);

// Sharper divisor bound for fixed nu >= 1, combining both proof branches
// elementwise: exponent of p is
//   max( v_p(lcm_{0 <= j < nu} C(j+nu, nu)),
//        max(0, star_bound exponent of p - v_p(nu!)) ).
Factorization tightened_bound(std::int64_t nu);

// Checks the witness entry for one maximal prime power p^alpha | C(2nu-1,nu).
// Starts at the minimal admissible r (p^r >= p^alpha and p^r > nu) and
// increments up to max_r until the denominator check verifies.
WitnessResult backwards_witness(std::int64_t nu, std::int64_t p, std::int64_t alpha,
                                std::int64_t max_r = 12);

// One witness per maximal prime power of C(2 nu - 1, nu); empty for nu = 1.
std::vector<WitnessResult> all_backwards_witnesses(std::int64_t nu);

// Full slab scan for nu >= 1: every reduced denominator is checked against
// both the proven bound (violation throws arithmetic_integrity_error) and the
// conjectured LCM C(2 nu - 1, nu) (violation is reported, not thrown); also
// runs all witnesses.
RnuReport verify_conjecture(std::int64_t nu, std::int64_t K, unsigned threads = 0);

// The closed forms for the first columns at nu = 3 (j <= 2) and nu = 4
// (j <= 3), already scaled by C(2 nu - 1, nu). Requires k >= j; always equal
// to a_entry(nu,k,j) * C(2 nu - 1, nu) and always an integer.
Rational small_j_closed_form(std::int64_t nu, std::int64_t j, std::int64_t k);

// One row per nu: the per-prime run-gcd bound next to the factorization of
// (2 nu - 1)!.
struct BoundTableRow {
    std::int64_t nu = 0;
    Factorization star;
    Factorization factorial;
};
std::vector<BoundTableRow> table_compare(std::int64_t nu_max);

// Smallest j <= j_max at which the run-product gcd attains the star_bound
// exponent for p (the bound is known to be attained at some j, but with no
// effective bound on it; this is a best-effort search, not an invariant).
std::optional<std::int64_t> star_equality_witness(std::int64_t nu, std::int64_t p,
                                                  std::int64_t j_max);

// Reduced denominator of every non-integer entry with k < rows, in (k, j)
// order. Each one is checked against the proven factorial-ratio bound; a
// violation throws arithmetic_integrity_error.
struct DenCell {
    std::int64_t k = 0;
    std::int64_t j = 0;
    Integer den;
};
std::vector<DenCell> denominator_cells(std::int64_t nu, std::int64_t rows, unsigned threads = 0);

} // namespace walkmom
