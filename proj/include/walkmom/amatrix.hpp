#pragma once

#include <cstdint>
#include <vector>

#include "walkmom/rational.hpp"

namespace walkmom {

// Dense lower-triangular square matrix of exact rationals, rows packed
// contiguously (row k holds k+1 entries).
class TriMatrix {
public:
    explicit TriMatrix(std::int64_t size);
    static TriMatrix identity(std::int64_t size);

    std::int64_t size() const { return size_; }
    const Rational& at(std::int64_t k, std::int64_t j) const;
    Rational& at(std::int64_t k, std::int64_t j);

    // this * other, exact. Both operands lower triangular of equal size;
    // row k of the product depends only on rows <= k of the factors, so a
    // truncated slab multiplies exactly.
    TriMatrix multiplied_by(const TriMatrix& other) const;

    Rational row_sum(std::int64_t k) const;

private:
    std::int64_t size_;
    std::vector<Rational> cells_;
};

// The entry at row k, column j of the moment matrix of order nu, reduced.
// Three algebraically equal expressions are provided; a_entry is the
// binomial-ratio form, which needs the fewest bignum operations.
Rational a_entry(std::int64_t nu, std::int64_t k, std::int64_t j);
Rational a_entry_factorial_form(std::int64_t nu, std::int64_t k, std::int64_t j);
Rational a_entry_binomial_form(std::int64_t nu, std::int64_t k, std::int64_t j);
Rational a_entry_symmetric_form(std::int64_t nu, std::int64_t k, std::int64_t j);

// Size x size lower-triangular slab of the order-nu moment matrix
// (rows 0..size-1). First column, diagonal, and rows 0 and 1 are all ones.
class AMatrix {
public:
    AMatrix(std::int64_t nu, std::int64_t size);

    std::int64_t nu() const { return nu_; }
    std::int64_t size() const { return tri_.size(); }
    const Rational& at(std::int64_t k, std::int64_t j) const { return tri_.at(k, j); }
    const TriMatrix& tri() const { return tri_; }

    // Row sums of the n-th power (n >= 0); entry k equals the 2k-th moment of
    // an (n+1)-step walk. Exact at every index despite the truncation.
    std::vector<Rational> power_row_sums(std::int64_t n) const;

private:
    std::int64_t nu_;
    TriMatrix tri_;
};

AMatrix build_matrix(std::int64_t nu, std::int64_t size);

// row_sums_of_power(nu, n, size)[k] = 2k-th moment of an (n+1)-step walk in
// the dimension with parameter nu, for 0 <= k < size.
std::vector<Rational> row_sums_of_power(std::int64_t nu, std::int64_t n, std::int64_t size);

} // namespace walkmom
