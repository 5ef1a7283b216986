#pragma once

#include <cstdint>

#include "walkmom/rational.hpp"

namespace walkmom {

// Parameters of one even-moment evaluation: walk dimension parameter nu
// (dimension d = 2 nu + 2), step count n, and half the moment order k
// (moment order s = 2k).
struct WalkParams {
    std::int64_t nu = 0; // >= 0
    std::int64_t n = 1;  // >= 1
    std::int64_t k = 0;  // >= 0
};

// 2k-th moment of the distance after an n-step unit walk, evaluated as the
// composition sum: the summand for (k_1,...,k_n) is the product of the plain
// and the nu-shifted multinomial; both are integers, so the sum accumulates
// in an Integer and the factorial prefactor is applied in one exact rational
// multiply at the end.
Rational moment_direct(std::int64_t nu, std::int64_t n, std::int64_t k);

} // namespace walkmom
