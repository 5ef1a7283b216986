#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "walkmom/integer.hpp"

namespace walkmom {

// Enumerates all length-n tuples of non-negative integers summing to k
// (weak compositions), each exactly once, in colexicographic order:
// first (k, 0, ..., 0), last (0, ..., 0, k). The cursor rewrites one buffer
// in place, so parts() is only valid until the next advance().
class CompositionCursor {
public:
    // k >= 0, n >= 1.
    CompositionCursor(std::int64_t k, std::int64_t n);

    std::span<const std::int64_t> parts() const { return parts_; }

    // Steps to the next composition; returns false once exhausted.
    bool advance();

private:
    std::vector<std::int64_t> parts_;
    std::int64_t k_;
};

// Number of compositions of k into n parts: C(k+n-1, n-1).
Integer composition_count(std::int64_t k, std::int64_t n);

template <typename Fn>
void for_each_composition(std::int64_t k, std::int64_t n, Fn&& fn) {
    CompositionCursor cur(k, n);
    do {
        fn(cur.parts());
    } while (cur.advance());
}

} // namespace walkmom
