#include "walkmom/compositions.hpp"

#include <stdexcept>

#include "walkmom/numtheory.hpp"

namespace walkmom {

CompositionCursor::CompositionCursor(std::int64_t k, std::int64_t n) : k_(k) {
    if (k < 0) throw std::domain_error("compositions: k must be >= 0");
    if (n < 1) throw std::domain_error("compositions: n must be >= 1");
    parts_.assign(static_cast<std::size_t>(n), 0);
    parts_[0] = k;
}

bool CompositionCursor::advance() {
    if (parts_.back() == k_) return false; // (0, ..., 0, k) is last
    std::size_t i = 0;
    while (parts_[i] == 0) ++i;
    const std::int64_t v = parts_[i];
    parts_[i] = 0;
    parts_[0] = v - 1;
    parts_[i + 1] += 1;
    return true;
}

Integer composition_count(std::int64_t k, std::int64_t n) {
    if (k < 0) throw std::domain_error("composition_count: k must be >= 0");
    if (n < 1) throw std::domain_error("composition_count: n must be >= 1");
    return binomial(k + n - 1, n - 1);
}

} // namespace walkmom
