#include "walkmom/moments.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "walkmom/compositions.hpp"
#include "walkmom/integer.hpp"
#include "walkmom/numtheory.hpp"

namespace walkmom {

namespace {

// Pascal triangle rows 0..limit, packed; binomials come from the additive
// recurrence, a route independent of the GMP binomial primitive.
class PascalTable {
public:
    explicit PascalTable(std::int64_t limit) {
        cells_.reserve(static_cast<std::size_t>((limit + 1) * (limit + 2) / 2));
        cells_.emplace_back(1);
        for (std::int64_t r = 1; r <= limit; ++r) {
            const std::size_t prev = static_cast<std::size_t>(r * (r - 1) / 2);
            cells_.emplace_back(1);
            for (std::int64_t j = 1; j < r; ++j) {
                cells_.push_back(cells_[prev + static_cast<std::size_t>(j - 1)] +
                                 cells_[prev + static_cast<std::size_t>(j)]);
            }
            cells_.emplace_back(1);
        }
    }

    const Integer& at(std::int64_t a, std::int64_t b) const {
        return cells_[static_cast<std::size_t>(a * (a + 1) / 2 + b)];
    }

private:
    std::vector<Integer> cells_;
};

} // namespace

Rational moment_direct(std::int64_t nu, std::int64_t n, std::int64_t k) {
    if (nu < 0) throw std::domain_error("moment_direct: nu must be >= 0");
    if (n < 1) throw std::domain_error("moment_direct: n must be >= 1");
    if (k < 0) throw std::domain_error("moment_direct: k must be >= 0");

    const std::int64_t top = k + n * nu;
    if (top > 4096) {
        throw std::domain_error("moment_direct: k + n*nu too large for the composition sum; "
                                "use the matrix method");
    }
    const PascalTable table(top);

    Integer acc = 0;
    Integer term, plain;
    for_each_composition(k, n, [&](std::span<const std::int64_t> parts) {
        // multinomial(k; parts) as a product of prefix binomials
        plain = 1;
        std::int64_t prefix = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            prefix += parts[i];
            if (i > 0 && parts[i] != 0) plain *= table.at(prefix, parts[i]);
        }
        if (nu == 0) {
            term = plain;
            term *= plain;
        } else {
            // shifted multinomial(k + n*nu; parts_i + nu)
            term = plain;
            prefix = 0;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                prefix += parts[i];
                term *= table.at(prefix + static_cast<std::int64_t>(i + 1) * nu, parts[i] + nu);
            }
        }
        acc += term;
    });

    Integer num = factorial(k + nu);
    if (n > 1) num *= Integer::pow(factorial(nu), static_cast<unsigned long>(n - 1));
    num *= acc;
    return Rational(num, factorial(top));
}

} // namespace walkmom
