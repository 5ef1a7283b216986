#include "walkmom/amatrix.hpp"

#include <stdexcept>
#include <string>

#include "walkmom/numtheory.hpp"

namespace walkmom {

namespace {

std::size_t tri_cells(std::int64_t size) {
    return static_cast<std::size_t>(size * (size + 1) / 2);
}

void check_entry_args(std::int64_t nu, std::int64_t k, std::int64_t j) {
    if (nu < 0) throw std::domain_error("a_entry: nu must be >= 0");
    if (k < 0 || j < 0 || j > k) {
        throw std::domain_error("a_entry: need 0 <= j <= k, got j = " + std::to_string(j) +
                                ", k = " + std::to_string(k));
    }
}

} // namespace

TriMatrix::TriMatrix(std::int64_t size) : size_(size) {
    if (size < 1) throw std::domain_error("TriMatrix: size must be >= 1");
    cells_.assign(tri_cells(size), Rational());
}

TriMatrix TriMatrix::identity(std::int64_t size) {
    TriMatrix m(size);
    for (std::int64_t k = 0; k < size; ++k) m.at(k, k) = 1;
    return m;
}

const Rational& TriMatrix::at(std::int64_t k, std::int64_t j) const {
    if (k < 0 || k >= size_ || j < 0 || j > k) throw std::out_of_range("TriMatrix::at");
    return cells_[static_cast<std::size_t>(k * (k + 1) / 2 + j)];
}

Rational& TriMatrix::at(std::int64_t k, std::int64_t j) {
    if (k < 0 || k >= size_ || j < 0 || j > k) throw std::out_of_range("TriMatrix::at");
    return cells_[static_cast<std::size_t>(k * (k + 1) / 2 + j)];
}

TriMatrix TriMatrix::multiplied_by(const TriMatrix& other) const {
    if (other.size_ != size_) throw std::domain_error("TriMatrix: size mismatch");
    TriMatrix out(size_);
    Rational term;
    for (std::int64_t k = 0; k < size_; ++k) {
        for (std::int64_t j = 0; j <= k; ++j) {
            Rational& cell = out.at(k, j);
            for (std::int64_t t = j; t <= k; ++t) {
                term = at(k, t);
                term *= other.at(t, j);
                cell += term;
            }
        }
    }
    return out;
}

Rational TriMatrix::row_sum(std::int64_t k) const {
    Rational s;
    for (std::int64_t j = 0; j <= k; ++j) s += at(k, j);
    return s;
}

Rational a_entry_factorial_form(std::int64_t nu, std::int64_t k, std::int64_t j) {
    check_entry_args(nu, k, j);
    Integer num = binomial(k, j);
    num *= factorial(k + nu);
    num *= factorial(nu);
    Integer den = factorial(k - j + nu);
    den *= factorial(j + nu);
    return Rational(num, den);
}

Rational a_entry_binomial_form(std::int64_t nu, std::int64_t k, std::int64_t j) {
    check_entry_args(nu, k, j);
    Integer num = binomial(k, j);
    num *= binomial(k + nu, j);
    return Rational(num, binomial(j + nu, j));
}

Rational a_entry_symmetric_form(std::int64_t nu, std::int64_t k, std::int64_t j) {
    check_entry_args(nu, k, j);
    Integer num = binomial(k + nu, j);
    num *= binomial(k + nu, j + nu);
    return Rational(num, binomial(k + nu, nu));
}

Rational a_entry(std::int64_t nu, std::int64_t k, std::int64_t j) {
    return a_entry_binomial_form(nu, k, j);
}

AMatrix::AMatrix(std::int64_t nu, std::int64_t size) : nu_(nu), tri_(size) {
    if (nu < 0) throw std::domain_error("AMatrix: nu must be >= 0");
    for (std::int64_t k = 0; k < size; ++k) {
        for (std::int64_t j = 0; j <= k; ++j) {
            tri_.at(k, j) = a_entry(nu, k, j);
        }
    }
}

std::vector<Rational> AMatrix::power_row_sums(std::int64_t n) const {
    if (n < 0) throw std::domain_error("power_row_sums: n must be >= 0");
    TriMatrix power = TriMatrix::identity(size());
    for (std::int64_t i = 0; i < n; ++i) power = power.multiplied_by(tri_);
    std::vector<Rational> sums;
    sums.reserve(static_cast<std::size_t>(size()));
    for (std::int64_t k = 0; k < size(); ++k) sums.push_back(power.row_sum(k));
    return sums;
}

AMatrix build_matrix(std::int64_t nu, std::int64_t size) { return AMatrix(nu, size); }

std::vector<Rational> row_sums_of_power(std::int64_t nu, std::int64_t n, std::int64_t size) {
    return build_matrix(nu, size).power_row_sums(n);
}

} // namespace walkmom
