#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkmom/integer.hpp"
#include "walkmom/rational.hpp"

namespace walkmom {

enum class CongruenceKind {
    PrimeK,        // p = k prime, 2 nu < p; modulus p
    PrimeKPlusNu,  // p = k + nu prime, nu < p; modulus p
    PrimeSquare,   // k = p^2, nu = 0; modulus p^2
    CrtProduct,    // k and k + nu both prime, nu >= 1, 2 nu < k; modulus k(k+nu)
};

const char* kind_name(CongruenceKind kind);

// One instance of the moment congruence: the side conditions of the chosen
// kind are validated at construction, so a constructed case is always
// well-posed.
class CongruenceCase {
public:
    static CongruenceCase prime_k(std::int64_t nu, std::int64_t k);
    static CongruenceCase prime_k_plus_nu(std::int64_t nu, std::int64_t k);
    static CongruenceCase prime_square(std::int64_t p);
    static CongruenceCase crt_product(std::int64_t nu, std::int64_t k);

    CongruenceKind kind() const { return kind_; }
    std::int64_t nu() const { return nu_; }
    std::int64_t k() const { return k_; }
    const Integer& prime() const { return p_; } // first prime for CrtProduct
    const Integer& modulus() const { return modulus_; }

    std::string describe() const;

private:
    CongruenceCase(CongruenceKind kind, std::int64_t nu, std::int64_t k, Integer p,
                   Integer modulus)
        : kind_(kind), nu_(nu), k_(k), p_(std::move(p)), modulus_(std::move(modulus)) {}

    CongruenceKind kind_;
    std::int64_t nu_;
    std::int64_t k_;
    Integer p_;
    Integer modulus_;
};

// num(x) * den(x)^-1 mod m in [0, m). Throws non_integral_residue when den(x)
// shares a factor with m. m >= 2.
Integer rational_residue(const Rational& x, const Integer& m);

// Outcome of reducing one exact moment against the expected residue n mod m.
struct ResidueReport {
    std::int64_t nu = 0;
    std::int64_t k = 0;
    std::int64_t n = 0;
    Integer modulus;
    Integer residue;
    Integer expected;
    bool pass = false;
};

// Computes the 2k-th moment of the n-step walk exactly via the composition
// sum, reduces it once modulo the case modulus, and compares with n.
ResidueReport check_theorem_mod(const CongruenceCase& c, std::int64_t n);

// Residues of the 2k-th moment modulo an arbitrary modulus for n = 1..n_max.
// When (nu, k, modulus) matches one of the theorem hypotheses the rows are
// judged; otherwise this is exploration only and no expectation is asserted.
// A denominator sharing a factor with the modulus is recorded per row, never
// fatal.
struct ScanRow {
    std::int64_t n = 0;
    std::optional<Integer> residue; // empty when the residue is undefined
    Integer expected;               // n mod modulus, for reference
    bool matches_n = false;
};
struct ResidueScan {
    std::int64_t nu = 0;
    std::int64_t k = 0;
    Integer modulus;
    std::optional<CongruenceKind> theorem_case; // set when inside hypotheses
    std::vector<ScanRow> rows;
};
ResidueScan scan_residues(std::int64_t nu, std::int64_t k, const Integer& modulus,
                          std::int64_t n_max);

} // namespace walkmom
