#include "walkmom/congruence.hpp"

#include <stdexcept>

#include "walkmom/amatrix.hpp"
#include "walkmom/errors.hpp"
#include "walkmom/moments.hpp"
#include "walkmom/numtheory.hpp"

namespace walkmom {

const char* kind_name(CongruenceKind kind) {
    switch (kind) {
        case CongruenceKind::PrimeK: return "prime-k";
        case CongruenceKind::PrimeKPlusNu: return "prime-k-plus-nu";
        case CongruenceKind::PrimeSquare: return "prime-square";
        case CongruenceKind::CrtProduct: return "crt-product";
    }
    return "?";
}

CongruenceCase CongruenceCase::prime_k(std::int64_t nu, std::int64_t k) {
    if (nu < 0) throw std::domain_error("prime_k: nu must be >= 0");
    if (!is_prime(k)) throw std::domain_error("prime_k: k must be prime");
    if (2 * nu >= k) throw std::domain_error("prime_k: need 2*nu < k");
    return CongruenceCase(CongruenceKind::PrimeK, nu, k, Integer(k), Integer(k));
}

CongruenceCase CongruenceCase::prime_k_plus_nu(std::int64_t nu, std::int64_t k) {
    if (nu < 0) throw std::domain_error("prime_k_plus_nu: nu must be >= 0");
    if (k < 1) throw std::domain_error("prime_k_plus_nu: k must be >= 1");
    if (!is_prime(k + nu)) throw std::domain_error("prime_k_plus_nu: k + nu must be prime");
    // nu < k + nu holds automatically for k >= 1
    return CongruenceCase(CongruenceKind::PrimeKPlusNu, nu, k, Integer(k + nu), Integer(k + nu));
}

CongruenceCase CongruenceCase::prime_square(std::int64_t p) {
    if (!is_prime(p)) throw std::domain_error("prime_square: p must be prime");
    return CongruenceCase(CongruenceKind::PrimeSquare, 0, p * p, Integer(p), Integer(p * p));
}

CongruenceCase CongruenceCase::crt_product(std::int64_t nu, std::int64_t k) {
    if (nu < 1) throw std::domain_error("crt_product: nu must be >= 1 (distinct primes)");
    if (!is_prime(k)) throw std::domain_error("crt_product: k must be prime");
    if (!is_prime(k + nu)) throw std::domain_error("crt_product: k + nu must be prime");
    if (2 * nu >= k) throw std::domain_error("crt_product: need 2*nu < k");
    return CongruenceCase(CongruenceKind::CrtProduct, nu, k, Integer(k),
                          Integer(k) * Integer(k + nu));
}

std::string CongruenceCase::describe() const {
    return std::string(kind_name(kind_)) + " nu=" + std::to_string(nu_) +
           " k=" + std::to_string(k_) + " mod " + modulus_.str();
}

Integer rational_residue(const Rational& x, const Integer& m) {
    if (m < Integer(2)) throw std::domain_error("rational_residue: modulus must be >= 2");
    const Integer den = x.den();
    Integer inv;
    if (mpz_invert(inv.raw(), den.raw(), m.raw()) == 0) {
        throw non_integral_residue("denominator " + den.str() + " is not invertible mod " +
                                   m.str());
    }
    return (x.num().mod(m) * inv).mod(m);
}

ResidueReport check_theorem_mod(const CongruenceCase& c, std::int64_t n) {
    if (n < 1) throw std::domain_error("check_theorem_mod: n must be >= 1");
    const Rational w = moment_direct(c.nu(), n, c.k());
    ResidueReport rep;
    rep.nu = c.nu();
    rep.k = c.k();
    rep.n = n;
    rep.modulus = c.modulus();
    rep.residue = rational_residue(w, c.modulus());
    rep.expected = Integer(n).mod(c.modulus());
    rep.pass = rep.residue == rep.expected;
    return rep;
}

namespace {

std::optional<CongruenceKind> match_theorem_case(std::int64_t nu, std::int64_t k,
                                                 const Integer& modulus) {
    if (nu == 0 && k >= 4) {
        // k = p^2 with modulus p^2
        for (std::int64_t p = 2; p * p <= k; ++p) {
            if (p * p == k && is_prime(p) && modulus == Integer(k)) {
                return CongruenceKind::PrimeSquare;
            }
        }
    }
    if (nu >= 1 && is_prime(k) && is_prime(k + nu) && 2 * nu < k &&
        modulus == Integer(k) * Integer(k + nu)) {
        return CongruenceKind::CrtProduct;
    }
    if (is_prime(k) && 2 * nu < k && modulus == Integer(k)) return CongruenceKind::PrimeK;
    if (k >= 1 && is_prime(k + nu) && modulus == Integer(k + nu)) {
        return CongruenceKind::PrimeKPlusNu;
    }
    return std::nullopt;
}

} // namespace

ResidueScan scan_residues(std::int64_t nu, std::int64_t k, const Integer& modulus,
                          std::int64_t n_max) {
    if (nu < 0 || k < 0) throw std::domain_error("scan_residues: need nu >= 0 and k >= 0");
    if (modulus < Integer(2)) throw std::domain_error("scan_residues: modulus must be >= 2");
    if (n_max < 1) throw std::domain_error("scan_residues: n_max must be >= 1");

    ResidueScan scan;
    scan.nu = nu;
    scan.k = k;
    scan.modulus = modulus;
    scan.theorem_case = match_theorem_case(nu, k, modulus);
    scan.rows.reserve(static_cast<std::size_t>(n_max));

    // The powers of the moment matrix give every step count in one sweep;
    // walking them stays cheap as n grows, unlike the composition sum.
    const AMatrix a = build_matrix(nu, k + 1);
    TriMatrix power = TriMatrix::identity(k + 1);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        if (n > 1) power = power.multiplied_by(a.tri());
        const Rational w = power.row_sum(k); // moment of the n-step walk
        ScanRow row;
        row.n = n;
        row.expected = Integer(n).mod(modulus);
        try {
            row.residue = rational_residue(w, modulus);
            row.matches_n = *row.residue == row.expected;
        } catch (const non_integral_residue&) {
            row.residue.reset();
            row.matches_n = false;
        }
        scan.rows.push_back(std::move(row));
    }
    return scan;
}

} // namespace walkmom
