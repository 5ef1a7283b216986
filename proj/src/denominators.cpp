#include "walkmom/denominators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "walkmom/errors.hpp"
#include "walkmom/parallel.hpp"

namespace walkmom {

namespace {

// Legendre sum without the primality re-check of the public entry point;
// callers pass primes from a sieve.
inline std::int64_t legendre(std::int64_t n, std::int64_t p) {
    std::int64_t total = 0;
    for (std::int64_t q = n / p; q > 0; q /= p) total += q;
    return total;
}

inline std::int64_t entry_valuation_unchecked(std::int64_t nu, std::int64_t k, std::int64_t j,
                                              std::int64_t p) {
    return legendre(k, p) - legendre(j, p) - legendre(k - j, p)     // v_p(C(k,j))
           + legendre(k + nu, p) + legendre(nu, p)                  // numerator factorials
           - legendre(k - j + nu, p) - legendre(j + nu, p);         // denominator factorials
}

// Per-prime factorial-valuation tables for one scan: fact_val[i][m] = v_p(m!)
// for the i-th prime and every m <= limit. Turns the seven-term valuation
// into seven array reads.
struct ScanTables {
    std::int64_t nu = 0;
    std::int64_t limit = 0; // largest factorial argument: K + nu
    std::vector<std::uint32_t> primes;
    std::vector<std::vector<std::int32_t>> fact_val;
    std::vector<std::int32_t> upper_exp; // v_p((2nu-1)!/nu!), zero row for nu < 1
    std::vector<std::int32_t> conj_exp;  // v_p(C(2nu-1,nu)), zero row for nu < 1
};

ScanTables make_scan_tables(std::int64_t nu, std::int64_t K) {
    ScanTables t;
    t.nu = nu;
    t.limit = K + nu;
    t.primes = primes_up_to(static_cast<std::uint32_t>(std::max<std::int64_t>(t.limit, 2)));
    t.fact_val.reserve(t.primes.size());
    for (std::uint32_t p : t.primes) {
        std::vector<std::int32_t> v(static_cast<std::size_t>(t.limit) + 1, 0);
        for (std::int64_t m = 1; m <= t.limit; ++m) {
            std::int32_t e = 0;
            for (std::int64_t q = m; q % p == 0; q /= p) ++e;
            v[static_cast<std::size_t>(m)] = v[static_cast<std::size_t>(m - 1)] + e;
        }
        t.fact_val.push_back(std::move(v));
        if (nu >= 1) {
            t.upper_exp.push_back(static_cast<std::int32_t>(legendre(2 * nu - 1, p) - legendre(nu, p)));
            t.conj_exp.push_back(static_cast<std::int32_t>(legendre(2 * nu - 1, p) - legendre(nu, p) -
                                                           legendre(nu - 1, p)));
        } else {
            t.upper_exp.push_back(0);
            t.conj_exp.push_back(0);
        }
    }
    return t;
}

// Negative of v_p for the scanned entry, i.e. the denominator exponent.
inline std::int32_t den_exponent(const ScanTables& t, std::size_t pi, std::int64_t k,
                                 std::int64_t j) {
    const auto& v = t.fact_val[pi];
    const std::int64_t nu = t.nu;
    const std::int32_t val = v[k] - v[j] - v[k - j] + v[k + nu] + v[nu] - v[k - j + nu] - v[j + nu];
    return val < 0 ? static_cast<std::int32_t>(-val) : 0;
}

[[noreturn]] void throw_bound_violation(std::int64_t nu, std::int64_t k, std::int64_t j,
                                        std::int64_t p, std::int64_t exponent) {
    throw arithmetic_integrity_error(
        "denominator bound violated: entry (k=" + std::to_string(k) + ", j=" + std::to_string(j) +
        ") of order nu=" + std::to_string(nu) + " carries " + std::to_string(p) + "^" +
        std::to_string(exponent) + " beyond (2nu-1)!/nu!; this indicates an arithmetic bug");
}

struct SlabScan {
    std::vector<std::int32_t> max_exp;                  // per-prime LCM exponents
    std::optional<RnuReport::Violation> conj_violation; // first in (k, j) order
};

// Scans 0 <= j <= k <= K. Every entry is checked against the proven bound;
// when track_conjecture is set the first entry whose denominator escapes
// C(2nu-1,nu) is recorded.
SlabScan scan_slab(const ScanTables& t, std::int64_t K, bool track_conjecture, unsigned threads) {
    const std::size_t np = t.primes.size();
    const unsigned workers = effective_threads(threads);
    std::vector<SlabScan> partial(workers);
    for (auto& s : partial) s.max_exp.assign(np, 0);

    parallel_chunks(K + 1, workers, [&](unsigned w, std::int64_t lo, std::int64_t hi) {
        SlabScan& s = partial[w];
        for (std::int64_t k = lo; k < hi; ++k) {
            for (std::int64_t j = 1; j < k; ++j) { // first column and diagonal are 1
                for (std::size_t pi = 0; pi < np; ++pi) {
                    const std::int32_t e = den_exponent(t, pi, k, j);
                    if (e == 0) continue;
                    if (e > t.upper_exp[pi]) {
                        throw_bound_violation(t.nu, k, j, t.primes[pi], e);
                    }
                    if (e > s.max_exp[pi]) s.max_exp[pi] = e;
                    if (track_conjecture && e > t.conj_exp[pi] && !s.conj_violation) {
                        RnuReport::Violation v;
                        v.k = k;
                        v.j = j;
                        v.denominator = entry_denominator(t.nu, k, j);
                        s.conj_violation = std::move(v);
                    }
                }
            }
        }
    });

    SlabScan merged;
    merged.max_exp.assign(np, 0);
    for (const SlabScan& s : partial) {
        for (std::size_t pi = 0; pi < np; ++pi) {
            merged.max_exp[pi] = std::max(merged.max_exp[pi], s.max_exp[pi]);
        }
        if (!merged.conj_violation && s.conj_violation) merged.conj_violation = s.conj_violation;
    }
    return merged;
}

Integer exponents_to_value(const ScanTables& t, const std::vector<std::int32_t>& exps) {
    Integer r = 1;
    for (std::size_t pi = 0; pi < exps.size(); ++pi) {
        if (exps[pi] > 0) {
            r *= Integer::pow(Integer(t.primes[pi]), static_cast<unsigned long>(exps[pi]));
        }
    }
    return r;
}

} // namespace

std::int64_t entry_valuation(std::int64_t nu, std::int64_t k, std::int64_t j, std::int64_t p) {
    if (nu < 0 || k < 0 || j < 0 || j > k) {
        throw std::domain_error("entry_valuation: need nu >= 0 and 0 <= j <= k");
    }
    if (!is_prime(p)) throw std::domain_error("entry_valuation: p must be prime");
    return entry_valuation_unchecked(nu, k, j, p);
}

Integer entry_denominator(std::int64_t nu, std::int64_t k, std::int64_t j) {
    if (nu < 0 || k < 0 || j < 0 || j > k) {
        throw std::domain_error("entry_denominator: need nu >= 0 and 0 <= j <= k");
    }
    Integer den = 1;
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(std::max<std::int64_t>(k + nu, 2)))) {
        const std::int64_t v = entry_valuation_unchecked(nu, k, j, p);
        if (v < 0) den *= Integer::pow(Integer(p), static_cast<unsigned long>(-v));
    }
    return den;
}

Integer truncated_r(std::int64_t nu, std::int64_t K, unsigned threads) {
    if (nu < 0 || K < 0) throw std::domain_error("truncated_r: need nu >= 0 and K >= 0");
    const ScanTables t = make_scan_tables(nu, K);
    const SlabScan scan = scan_slab(t, K, /*track_conjecture=*/false, threads);
    return exponents_to_value(t, scan.max_exp);
}

Integer upper_bound(std::int64_t nu) {
    if (nu < 1) throw std::domain_error("upper_bound: nu must be >= 1");
    return exact_div(factorial(2 * nu - 1), factorial(nu));
}

Factorization tightened_bound(std::int64_t nu) {
    if (nu < 1) throw std::domain_error("tightened_bound: nu must be >= 1");
    // Branch one: for j < nu the denominator divides C(j+nu, nu).
    Integer small_j = 1;
    for (std::int64_t j = 0; j < nu; ++j) small_j = lcm(small_j, binomial(j + nu, nu));
    const Factorization small_j_f = factorize(small_j);
    // Branch two: for j >= nu the denominator divides the run gcd over nu!.
    const Factorization star = star_bound(nu);
    std::vector<Factorization::Entry> star_over_fact;
    for (const auto& e : star.entries()) {
        const std::int64_t reduced = e.exponent - factorial_valuation(nu, e.prime.to_int64());
        if (reduced > 0) star_over_fact.push_back({e.prime, reduced});
    }
    return fact_lcm(small_j_f, Factorization::from_entries(std::move(star_over_fact)));
}

WitnessResult backwards_witness(std::int64_t nu, std::int64_t p, std::int64_t alpha,
                                std::int64_t max_r) {
    if (nu < 1) throw std::domain_error("backwards_witness: nu must be >= 1");
    if (alpha < 1) throw std::domain_error("backwards_witness: alpha must be >= 1");
    if (!is_prime(p)) throw std::domain_error("backwards_witness: p must be prime");
    const Integer central = binomial(2 * nu - 1, nu);
    if (!Integer::pow(Integer(p), static_cast<unsigned long>(alpha)).divides(central)) {
        throw std::domain_error("backwards_witness: " + std::to_string(p) + "^" +
                                std::to_string(alpha) + " does not divide C(2nu-1,nu) = " +
                                central.str());
    }

    std::int64_t r = alpha;
    std::int64_t pr = 1;
    for (std::int64_t i = 0; i < r; ++i) pr *= p;
    while (pr <= nu) {
        pr *= p;
        ++r;
    }

    WitnessResult res;
    res.nu = nu;
    res.p = p;
    res.alpha = alpha;
    res.entry_j = nu - 1;
    const Integer palpha = Integer::pow(Integer(p), static_cast<unsigned long>(alpha));
    for (; r <= max_r; ++r, pr *= p) {
        res.r = r;
        res.entry_k = pr - 1;
        if (res.entry_k > 1'000'000) break; // witness row out of any sane range
        res.denominator = entry_denominator(nu, res.entry_k, res.entry_j);
        res.verified = palpha.divides(res.denominator);
        if (res.verified) break;
        res.minimal_r_failed = true;
    }
    return res;
}

std::vector<WitnessResult> all_backwards_witnesses(std::int64_t nu) {
    if (nu < 1) throw std::domain_error("all_backwards_witnesses: nu must be >= 1");
    std::vector<WitnessResult> out;
    const Integer central = binomial(2 * nu - 1, nu);
    if (central.is_one()) return out;
    const Factorization central_f = factorize(central);
    for (const auto& e : central_f.entries()) {
        out.push_back(backwards_witness(nu, e.prime.to_int64(), e.exponent));
    }
    return out;
}

RnuReport verify_conjecture(std::int64_t nu, std::int64_t K, unsigned threads) {
    if (nu < 1) throw std::domain_error("verify_conjecture: nu must be >= 1");
    if (K < 0) throw std::domain_error("verify_conjecture: K must be >= 0");

    RnuReport rep;
    rep.nu = nu;
    rep.K = K;
    rep.conjectured = binomial(2 * nu - 1, nu);
    rep.upper = upper_bound(nu);
    rep.tightened = tightened_bound(nu);
    rep.witnesses = all_backwards_witnesses(nu);

    const ScanTables t = make_scan_tables(nu, K);
    const SlabScan scan = scan_slab(t, K, /*track_conjecture=*/true, threads);
    rep.truncated_r = exponents_to_value(t, scan.max_exp);

    if (scan.conj_violation) {
        rep.violation = scan.conj_violation;
        rep.status = RnuReport::Status::ExceedsConjecture;
    } else if (rep.truncated_r == rep.conjectured) {
        rep.status = RnuReport::Status::MatchesConjecture;
    } else {
        rep.status = RnuReport::Status::BelowConjecture;
    }
    return rep;
}

Rational small_j_closed_form(std::int64_t nu, std::int64_t j, std::int64_t k) {
    if (k < j) throw std::domain_error("small_j_closed_form: need k >= j");
    const Integer K = k;
    if (nu == 3) {
        switch (j) {
            case 0: return Rational(10);
            case 1: return Rational(Integer(5) * K * (K + 3), 2);
            case 2: return Rational(K * (K - 1) * (K + 2) * (K + 3), 4);
            default: break;
        }
    } else if (nu == 4) {
        switch (j) {
            case 0: return Rational(35);
            case 1: return Rational(Integer(7) * K * (K + 4));
            case 2: return Rational(Integer(7) * K * (K - 1) * (K + 3) * (K + 4), 12);
            case 3: return Rational(K * (K - 1) * (K - 2) * (K + 2) * (K + 3) * (K + 4), 36);
            default: break;
        }
    }
    throw std::domain_error("small_j_closed_form: no closed form for nu = " + std::to_string(nu) +
                            ", j = " + std::to_string(j));
}

std::vector<BoundTableRow> table_compare(std::int64_t nu_max) {
    if (nu_max < 1) throw std::domain_error("table_compare: nu_max must be >= 1");
    std::vector<BoundTableRow> rows;
    rows.reserve(static_cast<std::size_t>(nu_max));
    for (std::int64_t nu = 1; nu <= nu_max; ++nu) {
        rows.push_back({nu, star_bound(nu), factorize(factorial(2 * nu - 1))});
    }
    return rows;
}

std::vector<DenCell> denominator_cells(std::int64_t nu, std::int64_t rows, unsigned threads) {
    if (nu < 0 || rows < 1) throw std::domain_error("denominator_cells: need nu >= 0, rows >= 1");
    const std::int64_t K = rows - 1;
    const ScanTables t = make_scan_tables(nu, K);
    const std::size_t np = t.primes.size();

    const unsigned workers = effective_threads(threads);
    std::vector<std::vector<DenCell>> partial(workers);
    parallel_chunks(rows, workers, [&](unsigned w, std::int64_t lo, std::int64_t hi) {
        std::vector<DenCell>& cells = partial[w];
        for (std::int64_t k = lo; k < hi; ++k) {
            for (std::int64_t j = 1; j < k; ++j) {
                Integer den = 1;
                for (std::size_t pi = 0; pi < np; ++pi) {
                    const std::int32_t e = den_exponent(t, pi, k, j);
                    if (e == 0) continue;
                    if (e > t.upper_exp[pi]) {
                        throw_bound_violation(nu, k, j, t.primes[pi], e);
                    }
                    den *= Integer::pow(Integer(t.primes[pi]), static_cast<unsigned long>(e));
                }
                if (!den.is_one()) cells.push_back({k, j, std::move(den)});
            }
        }
    });

    std::vector<DenCell> cells;
    for (auto& chunk : partial) {
        cells.insert(cells.end(), std::make_move_iterator(chunk.begin()),
                     std::make_move_iterator(chunk.end()));
    }
    return cells;
}

std::optional<std::int64_t> star_equality_witness(std::int64_t nu, std::int64_t p,
                                                  std::int64_t j_max) {
    if (nu < 1) throw std::domain_error("star_equality_witness: nu must be >= 1");
    if (!is_prime(p)) throw std::domain_error("star_equality_witness: p must be prime");
    const std::int64_t target = star_bound(nu).exponent_of(p);
    auto val_of = [p](std::int64_t t) {
        std::int64_t e = 0;
        while (t % p == 0) {
            t /= p;
            ++e;
        }
        return e;
    };
    for (std::int64_t j = nu; j <= j_max; ++j) {
        std::int64_t lo = 0, hi = 0;
        for (std::int64_t t = j - nu + 1; t <= j; ++t) lo += val_of(t);
        for (std::int64_t t = j + 1; t <= j + nu; ++t) hi += val_of(t);
        if (std::min(lo, hi) == target) return j;
    }
    return std::nullopt;
}

} // namespace walkmom
