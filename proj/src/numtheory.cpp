#include "walkmom/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace walkmom {

namespace {

// Largest candidate tried by factorize before giving up on a composite
// cofactor. Everything this library factors is either below the square of
// this bound or smooth with respect to it.
constexpr std::int64_t kTrialBound = 1 << 20;

void require_prime(std::int64_t p, const char* who) {
    if (!is_prime(p)) {
        throw std::domain_error(std::string(who) + ": p = " + std::to_string(p) + " is not prime");
    }
}

} // namespace

Factorization Factorization::from_entries(std::vector<Entry> entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].exponent < 1) {
            throw std::domain_error("Factorization: exponent must be >= 1");
        }
        if (!is_prime(entries[i].prime)) {
            throw std::domain_error("Factorization: " + entries[i].prime.str() + " is not prime");
        }
        if (i > 0 && !(entries[i - 1].prime < entries[i].prime)) {
            throw std::domain_error("Factorization: primes must be strictly ascending");
        }
    }
    Factorization f;
    f.entries_ = std::move(entries);
    return f;
}

Integer Factorization::value() const {
    Integer v = 1;
    for (const Entry& e : entries_) {
        v *= Integer::pow(e.prime, static_cast<unsigned long>(e.exponent));
    }
    return v;
}

std::int64_t Factorization::exponent_of(const Integer& p) const {
    for (const Entry& e : entries_) {
        if (e.prime == p) return e.exponent;
    }
    return 0;
}

std::string Factorization::str() const {
    if (entries_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) s += '*';
        s += entries_[i].prime.str();
        if (entries_[i].exponent != 1) {
            s += '^';
            s += std::to_string(entries_[i].exponent);
        }
    }
    return s;
}

Factorization fact_lcm(const Factorization& a, const Factorization& b) {
    std::vector<Factorization::Entry> merged;
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
        if (j == b.entries_.size() ||
            (i < a.entries_.size() && a.entries_[i].prime < b.entries_[j].prime)) {
            merged.push_back(a.entries_[i++]);
        } else if (i == a.entries_.size() || b.entries_[j].prime < a.entries_[i].prime) {
            merged.push_back(b.entries_[j++]);
        } else {
            merged.push_back({a.entries_[i].prime,
                              std::max(a.entries_[i].exponent, b.entries_[j].exponent)});
            ++i;
            ++j;
        }
    }
    Factorization f;
    f.entries_ = std::move(merged);
    return f;
}

Integer binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::domain_error("binomial: n must be >= 0, got " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer multinomial(std::int64_t k, std::span<const std::int64_t> parts) {
    if (k < 0) throw std::domain_error("multinomial: k must be >= 0");
    std::int64_t sum = 0;
    for (std::int64_t p : parts) {
        if (p < 0) throw std::domain_error("multinomial: parts must be >= 0");
        sum += p;
    }
    if (sum != k) {
        throw std::domain_error("multinomial: parts sum to " + std::to_string(sum) +
                                ", expected " + std::to_string(k));
    }
    Integer r = 1;
    std::int64_t prefix = 0;
    for (std::int64_t p : parts) {
        prefix += p;
        if (p != 0 && p != prefix) r *= binomial(prefix, p);
    }
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    if (n < 1'000'000'000'000LL) {
        for (std::int64_t i = 5; i * i <= n; i += 6) {
            if (n % i == 0 || n % (i + 2) == 0) return false;
        }
        return true;
    }
    Integer v = n;
    return mpz_probab_prime_p(v.raw(), 40) > 0;
}

bool is_prime(const Integer& n) {
    if (n.fits_int64()) return is_prime(n.to_int64());
    return mpz_probab_prime_p(n.raw(), 40) > 0;
}

std::int64_t p_adic_valuation(const Integer& x, std::int64_t p) {
    if (x.is_zero()) throw std::domain_error("p_adic_valuation: x must be nonzero");
    require_prime(p, "p_adic_valuation");
    Integer cofactor;
    const Integer pz = p;
    return static_cast<std::int64_t>(mpz_remove(cofactor.raw(), x.raw(), pz.raw()));
}

std::int64_t factorial_valuation(std::int64_t n, std::int64_t p) {
    if (n < 0) throw std::domain_error("factorial_valuation: n must be >= 0");
    require_prime(p, "factorial_valuation");
    std::int64_t total = 0;
    for (std::int64_t q = n / p; q > 0; q /= p) total += q;
    return total;
}

std::int64_t kummer_carries(std::int64_t n, std::int64_t k, std::int64_t p) {
    if (n < 0 || k < 0 || k > n) {
        throw std::domain_error("kummer_carries: need 0 <= k <= n");
    }
    require_prime(p, "kummer_carries");
    std::int64_t a = k, b = n - k, carry = 0, carries = 0;
    while (a > 0 || b > 0 || carry > 0) {
        const std::int64_t digit = a % p + b % p + carry;
        carry = digit >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
        if (a == 0 && b == 0) break;
    }
    return carries;
}

namespace {

// Fast path: n fits a machine word.
void factorize_small(std::int64_t n, std::vector<Factorization::Entry>& entries) {
    auto strip = [&](std::int64_t p) {
        if (n % p != 0) return;
        std::int64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        entries.push_back({Integer(p), e});
    };
    strip(2);
    strip(3);
    for (std::int64_t i = 5; i * i <= n; i += 6) {
        strip(i);
        strip(i + 2);
    }
    if (n > 1) entries.push_back({Integer(n), 1});
}

// Bignum path, for smooth values such as factorials; a composite cofactor
// with no prime factor below the trial bound is rejected.
void factorize_big(Integer n, std::vector<Factorization::Entry>& entries) {
    auto strip = [&](std::int64_t p) {
        const Integer pz = p;
        if (!pz.divides(n)) return;
        Integer rem;
        const auto e = mpz_remove(rem.raw(), n.raw(), pz.raw());
        n = rem;
        entries.push_back({pz, static_cast<std::int64_t>(e)});
    };
    strip(2);
    strip(3);
    for (std::int64_t i = 5; i <= kTrialBound && !n.is_one(); i += 6) {
        strip(i);
        strip(i + 2);
        if (n.fits_int64()) {
            factorize_small(n.to_int64(), entries);
            return;
        }
    }
    if (!n.is_one()) {
        if (is_prime(n)) {
            entries.push_back({n, 1});
        } else {
            throw std::domain_error("factorize: composite cofactor " + n.str() +
                                    " exceeds the trial-division bound");
        }
    }
}

} // namespace

Factorization factorize(const Integer& n) {
    if (n.sign() <= 0) throw std::domain_error("factorize: n must be >= 1, got " + n.str());
    std::vector<Factorization::Entry> entries;
    if (n.fits_int64()) {
        factorize_small(n.to_int64(), entries);
    } else {
        factorize_big(n, entries);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.prime < b.prime; });
    return Factorization::from_entries(std::move(entries));
}

Integer run_product_gcd(std::int64_t j, std::int64_t nu) {
    if (nu < 1 || nu > j) throw std::domain_error("run_product_gcd: need 1 <= nu <= j");
    Integer lo = 1, hi = 1;
    for (std::int64_t t = j - nu + 1; t <= j; ++t) lo *= t;
    for (std::int64_t t = j + 1; t <= j + nu; ++t) hi *= t;
    return gcd(lo, hi);
}

Factorization star_bound(std::int64_t nu) {
    if (nu < 1) throw std::domain_error("star_bound: nu must be >= 1");
    std::vector<Factorization::Entry> entries;
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(2 * nu))) {
        std::int64_t e = 0;
        for (std::int64_t pw = p; pw <= 2 * nu; pw *= p) {
            if (pw <= nu) {
                e += (nu + pw - 1) / pw;
            } else {
                e += (2 * nu + pw - 1) / pw - 1;
            }
        }
        if (e > 0) entries.push_back({Integer(p), e});
    }
    return Factorization::from_entries(std::move(entries));
}

Integer factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("factorial: n must be >= 0");
    Integer r;
    mpz_fac_ui(r.raw(), static_cast<unsigned long>(n));
    return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t m = static_cast<std::uint64_t>(i) * i; m <= limit; m += i) {
            composite[static_cast<std::size_t>(m)] = true;
        }
    }
    return primes;
}

} // namespace walkmom
