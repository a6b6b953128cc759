#ifndef PPOLY_ARITH_HPP
#define PPOLY_ARITH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <ppoly/bigint.hpp>

namespace ppoly {

/// Largest sieve limit accepted by primes_up_to.
inline constexpr std::uint64_t max_sieve_limit = std::uint64_t(1) << 32;

/// All primes <= limit, ascending.
class PrimeTable
{
public:
    explicit PrimeTable(std::uint64_t limit) : limit_(limit)
    {
        if (limit > max_sieve_limit) {
            throw domain_error("sieve limit " + std::to_string(limit) + " exceeds the cap "
                               + std::to_string(max_sieve_limit));
        }
        if (limit < 2) {
            return;
        }
        std::vector<bool> composite(limit + 1, false);
        for (std::uint64_t i = 2; i * i <= limit; ++i) {
            if (!composite[i]) {
                for (std::uint64_t j = i * i; j <= limit; j += i) {
                    composite[j] = true;
                }
            }
        }
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (!composite[i]) {
                primes_.push_back(i);
            }
        }
    }

    [[nodiscard]] std::uint64_t limit() const noexcept { return limit_; }
    [[nodiscard]] const std::vector<std::uint64_t> &primes() const noexcept { return primes_; }
    [[nodiscard]] std::size_t size() const noexcept { return primes_.size(); }

    [[nodiscard]] bool contains(std::uint64_t n) const
    {
        return std::binary_search(primes_.begin(), primes_.end(), n);
    }

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
};

inline PrimeTable primes_up_to(std::uint64_t n) { return PrimeTable(n); }

/// Deterministic for 64-bit inputs (GMP runs BPSW after trial division).
inline bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    BigInt v;
    mpz_import(v.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return mpz_probab_prime_p(v.get_mpz_t(), 30) > 0;
}

/// P_0, ..., P_N with P_0 = P_1 = 1. Immutable once built.
class PrimorialTable
{
public:
    explicit PrimorialTable(std::size_t n_max) : values_(n_max + 1)
    {
        PrimeTable primes(n_max);
        values_[0] = 1;
        std::size_t k = 0;
        for (std::size_t n = 1; n <= n_max; ++n) {
            values_[n] = values_[n - 1];
            if (k < primes.size() && primes.primes()[k] == n) {
                values_[n] *= static_cast<unsigned long>(n);
                ++k;
            }
        }
    }

    [[nodiscard]] std::size_t max_index() const noexcept { return values_.size() - 1; }
    const BigInt &operator[](std::size_t n) const { return values_.at(n); }
    [[nodiscard]] const std::vector<BigInt> &values() const noexcept { return values_; }

private:
    std::vector<BigInt> values_;
};

/// d_0, ..., d_N with d_n = lcm{1..n} and d_0 = 1. Immutable once built.
class LcmTable
{
public:
    explicit LcmTable(std::size_t n_max) : values_(n_max + 1)
    {
        PrimeTable primes(n_max);
        values_[0] = 1;
        for (std::size_t n = 1; n <= n_max; ++n) {
            values_[n] = values_[n - 1];
            // n = p^k multiplies the lcm by p
            for (auto p : primes.primes()) {
                if (p > n) {
                    break;
                }
                if (n % p == 0) {
                    std::size_t m = n;
                    while (m % p == 0) {
                        m /= p;
                    }
                    if (m == 1) {
                        values_[n] *= static_cast<unsigned long>(p);
                    }
                    break;
                }
            }
        }
    }

    [[nodiscard]] std::size_t max_index() const noexcept { return values_.size() - 1; }
    const BigInt &operator[](std::size_t n) const { return values_.at(n); }
    [[nodiscard]] const std::vector<BigInt> &values() const noexcept { return values_; }

private:
    std::vector<BigInt> values_;
};

inline BigInt primorial(std::size_t n)
{
    BigInt out = 1;
    const PrimeTable primes(n);
    for (auto p : primes.primes()) {
        out *= static_cast<unsigned long>(p);
    }
    return out;
}

inline BigInt lcm_to(std::size_t n)
{
    BigInt out = 1;
    const PrimeTable primes(n);
    for (auto p : primes.primes()) {
        std::uint64_t pk = p;
        while (pk <= n / p) {
            pk *= p;
        }
        out *= static_cast<unsigned long>(pk);
    }
    return out;
}

/// C(n,k) by the multiplicative formula; 0 when k > n.
inline BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        out *= static_cast<unsigned long>(n - k + i);
        mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return out;
}

/// Row n of Pascal's triangle, C(n,0..n), built from row n-1.
inline std::vector<BigInt> next_pascal_row(const std::vector<BigInt> &row)
{
    std::vector<BigInt> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t k = 1; k < row.size(); ++k) {
        next[k] = row[k - 1] + row[k];
    }
    return next;
}

/// Rows 0..n_max of Pascal's triangle.
inline std::vector<std::vector<BigInt>> pascal_triangle(std::size_t n_max)
{
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({BigInt(1)});
    for (std::size_t n = 1; n <= n_max; ++n) {
        rows.push_back(next_pascal_row(rows.back()));
    }
    return rows;
}

/// C(n,0..n) by the multiplicative recurrence C(n,k+1) = C(n,k)(n-k)/(k+1).
inline std::vector<BigInt> binomial_row(std::uint64_t n)
{
    std::vector<BigInt> row(n + 1);
    row[0] = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        row[k + 1] = row[k] * static_cast<unsigned long>(n - k);
        mpz_divexact_ui(row[k + 1].get_mpz_t(), row[k + 1].get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return row;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1U) {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1U;
    }
    return r;
}

// C(n,k) mod p for n < p; O(min(k, n-k)) multiplications.
inline std::uint64_t small_binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t num = 1 % p;
    std::uint64_t den = 1 % p;
    for (std::uint64_t i = 1; i <= k; ++i) {
        num = mulmod(num, (n - k + i) % p, p);
        den = mulmod(den, i % p, p);
    }
    return mulmod(num, powmod(den, p - 2, p), p);
}

} // namespace detail

/// C(n,k) mod p via Lucas' theorem over the base-p digits of n and k.
inline std::uint64_t lucas_binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p)
{
    if (!is_prime(p)) {
        throw domain_error("lucas_binomial_mod: modulus " + std::to_string(p) + " is not prime");
    }
    std::uint64_t out = 1;
    while (n != 0 || k != 0) {
        std::uint64_t ni = n % p;
        std::uint64_t ki = k % p;
        if (ki > ni) {
            return 0;
        }
        out = detail::mulmod(out, detail::small_binomial_mod(ni, ki, p), p);
        n /= p;
        k /= p;
    }
    return out;
}

} // namespace ppoly

#endif // PPOLY_ARITH_HPP
