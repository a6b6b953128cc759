#ifndef PPOLY_CERTIFY_HPP
#define PPOLY_CERTIFY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <ppoly/arith.hpp>
#include <ppoly/bigint.hpp>
#include <ppoly/interval.hpp>
#include <ppoly/sequence.hpp>
#include <ppoly/transforms.hpp>

namespace ppoly {

/// A failed check: `modulus` does not divide `witness`.
///
/// Congruence failures use the prime p and a_{n+p} - a_n; divisibility
/// failures use P_n or d_n and b_n; recurrence failures use modulus 0 and
/// the nonzero residual.
struct Counterexample {
    std::size_t n = 0;
    BigInt modulus;
    BigInt witness;

    friend bool operator==(const Counterexample &, const Counterexample &) = default;
};

enum class Verdict { certified, refuted };

inline constexpr std::size_t max_counterexamples = 100;

/// Outcome of a finite-prefix certification. A certified verdict only ever
/// covers indices up to N.
struct CertReport {
    std::string check;
    Verdict verdict = Verdict::certified;
    std::size_t N = 0;
    std::vector<Counterexample> counterexamples; // sorted by (n, modulus)
    bool truncated = false;                      // more failures than listed

    [[nodiscard]] bool certified() const noexcept { return verdict == Verdict::certified; }

    [[nodiscard]] std::string verdict_text() const
    {
        return certified() ? "certified-up-to-" + std::to_string(N) : "refuted";
    }

    [[nodiscard]] std::string summary() const
    {
        if (certified()) {
            return check + ": certified up to N=" + std::to_string(N)
                   + " (finite prefix only; says nothing about indices beyond N)";
        }
        return check + ": refuted on the prefix 0.." + std::to_string(N) + " with "
               + std::to_string(counterexamples.size()) + (truncated ? "+" : "") + " counterexample(s)";
    }
};

namespace detail {

struct Failure {
    std::size_t n;
    BigInt modulus;
    BigInt witness;
};

inline CertReport finish_report(std::string check, std::size_t n_last, std::vector<Failure> failures)
{
    CertReport rep;
    rep.check = std::move(check);
    rep.N = n_last;
    std::sort(failures.begin(), failures.end(), [](const Failure &x, const Failure &y) {
        if (x.n != y.n) {
            return x.n < y.n;
        }
        return x.modulus < y.modulus;
    });
    if (failures.size() > max_counterexamples) {
        rep.truncated = true;
        failures.resize(max_counterexamples);
    }
    for (auto &f : failures) {
        rep.counterexamples.push_back({f.n, std::move(f.modulus), std::move(f.witness)});
    }
    rep.verdict = rep.counterexamples.empty() ? Verdict::certified : Verdict::refuted;
    return rep;
}

inline CertReport divisibility_report(std::string check, const IntSequence &b, const std::vector<BigInt> &moduli)
{
    std::vector<Failure> failures;
    for (std::size_t n = 0; n < b.size(); ++n) {
        if (!divides(moduli[n], b[n])) {
            failures.push_back({n, moduli[n], b[n]});
        }
    }
    return finish_report(std::move(check), b.last_index(), std::move(failures));
}

} // namespace detail

/// Checks a_{n+p} = a_n (mod p) for every prime p and every n with n+p <= N,
/// one residue scan per prime.
inline CertReport certify_primary_direct(const IntSequence &a)
{
    detail::require_origin(a, "certify_primary_direct");
    const std::size_t n_last = a.last_index();
    // (n, p) pairs first; witnesses are only built for the reported ones.
    std::vector<std::pair<std::size_t, std::uint64_t>> bad;
    const PrimeTable primes(n_last);
    for (auto p : primes.primes()) {
        std::vector<unsigned long> residue(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            residue[i] = mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(p));
        }
        for (std::size_t n = 0; n + p <= n_last; ++n) {
            if (residue[n + p] != residue[n]) {
                bad.emplace_back(n, p);
            }
        }
    }
    std::sort(bad.begin(), bad.end());
    std::vector<detail::Failure> failures;
    const bool truncated = bad.size() > max_counterexamples;
    for (std::size_t i = 0; i < bad.size() && i < max_counterexamples; ++i) {
        auto [n, p] = bad[i];
        failures.push_back({n, BigInt(static_cast<unsigned long>(p)), a[n + p] - a[n]});
    }
    auto rep = detail::finish_report("primary-direct", n_last, std::move(failures));
    rep.truncated = truncated;
    return rep;
}

/// Checks P_n | b_n for the binomial transform b of a.
inline CertReport certify_primary_hall(const IntSequence &a)
{
    auto b = binomial_transform(a);
    PrimorialTable primorials(a.last_index());
    return detail::divisibility_report("primary-hall", b, primorials.values());
}

/// Hall's criterion for pseudo-polynomials: d_n | b_n.
inline CertReport certify_pseudo_hall(const IntSequence &a)
{
    auto b = binomial_transform(a);
    LcmTable lcms(a.last_index());
    return detail::divisibility_report("pseudo-hall", b, lcms.values());
}

/// Eventual-polynomial detection: Q(X) = sum_k b_k C(X,k) over the nonzero b_k.
struct PolyDetect {
    bool is_eventually_polynomial = false;
    std::size_t M = 0;                               // last nonzero index of b
    std::vector<std::pair<std::size_t, BigInt>> poly; // (k, b_k), b_k != 0

    /// Q(n) in the binomial basis.
    [[nodiscard]] BigInt evaluate(std::uint64_t n) const
    {
        BigInt out = 0;
        for (const auto &[k, bk] : poly) {
            out += bk * binomial(n, k);
        }
        return out;
    }
};

inline PolyDetect detect_polynomial(const IntSequence &a, std::size_t tail)
{
    if (tail == 0 || tail >= a.size()) {
        throw domain_error("detect_polynomial: tail must satisfy 1 <= tail < length");
    }
    const auto b = binomial_transform(a);
    PolyDetect out;
    out.is_eventually_polynomial = std::all_of(b.terms.end() - static_cast<std::ptrdiff_t>(tail), b.terms.end(),
                                               [](const BigInt &v) { return v == 0; });
    if (!out.is_eventually_polynomial) {
        return out;
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k] != 0) {
            out.M = k;
            out.poly.emplace_back(k, b[k]);
        }
    }
    return out;
}

/// Empirical growth of log|a_n| / n.
struct GrowthEstimate {
    std::optional<Real> last;               // log|a_N| / N, absent when a_N = 0
    std::optional<Real> max_last_quarter;   // max over n in [N - N/4, N], a_n != 0
};

inline GrowthEstimate growth_exponent(const IntSequence &a, mpfr_prec_t prec = 192)
{
    if (a.size() < 8) {
        throw domain_error("growth_exponent: need at least 8 terms");
    }
    if (std::all_of(a.terms.begin(), a.terms.end(), [](const BigInt &v) { return v == 0; })) {
        throw domain_error("growth_exponent: all-zero prefix");
    }
    auto rate = [&](std::size_t n) {
        Real r(prec);
        BigInt mag = abs(a[n]);
        mpfr_set_z(r.get(), mag.get_mpz_t(), MPFR_RNDN);
        mpfr_log(r.get(), r.get(), MPFR_RNDN);
        mpfr_div_ui(r.get(), r.get(), static_cast<unsigned long>(n + a.offset), MPFR_RNDN);
        return r;
    };
    const std::size_t n_last = a.last_index();
    GrowthEstimate out;
    if (a[n_last] != 0) {
        out.last = rate(n_last);
    }
    for (std::size_t n = n_last - n_last / 4; n <= n_last; ++n) {
        if (a[n] == 0 || n + a.offset == 0) {
            continue;
        }
        Real r = rate(n);
        if (!out.max_last_quarter || mpfr_greater_p(r.get(), out.max_last_quarter->get())) {
            out.max_last_quarter = std::move(r);
        }
    }
    return out;
}

} // namespace ppoly

#endif // PPOLY_CERTIFY_HPP
