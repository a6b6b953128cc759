#ifndef PPOLY_RECUR_HPP
#define PPOLY_RECUR_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <ppoly/bigint.hpp>
#include <ppoly/certify.hpp>
#include <ppoly/sequence.hpp>

namespace ppoly {

/// Integer polynomial, coefficient i multiplies n^i.
using IntPoly = std::vector<BigInt>;

inline BigInt evaluate(const IntPoly &p, const BigInt &n)
{
    BigInt out = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        out = out * n + *it;
    }
    return out;
}

/// Degree of p, or -1 for the zero polynomial.
inline long degree(const IntPoly &p)
{
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] != 0) {
            return static_cast<long>(i);
        }
    }
    return -1;
}

/// sum_{j=0}^{S} p_j(n) a_{n+j} = 0.
struct PolyRecurrence {
    std::size_t order = 0;
    std::vector<IntPoly> polys; // order + 1 entries

    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(polys.begin(), polys.end(), [](const IntPoly &p) { return degree(p) < 0; });
    }

    [[nodiscard]] std::vector<long> degree_vector() const
    {
        std::vector<long> out;
        out.reserve(polys.size());
        for (const auto &p : polys) {
            out.push_back(degree(p));
        }
        return out;
    }

    /// Content 1, trailing zero coefficients trimmed, and a positive leading
    /// coefficient on the highest-index nonzero polynomial.
    [[nodiscard]] PolyRecurrence normalized() const
    {
        PolyRecurrence r = *this;
        r.polys.resize(r.order + 1);
        BigInt g = 0;
        for (auto &p : r.polys) {
            while (!p.empty() && p.back() == 0) {
                p.pop_back();
            }
            for (const auto &c : p) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            }
        }
        if (g == 0) {
            throw domain_error("recurrence has only zero polynomials");
        }
        for (std::size_t j = r.polys.size(); j-- > 0;) {
            if (!r.polys[j].empty()) {
                if (r.polys[j].back() < 0) {
                    g = -g;
                }
                break;
            }
        }
        for (auto &p : r.polys) {
            for (auto &c : p) {
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
            }
        }
        return r;
    }

    [[nodiscard]] BigInt residual(const IntSequence &a, std::size_t n) const
    {
        BigInt acc = 0;
        const BigInt nn(static_cast<unsigned long>(n));
        for (std::size_t j = 0; j <= order; ++j) {
            if (!polys[j].empty()) {
                acc += evaluate(polys[j], nn) * a[n + j];
            }
        }
        return acc;
    }

    friend bool operator==(const PolyRecurrence &, const PolyRecurrence &) = default;
};

/// Same recurrence up to a nonzero scalar.
inline bool equivalent(const PolyRecurrence &x, const PolyRecurrence &y)
{
    return x.order == y.order && x.normalized() == y.normalized();
}

struct GuessBudget {
    std::size_t S_max = 2;
    std::size_t D_max = 2;
    std::size_t verify_margin = 10;
    /// Skip (S,D) cells whose system has full rank modulo a 62-bit prime.
    /// Never changes the result, only the running time.
    bool modular_prefilter = true;

    [[nodiscard]] std::size_t required_length() const
    {
        return (S_max + 1) * (D_max + 1) + S_max + verify_margin;
    }
};

namespace detail {

inline constexpr std::uint64_t prefilter_prime = 4611686018427387847ULL; // 2^62 - 57

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m)
{
    return powmod(a, m - 2, m);
}

// Rank of an integer matrix modulo a prime.
inline std::size_t rank_mod_p(const std::vector<std::vector<BigInt>> &rows, std::size_t cols, std::uint64_t p)
{
    std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m[i][j] = mpz_fdiv_ui(rows[i][j].get_mpz_t(), static_cast<unsigned long>(p));
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) {
            ++piv;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[piv], m[rank]);
        const std::uint64_t inv = mod_inverse(m[rank][col], p);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) {
                continue;
            }
            const std::uint64_t f = mulmod(m[i][col], inv, p);
            for (std::size_t j = col; j < cols; ++j) {
                m[i][j] = (m[i][j] + p - mulmod(f, m[rank][j], p)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

// Fraction-free (Bareiss) row echelon form, then rational back substitution.
// Returns a basis of the right nullspace, each vector scaled to coprime integers.
inline std::vector<std::vector<BigInt>> integer_nullspace(std::vector<std::vector<BigInt>> m, std::size_t cols)
{
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) {
            ++piv;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[i][j] = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        pivot_cols.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<BigRational> x(cols);
        x[free] = 1;
        for (std::size_t r = rank; r-- > 0;) {
            const std::size_t pc = pivot_cols[r];
            BigRational acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (x[j] != 0 && m[r][j] != 0) {
                    acc += BigRational(m[r][j]) * x[j];
                }
            }
            x[pc] = -acc / BigRational(m[r][pc]);
        }
        BigInt lcm_den = 1;
        for (const auto &v : x) {
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
        }
        std::vector<BigInt> ints(cols);
        BigInt g = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            BigRational scaled = x[j] * BigRational(lcm_den);
            ints[j] = scaled.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[j].get_mpz_t());
        }
        for (auto &v : ints) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
        basis.push_back(std::move(ints));
    }
    return basis;
}

inline PolyRecurrence recurrence_from_vector(const std::vector<BigInt> &v, std::size_t S, std::size_t D)
{
    PolyRecurrence r;
    r.order = S;
    r.polys.assign(S + 1, IntPoly(D + 1));
    for (std::size_t j = 0; j <= S; ++j) {
        for (std::size_t i = 0; i <= D; ++i) {
            r.polys[j][i] = v[j * (D + 1) + i];
        }
    }
    return r.normalized();
}

} // namespace detail

/// Checks sum_j p_j(n) a_{n+j} = 0 for every n with n + S <= N.
inline CertReport verify_recurrence(const IntSequence &a, const PolyRecurrence &rec)
{
    if (a.size() <= rec.order) {
        throw domain_error("verify_recurrence: prefix shorter than the recurrence order");
    }
    if (rec.polys.size() != rec.order + 1) {
        throw domain_error("verify_recurrence: expected order + 1 polynomials");
    }
    std::vector<detail::Failure> failures;
    for (std::size_t n = 0; n + rec.order < a.size(); ++n) {
        BigInt res = rec.residual(a, n);
        if (res != 0) {
            failures.push_back({n, BigInt(0), std::move(res)});
        }
    }
    return detail::finish_report("recurrence", a.last_index(), std::move(failures));
}

/// Searches (S,D) cells by ascending S+D, then ascending S. For each cell the
/// homogeneous system over all usable n except the last `verify_margin`
/// equations is solved exactly; a nullspace vector is accepted when it also
/// satisfies the reserved equations.
inline std::optional<PolyRecurrence> guess_recurrence(const IntSequence &a, const GuessBudget &budget)
{
    if (budget.required_length() > a.size()) {
        throw domain_error("guess_recurrence: budget needs " + std::to_string(budget.required_length())
                           + " terms, prefix has " + std::to_string(a.size()));
    }
    const std::size_t len = a.size();
    for (std::size_t total = 0; total <= budget.S_max + budget.D_max; ++total) {
        for (std::size_t S = 0; S <= std::min(total, budget.S_max); ++S) {
            const std::size_t D = total - S;
            if (D > budget.D_max) {
                continue;
            }
            const std::size_t cols = (S + 1) * (D + 1);
            const std::size_t equations = len - S; // n = 0 .. N - S
            const std::size_t solve_rows = equations - budget.verify_margin;
            std::vector<std::vector<BigInt>> m(solve_rows, std::vector<BigInt>(cols));
            for (std::size_t n = 0; n < solve_rows; ++n) {
                for (std::size_t j = 0; j <= S; ++j) {
                    BigInt power = 1;
                    for (std::size_t i = 0; i <= D; ++i) {
                        m[n][j * (D + 1) + i] = power * a[n + j];
                        power *= static_cast<unsigned long>(n);
                    }
                }
            }
            if (budget.modular_prefilter && detail::rank_mod_p(m, cols, detail::prefilter_prime) == cols) {
                continue;
            }
            auto basis = detail::integer_nullspace(std::move(m), cols);
            std::optional<PolyRecurrence> best;
            for (const auto &v : basis) {
                auto rec = detail::recurrence_from_vector(v, S, D);
                bool tail_ok = true;
                for (std::size_t n = solve_rows; n < equations; ++n) {
                    if (rec.residual(a, n) != 0) {
                        tail_ok = false;
                        break;
                    }
                }
                if (tail_ok && (!best || rec.degree_vector() < best->degree_vector())) {
                    best = std::move(rec);
                }
            }
            if (best) {
                return best;
            }
        }
    }
    return std::nullopt;
}

/// Extends `initial` to N+1 terms by solving for a_{n+S} at each step.
inline IntSequence apply_recurrence(const PolyRecurrence &rec, const IntSequence &initial, std::size_t n_last)
{
    if (initial.size() < rec.order) {
        throw domain_error("apply_recurrence: need at least `order` initial terms");
    }
    if (rec.polys.size() != rec.order + 1) {
        throw domain_error("apply_recurrence: expected order + 1 polynomials");
    }
    IntSequence out = initial;
    if (out.size() > n_last + 1) {
        out.terms.resize(n_last + 1);
        return out;
    }
    const std::size_t S = rec.order;
    while (out.size() <= n_last) {
        const std::size_t n = out.size() - S;
        const BigInt nn(static_cast<unsigned long>(n));
        const BigInt lead = evaluate(rec.polys[S], nn);
        if (lead == 0) {
            throw leading_zero(n);
        }
        BigInt rhs = 0;
        for (std::size_t j = 0; j < S; ++j) {
            rhs -= evaluate(rec.polys[j], nn) * out[n + j];
        }
        if (!divides(lead, rhs)) {
            throw non_integral(n);
        }
        mpz_divexact(rhs.get_mpz_t(), rhs.get_mpz_t(), lead.get_mpz_t());
        out.terms.push_back(std::move(rhs));
    }
    return out;
}

} // namespace ppoly

#endif // PPOLY_RECUR_HPP
