#ifndef PPOLY_EGFINV_HPP
#define PPOLY_EGFINV_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <ppoly/arith.hpp>
#include <ppoly/bigint.hpp>
#include <ppoly/sequence.hpp>
#include <ppoly/transforms.hpp>

namespace ppoly {

/// Coefficients of 1/F_b in the exponential basis:
/// c_0 = 1, c_n = -sum_{k=1}^{n} C(n,k) b_k c_{n-k}.
inline IntSequence egf_reciprocal(const IntSequence &b)
{
    if (b.empty() || b[0] != 1) {
        throw domain_error("egf_reciprocal: b_0 must equal 1");
    }
    IntSequence c;
    c.terms.reserve(b.size());
    c.terms.emplace_back(1);
    for (std::size_t n = 1; n < b.size(); ++n) {
        const auto row = binomial_row(n);
        BigInt acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (b[k] != 0) {
                acc += row[k] * b[k] * c[n - k];
            }
        }
        c.terms.push_back(-acc);
    }
    return c;
}

struct EgfTriple {
    IntSequence b; // binomial transform of a
    IntSequence c; // EGF reciprocal of b
    IntSequence u; // inverse binomial transform of c
};

/// The a -> u construction for a primary pseudo-polynomial with a_0 = 1.
inline EgfTriple theorem51_u(const IntSequence &a)
{
    detail::require_origin(a, "theorem51_u");
    if (a.empty() || a[0] != 1) {
        throw domain_error("theorem51_u: a_0 must equal 1 (no rescaling is attempted)");
    }
    EgfTriple t;
    t.b = binomial_transform(a);
    t.c = egf_reciprocal(t.b);
    t.u = inverse_binomial_transform(t.c);
    return t;
}

/// Fixed-point decimal of num/den rounded half away from zero to `digits`
/// places, trailing zeros dropped.
inline std::string rational_to_decimal(const BigRational &q, std::size_t digits)
{
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt num = abs(q.get_num()) * scale * 2 + q.get_den();
    BigInt den = q.get_den() * 2;
    BigInt scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::string s = scaled.get_str(10);
    if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    std::string int_part = s.substr(0, s.size() - digits);
    std::string frac = s.substr(s.size() - digits);
    while (!frac.empty() && frac.back() == '0') {
        frac.pop_back();
    }
    std::string out = int_part;
    if (!frac.empty()) {
        out += "." + frac;
    }
    if (q < 0 && scaled != 0) {
        out.insert(0, "-");
    }
    return out;
}

/// u_n / n! for every index, exact quotient rounded to `digits` decimals.
inline std::vector<std::string> u_over_factorial(const IntSequence &u, std::size_t digits)
{
    std::vector<std::string> out;
    out.reserve(u.size());
    BigInt fact = 1;
    for (std::size_t n = 0; n < u.size(); ++n) {
        const std::size_t index = n + u.offset;
        if (n == 0) {
            mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(index));
        } else {
            fact *= static_cast<unsigned long>(index);
        }
        BigRational q(u[n], fact);
        q.canonicalize();
        out.push_back(rational_to_decimal(q, digits));
    }
    return out;
}

} // namespace ppoly

#endif // PPOLY_EGFINV_HPP
