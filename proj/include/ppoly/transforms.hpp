#ifndef PPOLY_TRANSFORMS_HPP
#define PPOLY_TRANSFORMS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <ppoly/bigint.hpp>
#include <ppoly/sequence.hpp>

namespace ppoly {

namespace detail {

inline void require_origin(const IntSequence &s, const char *what)
{
    if (s.offset != 0) {
        throw domain_error(std::string(what) + ": sequence offset is " + std::to_string(s.offset)
                           + ", re-index to 0 first");
    }
}

} // namespace detail

/// b_n = sum_k (-1)^{n-k} C(n,k) a_k, via the forward-difference triangle.
inline IntSequence binomial_transform(const IntSequence &a)
{
    detail::require_origin(a, "binomial_transform");
    IntSequence t = a;
    const std::size_t n_max = t.size();
    for (std::size_t level = 1; level < n_max; ++level) {
        for (std::size_t i = n_max - 1; i >= level; --i) {
            t[i] -= t[i - 1];
        }
    }
    return t;
}

/// a_n = sum_k C(n,k) b_k; undoes binomial_transform pass by pass.
inline IntSequence inverse_binomial_transform(const IntSequence &b)
{
    detail::require_origin(b, "inverse_binomial_transform");
    IntSequence t = b;
    const std::size_t n_max = t.size();
    for (std::size_t level = n_max; level-- > 1;) {
        for (std::size_t i = level; i < n_max; ++i) {
            t[i] += t[i - 1];
        }
    }
    return t;
}

/// Ordinary generating function of the prefix, truncated at its last index.
inline RationalSeries ogf_of(const IntSequence &s)
{
    std::vector<BigRational> c;
    c.reserve(s.size());
    for (const auto &v : s.terms) {
        c.emplace_back(v);
    }
    return RationalSeries(std::move(c));
}

/// f(g(x)) mod x^{order+1} for a series g with g(0) = 0.
inline RationalSeries compose(const RationalSeries &f, const RationalSeries &g, std::size_t order)
{
    if (g.order() >= 1 && g[0] != 0) {
        throw domain_error("compose: inner series must vanish at 0");
    }
    RationalSeries out(order);
    RationalSeries power(order);
    power[0] = 1;
    RationalSeries inner = g.truncated(order);
    for (std::size_t k = 0; k <= order && k <= f.order(); ++k) {
        if (f[k] != 0) {
            for (std::size_t i = 0; i <= order; ++i) {
                out[i] += f[k] * power[i];
            }
        }
        power = power * inner;
    }
    return out;
}

/// sum_n s^n x^n mod x^{order+1}, i.e. 1/(1 - s x).
inline RationalSeries geometric_series(const BigRational &s, std::size_t order)
{
    RationalSeries out(order);
    BigRational p = 1;
    for (std::size_t i = 0; i <= order; ++i) {
        out[i] = p;
        p *= s;
    }
    return out;
}

/// Checks both generating-series identities linking a and its binomial
/// transform b, modulo x^{order+1}:
///   f_b(x) = 1/(1+x) f_a(x/(1+x)),   f_a(x) = 1/(1-x) f_b(x/(1-x)).
inline bool substitute_check(const IntSequence &a, const IntSequence &b, std::size_t order)
{
    if (a.size() <= order || b.size() <= order) {
        throw domain_error("substitute_check: prefixes too short for order " + std::to_string(order));
    }
    const RationalSeries fa = ogf_of(a).truncated(order);
    const RationalSeries fb = ogf_of(b).truncated(order);

    const RationalSeries inv_plus = geometric_series(-1, order);  // 1/(1+x)
    const RationalSeries inv_minus = geometric_series(1, order);  // 1/(1-x)
    RationalSeries x_over_plus(order);
    RationalSeries x_over_minus(order);
    for (std::size_t i = 1; i <= order; ++i) {
        x_over_plus[i] = inv_plus[i - 1];
        x_over_minus[i] = inv_minus[i - 1];
    }

    const bool forward = fb == inv_plus * compose(fa, x_over_plus, order);
    const bool backward = fa == inv_minus * compose(fb, x_over_minus, order);
    return forward && backward;
}

} // namespace ppoly

#endif // PPOLY_TRANSFORMS_HPP
