#ifndef PPOLY_SEQUENCE_HPP
#define PPOLY_SEQUENCE_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include <ppoly/bigint.hpp>

namespace ppoly {

/// Finite prefix a_offset, ..., a_{offset+N} of an integer sequence.
struct IntSequence {
    std::size_t offset = 0;
    std::vector<BigInt> terms;

    IntSequence() = default;
    explicit IntSequence(std::vector<BigInt> t, std::size_t off = 0) : offset(off), terms(std::move(t)) {}
    IntSequence(std::initializer_list<long> values)
    {
        terms.reserve(values.size());
        for (long v : values) {
            terms.emplace_back(v);
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return terms.size(); }
    [[nodiscard]] bool empty() const noexcept { return terms.empty(); }
    /// Index of the last term relative to the offset (length - 1).
    [[nodiscard]] std::size_t last_index() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }

    const BigInt &operator[](std::size_t i) const { return terms[i]; }
    BigInt &operator[](std::size_t i) { return terms[i]; }

    friend bool operator==(const IntSequence &a, const IntSequence &b)
    {
        return a.offset == b.offset && a.terms == b.terms;
    }
};

/// Truncated power series sum_{n<=order} coeffs[n] x^n over Q.
class RationalSeries
{
public:
    RationalSeries() : coeffs_(1) {}
    explicit RationalSeries(std::size_t order) : coeffs_(order + 1) {}
    explicit RationalSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            coeffs_.resize(1);
        }
    }

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] const std::vector<BigRational> &coeffs() const noexcept { return coeffs_; }
    const BigRational &operator[](std::size_t i) const { return coeffs_[i]; }
    BigRational &operator[](std::size_t i) { return coeffs_[i]; }

    /// Same series cut (or zero-padded) to a new order.
    [[nodiscard]] RationalSeries truncated(std::size_t order) const
    {
        std::vector<BigRational> c(order + 1);
        for (std::size_t i = 0; i <= order && i < coeffs_.size(); ++i) {
            c[i] = coeffs_[i];
        }
        return RationalSeries(std::move(c));
    }

    friend RationalSeries operator+(const RationalSeries &a, const RationalSeries &b)
    {
        std::size_t ord = std::min(a.order(), b.order());
        RationalSeries out(ord);
        for (std::size_t i = 0; i <= ord; ++i) {
            out[i] = a[i] + b[i];
        }
        return out;
    }

    friend RationalSeries operator*(const BigRational &s, const RationalSeries &a)
    {
        RationalSeries out(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            out[i] = s * a[i];
        }
        return out;
    }

    // Cauchy product mod x^{min order + 1}.
    friend RationalSeries operator*(const RationalSeries &a, const RationalSeries &b)
    {
        std::size_t ord = std::min(a.order(), b.order());
        RationalSeries out(ord);
        for (std::size_t i = 0; i <= ord; ++i) {
            if (a[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j <= ord; ++j) {
                out[i + j] += a[i] * b[j];
            }
        }
        return out;
    }

    friend bool operator==(const RationalSeries &a, const RationalSeries &b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<BigRational> coeffs_;
};

} // namespace ppoly

#endif // PPOLY_SEQUENCE_HPP
