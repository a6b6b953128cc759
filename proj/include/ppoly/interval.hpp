#ifndef PPOLY_INTERVAL_HPP
#define PPOLY_INTERVAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include <mpfr.h>

#include <ppoly/bigint.hpp>

namespace ppoly {

/// Owning wrapper around an mpfr_t.
class Real
{
public:
    explicit Real(mpfr_prec_t prec = 256) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real &o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real &&o) noexcept
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real &operator=(const Real &o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real &operator=(Real &&o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }
    [[nodiscard]] mpfr_prec_t prec() const noexcept { return mpfr_get_prec(v_); }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Exact rational value (every finite mpfr number is dyadic).
    [[nodiscard]] BigRational to_rational() const
    {
        BigRational q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

    /// Scientific decimal string with `digits` significant digits.
    [[nodiscard]] std::string to_string(std::size_t digits = 30, mpfr_rnd_t rnd = MPFR_RNDN) const
    {
        if (mpfr_zero_p(v_)) {
            return "0";
        }
        if (!mpfr_number_p(v_)) {
            return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
        }
        mpfr_exp_t exp10 = 0;
        char *raw = mpfr_get_str(nullptr, &exp10, 10, digits, v_, rnd);
        std::string mant(raw);
        mpfr_free_str(raw);
        std::string sign;
        if (mant.front() == '-') {
            sign = "-";
            mant.erase(0, 1);
        }
        std::string out = sign + mant.substr(0, 1);
        if (mant.size() > 1) {
            out += "." + mant.substr(1);
        }
        if (exp10 - 1 != 0) {
            out += "e" + std::to_string(static_cast<long long>(exp10 - 1));
        }
        return out;
    }

    /// Fixed-point decimal string with `decimals` digits after the point.
    [[nodiscard]] std::string to_fixed(int decimals = 20) const
    {
        if (!mpfr_number_p(v_)) {
            return to_string();
        }
        char *raw = nullptr;
        mpfr_asprintf(&raw, "%.*RNf", decimals, v_);
        std::string out(raw);
        mpfr_free_str(raw);
        return out;
    }

private:
    mpfr_t v_;
};

/// Closed interval [lo, hi] with outward-rounded endpoints. Every operation
/// returns an enclosure of the exact result; transcendental functions are
/// widened by one extra ulp on each side on top of MPFR's directed rounding.
class Interval
{
public:
    explicit Interval(mpfr_prec_t prec = 256) : lo_(prec), hi_(prec) {}

    static Interval from_si(long v, mpfr_prec_t prec)
    {
        Interval r(prec);
        mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
        mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
        return r;
    }
    static Interval from_ui(unsigned long v, mpfr_prec_t prec)
    {
        Interval r(prec);
        mpfr_set_ui(r.lo_.get(), v, MPFR_RNDD);
        mpfr_set_ui(r.hi_.get(), v, MPFR_RNDU);
        return r;
    }
    static Interval from_z(const BigInt &v, mpfr_prec_t prec)
    {
        Interval r(prec);
        mpfr_set_z(r.lo_.get(), v.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(r.hi_.get(), v.get_mpz_t(), MPFR_RNDU);
        return r;
    }
    static Interval from_q(const BigRational &v, mpfr_prec_t prec)
    {
        Interval r(prec);
        mpfr_set_q(r.lo_.get(), v.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_.get(), v.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static Interval hull(const Real &a, const Real &b)
    {
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        Interval r(p);
        if (mpfr_cmp(a.get(), b.get()) <= 0) {
            mpfr_set(r.lo_.get(), a.get(), MPFR_RNDD);
            mpfr_set(r.hi_.get(), b.get(), MPFR_RNDU);
        } else {
            mpfr_set(r.lo_.get(), b.get(), MPFR_RNDD);
            mpfr_set(r.hi_.get(), a.get(), MPFR_RNDU);
        }
        return r;
    }
    static Interval e(mpfr_prec_t prec) { return exp(from_ui(1, prec)); }
    static Interval pi(mpfr_prec_t prec)
    {
        Interval r(prec);
        mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
        mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
        return r;
    }

    [[nodiscard]] const Real &lo() const noexcept { return lo_; }
    [[nodiscard]] const Real &hi() const noexcept { return hi_; }
    [[nodiscard]] mpfr_prec_t prec() const noexcept { return lo_.prec(); }

    /// Rounded-to-nearest midpoint.
    [[nodiscard]] Real mid() const
    {
        Real m(prec());
        mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
        mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
        return m;
    }
    [[nodiscard]] Real width() const
    {
        Real w(prec());
        mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        return w;
    }
    [[nodiscard]] bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }
    [[nodiscard]] bool is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }

    friend Interval operator+(const Interval &a, const Interval &b)
    {
        Interval r(std::max(a.prec(), b.prec()));
        mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
        mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval &a, const Interval &b)
    {
        Interval r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
        mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval &a)
    {
        Interval r(a.prec());
        mpfr_neg(r.lo_.get(), a.hi_.get(), MPFR_RNDD);
        mpfr_neg(r.hi_.get(), a.lo_.get(), MPFR_RNDU);
        return r;
    }
    friend Interval operator*(const Interval &a, const Interval &b)
    {
        const mpfr_prec_t p = std::max(a.prec(), b.prec());
        Interval r(p);
        Real t(p);
        const Real *xs[2] = {&a.lo_, &a.hi_};
        const Real *ys[2] = {&b.lo_, &b.hi_};
        bool first = true;
        for (auto *x : xs) {
            for (auto *y : ys) {
                mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
                if (first || mpfr_cmp(t.get(), r.lo_.get()) < 0) {
                    mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
                }
                mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
                if (first || mpfr_cmp(t.get(), r.hi_.get()) > 0) {
                    mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
                }
                first = false;
            }
        }
        return r;
    }
    friend Interval operator/(const Interval &a, const Interval &b)
    {
        if (b.contains_zero()) {
            throw precision_exhausted("interval division by an enclosure containing 0");
        }
        const mpfr_prec_t p = std::max(a.prec(), b.prec());
        Interval inv(p);
        mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
        mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
        return a * inv;
    }

    friend Interval sqr(const Interval &a)
    {
        Interval r(a.prec());
        if (mpfr_sgn(a.lo_.get()) >= 0) {
            mpfr_sqr(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
            mpfr_sqr(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
        } else if (mpfr_sgn(a.hi_.get()) <= 0) {
            mpfr_sqr(r.lo_.get(), a.hi_.get(), MPFR_RNDD);
            mpfr_sqr(r.hi_.get(), a.lo_.get(), MPFR_RNDU);
        } else {
            mpfr_set_zero(r.lo_.get(), 1);
            Real t(a.prec());
            mpfr_sqr(r.hi_.get(), a.lo_.get(), MPFR_RNDU);
            mpfr_sqr(t.get(), a.hi_.get(), MPFR_RNDU);
            mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
        }
        return r;
    }

    /// Square root; negative parts of the enclosure are clamped to 0.
    friend Interval sqrt(const Interval &a)
    {
        if (mpfr_sgn(a.hi_.get()) < 0) {
            throw domain_error("interval sqrt of a negative enclosure");
        }
        Interval r(a.prec());
        if (mpfr_sgn(a.lo_.get()) <= 0) {
            mpfr_set_zero(r.lo_.get(), 1);
        } else {
            mpfr_sqrt(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
        }
        mpfr_sqrt(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
        return r;
    }

    friend Interval log(const Interval &a)
    {
        if (mpfr_sgn(a.lo_.get()) <= 0) {
            throw precision_exhausted("interval log of an enclosure touching 0");
        }
        Interval r(a.prec());
        if (a.is_point() && mpfr_cmp_ui(a.lo_.get(), 1) == 0) {
            return r; // log 1 = 0 exactly
        }
        mpfr_log(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
        mpfr_log(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
        r.widen_ulp();
        return r;
    }

    friend Interval exp(const Interval &a)
    {
        Interval r(a.prec());
        if (a.is_point() && mpfr_zero_p(a.lo_.get())) {
            mpfr_set_ui(r.lo_.get(), 1, MPFR_RNDD);
            mpfr_set_ui(r.hi_.get(), 1, MPFR_RNDU);
            return r;
        }
        mpfr_exp(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
        mpfr_exp(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
        r.widen_ulp();
        if (mpfr_sgn(r.lo_.get()) < 0) {
            mpfr_set_zero(r.lo_.get(), 1);
        }
        return r;
    }

    friend Interval min(const Interval &a, const Interval &b)
    {
        Interval r(std::max(a.prec(), b.prec()));
        mpfr_min(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
        mpfr_min(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
        return r;
    }
    friend Interval max(const Interval &a, const Interval &b)
    {
        Interval r(std::max(a.prec(), b.prec()));
        mpfr_max(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
        mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
        return r;
    }

    /// a^k for a >= 0 and integer k >= 0.
    friend Interval pow_ui(const Interval &a, unsigned long k)
    {
        if (mpfr_sgn(a.lo_.get()) < 0) {
            throw domain_error("pow_ui needs a nonnegative base");
        }
        Interval r(a.prec());
        mpfr_pow_ui(r.lo_.get(), a.lo_.get(), k, MPFR_RNDD);
        mpfr_pow_ui(r.hi_.get(), a.hi_.get(), k, MPFR_RNDU);
        return r;
    }

    /// floor of the exact value when the enclosure decides it.
    [[nodiscard]] std::optional<BigInt> floor_exact() const
    {
        BigInt a;
        BigInt b;
        mpfr_get_z(a.get_mpz_t(), lo_.get(), MPFR_RNDD);
        mpfr_get_z(b.get_mpz_t(), hi_.get(), MPFR_RNDD);
        if (a != b) {
            return std::nullopt;
        }
        return a;
    }
    [[nodiscard]] std::optional<BigInt> ceil_exact() const
    {
        BigInt a;
        BigInt b;
        mpfr_get_z(a.get_mpz_t(), lo_.get(), MPFR_RNDU);
        mpfr_get_z(b.get_mpz_t(), hi_.get(), MPFR_RNDU);
        if (a != b) {
            return std::nullopt;
        }
        return a;
    }
    /// Ceiling of the upper endpoint (an outward bound on ceil(value)).
    [[nodiscard]] BigInt ceil_upper() const
    {
        BigInt b;
        mpfr_get_z(b.get_mpz_t(), hi_.get(), MPFR_RNDU);
        return b;
    }
    [[nodiscard]] BigInt floor_upper() const
    {
        BigInt b;
        mpfr_get_z(b.get_mpz_t(), hi_.get(), MPFR_RNDD);
        return b;
    }

    // Certain comparisons: true only when every point of the enclosures agrees.
    friend bool certainly_lt(const Interval &a, const Interval &b) { return mpfr_less_p(a.hi_.get(), b.lo_.get()) != 0; }
    friend bool certainly_le(const Interval &a, const Interval &b) { return mpfr_lessequal_p(a.hi_.get(), b.lo_.get()) != 0; }
    friend bool certainly_gt(const Interval &a, const Interval &b) { return certainly_lt(b, a); }
    friend bool certainly_ge(const Interval &a, const Interval &b) { return certainly_le(b, a); }

    [[nodiscard]] std::string to_string(std::size_t digits = 30) const
    {
        return "[" + lo_.to_string(digits, MPFR_RNDD) + ", " + hi_.to_string(digits, MPFR_RNDU) + "]";
    }

private:
    void widen_ulp()
    {
        mpfr_nextbelow(lo_.get());
        mpfr_nextabove(hi_.get());
    }

    Real lo_;
    Real hi_;
};

// Namespace-scope declarations so qualified calls resolve.
Interval sqr(const Interval &a);
Interval sqrt(const Interval &a);
Interval log(const Interval &a);
Interval exp(const Interval &a);
Interval min(const Interval &a, const Interval &b);
Interval max(const Interval &a, const Interval &b);
Interval pow_ui(const Interval &a, unsigned long k);

/// Bit length of |v| (0 for v = 0).
inline std::size_t bit_length(const BigInt &v)
{
    return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

} // namespace ppoly

#endif // PPOLY_INTERVAL_HPP
