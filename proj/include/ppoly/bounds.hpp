#ifndef PPOLY_BOUNDS_HPP
#define PPOLY_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <mpfr.h>

#include <ppoly/arith.hpp>
#include <ppoly/bigint.hpp>
#include <ppoly/errors.hpp>
#include <ppoly/interval.hpp>

/// Effective constants for linear recurrences satisfied by primary
/// pseudo-polynomials with |a_n| <= c delta^n, 1 < delta < e.
///
/// Every real quantity is carried as an outward-rounded Interval and every
/// inequality is decided at adverse rounding. Computations start at
/// PrecisionCtx::bits and double the working precision whenever an enclosure
/// is too wide to decide a comparison; precision_exhausted is thrown only
/// past PrecisionCtx::max_bits (or the per-h limit of the H search).
namespace ppoly::bounds {

struct PrecisionCtx {
    mpfr_prec_t bits = 256;
    mpfr_prec_t max_bits = mpfr_prec_t(1) << 17;
    /// The H search gives up beyond h = 2^max_search_bits.
    std::size_t max_search_bits = std::size_t(1) << 16;
    /// Upper end of the J(eps) scan.
    std::uint64_t j_cap = 1'000'000;
};

/// The growth base delta, either a rational or exp(q) for a rational q.
class Delta
{
public:
    static Delta rational(BigRational v) { return Delta(false, std::move(v)); }
    /// delta = e^q, so log(delta) = q exactly.
    static Delta exp_of(BigRational q) { return Delta(true, std::move(q)); }

    [[nodiscard]] bool is_exp() const noexcept { return exp_; }
    [[nodiscard]] const BigRational &raw() const noexcept { return v_; }

    [[nodiscard]] std::optional<BigRational> exact_log() const
    {
        if (exp_) {
            return v_;
        }
        if (v_ == 1) {
            return BigRational(0);
        }
        return std::nullopt;
    }

    [[nodiscard]] Interval log(mpfr_prec_t prec) const
    {
        if (exp_) {
            return Interval::from_q(v_, prec);
        }
        return ppoly::log(Interval::from_q(v_, prec));
    }

    [[nodiscard]] Interval value(mpfr_prec_t prec) const
    {
        if (exp_) {
            return ppoly::exp(Interval::from_q(v_, prec));
        }
        return Interval::from_q(v_, prec);
    }

    [[nodiscard]] std::string to_string() const { return exp_ ? "exp(" + to_decimal(v_) + ")" : to_decimal(v_); }

private:
    Delta(bool is_exp, BigRational v) : exp_(is_exp), v_(std::move(v)) {}

    bool exp_;
    BigRational v_;
};

namespace detail {

/// Runs f at increasing precision until it returns a value.
template <class F>
auto escalate(const PrecisionCtx &ctx, F &&f, const char *what, mpfr_prec_t limit = 0, mpfr_prec_t start = 0)
{
    const mpfr_prec_t top = std::max(ctx.max_bits, limit);
    for (mpfr_prec_t prec = std::max(ctx.bits, start); prec <= top; prec *= 2) {
        try {
            auto r = f(prec);
            if (r) {
                return *r;
            }
        } catch (const precision_exhausted &) {
            // retry wider
        }
    }
    throw precision_exhausted(std::string(what) + ": enclosures still undecided at " + std::to_string(top)
                              + " bits");
}

inline Interval log_factorial(unsigned long n, mpfr_prec_t prec)
{
    Real lo(prec);
    Real hi(prec);
    Real arg(prec);
    mpfr_set_ui(arg.get(), n + 1, MPFR_RNDN); // exact for any n we scan
    mpfr_lngamma(lo.get(), arg.get(), MPFR_RNDD);
    mpfr_lngamma(hi.get(), arg.get(), MPFR_RNDU);
    mpfr_nextbelow(lo.get());
    mpfr_nextabove(hi.get());
    if (mpfr_sgn(lo.get()) < 0) {
        mpfr_set_zero(lo.get(), 1);
    }
    return Interval::hull(lo, hi);
}

inline Interval zeta2(mpfr_prec_t prec)
{
    return sqr(Interval::pi(prec)) / Interval::from_ui(6, prec);
}

inline Interval q(const BigRational &v, mpfr_prec_t prec) { return Interval::from_q(v, prec); }
inline Interval ui(unsigned long v, mpfr_prec_t prec) { return Interval::from_ui(v, prec); }

inline BigRational to_rational(const Real &r) { return r.to_rational(); }

inline void validate_delta(const Delta &delta, const PrecisionCtx &ctx)
{
    if (delta.is_exp()) {
        if (delta.raw() <= 0 || delta.raw() >= 1) {
            throw domain_error("delta = " + delta.to_string() + " is outside (1, e)");
        }
        return;
    }
    if (delta.raw() <= 1) {
        throw domain_error("delta = " + delta.to_string() + " is outside (1, e)");
    }
    const bool below_e = escalate(
        ctx,
        [&](mpfr_prec_t prec) -> std::optional<bool> {
            auto e = Interval::e(prec);
            auto d = delta.value(prec);
            if (certainly_lt(d, e)) {
                return true;
            }
            if (certainly_ge(d, e)) {
                return false;
            }
            return std::nullopt;
        },
        "delta < e");
    if (!below_e) {
        throw domain_error("delta = " + delta.to_string() + " is outside (1, e)");
    }
}

// max(lower, ceil(num/den)) where num/den is affine in log(delta); exact when
// log(delta) is rational, otherwise the ceiling of the upper enclosure.
inline unsigned long ceil_affine_ratio(const Delta &delta, const PrecisionCtx &ctx, long a_num, long b_num, long a_den,
                                       long b_den, long lower)
{
    BigInt ceiling;
    if (auto l = delta.exact_log()) {
        BigRational num = BigRational(a_num) * *l + b_num;
        BigRational den = BigRational(a_den) * *l + b_den;
        ceiling = ceil_div_rational(num / den, BigInt(1));
    } else {
        auto li = delta.log(ctx.bits);
        auto num = Interval::from_si(a_num, ctx.bits) * li + Interval::from_si(b_num, ctx.bits);
        auto den = Interval::from_si(a_den, ctx.bits) * li + Interval::from_si(b_den, ctx.bits);
        ceiling = (num / den).ceil_upper();
    }
    if (ceiling < lower) {
        return static_cast<unsigned long>(lower);
    }
    return ceiling.get_ui();
}

} // namespace detail

/// Degree bound max(0, ceil((5 log delta - 1)/(1 - log delta))).
inline unsigned long degree_bound_from_theorem(const Delta &delta, const PrecisionCtx &ctx = {})
{
    detail::validate_delta(delta, ctx);
    return detail::ceil_affine_ratio(delta, ctx, 5, -1, -1, 1, 0);
}

/// d = max(1, ceil(4 log delta / (1 - log delta))).
inline unsigned long initial_degree(const Delta &delta, const PrecisionCtx &ctx = {})
{
    detail::validate_delta(delta, ctx);
    return detail::ceil_affine_ratio(delta, ctx, 4, 0, -1, 1, 1);
}

/// Output of choose_parameters. Interval fields are enclosures at ctx.bits.
struct Parameters {
    BigRational c;
    Delta delta = Delta::rational(2);
    unsigned long d_initial = 0;
    unsigned long d = 0;         // working d, d_initial plus degeneracy bumps
    BigRational rho;             // exact dyadic point inside the verified interval
    BigRational epsilon;         // exact dyadic, (e - delta)/2 halved eps_halvings times
    unsigned eps_halvings = 0;

    Interval ell;
    Interval discriminant;       // d(1-l)(d(1-l) - 4l) for the working d
    Interval rho_root_lo;        // smaller root of l^2 r^2 + (2l - d(1-l)) r + 1
    Interval rho_root_hi;
    Interval rho_clip_hi;        // min(larger root, 1/l)
    Interval rho2_value;         // l^2 rho^2 + (2l - d(1-l)) rho + 1, certainly < 0
    Interval omega;              // delta / (e - eps)
    Interval log_inv_omega;
    Interval rho1_lhs;           // (1 + rho l)^2 / log(1/omega)
    Interval rho1_rhs;           // d rho
    Interval gamma;              // rho1_rhs - rho1_lhs, certainly > 0

    [[nodiscard]] bool bumped() const noexcept { return d != d_initial; }
};

/// Picks d, rho and eps so that the strict condition
/// (1 + rho l)^2 / log(1/omega) < d rho holds at adverse rounding.
inline Parameters choose_parameters(const BigRational &c, const Delta &delta, const PrecisionCtx &ctx = {})
{
    if (c <= 0) {
        throw domain_error("c must be positive");
    }
    detail::validate_delta(delta, ctx);
    const mpfr_prec_t p = ctx.bits;
    Parameters out;
    out.c = c;
    out.delta = delta;
    out.d_initial = initial_degree(delta, ctx);
    out.ell = delta.log(p);
    const Interval &l = out.ell;
    const Interval one = detail::ui(1, p);
    const Interval two = detail::ui(2, p);
    const Interval four = detail::ui(4, p);

    // With the initial d the discriminant can vanish (l = 1/2 gives the single
    // root rho = 2 = 1/l) and the strict inequality is then out of reach for
    // every eps; d is raised until an interior rho with strict margin exists.
    bool found = false;
    for (unsigned long d = out.d_initial; d < out.d_initial + 64; ++d) {
        const Interval dd = detail::ui(d, p) * (one - l);
        const Interval disc = dd * (dd - four * l);
        const Interval root = sqrt(disc);
        const Interval denom = two * sqr(l);
        const Interval lo = (dd - two * l - root) / denom;
        const Interval hi = (dd - two * l + root) / denom;
        const Interval clip = min(hi, one / l);
        if (!mpfr_less_p(lo.hi().get(), clip.lo().get())) {
            continue; // no certified interior
        }
        Real mid(p);
        mpfr_add(mid.get(), lo.hi().get(), clip.lo().get(), MPFR_RNDN);
        mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
        const BigRational rho = mid.to_rational();
        const Interval r = detail::q(rho, p);
        const Interval rho2 = sqr(l) * sqr(r) + (two * l - dd) * r + one;
        if (!certainly_lt(rho2, Interval(p)) || !certainly_le(r, one / l) || rho <= 0) {
            continue;
        }
        out.d = d;
        out.rho = rho;
        out.discriminant = disc;
        out.rho_root_lo = lo;
        out.rho_root_hi = hi;
        out.rho_clip_hi = clip;
        out.rho2_value = rho2;
        found = true;
        break;
    }
    if (!found) {
        throw precision_exhausted("choose_parameters: no d within 64 bumps gives a certified interior rho");
    }

    const Interval e = Interval::e(p);
    const Interval r = detail::q(out.rho, p);
    const Interval lhs_num = sqr(one + r * l);
    const Interval rhs = detail::ui(out.d, p) * r;
    const Interval gap = e - delta.value(p);
    BigRational eps = (gap / two).mid().to_rational();
    if (!(eps > 0) || !certainly_lt(detail::q(eps, p), gap)) {
        throw precision_exhausted("choose_parameters: cannot place eps inside (0, e - delta)");
    }
    for (unsigned halvings = 0; halvings < 512; ++halvings) {
        const Interval log_inv_omega = log(e - detail::q(eps, p)) - l;
        if (certainly_gt(log_inv_omega, Interval(p))) {
            const Interval lhs = lhs_num / log_inv_omega;
            if (certainly_lt(lhs, rhs)) {
                out.epsilon = eps;
                out.eps_halvings = halvings;
                out.omega = delta.value(p) / (e - detail::q(eps, p));
                out.log_inv_omega = log_inv_omega;
                out.rho1_lhs = lhs;
                out.rho1_rhs = rhs;
                out.gamma = rhs - lhs;
                return out;
            }
        }
        eps /= 2;
    }
    throw precision_exhausted("choose_parameters: eps bisection did not verify the strict inequality");
}

struct JScan {
    unsigned long J = 0;          // largest j with P_{j-1} < (e - eps)^j not excluded
    unsigned long scanned_to = 0; // last j examined
    bool pnt_heuristic = true;    // no effective prime-number-theorem constants used
};

/// J(eps): the last j in the scanned window at which P_{j-1} >= (e-eps)^j is
/// not certified. The window extends to max(1000, 10 (J+1)) (capped at
/// ctx.j_cap); beyond it the bound is assumed from the prime number theorem.
inline JScan compute_J(const BigRational &epsilon, const PrecisionCtx &ctx = {})
{
    const mpfr_prec_t p = ctx.bits;
    const Interval e = Interval::e(p);
    const Interval eps = detail::q(epsilon, p);
    if (!(epsilon > 0) || !certainly_lt(eps, e - detail::ui(1, p))) {
        throw domain_error("compute_J needs 0 < eps < e - 1");
    }
    const Interval rate = log(e - eps);

    const auto window_end = [&](unsigned long J) {
        const std::uint64_t want = std::max<std::uint64_t>(1000, 10 * (static_cast<std::uint64_t>(J) + 1));
        return std::min<std::uint64_t>(want, ctx.j_cap);
    };

    std::uint64_t sieve_limit = 4096;
    PrimeTable primes(sieve_limit);
    std::size_t next_prime = 0;
    Interval theta(p); // theta(j - 1) = log P_{j-1}
    JScan out;
    for (std::uint64_t j = 1; j <= window_end(out.J); ++j) {
        const std::uint64_t m = j - 1;
        if (m > sieve_limit) {
            sieve_limit *= 2;
            primes = PrimeTable(sieve_limit);
        }
        if (next_prime < primes.size() && primes.primes()[next_prime] == m) {
            theta = theta + log(detail::ui(static_cast<unsigned long>(m), p));
            ++next_prime;
        }
        if (!certainly_ge(theta, detail::ui(static_cast<unsigned long>(j), p) * rate)) {
            out.J = static_cast<unsigned long>(j);
        }
        out.scanned_to = static_cast<unsigned long>(j);
    }
    if (out.scanned_to >= ctx.j_cap && 10 * static_cast<std::uint64_t>(out.J) >= 9 * ctx.j_cap) {
        throw cap_exceeded("compute_J: violations persist in the top 10% below the cap " + std::to_string(ctx.j_cap));
    }
    return out;
}

/// Enclosure of the majorant of Phi(D,x) = prod_{j>=1} (1 + x j^D delta^j / P_{j-1}):
///   2^J (1+x)^J J!^D delta^{J^2} (2(1+x) j0^D)^{floor(j0)} c0 exp(log(x j0^D)^2 / log(1/omega)),
/// with j0 = 2D/log(1/omega), c0 = exp(4 zeta(2)/log(1/omega)).
struct PhiBound {
    Interval log_value;
    Interval value;
    unsigned long J = 0;
    BigInt floor_j0;
};

inline PhiBound phi_upper_bound(unsigned long D, const BigRational &x, const Delta &delta, const BigRational &epsilon,
                                const PrecisionCtx &ctx = {})
{
    if (D < 1) {
        throw domain_error("phi_upper_bound needs D >= 1");
    }
    if (x <= 0) {
        throw domain_error("phi_upper_bound needs x > 0");
    }
    detail::validate_delta(delta, ctx);
    {
        const auto p = ctx.bits;
        if (!certainly_lt(delta.value(p), Interval::e(p) - detail::q(epsilon, p))) {
            throw domain_error("phi_upper_bound needs delta < e - eps");
        }
    }
    const JScan js = compute_J(epsilon, ctx);
    const unsigned long J = js.J;
    return detail::escalate(
        ctx,
        [&](mpfr_prec_t p) -> std::optional<PhiBound> {
            const Interval l = delta.log(p);
            const Interval L = log(Interval::e(p) - detail::q(epsilon, p)) - l;
            const Interval j0 = detail::ui(2 * D, p) / L;
            const Interval log_j0 = log(j0);
            const Interval xi = detail::q(x, p);
            const Interval log_y = log(xi) + detail::ui(D, p) * log_j0;
            if (certainly_lt(log_y, Interval(p))) {
                throw domain_error("phi_upper_bound: y = x j0^D < 1; the dilogarithm step needs y >= 1");
            }
            if (!certainly_ge(log_y, Interval(p))) {
                return std::nullopt;
            }
            auto fj0 = j0.floor_exact();
            if (!fj0) {
                return std::nullopt;
            }
            const Interval log2 = log(detail::ui(2, p));
            const Interval log1px = log(detail::ui(1, p) + xi);
            const Interval Ji = detail::ui(J, p);
            Interval lv = detail::ui(4, p) * detail::zeta2(p) / L;
            lv = lv + Ji * log2 + Ji * log1px + detail::ui(D, p) * detail::log_factorial(J, p);
            lv = lv + sqr(Ji) * l;
            lv = lv + Interval::from_z(*fj0, p) * (log2 + log1px + detail::ui(D, p) * log_j0);
            lv = lv + sqr(log_y) / L;
            PhiBound out{lv, exp(lv), J, *fj0};
            return out;
        },
        "phi_upper_bound");
}

/// Result of the H(c, delta) search.
struct HSearch {
    BigInt H;
    Interval log_H;
    Interval log_A;          // log of the left-hand side at h = 1 (r = 1, x = 2cd)
    Interval log_H_lower;    // log of exp((sqrt(d^2 + 4 d rho log A) - d) / (d rho))
    std::size_t evaluations = 0;
    std::size_t doubling_steps = 0;
    std::size_t bisection_steps = 0;
    std::size_t downward_scan = 0;  // extra h values confirmed below the bisection result
    mpfr_prec_t max_prec_used = 0;
};

namespace detail {

enum class Tri { holds, fails, undecided };

/// log(1 + e^t). For t >= (p + 2) log 2 the correction e^{-t} is below
/// 2^{-p-2} and is absorbed into the enclosure instead of calling exp.
inline Interval log1p_exp(const Interval &t, mpfr_prec_t p)
{
    const Interval cutoff = ui(static_cast<unsigned long>(p + 2), p) * log(ui(2, p));
    if (certainly_ge(t, cutoff)) {
        Real lo(p);
        Real hi(p);
        mpfr_set(lo.get(), t.lo().get(), MPFR_RNDD);
        mpfr_set_ui_2exp(hi.get(), 1, -static_cast<long>(p + 2), MPFR_RNDU);
        mpfr_add(hi.get(), hi.get(), t.hi().get(), MPFR_RNDU);
        return Interval::hull(lo, hi);
    }
    return log(ui(1, p) + exp(t));
}

/// Evaluates the defining inequality of H at a given h:
///   LHS(h) <= h^{r d},  r = floor(rho log h) + 1,  x = 2 c r d h delta^{r-1},
/// in the log domain. The predicate also requires y = x j0^d >= 1 (the range
/// in which the Phi majorant is valid); below it the predicate fails.
class HPredicate
{
public:
    HPredicate(const Parameters &params, unsigned long J, const PrecisionCtx &ctx)
        : params_(params), J_(J), ctx_(ctx)
    {
        floor_j0_ = escalate(
            ctx_,
            [&](mpfr_prec_t p) -> std::optional<BigInt> {
                return (ui(2 * params_.d, p) / log_inv_omega(p)).floor_exact();
            },
            "floor(j0)");
    }

    [[nodiscard]] const BigInt &floor_j0() const noexcept { return floor_j0_; }
    [[nodiscard]] std::size_t evaluations() const noexcept { return evaluations_; }
    [[nodiscard]] mpfr_prec_t max_prec_used() const noexcept { return max_prec_; }

    struct Sides {
        Interval lhs;
        Interval rhs;
        bool y_ok = true;
        Interval log_y;
    };

    /// log LHS and log RHS at h with an explicit r (no y check).
    Sides sides(const BigInt &h, const BigInt &r, mpfr_prec_t p)
    {
        return sides_at(log(Interval::from_z(h, p)), r, p);
    }

    /// Same as sides() with lambda = log h already enclosed.
    Sides sides_at(const Interval &lambda, const BigInt &r, mpfr_prec_t p)
    {
        const Consts &k = consts(p);
        const Interval log_x = k.log_2cd + log_r(r, p) + lambda + Interval::from_z(r - 1, p) * k.ell;
        const Interval log1px = log1p_exp(log_x, p);
        const Interval log_y = log_x + k.d_log_j0;
        Interval lhs = k.constant;
        lhs = lhs + (k.J + k.fj0) * log1px;
        lhs = lhs + sqr(log_y) / k.L;
        return Sides{lhs, Interval::from_z(r, p) * ui(params_.d, p) * lambda, !certainly_lt(log_y, Interval(p)), log_y};
    }

    Tri eval(const BigInt &h, mpfr_prec_t p)
    {
        ++evaluations_;
        max_prec_ = std::max(max_prec_, p);
        const Interval lambda = log(Interval::from_z(h, p));
        auto fr = (q(params_.rho, p) * lambda).floor_exact();
        if (!fr) {
            return Tri::undecided;
        }
        const Sides s = sides_at(lambda, *fr + 1, p);
        if (!s.y_ok) {
            return Tri::fails;
        }
        if (!certainly_ge(s.log_y, Interval(p))) {
            return Tri::undecided;
        }
        if (certainly_le(s.lhs, s.rhs)) {
            return Tri::holds;
        }
        if (certainly_gt(s.lhs, s.rhs)) {
            return Tri::fails;
        }
        return Tri::undecided;
    }

    /// Decided predicate value, raising precision as needed. Consecutive
    /// bisection probes need similar precision, so the search starts at the
    /// precision that decided the previous call.
    bool holds(const BigInt &h)
    {
        const mpfr_prec_t limit = static_cast<mpfr_prec_t>(4 * bit_length(h) + 1024);
        return escalate(
            ctx_,
            [&](mpfr_prec_t p) -> std::optional<bool> {
                switch (eval(h, p)) {
                case Tri::holds:
                    hint_ = p;
                    return true;
                case Tri::fails:
                    hint_ = p;
                    return false;
                default:
                    return std::nullopt;
                }
            },
            "H predicate", limit, std::min(hint_, limit));
    }

    struct Consts {
        Interval ell;
        Interval L;
        Interval J;
        Interval fj0;
        Interval log2;
        Interval log_j0;
        Interval d_log_j0;
        Interval log_Jfact;
        Interval log_2cd;
        Interval constant; // every h-independent summand of log LHS
    };

    const Consts &consts(mpfr_prec_t p)
    {
        auto it = cache_.find(p);
        if (it != cache_.end()) {
            return it->second;
        }
        Consts k;
        k.ell = params_.delta.log(p);
        k.L = log_inv_omega(p);
        k.J = ui(J_, p);
        k.fj0 = Interval::from_z(floor_j0_, p);
        k.log2 = log(ui(2, p));
        k.log_j0 = log(ui(2 * params_.d, p) / k.L);
        k.d_log_j0 = ui(params_.d, p) * k.log_j0;
        k.log_Jfact = log_factorial(J_, p);
        k.log_2cd = log(q(BigRational(2) * params_.c * BigRational(params_.d), p));
        Interval c = ui(4, p) * zeta2(p) / k.L;   // log c0
        c = c + k.J * k.log2;                     // 2^J
        c = c + ui(params_.d, p) * k.log_Jfact;   // J!^d
        c = c + sqr(k.J) * k.ell;                 // delta^{J^2}
        c = c + k.fj0 * (k.log2 + k.d_log_j0);    // (2 j0^d)^{floor j0}
        k.constant = c;
        return cache_.emplace(p, std::move(k)).first->second;
    }

    const Interval &log_r(const BigInt &r, mpfr_prec_t p)
    {
        if (!log_r_cache_ || log_r_cache_->r != r || log_r_cache_->p != p) {
            log_r_cache_ = LogR{r, p, log(Interval::from_z(r, p))};
        }
        return log_r_cache_->value;
    }

    Interval log_inv_omega(mpfr_prec_t p) const
    {
        return log(Interval::e(p) - q(params_.epsilon, p)) - params_.delta.log(p);
    }

private:
    const Parameters &params_;
    unsigned long J_;
    const PrecisionCtx &ctx_;
    BigInt floor_j0_;
    std::map<mpfr_prec_t, Consts> cache_;
    std::size_t evaluations_ = 0;
    mpfr_prec_t max_prec_ = 0;
    mpfr_prec_t hint_ = 0;
    struct LogR {
        BigInt r;
        mpfr_prec_t p;
        Interval value;
    };
    std::optional<LogR> log_r_cache_;
};

} // namespace detail

/// Smallest h found by doubling then bisection (predicate fails at the lower
/// end, holds at the upper end), followed by a downward scan that stops at
/// the first h where the predicate fails. The result satisfies the predicate
/// at H and fails it at H - 1.
inline HSearch compute_H(const Parameters &params, unsigned long J, const PrecisionCtx &ctx = {})
{
    detail::HPredicate pred(params, J, ctx);
    HSearch out;
    const mpfr_prec_t p = ctx.bits;

    {
        // A = LHS at h = 1
        auto s = pred.sides(BigInt(1), BigInt(1), p);
        out.log_A = s.lhs;
        const Interval d = detail::ui(params.d, p);
        const Interval r = detail::q(params.rho, p);
        const Interval log_a = max(out.log_A, Interval(p));
        out.log_H_lower = (sqrt(sqr(d) + detail::ui(4, p) * d * r * log_a) - d) / (d * r);
    }

    BigInt lo = 1;
    BigInt hi = 1;
    if (pred.holds(hi)) {
        out.H = 1;
    } else {
        hi = 2;
        while (!pred.holds(hi)) {
            lo = hi;
            hi *= 2;
            ++out.doubling_steps;
            if (bit_length(hi) > ctx.max_search_bits) {
                throw search_exceeded("compute_H: no h <= 2^" + std::to_string(ctx.max_search_bits)
                                      + " satisfies the predicate");
            }
        }
        while (hi - lo > 1) {
            BigInt mid = (lo + hi) / 2;
            if (pred.holds(mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
            ++out.bisection_steps;
        }
        BigInt h = hi;
        while (h > 1 && pred.holds(h - 1)) {
            h -= 1;
            ++out.downward_scan;
        }
        out.H = h;
    }
    out.log_H = log(Interval::from_z(out.H, p));
    out.evaluations = pred.evaluations();
    out.max_prec_used = pred.max_prec_used();
    return out;
}

/// Closed-form upper bound on H from S(h) <= alpha log h + beta.
///
/// With lambda = log h, A = 1 + rho l, L = log(1/omega) and r - 1 <= rho lambda:
///   log(1+x) <= log 2 + max(0, log 2cd) + (A + rho) lambda         (log r <= rho lambda)
///   log y    <= tau0 + (A + tau1) lambda                            (tangent bound on log(1 + rho lambda))
/// where the tangent at u0 gives log(1 + rho lambda) <= log(1+u0) - u0/(1+u0) + tau1 lambda,
/// tau1 = rho/(1+u0). Because y >= 1 on the range of interest, (log y)^2 is bounded by the
/// square of the right-hand side, and with r d lambda >= d rho lambda^2 the predicate holds
/// as soon as gamma' lambda^2 >= alpha lambda + beta, gamma' = d rho - (A + tau1)^2 / L.
/// u0 is chosen so that (2 A tau1 + tau1^2)/L <= gamma/2, hence gamma' >= gamma/2 > 0.
/// Every h >= max(e^{X+}, 1/(2 c d j0^d)) satisfies the predicate, where X+ is the larger
/// root of gamma' X^2 - alpha X - beta, so H <= 1 + max(e^{X+}, 1/(2 c d j0^d)).
struct UpperBoundDiagnostic {
    bool available = false;
    Interval alpha;
    Interval beta;
    Interval gamma_prime;
    Interval log_H_upper; // log of the bound on H
};

inline UpperBoundDiagnostic upper_bound_diagnostic(const Parameters &params, unsigned long J,
                                                   const BigInt &floor_j0, const PrecisionCtx &ctx = {})
{
    using detail::q;
    using detail::ui;
    const mpfr_prec_t p = ctx.bits;
    UpperBoundDiagnostic out;
    const Interval zero(p);
    const Interval one = ui(1, p);
    const Interval l = params.delta.log(p);
    const Interval L = log(Interval::e(p) - q(params.epsilon, p)) - l;
    const Interval rho = q(params.rho, p);
    const Interval d = ui(params.d, p);
    const Interval A = one + rho * l;
    const Interval gamma = d * rho - sqr(A) / L;
    if (!certainly_gt(gamma, zero)) {
        return out;
    }
    // tau1 <= -A + sqrt(A^2 + gamma L / 2)
    const Interval tau_star = sqrt(sqr(A) + gamma * L / ui(2, p)) - A;
    if (!certainly_gt(tau_star, zero)) {
        return out;
    }
    const BigRational t = tau_star.lo().to_rational();
    BigRational u0 = 0;
    BigRational tau1 = params.rho;
    if (params.rho > t) {
        u0 = params.rho / t - 1;
        tau1 = t;
    }
    const Interval tau1i = q(tau1, p);
    const Interval gamma_prime = gamma - (ui(2, p) * A * tau1i + sqr(tau1i)) / L;
    if (!certainly_gt(gamma_prime, zero)) {
        return out;
    }
    const Interval log2 = log(ui(2, p));
    const Interval log_2cd = log(q(BigRational(2) * params.c * params.d, p));
    const Interval log_j0 = log(ui(2 * params.d, p) / L);
    const Interval d_log_j0 = d * log_j0;
    const Interval u0i = q(u0, p);
    const Interval tau0 = log_2cd + d_log_j0 + log(one + u0i) - u0i / (one + u0i);
    const Interval a0p = max(log_2cd, zero);
    const Interval a1 = A + rho;
    const Interval Ji = ui(J, p);
    const Interval fj0 = Interval::from_z(floor_j0, p);

    Interval beta = ui(4, p) * detail::zeta2(p) / L;
    beta = beta + Ji * log2 + Ji * (log2 + a0p) + d * detail::log_factorial(J, p) + sqr(Ji) * l;
    beta = beta + fj0 * (log2 + log2 + a0p + d_log_j0);
    beta = beta + sqr(tau0) / L;
    Interval alpha = Ji * a1 + fj0 * a1 + ui(2, p) * (A + tau1i) * tau0 / L;
    alpha = max(alpha, zero);
    beta = max(beta, zero);

    const Interval x_plus = (alpha + sqrt(sqr(alpha) + ui(4, p) * beta * gamma_prime)) / (ui(2, p) * gamma_prime);
    const Interval log_hy = -(log_2cd + d_log_j0);
    const Interval top = max(x_plus, log_hy);
    out.available = true;
    out.alpha = alpha;
    out.beta = beta;
    out.gamma_prime = gamma_prime;
    out.log_H_upper = log(one + exp(top));
    return out;
}

/// Every quantity of the effective-constant pipeline for one (c, delta).
struct EffectiveBounds {
    Parameters params;
    JScan j_scan;
    HSearch h_search;
    BigInt floor_j0;
    Interval j0;
    UpperBoundDiagnostic upper;
    unsigned long deg_bound_theorem = 0;      // max(0, ceil((5l - 1)/(1 - l)))
    unsigned long deg_bound_construction = 0; // working d - 1
    unsigned long order_bound = 0;            // floor(log H / l)
    bool H_ge_lower = false;
    bool H_le_upper = false;
    std::vector<std::string> notes;
};

inline EffectiveBounds bounds_report(const BigRational &c, const Delta &delta, const PrecisionCtx &ctx = {})
{
    EffectiveBounds out;
    out.params = choose_parameters(c, delta, ctx);
    out.j_scan = compute_J(out.params.epsilon, ctx);
    out.h_search = compute_H(out.params, out.j_scan.J, ctx);
    const mpfr_prec_t p = ctx.bits;
    out.j0 = detail::ui(2 * out.params.d, p) / out.params.log_inv_omega;
    out.floor_j0 = detail::HPredicate(out.params, out.j_scan.J, ctx).floor_j0();
    out.deg_bound_theorem = degree_bound_from_theorem(delta, ctx);
    out.deg_bound_construction = out.params.d - 1;

    const BigInt &H = out.h_search.H;
    out.order_bound = detail::escalate(
                          ctx,
                          [&](mpfr_prec_t prec) -> std::optional<BigInt> {
                              return (log(Interval::from_z(H, prec)) / delta.log(prec)).floor_exact();
                          },
                          "order bound")
                          .get_ui();
    out.H_ge_lower = certainly_ge(out.h_search.log_H, out.h_search.log_H_lower);
    out.upper = upper_bound_diagnostic(out.params, out.j_scan.J, out.floor_j0, ctx);
    if (out.upper.available) {
        out.H_le_upper = certainly_le(out.h_search.log_H, out.upper.log_H_upper);
    }

    if (out.params.bumped()) {
        out.notes.push_back("d bumped from paper value " + std::to_string(out.params.d_initial) + " to "
                            + std::to_string(out.params.d) + " to restore a strict margin");
    }
    if (out.deg_bound_theorem != out.deg_bound_construction) {
        out.notes.push_back("theorem degree bound " + std::to_string(out.deg_bound_theorem)
                            + " differs from construction bound d-1 = " + std::to_string(out.deg_bound_construction));
    }
    out.notes.push_back("J(eps) from a finite scan up to j = " + std::to_string(out.j_scan.scanned_to)
                        + " (prime-number-theorem heuristic, no effective constants)");
    if (!out.upper.available) {
        out.notes.push_back("closed-form upper bound on H unavailable");
    }
    return out;
}

} // namespace ppoly::bounds

#endif // PPOLY_BOUNDS_HPP
