#ifndef PPOLY_CONSTRUCT_HPP
#define PPOLY_CONSTRUCT_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <ppoly/arith.hpp>
#include <ppoly/bigint.hpp>
#include <ppoly/sequence.hpp>

namespace ppoly {

/// Target growth n -> phi(n) with exact rational values and phi(0) = 1.
class GrowthFn
{
public:
    GrowthFn(std::string name, std::function<BigRational(std::size_t)> fn)
        : name_(std::move(name)), fn_(std::move(fn))
    {
    }

    /// phi(n) = P_n.
    static GrowthFn primorial()
    {
        auto cache = std::make_shared<std::vector<BigInt>>(1, BigInt(1));
        return GrowthFn("primorial", [cache](std::size_t n) {
            if (n >= cache->size()) {
                *cache = PrimorialTable(std::max(n, 2 * cache->size())).values();
            }
            return BigRational((*cache)[n]);
        });
    }

    /// phi(n) = ratio^n.
    static GrowthFn geometric(const BigRational &ratio)
    {
        return GrowthFn("geometric:" + to_decimal(ratio), [ratio](std::size_t n) {
            BigRational out;
            mpz_pow_ui(out.get_num_mpz_t(), ratio.get_num_mpz_t(), static_cast<unsigned long>(n));
            mpz_pow_ui(out.get_den_mpz_t(), ratio.get_den_mpz_t(), static_cast<unsigned long>(n));
            out.canonicalize();
            return out;
        });
    }

    /// User-supplied values phi(0), ..., phi(values.size() - 1).
    static GrowthFn table(std::vector<BigRational> values)
    {
        auto shared = std::make_shared<const std::vector<BigRational>>(std::move(values));
        return GrowthFn("table", [shared](std::size_t n) {
            if (n >= shared->size()) {
                throw domain_error("growth table has no value for n = " + std::to_string(n));
            }
            return (*shared)[n];
        });
    }

    [[nodiscard]] const std::string &name() const noexcept { return name_; }
    BigRational operator()(std::size_t n) const { return fn_(n); }

private:
    std::string name_;
    std::function<BigRational(std::size_t)> fn_;
};

/// One step of the constructor: C_n = u_n P_n + v_n, B_n = w_n P_n, A_n = B_n + C_n.
struct ConstructStep {
    std::size_t n = 0;
    BigInt C, u, v, w, B, A;

    friend bool operator==(const ConstructStep &, const ConstructStep &) = default;
};

using ConstructTrace = std::vector<ConstructStep>;

struct Construction {
    IntSequence A;
    IntSequence B;
    ConstructTrace trace;
};

/// Builds A_0..A_N with phi(n) <= A_n <= phi(n) + 2 P_n, every B_n a nonzero
/// multiple of P_n, and A the inverse binomial transform of B.
inline Construction construct_genuine(const GrowthFn &phi, std::size_t n_max)
{
    if (phi(0) != 1) {
        throw domain_error("construct_genuine: phi(0) must equal 1, got " + to_decimal(phi(0)));
    }
    PrimorialTable primorials(n_max);
    Construction out;
    out.A.terms.reserve(n_max + 1);
    out.B.terms.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        ConstructStep st;
        st.n = n;
        const BigInt &pn = primorials[n];
        const auto row = binomial_row(n);
        st.C = 0;
        for (std::size_t k = 0; k < n; ++k) {
            st.C += row[k] * out.B[k];
        }
        mpz_fdiv_qr(st.u.get_mpz_t(), st.v.get_mpz_t(), st.C.get_mpz_t(), pn.get_mpz_t());
        const BigInt target = ceil_div_rational(phi(n) - BigRational(st.v), pn);
        // Tie case: any nonzero w works, the positive choice w = 1 is taken.
        st.w = target != st.u ? BigInt(target - st.u) : BigInt(1);
        st.B = st.w * pn;
        st.A = st.B + st.C;
        out.B.terms.push_back(st.B);
        out.A.terms.push_back(st.A);
        out.trace.push_back(std::move(st));
    }
    return out;
}

} // namespace ppoly

#endif // PPOLY_CONSTRUCT_HPP
