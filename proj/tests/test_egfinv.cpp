#include <random>

#include <gtest/gtest.h>

#include <ppoly/arith.hpp>
#include <ppoly/certify.hpp>
#include <ppoly/construct.hpp>
#include <ppoly/egfinv.hpp>

#include "oracles.hpp"

using namespace ppoly;

namespace {

// u_n = sum_k (-1)^k C(n,k) k!
BigInt u_closed_form(std::size_t n)
{
    BigInt s = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        const BigInt t = oracle::binom(n, k) * oracle::factorial(k);
        s += (k % 2 == 0) ? t : BigInt(-t);
    }
    return s;
}

IntSequence n_plus_one(std::size_t len)
{
    IntSequence a;
    for (std::size_t n = 0; n < len; ++n) {
        a.terms.emplace_back(static_cast<unsigned long>(n + 1));
    }
    return a;
}

} // namespace

TEST(EgfReciprocal, Examples)
{
    EXPECT_EQ(egf_reciprocal(IntSequence{1, 0, 0, 0}), (IntSequence{1, 0, 0, 0}));
    EXPECT_EQ(egf_reciprocal(IntSequence{1, 1, 0, 0, 0}), (IntSequence{1, -1, 2, -6, 24}));
    EXPECT_THROW(egf_reciprocal(IntSequence{2, 1}), domain_error);
}

TEST(EgfReciprocal, Involution)
{
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<BigInt> b(1 + rng() % 25);
        b[0] = 1;
        for (std::size_t i = 1; i < b.size(); ++i) {
            b[i] = oracle::random_bits(rng, 30);
        }
        EXPECT_EQ(egf_reciprocal(egf_reciprocal(IntSequence(b))), IntSequence(b));
    }
}

TEST(EgfReciprocal, ConvolutionIdentity)
{
    std::mt19937_64 rng(32);
    std::vector<BigInt> b(30);
    b[0] = 1;
    for (std::size_t i = 1; i < b.size(); ++i) {
        b[i] = oracle::random_bits(rng, 20);
    }
    const auto c = egf_reciprocal(IntSequence(b));
    for (std::size_t n = 1; n < b.size(); ++n) {
        BigInt s = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            s += oracle::binom(n, k) * b[k] * c[n - k];
        }
        EXPECT_EQ(s, 0) << n;
    }
}

TEST(InverseU, ConstantOne)
{
    const auto t = theorem51_u(IntSequence{1, 1, 1, 1, 1, 1});
    EXPECT_EQ(t.u, (IntSequence{1, 1, 1, 1, 1, 1}));
}

TEST(InverseU, NPlusOne)
{
    EXPECT_EQ(theorem51_u(n_plus_one(5)).u, (IntSequence{1, 0, 1, -2, 9}));
    const auto t = theorem51_u(n_plus_one(51));
    for (std::size_t n = 0; n <= 50; ++n) {
        EXPECT_EQ(t.u[n], u_closed_form(n)) << n;
    }
}

TEST(InverseU, Preconditions)
{
    EXPECT_THROW(theorem51_u(IntSequence{2, 3}), domain_error);
    IntSequence s{1, 2};
    s.offset = 1;
    EXPECT_THROW(theorem51_u(s), domain_error);
}

TEST(InverseU, RandomCertifiedInputs)
{
    std::mt19937_64 rng(33);
    const PrimeTable primes(200);
    for (int rep = 0; rep < 100; ++rep) {
        // a_0 = b_0 = 1; b_n random multiples of P_n.
        const std::size_t len = 10 + rng() % 50;
        std::vector<BigInt> b(len);
        b[0] = 1;
        for (std::size_t n = 1; n < len; ++n) {
            b[n] = oracle::random_bits(rng, 16) * oracle::primorial(n);
        }
        const auto t = theorem51_u(IntSequence(oracle::backward(b)));
        EXPECT_TRUE(certify_primary_direct(t.u).certified()) << rep;
        EXPECT_TRUE(certify_primary_hall(t.u).certified()) << rep;
        for (std::size_t n = 1; n < len; ++n) {
            for (auto p : primes.primes()) {
                if (p > n) {
                    break;
                }
                EXPECT_TRUE(divides(BigInt(static_cast<unsigned long>(p)), t.c[n])) << n << " " << p;
            }
        }
    }
}

TEST(InverseU, PrimeDivisibilityUpTo200)
{
    const auto c = construct_genuine(GrowthFn::geometric(3), 200);
    const auto t = theorem51_u(c.A);
    const PrimeTable primes(200);
    for (std::size_t n = 1; n <= 200; ++n) {
        for (auto p : primes.primes()) {
            if (p > n) {
                break;
            }
            ASSERT_TRUE(divides(BigInt(static_cast<unsigned long>(p)), t.c[n])) << n << " " << p;
        }
    }
}

TEST(UOverFactorial, Examples)
{
    EXPECT_EQ(u_over_factorial(IntSequence{1, 0, 1}, 10).at(2), "0.5");
    const auto r = u_over_factorial(IntSequence{1, 1, 1, 1}, 6);
    EXPECT_EQ(r, (std::vector<std::string>{"1", "1", "0.5", "0.166667"}));
}

TEST(UOverFactorial, ApproachesInverseE)
{
    const auto t = theorem51_u(n_plus_one(21));
    const auto r = u_over_factorial(t.u, 30);
    EXPECT_EQ(r[10].substr(0, 9), "0.3678794");
    // |u_20|/20! - 1/e is below 1/21!.
    mpfr_t x, inv_e;
    mpfr_inits2(200, x, inv_e, (mpfr_ptr) nullptr);
    mpfr_set_str(x, r[20].c_str(), 10, MPFR_RNDN);
    mpfr_set_si(inv_e, -1, MPFR_RNDN);
    mpfr_exp(inv_e, inv_e, MPFR_RNDN);
    mpfr_sub(x, x, inv_e, MPFR_RNDN);
    EXPECT_LT(std::abs(mpfr_get_d(x, MPFR_RNDN)), 1e-15);
    mpfr_clears(x, inv_e, (mpfr_ptr) nullptr);
}

TEST(RationalToDecimal, Rounding)
{
    EXPECT_EQ(rational_to_decimal(oracle::rat(-1, 3), 4), "-0.3333");
    EXPECT_EQ(rational_to_decimal(oracle::rat(2, 3), 2), "0.67");
    EXPECT_EQ(rational_to_decimal(BigRational(5), 3), "5");
    EXPECT_EQ(rational_to_decimal(oracle::rat(1, 8), 2), "0.13");
}
