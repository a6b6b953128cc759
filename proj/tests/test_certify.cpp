#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <ppoly/arith.hpp>
#include <ppoly/certify.hpp>

#include "oracles.hpp"

using namespace ppoly;

namespace {

const IntSequence triangular{0, 1, 3, 6, 10, 15};
const IntSequence sum_primorials{1, 2, 5, 16, 47, 146}; // sum_k C(n,k) P_k

void expect_counterexamples_recheck(const CertReport &r)
{
    EXPECT_EQ(r.certified(), r.counterexamples.empty());
    for (const auto &c : r.counterexamples) {
        EXPECT_FALSE(divides(c.modulus, c.witness)) << c.n;
    }
    for (std::size_t i = 1; i < r.counterexamples.size(); ++i) {
        const auto &x = r.counterexamples[i - 1];
        const auto &y = r.counterexamples[i];
        EXPECT_TRUE(x.n < y.n || (x.n == y.n && x.modulus < y.modulus));
    }
}

IntSequence floor_nfact_e(std::size_t len)
{
    IntSequence a;
    a.terms.emplace_back(1);
    for (std::size_t n = 1; n < len; ++n) {
        a.terms.push_back(oracle::floor_factorial_e(n));
    }
    return a;
}

} // namespace

TEST(CertifyDirect, Triangular)
{
    const auto r = certify_primary_direct(triangular);
    EXPECT_FALSE(r.certified());
    EXPECT_EQ(r.verdict_text(), "refuted");
    ASSERT_FALSE(r.counterexamples.empty());
    EXPECT_EQ(r.counterexamples[0], (Counterexample{0, 2, 3}));
    expect_counterexamples_recheck(r);
}

TEST(CertifyDirect, InverseTransformOfPrimorials)
{
    const auto r = certify_primary_direct(sum_primorials);
    EXPECT_TRUE(r.certified());
    EXPECT_EQ(r.verdict_text(), "certified-up-to-5");
    EXPECT_NE(r.summary().find("N=5"), std::string::npos);
}

TEST(CertifyDirect, Constant)
{
    EXPECT_TRUE(certify_primary_direct(IntSequence{4, 4, 4, 4, 4, 4, 4}).certified());
    EXPECT_TRUE(certify_primary_direct(IntSequence{9}).certified());
}

TEST(CertifyHall, Triangular)
{
    const auto r = certify_primary_hall(triangular);
    EXPECT_FALSE(r.certified());
    ASSERT_FALSE(r.counterexamples.empty());
    EXPECT_EQ(r.counterexamples[0], (Counterexample{2, 2, 1}));
    expect_counterexamples_recheck(r);
}

TEST(CertifyHall, InverseTransformOfPrimorialsAndConstant)
{
    EXPECT_TRUE(certify_primary_hall(sum_primorials).certified());
    EXPECT_TRUE(certify_primary_hall(IntSequence{1, 1, 1, 1, 1}).certified());
}

TEST(CertifyPseudo, InverseTransformOfPrimorialsFailsAtFour)
{
    const auto r = certify_pseudo_hall(sum_primorials);
    EXPECT_FALSE(r.certified());
    // d_5 = 60 does not divide b_5 = 30 either
    ASSERT_EQ(r.counterexamples.size(), 2u);
    EXPECT_EQ(r.counterexamples[0], (Counterexample{4, 12, 6}));
    EXPECT_EQ(r.counterexamples[1], (Counterexample{5, 60, 30}));
}

TEST(CertifyPseudo, FloorFactorialE)
{
    const auto a = floor_nfact_e(30);
    EXPECT_TRUE(certify_pseudo_hall(a).certified());
    EXPECT_TRUE(oracle::pseudo_congruences_hold(a.terms));
}

TEST(CertifyPseudo, Triangular) { EXPECT_FALSE(certify_pseudo_hall(triangular).certified()); }

TEST(Certify, DirectAndHallAgreeOnRandomPrefixes)
{
    std::mt19937_64 rng(21);
    int refuted = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t len = 1 + rng() % 40;
        auto a = oracle::random_primary(rng, len, 24);
        // Half are perturbed at one index; some perturbations stay primary.
        if (rep % 2 == 1) {
            const std::size_t i = rng() % len;
            a[i] += oracle::random_bits(rng, 6);
        }
        const IntSequence s(a);
        const auto direct = certify_primary_direct(s);
        const auto hall = certify_primary_hall(s);
        ASSERT_EQ(direct.certified(), hall.certified()) << "rep " << rep;
        ASSERT_EQ(direct.certified(), oracle::primary_congruences_hold(a)) << "rep " << rep;
        refuted += direct.certified() ? 0 : 1;
        expect_counterexamples_recheck(direct);
        expect_counterexamples_recheck(hall);
    }
    EXPECT_GT(refuted, 100);
}

TEST(Certify, PseudoImpliesPrimary)
{
    std::mt19937_64 rng(22);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t len = 2 + rng() % 20;
        std::vector<BigInt> b(len);
        const LcmTable d(len);
        for (std::size_t n = 0; n < len; ++n) {
            b[n] = oracle::random_bits(rng, 16) * d[n] + (rep % 3 == 0 ? BigInt(rng() % 2) : BigInt(0));
        }
        const auto a = IntSequence(oracle::backward(b));
        if (certify_pseudo_hall(a).certified()) {
            EXPECT_TRUE(certify_primary_hall(a).certified());
        }
        EXPECT_EQ(certify_pseudo_hall(a).certified(), oracle::pseudo_congruences_hold(a.terms));
    }
}

TEST(Certify, CounterexampleCap)
{
    std::mt19937_64 rng(23);
    std::vector<BigInt> v(200);
    for (auto &x : v) {
        x = oracle::random_bits(rng, 40);
    }
    const auto r = certify_primary_direct(IntSequence(v));
    EXPECT_EQ(r.counterexamples.size(), max_counterexamples);
    EXPECT_TRUE(r.truncated);
    expect_counterexamples_recheck(r);
}

TEST(Certify, RejectsOffset)
{
    IntSequence s{1, 1, 1};
    s.offset = 2;
    EXPECT_THROW(certify_primary_hall(s), domain_error);
    EXPECT_THROW(certify_primary_direct(s), domain_error);
}

TEST(DetectPolynomial, Triangular)
{
    IntSequence a;
    for (long n = 0; n < 10; ++n) {
        a.terms.emplace_back(n * (n + 1) / 2);
    }
    const auto d = detect_polynomial(a, 5);
    ASSERT_TRUE(d.is_eventually_polynomial);
    EXPECT_EQ(d.M, 2u);
    ASSERT_EQ(d.poly.size(), 2u);
    EXPECT_EQ(d.poly[0], (std::pair<std::size_t, BigInt>{1, 1}));
    EXPECT_EQ(d.poly[1], (std::pair<std::size_t, BigInt>{2, 1}));
    for (std::size_t n = d.M; n < a.size(); ++n) {
        EXPECT_EQ(d.evaluate(n), a[n]);
    }
}

TEST(DetectPolynomial, NotPolynomialAndConstant)
{
    EXPECT_FALSE(detect_polynomial(sum_primorials, 3).is_eventually_polynomial);
    const auto c = detect_polynomial(IntSequence{1, 1, 1, 1, 1}, 3);
    ASSERT_TRUE(c.is_eventually_polynomial);
    EXPECT_EQ(c.M, 0u);
    ASSERT_EQ(c.poly.size(), 1u);
    EXPECT_EQ(c.poly[0].second, 1);
    EXPECT_THROW(detect_polynomial(IntSequence{1, 1}, 2), domain_error);
}

TEST(DetectPolynomial, PolynomialCertifiesIffSmallTermsDivide)
{
    // a_n = n^3 has b = (0,1,6,6,0,...): P_2 | 6, P_3 | 6, so it is primary.
    IntSequence cube;
    for (long n = 0; n < 12; ++n) {
        cube.terms.emplace_back(n * n * n);
    }
    const auto d = detect_polynomial(cube, 4);
    ASSERT_TRUE(d.is_eventually_polynomial);
    bool divisible = true;
    for (const auto &[k, bk] : d.poly) {
        divisible = divisible && divides(primorial(k), bk);
    }
    EXPECT_EQ(certify_primary_hall(cube).certified(), divisible);
    EXPECT_TRUE(divisible);
}

TEST(Growth, PowersOfTwo)
{
    IntSequence a;
    for (std::size_t n = 0; n <= 64; ++n) {
        BigInt v;
        mpz_ui_pow_ui(v.get_mpz_t(), 2, n);
        a.terms.push_back(v);
    }
    const auto g = growth_exponent(a);
    ASSERT_TRUE(g.last);
    EXPECT_NEAR(g.last->to_double(), std::log(2.0), 1e-9);
}

TEST(Growth, PrimorialsNearOne)
{
    const auto g = growth_exponent(IntSequence(PrimorialTable(1000).values()));
    ASSERT_TRUE(g.last);
    EXPECT_NEAR(g.last->to_double(), 1.0, 0.1);
}

TEST(Growth, SumOfPrimorials)
{
    const auto a = IntSequence(oracle::backward(PrimorialTable(400).values()));
    const auto g = growth_exponent(a);
    ASSERT_TRUE(g.last);
    EXPECT_NEAR(g.last->to_double(), std::log(1.0 + std::exp(1.0)), 0.1);
}

TEST(Growth, Errors)
{
    EXPECT_THROW(growth_exponent(IntSequence{1, 2, 3}), domain_error);
    EXPECT_THROW(growth_exponent(IntSequence{0, 0, 0, 0, 0, 0, 0, 0, 0}), domain_error);
}
