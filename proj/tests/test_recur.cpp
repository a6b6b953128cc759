#include <random>

#include <gtest/gtest.h>

#include <ppoly/arith.hpp>
#include <ppoly/construct.hpp>
#include <ppoly/recur.hpp>

#include "oracles.hpp"

using namespace ppoly;

namespace {

PolyRecurrence e_recurrence()
{
    // (n+2) e_n - (n+4) e_{n+1} + e_{n+2} = 0
    return PolyRecurrence{2, {{2, 1}, {-4, -1}, {1}}};
}

IntSequence e_prefix(std::size_t len)
{
    IntSequence s;
    for (std::size_t n = 0; n < len; ++n) {
        s.terms.push_back(oracle::e_sequence(n));
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

// Integer nullspace oracle check: the returned vector annihilates every equation.
void expect_annihilates(const PolyRecurrence &r, const IntSequence &a)
{
    for (std::size_t n = 0; n + r.order < a.size(); ++n) {
        ASSERT_EQ(r.residual(a, n), 0) << n;
    }
}

} // namespace

TEST(Normalize, ContentAndSign)
{
    const PolyRecurrence r{1, {{4, 2}, {-2, -2, 0}}};
    const auto n = r.normalized();
    EXPECT_EQ(n.polys[0], (IntPoly{-2, -1}));
    EXPECT_EQ(n.polys[1], (IntPoly{1, 1}));
    EXPECT_EQ(n.normalized(), n);
    EXPECT_TRUE(equivalent(r, n));
    EXPECT_THROW((PolyRecurrence{1, {{0}, {}}}.normalized()), domain_error);
}

TEST(Normalize, HighestNonzeroPolyDecidesSign)
{
    const PolyRecurrence r{2, {{3}, {-6}, {}}};
    const auto n = r.normalized();
    EXPECT_EQ(n.polys[0], (IntPoly{-1}));
    EXPECT_EQ(n.polys[1], (IntPoly{2}));
}

TEST(Guess, NPlusOne)
{
    const auto r = guess_recurrence(n_plus_one(20), GuessBudget{1, 1, 10});
    ASSERT_TRUE(r);
    const PolyRecurrence expect{1, {{2, 1}, {-1, -1}}}; // (n+2) a_n - (n+1) a_{n+1}
    EXPECT_TRUE(equivalent(*r, expect));
    EXPECT_EQ(r->normalized(), *r);
}

TEST(Guess, ESequence)
{
    const auto a = e_prefix(40);
    const auto r = guess_recurrence(a, GuessBudget{2, 2, 10});
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, e_recurrence().normalized());
    EXPECT_EQ(r->polys[0], (IntPoly{2, 1}));
    EXPECT_EQ(r->polys[1], (IntPoly{-4, -1}));
    EXPECT_EQ(r->polys[2], (IntPoly{1}));
    expect_annihilates(*r, a);
}

TEST(Guess, PrimorialsHaveNone)
{
    const auto a = IntSequence(PrimorialTable(59).values());
    EXPECT_FALSE(guess_recurrence(a, GuessBudget{4, 4, 10}));
}

TEST(Guess, ConstructedSequenceHasNone)
{
    const auto c = construct_genuine(GrowthFn::primorial(), 59);
    EXPECT_FALSE(guess_recurrence(c.A, GuessBudget{4, 4, 10}));
}

TEST(Guess, PrefilterDoesNotChangeResults)
{
    std::mt19937_64 rng(41);
    const std::vector<IntSequence> inputs{n_plus_one(30), e_prefix(30), IntSequence(PrimorialTable(29).values())};
    for (const auto &a : inputs) {
        GuessBudget with{2, 2, 8, true};
        GuessBudget without{2, 2, 8, false};
        EXPECT_EQ(guess_recurrence(a, with), guess_recurrence(a, without));
    }
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<BigInt> v(30);
        for (auto &x : v) {
            x = oracle::random_bits(rng, 20);
        }
        EXPECT_EQ(guess_recurrence(IntSequence(v), GuessBudget{2, 2, 8, true}),
                  guess_recurrence(IntSequence(v), GuessBudget{2, 2, 8, false}));
    }
}

TEST(Guess, ScalingInvariance)
{
    auto a = e_prefix(35);
    auto twice = a;
    for (auto &x : twice.terms) {
        x *= 2;
    }
    const auto r1 = guess_recurrence(a, GuessBudget{});
    const auto r2 = guess_recurrence(twice, GuessBudget{});
    ASSERT_TRUE(r1 && r2);
    EXPECT_TRUE(equivalent(*r1, *r2));
}

TEST(Guess, SoundOnFullPrefix)
{
    // Holonomic inputs: n! and n 2^n.
    std::vector<IntSequence> inputs;
    IntSequence fact;
    IntSequence pow2n;
    for (std::size_t n = 0; n < 30; ++n) {
        fact.terms.push_back(oracle::factorial(n));
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
        pow2n.terms.push_back(p * static_cast<unsigned long>(n));
    }
    inputs.push_back(fact);
    inputs.push_back(pow2n);
    for (const auto &a : inputs) {
        const auto r = guess_recurrence(a, GuessBudget{2, 2, 8});
        ASSERT_TRUE(r);
        EXPECT_TRUE(verify_recurrence(a, *r).certified());
    }
}

TEST(Guess, InfeasibleBudget) { EXPECT_THROW(guess_recurrence(n_plus_one(10), GuessBudget{2, 2, 10}), domain_error); }

TEST(Verify, Examples)
{
    auto a = e_prefix(30);
    const auto ok = verify_recurrence(a, e_recurrence());
    EXPECT_TRUE(ok.certified());
    EXPECT_EQ(ok.verdict_text(), "certified-up-to-29");

    a[12] += 1;
    const auto bad = verify_recurrence(a, e_recurrence());
    ASSERT_FALSE(bad.certified());
    // a_12 appears in the equations n = 10, 11, 12.
    ASSERT_EQ(bad.counterexamples.size(), 3u);
    EXPECT_EQ(bad.counterexamples[0].n, 10u);
    EXPECT_EQ(bad.counterexamples[2].n, 12u);
    for (const auto &c : bad.counterexamples) {
        EXPECT_FALSE(divides(c.modulus, c.witness));
    }

    EXPECT_TRUE(verify_recurrence(IntSequence{3, 3, 3, 3}, PolyRecurrence{1, {{-1}, {1}}}).certified());
}

TEST(Apply, ESequence)
{
    const auto out = apply_recurrence(e_recurrence(), IntSequence{2, 5}, 10);
    const IntSequence expect{2, 5, 16, 65, 326, 1957, 13700, 109601, 986410, 9864101, 108505112};
    EXPECT_EQ(out, expect);
}

TEST(Apply, MatchesFloorFactorialE)
{
    const auto out = apply_recurrence(e_recurrence(), IntSequence{2, 5}, 200);
    for (std::size_t n = 0; n <= 200; ++n) {
        ASSERT_EQ(out[n], oracle::e_sequence(n)) << n;
        ASSERT_EQ(out[n], oracle::floor_factorial_e(n + 1)) << n;
    }
}

TEST(Apply, ConstantAndErrors)
{
    EXPECT_EQ(apply_recurrence(PolyRecurrence{1, {{-1}, {1}}}, IntSequence{7}, 3), (IntSequence{7, 7, 7, 7}));
    // p_1(X) = X - 3 vanishes at n = 3.
    try {
        apply_recurrence(PolyRecurrence{1, {{-1}, {-3, 1}}}, IntSequence{6}, 6);
        FAIL() << "expected leading_zero";
    } catch (const leading_zero &e) {
        EXPECT_EQ(e.index, 3u);
    }
    // 2 a_{n+1} = a_n leaves the integers at the first odd value.
    try {
        apply_recurrence(PolyRecurrence{1, {{-1}, {2}}}, IntSequence{4}, 5);
        FAIL() << "expected non_integral";
    } catch (const non_integral &e) {
        EXPECT_EQ(e.index, 2u);
    }
}

TEST(Apply, RoundTripAfterGuess)
{
    const auto prefix = e_prefix(40);
    const auto r = guess_recurrence(prefix, GuessBudget{});
    ASSERT_TRUE(r);
    const auto out = apply_recurrence(*r, prefix, 200);
    for (std::size_t n = 40; n <= 200; ++n) {
        ASSERT_EQ(out[n], oracle::e_sequence(n)) << n;
    }
}
