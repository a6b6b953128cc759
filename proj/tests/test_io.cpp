#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include <ppoly/io.hpp>

#include "oracles.hpp"

using namespace ppoly;

TEST(SequenceText, ParsesCommentsAndBlanks)
{
    const auto s = io::parse_sequence("# header\n1\n\n  -2  \n# mid\n30000000000000000000000000000\n");
    EXPECT_EQ(s.offset, 0u);
    EXPECT_EQ(s.terms, (std::vector<BigInt>{1, -2, BigInt("30000000000000000000000000000")}));
}

TEST(SequenceText, UnicodeMinusAndCrlf)
{
    const auto s = io::parse_sequence("\xE2\x88\x92" "7\r\n8\r\n");
    EXPECT_EQ(s.terms, (std::vector<BigInt>{-7, 8}));
}

TEST(SequenceText, RejectsGarbage)
{
    EXPECT_THROW(io::parse_sequence("1\n2x\n"), parse_error);
    EXPECT_THROW(io::parse_sequence("1.5\n"), parse_error);
    EXPECT_THROW(io::parse_sequence("1e3\n"), parse_error);
}

TEST(SequenceText, RoundTrip)
{
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 200; ++rep) {
        IntSequence s;
        s.offset = rep % 3;
        for (std::size_t i = 0; i < 1 + rng() % 30; ++i) {
            s.terms.push_back(oracle::random_bits(rng, 1 + static_cast<unsigned>(rng() % 300)));
        }
        const auto text = io::format_sequence(s);
        EXPECT_EQ(io::parse_sequence(text), s);
        EXPECT_EQ(io::format_sequence(io::parse_sequence(text)), text);
    }
}

TEST(SequenceJson, ParseAndEmit)
{
    const auto s = io::parse_sequence(R"({"offset": 2, "terms": ["5", "-6", 7]})");
    EXPECT_EQ(s.offset, 2u);
    EXPECT_EQ(s.terms, (std::vector<BigInt>{5, -6, 7}));
    EXPECT_EQ(io::to_json(s).dump(), R"({"offset":2,"terms":["5","-6","7"]})");
    EXPECT_EQ(io::sequence_from_json(io::to_json(s)), s);
    EXPECT_THROW(io::parse_sequence(R"({"terms": ["1x"]})"), parse_error);
    EXPECT_THROW(io::parse_sequence(R"({"offset": 1})"), parse_error);
    EXPECT_THROW(io::parse_sequence("{not json"), parse_error);
}

TEST(SequenceStream, ReadsAll)
{
    std::istringstream in("1\n2\n3\n");
    EXPECT_EQ(io::read_sequence(in), (IntSequence{1, 2, 3}));
}

TEST(RecurrenceJson, RoundTrip)
{
    const PolyRecurrence r{2, {{BigInt(2), BigInt(1)}, {BigInt(-4), BigInt(-1)}, {BigInt(1)}}};
    const auto text = io::to_json(r).dump();
    EXPECT_EQ(text, R"({"order":2,"polys":[["2","1"],["-4","-1"],["1"]]})");
    EXPECT_EQ(io::parse_recurrence(text), r);
    EXPECT_THROW(io::parse_recurrence(R"({"order":2,"polys":[["1"]]})"), parse_error);
    EXPECT_THROW(io::parse_recurrence("[]"), parse_error);
}

TEST(ReportJson, CanonicalSortedKeys)
{
    const auto r = certify_primary_hall(IntSequence{0, 1, 3, 6, 10, 15});
    const auto text = io::to_json(r).dump();
    EXPECT_EQ(text.find(' '), std::string::npos);
    EXPECT_LT(text.find("\"N\""), text.find("\"check\""));
    EXPECT_LT(text.find("\"check\""), text.find("\"counterexamples\""));
    EXPECT_NE(text.find(R"({"modulus":"2","n":2,"witness":"1"})"), std::string::npos);
    EXPECT_NE(text.find(R"("verdict":"refuted")"), std::string::npos);
}

TEST(TripleJson, HasThreeSequences)
{
    const auto t = theorem51_u(IntSequence{1, 2, 3, 4, 5});
    const auto j = io::to_json(t);
    EXPECT_EQ(io::sequence_from_json(j["u"]), (IntSequence{1, 0, 1, -2, 9}));
    EXPECT_EQ(io::sequence_from_json(j["c"]), t.c);
    EXPECT_EQ(io::sequence_from_json(j["b"]), t.b);
}

TEST(IntervalJson, Fields)
{
    const auto x = Interval::pi(128);
    const auto j = io::to_json(x);
    EXPECT_EQ(j["lo"].get<std::string>().substr(0, 8), "3.141592");
    EXPECT_EQ(j["hi"].get<std::string>().substr(0, 8), "3.141592");
    EXPECT_TRUE(j.contains("width"));
}

TEST(ConstructionJson, TraceOptional)
{
    const auto c = construct_genuine(GrowthFn::primorial(), 4);
    EXPECT_FALSE(io::to_json(c, false).contains("trace"));
    const auto j = io::to_json(c, true);
    ASSERT_EQ(j["trace"].size(), 5u);
    EXPECT_EQ(j["trace"][0]["w"], "1");
    EXPECT_NE(io::format_trace(c.trace).find("# n\tC\tu\tv\tw\tB\tA"), std::string::npos);
}
