#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "strippaths/path.hpp"

using namespace strippaths;

namespace {

std::vector<std::string> strings(const std::vector<LatticePath>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(format_path(p));
    return out;
}

}  // namespace

TEST(Path, ParseAndFormatRoundTrip) {
    EXPECT_EQ(format_path(parse_path("UDDU")), "UDDU");
    EXPECT_TRUE(parse_path("").empty());
    EXPECT_EQ(parse_path("UUD").final_height(), 1);
}

TEST(Path, ParseReportsOffendingIndex) {
    try {
        parse_path("UDxU");
        FAIL() << "expected a parse error";
    } catch (const PathParseError& e) {
        EXPECT_EQ(e.position(), 2u);
        EXPECT_NE(std::string(e.what()).find("index 2"), std::string::npos);
    }
    EXPECT_THROW(parse_path("u"), PathParseError);
    EXPECT_THROW(parse_path(std::string(kMaxPathLength + 1, 'U')), std::invalid_argument);
}

TEST(Path, HeightsAndFlip) {
    EXPECT_EQ(heights(parse_path("UUDD")), (std::vector<int>{0, 1, 2, 1, 0}));
    EXPECT_EQ(heights(LatticePath{}), std::vector<int>{0});
    EXPECT_EQ(format_path(flip(parse_path("UUDU"))), "DDUD");
}

TEST(Path, SliceAndConcatenate) {
    const LatticePath p = parse_path("UUDDU");
    EXPECT_EQ(format_path(p.slice(1, 4)), "UDD");
    EXPECT_EQ(format_path(p.slice(0, 0) + Step::Down), "D");
    EXPECT_EQ(format_path(Step::Up + p.slice(3, 5)), "UDU");
    EXPECT_THROW(p.slice(3, 9), std::out_of_range);
}

TEST(Path, OrderIsLexicographicWithDownFirst) {
    EXPECT_LT(parse_path("DU"), parse_path("UD"));
    EXPECT_LT(parse_path("D"), parse_path("DD"));
    EXPECT_LT(LatticePath{}, parse_path("D"));
}

TEST(Path, StripBounds) {
    EXPECT_EQ(FamilySpec::a(3).lower(), -2);
    EXPECT_EQ(FamilySpec::a(3).upper(), 1);
    EXPECT_EQ(FamilySpec::a(4).lower(), -2);
    EXPECT_EQ(FamilySpec::a(4).upper(), 2);
    EXPECT_EQ(FamilySpec::a(1).lower(), -1);
    EXPECT_EQ(FamilySpec::a(1).upper(), 0);
    EXPECT_EQ(FamilySpec::b(5).upper(), 5);
    EXPECT_THROW(FamilySpec::a(0), std::invalid_argument);
}

TEST(Path, MembershipNamesTheViolation) {
    EXPECT_TRUE(is_member(parse_path("DDUU"), FamilySpec::a(3)));
    EXPECT_FALSE(is_member(parse_path("UU"), FamilySpec::a(3)));
    const auto why = membership_violation(parse_path("UU"), FamilySpec::a(3));
    ASSERT_TRUE(why);
    EXPECT_NE(why->find("A_{2,3}"), std::string::npos);
    const auto end = membership_violation(parse_path("DD"), FamilySpec::a(4));
    ASSERT_TRUE(end);
    EXPECT_NE(end->find("final height -2"), std::string::npos);
    EXPECT_FALSE(membership_violation(parse_path("UDU"), FamilySpec::b(1)));
}

TEST(Path, SmallFamiliesListedExplicitly) {
    EXPECT_EQ(strings(enumerate(FamilySpec::a(3), 4)),
              (std::vector<std::string>{"DDUU", "DUDU", "DUUD", "UDDU", "UDUD"}));
    EXPECT_EQ(strings(enumerate(FamilySpec::b(3), 4)),
              (std::vector<std::string>{"UDUD", "UDUU", "UUDD", "UUDU", "UUUD"}));
    EXPECT_EQ(strings(enumerate(FamilySpec::b(2), 1)), std::vector<std::string>{"U"});
    EXPECT_EQ(strings(enumerate(FamilySpec::a(5), 0)), std::vector<std::string>{""});
    EXPECT_EQ(strings(enumerate(FamilySpec::a(1), 3)), std::vector<std::string>{"DUD"});
}

TEST(Path, EnumerationMatchesExhaustiveFilter) {
    for (int k = 1; k <= 6; ++k) {
        for (std::size_t n = 0; n <= 12; ++n) {
            EXPECT_EQ(strings(enumerate(FamilySpec::a(k), n)), oracle::brute(n, oracle::strip_a(k)))
                << "A n=" << n << " k=" << k;
            EXPECT_EQ(strings(enumerate(FamilySpec::b(k), n)), oracle::brute(n, oracle::strip_b(k)))
                << "B n=" << n << " k=" << k;
        }
    }
}

TEST(Path, EnumerateByEndMatchesFilter) {
    for (int k = 1; k <= 4; ++k) {
        for (std::size_t n = 0; n <= 10; ++n) {
            for (int h = -3; h <= 5; ++h) {
                for (Family f : {Family::A, Family::B}) {
                    oracle::Strip s = f == Family::A ? oracle::strip_a(k) : oracle::strip_b(k);
                    s.a_endpoint = false;
                    std::vector<std::string> expected;
                    for (auto& p : oracle::brute(n, s))
                        if (oracle::end_height(p) == h) expected.push_back(p);
                    EXPECT_EQ(strings(enumerate_by_end(f, n, k, h)), expected)
                        << family_letter(f) << " n=" << n << " k=" << k << " h=" << h;
                }
            }
        }
    }
}

TEST(PathProperty, FlipIsAnInvolutionAndNegatesHeights) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 80)(rng);
        std::string s;
        for (std::size_t i = 0; i < n; ++i) s.push_back(std::bernoulli_distribution(0.5)(rng) ? 'U' : 'D');
        const LatticePath p = parse_path(s);
        EXPECT_EQ(flip(flip(p)), p);
        const auto h = heights(p);
        const auto g = heights(flip(p));
        for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(g[i], -h[i]);
        EXPECT_EQ(format_path(flip(p)), oracle::flip(s));
    }
}

TEST(PathProperty, ConcatenationAddsFinalHeights) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = oracle::random_member(rng, std::uniform_int_distribution<std::size_t>(0, 30)(rng),
                                             oracle::strip_b(4));
        const auto b = oracle::random_member(rng, std::uniform_int_distribution<std::size_t>(0, 30)(rng),
                                             oracle::strip_b(4));
        const LatticePath joined = parse_path(a) + parse_path(b);
        EXPECT_EQ(format_path(joined), a + b);
        EXPECT_EQ(joined.final_height(), oracle::end_height(a) + oracle::end_height(b));
    }
}

TEST(PathProperty, RandomMembersAgreeWithOracleMembership) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const int k = std::uniform_int_distribution<int>(1, 9)(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 60)(rng);
        std::string s;
        for (std::size_t i = 0; i < n; ++i) s.push_back(std::bernoulli_distribution(0.5)(rng) ? 'U' : 'D');
        const LatticePath p = parse_path(s);
        EXPECT_EQ(is_member(p, FamilySpec::a(k)), oracle::admits(s, oracle::strip_a(k)));
        EXPECT_EQ(is_member(p, FamilySpec::b(k)), oracle::admits(s, oracle::strip_b(k)));
        EXPECT_EQ(!membership_violation(p, FamilySpec::a(k)), is_member(p, FamilySpec::a(k)));
    }
}

TEST(Path, ListedExamples) {
    EXPECT_EQ(parse_path("UD"), (LatticePath{Step::Up, Step::Down}));
    try {
        parse_path("UXD");
        FAIL();
    } catch (const PathParseError& e) {
        EXPECT_EQ(e.position(), 1u);
    }
    EXPECT_EQ(heights(parse_path("UUD")), (std::vector<int>{0, 1, 2, 1}));
    EXPECT_EQ(heights(parse_path("DDUU")), (std::vector<int>{0, -1, -2, -1, 0}));
    EXPECT_EQ(format_path(flip(parse_path("UUD"))), "DDU");
    EXPECT_TRUE(is_member(parse_path("UDUD"), FamilySpec::a(3)));
    EXPECT_FALSE(is_member(parse_path("UUDD"), FamilySpec::a(3)));
    EXPECT_FALSE(is_member(parse_path("UDU"), FamilySpec::a(3)));
    EXPECT_EQ(strings(enumerate_by_end(Family::B, 2, 3, 0)), std::vector<std::string>{"UD"});
    EXPECT_EQ(strings(enumerate_by_end(Family::A, 2, 3, -2)), std::vector<std::string>{"DD"});
    EXPECT_EQ(strings(enumerate_by_end(Family::B, 4, 3, 0)), (std::vector<std::string>{"UDUD", "UUDD"}));
}

TEST(Path, FlipIsAnInvolutionExhaustively) {
    for (std::size_t n = 0; n <= 16; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Step> steps(n);
            for (std::size_t i = 0; i < n; ++i) steps[i] = (mask >> i & 1) ? Step::Up : Step::Down;
            const LatticePath p(steps);
            ASSERT_EQ(flip(flip(p)), p);
        }
    }
}

TEST(Path, EnumerationIsSortedAndParityRespected) {
    for (int k = 1; k <= 6; ++k) {
        for (std::size_t n = 0; n <= 16; ++n) {
            const auto bs = enumerate(FamilySpec::b(k), n);
            EXPECT_TRUE(std::is_sorted(bs.begin(), bs.end()));
            EXPECT_EQ(std::adjacent_find(bs.begin(), bs.end()), bs.end());
            for (const auto& p : bs) {
                ASSERT_TRUE(is_member(p, FamilySpec::b(k)));
                ASSERT_EQ((p.final_height() % 2 + 2) % 2, static_cast<int>(n % 2));
            }
            EXPECT_EQ(enumerate(FamilySpec::a(k), n).size(), bs.size()) << "n=" << n << " k=" << k;
        }
    }
}
