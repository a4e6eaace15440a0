#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "strippaths/bijection.hpp"

using namespace strippaths;

namespace {

std::string golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
    std::string line;
    std::getline(in, line);
    return line;
}

std::string map_a(const std::string& p, int k) { return format_path(a_to_b(parse_path(p), k)); }
std::string map_b(const std::string& p, int k) { return format_path(b_to_a(parse_path(p), k)); }

}  // namespace

TEST(Bijection, WorkedExampleMatchesGolden) {
    const std::string source = golden("worked_example_a.txt");
    const std::string target = golden("worked_example_b.txt");
    ASSERT_EQ(source.size(), 26u);
    EXPECT_TRUE(oracle::admits(source, oracle::strip_a(6)));
    EXPECT_EQ(map_a(source, 6), target);
    EXPECT_TRUE(oracle::admits(target, oracle::strip_b(6)));
    EXPECT_EQ(map_b(target, 6), source);
}

TEST(Bijection, WorkedExampleDecomposition) {
    const LatticePath p = parse_path(golden("worked_example_a.txt"));
    const SubsetLabel l = classify_A(p, 6);
    EXPECT_EQ(l.index, 3);
    EXPECT_EQ(l.depth, 0);
    EXPECT_EQ(l.name(), "A^3_{26,6}");
    const Decomposition d = decompose(p, l, 6);
    ASSERT_TRUE(d.a && d.b);
    EXPECT_EQ(*d.a, 18u);  // first step reaching -3
    EXPECT_EQ(*d.b, 14u);  // last step leaving 0 before it
    EXPECT_EQ(format_path(d.segment('C')), "DUUDDUUUDUDDDU");
    EXPECT_EQ(d.step('a'), Step::Down);
    EXPECT_EQ(d.reassemble(), p);
}

TEST(Bijection, SmallExamples) {
    EXPECT_EQ(map_a("DDUU", 3), "UUUD");
    EXPECT_EQ(map_a("D", 2), "U");
    EXPECT_EQ(map_a("", 4), "");
    EXPECT_EQ(map_a("DUD", 1), "UDU");
    EXPECT_EQ(map_b("UUUD", 3), "DDUU");
}

TEST(Bijection, RejectsNonMembers) {
    EXPECT_THROW(a_to_b(parse_path("UU"), 3), DomainError);
    EXPECT_THROW(b_to_a(parse_path("D"), 3), DomainError);
    EXPECT_THROW(classify_A(parse_path("DD"), 4), DomainError);
    EXPECT_THROW(a_to_b(parse_path("UD"), 0), std::invalid_argument);
}

TEST(Bijection, DecomposeRejectsWrongLabel) {
    const LatticePath p = parse_path("DDUU");
    SubsetLabel l = classify_A(p, 3);
    l.index = l.index == 1 ? 2 : 1;
    EXPECT_THROW(decompose(p, l, 3), DomainError);
}

TEST(Bijection, EmptyPathIsTrivial) {
    for (int k = 1; k <= 6; ++k) {
        EXPECT_EQ(classify_A({}, k).index, 0);
        EXPECT_EQ(classify_B({}, k).index, 0);
        EXPECT_TRUE(decompose({}, classify_A({}, k), k).parts.empty());
    }
}

// Every A_{n,k} path against the exhaustive oracle sets.
TEST(Bijection, ExhaustiveAgainstOracle) {
    for (int k = 1; k <= 6; ++k) {
        for (std::size_t n = 0; n <= 13; ++n) {
            const auto as = oracle::brute(n, oracle::strip_a(k));
            const auto bs = oracle::brute(n, oracle::strip_b(k));
            ASSERT_EQ(as.size(), bs.size()) << "n=" << n << " k=" << k;
            std::set<std::string> image;
            for (const auto& p : as) {
                const std::string q = map_a(p, k);
                ASSERT_TRUE(oracle::admits(q, oracle::strip_b(k))) << p << " k=" << k << " -> " << q;
                ASSERT_EQ(q.size(), n);
                image.insert(q);
                ASSERT_EQ(map_b(q, k), p) << "k=" << k;
            }
            EXPECT_EQ(image, std::set<std::string>(bs.begin(), bs.end())) << "n=" << n << " k=" << k;
        }
    }
}

TEST(Bijection, LabelsCorrespondAndPartition) {
    for (int k = 1; k <= 6; ++k) {
        for (std::size_t n = 0; n <= 12; ++n) {
            std::map<std::tuple<int, int, int>, int> a_sizes, b_sizes;
            for (const auto& s : oracle::brute(n, oracle::strip_a(k))) {
                const LatticePath p = parse_path(s);
                const SubsetLabel la = classify_A(p, k);
                const SubsetLabel lb = classify_B(a_to_b(p, k), k);
                EXPECT_TRUE(la.corresponds_to(lb)) << s << " k=" << k << ": " << la.name() << " vs " << lb.name();
                EXPECT_EQ(la.family, Family::A);
                EXPECT_EQ(lb.family, Family::B);
                EXPECT_EQ(decompose(p, la, k).reassemble(), p);
                ++a_sizes[{la.index, la.depth, la.width}];
            }
            for (const auto& s : oracle::brute(n, oracle::strip_b(k))) {
                const LatticePath q = parse_path(s);
                const SubsetLabel lb = classify_B(q, k);
                EXPECT_EQ(decompose(q, lb, k).reassemble(), q);
                ++b_sizes[{lb.index, lb.depth, lb.width}];
            }
            EXPECT_EQ(a_sizes, b_sizes) << "n=" << n << " k=" << k;
        }
    }
}

TEST(Bijection, SubsetIndicesPerParity) {
    // Number of distinct top-level indices used by each parity class at n = 12 / 13.
    auto indices = [](std::size_t n, int k) {
        std::set<int> seen;
        for (const auto& s : oracle::brute(n, oracle::strip_a(k))) {
            const SubsetLabel l = classify_A(parse_path(s), k);
            if (!l.base_case && l.depth == 0) seen.insert(l.index);
        }
        return seen;
    };
    EXPECT_EQ(indices(12, 6), (std::set<int>{1, 2, 3}));
    EXPECT_EQ(indices(12, 5), (std::set<int>{1, 2}));
    EXPECT_EQ(indices(13, 6), (std::set<int>{1, 2, 3, 4}));
    EXPECT_EQ(indices(13, 5), (std::set<int>{1, 2, 3}));
}

TEST(BijectionProperty, RandomLongPathsRoundTrip) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 3000; ++trial) {
        const int k = std::uniform_int_distribution<int>(1, 14)(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 120)(rng);
        const std::string p = oracle::random_member(rng, n, oracle::strip_a(k));
        const std::string q = map_a(p, k);
        ASSERT_TRUE(oracle::admits(q, oracle::strip_b(k))) << p << " k=" << k;
        ASSERT_EQ(map_b(q, k), p) << "k=" << k;
        EXPECT_TRUE(classify_A(parse_path(p), k).corresponds_to(classify_B(parse_path(q), k)));
    }
}

TEST(BijectionProperty, RandomBPathsRoundTrip) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 3000; ++trial) {
        const int k = std::uniform_int_distribution<int>(1, 14)(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 120)(rng);
        const std::string q = oracle::random_member(rng, n, oracle::strip_b(k));
        const std::string p = map_b(q, k);
        ASSERT_TRUE(oracle::admits(p, oracle::strip_a(k))) << q << " k=" << k;
        ASSERT_EQ(map_a(p, k), q) << "k=" << k;
    }
}

TEST(BijectionProperty, DecompositionsReassembleOnRandomPaths) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = std::uniform_int_distribution<int>(1, 10)(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 80)(rng);
        const LatticePath p = parse_path(oracle::random_member(rng, n, oracle::strip_a(k)));
        const LatticePath q = parse_path(oracle::random_member(rng, n, oracle::strip_b(k)));
        const Decomposition dp = decompose(p, classify_A(p, k), k);
        const Decomposition dq = decompose(q, classify_B(q, k), k);
        EXPECT_EQ(dp.reassemble(), p);
        EXPECT_EQ(dq.reassemble(), q);
        for (const auto& part : dp.parts) {
            if (part.is_step()) EXPECT_EQ(part.path.size(), 1u);
            EXPECT_EQ(p.slice(part.begin, part.begin + part.path.size()), part.path);
        }
    }
}

TEST(Bijection, ListedClassifications) {
    const SubsetLabel ddu = classify_A(parse_path("DDUU"), 3);
    EXPECT_EQ(ddu.index, 2);
    EXPECT_EQ(ddu.width_parity, 1);
    EXPECT_EQ(classify_A(parse_path("UDUD"), 3).index, 1);
    EXPECT_EQ(classify_B(parse_path("UUUD"), 3).index, 2);
    EXPECT_EQ(classify_B(parse_path("UDUD"), 3).index, 1);
    EXPECT_EQ(classify_B(parse_path(golden("worked_example_b.txt")), 6).index, 3);
    const Decomposition d = decompose(parse_path("DDUU"), ddu, 3);
    EXPECT_EQ(*d.a, 1u);
    EXPECT_EQ(*d.b, 0u);
    EXPECT_TRUE(d.segment('B').empty());
    EXPECT_TRUE(d.segment('C').empty());
    EXPECT_EQ(format_path(d.segment('A')), "UU");
    EXPECT_EQ(map_b("U", 2), "D");
}
