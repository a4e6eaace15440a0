#include <gtest/gtest.h>

#include "strippaths/bijection.hpp"
#include "strippaths/verify.hpp"

using namespace strippaths;

TEST(Verify, DefaultSweepPasses) {
    const VerifyReport report = run_verification({});
    EXPECT_TRUE(report.passed());
    ASSERT_EQ(report.suites.size(), suite_names().size());
    for (std::size_t i = 0; i < report.suites.size(); ++i) {
        EXPECT_EQ(report.suites[i].name, suite_names()[i]);
        EXPECT_GT(report.suites[i].checks, 0u) << report.suites[i].name;
    }
}

TEST(Verify, SerialAndParallelAgree) {
    VerifyOptions options;
    options.n_max = 9;
    options.k_max = 4;
    const std::string parallel = format_report(run_verification(options));
    options.parallel = false;
    EXPECT_EQ(format_report(run_verification(options)), parallel);
}

TEST(Verify, RejectsBadBounds) {
    VerifyOptions options;
    options.k_max = 0;
    EXPECT_THROW(run_verification(options), std::invalid_argument);
    options.k_max = 2;
    options.n_max = kMaxPathLength + 1;
    EXPECT_THROW(run_verification(options), std::invalid_argument);
}

TEST(Verify, NonInjectiveMapIsCaught) {
    VerifyOptions options;
    options.n_max = 6;
    options.k_max = 3;
    // Sends every path of width 2 to the all-zigzag path UDUD...
    options.a_to_b = [](const LatticePath& p, int k) {
        if (k != 2 || p.size() < 2) return a_to_b(p, k);
        LatticePath q;
        for (std::size_t i = 0; i < p.size(); ++i) q.push_back(i % 2 == 0 ? Step::Up : Step::Down);
        return q;
    };
    const VerifyReport report = run_verification(options);
    EXPECT_FALSE(report.passed());
    const SuiteResult* failed = report.first_failure();
    ASSERT_NE(failed, nullptr);
    EXPECT_EQ(failed->name, "bijectivity");
    EXPECT_NE(failed->counterexample.find("repeats"), std::string::npos);
    EXPECT_NE(failed->counterexample.find("k=2"), std::string::npos);
}

TEST(Verify, ThrowingMapIsReportedNotPropagated) {
    VerifyOptions options;
    options.n_max = 4;
    options.k_max = 2;
    options.b_to_a = [](const LatticePath&, int) -> LatticePath { throw std::runtime_error("boom"); };
    const VerifyReport report = run_verification(options);
    EXPECT_FALSE(report.passed());
    EXPECT_EQ(report.first_failure()->name, "round-trip");
    EXPECT_NE(report.first_failure()->counterexample.find("boom"), std::string::npos);
}

TEST(Verify, ReportFormat) {
    VerifyReport report;
    report.suites.push_back({"alpha", true, 3, ""});
    report.suites.push_back({"beta", false, 1, "UD (n=2, k=1): nope"});
    EXPECT_EQ(format_report(report), "PASS alpha (3 checks)\nFAIL beta: UD (n=2, k=1): nope\n");
    EXPECT_EQ(report.first_failure()->name, "beta");
}
