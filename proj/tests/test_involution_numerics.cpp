#include <gtest/gtest.h>

#include "inoue/involution_numerics.hpp"

using namespace inoue;

namespace {

const CaseRecord& record(const CaseScan& s, long t, long m) {
    for (const auto& r : s.trace) {
        if (r.t == t && r.m == m && r.minimality_rule != MinimalityRule::Excluded) return r;
    }
    throw std::runtime_error("no trace record");
}

}  // namespace

TEST(InvolutionNumerics, FixedPointCount) {
    EXPECT_EQ(fixed_point_count(7, 1, 1, 0), 11);
    EXPECT_EQ(fixed_point_count(7, 1, 1, 1), 9);
    for (long h = 0; h <= 5; ++h) EXPECT_EQ(fixed_point_count(7, 1, 1, h), 11 - 2 * h);
    EXPECT_THROW(fixed_point_count(7, 1, 1, 6), DomainError);
    EXPECT_THROW(fixed_point_count(7, 1, 1, -1), DomainError);
}

TEST(InvolutionNumerics, FixedPointCountKeepsParityOfK2) {
    for (long K2 = 1; K2 <= 9; ++K2) {
        for (long h = 0; 2 * h <= K2 + 4; ++h) {
            const long k = fixed_point_count(K2, 1, 1, h);
            EXPECT_EQ((k - K2) % 2, 0);
            EXPECT_GE(k, 0);
        }
    }
}

TEST(InvolutionNumerics, ProfileFromR) {
    // t = 1 with m = 1: R^2 = 1, K.R = 3
    const auto p = profile_from_R(7, 1, 1, 3, 3);
    EXPECT_EQ(p.t, 1);
    EXPECT_EQ(p.k, 7);
    EXPECT_EQ(p.rho_That, 9);
    EXPECT_TRUE(p.consistent());
    ASSERT_TRUE(p.h0_anti.has_value());
    EXPECT_EQ(*p.h0_anti, 2);
    EXPECT_THROW(profile_from_R(7, 1, 1, 3, 4), DomainError);
    EXPECT_THROW(profile_from_R(7, 1, 1, -5, 3), DomainError);
}

TEST(InvolutionNumerics, ScanForSeven) {
    const auto s = admissible_isolated_counts(7);
    EXPECT_EQ(s.rho_S, 3);
    EXPECT_EQ(s.admissible, (std::vector<long>{5, 7}));
    ASSERT_EQ(s.trace.size(), 7u);

    std::size_t excluded = 0;
    for (const auto& r : s.trace) {
        if (r.t == -1) {
            ++excluded;
            EXPECT_EQ(r.minimality_rule, MinimalityRule::Excluded);
            EXPECT_FALSE(r.admissible);
            EXPECT_NE(r.note.find("rR"), std::string::npos) << r.note;
        }
    }
    EXPECT_EQ(excluded, 1u);

    for (long m = 0; m <= 2; ++m) {
        const long k = 5 + 2 * m;
        const auto& a = record(s, 1, m);
        EXPECT_EQ(a.k, k);
        EXPECT_EQ(a.rho_That, k + 2);
        EXPECT_EQ(a.K2_That, 8 - k);
        EXPECT_EQ(a.minimality_rule, MinimalityRule::ForcedMinimal);
        EXPECT_EQ(a.admissible, 8 - k >= 1);

        const auto& b = record(s, 3, m);
        EXPECT_EQ(b.k, k);
        EXPECT_EQ(b.rho_That, k + 3);
        EXPECT_EQ(b.K2_That, 7 - k);
        EXPECT_EQ(b.minimality_rule, MinimalityRule::DropAtMostTwo);
        EXPECT_EQ(b.admissible, 7 - k >= -1);
    }
}

TEST(InvolutionNumerics, ScanIsDeterministic) {
    const auto a = admissible_isolated_counts(7), b = admissible_isolated_counts(7);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        EXPECT_EQ(a.trace[i].k, b.trace[i].k);
        EXPECT_EQ(a.trace[i].note, b.trace[i].note);
    }
}

TEST(InvolutionNumerics, ScanHaltsForEveryK2) {
    for (long K2 = 1; K2 <= 9; ++K2) {
        try {
            const auto s = admissible_isolated_counts(K2);
            for (std::size_t i = 1; i < s.trace.size(); ++i) {
                const auto& prev = s.trace[i - 1];
                const auto& cur = s.trace[i];
                if (cur.t == prev.t && cur.minimality_rule != MinimalityRule::Excluded) {
                    EXPECT_LT(cur.K2_That, prev.K2_That) << K2;
                }
            }
            for (const long k : s.admissible) EXPECT_EQ(k % 2, 1);
        } catch (const DomainError& e) {
            EXPECT_NE(std::string(e.what()).find("no minimality bound"), std::string::npos) << e.what();
        }
    }
    EXPECT_THROW(admissible_isolated_counts(0), DomainError);
    EXPECT_THROW(admissible_isolated_counts(10), DomainError);
}

TEST(InvolutionNumerics, SmallPicardNumbersAdmitNothing) {
    EXPECT_TRUE(admissible_isolated_counts(9).admissible.empty());
    EXPECT_TRUE(admissible_isolated_counts(8).admissible.empty());
    EXPECT_TRUE(admissible_isolated_counts(6).admissible.empty());
}

TEST(InvolutionNumerics, VerdictForInoueDims) {
    const auto v = inoue_bloch_verdict({0, 1, 1});
    EXPECT_TRUE(v.established);
    EXPECT_TRUE(v.membership);
    EXPECT_TRUE(v.failing_step.empty());
    EXPECT_EQ(v.k_values[0], 11);
    EXPECT_EQ(v.k_values[1], 9);
    EXPECT_EQ(v.k_values[2], 9);
    EXPECT_EQ(v.admissible, (std::vector<long>{5, 7}));
    std::size_t exclusions = 0, bkl = 0;
    for (const auto& s : v.trace) {
        EXPECT_TRUE(s.holds) << s.rule;
        exclusions += s.rule == "kodaira dimension exclusion";
        bkl += s.rule == "bloch-kas-lieberman";
    }
    EXPECT_EQ(exclusions, 3u);
    EXPECT_EQ(bkl, 3u);
    EXPECT_EQ(v.trace.front().rule, "group algebra ideal membership");
    EXPECT_EQ(v.trace.back().rule, "criterion for (Z/2)^2-actions");
}

TEST(InvolutionNumerics, VerdictWithAdmissibleCount) {
    const auto v = inoue_bloch_verdict({0, 3, 3});
    EXPECT_FALSE(v.established);
    EXPECT_EQ(v.k_values[1], 5);
    EXPECT_NE(v.failing_step.find("kodaira dimension exclusion"), std::string::npos);
}

TEST(InvolutionNumerics, VerdictAllZeroDims) {
    const auto v = inoue_bloch_verdict({0, 0, 0});
    EXPECT_TRUE(v.established);
    for (const auto& k : v.k_values) EXPECT_EQ(k, 11);
}

TEST(InvolutionNumerics, VerdictInfeasibleDims) {
    const auto v = inoue_bloch_verdict({0, 6, 1});
    EXPECT_FALSE(v.established);
    EXPECT_FALSE(v.k_values[1].has_value());
    EXPECT_NE(v.failing_step.find("fixed-point formula"), std::string::npos);
}

TEST(InvolutionNumerics, RuleNames) {
    EXPECT_STREQ(to_string(MinimalityRule::ForcedMinimal), "forced-minimal");
    EXPECT_STREQ(to_string(MinimalityRule::DropAtMostTwo), "drop-at-most-2");
    EXPECT_STREQ(to_string(MinimalityRule::Excluded), "excluded");
}
