#include <gtest/gtest.h>

#include <algorithm>

#include "inoue/cover_invariants.hpp"

using namespace inoue;

namespace {

const std::string kFixtures = INOUE_FIXTURE_DIR;

BranchData expected_inoue() {
    BranchData b;
    b.D = {DivisorClass{5, {3, 2, 3, 0, 2, 2}}, DivisorClass{3, {1, 2, 1, 2, 0, 0}}, DivisorClass{7, {1, 2, 1, 4, 4, 4}}};
    b.L = {DivisorClass{5, {1, 2, 1, 3, 2, 2}}, DivisorClass{6, {2, 2, 2, 2, 3, 3}}, DivisorClass{4, {2, 2, 2, 1, 1, 1}}};
    return b;
}

}  // namespace

TEST(CoverInvariants, InoueBranchClasses) {
    EXPECT_EQ(inoue_branch_data(), expected_inoue());
    EXPECT_EQ(inoue_branch_data().bicanonical_base(), (DivisorClass{9, {3, 4, 3, 4, 4, 4}}));
}

TEST(CoverInvariants, BicanonicalBaseLatticeIdentity) {
    const auto c = named_classes();
    const auto rhs = -canonical_class() + c["f1"] + c["S1"] + c["S2"] + c["S3"] + c["S4"];
    EXPECT_EQ(inoue_branch_data().bicanonical_base(), rhs);
}

TEST(CoverInvariants, RelationsAndReport) {
    const auto b = inoue_branch_data();
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(cover_relation_holds(b, i));
    const auto r = validate_branch_data(b);
    EXPECT_TRUE(r.all_passed());
    EXPECT_FALSE(r.degenerate);
    EXPECT_EQ(r.checks.size(), 7u);
    EXPECT_TRUE(r.check("D2+D3=2L1").passed);
    EXPECT_TRUE(r.check("D3+D1=2L2").passed);
    EXPECT_TRUE(r.check("D1+D2=2L3").passed);
    EXPECT_TRUE(r.check("S1 isolated in branch locus").passed);
}

TEST(CoverInvariants, Numbers) {
    const auto b = inoue_branch_data();
    EXPECT_EQ(cover_chi(b), 1);
    EXPECT_EQ(cover_K2(b), -1);
    EXPECT_EQ(minimal_K2(b), 7);
    EXPECT_EQ(minimal_K2(b, 0), -1);
    EXPECT_THROW(minimal_K2(b, -1), DomainError);
    const auto pq = geometric_genus_and_irregularity(b);
    EXPECT_EQ(pq.p_g, 0);
    EXPECT_EQ(pq.q, 0);
}

TEST(CoverInvariants, ChiBySummingCharacterEulerCharacteristics) {
    // chi(O_X) = chi(O_Y) + sum chi(-L_i); each term by Riemann-Roch on Y.
    const auto b = inoue_branch_data();
    const auto K = canonical_class();
    long chi = 1;
    for (const auto& l : b.L) chi += 1 + (intersect(l, l) + intersect(l, K)) / 2;
    EXPECT_EQ(cover_chi(b), chi);
    EXPECT_EQ(chi, 1);
}

TEST(CoverInvariants, CharacterDimensions) {
    const auto b = inoue_branch_data();
    const auto dims = bicanonical_character_dims(b);
    EXPECT_EQ(dims, (CharacterDims{7, 1, 0, 0}));
    long sum = 0;
    for (long d : dims) sum += d;
    EXPECT_EQ(sum, cover_chi(b) + minimal_K2(b));
    EXPECT_EQ(anti_invariant_dims(dims), (std::array<long, 3>{0, 1, 1}));
    EXPECT_EQ(invariant_dims(dims), (std::array<long, 3>{8, 7, 7}));
}

TEST(CoverInvariants, Aggregate) {
    const auto ci = compute_cover_invariants(inoue_branch_data());
    EXPECT_EQ(ci.K2_cover, -1);
    EXPECT_EQ(ci.chi_cover, 1);
    EXPECT_EQ(ci.p_g, 0);
    EXPECT_EQ(ci.q, 0);
    EXPECT_EQ(ci.nodal_branch_curves, 4);
    EXPECT_EQ(ci.K2_minimal, 7);
}

TEST(CoverInvariants, PermutingCharactersPreservesInvariants) {
    const auto b = inoue_branch_data();
    const auto base_dims = bicanonical_character_dims(b);
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
        BranchData p;
        for (std::size_t i = 0; i < 3; ++i) {
            p.D[i] = b.D[perm[i]];
            p.L[i] = b.L[perm[i]];
        }
        EXPECT_TRUE(cover_relations_hold(p));
        EXPECT_EQ(cover_chi(p), 1);
        EXPECT_EQ(cover_K2(p), -1);
        const auto dims = bicanonical_character_dims(p);
        EXPECT_EQ(dims[0], base_dims[0]);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(dims[i + 1], base_dims[perm[i] + 1]);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(CoverInvariants, BranchFileRoundTrip) {
    const auto f = load_branch_file(kFixtures + "/inoue.branch");
    EXPECT_EQ(f.data, expected_inoue());
    EXPECT_EQ(f.nodal_branch_curves, 4);
}

TEST(CoverInvariants, BrokenRelationsRejected) {
    const auto f = load_branch_file(kFixtures + "/broken.branch");
    EXPECT_FALSE(cover_relations_hold(f.data));
    const auto r = validate_branch_data(f.data);
    EXPECT_FALSE(r.all_passed());
    EXPECT_THROW(cover_chi(f.data), DomainError);
    EXPECT_THROW(cover_K2(f.data), DomainError);
    EXPECT_THROW(compute_cover_invariants(f.data), DomainError);
}

TEST(CoverInvariants, ZeroBranchIsDegenerate) {
    const auto f = load_branch_file(kFixtures + "/zero.branch");
    EXPECT_TRUE(f.data.is_zero());
    EXPECT_EQ(f.nodal_branch_curves, 0);
    const auto r = validate_branch_data(f.data);
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(cover_chi(f.data), 4);
    EXPECT_THROW(geometric_genus_and_irregularity(f.data), DomainError);
}

TEST(CoverInvariants, BranchParseErrors) {
    const std::string good =
        "D1 = 5,3,2,3,0,2,2\nD2 = 3,1,2,1,2,0,0\nD3 = 7,1,2,1,4,4,4\n"
        "L1 = 5,1,2,1,3,2,2\nL2 = 6,2,2,2,2,3,3\nL3 = 4,2,2,2,1,1,1\n";
    EXPECT_EQ(parse_branch_string(good).data, expected_inoue());
    EXPECT_THROW(parse_branch_string(good + "L3 = 4,2,2,2,1,1,1\n"), ParseError);
    EXPECT_THROW(parse_branch_string(good + "X1 = 1,0,0,0,0,0,0\n"), ParseError);
    EXPECT_THROW(parse_branch_string(good + "n2 = -1\n"), ParseError);
    EXPECT_THROW(parse_branch_string(good + "n2 = 2 3\n"), ParseError);
    EXPECT_THROW(parse_branch_string(good + "no equals sign\n"), ParseError);
    EXPECT_THROW(parse_branch_string("D1 = 5,3,2,3,0,2,2\n"), ParseError);
    try {
        parse_branch_string("D1 = 5,3,2,y,0,2,2\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 12u);
    }
    EXPECT_EQ(parse_branch_string(good + "n2 = 2\n").nodal_branch_curves, 2);
}
