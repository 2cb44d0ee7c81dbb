#include <gtest/gtest.h>

#include <tuple>

#include "jetrep/chartab/dixon.hpp"
#include "jetrep/group/classes.hpp"
#include "jetrep/group/filtration.hpp"
#include "jetrep/group/jet_group.hpp"
#include "jetrep/group/parabolic.hpp"
#include "jetrep/group/subgroup.hpp"

using namespace jetrep;

using Case = std::tuple<GroupKind, int, int>;

class JetGroupTest : public ::testing::TestWithParam<Case> {};

TEST_P(JetGroupTest, OrderAndClassEquation) {
    auto [kind, q, r] = GetParam();
    JetGroup g(kind, q, r);
    EXPECT_EQ(g.order(), JetGroup::expected_order(kind, q, r));
    ConjugacyClasses<JetGroup> cc(g);
    i64 sum = 0;
    for (int c = 0; c < cc.count(); ++c) {
        sum += cc.size(c);
        EXPECT_EQ(cc.size(c) * cc.data().centralizers[c], g.order());
        for (int x : cc.members(c)) EXPECT_EQ(cc.class_of(x), c);
    }
    EXPECT_EQ(sum, g.order());
    EXPECT_EQ(closure(g, g.generators()).size(), static_cast<size_t>(g.order()));
}

TEST_P(JetGroupTest, GroupAxiomsOnSample) {
    auto [kind, q, r] = GetParam();
    JetGroup g(kind, q, r);
    const int n = static_cast<int>(g.order());
    const int step = std::max(1, n / 60);
    for (int a = 0; a < n; a += step) {
        EXPECT_EQ(g.mul(a, g.inv(a)), g.identity());
        for (int b = 0; b < n; b += step * 7) {
            int c = (a + b) % n;
            EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
    }
    if (kind == GroupKind::SL2)
        for (int a = 0; a < n; a += step) EXPECT_EQ(g.det(g.matrix(a)), g.ring().constant(1));
}

TEST_P(JetGroupTest, CongruenceKernelsAreNormal) {
    auto [kind, q, r] = GetParam();
    JetGroup g(kind, q, r);
    for (int k = 1; k <= r; ++k) {
        auto K = Subgroup<JetGroup>::from_predicate(g, [&](int x) { return g.in_congruence_kernel(x, k); });
        EXPECT_TRUE(K.is_normal());
        const i64 dim = kind == GroupKind::SL2 ? 3 : 4;
        EXPECT_EQ(K.order(), ipow(q, static_cast<int>(dim * (r + 1 - k))));
    }
}

TEST_P(JetGroupTest, JordanDecomposition) {
    auto [kind, q, r] = GetParam();
    JetGroup g(kind, q, r);
    const int n = static_cast<int>(g.order());
    for (int x = 0; x < n; x += std::max(1, n / 200)) {
        auto [s, u] = topological_jordan(g, x);
        EXPECT_EQ(g.mul(s, u), x);
        EXPECT_EQ(g.mul(s, u), g.mul(u, s));
        EXPECT_NE(element_order(g, s) % g.p(), 0);
        i64 ou = element_order(g, u);
        while (ou % g.p() == 0) ou /= g.p();
        EXPECT_EQ(ou, 1);
    }
}

INSTANTIATE_TEST_SUITE_P(Small, JetGroupTest,
                         ::testing::Values(Case{GroupKind::SL2, 3, 0}, Case{GroupKind::SL2, 5, 0}, Case{GroupKind::GL2, 3, 0},
                                           Case{GroupKind::SL2, 9, 0}, Case{GroupKind::SL2, 3, 1}, Case{GroupKind::GL2, 3, 1}));

TEST(JetGroup, RejectsBadParameters) {
    EXPECT_THROW(JetGroup(GroupKind::SL2, 6, 0), InvalidInput);
    EXPECT_THROW(JetGroup(GroupKind::SL2, 4, 0), InvalidInput);
    EXPECT_THROW(JetGroup(GroupKind::GL2, 7, 4), TooLarge);
}

TEST(JetGroup, ClassCounts) {
    EXPECT_EQ(ConjugacyClasses<JetGroup>(JetGroup(GroupKind::SL2, 3, 0)).count(), 7);
    EXPECT_EQ(ConjugacyClasses<JetGroup>(JetGroup(GroupKind::SL2, 5, 0)).count(), 9);
    EXPECT_EQ(ConjugacyClasses<JetGroup>(JetGroup(GroupKind::GL2, 3, 0)).count(), 8);
}

TEST(Induction, FusionAgreesWithTransversal) {
    JetGroup g(GroupKind::SL2, 5, 0);
    ConjugacyClasses<JetGroup> gc(g);
    JetSubgroup T = torus_subgroup(g, TorusKind::Elliptic);
    ConjugacyClasses<JetSubgroup> tc(T);
    EXPECT_EQ(T.order(), 6);
    CharacterTable tt = dixon_character_table(tc);
    for (const auto& chi : tt.rows) {
        auto a = induce(tc, gc, chi);
        auto b = induce_by_transversal(tc, gc, chi);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a.degree(), Cyc(g.order() / T.order()));
        // Frobenius reciprocity against the trivial character
        auto one = trivial_character(gc.shared());
        EXPECT_EQ(inner_product(a, one), inner_product(chi, restrict_to(one, gc, tc)));
    }
}

TEST(Parabolic, AdjunctionOnSmallestJetGroup) {
    JetGroup g(GroupKind::SL2, 3, 1);
    ConjugacyClasses<JetGroup> gc(g);
    annotate_jet_classes(g, gc);
    CharacterTable tg = dixon_character_table(gc);
    ParabolicSetup ps(g, 1);
    CharacterTable tm = dixon_character_table(ps.m_classes());
    for (const auto& sm : tm.rows) {
        auto ind = parabolic_induce_depth_r(ps, gc, sm);
        for (const auto& s : tg.rows) EXPECT_EQ(inner_product(s, ind), inner_product(jacquet_depth_r(ps, gc, s), sm));
    }
    EXPECT_THROW(ParabolicSetup(g, 2), InvalidInput);
}
