#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "jetrep/chartab/dixon.hpp"
#include "jetrep/chartab/litmus.hpp"
#include "jetrep/torus/torus_audit.hpp"
#include "jetrep/yu/yu_package.hpp"

using namespace jetrep;

namespace {

CharacterTable table_of(const ConjugacyClasses<JetGroup>& cc) {
    CharacterTable t = dixon_character_table(cc);
    t.row_names = default_row_names(t.size());
    return t;
}

std::multiset<i64> degree_multiset(const CharacterTable& t) {
    std::multiset<i64> d;
    for (const auto& x : t.degrees()) d.insert(x.rational().num());
    return d;
}

}  // namespace

using Case = std::tuple<GroupKind, int, int>;
class DixonTest : public ::testing::TestWithParam<Case> {};

TEST_P(DixonTest, OrthogonalityIsExact) {
    auto [kind, q, r] = GetParam();
    JetGroup g(kind, q, r);
    ConjugacyClasses<JetGroup> cc(g);
    auto t = table_of(cc);
    auto rep = verify_table(t);
    EXPECT_TRUE(rep.ok) << (rep.violations.empty() ? "" : rep.violations[0]);
    EXPECT_EQ(rep.degree_square_sum, Rational(g.order()));
    EXPECT_EQ(t.size(), cc.count());
    for (const auto& row : t.rows) EXPECT_EQ(inner_product(row, row), Cyc(1));
}

INSTANTIATE_TEST_SUITE_P(Small, DixonTest,
                         ::testing::Values(Case{GroupKind::SL2, 3, 0}, Case{GroupKind::SL2, 5, 0}, Case{GroupKind::GL2, 3, 0},
                                           Case{GroupKind::SL2, 7, 0}, Case{GroupKind::SL2, 9, 0}, Case{GroupKind::SL2, 3, 1}));

TEST(Dixon, KnownDegrees) {
    JetGroup s3(GroupKind::SL2, 3, 0);
    EXPECT_EQ(degree_multiset(table_of(ConjugacyClasses<JetGroup>(s3))), (std::multiset<i64>{1, 1, 1, 2, 2, 2, 3}));
    JetGroup s5(GroupKind::SL2, 5, 0);
    EXPECT_EQ(degree_multiset(table_of(ConjugacyClasses<JetGroup>(s5))), (std::multiset<i64>{1, 2, 2, 3, 3, 4, 4, 5, 6}));
    JetGroup g3(GroupKind::GL2, 3, 0);
    EXPECT_EQ(degree_multiset(table_of(ConjugacyClasses<JetGroup>(g3))), (std::multiset<i64>{1, 1, 2, 2, 2, 3, 3, 4}));
}

TEST(Dixon, CharacterValuesAreAlgebraicIntegersOfBoundedSize) {
    JetGroup g(GroupKind::SL2, 9, 0);
    ConjugacyClasses<JetGroup> cc(g);
    auto t = table_of(cc);
    for (const auto& row : t.rows)
        for (int c = 0; c < cc.count(); ++c) EXPECT_LE(std::abs(row[c].to_complex()), row.degree().to_complex().real() + 1e-9);
}

TEST(Dixon, CorruptedTableIsDetected) {
    JetGroup g(GroupKind::SL2, 3, 0);
    ConjugacyClasses<JetGroup> cc(g);
    auto t = table_of(cc);
    std::vector<Cyc> v;
    for (int c = 0; c < cc.count(); ++c) v.push_back(t.rows[1][c]);
    v[1] = v[1] + Cyc(1);
    t.rows[1] = ClassFunction(cc.shared(), v);
    EXPECT_FALSE(verify_table(t).ok);
}

TEST(Litmus, UniqueMatchAtNineForEveryRegularCharacter) {
    auto ctx = jet_context(9, 0);
    CharacterTable tab = dixon_character_table(ctx->classes());
    tab.row_names = default_row_names(tab.size());
    int regular = 0;
    for (int a = 0; a <= 9; ++a) {
        TorusCharacter th(ctx->torus(), ThetaSpec{a, {}});
        if (th.weyl_fixed()) continue;
        ++regular;
        auto hits = litmus_match(tab, very_regular_pattern(*ctx, [&](int x) { return th.at(x); }));
        ASSERT_EQ(hits.size(), 1u) << "a=" << a;
        EXPECT_EQ(tab.rows[hits[0].row].degree(), Cyc(8));
    }
    EXPECT_EQ(regular, 8);
}

TEST(Litmus, StrongBoundAtNineButNotAtFive) {
    auto a1 = load_root_system("A1");
    EXPECT_TRUE(henniart_check(HenniartMode::strong, a1, a1.find_class("nonsplit"), 9).holds);
    EXPECT_FALSE(henniart_check(HenniartMode::strong, a1, a1.find_class("nonsplit"), 5).holds);
}

TEST(Litmus, SignModes) {
    auto ctx = jet_context(7, 0);
    CharacterTable tab = dixon_character_table(ctx->classes());
    tab.row_names = default_row_names(tab.size());
    TorusCharacter th(ctx->torus(), ThetaSpec{1, {}});
    auto pat = very_regular_pattern(*ctx, [&](int x) { return th.at(x); });
    auto both = litmus_match(tab, pat, SignMode::Both);
    auto plus = litmus_match(tab, pat, SignMode::PlusOnly);
    // the strong bound fails at q = 7, so more than one row may match
    EXPECT_GE(both.size(), 1u);
    size_t positive = 0;
    for (const auto& h : both) positive += h.sign > 0;
    EXPECT_EQ(plus.size(), positive);
    for (const auto& h : plus) EXPECT_EQ(h.sign, 1);
}
