#include <gtest/gtest.h>

#include "jetrep/chartab/dixon.hpp"
#include "jetrep/yu/heisenberg_weil.hpp"
#include "jetrep/yu/yu_package.hpp"

using namespace jetrep;

namespace {

const YuPackage& base_package() {
    static const YuPackage pkg = build_circ_tau(build_zero_toral_datum(jet_context(5, 1), ThetaSpec::parse("1;1")));
    return pkg;
}

}  // namespace

class WeilTest : public ::testing::TestWithParam<int> {};

TEST_P(WeilTest, IsAHomomorphism) {
    const int p = GetParam();
    HeisenbergWeil W(p);
    EXPECT_EQ(static_cast<i64>(W.all_operators().size()), p * (p * p - 1));
    int n = 0;
    for (const auto& [A, MA] : W.all_operators()) {
        if (n++ % 7) continue;
        int m = 0;
        for (const auto& [B, MB] : W.all_operators()) {
            if (m++ % 11) continue;
            EXPECT_EQ(cyc_mul(MA, MB), W.weil(W.sp_mul(A, B)));
        }
    }
}

TEST_P(WeilTest, IntertwinesHeisenberg) {
    const int p = GetParam();
    HeisenbergWeil W(p);
    HeisenbergWeil::Sp A{1, 1, 0, 1}, B{0, p - 1, 1, 0};
    for (const auto& S : {A, B})
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                // W(S) rho(v, 0) = rho(S v, 0) W(S)
                int a2 = static_cast<int>(mod(static_cast<i64>(S[0]) * a + S[1] * b, p));
                int b2 = static_cast<int>(mod(static_cast<i64>(S[2]) * a + S[3] * b, p));
                EXPECT_EQ(cyc_mul(W.weil(S), W.heisenberg(a, b, 0)), cyc_mul(W.heisenberg(a2, b2, 0), W.weil(S)));
            }
}

TEST_P(WeilTest, TracesAtCentre) {
    const int p = GetParam();
    HeisenbergWeil W(p);
    EXPECT_EQ(cyc_trace(W.weil({1, 0, 0, 1})), Cyc(p));
    // tr W(-1) is the Legendre symbol (-1/p)
    EXPECT_EQ(cyc_trace(W.weil({p - 1, 0, 0, p - 1})), Cyc(p % 4 == 1 ? 1 : -1));
}

INSTANTIATE_TEST_SUITE_P(Primes, WeilTest, ::testing::Values(3, 5, 7));

TEST(Weil, RejectsEvenOrComposite) {
    EXPECT_THROW(HeisenbergWeil(2), InvalidInput);
    EXPECT_THROW(HeisenbergWeil(9), InvalidInput);
}

TEST(ThetaSpec, ParseAndValidate) {
    auto s = ThetaSpec::parse("1;1");
    EXPECT_EQ(s.a, 1);
    ASSERT_EQ(s.b.size(), 1u);
    EXPECT_EQ(s.b[0], 1);
    EXPECT_THROW(ThetaSpec::parse("x;1"), Error);
    // theta_+ trivial on the top layer is not of depth r
    EXPECT_THROW(build_zero_toral_datum(jet_context(5, 1), ThetaSpec::parse("1;0")), InvalidInput);
}

TEST(CircTau, DegreeAndIrreducibilityAtDepthOne) {
    const auto& pkg = base_package();
    EXPECT_EQ(pkg.index, 20);
    EXPECT_EQ(pkg.weil_dimension, 1);
    EXPECT_EQ(pkg.degree(), Cyc(20));
    EXPECT_EQ(inner_product(pkg.circ_tau, pkg.circ_tau), Cyc(1));
    EXPECT_EQ(inner_product(pkg.kappa, pkg.kappa), Cyc(1));
}

TEST(CircTau, AllDepthOneDataAreIrreducibleAndVeryRegular) {
    auto ctx = jet_context(5, 1);
    int sign = 0;
    for (const auto& base : depth_r_plus_specs(*ctx)) {
        auto p = build_circ_tau(build_zero_toral_datum(ctx, base));
        EXPECT_EQ(inner_product(p.circ_tau, p.circ_tau), Cyc(1));
        auto vr = very_regular_check(p);
        EXPECT_TRUE(vr.ok);
        EXPECT_NE(vr.sign, 0);
        if (sign == 0) sign = vr.sign;
        EXPECT_EQ(vr.sign, sign);
    }
}

TEST(CircTau, WeylConjugateGivesSameRepresentation) {
    auto ctx = jet_context(5, 1);
    const auto& pkg = base_package();
    ThetaSpec w = weyl_conjugate(pkg.datum->spec, ctx->group().ring().field());
    auto p2 = build_circ_tau(build_zero_toral_datum(ctx, w));
    EXPECT_EQ(inner_product(pkg.circ_tau, p2.circ_tau), Cyc(1));
    auto other = build_circ_tau(build_zero_toral_datum(ctx, ThetaSpec::parse("1;2")));
    EXPECT_EQ(inner_product(pkg.circ_tau, other.circ_tau), Cyc(0));
}

TEST(Green, DependsOnlyOnThetaPlus) {
    auto ctx = jet_context(5, 1);
    for (const auto& base : depth_r_plus_specs(*ctx)) {
        GreenFunctionTable first;
        for (int a = 0; a <= ctx->q(); ++a) {
            ThetaSpec s = base;
            s.a = a;
            auto Q = green_fks(build_circ_tau(build_zero_toral_datum(ctx, s)));
            if (a == 0) first = Q;
            else EXPECT_EQ(Q, first) << "a=" << a;
        }
    }
}

TEST(CharacterFormula, HoldsOnEveryElement) {
    const auto& pkg = base_package();
    auto cf = verify_char_formula(pkg, green_fks(pkg));
    EXPECT_TRUE(cf.ok);
    EXPECT_EQ(cf.elements_checked, 15000);
    EXPECT_EQ(cf.max_defect, 0);
    EXPECT_EQ(cf.central_sign, 1);
    EXPECT_NE(cf.regular_sign, 0);
}

TEST(CharacterFormula, Descent) {
    auto de = verify_descent(base_package());
    EXPECT_TRUE(de.ok);
    EXPECT_GT(de.pairs_checked, 0);
}

TEST(Orthogonality, SelfAndCross) {
    auto ctx = jet_context(5, 1);
    const auto& pkg = base_package();
    auto self = orthogonality_check(pkg, pkg);
    EXPECT_TRUE(self.ok);
    EXPECT_EQ(self.lhs, self.rhs);
    auto other = build_circ_tau(build_zero_toral_datum(ctx, ThetaSpec::parse("1;2")));
    EXPECT_TRUE(orthogonality_check(pkg, other).ok);
}

TEST(Reconstruction, RecoversCircTau) {
    const auto& pkg = base_package();
    auto cf = verify_char_formula(pkg, green_fks(pkg));
    auto rc = reconstruct_dl_character(pkg, cf.regular_sign);
    EXPECT_TRUE(rc.ok);
    EXPECT_EQ(rc.sign_vs_circ_tau, 1);
    EXPECT_EQ(rc.self_inner, Cyc(1));
}

TEST(DepthZero, GreenFunctionFromTable) {
    auto c0 = jet_context(5, 0);
    CharacterTable tab = dixon_character_table(c0->classes());
    tab.row_names = default_row_names(tab.size());
    auto z = depth_zero_green_from_table(*c0, tab, 1);
    EXPECT_EQ(z.Q.at_identity(), Cyc(-4));
    EXPECT_TRUE(depth_zero_orthogonality(*c0, z.Q).ok);
    for (int a = 0; a <= 5; ++a) {
        auto R = depth_zero_dl_character(*c0, z.Q, a);
        TorusCharacter th(c0->torus(), ThetaSpec{a, {}});
        EXPECT_EQ(inner_product(R, R), Cyc(th.weyl_fixed() ? 2 : 1)) << "a=" << a;
        EXPECT_EQ(R.degree(), Cyc(-4));
    }
    EXPECT_THROW(depth_zero_green_from_table(*c0, tab, 0), InvalidInput);
}

TEST(CircTau, DepthTwoDegree) {
#ifndef JETREP_SLOW_TESTS
    GTEST_SKIP() << "depth-2 build disabled by -DJETREP_SLOW_TESTS=OFF";
#else
    auto pkg = build_circ_tau(build_zero_toral_datum(jet_context(5, 2), ThetaSpec::parse("1;0,1")));
    EXPECT_EQ(pkg.weil_dimension, 5);
    EXPECT_EQ(pkg.degree(), Cyc(100));
    EXPECT_EQ(inner_product(pkg.circ_tau, pkg.circ_tau), Cyc(1));
#endif
}
