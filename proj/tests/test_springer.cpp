#include <gtest/gtest.h>

#include "jetrep/chartab/dixon.hpp"
#include "jetrep/springer/springer.hpp"

using namespace jetrep;

TEST(LogExp, InverseAndEquivariantOnUnipotents) {
    JetGroup g(GroupKind::SL2, 5, 1);
    auto rec = check_log_exp(g);
    EXPECT_EQ(rec.unipotents, 3125);
    EXPECT_TRUE(rec.inverse_ok);
    EXPECT_TRUE(rec.equivariant_ok);
}

TEST(LieAlgebra, EncodeDecodeAndPairing) {
    JetGroup g(GroupKind::SL2, 3, 1);
    JetLieAlgebra lie(g);
    EXPECT_EQ(lie.dimension(), 6);
    for (i64 c = 0; c < lie.size(); c += 13) {
        auto x = lie.decode(c);
        EXPECT_TRUE(lie.is_traceless(x));
        EXPECT_EQ(lie.encode(x), c);
    }
    // the pairing is Ad-invariant
    for (int s : g.generators())
        for (i64 a = 0; a < lie.size(); a += 31)
            for (i64 b = 0; b < lie.size(); b += 47) {
                auto x = lie.decode(a), y = lie.decode(b);
                EXPECT_EQ(lie.pairing(lie.adjoint(s, x), lie.adjoint(s, y)), lie.pairing(x, y));
            }
}

TEST(CoadjointOrbit, SizeAndParseval) {
    auto ctx = jet_context(5, 1);
    auto d = build_zero_toral_datum(ctx, ThetaSpec::parse("1;1"));
    auto x = generic_dual_element(d);
    EXPECT_TRUE(x.regular);
    JetLieAlgebra lie(ctx->group());
    auto o = coadjoint_orbit(lie, x.x);
    EXPECT_EQ(o.size(), 500);
    EXPECT_EQ(o.stabilizer_order, 30);
    EXPECT_EQ(o.size() * o.stabilizer_order, ctx->group().order());
    auto pr = parseval_check(lie, o);
    EXPECT_TRUE(pr.ok);
    EXPECT_EQ(pr.rhs, 7812500);
}

TEST(Springer, IdentityAtFive) {
    auto ctx = jet_context(5, 1);
    int sign = 0;
    for (const auto& s : depth_r_plus_specs(*ctx)) {
        auto pkg = build_circ_tau(build_zero_toral_datum(ctx, s));
        auto rec = verify_springer(pkg);
        EXPECT_TRUE(rec.ok);
        EXPECT_EQ(rec.max_defect, 0);
        EXPECT_EQ(rec.orbit_size, 500);
        EXPECT_EQ(rec.factor, 25);
        if (!sign) sign = rec.global_sign;
        EXPECT_EQ(rec.global_sign, sign);
    }
    EXPECT_EQ(sign, 1);
}

TEST(Springer, OtherAdditiveCharacter) {
    auto ctx = jet_context(5, 1);
    auto pkg = build_circ_tau(build_zero_toral_datum(ctx, ThetaSpec::parse("1;1")));
    auto a = verify_springer(pkg, 1), b = verify_springer(pkg, 2);
    EXPECT_TRUE(a.ok);
    EXPECT_TRUE(b.ok);
    EXPECT_EQ(a.global_sign, b.global_sign);
}

TEST(Springer, DepthZero) {
    auto c0 = jet_context(5, 0);
    CharacterTable tab = dixon_character_table(c0->classes());
    auto z = depth_zero_green_from_table(*c0, tab, 1);
    auto rec = verify_springer_depth_zero(*c0, z.Q);
    EXPECT_TRUE(rec.ok);
}

TEST(Springer, IdentityAtSeven) {
    auto ctx = jet_context(7, 1);
    auto pkg = build_circ_tau(build_zero_toral_datum(ctx, ThetaSpec::parse("1;1")));
    auto rec = verify_springer(pkg);
    EXPECT_TRUE(rec.ok);
    EXPECT_EQ(rec.orbit_size, 2058);
    EXPECT_EQ(rec.max_defect, 0);
}
