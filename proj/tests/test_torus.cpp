#include <gtest/gtest.h>

#include <sstream>

#include "jetrep/reports/counterexample.hpp"
#include "jetrep/torus/torus_audit.hpp"

using namespace jetrep;

TEST(RootSystem, WeylOrders) {
    const std::vector<std::pair<std::string, i64>> expect = {
        {"A1", 2}, {"G2", 12}, {"F4", 1152}, {"E6", 51840}, {"E7", 2903040}, {"E8", 696729600}};
    for (const auto& [t, w] : expect) {
        auto rs = load_root_system(t);
        EXPECT_EQ(rs.weyl_order, w) << t;
        EXPECT_EQ(detail::weyl_order_from_cartan(rs.cartan), w) << t;
    }
}

TEST(RootSystem, MalformedInputIsRejected) {
    std::istringstream in("TYPE X2\nCARTAN\n2 -1\n");
    EXPECT_THROW(parse_root_system(in), Error);
}

TEST(Torus, G2OrdersAtThree) {
    auto rs = load_root_system("G2");
    EXPECT_EQ(torus_order(rs, "∅", 3), 4);
    EXPECT_EQ(torus_order(rs, "A1", 3), 8);
    EXPECT_EQ(torus_order(rs, "Ã1", 3), 8);
    EXPECT_EQ(torus_order(rs, "A1×Ã1", 3), 16);
    EXPECT_EQ(torus_order(rs, "A2", 3), 13);
    EXPECT_EQ(torus_order(rs, "G2", 3), 7);
}

// |T_w(F_q)| = |det(q w - 1)| for every class and several q
TEST(Torus, OrderIsCharPolyValue) {
    for (std::string t : {"G2", "F4"}) {
        auto rs = load_root_system(t);
        for (const auto& wc : rs.classes)
            for (i64 q : {2, 3, 4, 5}) {
                IntVec cp = char_poly(wc.w);
                i128 v = poly_eval(cp, q);
                if (v < 0) v = -v;
                EXPECT_EQ(static_cast<i128>(torus_order(rs, wc, q)), v) << t << " " << wc.carter_label << " q=" << q;
            }
    }
}

TEST(Torus, SmithFormMultipliesToOrder) {
    auto rs = load_root_system("E6");
    for (const auto& wc : rs.classes) {
        auto t = make_torus(rs, wc, 2);
        i64 prod = 1;
        for (i64 d : t.presentation.snf_diagonal) prod *= d;
        EXPECT_EQ(prod, t.order) << wc.carter_label;
    }
}

TEST(Henniart, G2CoxeterRows) {
    auto rs = load_root_system("G2");
    const auto& c = rs.find_class("coxeter");
    struct Row { i64 q, order, nvreg; bool weak, strong; };
    for (const Row& r : std::vector<Row>{{2, 3, 3, false, false}, {3, 7, 1, true, false}, {4, 13, 1, true, true},
                                         {5, 21, 3, true, false}, {7, 43, 1, true, true}, {8, 57, 3, true, true}}) {
        auto w = henniart_check(HenniartMode::weak, rs, c, r.q);
        auto s = henniart_check(HenniartMode::strong, rs, c, r.q);
        EXPECT_EQ(w.order, r.order) << r.q;
        EXPECT_EQ(w.nvreg, r.nvreg) << r.q;
        EXPECT_EQ(w.holds, r.weak) << r.q;
        EXPECT_EQ(s.holds, r.strong) << r.q;
        EXPECT_EQ(s.bound, 12);
    }
}

TEST(Henniart, E8CoxeterHasOnlyIdentity) {
    auto rs = load_root_system("E8");
    auto h = henniart_check(HenniartMode::strong, rs, rs.find_class("coxeter"), 2);
    EXPECT_EQ(h.nvreg, 1);
    EXPECT_EQ(h.order, 331);
    EXPECT_TRUE(h.holds);
}

TEST(Henniart, CapIsEnforced) {
    auto rs = load_root_system("E8");
    EXPECT_THROW(henniart_check(HenniartMode::strong, rs, rs.find_class("coxeter"), 8), TooLarge);
}

TEST(Torus, RegularCharacters) {
    auto g2 = load_root_system("G2");
    EXPECT_EQ(count_regular_characters(g2, g2.find_class("G2"), 2), 0);
    EXPECT_EQ(count_regular_characters(g2, g2.find_class("G2"), 3), 6);
    auto a1 = load_root_system("A1");
    // SL2 nonsplit torus of order q+1: characters with theta != theta^{-1}
    EXPECT_EQ(count_regular_characters(a1, a1.find_class("nonsplit"), 5), 4);
}

TEST(Torus, InvalidQ) {
    auto rs = load_root_system("G2");
    EXPECT_THROW(torus_order(rs, "G2", 6), InvalidInput);
    EXPECT_THROW(torus_order(rs, "B7", 3), Error);
}

TEST(NregSum, G2AtFive) {
    auto rs = load_root_system("G2");
    const auto& c = rs.find_class("coxeter");
    auto faithful = nreg_weyl_sum(rs, c, 5, IntVec{0, 1});
    EXPECT_EQ(faithful.torus_order, 21);
    EXPECT_EQ(faithful.nreg_points, 3);
    EXPECT_EQ(faithful.action_sum, Cyc(9));
    EXPECT_EQ(faithful.power_form_sum, Cyc(6));
    EXPECT_TRUE(faithful.action_below_bound());
    EXPECT_TRUE(faithful.power_form_below_bound());
    auto killed = nreg_weyl_sum(rs, c, 5, IntVec{0, 3});
    EXPECT_EQ(killed.action_sum, Cyc(18));
    EXPECT_EQ(killed.power_form_sum, Cyc(18));
}
