#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "jetrep/reports/cli.hpp"
#include "jetrep/reports/counterexample.hpp"
#include "jetrep/reports/ctbl.hpp"
#include "jetrep/reports/render.hpp"

using namespace jetrep;

namespace {

const ImportedTable& shipped() {
    static const ImportedTable it = import_character_table((data_dir() / "g2f3.ctbl").string());
    return it;
}

const char* kSmall =
    "# cyclic group of order 3\n"
    "GROUP C3\n"
    "CLASSES 1a 3a 3b\n"
    "ORDERS 1 3 3\n"
    "CENTRALIZERS 3 3 3\n"
    "FLAGS unit reg.ss. reg.ss.\n"
    "TORI all T T\n"
    "ROW X1: 1 1 1\n"
    "ROW X2: 1 E(3) E(3)^2\n"
    "ROW X3: 1 E(3)^2 E(3)\n";

int run(std::vector<const char*> args, std::string& out, std::string& err) {
    args.insert(args.begin(), "jetrep");
    std::ostringstream o, e;
    int rc = cli_dispatch(static_cast<int>(args.size()), args.data(), o, e);
    out = o.str();
    err = e.str();
    return rc;
}

}  // namespace

TEST(CtblFormat, ParseSmallTable) {
    auto f = parse_char_table_file(kSmall);
    EXPECT_EQ(f.label, "C3");
    ASSERT_EQ(f.classes.size(), 3u);
    ASSERT_EQ(f.rows.size(), 3u);
    auto t = table_from_file(f);
    EXPECT_EQ(t.classes->group_order, 3);
    EXPECT_TRUE(verify_table(t).ok);
    EXPECT_TRUE(t.classes->meets_torus(1, "T"));
    EXPECT_TRUE(t.classes->regular_semisimple[2]);
}

TEST(CtblFormat, SerializeRoundTrip) {
    auto f = parse_char_table_file(kSmall);
    auto s = serialize_char_table_file(f);
    auto g = parse_char_table_file(s);
    EXPECT_EQ(serialize_char_table_file(g), s);
    EXPECT_EQ(g.rows, f.rows);
}

TEST(CtblFormat, ShippedTableRoundTrips) {
    const auto& f = shipped().file;
    auto s = serialize_char_table_file(f);
    EXPECT_EQ(serialize_char_table_file(parse_char_table_file(s)), s);
    auto again = file_from_table(shipped().table);
    EXPECT_EQ(again.rows, f.rows);
}

TEST(CtblFormat, ErrorsCarryLineAndColumn) {
    std::string bad = kSmall;
    bad.replace(bad.find("E(3)^2 E(3)\n"), 6, "E(3)^");
    try {
        parse_char_table_file(bad);
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 10);
        EXPECT_EQ(e.column(), 11);
    }
    try {
        parse_char_table_file("GROUP X\nCLASSES 1a 2a\nORDERS 1 2 2\n");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
    EXPECT_THROW(parse_char_table_file("GROUP X\nFROB 1\n"), ParseError);
    EXPECT_THROW(parse_char_table_file("CLASSES 1a\nORDERS x\n"), ParseError);
}

TEST(CtblFormat, UnorthogonalTableIsRejected) {
    std::string bad = kSmall;
    bad.replace(bad.find("ROW X3: 1 E(3)^2 E(3)"), 21, "ROW X3: 1 E(3) E(3)^2");
    auto t = table_from_file(parse_char_table_file(bad));
    EXPECT_FALSE(verify_table(t).ok);
    EXPECT_THROW(import_character_table("/nonexistent/table.ctbl"), InvalidInput);
}

TEST(ShippedTable, Invariants) {
    const auto& it = shipped();
    EXPECT_TRUE(it.report.ok);
    EXPECT_EQ(it.table.classes->group_order, 4245696);
    EXPECT_EQ(it.report.degree_square_sum, Rational(4245696));
    EXPECT_EQ(it.table.size(), 23);
    EXPECT_EQ(it.table.rows[it.table.row_index("X23")].degree(), Cyc(832));
    int c9b = it.table.classes->index_of("9b");
    EXPECT_EQ(it.table.rows[it.table.row_index("X3")][c9b], Cyc::parse("1+3*E(3)"));
    EXPECT_EQ(steinberg_from_table(*it.table.classes), 729);
    EXPECT_EQ(it.file.torus_model("G2").weyl_order(), 6);
    EXPECT_EQ(it.file.torus_model("A2").weyl_order(), 6);
    EXPECT_THROW(it.file.torus_model("B2"), InvalidInput);
}

TEST(Counterexample, CoxeterTorusOfG2) {
    const auto& it = shipped();
    auto rep = search_counterexamples(it.table, it.file.torus_model("G2"), 1);
    std::vector<std::string> names;
    for (const auto& m : rep.matches) names.push_back(m.name);
    EXPECT_EQ(names, (std::vector<std::string>{"X5", "X9", "X23"}));
    EXPECT_EQ(rep.non_unipotent, std::vector<std::string>{"X23"});
    EXPECT_EQ(rep.dl_name, "X23");
    EXPECT_EQ(rep.dl_degree, 832);
    EXPECT_EQ(rep.steinberg, 729);
    EXPECT_TRUE(rep.theta_regular);
    EXPECT_TRUE(rep.theorem_applies);
    EXPECT_TRUE(rep.theorem_ok);
}

TEST(Counterexample, EveryRegularCharacterOfTheCoxeterTorus) {
    const auto& it = shipped();
    for (i64 th = 1; th < 7; ++th) {
        auto rep = search_counterexamples(it.table, it.file.torus_model("G2"), th);
        EXPECT_EQ(rep.non_unipotent, std::vector<std::string>{"X23"}) << th;
    }
    auto trivial = search_counterexamples(it.table, it.file.torus_model("G2"), 0);
    EXPECT_FALSE(trivial.theta_regular);
}

TEST(Counterexample, A2Torus) {
    const auto& it = shipped();
    auto rep = search_counterexamples(it.table, it.file.torus_model("A2"), 1);
    EXPECT_EQ(rep.non_unipotent, std::vector<std::string>{"X15"});
    EXPECT_EQ(rep.dl_degree, 448);
    EXPECT_TRUE(rep.theorem_ok);
}

TEST(Counterexample, NregSumOnTableModel) {
    const auto& it = shipped();
    auto r = nreg_weyl_sum(*it.table.classes, it.file.torus_model("G2"), 1);
    EXPECT_EQ(r.torus_order, 7);
    EXPECT_EQ(r.nreg_points, 1);
    EXPECT_EQ(r.action_sum, Cyc(6));
    EXPECT_EQ(r.power_form_sum, Cyc(6));
}

TEST(DlDimension, ClosedForms) {
    EXPECT_EQ(dl_dimension(4245696, 729, 7), 832);
    EXPECT_EQ(dl_dimension(120, 5, 6), 4);
    EXPECT_THROW(dl_dimension(120, 7, 6), InvalidInput);
    auto g2 = load_root_system("G2");
    EXPECT_EQ(lie_type_order(g2, 3), 4245696);
    EXPECT_EQ(steinberg_dimension(g2, 3), 729);
    EXPECT_EQ(dl_dimension(g2, g2.find_class("coxeter"), 3), 832);
    EXPECT_EQ(dl_dimension(g2, g2.find_class("A2"), 3), 448);
    EXPECT_EQ(dl_dimension(g2, g2.find_class("coxeter"), 5), 17856);
    EXPECT_EQ(weyl_exponents(load_root_system("E8")), (std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(Render, CsvQuoting) {
    EXPECT_EQ(csv_quote("plain"), "plain");
    EXPECT_EQ(csv_quote("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_quote("say \"hi\""), "\"say \"\"hi\"\"\"");
    Report r;
    r.columns = {"name", "value"};
    r.add({"x,y", Cyc::parse("E(3)")});
    r.notes.push_back("dropped in csv");
    EXPECT_EQ(render(r, ReportFormat::Csv), "name,value\r\n\"x,y\",E(3)\r\n");
    EXPECT_THROW(r.add({"only one"}), InvalidInput);
}

TEST(Render, MarkdownAndFloat) {
    Report r;
    r.title = "t";
    r.columns = {"a|b", "v"};
    r.add({"k", Cyc::parse("1+3*E(3)")});
    auto md = render(r, ReportFormat::Markdown);
    EXPECT_NE(md.find("## t"), std::string::npos);
    EXPECT_NE(md.find("a\\|b"), std::string::npos);
    auto fl = render(r, ReportFormat::Markdown, true);
    EXPECT_NE(fl.find("-0.5+2.59808i"), std::string::npos);
    EXPECT_THROW(parse_report_format("xml"), InvalidInput);
}

TEST(Cli, QList) {
    EXPECT_EQ(parse_q_list("2..9"), (std::vector<i64>{2, 3, 4, 5, 7, 8, 9}));
    EXPECT_EQ(parse_q_list("3,5"), (std::vector<i64>{3, 5}));
    EXPECT_THROW(parse_q_list("6"), InvalidInput);
}

TEST(Cli, ExitCodes) {
    std::string out, err;
    EXPECT_EQ(run({}, out, err), 2);
    EXPECT_EQ(run({"no-such-command"}, out, err), 2);
    EXPECT_EQ(run({"--help"}, out, err), 0);
    EXPECT_EQ(run({"dl-dim", "--group-order", "120", "--steinberg", "7", "--torus-order", "6"}, out, err), 1);
    EXPECT_EQ(run({"import-table", "/nonexistent.ctbl"}, out, err), 1);
}

TEST(Cli, HenniartScan) {
    std::string out, err;
    ASSERT_EQ(run({"--format", "csv", "henniart-scan", "--type", "G2", "--q", "4,5"}, out, err), 0) << err;
    EXPECT_NE(out.find("13"), std::string::npos);
    EXPECT_NE(out.find("21"), std::string::npos);
}

TEST(Cli, SearchAndImport) {
    std::string out, err;
    ASSERT_EQ(run({"search-counterexamples"}, out, err), 0) << err;
    EXPECT_NE(out.find("X23"), std::string::npos);
    EXPECT_NE(out.find("X5"), std::string::npos);
    ASSERT_EQ(run({"import-table", (data_dir() / "g2f3.ctbl").string().c_str()}, out, err), 0) << err;
    EXPECT_NE(out.find("4245696"), std::string::npos);
    ASSERT_EQ(run({"dl-dim", "--group-order", "120", "--steinberg", "5", "--torus-order", "6"}, out, err), 0) << err;
    EXPECT_NE(out.find("| 4 |"), std::string::npos);
    ASSERT_EQ(run({"dl-dim", "--type", "G2", "--class", "coxeter", "--q", "3"}, out, err), 0) << err;
    EXPECT_NE(out.find("832"), std::string::npos);
}

TEST(Cli, SpringerCheck) {
    std::string out, err;
    ASSERT_EQ(run({"springer-check", "--q", "5", "--p", "5", "--r", "1"}, out, err), 0) << err;
    EXPECT_NE(out.find("sign=+1, max_defect=0"), std::string::npos);
}
