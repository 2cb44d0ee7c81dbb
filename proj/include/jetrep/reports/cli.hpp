#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jetrep/chartab/dixon.hpp"
#include "jetrep/chartab/litmus.hpp"
#include "jetrep/reports/counterexample.hpp"
#include "jetrep/reports/ctbl.hpp"
#include "jetrep/reports/render.hpp"
#include "jetrep/springer/springer.hpp"
#include "jetrep/torus/torus_audit.hpp"
#include "jetrep/yu/yu_package.hpp"

namespace jetrep {

/// "2..13", "2,3,5" or a mix.
inline std::vector<i64> parse_q_list(const std::string& s) {
    std::vector<i64> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            auto dots = item.find("..");
            if (dots == std::string::npos) {
                i64 q = std::stoll(item);
                if (!prime_power(q)) throw InvalidInput("q = " + item + " is not a prime power");
                out.push_back(q);
                continue;
            }
            i64 lo = std::stoll(item.substr(0, dots)), hi = std::stoll(item.substr(dots + 2));
            if (hi < lo) throw InvalidInput("empty q range '" + item + "'");
            for (i64 q = lo; q <= hi; ++q)
                if (prime_power(q)) out.push_back(q);
        } catch (const std::logic_error&) {
            throw InvalidInput("cannot parse q list '" + s + "'");
        }
    }
    if (out.empty()) throw InvalidInput("q list '" + s + "' has no prime powers");
    return out;
}

inline GroupKind parse_group_kind(const std::string& s) {
    if (s == "SL2" || s == "sl2") return GroupKind::SL2;
    if (s == "GL2" || s == "gl2") return GroupKind::GL2;
    throw InvalidInput("unknown group kind '" + s + "' (SL2 or GL2)");
}

namespace detail {

struct CliState {
    std::string format = "md";
    bool as_float = false;
    std::ostream* out = &std::cout;
    int status = 0;

    void emit(const Report& r) const { *out << render(r, parse_report_format(format), as_float); }
    void check(bool ok, const std::string& what) {
        if (!ok) {
            status = 1;
            *out << "ASSERTION FAILED: " << what << '\n';
        }
    }
};

inline void check_q_p(int q, int p) {
    auto pp = prime_power(q);
    if (!pp) throw InvalidInput("q must be a prime power");
    if (pp->first != p) throw InvalidInput("p = " + std::to_string(p) + " is not the characteristic of q = " + std::to_string(q));
}

inline Report class_report(const ClassData& d, const std::string& title) {
    Report r;
    r.title = title;
    r.columns = {"class", "order", "size", "centralizer", "type", "semisimple", "unipotent", "regular ss", "very regular"};
    for (int c = 0; c < d.count(); ++c)
        r.add({d.names[c], d.orders[c], d.sizes[c], d.centralizers[c], c < static_cast<int>(d.types.size()) ? d.types[c] : "",
               static_cast<bool>(d.semisimple[c]), static_cast<bool>(d.unipotent[c]), static_cast<bool>(d.regular_semisimple[c]),
               static_cast<bool>(d.very_regular[c])});
    return r;
}

inline Report table_report(const CharacterTable& t, const std::string& title) {
    Report r;
    r.title = title;
    r.columns = {"row"};
    for (const auto& n : t.classes->names) r.columns.push_back(n);
    for (int i = 0; i < t.size(); ++i) {
        ReportRow row{t.row_names[i]};
        for (const auto& v : t.rows[i].values()) row.push_back(v);
        r.add(row);
    }
    return r;
}

}  // namespace detail

/// Runs one subcommand; 0 on success, 1 on a failed check or module error, 2 on usage errors.
inline int cli_dispatch(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Finite shadows of depth-r Deligne-Lusztig and FKS-Yu constructions"};
    app.require_subcommand(1);
    detail::CliState st;
    st.out = &out;
    app.add_option("--format", st.format, "md or csv")->check(CLI::IsMember({"md", "markdown", "csv"}))->capture_default_str();
    app.add_flag("--float", st.as_float, "show exact values as floats");
    std::function<void()> run;

    // ---- audit-tori
    std::string type = "G2", cls = "coxeter", qs = "3", mode = "both";
    i64 q64 = 3;
    auto* audit = app.add_subcommand("audit-tori", "orders of T_w(F_q) for every Weyl class");
    audit->add_option("--type", type, "root system type")->capture_default_str();
    audit->add_option("--q", q64, "field size")->capture_default_str();
    audit->callback([&] {
        run = [&] {
            auto rs = load_root_system(type);
            Report r;
            r.title = type + " tori over F_" + std::to_string(q64);
            r.columns = {"class", "char poly", "|T(F_q)|", "nvreg", "|W_T|", "regular characters"};
            for (const auto& wc : rs.classes) {
                TorusForm t = make_torus(rs, wc, q64);
                ReportRow row{wc.carter_label, poly_to_string(wc.char_poly), t.order};
                try {
                    row.push_back(count_non_very_regular(t));
                } catch (const TooLarge&) {
                    row.push_back("cap");
                }
                row.push_back(static_cast<i64>(weyl_centralizer(rs, wc).size()));
                try {
                    row.push_back(count_regular_characters(rs, wc, q64));
                } catch (const TooLarge&) {
                    row.push_back("cap");
                }
                r.add(row);
            }
            st.emit(r);
        };
    });

    // ---- henniart-scan
    auto* hscan = app.add_subcommand("henniart-scan", "weak and strong Henniart bounds over a range of q");
    hscan->add_option("--type", type)->capture_default_str();
    hscan->add_option("--class", cls, "Carter label or 'coxeter'")->capture_default_str();
    hscan->add_option("--q", qs, "list such as 2..13 or 2,3,5")->capture_default_str();
    hscan->add_option("--mode", mode, "weak, strong or both")->check(CLI::IsMember({"weak", "strong", "both"}))->capture_default_str();
    hscan->callback([&] {
        run = [&] {
            auto rs = load_root_system(type);
            const auto& wc = rs.find_class(cls);
            Report r;
            r.title = "Henniart scan " + type + " class " + wc.carter_label;
            r.columns = {"q", "|T(F_q)|", "nvreg", "ratio", "|W_T|"};
            if (mode != "strong") r.columns.push_back("weak (> 2)");
            if (mode != "weak") r.columns.push_back("strong (> 2|W_T|)");
            for (const auto& row : threshold_scan(rs, wc, parse_q_list(qs))) {
                if (row.error) {
                    ReportRow e{row.q, "skipped", *row.error, "", ""};
                    if (mode != "strong") e.push_back("");
                    if (mode != "weak") e.push_back("");
                    r.add(e);
                    continue;
                }
                ReportRow x{row.q, row.order, row.nvreg, row.ratio, row.weyl_stabilizer};
                if (mode != "strong") x.push_back(row.weak ? "holds" : "fails");
                if (mode != "weak") x.push_back(row.strong ? "holds" : "fails");
                r.add(x);
            }
            st.emit(r);
        };
    });

    // ---- build-group
    std::string kind = "SL2";
    int q = 5, p = 5, r = 1;
    auto* bg = app.add_subcommand("build-group", "enumerate G(F_q[t]/t^{r+1}) and its classes");
    bg->add_option("--kind", kind, "SL2 or GL2")->capture_default_str();
    bg->add_option("--q", q)->capture_default_str();
    bg->add_option("--r", r)->capture_default_str();
    bg->callback([&] {
        run = [&] {
            JetGroup g(parse_group_kind(kind), q, r);
            ConjugacyClasses<JetGroup> cc(g);
            annotate_jet_classes(g, cc);
            Report rep = detail::class_report(cc.data(), g.label() + ": order " + std::to_string(g.order()) + ", " +
                                                             std::to_string(cc.count()) + " classes");
            i64 s = 0;
            for (i64 x : cc.data().sizes) s += x;
            st.check(s == g.order(), "class sizes sum to |G|");
            st.emit(rep);
        };
    });

    // ---- char-table
    std::string export_path;
    auto* ct = app.add_subcommand("char-table", "Dixon character table, verified exactly");
    ct->add_option("--kind", kind)->capture_default_str();
    ct->add_option("--q", q)->capture_default_str();
    ct->add_option("--r", r)->capture_default_str();
    ct->add_option("--export", export_path, "write the table in the character-table text format");
    ct->callback([&] {
        run = [&] {
            JetGroup g(parse_group_kind(kind), q, r);
            ConjugacyClasses<JetGroup> cc(g);
            annotate_jet_classes(g, cc);
            DixonInfo info;
            CharacterTable t = dixon_character_table(cc, &info);
            t.row_names = default_row_names(t.size());
            auto vr = verify_table(t);
            st.check(vr.ok, "orthogonality of the computed table");
            Report rep = detail::table_report(t, g.label() + " (Dixon prime " + std::to_string(info.prime) + ")");
            rep.notes.push_back("sum of squared degrees = " + vr.degree_square_sum.str() + ", |G| = " + std::to_string(g.order()));
            if (!export_path.empty()) {
                std::ofstream f(export_path);
                if (!f) throw InvalidInput("cannot write '" + export_path + "'");
                f << serialize_char_table_file(file_from_table(t));
                rep.notes.push_back("exported to " + export_path);
            }
            st.emit(rep);
        };
    });

    // ---- yu-side subcommands share q, p, r, theta, epsilon
    std::string theta = "1;1", theta2, eps = "trivial";
    int lambda = 1;
    auto add_yu = [&](CLI::App* s) {
        s->add_option("--q", q)->capture_default_str();
        s->add_option("--p", p)->capture_default_str();
        s->add_option("--r", r)->capture_default_str();
        s->add_option("--theta", theta, "a;b1,...,br")->capture_default_str();
        s->add_option("--epsilon", eps, "trivial or quadratic")->check(CLI::IsMember({"trivial", "quadratic"}))->capture_default_str();
    };
    auto make_pkg = [&] {
        detail::check_q_p(q, p);
        auto d = build_zero_toral_datum(jet_context(q, r), ThetaSpec::parse(theta));
        return build_circ_tau(d, parse_epsilon(eps));
    };

    auto* by = app.add_subcommand("build-yu", "build circ tau from a 0-toral datum");
    add_yu(by);
    by->callback([&] {
        run = [&] {
            YuPackage pkg = make_pkg();
            const auto& d = *pkg.datum;
            auto V = symplectic_structure(d);
            Cyc self = inner_product(pkg.circ_tau, pkg.circ_tau);
            Report rep;
            rep.title = "circ tau for theta = " + d.spec.str() + " on " + pkg.ctx().group().label();
            rep.columns = {"quantity", "value"};
            rep.add({"certificate", d.certificate});
            rep.add({"epsilon", epsilon_name(pkg.epsilon)});
            rep.add({"|circ K|", pkg.circ_k_order});
            rep.add({"[G : circ K]", pkg.index});
            rep.add({"dim V over F_p", V.dim});
            rep.add({"Weil dimension", pkg.weil_dimension});
            rep.add({"circ tau(1)", pkg.degree()});
            rep.add({"<circ tau, circ tau>", self});
            if (!V.note.empty()) rep.notes.push_back(V.note);
            st.check(self == Cyc(1) || d.theta.weyl_fixed(), "circ tau irreducible for regular theta");
            st.emit(rep);
        };
    });

    auto* gr = app.add_subcommand("green", "Green function Q on the unipotent classes");
    add_yu(gr);
    gr->callback([&] {
        run = [&] {
            YuPackage pkg = make_pkg();
            auto Q = green_fks(pkg);
            const auto& d = pkg.ctx().classes().data();
            Report rep;
            rep.title = "Q for " + Q.provenance;
            rep.columns = {"class", "size", "Q"};
            for (int i = 0; i < Q.size(); ++i) rep.add({d.names[Q.unipotent[i]], d.sizes[Q.unipotent[i]], Q.values[i]});
            st.emit(rep);
        };
    });

    auto* orth = app.add_subcommand("orthogonality", "sum_u Q Q' against the normalizer sum");
    add_yu(orth);
    orth->add_option("--theta2", theta2, "second datum; all pairs of depth-r+ data when omitted");
    orth->callback([&] {
        run = [&] {
            detail::check_q_p(q, p);
            auto ctx = jet_context(q, r);
            std::vector<ThetaSpec> specs;
            if (!theta2.empty()) specs = {ThetaSpec::parse(theta), ThetaSpec::parse(theta2)};
            else specs = depth_r_plus_specs(*ctx);
            std::vector<YuPackage> pk;
            for (const auto& s : specs) pk.push_back(build_circ_tau(build_zero_toral_datum(ctx, s), parse_epsilon(eps)));
            Report rep;
            rep.title = "orthogonality on " + ctx->group().label();
            rep.columns = {"theta", "theta'", "sum_u Q conj Q'", "normalizer side", "equal"};
            auto one = [&](const YuPackage& a, const YuPackage& b) {
                auto o = orthogonality_check(a, b);
                rep.add({a.datum->spec.str(), b.datum->spec.str(), o.lhs, o.rhs, o.ok});
                st.check(o.ok, "orthogonality for " + a.datum->spec.str() + " / " + b.datum->spec.str());
            };
            if (!theta2.empty()) one(pk[0], pk[1]);
            else
                for (size_t i = 0; i < pk.size(); ++i)
                    for (size_t j = i; j < pk.size(); ++j) one(pk[i], pk[j]);
            st.emit(rep);
        };
    });

    auto* sp = app.add_subcommand("springer-check", "Fourier transform of the coadjoint orbit against Q");
    add_yu(sp);
    sp->add_option("--lambda", lambda, "rescaling of the additive character")->capture_default_str();
    sp->callback([&] {
        run = [&] {
            YuPackage pkg = make_pkg();
            DualElement x = generic_dual_element(*pkg.datum, lambda);
            SpringerRecord rec = springer_identity(pkg.ctx(), x.x, green_fks(pkg), lambda);
            *st.out << "sign=" << sign_str(rec.global_sign) << ", max_defect=" << rec.max_defect << "\n\n";
            Report rep;
            rep.title = "Springer check for theta = " + pkg.datum->spec.str();
            rep.columns = {"quantity", "value"};
            rep.add({"dual element coefficients", [&] {
                         std::string s;
                         for (int c : x.coefficients) s += (s.empty() ? "" : ",") + std::to_string(c);
                         return s;
                     }()});
            rep.add({"dual element regular", x.regular});
            rep.add({"orbit size", rec.orbit_size});
            rep.add({"stabilizer order", rec.stabilizer_order});
            rep.add({"factor q^(r+1)", rec.factor});
            rep.add({"unipotent elements checked", rec.elements_checked});
            rep.add({"global sign", sign_str(rec.global_sign)});
            rep.add({"max defect", std::to_string(rec.max_defect)});
            if (!rec.worst_class.empty()) rep.notes.push_back("worst class: " + rec.worst_class);
            st.check(rec.ok && rec.max_defect == 0, "Springer identity with one global sign");
            st.emit(rep);
        };
    });

    // ---- litmus
    auto* lit = app.add_subcommand("litmus", "match sum_w theta^w on very regular classes against the Dixon table");
    lit->add_option("--q", q)->capture_default_str();
    lit->add_option("--r", r)->capture_default_str();
    lit->add_option("--theta", theta, "a for r = 0, a;b1,... otherwise")->capture_default_str();
    lit->callback([&] {
        run = [&] {
            auto ctx = jet_context(q, r);
            CharacterTable t = dixon_character_table(ctx->classes());
            t.row_names = default_row_names(t.size());
            ThetaSpec s = ThetaSpec::parse(theta);
            if (static_cast<int>(s.b.size()) < r) s.b.resize(r, 0);
            TorusCharacter th(ctx->torus(), s);
            auto hits = litmus_match(t, very_regular_pattern(*ctx, [&](int x) { return th.at(x); }));
            Report rep;
            rep.title = "litmus on " + ctx->group().label() + " for theta = " + s.str();
            rep.columns = {"row", "sign", "degree"};
            for (const auto& h : hits) rep.add({h.name, sign_str(h.sign), t.rows[h.row].degree()});
            rep.notes.push_back("matches: " + std::to_string(hits.size()) + (th.weyl_fixed() ? " (theta is not regular)" : ""));
            if (r == 0) {
                auto a1 = load_root_system("A1");
                auto h = henniart_check(HenniartMode::strong, a1, a1.find_class("nonsplit"), q);
                rep.notes.push_back("strong Henniart: |T|/nvreg = " + h.ratio.str() + " against " + std::to_string(h.bound) +
                                    (h.holds ? " (holds)" : " (fails)"));
            }
            st.emit(rep);
        };
    });

    // ---- search-counterexamples
    std::string table_path, torus = "G2", nreg_char;
    i64 theta_exp = 1;
    i64 nreg_q = 0;
    auto* sc = app.add_subcommand("search-counterexamples", "rows agreeing with +-R_T(theta) on regular semisimple classes");
    sc->add_option("--table", table_path, "character-table file (default: shipped G2(F_3))");
    sc->add_option("--torus", torus, "torus model name in the table")->capture_default_str();
    sc->add_option("--theta", theta_exp, "theta(t) = E(|T|)^theta on the model generator")->capture_default_str();
    sc->add_option("--nreg-q", nreg_q, "also compute the nreg Weyl sum on the real torus of --type/--class over F_q");
    sc->add_option("--type", type)->capture_default_str();
    sc->add_option("--class", cls)->capture_default_str();
    sc->add_option("--character", nreg_char, "SNF coordinates of theta for --nreg-q (comma list; default: all)");
    sc->callback([&] {
        run = [&] {
            std::string path = table_path.empty() ? (data_dir() / "g2f3.ctbl").string() : table_path;
            ImportedTable it = import_character_table(path);
            auto rep = search_counterexamples(it.table, it.file.torus_model(torus), theta_exp);
            Report r1;
            r1.title = "matches on " + rep.group + ", torus " + rep.torus + ", theta = " + std::to_string(rep.theta);
            r1.columns = {"row", "sign", "degree", "unipotent", "<rho,R>", "<rho,R>_reg", "<rho,R>_nreg"};
            for (const auto& m : rep.matches)
                r1.add({m.name, sign_str(m.sign), m.degree, m.unipotent, m.with_dl.total, m.with_dl.reg, m.with_dl.nreg});
            std::string pat;
            for (int i = 0; i < rep.pattern.size(); ++i) pat += (i ? ", " : "") + rep.pattern.classes[i] + " = " + rep.pattern.values[i].str();
            r1.notes.push_back("pattern: " + pat);
            r1.notes.push_back("theta regular: " + std::string(rep.theta_regular ? "yes" : "no") +
                               "; trivial on nreg: " + (rep.trivial_on_nreg ? "yes" : "no"));
            r1.notes.push_back("dim R_T(theta) = " + std::to_string(rep.dl_degree) + " (St = " + std::to_string(rep.steinberg) +
                               "), identified row: " + (rep.dl_name.empty() ? "none" : rep.dl_name));
            std::string nu;
            for (const auto& n : rep.non_unipotent) nu += (nu.empty() ? "" : ", ") + n;
            r1.notes.push_back("non-unipotent matches: {" + nu + "}");
            for (const auto& n : rep.notes) r1.notes.push_back(n);
            if (rep.theorem_applies) st.check(rep.theorem_ok, "exactly one non-unipotent match, equal to R_T(theta)");
            st.emit(r1);
            auto model = nreg_weyl_sum(*it.table.classes, it.file.torus_model(torus), theta_exp);
            Report r2;
            r2.title = "nreg Weyl sums";
            r2.columns = {"source", "theta", "|T|", "|T_nreg|", "|W_T|", "W_T action", "power form", "|T|/2"};
            r2.add({"table model " + torus, std::to_string(rep.theta), model.torus_order, model.nreg_points, model.weyl_order,
                    model.action_sum, model.power_form_sum, std::to_string(model.bound)});
            if (nreg_q > 0) {
                auto rs = load_root_system(type);
                const auto& wc = rs.find_class(cls);
                TorusForm tf = make_torus(rs, wc, nreg_q);
                const auto& d = tf.presentation.snf_diagonal;
                std::vector<IntVec> chars;
                if (!nreg_char.empty()) {
                    IntVec b;
                    std::stringstream ss(nreg_char);
                    std::string item;
                    while (std::getline(ss, item, ',')) b.push_back(std::stoll(item));
                    chars.push_back(b);
                } else {
                    IntVec b(d.size(), 0);
                    while (true) {
                        chars.push_back(b);
                        size_t k = 0;
                        for (; k < d.size(); ++k) {
                            if (++b[k] < d[k]) break;
                            b[k] = 0;
                        }
                        if (k == d.size()) break;
                    }
                }
                for (const auto& b : chars) {
                    auto n = nreg_weyl_sum(rs, wc, nreg_q, b);
                    std::string bs;
                    for (i64 x : b) bs += (bs.empty() ? "" : ",") + std::to_string(x);
                    r2.add({type + " " + wc.carter_label + " q=" + std::to_string(nreg_q), bs, n.torus_order, n.nreg_points,
                            n.weyl_order, n.action_sum, n.power_form_sum, std::to_string(n.bound)});
                }
            }
            r2.notes.push_back("W_T action: w runs over W_T acting on T; power form: w^i read as s -> s^i.");
            st.emit(r2);
        };
    });

    // ---- import-table
    std::string import_path;
    auto* imp = app.add_subcommand("import-table", "load and verify a character-table file");
    imp->add_option("path", import_path, "file to import")->required();
    imp->add_option("--export", export_path, "write the canonical form");
    imp->callback([&] {
        run = [&] {
            ImportedTable it = import_character_table(import_path);
            Report rep = detail::class_report(*it.table.classes, it.file.label + ": |G| = " + std::to_string(it.table.classes->group_order) +
                                                                     ", " + std::to_string(it.table.size()) + " rows, verified");
            std::string u;
            for (const auto& n : it.file.unipotent_rows) u += (u.empty() ? "" : ", ") + n;
            rep.notes.push_back("unipotent rows: {" + u + "}");
            rep.notes.push_back("sum of squared degrees = " + it.report.degree_square_sum.str());
            if (!export_path.empty()) {
                std::ofstream f(export_path);
                if (!f) throw InvalidInput("cannot write '" + export_path + "'");
                f << serialize_char_table_file(it.file);
                rep.notes.push_back("exported to " + export_path);
            }
            st.emit(rep);
        };
    });

    // ---- dl-dim
    i64 gorder = 0, stdim = 0, torder = 0;
    auto* dl = app.add_subcommand("dl-dim", "|G| / (dim St |T|)");
    dl->add_option("--group-order", gorder);
    dl->add_option("--steinberg", stdim);
    dl->add_option("--torus-order", torder);
    dl->add_option("--type", type, "root system type (with --class and --q instead of explicit orders)");
    dl->add_option("--class", cls);
    dl->add_option("--q", q64);
    dl->callback([&] {
        run = [&] {
            Report rep;
            rep.columns = {"|G|", "dim St", "|T|", "dim R_T(theta)"};
            if (gorder || stdim || torder) {
                rep.title = "dl-dim";
                rep.add({gorder, stdim, torder, dl_dimension(gorder, stdim, torder)});
            } else {
                auto rs = load_root_system(type);
                const auto& wc = rs.find_class(cls);
                rep.title = "dl-dim " + type + " class " + wc.carter_label + " q=" + std::to_string(q64);
                i64 g = lie_type_order(rs, q64), s = steinberg_dimension(rs, q64), t = torus_order(rs, wc, q64);
                rep.add({g, s, t, dl_dimension(g, s, t)});
            }
            st.emit(rep);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return 2;
    }
    try {
        if (run) run();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return st.status;
}

}  // namespace jetrep
