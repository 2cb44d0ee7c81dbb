#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jetrep/core/cyclotomic.hpp"
#include "jetrep/group/class_function.hpp"
#include "jetrep/group/classes.hpp"

namespace jetrep {

/// Irreducible characters with their class metadata.
struct CharacterTable {
    std::shared_ptr<const ClassData> classes;
    std::vector<ClassFunction> rows;
    std::vector<std::string> row_names;
    std::vector<char> unipotent_rows;  // imported tables only; empty when unknown

    int size() const { return static_cast<int>(rows.size()); }
    int row_index(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (row_names[i] == name) return i;
        return -1;
    }
    bool row_is_unipotent(int i) const { return i < static_cast<int>(unipotent_rows.size()) && unipotent_rows[i]; }
    std::vector<Cyc> degrees() const {
        std::vector<Cyc> d;
        for (const auto& r : rows) d.push_back(r.degree());
        return d;
    }
};

inline std::vector<std::string> default_row_names(int k) {
    std::vector<std::string> n;
    for (int i = 1; i <= k; ++i) n.push_back("X" + std::to_string(i));
    return n;
}

struct TableReport {
    bool ok = true;
    Rational degree_square_sum;
    std::vector<std::string> violations;
    void fail(std::string msg) {
        ok = false;
        if (violations.size() < 50) violations.push_back(std::move(msg));
    }
};

/// Exact first and second orthogonality plus the degree-square sum.
inline TableReport verify_table(const CharacterTable& t) {
    TableReport rep;
    const ClassData& d = *t.classes;
    const int k = d.count();
    if (t.size() != k) rep.fail("row count " + std::to_string(t.size()) + " differs from class count " + std::to_string(k));
    i64 sum_sizes = 0;
    for (int c = 0; c < k; ++c) {
        sum_sizes += d.sizes[c];
        if (d.sizes[c] * d.centralizers[c] != d.group_order) rep.fail("class " + d.names[c] + ": size * centralizer != |G|");
    }
    if (sum_sizes != d.group_order) rep.fail("class sizes do not sum to |G|");
    for (const auto& r : t.rows)
        if (r.shared_domain() != t.classes) rep.fail("row defined on a different class set");
    if (!rep.ok) return rep;
    // conjugates once
    std::vector<std::vector<Cyc>> cj(t.size());
    for (int i = 0; i < t.size(); ++i)
        for (int c = 0; c < k; ++c) cj[i].push_back(t.rows[i][c].conj());
    Rational dsum(0);
    for (int i = 0; i < t.size(); ++i) {
        Cyc deg = t.rows[i].degree();
        if (!deg.is_rational()) rep.fail(t.row_names[i] + ": degree not rational");
        else dsum += deg.rational() * deg.rational();
        for (int j = i; j < t.size(); ++j) {
            Cyc s;
            for (int c = 0; c < k; ++c) {
                if (t.rows[i][c].is_zero() || cj[j][c].is_zero()) continue;
                s += (t.rows[i][c] * cj[j][c]).scaled(Rational(d.sizes[c]));
            }
            Cyc expect(i == j ? d.group_order : 0);
            if (s != expect) rep.fail("rows " + t.row_names[i] + "," + t.row_names[j] + " not orthogonal");
        }
    }
    rep.degree_square_sum = dsum;
    if (dsum != Rational(d.group_order)) rep.fail("sum of squared degrees " + dsum.str() + " != |G|");
    for (int a = 0; a < k && rep.ok; ++a)
        for (int b = a; b < k; ++b) {
            Cyc s;
            for (int i = 0; i < t.size(); ++i) {
                if (t.rows[i][a].is_zero() || cj[i][b].is_zero()) continue;
                s += t.rows[i][a] * cj[i][b];
            }
            Cyc expect(a == b ? d.centralizers[a] : 0);
            if (s != expect) rep.fail("columns " + d.names[a] + "," + d.names[b] + " not orthogonal");
        }
    return rep;
}

}  // namespace jetrep
