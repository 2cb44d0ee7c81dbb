#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "jetrep/chartab/character_table.hpp"
#include "jetrep/core/cyclotomic.hpp"
#include "jetrep/core/errors.hpp"
#include "jetrep/core/intmath.hpp"
#include "jetrep/group/classes.hpp"

namespace jetrep {

/// A cyclic torus T = <t> of order n with W_T generated by t -> t^m, and the class of each power t^k.
struct TorusModel {
    std::string name;
    int order = 0;
    int weyl_multiplier = 1;
    std::vector<std::string> power_classes;  // class of t^k, k = 0..order-1

    int weyl_order() const {
        int k = 1;
        i64 m = mod(weyl_multiplier, order);
        while (m != 1 % order) {
            m = mod(m * weyl_multiplier, order);
            ++k;
            if (k > order) throw InvalidInput("torus model " + name + ": multiplier is not a unit mod the order");
        }
        return k;
    }
};

/// Line-oriented character-table file:
///   GROUP <label> / CLASSES / ORDERS / CENTRALIZERS / FLAGS / TORI / [TORUSMODEL]* / [UNIPOTENT] / ROW <name>: values
struct CharTableFile {
    std::string label;
    std::vector<std::string> classes;
    std::vector<i64> orders, centralizers;
    std::vector<std::string> flags;  // unit, ss., unip., reg.ss., --
    std::vector<std::string> tori;   // "all", "--", or comma-separated torus names
    std::vector<TorusModel> torus_models;
    std::vector<std::string> unipotent_rows;
    std::vector<std::string> row_names;
    std::vector<std::vector<Cyc>> rows;

    const TorusModel& torus_model(const std::string& name) const {
        for (const auto& t : torus_models)
            if (t.name == name) return t;
        throw InvalidInput("table has no torus model named '" + name + "'");
    }
};

namespace detail {

inline std::vector<std::pair<std::string, int>> split_tokens(const std::string& s, int offset) {
    std::vector<std::pair<std::string, int>> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i), static_cast<int>(i) + offset + 1);
        i = j;
    }
    return out;
}

[[noreturn]] inline void ctbl_error(int line, int col, const std::string& msg) {
    throw ParseError(msg, line, col);
}

inline i64 parse_int_token(const std::pair<std::string, int>& tok, int line) {
    try {
        size_t used = 0;
        i64 v = std::stoll(tok.first, &used);
        if (used != tok.first.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::logic_error&) {
        ctbl_error(line, tok.second, "expected an integer, got '" + tok.first + "'");
    }
}

}  // namespace detail

inline CharTableFile parse_char_table_file(const std::string& text) {
    CharTableFile f;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::map<std::string, int> where;  // section -> line, for errors found after the scan
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        auto toks = detail::split_tokens(s, 0);
        if (toks.empty()) continue;
        const std::string key = toks[0].first;
        if (!where.count(key)) where[key] = line;
        std::vector<std::pair<std::string, int>> rest(toks.begin() + 1, toks.end());
        if (key == "GROUP") {
            size_t at = s.find("GROUP") + 5;
            f.label = s.substr(at);
            f.label.erase(0, f.label.find_first_not_of(" \t"));
            f.label.erase(f.label.find_last_not_of(" \t\r") + 1);
        } else if (key == "CLASSES") {
            for (auto& t : rest) f.classes.push_back(t.first);
        } else if (key == "ORDERS") {
            for (auto& t : rest) f.orders.push_back(detail::parse_int_token(t, line));
        } else if (key == "CENTRALIZERS") {
            for (auto& t : rest) f.centralizers.push_back(detail::parse_int_token(t, line));
        } else if (key == "FLAGS") {
            for (auto& t : rest) {
                if (t.first != "unit" && t.first != "ss." && t.first != "unip." && t.first != "reg.ss." && t.first != "--")
                    detail::ctbl_error(line, t.second, "unknown class flag '" + t.first + "'");
                f.flags.push_back(t.first);
            }
        } else if (key == "TORI") {
            for (auto& t : rest) f.tori.push_back(t.first);
        } else if (key == "TORUSMODEL") {
            if (rest.size() < 3) detail::ctbl_error(line, toks[0].second, "TORUSMODEL needs a name, an order and a multiplier");
            TorusModel m;
            m.name = rest[0].first;
            m.order = static_cast<int>(detail::parse_int_token(rest[1], line));
            m.weyl_multiplier = static_cast<int>(detail::parse_int_token(rest[2], line));
            for (size_t i = 3; i < rest.size(); ++i) m.power_classes.push_back(rest[i].first);
            if (static_cast<int>(m.power_classes.size()) != m.order)
                detail::ctbl_error(line, toks[0].second, "TORUSMODEL " + m.name + " lists " + std::to_string(m.power_classes.size()) +
                                                             " classes for a torus of order " + std::to_string(m.order));
            f.torus_models.push_back(std::move(m));
        } else if (key == "UNIPOTENT") {
            for (auto& t : rest) f.unipotent_rows.push_back(t.first);
        } else if (key == "ROW") {
            size_t colon = s.find(':');
            if (colon == std::string::npos) detail::ctbl_error(line, toks[0].second, "ROW needs 'name:'");
            std::string name = s.substr(s.find("ROW") + 3, colon - s.find("ROW") - 3);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            if (name.empty()) detail::ctbl_error(line, toks[0].second, "empty row name");
            std::vector<Cyc> vals;
            for (auto& t : detail::split_tokens(s.substr(colon + 1), static_cast<int>(colon) + 1)) {
                try {
                    vals.push_back(t.first == "." ? Cyc(0) : Cyc::parse(t.first));
                } catch (const Error& e) {
                    detail::ctbl_error(line, t.second, "bad value '" + t.first + "': " + e.what());
                }
            }
            if (!f.classes.empty() && vals.size() != f.classes.size())
                detail::ctbl_error(line, toks[0].second, "row " + name + " has " + std::to_string(vals.size()) + " values for " +
                                                             std::to_string(f.classes.size()) + " classes");
            f.row_names.push_back(name);
            f.rows.push_back(std::move(vals));
        } else {
            detail::ctbl_error(line, toks[0].second, "unknown section '" + key + "'");
        }
    }
    const size_t k = f.classes.size();
    auto at = [&](const std::string& key) { return where.count(key) ? where[key] : line; };
    if (k == 0) throw ParseError("no CLASSES line", line, 1);
    auto need = [&](size_t n, const char* what) {
        if (n != k)
            throw ParseError(std::string(what) + " has " + std::to_string(n) + " entries for " + std::to_string(k) + " classes", at(what), 1);
    };
    need(f.orders.size(), "ORDERS");
    need(f.centralizers.size(), "CENTRALIZERS");
    need(f.flags.size(), "FLAGS");
    need(f.tori.size(), "TORI");
    for (const auto& m : f.torus_models)
        for (const auto& c : m.power_classes)
            if (std::find(f.classes.begin(), f.classes.end(), c) == f.classes.end())
                throw ParseError("TORUSMODEL " + m.name + " names unknown class '" + c + "'", at("TORUSMODEL"), 1);
    for (const auto& u : f.unipotent_rows)
        if (std::find(f.row_names.begin(), f.row_names.end(), u) == f.row_names.end())
            throw ParseError("UNIPOTENT names unknown row '" + u + "'", at("UNIPOTENT"), 1);
    return f;
}

inline std::string serialize_char_table_file(const CharTableFile& f) {
    std::ostringstream o;
    auto line = [&](const char* key, const auto& v) {
        o << key;
        for (const auto& x : v) o << ' ' << x;
        o << '\n';
    };
    o << "GROUP " << f.label << '\n';
    line("CLASSES", f.classes);
    line("ORDERS", f.orders);
    line("CENTRALIZERS", f.centralizers);
    line("FLAGS", f.flags);
    line("TORI", f.tori);
    for (const auto& m : f.torus_models) {
        o << "TORUSMODEL " << m.name << ' ' << m.order << ' ' << m.weyl_multiplier;
        for (const auto& c : m.power_classes) o << ' ' << c;
        o << '\n';
    }
    if (!f.unipotent_rows.empty()) line("UNIPOTENT", f.unipotent_rows);
    for (size_t i = 0; i < f.rows.size(); ++i) {
        o << "ROW " << f.row_names[i] << ':';
        for (const auto& v : f.rows[i]) o << ' ' << (v.is_zero() ? std::string(".") : v.str());
        o << '\n';
    }
    return o.str();
}

/// Class metadata and rows; flags are taken as data.
inline CharacterTable table_from_file(const CharTableFile& f) {
    auto d = std::make_shared<ClassData>();
    d->label = f.label;
    const int k = static_cast<int>(f.classes.size());
    int unit = -1;
    for (int c = 0; c < k; ++c)
        if (f.orders[c] == 1) unit = c;
    if (unit < 0) throw InvalidInput("table has no class of order 1");
    d->group_order = f.centralizers[unit];
    d->names = f.classes;
    d->orders = f.orders;
    d->centralizers = f.centralizers;
    d->types = f.flags;
    for (int c = 0; c < k; ++c) {
        if (f.centralizers[c] <= 0 || d->group_order % f.centralizers[c] != 0)
            throw InvalidInput("centralizer of " + f.classes[c] + " does not divide |G|");
        d->sizes.push_back(d->group_order / f.centralizers[c]);
        const std::string& fl = f.flags[c];
        d->semisimple.push_back(fl == "unit" || fl == "ss." || fl == "reg.ss.");
        d->unipotent.push_back(fl == "unit" || fl == "unip.");
        d->regular_semisimple.push_back(fl == "reg.ss.");
        d->very_regular.push_back(fl == "reg.ss.");
        std::vector<std::string> tori;
        if (f.tori[c] != "--") {
            std::stringstream ss(f.tori[c]);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) tori.push_back(item);
        }
        d->tori.push_back(tori);
    }
    CharacterTable t;
    t.classes = d;
    t.row_names = f.row_names;
    for (size_t i = 0; i < f.rows.size(); ++i) {
        t.rows.emplace_back(d, f.rows[i]);
        bool u = std::find(f.unipotent_rows.begin(), f.unipotent_rows.end(), f.row_names[i]) != f.unipotent_rows.end();
        t.unipotent_rows.push_back(u);
    }
    return t;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ImportedTable {
    CharTableFile file;
    CharacterTable table;
    TableReport report;
};

/// Parses and verifies; throws with the first violation when the table is not a character table.
inline ImportedTable import_character_table(const std::string& path) {
    ImportedTable it;
    it.file = parse_char_table_file(read_text_file(path));
    it.table = table_from_file(it.file);
    it.report = verify_table(it.table);
    if (!it.report.ok) throw VerificationFailure(path + ": " + it.report.violations.front());
    return it;
}

/// Export of a computed table; flags and tori come from the class data.
inline CharTableFile file_from_table(const CharacterTable& t) {
    CharTableFile f;
    const ClassData& d = *t.classes;
    f.label = d.label;
    f.classes = d.names;
    f.orders = d.orders;
    f.centralizers = d.centralizers;
    for (int c = 0; c < d.count(); ++c) {
        std::string ty = c < static_cast<int>(d.types.size()) ? d.types[c] : "--";
        if (ty == "reg. ss.") ty = "reg.ss.";
        if (ty.empty()) ty = "--";
        f.flags.push_back(ty);
        std::string tori;
        if (c < static_cast<int>(d.tori.size()))
            for (const auto& x : d.tori[c]) tori += (tori.empty() ? "" : ",") + x;
        f.tori.push_back(tori.empty() ? "--" : tori);
    }
    f.row_names = t.row_names;
    for (const auto& r : t.rows) f.rows.push_back(r.values());
    for (int i = 0; i < t.size(); ++i)
        if (t.row_is_unipotent(i)) f.unipotent_rows.push_back(t.row_names[i]);
    return f;
}

}  // namespace jetrep
