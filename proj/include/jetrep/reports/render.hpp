#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jetrep/core/cyclotomic.hpp"
#include "jetrep/core/errors.hpp"

namespace jetrep {

inline std::string sign_str(int s) { return s > 0 ? "+1" : s < 0 ? "-1" : "none"; }

enum class ReportFormat { Markdown, Csv };

inline ReportFormat parse_report_format(const std::string& s) {
    if (s == "md" || s == "markdown") return ReportFormat::Markdown;
    if (s == "csv") return ReportFormat::Csv;
    throw InvalidInput("unknown format '" + s + "' (md or csv)");
}

/// A cell keeps the exact value when there is one; text is used otherwise.
struct ReportCell {
    std::string text;
    std::optional<Cyc> exact;

    ReportCell() = default;
    ReportCell(std::string s) : text(std::move(s)) {}
    ReportCell(const char* s) : text(s) {}
    ReportCell(i64 v) : text(std::to_string(v)), exact(Cyc(v)) {}
    ReportCell(int v) : ReportCell(static_cast<i64>(v)) {}
    ReportCell(bool b) : text(b ? "yes" : "no") {}
    ReportCell(const Cyc& c) : text(c.str()), exact(c) {}
    ReportCell(const Rational& r) : text(r.str()), exact(Cyc(r)) {}

    std::string display(bool as_float) const {
        if (!as_float || !exact) return text;
        if (exact->is_rational() && exact->rational().den() == 1) return text;
        auto z = exact->to_complex();
        char buf[64];
        if (std::abs(z.imag()) < 1e-12) std::snprintf(buf, sizeof buf, "%.6g", z.real());
        else std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
        return buf;
    }
};

using ReportRow = std::vector<ReportCell>;

struct Report {
    std::string title;
    std::vector<std::string> columns;
    std::vector<ReportRow> rows;
    std::vector<std::string> notes;

    void add(ReportRow r) {
        if (r.size() != columns.size())
            throw InvalidInput("report row has " + std::to_string(r.size()) + " cells for " + std::to_string(columns.size()) + " columns");
        rows.push_back(std::move(r));
    }
};

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline std::string md_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

inline std::string render(const Report& r, ReportFormat fmt, bool as_float = false) {
    std::ostringstream o;
    if (fmt == ReportFormat::Csv) {
        for (size_t i = 0; i < r.columns.size(); ++i) o << (i ? "," : "") << csv_quote(r.columns[i]);
        o << "\r\n";
        for (const auto& row : r.rows) {
            for (size_t i = 0; i < row.size(); ++i) o << (i ? "," : "") << csv_quote(row[i].display(as_float));
            o << "\r\n";
        }
        return o.str();
    }
    if (!r.title.empty()) o << "## " << r.title << "\n\n";
    if (!r.columns.empty()) {
        o << '|';
        for (const auto& c : r.columns) o << ' ' << md_escape(c) << " |";
        o << "\n|";
        for (size_t i = 0; i < r.columns.size(); ++i) o << "---|";
        o << '\n';
        for (const auto& row : r.rows) {
            o << '|';
            for (const auto& c : row) o << ' ' << md_escape(c.display(as_float)) << " |";
            o << '\n';
        }
    }
    if (!r.notes.empty()) {
        o << '\n';
        for (const auto& n : r.notes) o << n << '\n';
    }
    return o.str();
}

}  // namespace jetrep
