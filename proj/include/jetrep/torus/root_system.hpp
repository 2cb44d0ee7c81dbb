#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/torus/lattice.hpp"

#ifndef JETREP_DEFAULT_DATA_DIR
#define JETREP_DEFAULT_DATA_DIR "data"
#endif

namespace jetrep {

/// Directory holding shipped data; overridable with the JETREP_DATA_DIR environment variable.
inline std::filesystem::path data_dir() {
    if (const char* env = std::getenv("JETREP_DATA_DIR"); env && *env) return env;
    return JETREP_DEFAULT_DATA_DIR;
}

enum class LatticeKind { adjoint, simply_connected };

/// A Weyl group class representative: label, word in simple reflections, matrix on Y, char poly.
struct WeylClassRep {
    std::string carter_label;
    std::vector<std::string> aliases;
    std::vector<int> word;         // 1-based simple reflection indices
    IntMatrix w;                   // action on the cocharacter lattice Y
    IntVec char_poly;              // det(x I - w), lowest degree first
    std::vector<int> cyclotomic_factors;
    bool coxeter = false;
};

/// Root datum of a split simple group together with its shipped Weyl class representatives.
/// X is the character lattice; roots are vectors in X; Y is dual to X via the dot product.
struct RootSystemData {
    std::string label;
    int rank = 0;
    LatticeKind lattice = LatticeKind::adjoint;
    IntMatrix cartan;                         // cartan[i][j] = <alpha_i^vee, alpha_j>
    std::vector<IntVec> positive_roots_simple;  // simple-root coordinates
    std::vector<IntVec> roots;                // all roots in X coordinates
    std::vector<IntVec> positive_roots;       // positive roots in X coordinates
    std::vector<IntMatrix> simple_reflections;  // on Y
    i64 weyl_order = 0;
    i64 coxeter_number = 0;
    std::vector<WeylClassRep> classes;

    const WeylClassRep& find_class(const std::string& name) const {
        for (const auto& c : classes) {
            if (c.carter_label == name) return c;
            for (const auto& a : c.aliases)
                if (a == name) return c;
            if (c.coxeter && (name == "coxeter" || name == "Coxeter")) return c;
        }
        throw InvalidInput("classification error: unknown Weyl class '" + name + "' for type " + label);
    }

    IntMatrix word_matrix(const std::vector<int>& word) const {
        IntMatrix m = identity_matrix(rank);
        for (int i : word) {
            if (i < 1 || i > rank) throw InvalidInput("word letter out of range");
            m = matmul(m, simple_reflections[i - 1]);
        }
        return m;
    }
};

namespace detail {

/// Positive roots in simple-root coordinates via root strings.
inline std::vector<IntVec> positive_roots_from_cartan(const IntMatrix& A) {
    int n = static_cast<int>(A.size());
    std::vector<IntVec> roots;
    std::set<IntVec> seen;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        roots.push_back(e);
        seen.insert(e);
    }
    for (size_t idx = 0; idx < roots.size(); ++idx) {
        IntVec beta = roots[idx];
        for (int i = 0; i < n; ++i) {
            // <alpha_i^vee, beta>
            i64 pair = 0;
            for (int j = 0; j < n; ++j) pair += A[i][j] * beta[j];
            // p: largest k with beta - k alpha_i a root
            int p = 0;
            while (true) {
                IntVec g = beta;
                g[i] -= p + 1;
                if (!seen.count(g)) break;
                ++p;
            }
            i64 qq = p - pair;
            if (qq > 0) {
                IntVec g = beta;
                g[i] += 1;
                if (!seen.count(g)) {
                    seen.insert(g);
                    roots.push_back(g);
                }
            }
        }
    }
    return roots;
}

/// |W| by orbit-stabilizer on a fundamental weight, recursing on the parabolic subsystem.
inline i64 weyl_order_from_cartan(const IntMatrix& A) {
    int n = static_cast<int>(A.size());
    if (n == 0) return 1;
    i64 best_order = -1;
    int best_k = 0;
    // pick the node with the smallest fundamental-weight orbit
    for (int k = 0; k < n; ++k) {
        std::set<IntVec> orbit;
        std::vector<IntVec> stack;
        IntVec w0(n, 0);
        w0[k] = 1;
        orbit.insert(w0);
        stack.push_back(w0);
        while (!stack.empty() && orbit.size() <= 100000) {
            IntVec lam = stack.back();
            stack.pop_back();
            for (int i = 0; i < n; ++i) {
                if (!lam[i]) continue;
                IntVec mu = lam;
                for (int j = 0; j < n; ++j) mu[j] -= lam[i] * A[j][i];
                if (orbit.insert(mu).second) stack.push_back(mu);
            }
        }
        if (best_order < 0 || static_cast<i64>(orbit.size()) < best_order) {
            best_order = static_cast<i64>(orbit.size());
            best_k = k;
        }
    }
    IntMatrix sub;
    for (int i = 0; i < n; ++i) {
        if (i == best_k) continue;
        IntVec row;
        for (int j = 0; j < n; ++j)
            if (j != best_k) row.push_back(A[i][j]);
        sub.push_back(row);
    }
    return best_order * weyl_order_from_cartan(sub);
}

}  // namespace detail

/// Parses a root-datum file. Grammar (line oriented, `#` comments):
///   TYPE <label>
///   LATTICE adjoint|sc
///   CARTAN            followed by rank rows of integers
///   CLASS <label> [ALIAS a,b,...] WORD <letters or -> PHI <d1 d2 ...> [COXETER]
inline RootSystemData parse_root_system(std::istream& in, const std::string& source = "<stream>") {
    RootSystemData rs;
    std::string line;
    int lineno = 0;
    int cartan_rows_pending = -1;
    auto fail = [&](const std::string& m) { throw ParseError(source + ": " + m, lineno, 1); };
    struct PendingClass {
        std::string label;
        std::vector<std::string> aliases;
        std::vector<int> word;
        std::vector<int> phi;
        bool coxeter;
    };
    std::vector<PendingClass> pending;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (cartan_rows_pending > 0) {
            std::istringstream rowst(line);
            IntVec row;
            i64 v;
            while (rowst >> v) row.push_back(v);
            rs.cartan.push_back(row);
            --cartan_rows_pending;
            continue;
        }
        if (key == "TYPE") {
            ls >> rs.label;
        } else if (key == "RANK") {
            ls >> rs.rank;
        } else if (key == "LATTICE") {
            std::string k;
            ls >> k;
            if (k == "adjoint") rs.lattice = LatticeKind::adjoint;
            else if (k == "sc") rs.lattice = LatticeKind::simply_connected;
            else fail("unknown lattice kind " + k);
        } else if (key == "CARTAN") {
            if (rs.rank <= 0) fail("RANK must precede CARTAN");
            cartan_rows_pending = rs.rank;
        } else if (key == "CLASS") {
            PendingClass pc;
            pc.coxeter = false;
            ls >> pc.label;
            std::string tok;
            std::string mode;
            while (ls >> tok) {
                if (tok == "ALIAS" || tok == "WORD" || tok == "PHI") { mode = tok; continue; }
                if (tok == "COXETER") { pc.coxeter = true; continue; }
                if (mode == "ALIAS") {
                    std::stringstream as(tok);
                    std::string a;
                    while (std::getline(as, a, ',')) pc.aliases.push_back(a);
                } else if (mode == "WORD") {
                    if (tok != "-") pc.word.push_back(std::stoi(tok));
                } else if (mode == "PHI") {
                    pc.phi.push_back(std::stoi(tok));
                } else {
                    fail("unexpected token " + tok);
                }
            }
            pending.push_back(pc);
        } else {
            fail("unknown keyword " + key);
        }
    }
    if (rs.rank <= 0 || static_cast<int>(rs.cartan.size()) != rs.rank) fail("incomplete Cartan matrix");
    const int n = rs.rank;
    const IntMatrix& A = rs.cartan;
    rs.positive_roots_simple = detail::positive_roots_from_cartan(A);
    // reflections on Y and roots in X coordinates
    for (int i = 0; i < n; ++i) {
        IntMatrix s = identity_matrix(n);
        if (rs.lattice == LatticeKind::adjoint) {
            // X = root lattice, s_i(alpha_j) = alpha_j - A_ij alpha_i; on Y use the transpose
            IntMatrix sx = identity_matrix(n);
            for (int j = 0; j < n; ++j) sx[i][j] -= A[i][j];
            s = transpose(sx);
        } else {
            // Y = coroot lattice, s_i(alpha_j^vee) = alpha_j^vee - A_ji alpha_i^vee
            for (int j = 0; j < n; ++j) s[i][j] -= A[j][i];
        }
        rs.simple_reflections.push_back(s);
    }
    for (const auto& c : rs.positive_roots_simple) {
        IntVec x(n, 0);
        if (rs.lattice == LatticeKind::adjoint) {
            x = c;
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) x[i] += A[i][j] * c[j];
        }
        rs.positive_roots.push_back(x);
        rs.roots.push_back(x);
        IntVec neg = x;
        for (auto& v : neg) v = -v;
        rs.roots.push_back(neg);
    }
    rs.weyl_order = detail::weyl_order_from_cartan(A);
    rs.coxeter_number = static_cast<i64>(rs.roots.size()) / n;
    for (const auto& pc : pending) {
        WeylClassRep wc;
        wc.carter_label = pc.label;
        wc.aliases = pc.aliases;
        wc.word = pc.word;
        wc.coxeter = pc.coxeter;
        wc.cyclotomic_factors = pc.phi;
        wc.w = rs.word_matrix(pc.word);
        wc.char_poly = char_poly(wc.w);
        IntVec expect{1};
        for (int d : pc.phi) expect = poly_mul(expect, cyclotomic_polynomial(d));
        if (expect != wc.char_poly)
            fail("class " + pc.label + ": characteristic polynomial " + poly_to_string(wc.char_poly) +
                 " does not match the declared cyclotomic factors");
        rs.classes.push_back(wc);
    }
    return rs;
}

inline RootSystemData load_root_system(const std::string& type) {
    auto path = data_dir() / "weyl" / (type + ".txt");
    std::ifstream in(path);
    if (!in) throw InvalidInput("no root datum file for type '" + type + "' at " + path.string());
    return parse_root_system(in, path.string());
}

/// All elements of W as matrices on Y; refuses when |W| exceeds the cap.
inline std::vector<IntMatrix> enumerate_weyl_group(const RootSystemData& rs, i64 cap = 200000) {
    if (rs.weyl_order > cap)
        throw TooLarge("Weyl group of " + rs.label + " has order " + std::to_string(rs.weyl_order) +
                       " above the enumeration cap " + std::to_string(cap));
    std::vector<IntMatrix> elems{identity_matrix(rs.rank)};
    std::set<IntMatrix> seen{elems[0]};
    for (size_t i = 0; i < elems.size(); ++i)
        for (const auto& s : rs.simple_reflections) {
            IntMatrix m = matmul(elems[i], s);
            if (seen.insert(m).second) elems.push_back(m);
        }
    return elems;
}

/// Centralizer of w in W. W is enumerated when small; for Coxeter classes of larger groups the
/// centralizer is the cyclic group generated by w (Coxeter elements are regular).
inline std::vector<IntMatrix> weyl_centralizer(const RootSystemData& rs, const WeylClassRep& wc) {
    if (rs.weyl_order <= 200000) {
        std::vector<IntMatrix> out;
        for (const auto& g : enumerate_weyl_group(rs))
            if (matmul(g, wc.w) == matmul(wc.w, g)) out.push_back(g);
        return out;
    }
    if (!wc.coxeter)
        throw TooLarge("centralizer of class " + wc.carter_label + " in W(" + rs.label +
                       ") needs an enumeration of W, which exceeds the cap");
    std::vector<IntMatrix> out{identity_matrix(rs.rank)};
    IntMatrix cur = wc.w;
    while (cur != out[0]) {
        out.push_back(cur);
        cur = matmul(cur, wc.w);
    }
    return out;
}

inline int matrix_order(const IntMatrix& w, int limit = 1000) {
    IntMatrix id = identity_matrix(static_cast<int>(w.size()));
    IntMatrix cur = w;
    for (int k = 1; k <= limit; ++k) {
        if (cur == id) return k;
        cur = matmul(cur, w);
    }
    throw InvalidInput("matrix has no finite order below limit");
}

}  // namespace jetrep
