#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/core/intmath.hpp"

namespace jetrep {

using IntVec = std::vector<i64>;
using IntMatrix = std::vector<std::vector<i64>>;

inline IntMatrix identity_matrix(int n) {
    IntMatrix m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, IntVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (!a[i][l]) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline IntVec matvec(const IntMatrix& a, const IntVec& v) {
    IntVec out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

inline IntMatrix transpose(const IntMatrix& a) {
    if (a.empty()) return a;
    IntMatrix t(a[0].size(), IntVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline i128 determinant(const IntMatrix& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    i128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int sw = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { sw = i; break; }
            if (sw < 0) return 0;
            std::swap(a[k], a[sw]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Coefficients of det(x I - m), lowest degree first (Faddeev-LeVerrier).
inline IntVec char_poly(const IntMatrix& m) {
    int n = static_cast<int>(m.size());
    IntVec c(n + 1, 0);
    c[n] = 1;
    IntMatrix mk = identity_matrix(n);  // M_k
    for (int k = 1; k <= n; ++k) {
        IntMatrix am = matmul(m, mk);
        i64 tr = 0;
        for (int i = 0; i < n; ++i) tr += am[i][i];
        if (tr % k) throw Overflow("char_poly: non-integral trace step");
        c[n - k] = -tr / k;
        mk = am;
        for (int i = 0; i < n; ++i) mk[i][i] += c[n - k];
    }
    return c;
}

inline IntVec poly_mul(const IntVec& a, const IntVec& b) {
    IntVec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline IntVec cyclotomic_polynomial(int n) {
    IntVec num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        IntVec b = cyclotomic_polynomial(d);
        size_t db = b.size() - 1;
        IntVec qt(num.size() - db, 0);
        for (size_t i = num.size(); i-- > db;) {
            i64 cc = num[i];
            qt[i - db] = cc;
            for (size_t j = 0; j <= db; ++j) num[i - db + j] -= cc * b[j];
        }
        num = qt;
    }
    return num;
}

inline i128 poly_eval(const IntVec& c, i64 x) {
    i128 v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

/// Smith normal form U * A * V = diag(d_1, ..., d_n) with d_i | d_{i+1}, U and V unimodular.
/// Uinv is maintained alongside U.
struct SmithForm {
    IntVec diagonal;
    IntMatrix U, Uinv, V;
};

inline SmithForm smith_normal_form(const IntMatrix& input) {
    int n = static_cast<int>(input.size());
    IntMatrix a = input;
    IntMatrix U = identity_matrix(n), Uinv = identity_matrix(n), V = identity_matrix(n);
    auto check = [](i64 x) {
        if (x > (1LL << 60) || x < -(1LL << 60)) throw Overflow("smith_normal_form: entry growth");
    };
    // row op: row_i += c * row_j  (U updated likewise; Uinv gets col_j -= c * col_i)
    auto row_add = [&](int i, int j, i64 c) {
        for (int k = 0; k < n; ++k) {
            a[i][k] += c * a[j][k];
            U[i][k] += c * U[j][k];
            Uinv[k][j] -= c * Uinv[k][i];
            check(a[i][k]);
            check(U[i][k]);
        }
    };
    auto row_swap = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(U[i], U[j]);
        for (int k = 0; k < n; ++k) std::swap(Uinv[k][i], Uinv[k][j]);
    };
    auto row_neg = [&](int i) {
        for (int k = 0; k < n; ++k) {
            a[i][k] = -a[i][k];
            U[i][k] = -U[i][k];
            Uinv[k][i] = -Uinv[k][i];
        }
    };
    auto col_add = [&](int i, int j, i64 c) {  // col_i += c * col_j
        for (int k = 0; k < n; ++k) {
            a[k][i] += c * a[k][j];
            V[k][i] += c * V[k][j];
            check(a[k][i]);
        }
    };
    auto col_swap = [&](int i, int j) {
        for (int k = 0; k < n; ++k) {
            std::swap(a[k][i], a[k][j]);
            std::swap(V[k][i], V[k][j]);
        }
    };
    for (int t = 0; t < n; ++t) {
        while (true) {
            // pivot: smallest nonzero |entry| in the trailing block
            int pi = -1, pj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pi < 0 || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) { pi = i; pj = j; }
            if (pi < 0) break;
            row_swap(t, pi);
            col_swap(t, pj);
            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                i64 qq = a[i][t] / a[t][t];
                if (qq) row_add(i, t, -qq);
                if (a[i][t]) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                i64 qq = a[t][j] / a[t][t];
                if (qq) col_add(j, t, -qq);
                if (a[t][j]) clean = false;
            }
            if (!clean) continue;
            // divisibility of the trailing block
            int bad = -1;
            for (int i = t + 1; i < n && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t]) { bad = i; break; }
            if (bad < 0) break;
            row_add(t, bad, 1);
        }
        if (a[t][t] < 0) row_neg(t);
    }
    SmithForm s;
    for (int i = 0; i < n; ++i) s.diagonal.push_back(a[i][i]);
    s.U = U;
    s.Uinv = Uinv;
    s.V = V;
    return s;
}

inline std::string poly_to_string(const IntVec& c) {
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
        if (!c[i]) continue;
        i64 a = std::llabs(c[i]);
        std::string term = (a != 1 || i == 0) ? std::to_string(a) : "";
        if (i >= 1) term += "x";
        if (i >= 2) term += "^" + std::to_string(i);
        out += c[i] < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
        out += term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace jetrep
