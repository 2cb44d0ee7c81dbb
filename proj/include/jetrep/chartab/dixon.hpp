#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "jetrep/chartab/character_table.hpp"
#include "jetrep/core/errors.hpp"
#include "jetrep/core/intmath.hpp"
#include "jetrep/group/classes.hpp"

namespace jetrep {

/// Structure constants a[i][j][k] = #{(x,y) in C_i x C_j : xy = rep(k)}.
struct ClassAlgebraTable {
    int k = 0;
    std::vector<i64> a;
    i64 operator()(int i, int j, int l) const { return a[(static_cast<size_t>(i) * k + j) * k + l]; }
};

template <FiniteGroup G>
ClassAlgebraTable class_algebra_constants(const ConjugacyClasses<G>& cc) {
    const G& g = cc.group();
    ClassAlgebraTable t;
    t.k = cc.count();
    const size_t k = t.k;
    t.a.assign(k * k * k, 0);
    for (size_t l = 0; l < k; ++l) {
        int z = cc.rep(static_cast<int>(l));
        for (int x = 0; x < g.order(); ++x) {
            int y = g.mul(g.inv(x), z);
            t.a[(static_cast<size_t>(cc.class_of(x)) * k + cc.class_of(y)) * k + l] += 1;
        }
    }
    return t;
}

namespace detail {

struct ModP {
    i64 p;
    i64 mul(i64 a, i64 b) const { return static_cast<i64>(static_cast<i128>(a) * b % p); }
    i64 add(i64 a, i64 b) const { i64 s = a + b; return s >= p ? s - p : s; }
    i64 sub(i64 a, i64 b) const { i64 s = a - b; return s < 0 ? s + p : s; }
    i64 inv(i64 a) const { return powmod(a, static_cast<u64>(p - 2), p); }
    i64 red(i64 a) const { return mod(a, p); }
};

using ModMatrix = std::vector<std::vector<i64>>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(ModMatrix& m, const ModP& F) {
    std::vector<int> piv;
    const int rows = static_cast<int>(m.size());
    if (!rows) return piv;
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        i64 iv = F.inv(m[r][c]);
        for (auto& v : m[r]) v = F.mul(v, iv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || !m[i][c]) continue;
            i64 f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
        }
        piv.push_back(c);
        ++r;
    }
    m.resize(r);
    return piv;
}

/// Basis of the kernel {x : A x = 0} for a square matrix.
inline ModMatrix kernel(ModMatrix a, const ModP& F) {
    const int n = static_cast<int>(a.size());
    auto piv = rref(a, F);
    std::vector<char> is_piv(n, 0);
    for (int c : piv) is_piv[c] = 1;
    ModMatrix out;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<i64> v(n, 0);
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.sub(0, a[r][f]);
        out.push_back(std::move(v));
    }
    return out;
}

/// Characteristic polynomial (low-first coefficients) via Hessenberg reduction.
inline std::vector<i64> char_poly(ModMatrix h, const ModP& F) {
    const int n = static_cast<int>(h.size());
    for (int j = 0; j + 2 <= n; ++j) {
        int sel = -1;
        for (int i = j + 1; i < n; ++i)
            if (h[i][j]) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != j + 1) {
            std::swap(h[sel], h[j + 1]);
            for (int i = 0; i < n; ++i) std::swap(h[i][sel], h[i][j + 1]);
        }
        i64 iv = F.inv(h[j + 1][j]);
        for (int i = j + 2; i < n; ++i) {
            if (!h[i][j]) continue;
            i64 f = F.mul(h[i][j], iv);
            for (int c = 0; c < n; ++c) h[i][c] = F.sub(h[i][c], F.mul(f, h[j + 1][c]));
            for (int r = 0; r < n; ++r) h[r][j + 1] = F.add(h[r][j + 1], F.mul(f, h[r][i]));
        }
    }
    // p_k(x) = char poly of the leading k x k block
    std::vector<std::vector<i64>> p(n + 1);
    p[0] = {1};
    for (int k = 1; k <= n; ++k) {
        std::vector<i64> nk(k + 1, 0);
        // (x - h[k-1][k-1]) p_{k-1}
        for (int i = 0; i < k; ++i) {
            nk[i + 1] = F.add(nk[i + 1], p[k - 1][i]);
            nk[i] = F.sub(nk[i], F.mul(h[k - 1][k - 1], p[k - 1][i]));
        }
        i64 prod = 1;
        for (int i = 1; i < k; ++i) {
            prod = F.mul(prod, h[k - i][k - i - 1]);
            i64 coef = F.mul(prod, h[k - i - 1][k - 1]);
            for (size_t j = 0; j < p[k - i - 1].size(); ++j) nk[j] = F.sub(nk[j], F.mul(coef, p[k - i - 1][j]));
        }
        p[k] = std::move(nk);
    }
    return p[n];
}

inline i64 eval_poly(const std::vector<i64>& c, i64 x, const ModP& F) {
    i64 s = 0;
    for (size_t i = c.size(); i-- > 0;) s = F.add(F.mul(s, x), c[i]);
    return s;
}

}  // namespace detail

/// Smallest prime l = 1 mod exponent with l > 2 sqrt(|G|).
inline i64 dixon_prime(i64 exponent, i64 group_order) {
    double bound = 2.0 * std::sqrt(static_cast<double>(group_order));
    for (i64 l = exponent + 1;; l += exponent)
        if (static_cast<double>(l) > bound && is_prime(l)) return l;
}

struct DixonInfo {
    i64 prime = 0;
    i64 exponent = 0;
    int passes = 0;
};

/// Irreducible characters by simultaneous diagonalisation of the class matrices mod l and
/// lifting of eigenvalue multiplicities. The table is verified exactly before it is returned.
template <FiniteGroup G>
CharacterTable dixon_character_table(const ConjugacyClasses<G>& cc, DixonInfo* info = nullptr) {
    using namespace detail;
    const ClassData& d = cc.data();
    const int k = cc.count();
    const i64 n = d.group_order;
    const i64 e = d.exponent();
    const i64 l = dixon_prime(e, n);
    ModP F{l};
    if (d.orders[0] != 1) throw InvalidInput("dixon: identity class must come first");
    ClassAlgebraTable ca = class_algebra_constants(cc);

    // class matrices M_i[j][m] = a_{i j m}; omega satisfies M_i omega = omega_i omega
    auto combine = [&](const std::vector<i64>& coef) {
        ModMatrix A(k, std::vector<i64>(k, 0));
        for (int i = 0; i < k; ++i) {
            if (!coef[i]) continue;
            for (int j = 0; j < k; ++j)
                for (int m = 0; m < k; ++m)
                    if (ca(i, j, m)) A[j][m] = F.add(A[j][m], F.mul(coef[i], F.red(ca(i, j, m))));
        }
        return A;
    };
    auto apply = [&](const ModMatrix& A, const std::vector<i64>& v) {
        std::vector<i64> out(k, 0);
        for (int j = 0; j < k; ++j) {
            i64 s = 0;
            for (int m = 0; m < k; ++m)
                if (A[j][m] && v[m]) s = F.add(s, F.mul(A[j][m], v[m]));
            out[j] = s;
        }
        return out;
    };

    std::vector<ModMatrix> spaces;
    {
        ModMatrix id(k, std::vector<i64>(k, 0));
        for (int i = 0; i < k; ++i) id[i][i] = 1;
        spaces.push_back(id);
    }
    std::mt19937_64 rng(0x5eedULL);
    int passes = 0;
    auto split_with = [&](const std::vector<i64>& coef) {
        const ModMatrix A = combine(coef);
        std::vector<ModMatrix> next;
        for (auto& B : spaces) {
            const int dim = static_cast<int>(B.size());
            if (dim == 1) { next.push_back(B); continue; }
            auto piv = rref(B, F);
            ModMatrix C(dim, std::vector<i64>(dim, 0));
            for (int m = 0; m < dim; ++m) {
                auto img = apply(A, B[m]);
                for (int r = 0; r < dim; ++r) C[r][m] = img[piv[r]];
            }
            auto cp = char_poly(C, F);
            int found = 0;
            std::vector<ModMatrix> parts;
            for (i64 lam = 0; lam < l && found < dim; ++lam) {
                if (eval_poly(cp, lam, F)) continue;
                ModMatrix shifted = C;
                for (int i = 0; i < dim; ++i) shifted[i][i] = F.sub(shifted[i][i], lam);
                auto ker = kernel(shifted, F);
                ModMatrix part;
                for (const auto& kv : ker) {
                    std::vector<i64> v(k, 0);
                    for (int m = 0; m < dim; ++m)
                        if (kv[m])
                            for (int j = 0; j < k; ++j) v[j] = F.add(v[j], F.mul(kv[m], B[m][j]));
                    part.push_back(std::move(v));
                }
                found += static_cast<int>(part.size());
                parts.push_back(std::move(part));
            }
            if (found != dim) throw VerificationFailure("dixon: class matrix is not diagonalisable over F_" + std::to_string(l));
            for (auto& pt : parts) next.push_back(std::move(pt));
        }
        spaces = std::move(next);
        ++passes;
    };
    auto all_split = [&] {
        for (const auto& b : spaces)
            if (b.size() > 1) return false;
        return true;
    };
    for (int it = 0; it < 8 && !all_split(); ++it) {
        std::vector<i64> coef(k);
        for (auto& c : coef) c = static_cast<i64>(rng() % static_cast<u64>(l));
        split_with(coef);
    }
    for (int i = 1; i < k && !all_split(); ++i) {
        std::vector<i64> coef(k, 0);
        coef[i] = 1;
        split_with(coef);
    }
    if (!all_split() || static_cast<int>(spaces.size()) != k)
        throw VerificationFailure("dixon: simultaneous eigenspaces did not separate");

    // a primitive e-th root of unity z in F_l standing for exp(2 pi i / e)
    const i64 z = powmod(primitive_root(l), static_cast<u64>((l - 1) / e), l);
    struct Raw {
        i64 degree;
        std::vector<std::vector<i64>> counts;  // per class, multiplicities over Z/order
    };
    std::vector<Raw> raws;
    i64 droot = static_cast<i64>(std::sqrt(static_cast<double>(n))) + 1;
    for (auto& B : spaces) {
        std::vector<i64> w = B[0];
        if (!w[0]) throw VerificationFailure("dixon: eigenvector vanishes at the identity");
        i64 iv = F.inv(w[0]);
        for (auto& x : w) x = F.mul(x, iv);
        i64 s = 0;
        for (int c = 0; c < k; ++c) s = F.add(s, F.mul(F.mul(w[c], w[d.inverse[c]]), F.inv(F.red(d.sizes[c]))));
        i64 target = F.mul(F.red(n), F.inv(s));
        i64 deg = -1;
        for (i64 x = 1; x <= droot; ++x)
            if (F.mul(x, x) == target && n % x == 0) { deg = x; break; }
        if (deg < 0) throw VerificationFailure("dixon: no integral degree for an eigenvector");
        std::vector<i64> chi(k);
        for (int c = 0; c < k; ++c) chi[c] = F.mul(F.mul(deg, w[c]), F.inv(F.red(d.sizes[c])));
        Raw r{deg, {}};
        for (int c = 0; c < k; ++c) {
            const i64 o = d.orders[c];
            const i64 zo = powmod(z, static_cast<u64>(e / o), l);
            std::vector<i64> pw(o);
            for (i64 j = 0; j < o; ++j) pw[j] = chi[cc.power_class(c, j)];
            std::vector<i64> m(o);
            i64 io = F.inv(F.red(o));
            for (i64 t = 0; t < o; ++t) {
                i64 acc = 0;
                i64 step = powmod(zo, static_cast<u64>(mod(-t, o)), l);
                i64 cur = 1;
                for (i64 j = 0; j < o; ++j) {
                    acc = F.add(acc, F.mul(pw[j], cur));
                    cur = F.mul(cur, step);
                }
                m[t] = F.mul(acc, io);
                if (m[t] > deg) throw VerificationFailure("dixon: eigenvalue multiplicity out of range");
            }
            r.counts.push_back(std::move(m));
        }
        raws.push_back(std::move(r));
    }
    std::sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) {
        bool ta = a.degree == 1 && std::all_of(a.counts.begin(), a.counts.end(), [](const auto& v) { return v[0] == 1; });
        bool tb = b.degree == 1 && std::all_of(b.counts.begin(), b.counts.end(), [](const auto& v) { return v[0] == 1; });
        if (ta != tb) return ta;
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.counts < b.counts;
    });
    CharacterTable t;
    t.classes = cc.shared();
    for (const auto& r : raws) {
        std::vector<Cyc> v;
        for (int c = 0; c < k; ++c) v.push_back(Cyc::from_root_counts(static_cast<int>(d.orders[c]), r.counts[c]).reduced());
        t.rows.emplace_back(cc.shared(), std::move(v));
    }
    t.row_names = default_row_names(k);
    auto rep = verify_table(t);
    if (!rep.ok)
        throw VerificationFailure("dixon: exact verification failed: " + (rep.violations.empty() ? std::string("?") : rep.violations[0]));
    if (info) *info = {l, e, passes};
    return t;
}

}  // namespace jetrep
