#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "jetrep/core/cyclotomic.hpp"
#include "jetrep/core/errors.hpp"
#include "jetrep/core/intmath.hpp"

namespace jetrep {

using CycMatrix = std::vector<std::vector<Cyc>>;

inline CycMatrix cyc_identity(int n) {
    CycMatrix m(n, std::vector<Cyc>(n));
    for (int i = 0; i < n; ++i) m[i][i] = Cyc(1);
    return m;
}

inline CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) {
    const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    CycMatrix c(n, std::vector<Cyc>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline CycMatrix cyc_scale(const Cyc& s, CycMatrix a) {
    for (auto& row : a)
        for (auto& v : row) v = v * s;
    return a;
}

inline Cyc cyc_trace(const CycMatrix& a) {
    Cyc s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i][i];
    return s;
}

/// Nullspace of a matrix over the cyclotomics (rows = equations).
inline std::vector<std::vector<Cyc>> cyc_nullspace(CycMatrix a, int cols) {
    std::vector<int> piv;
    int r = 0;
    const int rows = static_cast<int>(a.size());
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(a[r], a[sel]);
        Cyc iv = a[r][c].inverse();
        for (auto& v : a[r]) v = v * iv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Cyc f = a[i][c];
            for (int j = 0; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<char> is_piv(cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<Cyc>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Cyc> v(cols);
        v[f] = Cyc(1);
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

/// Schroedinger model of the Heisenberg group H = F_p^2 x F_p, law
/// (v,z)(v',z') = (v+v', z+z'+<v,v'>/2), <(a,b),(a',b')> = ab' - a'b, on functions F_p -> C,
/// with the Weil representation of SL2(F_p) = Sp(F_p^2) normalised to be a genuine representation.
class HeisenbergWeil {
public:
    using Sp = std::array<int, 4>;  // (a b; c d) mod p acting on column vectors (a, b)

    explicit HeisenbergWeil(int p) : p_(p) {
        if (p < 3 || !is_prime(p)) throw InvalidInput("Heisenberg-Weil: p must be an odd prime");
        half_ = static_cast<int>(invmod(2, p));
        build();
    }

    int p() const { return p_; }
    int dimension() const { return p_; }

    /// psi0(k) = exp(2 pi i k / p)
    Cyc psi(i64 k) const { return Cyc::E(p_, mod(k, p_)); }

    /// rho(ae + bf, z) = psi(z - ab/2) X(a) Y(b) with X(a) phi(x) = phi(x+a), Y(b) phi(x) = psi(bx) phi(x).
    CycMatrix heisenberg(int a, int b, int z) const {
        CycMatrix m(p_, std::vector<Cyc>(p_));
        i64 base = z - static_cast<i64>(a) * b % p_ * half_;
        for (int x = 0; x < p_; ++x) m[x][mod(x + a, p_)] = psi(base + static_cast<i64>(b) * (x + a));
        return m;
    }

    /// Weil operator of an element of SL2(F_p).
    const CycMatrix& weil(const Sp& A) const {
        auto it = weil_.find(norm(A));
        if (it == weil_.end()) throw InvalidInput("Weil operator requested for a matrix outside SL2(F_p)");
        return it->second;
    }

    /// Tr(W(A) rho(a,b,z)) without forming the product.
    Cyc trace_weil_heisenberg(const Sp& A, int a, int b, int z) const {
        const CycMatrix& W = weil(A);
        Cyc s;
        i64 base = z - static_cast<i64>(a) * b % p_ * half_;
        // (W rho)[x][x] = W[x][x-a] * psi(base + b x)
        for (int x = 0; x < p_; ++x) {
            const Cyc& w = W[x][mod(x - a, p_)];
            if (w.is_zero()) continue;
            s += w * psi(base + static_cast<i64>(b) * x);
        }
        return s;
    }

    Sp sp_mul(const Sp& x, const Sp& y) const {
        return norm({x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]});
    }
    Sp norm(const Sp& m) const { return {static_cast<int>(mod(m[0], p_)), static_cast<int>(mod(m[1], p_)),
                                         static_cast<int>(mod(m[2], p_)), static_cast<int>(mod(m[3], p_))}; }
    /// A (a,b)
    std::array<int, 2> act(const Sp& A, int a, int b) const {
        return {static_cast<int>(mod(static_cast<i64>(A[0]) * a + static_cast<i64>(A[1]) * b, p_)),
                static_cast<int>(mod(static_cast<i64>(A[2]) * a + static_cast<i64>(A[3]) * b, p_))};
    }
    const std::map<Sp, CycMatrix>& all_operators() const { return weil_; }
    /// Scalars chosen for the generators u = (1 1; 0 1) and w = (0 -1; 1 0).
    const Cyc& lambda_u() const { return lambda_u_; }
    const Cyc& lambda_w() const { return lambda_w_; }

private:
    /// A matrix M with M rho(v, 0) = rho(Av, 0) M for v = e, f; unique up to scalar.
    CycMatrix intertwiner(const Sp& A) const {
        const int n = p_;
        CycMatrix eqs;
        for (auto [a, b] : {std::array<int, 2>{1, 0}, std::array<int, 2>{0, 1}}) {
            CycMatrix r = heisenberg(a, b, 0);
            auto Av = act(A, a, b);
            CycMatrix ra = heisenberg(Av[0], Av[1], 0);
            // (M r - ra M)[i][j] = sum_k M[i][k] r[k][j] - ra[i][k] M[k][j]
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    std::vector<Cyc> row(n * n);
                    for (int k = 0; k < n; ++k) {
                        if (!r[k][j].is_zero()) row[i * n + k] += r[k][j];
                        if (!ra[i][k].is_zero()) row[k * n + j] -= ra[i][k];
                    }
                    eqs.push_back(std::move(row));
                }
        }
        auto ns = cyc_nullspace(eqs, n * n);
        if (ns.size() != 1) throw VerificationFailure("Weil intertwiner space is not one-dimensional");
        CycMatrix m(n, std::vector<Cyc>(n));
        Cyc lead;
        for (int i = 0; i < n * n && lead.is_zero(); ++i) lead = ns[0][i];
        Cyc il = lead.inverse();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = (ns[0][i * n + j] * il).reduced();
        return m;
    }

    bool try_close(const CycMatrix& wu, const CycMatrix& ww, std::map<Sp, CycMatrix>& out) const {
        const Sp u{1, 1, 0, 1}, w{0, p_ - 1, 1, 0};
        out.clear();
        out[{1, 0, 0, 1}] = cyc_identity(p_);
        std::vector<Sp> queue{{1, 0, 0, 1}};
        for (size_t i = 0; i < queue.size(); ++i) {
            Sp A = queue[i];
            for (int gi = 0; gi < 2; ++gi) {
                const Sp& s = gi == 0 ? u : w;
                const CycMatrix& Ws = gi == 0 ? wu : ww;
                Sp B = sp_mul(A, s);
                CycMatrix WB = cyc_mul(out[A], Ws);
                for (auto& row : WB)
                    for (auto& v : row) v = v.reduced();
                auto it = out.find(B);
                if (it == out.end()) {
                    out[B] = std::move(WB);
                    queue.push_back(B);
                } else if (it->second != WB) {
                    return false;
                }
            }
        }
        i64 order = static_cast<i64>(p_) * (static_cast<i64>(p_) * p_ - 1);
        return static_cast<i64>(out.size()) == order;
    }

    /// Scalars c with (cM)^n = 1, among zeta_{4p}^k and zeta_{4p}^k G/p (G the quadratic Gauss sum).
    std::vector<Cyc> normalising_scalars(const CycMatrix& m, int n) const {
        CycMatrix pw = m;
        for (int i = 1; i < n; ++i) pw = cyc_mul(pw, m);
        for (auto& row : pw)
            for (auto& v : row) v = v.reduced();
        Cyc mu = pw[0][0];
        if (pw != cyc_scale(mu, cyc_identity(p_))) throw VerificationFailure("Weil intertwiner power is not scalar");
        Cyc gauss;
        for (int x = 0; x < p_; ++x) gauss += psi(static_cast<i64>(x) * x);
        std::vector<Cyc> out;
        for (int e = 0; e < 2; ++e)
            for (int k = 0; k < 4 * p_; ++k) {
                Cyc c = Cyc::E(4 * p_, k);
                if (e) c = (c * gauss).scaled(Rational(1, p_));
                Cyc cn = Cyc(1);
                for (int i = 0; i < n; ++i) cn = cn * c;
                if ((cn * mu).reduced() == Cyc(1)) out.push_back(c.reduced());
            }
        return out;
    }

    void build() {
        const Sp u{1, 1, 0, 1}, w{0, p_ - 1, 1, 0};
        CycMatrix mu = intertwiner(u), mw = intertwiner(w);
        for (const Cyc& lu : normalising_scalars(mu, p_))
            for (const Cyc& lw : normalising_scalars(mw, 4)) {
                CycMatrix wu = cyc_scale(lu, mu), ww = cyc_scale(lw, mw);
                // (uw)^3 = w^2 before the full closure
                CycMatrix w2 = cyc_mul(ww, ww);
                CycMatrix uw = cyc_mul(wu, ww);
                CycMatrix uw3 = cyc_mul(cyc_mul(uw, uw), uw);
                for (auto* m : {&w2, &uw3})
                    for (auto& row : *m)
                        for (auto& v : row) v = v.reduced();
                if (uw3 != w2) continue;
                std::map<Sp, CycMatrix> ops;
                if (try_close(wu, ww, ops)) {
                    weil_ = std::move(ops);
                    lambda_u_ = lu;
                    lambda_w_ = lw;
                    return;
                }
            }
        throw VerificationFailure("Weil normalisation: no consistent scalars on the generators");
    }

    int p_;
    int half_;
    std::map<Sp, CycMatrix> weil_;
    Cyc lambda_u_, lambda_w_;
};

}  // namespace jetrep
