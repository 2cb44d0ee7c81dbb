#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/core/rational.hpp"
#include "jetrep/torus/lattice.hpp"
#include "jetrep/torus/root_system.hpp"

namespace jetrep {

inline constexpr i64 kTorusEnumerationCap = 10'000'000;
inline constexpr i64 kTorusListCap = 1'000'000;

/// Smith normal form carrier for coker(q w - I) on Y.
struct FiniteAbelianPresentation {
    IntVec snf_diagonal;
    IntMatrix U, Uinv, V;
    i64 order() const {
        i64 o = 1;
        for (i64 d : snf_diagonal) o *= d;
        return o;
    }
};

/// T_w(F_q) = Y / (q w - I) Y, realized inside Y tensor F_{q^n}^x via the norm map.
struct TorusForm {
    const RootSystemData* rs = nullptr;
    const WeylClassRep* wc = nullptr;
    i64 q = 0;
    int lattice_rank = 0;
    int splitting_degree = 0;  // order of w
    IntMatrix frobenius;       // q w - I on Y
    FiniteAbelianPresentation presentation;
    i64 order = 0;
    i128 modulus = 0;          // q^n - 1
    std::vector<std::vector<i128>> norm_generators;  // N(U^{-1} e_i) mod q^n - 1, one per SNF factor
};

inline i128 mulmod128(i128 a, i128 b, i128 m) {
    a = mod128(a, m);
    b = mod128(b, m);
    if (m < (static_cast<i128>(1) << 62)) return a * b % m;
    i128 r = 0;
    while (b > 0) {
        if (b & 1) { r += a; if (r >= m) r -= m; }
        a += a;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

inline void validate_q(i64 q) {
    if (q < 2 || !prime_power(q)) throw InvalidInput("q must be a prime power (got " + std::to_string(q) + ")");
}

inline TorusForm make_torus(const RootSystemData& rs, const WeylClassRep& wc, i64 q) {
    validate_q(q);
    TorusForm t;
    t.rs = &rs;
    t.wc = &wc;
    t.q = q;
    t.lattice_rank = rs.rank;
    t.splitting_degree = matrix_order(wc.w);
    t.frobenius = wc.w;
    for (auto& row : t.frobenius)
        for (auto& v : row) v *= q;
    for (int i = 0; i < rs.rank; ++i) t.frobenius[i][i] -= 1;
    i128 det = determinant(t.frobenius);
    if (det < 0) det = -det;
    if (det == 0) throw InvalidInput("det(q w - I) vanishes");
    if (det > INT64_MAX) throw Overflow("torus order exceeds 64 bits");
    t.order = static_cast<i64>(det);
    SmithForm s = smith_normal_form(t.frobenius);
    t.presentation = {s.diagonal, s.U, s.Uinv, s.V};
    if (t.presentation.order() != t.order) throw VerificationFailure("Smith form order mismatch");
    // modulus q^n - 1
    i128 m = 1;
    for (int i = 0; i < t.splitting_degree; ++i) {
        m *= q;
        if (m > (static_cast<i128>(1) << 120)) throw Overflow("q^n too large for 128-bit log coordinates");
    }
    t.modulus = m - 1;
    // norm matrix N = sum_{i<n} (q w)^i mod M, applied to the SNF generators
    const int r = rs.rank;
    std::vector<std::vector<i128>> qw(r, std::vector<i128>(r)), power(r, std::vector<i128>(r, 0)), norm(r, std::vector<i128>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) qw[i][j] = mod128(static_cast<i128>(wc.w[i][j]) * q, t.modulus);
    for (int i = 0; i < r; ++i) power[i][i] = 1;
    for (int k = 0; k < t.splitting_degree; ++k) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) norm[i][j] = mod128(norm[i][j] + power[i][j], t.modulus);
        std::vector<std::vector<i128>> next(r, std::vector<i128>(r, 0));
        for (int i = 0; i < r; ++i)
            for (int l = 0; l < r; ++l) {
                if (!power[i][l]) continue;
                for (int j = 0; j < r; ++j)
                    next[i][j] = mod128(next[i][j] + mulmod128(power[i][l], qw[l][j], t.modulus), t.modulus);
            }
        power = next;
    }
    for (size_t c = 0; c < s.diagonal.size(); ++c) {
        std::vector<i128> v(r, 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                v[i] = mod128(v[i] + mulmod128(norm[i][j], mod128(s.Uinv[j][c], t.modulus), t.modulus), t.modulus);
        t.norm_generators.push_back(v);
    }
    return t;
}

/// |det(q w - I)| = |T_w(F_q)|.
inline i64 torus_order(const RootSystemData& rs, const WeylClassRep& wc, i64 q) { return make_torus(rs, wc, q).order; }

inline i64 torus_order(const RootSystemData& rs, const std::string& carter_label, i64 q) {
    return torus_order(rs, rs.find_class(carter_label), q);
}

/// A point of T_w(F_q): SNF digits and log coordinates in (Z/(q^n - 1))^rank; the point is
/// the tuple (g^{v_1}, ..., g^{v_r}) for a fixed generator g of F_{q^n}^x.
struct TorusPoint {
    IntVec digits;
    std::vector<i128> log;
};

/// Visits every point of T_w(F_q) as an image of the norm map; cap enforced on the order.
inline void for_each_torus_point(const TorusForm& t, const std::function<void(const TorusPoint&)>& visit,
                                 i64 cap = kTorusEnumerationCap) {
    if (t.order > cap)
        throw TooLarge("torus of order " + std::to_string(t.order) + " exceeds the enumeration cap " + std::to_string(cap));
    const auto& d = t.presentation.snf_diagonal;
    const int r = t.lattice_rank;
    TorusPoint pt;
    pt.digits.assign(d.size(), 0);
    pt.log.assign(r, 0);
    while (true) {
        visit(pt);
        size_t k = 0;
        for (; k < d.size(); ++k) {
            if (d[k] == 1) continue;
            pt.digits[k] += 1;
            for (int i = 0; i < r; ++i) pt.log[i] = mod128(pt.log[i] + t.norm_generators[k][i], t.modulus);
            if (pt.digits[k] < d[k]) break;
            pt.digits[k] = 0;
            // after d_k steps the added total is d_k * N(y_k) = 0 mod M, so log is already reset
        }
        if (k == d.size()) break;
    }
}

inline std::vector<TorusPoint> enumerate_torus_points(const TorusForm& t, i64 cap = kTorusListCap) {
    if (t.order > cap)
        throw TooLarge("torus of order " + std::to_string(t.order) + " exceeds the list cap " + std::to_string(cap));
    std::vector<TorusPoint> out;
    out.reserve(t.order);
    for_each_torus_point(t, [&](const TorusPoint& p) { out.push_back(p); }, cap);
    return out;
}

inline std::vector<TorusPoint> enumerate_torus_points(const RootSystemData& rs, const WeylClassRep& wc, i64 q,
                                                      i64 cap = kTorusListCap) {
    return enumerate_torus_points(make_torus(rs, wc, q), cap);
}

/// alpha(t) = 1 for the point with log coordinates v.
inline bool root_trivial_at(const TorusForm& t, const IntVec& alpha, const std::vector<i128>& v) {
    i128 s = 0;
    for (int i = 0; i < t.lattice_rank; ++i) s += static_cast<i128>(alpha[i]) * v[i];
    return mod128(s, t.modulus) == 0;
}

inline bool is_non_very_regular(const TorusForm& t, const std::vector<i128>& v) {
    for (const auto& a : t.rs->positive_roots)
        if (root_trivial_at(t, a, v)) return true;
    return false;
}

/// Counts torus points killed by some root. Uses the Smith form: alpha(point) is
/// sum a_i k_i (D/d_i) mod D with c_i = <alpha, N y_i> = k_i (M/d_i), updated incrementally.
inline i64 count_non_very_regular(const TorusForm& t, i64 cap = kTorusEnumerationCap) {
    if (t.order > cap)
        throw TooLarge("torus of order " + std::to_string(t.order) + " exceeds the enumeration cap " + std::to_string(cap));
    const auto& d = t.presentation.snf_diagonal;
    std::vector<size_t> active;
    for (size_t k = 0; k < d.size(); ++k)
        if (d[k] > 1) active.push_back(k);
    i64 D = d.empty() ? 1 : d.back();
    const auto& roots = t.rs->positive_roots;
    const size_t nr = roots.size();
    // step[k][alpha] = k-th generator's contribution to alpha, in Z/D
    std::vector<std::vector<i64>> step(active.size(), std::vector<i64>(nr));
    for (size_t a = 0; a < active.size(); ++a) {
        size_t k = active[a];
        i128 unit = t.modulus / d[k];
        for (size_t j = 0; j < nr; ++j) {
            i128 s = 0;
            for (int i = 0; i < t.lattice_rank; ++i) s += static_cast<i128>(roots[j][i]) * t.norm_generators[k][i];
            s = mod128(s, t.modulus);
            if (s % unit) throw VerificationFailure("norm image not killed by the elementary divisor");
            i64 kk = static_cast<i64>(s / unit);
            step[a][j] = mod(kk * (D / d[k]), D);
        }
    }
    std::vector<i64> val(nr, 0);
    IntVec digit(active.size(), 0);
    i64 count = 0;
    while (true) {
        for (size_t j = 0; j < nr; ++j)
            if (val[j] == 0) { ++count; break; }
        size_t a = 0;
        for (; a < active.size(); ++a) {
            digit[a] += 1;
            for (size_t j = 0; j < nr; ++j) {
                val[j] += step[a][j];
                if (val[j] >= D) val[j] -= D;
            }
            if (digit[a] < d[active[a]]) break;
            digit[a] = 0;
        }
        if (a == active.size()) break;
    }
    return count;
}

inline i64 count_non_very_regular(const RootSystemData& rs, const WeylClassRep& wc, i64 q) {
    return count_non_very_regular(make_torus(rs, wc, q));
}

enum class HenniartMode { weak, strong };

struct HenniartRecord {
    bool holds = false;
    Rational ratio;
    i64 bound = 0;
    i64 order = 0;
    i64 nvreg = 0;
    i64 weyl_stabilizer = 0;
};

inline HenniartRecord henniart_check(HenniartMode mode, const RootSystemData& rs, const WeylClassRep& wc, i64 q) {
    TorusForm t = make_torus(rs, wc, q);
    HenniartRecord h;
    h.order = t.order;
    h.nvreg = count_non_very_regular(t);
    h.ratio = Rational(t.order, h.nvreg);
    h.weyl_stabilizer = static_cast<i64>(weyl_centralizer(rs, wc).size());
    h.bound = mode == HenniartMode::weak ? 2 : 2 * h.weyl_stabilizer;
    h.holds = h.ratio > Rational(h.bound);
    return h;
}

/// Action of a centralizing Weyl element c on A = coker(q w - I) in SNF coordinates.
inline IntMatrix action_on_presentation(const TorusForm& t, const IntMatrix& c) {
    const auto& P = t.presentation;
    IntMatrix m = matmul(matmul(P.U, c), P.Uinv);
    for (size_t k = 0; k < m.size(); ++k)
        for (auto& v : m[k]) v = mod(v, P.snf_diagonal[k]);
    return m;
}

struct RegularCharacterReport {
    i64 regular = 0;
    i64 dual_order = 0;
    bool action_faithful = false;
    i64 weyl_stabilizer = 0;
};

/// Characters of T_w(F_q) with trivial stabilizer in W_T(F_q) = C_W(w).
inline RegularCharacterReport regular_character_report(const RootSystemData& rs, const WeylClassRep& wc, i64 q,
                                                       i64 cap = kTorusEnumerationCap) {
    TorusForm t = make_torus(rs, wc, q);
    if (t.order > cap)
        throw TooLarge("torus of order " + std::to_string(t.order) + " exceeds the enumeration cap " + std::to_string(cap));
    auto cent = weyl_centralizer(rs, wc);
    const auto& d = t.presentation.snf_diagonal;
    const int r = static_cast<int>(d.size());
    i64 D = d.back();
    std::vector<IntMatrix> actions;
    for (const auto& c : cent) {
        if (c == identity_matrix(rs.rank)) continue;
        actions.push_back(action_on_presentation(t, c));
    }
    RegularCharacterReport rep;
    rep.dual_order = t.order;
    rep.weyl_stabilizer = static_cast<i64>(cent.size());
    // faithfulness: every nontrivial c moves some element of A
    rep.action_faithful = true;
    for (const auto& a : actions) {
        bool moves = false;
        for (int j = 0; j < r && !moves; ++j) {
            if (d[j] == 1) continue;
            for (int i = 0; i < r; ++i)
                if (d[i] > 1 && a[i][j] != (i == j ? 1 % d[i] : 0)) { moves = true; break; }
        }
        if (!moves) rep.action_faithful = false;
    }
    // enumerate characters b (b_k in Z/d_k): chi_b(a) = sum a_k b_k D/d_k mod D
    IntVec b(r, 0);
    while (true) {
        bool regular = true;
        for (const auto& a : actions) {
            bool fixed = true;
            for (int j = 0; j < r && fixed; ++j) {
                if (d[j] == 1) continue;
                i128 s = 0;
                for (int k = 0; k < r; ++k)
                    if (d[k] > 1) s += static_cast<i128>(a[k][j]) * b[k] * (D / d[k]);
                if (mod128(s - static_cast<i128>(b[j]) * (D / d[j]), D) != 0) fixed = false;
            }
            if (fixed) { regular = false; break; }
        }
        if (regular) ++rep.regular;
        int k = 0;
        for (; k < r; ++k) {
            if (d[k] == 1) continue;
            if (++b[k] < d[k]) break;
            b[k] = 0;
        }
        if (k == r) break;
    }
    return rep;
}

inline i64 count_regular_characters(const RootSystemData& rs, const WeylClassRep& wc, i64 q) {
    return regular_character_report(rs, wc, q).regular;
}

/// One row of a Table-1-shaped scan.
struct ThresholdRow {
    i64 q = 0;
    std::optional<std::string> error;
    i64 order = 0;
    i64 nvreg = 0;
    Rational ratio;
    i64 weyl_stabilizer = 0;
    bool weak = false;
    bool strong = false;
};

inline std::vector<ThresholdRow> threshold_scan(const RootSystemData& rs, const WeylClassRep& wc,
                                                const std::vector<i64>& qs, i64 cap = kTorusEnumerationCap) {
    std::vector<ThresholdRow> rows;
    std::optional<i64> wt;
    for (i64 q : qs) {
        ThresholdRow row;
        row.q = q;
        try {
            TorusForm t = make_torus(rs, wc, q);
            row.order = t.order;
            row.nvreg = count_non_very_regular(t, cap);
            row.ratio = Rational(row.order, row.nvreg);
            if (!wt) wt = static_cast<i64>(weyl_centralizer(rs, wc).size());
            row.weyl_stabilizer = *wt;
            row.weak = row.ratio > Rational(2);
            row.strong = row.ratio > Rational(2 * *wt);
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace jetrep
