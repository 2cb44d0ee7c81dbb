#pragma once

#include <string>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/group/jet_group.hpp"
#include "jetrep/group/jet_ring.hpp"

namespace jetrep {

/// 2x2 matrix arithmetic over the jet ring, used for Lie algebra elements and series.
struct JetMat {
    const JetRing* R;

    JetMatrix zero() const { return {0, 0, 0, 0}; }
    JetMatrix one() const { return {1, 0, 0, 1}; }
    JetMatrix add(const JetMatrix& a, const JetMatrix& b) const {
        return {R->add(a[0], b[0]), R->add(a[1], b[1]), R->add(a[2], b[2]), R->add(a[3], b[3])};
    }
    JetMatrix sub(const JetMatrix& a, const JetMatrix& b) const {
        return {R->sub(a[0], b[0]), R->sub(a[1], b[1]), R->sub(a[2], b[2]), R->sub(a[3], b[3])};
    }
    JetMatrix mul(const JetMatrix& x, const JetMatrix& y) const {
        return {R->add(R->mul(x[0], y[0]), R->mul(x[1], y[2])), R->add(R->mul(x[0], y[1]), R->mul(x[1], y[3])),
                R->add(R->mul(x[2], y[0]), R->mul(x[3], y[2])), R->add(R->mul(x[2], y[1]), R->mul(x[3], y[3]))};
    }
    JetMatrix scale(int c, const JetMatrix& a) const { return {R->mul(c, a[0]), R->mul(c, a[1]), R->mul(c, a[2]), R->mul(c, a[3])}; }
    int trace(const JetMatrix& a) const { return R->add(a[0], a[3]); }
    JetMatrix bracket(const JetMatrix& a, const JetMatrix& b) const { return sub(mul(a, b), mul(b, a)); }
    /// 1/k as a ring constant (k prime to p).
    int inv_int(int k) const {
        const FiniteField& F = R->field();
        int c = F.from_int(k);
        if (c == 0) throw InvalidInput("series denominator divisible by p");
        return R->constant(F.inv(c));
    }
    /// Entry i of every coefficient t^k, as a matrix over F_q (field codes).
    std::array<int, 4> layer(const JetMatrix& a, int k) const {
        return {R->coeff(a[0], k), R->coeff(a[1], k), R->coeff(a[2], k), R->coeff(a[3], k)};
    }
    JetMatrix from_layer(const std::array<int, 4>& m, int k) const {
        return {R->monomial(m[0], k), R->monomial(m[1], k), R->monomial(m[2], k), R->monomial(m[3], k)};
    }
    bool is_nilpotent(const JetMatrix& n) const {
        JetMatrix cur = n;
        for (int i = 0; i < 2 * (R->depth() + 1); ++i) {
            if (cur == zero()) return true;
            cur = mul(cur, n);
        }
        return cur == zero();
    }
    /// Nilpotency bound: N^{2(r+1)} = 0 for N nilpotent modulo t.
    int series_length() const { return 2 * (R->depth() + 1); }
};

/// Truncated logarithm log(u) = sum_{k>=1} (-1)^{k+1} (u-1)^k / k; the series stops since
/// (u-1)^{2(r+1)} = 0 for topologically unipotent u. Needs p > 2r+1.
inline JetMatrix truncated_log(const JetRing& R, const JetMatrix& u) {
    JetMat M{&R};
    const JetMatrix n = M.sub(u, M.one());
    if (!M.is_nilpotent(n)) throw InvalidInput("truncated_log: element is not topologically unipotent");
    JetMatrix out = M.zero(), pw = n;
    for (int k = 1; k < M.series_length(); ++k) {
        if (pw == M.zero()) break;
        JetMatrix term = M.scale(M.inv_int(k), pw);
        out = (k % 2) ? M.add(out, term) : M.sub(out, term);
        pw = M.mul(pw, n);
    }
    return out;
}

/// Truncated exponential exp(Y) = sum Y^k/k! for topologically nilpotent Y.
inline JetMatrix truncated_exp(const JetRing& R, const JetMatrix& y) {
    JetMat M{&R};
    if (!M.is_nilpotent(y)) throw InvalidInput("truncated_exp: element is not topologically nilpotent");
    JetMatrix out = M.one(), pw = M.one();
    int fact = 1;
    for (int k = 1; k < M.series_length(); ++k) {
        pw = M.mul(pw, y);
        if (pw == M.zero()) break;
        fact *= k;
        out = M.add(out, M.scale(M.inv_int(fact), pw));
    }
    return out;
}

}  // namespace jetrep
