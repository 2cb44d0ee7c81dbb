#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "jetrep/core/cyclotomic.hpp"
#include "jetrep/core/errors.hpp"
#include "jetrep/springer/jet_lie.hpp"
#include "jetrep/yu/yu_package.hpp"

namespace jetrep {

/// Traceless 2x2 matrices over F_q[t]/t^{r+1}, identified with their dual through
/// <X, Y> = Tr_{F_q/F_p} coeff_{t^r} tr(XY).
class JetLieAlgebra {
public:
    explicit JetLieAlgebra(const JetGroup& g) : g_(&g), R_(&g.ring()), M_{&g.ring()} {}

    const JetGroup& group() const { return *g_; }
    const JetRing& ring() const { return *R_; }
    i64 size() const { return ipow(R_->size(), 3); }
    /// dim over F_q
    int dimension() const { return 3 * (R_->depth() + 1); }

    i64 encode(const JetMatrix& x) const {
        const i64 s = R_->size();
        return x[0] + s * (x[1] + s * static_cast<i64>(x[2]));
    }
    JetMatrix decode(i64 code) const {
        const i64 s = R_->size();
        int a = static_cast<int>(code % s), b = static_cast<int>((code / s) % s), c = static_cast<int>(code / (s * s));
        return {a, b, c, R_->neg(a)};
    }
    bool is_traceless(const JetMatrix& x) const { return M_.trace(x) == 0; }

    JetMatrix adjoint(int g, const JetMatrix& x) const {
        return M_.mul(M_.mul(g_->matrix(g), x), g_->matrix(g_->inv(g)));
    }
    /// <X, Y> in F_p.
    int pairing(const JetMatrix& x, const JetMatrix& y) const {
        return R_->field().trace(R_->coeff(M_.trace(M_.mul(x, y)), R_->depth()));
    }
    const JetMat& mat() const { return M_; }

private:
    const JetGroup* g_;
    const JetRing* R_;
    JetMat M_;
};

/// X*_r = sum_k t^k c_k E with theta(exp Y) = psi0(lambda <X*_r, Y>) on Lie(T_{0+}).
struct DualElement {
    JetMatrix x{};
    std::vector<int> coefficients;  // c_0 .. c_r (field codes)
    bool regular = false;           // distinct eigenvalues mod t
    int solutions = 0;              // number of c-vectors satisfying the system
};

inline DualElement generic_dual_element(const ZeroToralDatum& d, int lambda = 1) {
    const JetGroup& g = d.group();
    const JetRing& R = g.ring();
    const FiniteField& F = R.field();
    const int r = d.depth(), q = d.q(), p = d.p();
    if (p < 5) throw InvalidInput("generic dual element needs p >= 5");
    if (mod(lambda, p) == 0) throw InvalidInput("rescaling of psi0 must be nonzero mod p");
    JetLieAlgebra lie(g);
    const LayerAlgebra L{&F, F.least_nonsquare()};
    const auto& T = d.torus().subgroup();
    std::vector<JetMatrix> logs;
    std::vector<i64> expo;
    for (int l : d.torus().plus()) {
        logs.push_back(truncated_log(R, g.matrix(T.to_parent(l))));
        expo.push_back(d.theta.expo[l]);
    }
    const i64 N = d.theta.N;
    DualElement out;
    const i64 total = ipow(q, r + 1);
    bool found = false;
    for (i64 code = 0; code < total; ++code) {
        std::vector<int> c(r + 1);
        i64 rest = code;
        for (int k = 0; k <= r; ++k) {
            c[k] = static_cast<int>(rest % q);
            rest /= q;
        }
        JetMatrix x{0, 0, 0, 0};
        JetMat M{&R};
        for (int k = 0; k <= r; ++k) x = M.add(x, M.from_layer(L.scale(c[k], L.E()), k));
        bool ok = true;
        for (size_t i = 0; i < logs.size() && ok; ++i) {
            // theta = E(N)^expo must equal psi0(lambda <x, Y>) = E(N)^{(N/p) lambda <x,Y>}
            i64 e = (N / p) * mod(static_cast<i64>(lambda) * lie.pairing(x, logs[i]), p);
            if (mod(e - expo[i], N) != 0) ok = false;
        }
        if (!ok) continue;
        ++out.solutions;
        // c_r pairs to zero with Lie(T_{0+}); the enumeration order makes the first hit the c_r = 0 representative
        if (!found) {
            out.x = x;
            out.coefficients = c;
            found = true;
        }
    }
    if (!found) throw VerificationFailure("no dual element represents theta on T_{0+}: theta not of the assumed shape");
    JetMatrix x0 = lie.mat().layer(out.x, 0);
    int tr = F.add(x0[0], x0[3]);
    int det = F.sub(F.mul(x0[0], x0[3]), F.mul(x0[1], x0[2]));
    out.regular = F.sub(F.mul(tr, tr), F.mul(F.from_int(4), det)) != 0;
    return out;
}

struct CoadjointOrbit {
    JetMatrix base{};
    std::vector<i64> codes;  // sorted
    i64 stabilizer_order = 0;
    std::vector<JetMatrix> points;
    i64 size() const { return static_cast<i64>(codes.size()); }
    bool contains(i64 code) const { return std::binary_search(codes.begin(), codes.end(), code); }
};

inline CoadjointOrbit coadjoint_orbit(const JetLieAlgebra& lie, const JetMatrix& base) {
    const JetGroup& g = lie.group();
    CoadjointOrbit o;
    o.base = base;
    std::unordered_map<i64, char> seen;
    std::vector<JetMatrix> queue{base};
    seen[lie.encode(base)] = 1;
    for (size_t i = 0; i < queue.size(); ++i)
        for (int s : g.generators()) {
            JetMatrix y = lie.adjoint(s, queue[i]);
            if (seen.emplace(lie.encode(y), 1).second) queue.push_back(y);
        }
    for (const auto& x : queue) o.codes.push_back(lie.encode(x));
    std::sort(o.codes.begin(), o.codes.end());
    for (i64 c : o.codes) o.points.push_back(lie.decode(c));
    if (g.order() % o.size() != 0) throw VerificationFailure("orbit size does not divide |G|");
    o.stabilizer_order = g.order() / o.size();
    return o;
}

/// Brute-force stabilizer of a dual point.
inline std::vector<int> coadjoint_stabilizer(const JetLieAlgebra& lie, const JetMatrix& base) {
    std::vector<int> out;
    for (int x = 0; x < lie.group().order(); ++x)
        if (lie.adjoint(x, base) == base) out.push_back(x);
    return out;
}

/// Counts n_k = #{X in orbit : lambda <X, Y> = k}, so FT(1_orbit)(Y) = sum_k n_k zeta_p^k.
inline std::vector<i64> fourier_counts(const JetLieAlgebra& lie, const CoadjointOrbit& o, const JetMatrix& y, int lambda = 1) {
    const int p = lie.ring().field().p();
    std::vector<i64> n(p, 0);
    for (const auto& x : o.points) ++n[mod(static_cast<i64>(lambda) * lie.pairing(x, y), p)];
    return n;
}

inline Cyc fourier_indicator(const JetLieAlgebra& lie, const CoadjointOrbit& o, const JetMatrix& y, int lambda = 1) {
    return Cyc::from_root_counts(lie.ring().field().p(), fourier_counts(lie, o, y, lambda)).reduced();
}

/// sum_Y |FT(1_orbit)(Y)|^2 against |g_r| |orbit|.
struct ParsevalRecord {
    Cyc lhs;
    i64 rhs = 0;
    bool ok = false;
};

inline ParsevalRecord parseval_check(const JetLieAlgebra& lie, const CoadjointOrbit& o) {
    const int p = lie.ring().field().p();
    std::vector<i64> diff(p, 0);
    for (i64 code = 0; code < lie.size(); ++code) {
        auto n = fourier_counts(lie, o, lie.decode(code));
        for (int k = 0; k < p; ++k) {
            if (!n[k]) continue;
            for (int l = 0; l < p; ++l) diff[(k - l + p) % p] += n[k] * n[l];
        }
    }
    ParsevalRecord r;
    r.lhs = Cyc::from_root_counts(p, diff).reduced();
    r.rhs = lie.size() * o.size();
    r.ok = r.lhs == Cyc(r.rhs);
    return r;
}

struct LogExpRecord {
    i64 unipotents = 0;
    bool inverse_ok = true;
    bool equivariant_ok = true;
};

/// exp(log u) = u and log(s u s^-1) = Ad(s) log u for every topologically unipotent u and generator s.
inline LogExpRecord check_log_exp(const JetGroup& g) {
    const JetRing& R = g.ring();
    JetLieAlgebra lie(g);
    LogExpRecord rec;
    for (int u = 0; u < g.order(); ++u) {
        i64 o = element_order(g, u);
        while (o % g.p() == 0) o /= g.p();
        if (o != 1) continue;
        ++rec.unipotents;
        JetMatrix l = truncated_log(R, g.matrix(u));
        if (truncated_exp(R, l) != g.matrix(u)) rec.inverse_ok = false;
        for (int s : g.generators())
            if (truncated_log(R, g.matrix(conjugate(g, u, s))) != lie.adjoint(s, l)) rec.equivariant_ok = false;
    }
    return rec;
}

struct SpringerRecord {
    int global_sign = 0;
    double max_defect = 0;
    i64 orbit_size = 0;
    i64 stabilizer_order = 0;
    i64 factor = 0;  // q^{dim(G_r/T_r)/2}
    i64 elements_checked = 0;
    std::string worst_class;
    bool ok = false;
};

/// FT(1_orbit)(log u) = c q^{r+1} Q(u) for every topologically unipotent u, with one global c.
inline SpringerRecord springer_identity(const JetContext& ctx, const JetMatrix& dual, const GreenFunctionTable& Q, int lambda = 1) {
    const JetGroup& g = ctx.group();
    const auto& cc = ctx.classes();
    JetLieAlgebra lie(g);
    CoadjointOrbit o = coadjoint_orbit(lie, dual);
    SpringerRecord rec;
    rec.orbit_size = o.size();
    rec.stabilizer_order = o.stabilizer_order;
    rec.factor = ipow(ctx.q(), ctx.depth() + 1);
    SignTracker tr;
    for (int u = 0; u < g.order(); ++u) {
        const int c = cc.class_of(u);
        if (!cc.data().unipotent[c]) continue;
        Cyc lhs = fourier_indicator(lie, o, truncated_log(g.ring(), g.matrix(u)), lambda);
        Cyc rhs = Q.at_class(c).scaled(Rational(rec.factor));
        bool before = tr.ok;
        tr.observe(lhs, rhs);
        double defect = std::min(std::abs((lhs - rhs).to_complex()), std::abs((lhs + rhs).to_complex()));
        if (defect > rec.max_defect || (before && !tr.ok)) {
            rec.max_defect = std::max(rec.max_defect, defect);
            rec.worst_class = cc.data().names[c];
        }
        ++rec.elements_checked;
    }
    rec.global_sign = tr.sign;
    rec.ok = tr.ok && tr.sign != 0;
    if (!rec.ok && rec.max_defect == 0) rec.max_defect = 1;  // sign conflict between classes
    return rec;
}

inline SpringerRecord verify_springer(const YuPackage& pkg, int lambda = 1) {
    DualElement x = generic_dual_element(*pkg.datum, lambda);
    if (!x.regular) throw VerificationFailure("dual element is not regular");
    return springer_identity(pkg.ctx(), x.x, green_fks(pkg), lambda);
}

/// r = 0: orbit of E against a Green function extracted from the character table.
inline SpringerRecord verify_springer_depth_zero(const JetContext& ctx, const GreenFunctionTable& Q) {
    if (ctx.depth() != 0) throw InvalidInput("depth-zero Springer check needs r = 0");
    const FiniteField& F = ctx.group().ring().field();
    LayerAlgebra L{&F, F.least_nonsquare()};
    JetMat M{&ctx.group().ring()};
    return springer_identity(ctx, M.from_layer(L.E(), 0), Q);
}

}  // namespace jetrep
