#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jetrep/chartab/character_table.hpp"
#include "jetrep/chartab/litmus.hpp"
#include "jetrep/core/cyclotomic.hpp"
#include "jetrep/core/errors.hpp"
#include "jetrep/group/class_function.hpp"
#include "jetrep/springer/jet_lie.hpp"
#include "jetrep/yu/heisenberg_weil.hpp"
#include "jetrep/yu/jet_context.hpp"
#include "jetrep/yu/torus_character.hpp"

namespace jetrep {

/// 2x2 matrices over F_q (field codes), used for single t-adic layers.
using FieldMatrix = std::array<int, 4>;

struct LayerAlgebra {
    const FiniteField* F;
    int eps;  // least nonsquare

    FieldMatrix mul(const FieldMatrix& x, const FieldMatrix& y) const {
        return {F->add(F->mul(x[0], y[0]), F->mul(x[1], y[2])), F->add(F->mul(x[0], y[1]), F->mul(x[1], y[3])),
                F->add(F->mul(x[2], y[0]), F->mul(x[3], y[2])), F->add(F->mul(x[2], y[1]), F->mul(x[3], y[3]))};
    }
    FieldMatrix sub(const FieldMatrix& x, const FieldMatrix& y) const {
        return {F->sub(x[0], y[0]), F->sub(x[1], y[1]), F->sub(x[2], y[2]), F->sub(x[3], y[3])};
    }
    FieldMatrix scale(int c, const FieldMatrix& x) const { return {F->mul(c, x[0]), F->mul(c, x[1]), F->mul(c, x[2]), F->mul(c, x[3])}; }
    FieldMatrix bracket(const FieldMatrix& x, const FieldMatrix& y) const { return sub(mul(x, y), mul(y, x)); }
    int trace(const FieldMatrix& x) const { return F->add(x[0], x[3]); }
    FieldMatrix inverse_sl2(const FieldMatrix& x) const { return {x[3], F->neg(x[1]), F->neg(x[2]), x[0]}; }
    /// E = (0 eps; 1 0) spans the Lie algebra of the elliptic torus.
    FieldMatrix E() const { return {0, eps, 1, 0}; }
    /// tr(XE) / (2 eps): the E-coordinate of the projection to the torus.
    int torus_coordinate(const FieldMatrix& x) const { return F->mul(trace(mul(x, E())), F->inv(F->mul(F->from_int(2), eps))); }
};

enum class EpsilonMode { Trivial, Quadratic };

inline std::string epsilon_name(EpsilonMode m) { return m == EpsilonMode::Trivial ? "trivial" : "quadratic"; }
inline EpsilonMode parse_epsilon(const std::string& s) {
    if (s == "trivial") return EpsilonMode::Trivial;
    if (s == "quadratic") return EpsilonMode::Quadratic;
    throw InvalidInput("epsilon must be 'trivial' or 'quadratic', got '" + s + "'");
}

/// (T, theta) on SL2 at depth r >= 1 with theta 0-toral of depth exactly r.
struct ZeroToralDatum {
    std::shared_ptr<const JetContext> ctx;
    ThetaSpec spec;
    TorusCharacter theta;
    std::string certificate;

    const JetGroup& group() const { return ctx->group(); }
    const EllipticTorus& torus() const { return ctx->torus(); }
    int q() const { return ctx->q(); }
    int p() const { return ctx->p(); }
    int depth() const { return ctx->depth(); }
};

/// theta^w for w the nontrivial Weyl element (inversion on T).
inline ThetaSpec weyl_conjugate(const ThetaSpec& s, const FiniteField& F) {
    ThetaSpec w;
    w.a = -s.a;
    for (int b : s.b) w.b.push_back(F.neg(b));
    return w;
}

inline void validate_theta_spec(const JetContext& ctx, ThetaSpec& spec) {
    const int r = ctx.depth();
    const int q = ctx.q();
    if (static_cast<int>(spec.b.size()) > r)
        throw InvalidInput("theta spec has " + std::to_string(spec.b.size()) + " layer coefficients but the depth is " + std::to_string(r));
    for (int b : spec.b)
        if (b < 0 || b >= q) throw InvalidInput("theta layer coefficient " + std::to_string(b) + " is not a field code of F_" + std::to_string(q));
    spec.b.resize(r, 0);
    spec.a = mod(spec.a, q + 1);
}

inline ZeroToralDatum build_zero_toral_datum(std::shared_ptr<const JetContext> ctx, ThetaSpec spec) {
    const int p = ctx->p(), r = ctx->depth();
    if (p < 5) throw InvalidInput("0-toral data need p >= 5 (log/exp convergence)");
    if (r < 1 || r > 2) throw InvalidInput("supported depths are r = 1 and r = 2, got r = " + std::to_string(r));
    if (r == 2 && ctx->q() != p) throw InvalidInput("depth 2 needs q = p (Weil operators are built over F_p)");
    validate_theta_spec(*ctx, spec);
    ZeroToralDatum d{ctx, spec, TorusCharacter(ctx->torus(), spec), {}};
    if (!d.theta.is_homomorphism()) throw VerificationFailure("theta is not a character of T");
    if (!d.theta.nontrivial_on_deepest_layer())
        throw InvalidInput("theta " + spec.str() + " is trivial on T_r: depth below r (certificate fails)");
    d.certificate = "theta nontrivial on T_" + std::to_string(r) + " (b_" + std::to_string(r) + " = " + std::to_string(spec.b[r - 1]) + ")";
    return d;
}

inline ZeroToralDatum build_zero_toral_datum(int q, int p, int r, const ThetaSpec& spec) {
    if (p % 2 == 0) throw InvalidInput("p must be odd");
    auto pp = prime_power(q);
    if (!pp || pp->first != p) throw InvalidInput("q = " + std::to_string(q) + " is not a power of p = " + std::to_string(p));
    return build_zero_toral_datum(jet_context(q, r), spec);
}

/// Every theta_+ of depth exactly r (a = 0, b_r != 0).
inline std::vector<ThetaSpec> depth_r_plus_specs(const JetContext& ctx) {
    const int q = ctx.q(), r = ctx.depth();
    std::vector<ThetaSpec> out;
    i64 total = ipow(q, r);
    for (i64 code = 0; code < total; ++code) {
        ThetaSpec s;
        i64 c = code;
        for (int j = 0; j < r; ++j) {
            s.b.push_back(static_cast<int>(c % q));
            c /= q;
        }
        if (s.b[r - 1] != 0) out.push_back(s);
    }
    return out;
}

/// J/J_+ with the pairing <v, v'> = Tr(c0 tr(E [v, v'])) on layer-1 matrices in t^perp.
struct SymplecticQuotient {
    int dim = 0;  // over F_p
    LayerAlgebra L{nullptr, 0};
    int c0 = 0;             // b_r / (2 eps)
    FieldMatrix e1{}, e2{};  // basis of t^perp: H and (0 -eps; 1 0)
    int lambda = 0;          // <e1, e2>
    std::string note;

    int pair(const FieldMatrix& x, const FieldMatrix& y) const {
        return L.F->trace(L.F->mul(c0, L.trace(L.mul(L.E(), L.bracket(x, y)))));
    }
    /// Coordinates in the symplectic basis e = e1, f = e2 / lambda.
    std::array<int, 2> coords(const FieldMatrix& v) const {
        const int p = L.F->p();
        return {L.F->trace(v[0]) , static_cast<int>(mod(static_cast<i64>(L.F->trace(v[2])) * lambda, p))};
    }
};

inline SymplecticQuotient symplectic_structure(const ZeroToralDatum& d) {
    SymplecticQuotient V;
    const FiniteField& F = d.group().ring().field();
    V.L = LayerAlgebra{&F, F.least_nonsquare()};
    const int r = d.depth();
    V.c0 = F.mul(d.spec.b[r - 1], F.inv(F.mul(F.from_int(2), V.L.eps)));
    if (r % 2 == 1) {
        V.note = "integral jumps: J = G_{x,r/2} = G_{x,r/2+}, V = 0";
        return V;
    }
    if (F.degree() != 1) throw InvalidInput("symplectic structure at even depth is built for q = p only");
    V.dim = 2;
    V.e1 = {1, 0, 0, F.neg(1)};
    V.e2 = {0, F.neg(V.L.eps), 1, 0};
    V.lambda = V.pair(V.e1, V.e2);
    if (V.lambda == 0) throw VerificationFailure("degenerate form on J/J_+ (genericity violated)");
    V.note = "layer t^" + std::to_string(r / 2) + " of t^perp, dim_F_p = 2";
    return V;
}

/// Evaluates kappa on T.K_1: theta on the torus part, the Heisenberg-Weil trace on J when V != 0.
class KappaEvaluator {
public:
    KappaEvaluator(const ZeroToralDatum& d, EpsilonMode eps) : d_(&d), eps_(eps), V_(symplectic_structure(d)) {
        if (V_.dim > 0) {
            weil_ = std::make_shared<HeisenbergWeil>(d.p());
            const JetGroup& g = d.group();
            for (int k : d.torus().teichmuller()) {
                int tau = d.torus().subgroup().to_parent(k);
                JetMat M{&g.ring()};
                FieldMatrix tb = M.layer(g.matrix(tau), 0);
                FieldMatrix ti = V_.L.inverse_sl2(tb);
                auto ad = [&](const FieldMatrix& x) { return V_.coords(V_.L.mul(V_.L.mul(tb, x), ti)); };
                FieldMatrix f = V_.L.scale(V_.L.F->inv(V_.lambda), V_.e2);
                auto ce = ad(V_.e1), cf = ad(f);
                action_[tau] = weil_->norm({ce[0], cf[0], ce[1], cf[1]});
            }
        }
    }

    const SymplecticQuotient& symplectic() const { return V_; }
    std::shared_ptr<const HeisenbergWeil> weil() const { return weil_; }
    i64 weil_dimension() const { return V_.dim ? ipow(d_->p(), V_.dim / 2) : 1; }
    /// The Sp(V) matrix of conjugation by a Teichmuller element.
    HeisenbergWeil::Sp action(int tau) const { return action_.at(tau); }

    Cyc epsilon(int tau) const {
        if (eps_ == EpsilonMode::Trivial) return Cyc(1);
        int l = d_->torus().subgroup().to_local(tau);
        return Cyc(d_->torus().slog(l) % 2 ? -1 : 1);
    }

    Cyc operator()(int x) const {
        const JetGroup& g = d_->group();
        const JetRing& R = g.ring();
        const FiniteField& F = R.field();
        const LayerAlgebra& L = V_.L;
        JetMat M{&R};
        const int tau = d_->ctx->teichmuller_lift(x);
        if (tau < 0) throw InvalidInput("kappa: element is not in T.K_1");
        JetMatrix g1 = g.mat_mul(g.matrix(g.inv(tau)), g.matrix(x));
        FieldMatrix X = M.layer(g1, 1);
        int y = L.torus_coordinate(X);
        JetMatrix yE = M.from_layer(L.scale(y, L.E()), 1);
        JetMatrix t1 = truncated_exp(R, yE);
        int t1i = g.index_checked(t1);
        Cyc val = d_->theta.at(g.mul(tau, t1i)) * epsilon(tau);
        JetMatrix j = g.mat_mul(g.matrix(g.inv(t1i)), g1);
        FieldMatrix v = M.layer(j, 1);
        if (L.trace(L.mul(v, L.E())) != 0) throw VerificationFailure("kappa: J-part has a torus component");
        if (V_.dim == 0) {
            // J = J_+ = K_1 here, and the extension of theta is trivial on the t-perp part
            return val;
        }
        JetMatrix ev = truncated_exp(R, M.from_layer(v, 1));
        int evi = g.index_checked(ev);
        JetMatrix k = g.mat_mul(g.matrix(g.inv(evi)), j);
        FieldMatrix k2 = M.layer(k, 2);
        int z = F.trace(F.mul(V_.c0, L.trace(L.mul(L.E(), k2))));
        auto ab = V_.coords(v);
        return val * weil_->trace_weil_heisenberg(action_.at(tau), ab[0], ab[1], z);
    }

private:
    const ZeroToralDatum* d_;
    EpsilonMode eps_;
    SymplecticQuotient V_;
    std::shared_ptr<HeisenbergWeil> weil_;
    std::map<int, HeisenbergWeil::Sp> action_;
};

/// The FKS-Yu parahoric package: circ K = T.K_1, kappa on it, circ tau = Ind kappa.
struct YuPackage {
    std::shared_ptr<const ZeroToralDatum> datum;
    EpsilonMode epsilon = EpsilonMode::Trivial;
    std::shared_ptr<const KappaEvaluator> kappa_eval;
    i64 circ_k_order = 0;
    i64 index = 0;
    i64 weil_dimension = 1;
    ClassFunction kappa;
    ClassFunction circ_tau;

    const JetContext& ctx() const { return *datum->ctx; }
    Cyc degree() const { return circ_tau.degree(); }
    /// theta times epsilon: the torus character the construction actually sees.
    Cyc theta_eff(int t) const {
        return datum->theta.at(t) * (epsilon == EpsilonMode::Trivial ? Cyc(1) : kappa_eval->epsilon(ctx().teichmuller_lift(t)));
    }
};

inline YuPackage build_circ_tau(const ZeroToralDatum& d, EpsilonMode eps = EpsilonMode::Trivial) {
    YuPackage pkg;
    pkg.datum = std::make_shared<const ZeroToralDatum>(d);
    pkg.epsilon = eps;
    auto ke = std::make_shared<const KappaEvaluator>(*pkg.datum, eps);
    pkg.kappa_eval = ke;
    const JetContext& ctx = *d.ctx;
    const auto& K = ctx.circ_k();
    const auto& kc = ctx.circ_k_classes();
    pkg.circ_k_order = K.order();
    pkg.index = K.index();
    pkg.weil_dimension = ke->weil_dimension();
    pkg.kappa = class_function_from(kc, [&](int local) { return (*ke)(K.to_parent(local)).reduced(); });
    pkg.circ_tau = induce(kc, ctx.classes(), pkg.kappa);
    if (pkg.circ_tau.degree() != Cyc(pkg.index * pkg.weil_dimension))
        throw VerificationFailure("circ tau degree differs from [G : circ K] p^{dim V/2}");
    return pkg;
}

/// Green function: circ tau restricted to the unipotent classes.
struct GreenFunctionTable {
    std::shared_ptr<const ClassData> classes;
    std::vector<int> unipotent;  // class indices
    std::vector<Cyc> values;     // parallel to unipotent
    std::string provenance;

    int size() const { return static_cast<int>(unipotent.size()); }
    Cyc at_class(int c) const {
        for (int i = 0; i < size(); ++i)
            if (unipotent[i] == c) return values[i];
        throw InvalidInput("green function: class is not unipotent");
    }
    Cyc at_identity() const { return at_class(0); }
    friend bool operator==(const GreenFunctionTable& a, const GreenFunctionTable& b) {
        return a.unipotent == b.unipotent && a.values == b.values;
    }
    GreenFunctionTable scaled(int sign) const {
        GreenFunctionTable t = *this;
        for (auto& v : t.values) v = v.scaled(Rational(sign));
        return t;
    }
};

inline GreenFunctionTable green_from_class_function(const ClassFunction& f, const ClassData& d, std::string provenance) {
    GreenFunctionTable t;
    t.classes = f.shared_domain();
    t.provenance = std::move(provenance);
    for (int c = 0; c < d.count(); ++c)
        if (d.unipotent[c]) {
            t.unipotent.push_back(c);
            t.values.push_back(f[c]);
        }
    return t;
}

inline GreenFunctionTable green_fks(const YuPackage& pkg) {
    std::vector<int> b = pkg.datum->spec.b;
    std::string prov = "theta_+ b = (";
    for (size_t i = 0; i < b.size(); ++i) prov += (i ? "," : "") + std::to_string(b[i]);
    return green_from_class_function(pkg.circ_tau, pkg.ctx().classes().data(), prov + ")");
}

/// sum of f(t) over t in T, bucketed by the G-class of t.
template <class F>
std::vector<Cyc> torus_class_sums(const JetContext& ctx, F&& f) {
    const auto& T = ctx.torus().subgroup();
    std::vector<Cyc> acc(ctx.classes().count());
    for (int t : T.elements()) acc[ctx.classes().class_of(t)] += f(t);
    for (auto& a : acc) a = a.reduced();
    return acc;
}

/// Finds c in {+1,-1} with lhs = c rhs, remembering the first choice; false on conflict.
struct SignTracker {
    int sign = 0;
    bool ok = true;
    void observe(const Cyc& lhs, const Cyc& rhs) {
        if (lhs == rhs && lhs.is_zero()) return;
        int s = 0;
        if (lhs == rhs) s = 1;
        else if (lhs == -rhs) s = -1;
        if (s == 0 || (sign != 0 && s != sign)) {
            ok = false;
            return;
        }
        sign = s;
    }
};

struct CharFormulaReport {
    bool ok = false;
    int central_sign = 0;  // sign on s = +-1 (1 by the definition of Q)
    int regular_sign = 0;  // global sign on regular semisimple parts
    i64 elements_checked = 0;
    double max_defect = 0;
    std::string worst_class;
    std::vector<Cyc> rhs;  // per class
};

/// Theta(g) against theta(s) Q(u) for central s and sum_{t in T ~ g} theta(t) for regular s, at every element.
inline CharFormulaReport verify_char_formula(const YuPackage& pkg, const GreenFunctionTable& Q) {
    const JetContext& ctx = pkg.ctx();
    const JetGroup& g = ctx.group();
    const auto& cc = ctx.classes();
    const auto& d = cc.data();
    auto acc = torus_class_sums(ctx, [&](int t) { return pkg.theta_eff(t); });
    CharFormulaReport rep;
    rep.rhs.assign(cc.count(), Cyc());
    SignTracker central, regular;
    std::vector<char> seen(cc.count(), 0);
    for (int x = 0; x < g.order(); ++x) {
        auto [s, u] = topological_jordan(g, x);
        const int c = cc.class_of(x);
        Cyc rhs;
        bool is_central = ctx.is_central(s);
        if (is_central) {
            rhs = pkg.theta_eff(s) * Q.at_class(cc.class_of(u));
        } else {
            if (!d.regular_semisimple[cc.class_of(s)]) throw InvalidInput("unsupported centralizer shape at " + d.names[c]);
            rhs = acc[c];
        }
        rhs = rhs.reduced();
        const Cyc& lhs = pkg.circ_tau[c];
        SignTracker& tr = is_central ? central : regular;
        bool before = tr.ok;
        tr.observe(lhs, rhs);
        if (before && !tr.ok) rep.worst_class = d.names[c];
        double defect = std::min(std::abs((lhs - rhs).to_complex()), std::abs((lhs + rhs).to_complex()));
        if (defect > rep.max_defect) {
            rep.max_defect = defect;
            rep.worst_class = d.names[c];
        }
        if (!seen[c]) {
            rep.rhs[c] = rhs;
            seen[c] = 1;
        }
        ++rep.elements_checked;
    }
    rep.central_sign = central.sign;
    rep.regular_sign = regular.sign;
    rep.ok = central.ok && regular.ok && central.sign == 1 && rep.max_defect < 1e-9;
    return rep;
}

struct DescentReport {
    bool ok = false;
    int semisimple_checked = 0;
    i64 pairs_checked = 0;
    std::vector<std::string> notes;
};

/// kappa(su) = lambda_s * kappa_s(u) with lambda_s a constant unit, for s Teichmuller and u unipotent in C_{circ K}(s).
inline DescentReport verify_descent(const YuPackage& pkg) {
    const JetContext& ctx = pkg.ctx();
    const JetGroup& g = ctx.group();
    const auto& K = ctx.circ_k();
    const KappaEvaluator& kappa = *pkg.kappa_eval;
    DescentReport rep;
    rep.ok = true;
    std::vector<int> unip;
    for (int l = 0; l < K.order(); ++l) {
        int x = K.to_parent(l);
        i64 o = element_order(g, x);
        while (o % g.p() == 0) o /= g.p();
        if (o == 1) unip.push_back(x);
    }
    for (int k : ctx.torus().teichmuller()) {
        int s = ctx.torus().subgroup().to_parent(k);
        bool central = ctx.is_central(s);
        std::optional<Cyc> lambda;
        bool ok = true;
        for (int u : unip) {
            if (g.mul(s, u) != g.mul(u, s)) continue;
            Cyc ref = central ? kappa(u) : pkg.datum->theta.at(u);
            Cyc lhs = kappa(g.mul(s, u));
            ++rep.pairs_checked;
            if (ref.is_zero()) {
                if (!lhs.is_zero()) ok = false;
                continue;
            }
            Cyc ratio = (lhs / ref).reduced();
            if (!lambda) lambda = ratio;
            else if (*lambda != ratio) ok = false;
        }
        if (!lambda || (*lambda * lambda->conj()).reduced() != Cyc(1)) ok = false;
        ++rep.semisimple_checked;
        if (!ok) {
            rep.ok = false;
            rep.notes.push_back("descent fails at s = " + g.str(s));
        }
    }
    return rep;
}

struct VeryRegularReport {
    bool ok = false;
    int sign = 0;
    int classes_checked = 0;
};

/// circ tau on very regular classes against c * sum_w theta^w (0 when the class misses T).
inline VeryRegularReport very_regular_check(const ClassFunction& f, const JetContext& ctx, const std::vector<Cyc>& torus_sums) {
    const auto& d = ctx.classes().data();
    VeryRegularReport rep;
    SignTracker tr;
    for (int c = 0; c < d.count(); ++c) {
        if (!d.very_regular[c]) continue;
        tr.observe(f[c], torus_sums[c]);
        ++rep.classes_checked;
    }
    rep.sign = tr.sign;
    rep.ok = tr.ok && tr.sign != 0;
    return rep;
}

inline VeryRegularReport very_regular_check(const YuPackage& pkg) {
    return very_regular_check(pkg.circ_tau, pkg.ctx(), torus_class_sums(pkg.ctx(), [&](int t) { return pkg.theta_eff(t); }));
}

struct OrthogonalityReport {
    Cyc lhs, rhs;
    bool ok = false;
};

/// sum_u Q(u) conj Q'(u) = |G|/|T|^2 sum_{n in N(T)} sum_{u in T+} theta(u) conj theta'(n u n^-1).
inline OrthogonalityReport orthogonality_from(const JetContext& ctx, const GreenFunctionTable& Q1, const GreenFunctionTable& Q2,
                                              const std::vector<Cyc>& theta1_plus, const std::vector<Cyc>& theta2_torus) {
    const auto& cc = ctx.classes();
    const auto& T = ctx.torus().subgroup();
    const JetGroup& g = ctx.group();
    if (Q1.unipotent != Q2.unipotent) throw InvalidInput("orthogonality: green functions on different class sets");
    OrthogonalityReport rep;
    for (int i = 0; i < Q1.size(); ++i) rep.lhs += (Q1.values[i] * Q2.values[i].conj()).scaled(Rational(cc.size(Q1.unipotent[i])));
    Cyc s;
    const auto& plus = ctx.torus().plus();
    for (int n : ctx.normalizer())
        for (size_t i = 0; i < plus.size(); ++i) {
            int u = T.to_parent(plus[i]);
            int v = T.to_local(conjugate(g, u, n));
            s += theta1_plus[i] * theta2_torus[v].conj();
        }
    rep.rhs = s.scaled(Rational(g.order(), T.order() * T.order()));
    rep.lhs = rep.lhs.reduced();
    rep.rhs = rep.rhs.reduced();
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

inline OrthogonalityReport orthogonality_check(const YuPackage& a, const YuPackage& b) {
    if (a.datum->ctx != b.datum->ctx) throw InvalidInput("orthogonality: packages on different groups");
    const JetContext& ctx = a.ctx();
    const auto& T = ctx.torus().subgroup();
    std::vector<Cyc> t1;
    for (int l : ctx.torus().plus()) t1.push_back(a.datum->theta.value(l));
    std::vector<Cyc> t2;
    for (int l = 0; l < T.order(); ++l) t2.push_back(b.datum->theta.value(l));
    return orthogonality_from(ctx, green_fks(a), green_fks(b), t1, t2);
}

struct ReconstructionReport {
    ClassFunction r_prime;
    int sign_vs_circ_tau = 0;  // R' = sign * circ tau, 0 if no such sign
    Cyc self_inner;
    bool very_regular_pattern = false;  // R' = + sum_w theta^w on very regular classes
    bool ok = false;
};

/// R'(su) = theta(s) Q(u) for central s and sum_{t in T ~ su} theta(t) for regular s.
inline ClassFunction assemble_dl_character(const JetContext& ctx, const GreenFunctionTable& Q, const std::vector<Cyc>& torus_sums,
                                           const std::function<Cyc(int)>& theta) {
    const JetGroup& g = ctx.group();
    const auto& cc = ctx.classes();
    std::vector<Cyc> v(cc.count());
    for (int c = 0; c < cc.count(); ++c) {
        auto [s, u] = topological_jordan(g, cc.rep(c));
        if (ctx.is_central(s)) v[c] = (theta(s) * Q.at_class(cc.class_of(u))).reduced();
        else if (cc.data().regular_semisimple[cc.class_of(s)]) v[c] = torus_sums[c];
        else throw InvalidInput("unsupported centralizer shape at " + cc.data().names[c]);
    }
    return ClassFunction(cc.shared(), std::move(v));
}

/// Q := sign * green_fks, with sign the regular-part sign of the character formula.
inline ReconstructionReport reconstruct_dl_character(const YuPackage& pkg, int sign) {
    const JetContext& ctx = pkg.ctx();
    auto sums = torus_class_sums(ctx, [&](int t) { return pkg.theta_eff(t); });
    GreenFunctionTable Q = green_fks(pkg).scaled(sign);
    ReconstructionReport rep{assemble_dl_character(ctx, Q, sums, [&](int s) { return pkg.theta_eff(s); }), 0, Cyc(), false, false};
    if (rep.r_prime == pkg.circ_tau) rep.sign_vs_circ_tau = 1;
    else if (rep.r_prime == Cyc(-1) * pkg.circ_tau) rep.sign_vs_circ_tau = -1;
    rep.self_inner = inner_product(rep.r_prime, rep.r_prime);
    auto vr = very_regular_check(rep.r_prime, ctx, sums);
    rep.very_regular_pattern = vr.ok && vr.sign == 1;
    rep.ok = rep.sign_vs_circ_tau != 0 && rep.self_inner == Cyc(1) && rep.very_regular_pattern;
    return rep;
}

/// Pattern sum_w theta^w on very regular classes, for matching against a computed character table of the jet group.
inline Pattern very_regular_pattern(const JetContext& ctx, const std::function<Cyc(int)>& theta) {
    auto sums = torus_class_sums(ctx, theta);
    const auto& d = ctx.classes().data();
    Pattern pat;
    for (int c = 0; c < d.count(); ++c)
        if (d.very_regular[c]) {
            pat.classes.push_back(d.names[c]);
            pat.values.push_back(sums[c]);
        }
    return pat;
}

// ---------------------------------------------------------------- depth zero

/// Depth-zero Green function of the elliptic torus from a character table: Q = c chi on unipotents, where chi is
/// the unique row matching c * (theta + theta^w) on very regular classes for a regular theta.
struct DepthZeroGreen {
    GreenFunctionTable Q;
    int matched_row = -1;
    int sign = 0;
};

inline DepthZeroGreen depth_zero_green_from_table(const JetContext& ctx, const CharacterTable& tab, i64 a_regular) {
    if (ctx.depth() != 0) throw InvalidInput("depth-zero Green function needs r = 0");
    TorusCharacter theta(ctx.torus(), ThetaSpec{a_regular, {}});
    if (theta.weyl_fixed()) throw InvalidInput("depth-zero Green function needs a regular theta");
    auto all = litmus_match(tab, very_regular_pattern(ctx, [&](int t) { return theta.at(t); }));
    // the litmus can be ambiguous when the Henniart bound fails (q = 5); R_T(theta)(1) = +-|G|_{p'}/|T| decides
    const JetGroup& g = ctx.group();
    i64 ppart = 1;
    for (i64 n = g.order(); n % g.p() == 0; n /= g.p()) ppart *= g.p();
    const i64 deg = g.order() / ppart / ctx.torus().order();
    std::vector<LitmusHit> hits;
    for (const auto& h : all)
        if (tab.rows[h.row].degree() == Cyc(deg)) hits.push_back(h);
    if (hits.size() != 1) throw VerificationFailure("depth-zero litmus match is not unique");
    DepthZeroGreen out;
    out.matched_row = hits[0].row;
    out.sign = hits[0].sign;
    out.Q = green_from_class_function(Cyc(out.sign) * tab.rows[hits[0].row], *tab.classes, "depth zero, row " + hits[0].name);
    return out;
}

/// Depth-zero R_T(theta) from theta and Q.
inline ClassFunction depth_zero_dl_character(const JetContext& ctx, const GreenFunctionTable& Q, i64 a) {
    TorusCharacter theta(ctx.torus(), ThetaSpec{a, {}});
    auto sums = torus_class_sums(ctx, [&](int t) { return theta.at(t); });
    return assemble_dl_character(ctx, Q, sums, [&](int s) { return theta.at(s); });
}

inline OrthogonalityReport depth_zero_orthogonality(const JetContext& ctx, const GreenFunctionTable& Q) {
    const auto& T = ctx.torus().subgroup();
    std::vector<Cyc> one_plus(ctx.torus().plus().size(), Cyc(1));
    std::vector<Cyc> one_t(T.order(), Cyc(1));
    return orthogonality_from(ctx, Q, Q, one_plus, one_t);
}

}  // namespace jetrep
