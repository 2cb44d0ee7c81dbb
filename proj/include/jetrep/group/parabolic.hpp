#pragma once

#include <memory>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/group/class_function.hpp"
#include "jetrep/group/filtration.hpp"

namespace jetrep {

/// Standard Borel P = M N of a jet group at level r: M diagonal, N upper unipotent, K the kernel
/// mod t^{r+1}. I inflates along PK -> M/(M cap K) and induces; J averages over NK.
class ParabolicSetup {
public:
    ParabolicSetup(const JetGroup& g, int r) : g_(&g), r_(r) {
        if (r < 0 || r > g.depth()) throw InvalidInput("parabolic level r must lie in [0, depth of the group]");
        const JetRing& R = g.ring();
        M_ = std::make_unique<JetSubgroup>(torus_subgroup(g, TorusKind::Split));
        std::vector<int> n;
        for (int b = 0; b < R.size(); ++b) n.push_back(g.index_checked({1, b, 0, 1}));
        N_ = std::make_unique<JetSubgroup>(g, std::move(n), "N");
        K_ = std::make_unique<JetSubgroup>(
            JetSubgroup::from_predicate(g, [&](int x) { return g.in_congruence_kernel(x, r + 1); }, "K"));
        std::vector<int> pk, nk;
        for (int x = 0; x < g.order(); ++x) {
            const JetMatrix m = g.reduce(g.matrix(x), r + 1);
            if (m[2] != 0) continue;
            pk.push_back(x);
            if (m[0] == 1 && m[3] == 1) nk.push_back(x);
        }
        PK_ = std::make_unique<JetSubgroup>(g, std::move(pk), "PK");
        NK_ = std::make_unique<JetSubgroup>(g, std::move(nk), "NK");
        mc_ = std::make_unique<ConjugacyClasses<JetSubgroup>>(*M_);
        pkc_ = std::make_unique<ConjugacyClasses<JetSubgroup>>(*PK_);
        proj_.resize(static_cast<size_t>(PK_->order()));
        for (int i = 0; i < PK_->order(); ++i) proj_[i] = M_->to_local(levi_part(PK_->to_parent(i)));
    }

    const JetGroup& group() const { return *g_; }
    int level() const { return r_; }
    const JetSubgroup& M() const { return *M_; }
    const JetSubgroup& N() const { return *N_; }
    const JetSubgroup& K() const { return *K_; }
    const JetSubgroup& PK() const { return *PK_; }
    const JetSubgroup& NK() const { return *NK_; }
    const ConjugacyClasses<JetSubgroup>& m_classes() const { return *mc_; }
    const ConjugacyClasses<JetSubgroup>& pk_classes() const { return *pkc_; }

    /// Element of M representing the image of x in PK/NK.
    int levi_part(int x) const {
        const JetGroup& g = *g_;
        const JetRing& R = g.ring();
        const JetMatrix& m = g.matrix(x);
        int a = R.truncate(m[0], r_ + 1), d = R.truncate(m[3], r_ + 1);
        if (g.kind() == GroupKind::SL2) d = R.inv(a);
        return g.index_checked({a, 0, 0, d});
    }

    /// Throws unless sigma_M(m k) = sigma_M(m) for every k in M cap K.
    void check_depth(const ClassFunction& sigma_m) const {
        if (sigma_m.shared_domain() != mc_->shared()) throw InvalidInput("function is not on the Levi subgroup");
        const JetSubgroup& M = *M_;
        for (int k = 0; k < M.order(); ++k) {
            if (!K_->contains(M.to_parent(k))) continue;
            for (int m = 0; m < M.order(); ++m)
                if (sigma_m[mc_->class_of(M.mul(m, k))] != sigma_m[mc_->class_of(m)])
                    throw InvalidInput("depth mismatch: sigma_M is not trivial on the level-(r+) kernel of M");
        }
    }

    ClassFunction inflate(const ClassFunction& sigma_m) const {
        check_depth(sigma_m);
        std::vector<Cyc> v(pkc_->count());
        for (int c = 0; c < pkc_->count(); ++c) v[c] = sigma_m[mc_->class_of(proj_[pkc_->rep(c)])];
        return ClassFunction(pkc_->shared(), std::move(v));
    }

    const std::vector<int>& projection() const { return proj_; }

private:
    const JetGroup* g_;
    int r_;
    std::unique_ptr<JetSubgroup> M_, N_, K_, PK_, NK_;
    std::unique_ptr<ConjugacyClasses<JetSubgroup>> mc_, pkc_;
    std::vector<int> proj_;
};

/// I(sigma_M) = Ind_{PK}^G Inf sigma_M.
inline ClassFunction parabolic_induce_depth_r(const ParabolicSetup& ps, const ConjugacyClasses<JetGroup>& gc,
                                              const ClassFunction& sigma_m) {
    return induce(ps.pk_classes(), gc, ps.inflate(sigma_m));
}

/// J(sigma)(m) = (1/|NK|) sum_{y in NK} sigma(m y), a class function on M.
inline ClassFunction jacquet_depth_r(const ParabolicSetup& ps, const ConjugacyClasses<JetGroup>& gc,
                                     const ClassFunction& sigma) {
    if (sigma.shared_domain() != gc.shared()) throw InvalidInput("jacquet: function is not on the group");
    const JetGroup& g = ps.group();
    const JetSubgroup& M = ps.M();
    const auto& mc = ps.m_classes();
    std::vector<Cyc> v(mc.count());
    // per-class multiplicities, then one weighted sum
    std::vector<i64> hits(gc.count());
    for (int c = 0; c < mc.count(); ++c) {
        int m = M.to_parent(mc.rep(c));
        std::fill(hits.begin(), hits.end(), 0);
        for (int y : ps.NK().elements()) ++hits[gc.class_of(g.mul(m, y))];
        Cyc s;
        for (int k = 0; k < gc.count(); ++k)
            if (hits[k]) s += sigma[k].scaled(Rational(hits[k]));
        v[c] = s.scaled(Rational(1, ps.NK().order())).reduced();
    }
    return ClassFunction(mc.shared(), std::move(v));
}

}  // namespace jetrep
