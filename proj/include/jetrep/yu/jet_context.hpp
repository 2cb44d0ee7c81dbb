#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "jetrep/group/classes.hpp"
#include "jetrep/group/class_function.hpp"
#include "jetrep/group/filtration.hpp"
#include "jetrep/group/jet_group.hpp"
#include "jetrep/yu/torus_character.hpp"

namespace jetrep {

/// SL2(F_q[t]/t^{r+1}) with annotated classes, its elliptic torus and the subgroups every datum at this level shares.
class JetContext {
public:
    JetContext(int q, int r, i64 cap = kGroupCap) : g_(std::make_unique<JetGroup>(GroupKind::SL2, q, r, cap)) {
        cc_ = std::make_unique<ConjugacyClasses<JetGroup>>(*g_);
        annotate_jet_classes(*g_, *cc_);
        torus_ = std::make_unique<EllipticTorus>(*g_);
        const auto& T = torus_->subgroup();
        for (int k : torus_->teichmuller()) {
            int x = T.to_parent(k);
            lift_[g_->reduce(g_->matrix(x), 1)] = x;
        }
        minus_one_ = g_->index_checked({g_->ring().neg(1), 0, 0, g_->ring().neg(1)});
    }
    JetContext(const JetContext&) = delete;
    JetContext& operator=(const JetContext&) = delete;

    const JetGroup& group() const { return *g_; }
    const ConjugacyClasses<JetGroup>& classes() const { return *cc_; }
    const EllipticTorus& torus() const { return *torus_; }
    int q() const { return g_->q(); }
    int p() const { return g_->p(); }
    int depth() const { return g_->depth(); }
    int minus_one() const { return minus_one_; }
    bool is_central(int x) const { return x == g_->identity() || x == minus_one_; }

    /// The Teichmuller element of T with the same reduction mod t as x, or -1 when x mod t is not in T(F_q).
    int teichmuller_lift(int x) const {
        auto it = lift_.find(g_->reduce(g_->matrix(x), 1));
        return it == lift_.end() ? -1 : it->second;
    }

    /// T.K_1: elements whose reduction mod t lies in T(F_q).
    const JetSubgroup& circ_k() const {
        std::call_once(k_once_, [&] {
            circ_k_ = std::make_unique<JetSubgroup>(
                JetSubgroup::from_predicate(*g_, [&](int x) { return teichmuller_lift(x) >= 0; }, "T.K1"));
            circ_k_classes_ = std::make_unique<ConjugacyClasses<JetSubgroup>>(*circ_k_);
        });
        return *circ_k_;
    }
    const ConjugacyClasses<JetSubgroup>& circ_k_classes() const {
        circ_k();
        return *circ_k_classes_;
    }

    /// N_G(T) as a list of elements.
    const std::vector<int>& normalizer() const {
        std::call_once(n_once_, [&] { normalizer_ = weyl_transporter(*g_, torus_->subgroup(), torus_->subgroup()).elements; });
        return normalizer_;
    }

    /// Classes of unipotent (p-power order) elements.
    std::vector<int> unipotent_classes() const {
        std::vector<int> out;
        for (int c = 0; c < cc_->count(); ++c)
            if (cc_->data().unipotent[c]) out.push_back(c);
        return out;
    }

private:
    std::unique_ptr<JetGroup> g_;
    std::unique_ptr<ConjugacyClasses<JetGroup>> cc_;
    std::unique_ptr<EllipticTorus> torus_;
    std::map<JetMatrix, int> lift_;
    int minus_one_ = -1;
    mutable std::once_flag k_once_, n_once_;
    mutable std::unique_ptr<JetSubgroup> circ_k_;
    mutable std::unique_ptr<ConjugacyClasses<JetSubgroup>> circ_k_classes_;
    mutable std::vector<int> normalizer_;
};

/// Process-wide cache so that tests and CLI runs share one enumeration per (q, r).
inline std::shared_ptr<const JetContext> jet_context(int q, int r) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const JetContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{q, r}];
    if (!slot) slot = std::make_shared<const JetContext>(q, r);
    return slot;
}

}  // namespace jetrep
