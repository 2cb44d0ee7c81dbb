#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetrep/chartab/character_table.hpp"
#include "jetrep/core/errors.hpp"
#include "jetrep/group/class_function.hpp"
#include "jetrep/group/filtration.hpp"

namespace jetrep {

/// Least k such that chi is trivial on the kernel of reduction mod t^{k+1}.
inline Rational depth_of_irreducible(const JetGroup& g, const ConjugacyClasses<JetGroup>& cc, const ClassFunction& chi) {
    const Cyc deg = chi.degree();
    for (int k = 0; k <= g.depth(); ++k) {
        bool trivial = true;
        for (int c = 0; c < cc.count() && trivial; ++c)
            if (g.in_congruence_kernel(cc.rep(c), k + 1) && chi[c] != deg) trivial = false;
        if (trivial) return Rational(k);
    }
    return Rational(g.depth());
}

/// Values prescribed on a set of classes, addressed by class name.
struct Pattern {
    std::vector<std::string> classes;
    std::vector<Cyc> values;
    int size() const { return static_cast<int>(classes.size()); }
};

enum class SignMode { Both, PlusOnly };

struct LitmusHit {
    int row;
    std::string name;
    int sign;
};

/// Rows chi with chi = c * pattern on the pattern's classes for some c in {+1, -1}.
inline std::vector<LitmusHit> litmus_match(const CharacterTable& t, const Pattern& pat, SignMode mode = SignMode::Both) {
    std::vector<int> idx;
    for (const auto& name : pat.classes) {
        int c = t.classes->index_of(name);
        if (c < 0) throw InvalidInput("pattern class '" + name + "' is not in the table");
        idx.push_back(c);
    }
    std::vector<LitmusHit> out;
    for (int i = 0; i < t.size(); ++i) {
        for (int sign : {1, -1}) {
            if (sign < 0 && mode == SignMode::PlusOnly) break;
            bool ok = true;
            for (int j = 0; j < pat.size() && ok; ++j)
                if (t.rows[i][idx[j]] != pat.values[j].scaled(Rational(sign))) ok = false;
            if (ok) {
                out.push_back({i, t.row_names[i], sign});
                break;
            }
        }
    }
    return out;
}

/// sum_{t in T cap C} theta(t) on each class C of the locus (0 where C misses T).
inline Pattern torus_pattern(const ConjugacyClasses<JetGroup>& cc, const JetSubgroup& T,
                             const std::vector<Cyc>& theta_on_T, const std::vector<char>& locus) {
    std::vector<Cyc> acc(cc.count());
    for (int i = 0; i < T.order(); ++i) acc[cc.class_of(T.to_parent(i))] += theta_on_T[i];
    Pattern p;
    for (int c = 0; c < cc.count(); ++c) {
        if (!locus[c]) continue;
        p.classes.push_back(cc.data().names[c]);
        p.values.push_back(acc[c].reduced());
    }
    return p;
}

struct HenniartBoundRecord {
    Rational vreg_self_inner;
    Rational lower_bound;
    bool hypothesis_holds = false;  // lower_bound > 1/2
    bool hypothesis_empty = false;  // no very regular torus elements
    bool bound_satisfied = false;   // vreg_self_inner >= lower_bound
    std::string note;
};

/// <pi, pi> on the very regular locus against 1 - (|T_nvreg|/|T|) |W|.
inline HenniartBoundRecord henniart_bound_check(const ClassFunction& pi, const std::vector<char>& vreg_locus, i64 torus_order,
                                                i64 torus_nvreg, i64 weyl_order) {
    HenniartBoundRecord r;
    Cyc v = inner_product_on(pi, pi, vreg_locus);
    r.vreg_self_inner = v.rational();
    if (torus_nvreg >= torus_order) {
        r.hypothesis_empty = true;
        r.note = "hypothesis empty";
        r.lower_bound = Rational(0);
        r.bound_satisfied = true;
        return r;
    }
    r.lower_bound = Rational(1) - Rational(torus_nvreg, torus_order) * Rational(weyl_order);
    r.hypothesis_holds = r.lower_bound > Rational(1, 2);
    r.bound_satisfied = r.vreg_self_inner >= r.lower_bound;
    r.note = r.hypothesis_holds ? (r.bound_satisfied ? "bound holds" : "bound violated") : "hypothesis fails (bound <= 1/2), not asserted";
    return r;
}

}  // namespace jetrep
