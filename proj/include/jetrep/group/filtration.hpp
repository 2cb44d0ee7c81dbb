#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/core/rational.hpp"
#include "jetrep/group/classes.hpp"
#include "jetrep/group/jet_group.hpp"
#include "jetrep/group/subgroup.hpp"

namespace jetrep {

using JetSubgroup = Subgroup<JetGroup>;

/// A Moy-Prasad depth s or s+.
struct Depth {
    Rational value;
    bool plus = false;

    static Depth parse(const std::string& text) {
        std::string s = text;
        bool plus = false;
        if (!s.empty() && s.back() == '+') { plus = true; s.pop_back(); }
        if (s.empty()) throw InvalidInput("empty depth");
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return {Rational(std::stoll(s)), plus};
            return {Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))), plus};
        } catch (const std::logic_error&) {
            throw InvalidInput("cannot parse depth '" + text + "'");
        }
    }
    /// Congruence level k: G_{x,s} maps onto the kernel of reduction mod t^k.
    int level() const {
        i64 n = value.num(), d = value.den();
        i64 fl = n >= 0 ? n / d : -((-n + d - 1) / d);
        i64 ce = (n % d == 0) ? fl : fl + 1;
        return static_cast<int>(plus ? fl + 1 : ce);
    }
    std::string str() const { return value.str() + (plus ? "+" : ""); }
};

/// Image of G_{x,s} in the jet group at the hyperspecial point.
inline JetSubgroup moy_prasad(const JetGroup& g, const Depth& s) {
    if (s.value < Rational(0) || s.value > Rational(g.depth() + 1))
        throw InvalidInput("depth " + s.str() + " outside [0, r+1]");
    int k = std::min(s.level(), g.depth() + 1);
    return JetSubgroup::from_predicate(g, [&](int x) { return g.in_congruence_kernel(x, k); }, "G_" + s.str());
}

enum class TorusKind { Split, Elliptic };

inline std::string torus_name(TorusKind k) { return k == TorusKind::Split ? "split" : "elliptic"; }

/// Constant ring element epsilon (least nonsquare of F_q) used for the elliptic torus.
inline int elliptic_parameter(const JetGroup& g) { return g.ring().constant(g.ring().field().least_nonsquare()); }

/// Matrix x + y*[[0,eps],[1,0]].
inline JetMatrix elliptic_matrix(const JetGroup& g, int x, int y) {
    const JetRing& R = g.ring();
    return {x, R.mul(elliptic_parameter(g), y), y, x};
}

/// Split (diagonal) or elliptic (norm-one / unit norm of the unramified quadratic extension) torus.
inline JetSubgroup torus_subgroup(const JetGroup& g, TorusKind kind) {
    const JetRing& R = g.ring();
    std::vector<int> elems;
    const int S = R.size();
    if (kind == TorusKind::Split) {
        for (int a = 0; a < S; ++a) {
            if (!R.is_unit(a)) continue;
            if (g.kind() == GroupKind::SL2) {
                elems.push_back(g.index_checked({a, 0, 0, R.inv(a)}));
            } else {
                for (int d = 0; d < S; ++d)
                    if (R.is_unit(d)) elems.push_back(g.index_checked({a, 0, 0, d}));
            }
        }
    } else {
        for (int x = 0; x < S; ++x)
            for (int y = 0; y < S; ++y) {
                JetMatrix m = elliptic_matrix(g, x, y);
                int i = g.index_of(m);
                if (i >= 0) elems.push_back(i);
            }
    }
    return JetSubgroup(g, std::move(elems), torus_name(kind));
}

/// Root value test on a torus element t: alpha(t) != 1 modulo t (residue field).
inline bool torus_element_very_regular(const JetGroup& g, int t) {
    // eigenvalue ratio != 1 in the residue field <=> discriminant of the reduction is nonzero
    const JetMatrix& m = g.matrix(t);
    const FiniteField& F = g.ring().field();
    int tr = F.add(g.ring().coeff(m[0], 0), g.ring().coeff(m[3], 0));
    int det = F.sub(F.mul(g.ring().coeff(m[0], 0), g.ring().coeff(m[3], 0)),
                    F.mul(g.ring().coeff(m[1], 0), g.ring().coeff(m[2], 0)));
    return F.sub(F.mul(tr, tr), F.mul(F.from_int(4), det)) != 0;
}

/// Very regular elements (those conjugate into T with very regular T-part) with conjugators c, c x c^{-1} in T.
struct VeryRegularSet {
    std::vector<int> elements;     // ascending
    std::vector<int> conjugator;   // parallel to elements
    std::vector<int> in_torus;     // the T-elements that are very regular
    bool contains(int x) const { return std::binary_search(elements.begin(), elements.end(), x); }
};

inline VeryRegularSet very_regular_elements(const JetGroup& g, const JetSubgroup& T) {
    VeryRegularSet out;
    std::vector<int> conj(static_cast<size_t>(g.order()), -1);
    std::vector<int> queue;
    for (int t : T.elements())
        if (torus_element_very_regular(g, t)) {
            out.in_torus.push_back(t);
            conj[t] = g.identity();
            queue.push_back(t);
        }
    const auto& gens = g.generators();
    for (size_t i = 0; i < queue.size(); ++i) {
        int x = queue[i];
        for (int s : gens) {
            int y = g.mul(g.mul(s, x), g.inv(s));
            if (conj[y] < 0) {
                conj[y] = g.mul(conj[x], g.inv(s));
                queue.push_back(y);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    out.elements = queue;
    for (int x : queue) out.conjugator.push_back(conj[x]);
    return out;
}

/// Transporter N_G(T1, T2) = {n : n T1 n^{-1} in T2} and its cosets T2 n.
struct Transporter {
    std::vector<int> elements;
    std::vector<int> coset_reps;
    i64 coset_count() const { return static_cast<i64>(coset_reps.size()); }
};

template <FiniteGroup G>
Transporter weyl_transporter(const G& g, const Subgroup<G>& T1, const Subgroup<G>& T2) {
    Transporter out;
    std::vector<int> gens;
    for (int x : T1.generators()) gens.push_back(T1.to_parent(x));
    for (int n = 0; n < g.order(); ++n) {
        bool ok = true;
        for (int x : gens)
            if (!T2.contains(conjugate(g, x, n))) { ok = false; break; }
        if (ok) out.elements.push_back(n);
    }
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    for (int n : out.elements) {
        if (seen[n]) continue;
        out.coset_reps.push_back(n);
        for (int t : T2.elements()) seen[g.mul(t, n)] = 1;
    }
    return out;
}

/// Fills the jet-specific class flags: regular semisimple, very regular, torus memberships.
inline void annotate_jet_classes(const JetGroup& g, ConjugacyClasses<JetGroup>& cc) {
    auto d = cc.mutable_data();
    d->label = g.label();
    const int k = cc.count();
    d->regular_semisimple.assign(k, 0);
    d->very_regular.assign(k, 0);
    d->tori.assign(k, {});
    d->types.assign(k, "");
    for (int c = 0; c < k; ++c) {
        int x = cc.rep(c);
        bool central = true;
        for (int s : g.generators())
            if (g.mul(s, x) != g.mul(x, s)) { central = false; break; }
        d->regular_semisimple[c] = d->semisimple[c] && !central;
        d->very_regular[c] = torus_element_very_regular(g, topological_jordan(g, x).first);
        if (d->orders[c] == 1) d->types[c] = "unit";
        else if (d->regular_semisimple[c]) d->types[c] = "reg. ss.";
        else if (d->semisimple[c]) d->types[c] = "ss.";
        else if (d->unipotent[c]) d->types[c] = "unip.";
        else d->types[c] = "--";
    }
    for (TorusKind kind : {TorusKind::Split, TorusKind::Elliptic}) {
        JetSubgroup T = torus_subgroup(g, kind);
        std::vector<char> hit(k, 0);
        for (int t : T.elements()) hit[cc.class_of(t)] = 1;
        for (int c = 0; c < k; ++c)
            if (hit[c]) d->tori[c].push_back(torus_name(kind));
    }
}

}  // namespace jetrep
