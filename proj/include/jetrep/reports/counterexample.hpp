#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "jetrep/chartab/character_table.hpp"
#include "jetrep/chartab/litmus.hpp"
#include "jetrep/core/cyclotomic.hpp"
#include "jetrep/core/errors.hpp"
#include "jetrep/core/intmath.hpp"
#include "jetrep/reports/ctbl.hpp"
#include "jetrep/torus/torus_audit.hpp"

namespace jetrep {

/// |G| / (dim St * |T|), the degree of R_T(theta) up to sign.
inline i64 dl_dimension(i64 group_order, i64 steinberg_dim, i64 torus_order) {
    if (group_order <= 0 || steinberg_dim <= 0 || torus_order <= 0)
        throw InvalidInput("dl-dim: orders must be positive");
    const i64 den = steinberg_dim * torus_order;
    if (group_order % den != 0)
        throw InvalidInput("dl-dim: " + std::to_string(den) + " = St * |T| does not divide |G| = " + std::to_string(group_order) +
                           "; the inputs are inconsistent");
    return group_order / den;
}

/// Exponents of W from the heights of the positive roots.
inline std::vector<int> weyl_exponents(const RootSystemData& rs) {
    std::vector<int> per_height;
    for (const auto& r : rs.positive_roots_simple) {
        i64 h = 0;
        for (i64 c : r) h += c;
        if (static_cast<int>(per_height.size()) < h) per_height.resize(h, 0);
        ++per_height[h - 1];
    }
    // #exponents >= k equals #roots of height k
    std::vector<int> ex;
    for (int k = 1; k <= static_cast<int>(per_height.size()); ++k) {
        int next = k < static_cast<int>(per_height.size()) ? per_height[k] : 0;
        for (int i = 0; i < per_height[k - 1] - next; ++i) ex.push_back(k);
    }
    return ex;
}

/// |G(F_q)| = q^N prod (q^{d_i} - 1) for the split group of the root system.
inline i64 lie_type_order(const RootSystemData& rs, i64 q) {
    validate_q(q);
    i128 o = 1;
    for (size_t i = 0; i < rs.positive_roots_simple.size(); ++i) o *= q;
    for (int e : weyl_exponents(rs)) {
        i128 f = 1;
        for (int i = 0; i <= e; ++i) f *= q;
        o *= f - 1;
        if (o > static_cast<i128>(std::numeric_limits<i64>::max())) throw Overflow("group order exceeds 64 bits");
    }
    return static_cast<i64>(o);
}

inline i64 steinberg_dimension(const RootSystemData& rs, i64 q) {
    return ipow(q, static_cast<int>(rs.positive_roots_simple.size()));
}

inline i64 dl_dimension(const RootSystemData& rs, const WeylClassRep& wc, i64 q) {
    return dl_dimension(lie_type_order(rs, q), steinberg_dimension(rs, q), torus_order(rs, wc, q));
}

/// Inner products (1/|G|) sum_C |C| a(C) conj b(C) restricted to a locus of classes.
struct LocusInner {
    Cyc total, reg, nreg;
};

inline LocusInner locus_inner(const ClassFunction& a, const ClassFunction& b, const std::vector<char>& reg) {
    const ClassData& d = a.domain();
    LocusInner out;
    for (int c = 0; c < d.count(); ++c) {
        if (a[c].is_zero() || b[c].is_zero()) continue;
        Cyc v = (a[c] * b[c].conj()).scaled(Rational(d.sizes[c], d.group_order));
        (reg[c] ? out.reg : out.nreg) += v;
    }
    out.reg = out.reg.reduced();
    out.nreg = out.nreg.reduced();
    out.total = (out.reg + out.nreg).reduced();
    return out;
}

struct CounterexampleMatch {
    int row = -1;
    std::string name;
    int sign = 0;
    Cyc degree;
    bool unipotent = false;
    LocusInner with_dl;  // against the identified R_T(theta)
};

struct CounterexampleReport {
    std::string group;
    std::string torus;
    i64 theta = 0;  // theta(t) = E(n)^theta on the model generator t
    bool theta_regular = false;
    bool trivial_on_nreg = false;
    Pattern pattern;
    i64 steinberg = 0;
    i64 dl_degree = 0;
    int dl_row = -1;
    std::string dl_name;
    LocusInner dl_self;
    std::vector<CounterexampleMatch> matches;
    std::vector<std::string> non_unipotent;
    bool theorem_applies = false;
    bool theorem_ok = true;  // exactly one non-unipotent match, equal to the DL row, when it applies
    std::vector<std::string> notes;
};

/// |G|_p where p is read off the orders of the unipotent classes.
inline i64 steinberg_from_table(const ClassData& d) {
    i64 p = 0;
    for (int c = 0; c < d.count(); ++c) {
        if (!d.unipotent[c] || d.orders[c] == 1) continue;
        auto pp = prime_power(d.orders[c]);
        if (!pp) throw InvalidInput("unipotent class " + d.names[c] + " has order not a prime power");
        if (p && pp->first != p) throw InvalidInput("unipotent classes of different characteristics");
        p = pp->first;
    }
    if (!p) throw InvalidInput("table flags no unipotent class; cannot infer the characteristic");
    i64 s = 1, g = d.group_order;
    while (g % p == 0) {
        g /= p;
        s *= p;
    }
    return s;
}

/// sum_{w in W_T} theta^w on every regular semisimple class along the torus model, 0 on the other regular semisimple classes.
inline Pattern weyl_sum_pattern(const ClassData& d, const TorusModel& m, i64 theta) {
    const int W = m.weyl_order();
    std::vector<Cyc> value(d.count());
    std::vector<char> seen(d.count(), 0);
    for (int k = 0; k < m.order; ++k) {
        int c = d.index_of(m.power_classes[k]);
        if (!d.regular_semisimple[c]) continue;
        Cyc s;
        i64 e = 1;
        for (int i = 0; i < W; ++i) {
            s += Cyc::E(m.order, mod(theta * k % m.order * e, m.order));
            e = mod(e * m.weyl_multiplier, m.order);
        }
        s = s.reduced();
        if (seen[c] && value[c] != s)
            throw VerificationFailure("torus model " + m.name + ": class " + d.names[c] + " carries two different Weyl sums");
        value[c] = s;
        seen[c] = 1;
    }
    Pattern p;
    for (int c = 0; c < d.count(); ++c) {
        if (!d.regular_semisimple[c]) continue;
        if (!seen[c] && d.meets_torus(c, m.name))
            throw InvalidInput("class " + d.names[c] + " lists torus " + m.name + " but the model never reaches it");
        p.classes.push_back(d.names[c]);
        p.values.push_back(value[c]);
    }
    return p;
}

inline CounterexampleReport search_counterexamples(const CharacterTable& t, const TorusModel& m, i64 theta) {
    const ClassData& d = *t.classes;
    if (d.regular_semisimple.size() != static_cast<size_t>(d.count()) || d.tori.size() != static_cast<size_t>(d.count()))
        throw InvalidInput("search needs regular-semisimple flags and torus memberships on every class");
    if (t.unipotent_rows.size() != static_cast<size_t>(t.size())) throw InvalidInput("search needs the unipotent row flags");
    CounterexampleReport rep;
    rep.group = d.label;
    rep.torus = m.name;
    rep.theta = mod(theta, m.order);
    const int W = m.weyl_order();
    rep.theta_regular = true;
    {
        i64 e = m.weyl_multiplier;
        for (int i = 1; i < W; ++i, e = mod(e * m.weyl_multiplier, m.order))
            if (mod(rep.theta * e - rep.theta, m.order) == 0) rep.theta_regular = false;
    }
    rep.trivial_on_nreg = true;
    for (int k = 0; k < m.order; ++k)
        if (!d.regular_semisimple[d.index_of(m.power_classes[k])] && mod(rep.theta * k, m.order) != 0) rep.trivial_on_nreg = false;
    rep.pattern = weyl_sum_pattern(d, m, rep.theta);
    for (const auto& h : litmus_match(t, rep.pattern, SignMode::Both)) {
        CounterexampleMatch cm;
        cm.row = h.row;
        cm.name = h.name;
        cm.sign = h.sign;
        cm.degree = t.rows[h.row].degree();
        cm.unipotent = t.row_is_unipotent(h.row);
        rep.matches.push_back(cm);
    }
    rep.steinberg = steinberg_from_table(d);
    rep.dl_degree = dl_dimension(d.group_order, rep.steinberg, m.order);
    // R_T(theta) agrees with +pattern on the regular semisimple locus for an elliptic torus of a split group
    for (const auto& cm : rep.matches)
        if (cm.degree == Cyc(rep.dl_degree) && cm.sign == 1 && !cm.unipotent) {
            if (rep.dl_row >= 0) rep.notes.push_back("several rows of degree " + std::to_string(rep.dl_degree) + " match");
            if (rep.dl_row < 0) {
                rep.dl_row = cm.row;
                rep.dl_name = cm.name;
            }
        }
    if (rep.dl_row >= 0) {
        const ClassFunction& R = t.rows[rep.dl_row];
        rep.dl_self = locus_inner(R, R, d.regular_semisimple);
        for (auto& cm : rep.matches) cm.with_dl = locus_inner(t.rows[cm.row], R, d.regular_semisimple);
    } else {
        rep.notes.push_back("no matching row has the Deligne-Lusztig degree " + std::to_string(rep.dl_degree));
    }
    for (const auto& cm : rep.matches)
        if (!cm.unipotent) rep.non_unipotent.push_back(cm.name);
    rep.theorem_applies = rep.theta_regular && rep.trivial_on_nreg;
    if (rep.theorem_applies)
        rep.theorem_ok = rep.non_unipotent.size() == 1 && rep.dl_row >= 0 && rep.non_unipotent[0] == rep.dl_name;
    return rep;
}

/// sum_{s in T_nreg} sum_{w in W_T} theta(s) conj(theta^w(s)), computed two ways.
struct NregSumRecord {
    i64 torus_order = 0;
    i64 nreg_points = 0;
    i64 weyl_order = 0;
    Cyc action_sum;       // W_T acting through its true action on T
    Cyc power_form_sum;   // each w^i read as s -> s^i (i = 1..|W_T|)
    double bound = 0;     // |T| / 2
    bool action_below_bound() const { return std::abs(action_sum.to_complex()) < bound; }
    bool power_form_below_bound() const { return std::abs(power_form_sum.to_complex()) < bound; }
};

/// On a real torus T_w(F_q) with theta given by SNF character coordinates b (b_k in Z/d_k).
inline NregSumRecord nreg_weyl_sum(const RootSystemData& rs, const WeylClassRep& wc, i64 q, const IntVec& b) {
    TorusForm t = make_torus(rs, wc, q);
    const auto& d = t.presentation.snf_diagonal;
    if (b.size() != d.size()) throw InvalidInput("character needs one coordinate per Smith factor (" + std::to_string(d.size()) + ")");
    const i64 D = d.back();
    auto cent = weyl_centralizer(rs, wc);
    std::vector<IntMatrix> act;
    for (const auto& c : cent) act.push_back(action_on_presentation(t, c));
    auto theta = [&](const IntVec& a) {
        i128 s = 0;
        for (size_t k = 0; k < d.size(); ++k) s += static_cast<i128>(a[k]) * mod(b[k], d[k]) * (D / d[k]);
        return static_cast<i64>(mod128(s, D));
    };
    NregSumRecord rec;
    rec.torus_order = t.order;
    rec.weyl_order = static_cast<i64>(cent.size());
    rec.bound = static_cast<double>(t.order) / 2.0;
    std::vector<i64> act_counts(D, 0), pow_counts(D, 0);
    for (const auto& pt : enumerate_torus_points(t)) {
        if (!is_non_very_regular(t, pt.log)) continue;
        ++rec.nreg_points;
        const i64 ts = theta(pt.digits);
        for (const auto& m : act) {
            IntVec ws(d.size(), 0);
            for (size_t i = 0; i < d.size(); ++i) {
                i128 s = 0;
                for (size_t j = 0; j < d.size(); ++j) s += static_cast<i128>(m[i][j]) * pt.digits[j];
                ws[i] = static_cast<i64>(mod128(s, d[i]));
            }
            ++act_counts[mod(ts - theta(ws), D)];
        }
        for (i64 i = 1; i <= rec.weyl_order; ++i) ++pow_counts[mod(ts - i * ts, D)];
    }
    rec.action_sum = Cyc::from_root_counts(static_cast<int>(D), act_counts).reduced();
    rec.power_form_sum = Cyc::from_root_counts(static_cast<int>(D), pow_counts).reduced();
    return rec;
}

/// Same sums on a cyclic table model; nreg points are the powers not flagged regular semisimple.
inline NregSumRecord nreg_weyl_sum(const ClassData& d, const TorusModel& m, i64 theta) {
    NregSumRecord rec;
    rec.torus_order = m.order;
    rec.weyl_order = m.weyl_order();
    rec.bound = m.order / 2.0;
    std::vector<i64> act_counts(m.order, 0), pow_counts(m.order, 0);
    for (int k = 0; k < m.order; ++k) {
        if (d.regular_semisimple[d.index_of(m.power_classes[k])]) continue;
        ++rec.nreg_points;
        const i64 ts = mod(theta * k, m.order);
        i64 e = 1;
        for (i64 i = 0; i < rec.weyl_order; ++i, e = mod(e * m.weyl_multiplier, m.order)) ++act_counts[mod(ts - ts * e, m.order)];
        for (i64 i = 1; i <= rec.weyl_order; ++i) ++pow_counts[mod(ts - i * ts, m.order)];
    }
    rec.action_sum = Cyc::from_root_counts(m.order, act_counts).reduced();
    rec.power_form_sum = Cyc::from_root_counts(m.order, pow_counts).reduced();
    return rec;
}

}  // namespace jetrep
