#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jetrep/core/cyclotomic.hpp"
#include "jetrep/core/errors.hpp"
#include "jetrep/group/classes.hpp"
#include "jetrep/group/subgroup.hpp"

namespace jetrep {

/// Exact cyclotomic-valued function on the classes of a group.
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(std::shared_ptr<const ClassData> dom, std::vector<Cyc> values)
        : dom_(std::move(dom)), values_(std::move(values)) {
        if (!dom_ || static_cast<int>(values_.size()) != dom_->count())
            throw InvalidInput("class function length does not match the class count");
    }
    static ClassFunction zero(std::shared_ptr<const ClassData> dom) {
        std::vector<Cyc> v(dom->count());
        return ClassFunction(std::move(dom), std::move(v));
    }
    static ClassFunction constant(std::shared_ptr<const ClassData> dom, const Cyc& c) {
        std::vector<Cyc> v(dom->count(), c);
        return ClassFunction(std::move(dom), std::move(v));
    }

    const ClassData& domain() const { return *dom_; }
    const std::shared_ptr<const ClassData>& shared_domain() const { return dom_; }
    int size() const { return static_cast<int>(values_.size()); }
    const Cyc& operator[](int c) const { return values_[c]; }
    Cyc& operator[](int c) { return values_[c]; }
    const std::vector<Cyc>& values() const { return values_; }
    /// Value at the identity class (class 0 for built groups, checked by order 1).
    Cyc degree() const {
        for (int c = 0; c < size(); ++c)
            if (dom_->orders[c] == 1) return values_[c];
        throw InvalidInput("class data has no identity class");
    }

    bool same_domain(const ClassFunction& o) const { return dom_ == o.dom_; }
    void check_domain(const ClassFunction& o) const {
        if (!same_domain(o)) throw InvalidInput("class functions live on different groups");
    }

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
        a.check_domain(b);
        ClassFunction r = a;
        for (int i = 0; i < r.size(); ++i) r.values_[i] += b.values_[i];
        return r;
    }
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
        a.check_domain(b);
        ClassFunction r = a;
        for (int i = 0; i < r.size(); ++i) r.values_[i] -= b.values_[i];
        return r;
    }
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
        a.check_domain(b);
        ClassFunction r = a;
        for (int i = 0; i < r.size(); ++i) r.values_[i] *= b.values_[i];
        return r;
    }
    friend ClassFunction operator*(const Cyc& s, const ClassFunction& a) {
        ClassFunction r = a;
        for (auto& v : r.values_) v *= s;
        return r;
    }
    ClassFunction operator-() const { return Cyc(-1) * *this; }
    ClassFunction conj() const {
        ClassFunction r = *this;
        for (auto& v : r.values_) v = v.conj();
        return r;
    }
    /// Galois twist of every value.
    ClassFunction galois(i64 a) const {
        ClassFunction r = *this;
        for (auto& v : r.values_) v = v.galois(a);
        return r;
    }
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.same_domain(b) && a.values_ == b.values_;
    }
    friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < size(); ++i) s += (i ? " " : "") + values_[i].str();
        return s + "]";
    }

private:
    std::shared_ptr<const ClassData> dom_;
    std::vector<Cyc> values_;
};

/// (1/|G|) sum over classes in the locus of |C| f1 conj(f2). An empty locus mask means all classes.
inline Cyc inner_product_on(const ClassFunction& f1, const ClassFunction& f2, const std::vector<char>& locus) {
    f1.check_domain(f2);
    const ClassData& d = f1.domain();
    if (!locus.empty() && static_cast<int>(locus.size()) != d.count())
        throw InvalidInput("locus mask length does not match the class count");
    Cyc s;
    for (int c = 0; c < d.count(); ++c) {
        if (!locus.empty() && !locus[c]) continue;
        if (f1[c].is_zero() || f2[c].is_zero()) continue;
        s += (f1[c] * f2[c].conj()).scaled(Rational(d.sizes[c]));
    }
    return s.scaled(Rational(1, d.group_order)).reduced();
}

inline Cyc inner_product(const ClassFunction& f1, const ClassFunction& f2) { return inner_product_on(f1, f2, {}); }

inline std::vector<char> complement(const std::vector<char>& locus) {
    std::vector<char> r(locus.size());
    for (size_t i = 0; i < locus.size(); ++i) r[i] = !locus[i];
    return r;
}

/// Class fusion H-classes -> G-classes.
template <FiniteGroup G>
std::vector<int> class_fusion(const ConjugacyClasses<Subgroup<G>>& hc, const ConjugacyClasses<G>& gc) {
    const auto& H = hc.group();
    if (&H.parent() != &gc.group()) throw InvalidInput("class_fusion: subgroup of a different group");
    std::vector<int> f(hc.count());
    for (int c = 0; c < hc.count(); ++c) f[c] = gc.class_of(H.to_parent(hc.rep(c)));
    return f;
}

/// Ind_H^G f via fusion: Ind f(C) = |C_G(x)|/|H| * sum over H-classes c fusing into C of |c| f(c).
template <FiniteGroup G>
ClassFunction induce(const ConjugacyClasses<Subgroup<G>>& hc, const ConjugacyClasses<G>& gc, const ClassFunction& f) {
    if (f.shared_domain() != hc.shared()) throw InvalidInput("induce: function is not on the given subgroup");
    auto fus = class_fusion(hc, gc);
    std::vector<Cyc> acc(gc.count());
    for (int c = 0; c < hc.count(); ++c) {
        if (f[c].is_zero()) continue;
        acc[fus[c]] += f[c].scaled(Rational(hc.size(c)));
    }
    const i64 h = hc.group().order();
    for (int k = 0; k < gc.count(); ++k)
        if (!acc[k].is_zero()) acc[k] = acc[k].scaled(Rational(gc.data().centralizers[k], h)).reduced();
    return ClassFunction(gc.shared(), std::move(acc));
}

/// Ind_H^G f by the transversal formula: Ind f(x) = sum_i f_0(g_i^{-1} x g_i), independent of fusion.
template <FiniteGroup G>
ClassFunction induce_by_transversal(const ConjugacyClasses<Subgroup<G>>& hc, const ConjugacyClasses<G>& gc,
                                    const ClassFunction& f) {
    const auto& H = hc.group();
    const G& g = gc.group();
    std::vector<Cyc> out(gc.count());
    for (int k = 0; k < gc.count(); ++k) {
        int x = gc.rep(k);
        Cyc s;
        for (int t : H.transversal()) {
            int y = g.mul(g.mul(g.inv(t), x), t);
            if (H.contains(y)) s += f[hc.class_of(H.to_local(y))];
        }
        out[k] = s.reduced();
    }
    return ClassFunction(gc.shared(), std::move(out));
}

template <FiniteGroup G>
ClassFunction restrict_to(const ClassFunction& f, const ConjugacyClasses<G>& gc, const ConjugacyClasses<Subgroup<G>>& hc) {
    if (f.shared_domain() != gc.shared()) throw InvalidInput("restrict: function is not on the given group");
    auto fus = class_fusion(hc, gc);
    std::vector<Cyc> v(hc.count());
    for (int c = 0; c < hc.count(); ++c) v[c] = f[fus[c]];
    return ClassFunction(hc.shared(), std::move(v));
}

/// Value of a class function at a group element.
template <FiniteGroup G>
const Cyc& value_at(const ClassFunction& f, const ConjugacyClasses<G>& cc, int x) {
    return f[cc.class_of(x)];
}

/// Class function from an element-level function (assumed constant on classes; checked on members if asked).
template <FiniteGroup G, class F>
ClassFunction class_function_from(const ConjugacyClasses<G>& cc, F&& fn, bool check = false) {
    std::vector<Cyc> v(cc.count());
    for (int c = 0; c < cc.count(); ++c) {
        v[c] = fn(cc.rep(c));
        if (check)
            for (int x : cc.members(c))
                if (fn(x) != v[c]) throw VerificationFailure("function is not constant on class " + cc.data().names[c]);
    }
    return ClassFunction(cc.shared(), std::move(v));
}

/// Trivial character.
inline ClassFunction trivial_character(std::shared_ptr<const ClassData> d) { return ClassFunction::constant(std::move(d), Cyc(1)); }

/// Mask of classes satisfying a predicate on class indices.
template <class Pred>
std::vector<char> class_mask(const ClassData& d, Pred&& pred) {
    std::vector<char> m(d.count());
    for (int c = 0; c < d.count(); ++c) m[c] = pred(c) ? 1 : 0;
    return m;
}

}  // namespace jetrep
