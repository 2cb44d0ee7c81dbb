#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <memory>
#include <string>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/core/intmath.hpp"
#include "jetrep/group/group.hpp"

namespace jetrep {

/// Class-level metadata shared by characters. Built from a group or imported from a table file.
struct ClassData {
    std::string label;
    i64 group_order = 0;
    int p = 0;  // characteristic, 0 if unknown
    std::vector<std::string> names;
    std::vector<i64> sizes;
    std::vector<i64> centralizers;
    std::vector<i64> orders;
    std::vector<char> semisimple, unipotent, regular_semisimple, very_regular;
    std::vector<std::string> types;               // imported "type" column, verbatim
    std::vector<std::vector<std::string>> tori;   // torus memberships per class
    std::vector<int> inverse;                     // class of g^{-1}, empty if unknown
    std::map<int, std::vector<int>> power_maps;   // prime -> class of g^prime

    int count() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const {
        for (int i = 0; i < count(); ++i)
            if (names[i] == name) return i;
        return -1;
    }
    i64 exponent() const {
        i64 e = 1;
        for (i64 o : orders) e = lcm64(e, o);
        return e;
    }
    /// True if the class lies in the named torus.
    bool meets_torus(int c, const std::string& torus) const {
        if (c >= static_cast<int>(tori.size())) return false;
        for (const auto& t : tori[c])
            if (t == torus) return true;
        return false;
    }
};

inline std::string class_letter(int k) {
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('a' + k % 26));
        k = k / 26 - 1;
    } while (k >= 0);
    return s;
}

/// Conjugacy classes of an enumerated group plus the element -> class map.
template <FiniteGroup G>
class ConjugacyClasses {
public:
    explicit ConjugacyClasses(const G& g) : group_(&g) { build(); }

    const G& group() const { return *group_; }
    const ClassData& data() const { return *data_; }
    std::shared_ptr<const ClassData> shared() const { return data_; }
    std::shared_ptr<ClassData> mutable_data() { return data_; }
    int count() const { return data_->count(); }
    int class_of(int x) const { return class_of_[x]; }
    int rep(int c) const { return reps_[c]; }
    i64 size(int c) const { return data_->sizes[c]; }
    /// Elements of class c, ascending.
    std::vector<int> members(int c) const {
        return {members_.begin() + offsets_[c], members_.begin() + offsets_[c + 1]};
    }
    const std::vector<int>& members_flat() const { return members_; }
    int member_begin(int c) const { return offsets_[c]; }
    int member_end(int c) const { return offsets_[c + 1]; }
    /// Class of rep(c)^k.
    int power_class(int c, i64 k) const {
        i64 o = data_->orders[c];
        return class_of_[group_power(*group_, reps_[c], mod(k, o))];
    }

private:
    void build() {
        const G& g = *group_;
        const i64 n = g.order();
        class_of_.assign(static_cast<size_t>(n), -1);
        auto d = std::make_shared<ClassData>();
        d->group_order = n;
        d->p = g.characteristic();
        std::vector<std::vector<int>> cls;
        const auto& gens = g.generators();
        std::vector<int> ginv;
        for (int s : gens) ginv.push_back(g.inv(s));
        for (int x = 0; x < n; ++x) {
            if (class_of_[x] >= 0) continue;
            int c = static_cast<int>(cls.size());
            std::vector<int> orbit{x};
            class_of_[x] = c;
            for (size_t i = 0; i < orbit.size(); ++i)
                for (size_t j = 0; j < gens.size(); ++j) {
                    int y = g.mul(g.mul(gens[j], orbit[i]), ginv[j]);
                    if (class_of_[y] < 0) { class_of_[y] = c; orbit.push_back(y); }
                }
            std::sort(orbit.begin(), orbit.end());
            cls.push_back(std::move(orbit));
        }
        const int k = static_cast<int>(cls.size());
        // classes ordered by (element order, least member)
        std::vector<i64> ord(k);
        for (int c = 0; c < k; ++c) ord[c] = element_order(g, cls[c].front());
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](int a, int b) {
            return ord[a] != ord[b] ? ord[a] < ord[b] : cls[a].front() < cls[b].front();
        });
        std::vector<int> rank(k);
        for (int i = 0; i < k; ++i) rank[perm[i]] = i;
        for (auto& c : class_of_) c = rank[c];
        offsets_.assign(k + 1, 0);
        for (int i = 0; i < k; ++i) {
            const auto& cl = cls[perm[i]];
            reps_.push_back(cl.front());
            offsets_[i + 1] = offsets_[i] + static_cast<int>(cl.size());
            members_.insert(members_.end(), cl.begin(), cl.end());
            d->sizes.push_back(static_cast<i64>(cl.size()));
            d->centralizers.push_back(n / static_cast<i64>(cl.size()));
            d->orders.push_back(ord[perm[i]]);
        }
        // names: order followed by a letter, letters assigned in representative order
        std::map<i64, int> seen;
        for (int c = 0; c < k; ++c) d->names.push_back(std::to_string(d->orders[c]) + class_letter(seen[d->orders[c]]++));
        const i64 p = d->p;
        for (int c = 0; c < k; ++c) {
            i64 o = d->orders[c];
            d->semisimple.push_back(p > 0 && o % p != 0);
            i64 t = o;
            while (p > 1 && t % p == 0) t /= p;
            d->unipotent.push_back(t == 1);
            d->inverse.push_back(class_of_[g.inv(reps_[c])]);
        }
        d->regular_semisimple.assign(k, 0);
        d->very_regular.assign(k, 0);
        auto fac = factorize(n);
        for (const auto& [prime, e] : fac) {
            (void)e;
            std::vector<int> pm(k);
            for (int c = 0; c < k; ++c) pm[c] = class_of_[group_power(g, reps_[c], prime)];
            d->power_maps[static_cast<int>(prime)] = std::move(pm);
        }
        data_ = d;
    }

    const G* group_;
    std::shared_ptr<ClassData> data_;
    std::vector<int> class_of_, reps_, offsets_, members_;
};

}  // namespace jetrep
