#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/group/group.hpp"

namespace jetrep {

/// A subgroup of an enumerated group, itself a FiniteGroup with local indices 0..order()-1
/// (ascending parent index).
template <FiniteGroup P>
class Subgroup {
public:
    using Parent = P;

    /// From a sorted or unsorted element list; closure is verified.
    Subgroup(const P& parent, std::vector<int> elems, std::string label = {})
        : parent_(&parent), elems_(std::move(elems)), label_(std::move(label)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        local_.assign(static_cast<size_t>(parent.order()), -1);
        for (size_t i = 0; i < elems_.size(); ++i) local_[elems_[i]] = static_cast<int>(i);
        if (elems_.empty() || local_[parent.identity()] < 0) throw InvalidInput("subgroup must contain the identity");
        choose_generators();
        if (closure(parent, gens_parent_).size() != elems_.size())
            throw InvalidInput("element set is not closed under multiplication");
        for (int x : gens_parent_) gens_.push_back(local_[x]);
    }

    static Subgroup from_predicate(const P& parent, const std::function<bool(int)>& pred, std::string label = {}) {
        std::vector<int> e;
        for (int x = 0; x < parent.order(); ++x)
            if (pred(x)) e.push_back(x);
        return Subgroup(parent, std::move(e), std::move(label));
    }
    static Subgroup generated_by(const P& parent, const std::vector<int>& gens, std::string label = {}) {
        return Subgroup(parent, closure(parent, gens), std::move(label));
    }

    const P& parent() const { return *parent_; }
    const std::string& label() const { return label_; }
    i64 order() const { return static_cast<i64>(elems_.size()); }
    i64 index() const { return parent_->order() / order(); }
    int mul(int i, int j) const { return local_[parent_->mul(elems_[i], elems_[j])]; }
    int inv(int i) const { return local_[parent_->inv(elems_[i])]; }
    int identity() const { return local_[parent_->identity()]; }
    const std::vector<int>& generators() const { return gens_; }
    int characteristic() const { return parent_->characteristic(); }

    int to_parent(int i) const { return elems_[i]; }
    int to_local(int x) const { return local_[x]; }
    bool contains(int x) const { return local_[x] >= 0; }
    const std::vector<int>& elements() const { return elems_; }

    /// Left transversal: parent elements g_i with G = disjoint union g_i H; first entry is the identity.
    const std::vector<int>& transversal() const {
        std::call_once(*trans_once_, [this] {
            const P& g = *parent_;
            std::vector<char> covered(static_cast<size_t>(g.order()), 0);
            std::vector<int> t{g.identity()};
            for (int h : elems_) covered[h] = 1;
            for (int x = 0; x < g.order(); ++x) {
                if (covered[x]) continue;
                t.push_back(x);
                for (int h : elems_) covered[g.mul(x, h)] = 1;
            }
            transversal_ = std::move(t);
        });
        return transversal_;
    }

    bool is_normal() const {
        for (int s : parent_->generators())
            for (int x : gens_parent_)
                if (!contains(conjugate(*parent_, x, s))) return false;
        return true;
    }

private:
    void choose_generators() {
        std::vector<char> in(elems_.size(), 0);
        std::vector<int> cur{parent_->identity()};
        in[local_[parent_->identity()]] = 1;
        for (size_t i = 0; i < elems_.size(); ++i) {
            if (in[i]) continue;
            gens_parent_.push_back(elems_[i]);
            // grow the closure; each new element is multiplied by every generator
            std::vector<int> frontier = cur;
            for (size_t a = 0; a < frontier.size(); ++a)
                for (int s : gens_parent_) {
                    int y = parent_->mul(frontier[a], s);
                    int ly = y < static_cast<int>(local_.size()) ? local_[y] : -1;
                    if (ly < 0) throw InvalidInput("element set is not closed under multiplication");
                    if (!in[ly]) { in[ly] = 1; frontier.push_back(y); }
                }
            cur = std::move(frontier);
        }
    }

    const P* parent_;
    std::vector<int> elems_;
    std::vector<int> local_;
    std::vector<int> gens_parent_, gens_;
    std::string label_;
    mutable std::shared_ptr<std::once_flag> trans_once_ = std::make_shared<std::once_flag>();
    mutable std::vector<int> transversal_;
};

}  // namespace jetrep
