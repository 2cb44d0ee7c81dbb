#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/core/intmath.hpp"
#include "jetrep/group/group.hpp"
#include "jetrep/group/jet_ring.hpp"

namespace jetrep {

enum class GroupKind { SL2, GL2 };

inline std::string kind_name(GroupKind k) { return k == GroupKind::SL2 ? "SL2" : "GL2"; }

inline constexpr i64 kGroupCap = 10'000'000;

/// 2x2 matrix over the jet ring: entries (a, b; c, d) as ring codes.
using JetMatrix = std::array<int, 4>;

/// The finite group SL2 or GL2 over F_q[t]/t^{r+1}, fully enumerated. Elements are indexed in
/// increasing order of their matrix code; multiplication is computed, inverses are tabulated.
class JetGroup {
public:
    JetGroup(GroupKind kind, int q, int r, i64 cap = kGroupCap) : kind_(kind) {
        auto pp = prime_power(q);
        if (!pp) throw InvalidInput("q must be a prime power");
        if (pp->first == 2) throw InvalidInput("p = 2 is not supported (p must be odd)");
        i64 expected = expected_order(kind, q, r);
        if (expected > cap)
            throw TooLarge(kind_name(kind) + "(F_" + std::to_string(q) + "[t]/t^" + std::to_string(r + 1) +
                           ") has order " + std::to_string(expected) + " above the cap " + std::to_string(cap));
        ring_ = std::make_shared<JetRing>(q, r);
        enumerate();
        if (order() != expected) throw VerificationFailure("jet group order does not match the order formula");
        build_generators();
    }

    static i64 expected_order(GroupKind kind, i64 q, int r) {
        if (kind == GroupKind::SL2) return ipow(q, 3 * r) * q * (q * q - 1);
        return ipow(q, 4 * r) * (q * q - 1) * (q * q - q);
    }

    GroupKind kind() const { return kind_; }
    const JetRing& ring() const { return *ring_; }
    int q() const { return ring_->q(); }
    int p() const { return ring_->p(); }
    int depth() const { return ring_->depth(); }
    int characteristic() const { return p(); }
    i64 order() const { return static_cast<i64>(elems_.size()); }
    int identity() const { return identity_; }
    const std::vector<int>& generators() const { return gens_; }
    std::string label() const {
        return kind_name(kind_) + "(F_" + std::to_string(q()) + (depth() ? "[t]/t^" + std::to_string(depth() + 1) : "") + ")";
    }

    const JetMatrix& matrix(int i) const { return elems_[i]; }

    /// Index of a matrix, or -1 if it is not a group element.
    int index_of(const JetMatrix& m) const {
        u64 c = code(m);
        if (!dense_.empty()) return c < dense_.size() ? dense_[c] : -1;
        auto it = std::lower_bound(codes_.begin(), codes_.end(), static_cast<std::uint32_t>(c));
        if (it == codes_.end() || *it != c) return -1;
        return static_cast<int>(it - codes_.begin());
    }
    int index_checked(const JetMatrix& m) const {
        int i = index_of(m);
        if (i < 0) throw InvalidInput("matrix is not an element of " + label());
        return i;
    }

    JetMatrix mat_mul(const JetMatrix& x, const JetMatrix& y) const {
        const JetRing& R = *ring_;
        return {R.add(R.mul(x[0], y[0]), R.mul(x[1], y[2])), R.add(R.mul(x[0], y[1]), R.mul(x[1], y[3])),
                R.add(R.mul(x[2], y[0]), R.mul(x[3], y[2])), R.add(R.mul(x[2], y[1]), R.mul(x[3], y[3]))};
    }
    int det(const JetMatrix& x) const { return ring_->sub(ring_->mul(x[0], x[3]), ring_->mul(x[1], x[2])); }
    int trace(const JetMatrix& x) const { return ring_->add(x[0], x[3]); }

    int mul(int i, int j) const { return index_checked(mat_mul(elems_[i], elems_[j])); }
    int inv(int i) const { return inv_[i]; }

    /// Reduction mod t^k applied entrywise.
    JetMatrix reduce(const JetMatrix& m, int k) const {
        return {ring_->truncate(m[0], k), ring_->truncate(m[1], k), ring_->truncate(m[2], k), ring_->truncate(m[3], k)};
    }
    /// g == 1 mod t^k.
    bool in_congruence_kernel(int i, int k) const {
        if (k <= 0) return true;
        const JetMatrix& m = elems_[i];
        return ring_->truncate(m[0], k) == 1 && ring_->truncate(m[1], k) == 0 && ring_->truncate(m[2], k) == 0 &&
               ring_->truncate(m[3], k) == 1;
    }

    std::string str(int i) const {
        const auto& m = elems_[i];
        const JetRing& R = *ring_;
        return "[[" + R.str(m[0]) + "," + R.str(m[1]) + "],[" + R.str(m[2]) + "," + R.str(m[3]) + "]]";
    }

private:
    u64 code(const JetMatrix& m) const {
        u64 s = static_cast<u64>(ring_->size());
        return static_cast<u64>(m[0]) + s * (static_cast<u64>(m[1]) + s * (static_cast<u64>(m[2]) + s * static_cast<u64>(m[3])));
    }

    void enumerate() {
        const JetRing& R = *ring_;
        const int S = R.size();
        std::vector<std::pair<std::uint32_t, JetMatrix>> found;
        auto push = [&](const JetMatrix& m) { found.emplace_back(static_cast<std::uint32_t>(code(m)), m); };
        if (kind_ == GroupKind::SL2) {
            for (int a = 0; a < S; ++a)
                for (int b = 0; b < S; ++b)
                    for (int c = 0; c < S; ++c) {
                        int bc1 = R.add(1, R.mul(b, c));
                        if (R.is_unit(a)) {
                            push({a, b, c, R.mul(bc1, R.inv(a))});
                        } else {
                            for (int d = 0; d < S; ++d)
                                if (R.mul(a, d) == bc1) push({a, b, c, d});
                        }
                    }
        } else {
            for (int a = 0; a < S; ++a)
                for (int b = 0; b < S; ++b)
                    for (int c = 0; c < S; ++c)
                        for (int d = 0; d < S; ++d)
                            if (R.is_unit(R.sub(R.mul(a, d), R.mul(b, c)))) push({a, b, c, d});
        }
        std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        codes_.reserve(found.size());
        elems_.reserve(found.size());
        for (const auto& [c, m] : found) {
            codes_.push_back(c);
            elems_.push_back(m);
        }
        u64 space = static_cast<u64>(S) * S * S * S;
        if (space <= (1ULL << 24)) {
            dense_.assign(space, -1);
            for (size_t i = 0; i < codes_.size(); ++i) dense_[codes_[i]] = static_cast<int>(i);
        }
        identity_ = index_checked({1, 0, 0, 1});
        inv_.resize(elems_.size());
        for (size_t i = 0; i < elems_.size(); ++i) {
            const auto& m = elems_[i];
            int di = R.inv(det(m));
            inv_[i] = index_checked({R.mul(di, m[3]), R.mul(di, R.neg(m[1])), R.mul(di, R.neg(m[2])), R.mul(di, m[0])});
        }
    }

    void build_generators() {
        const JetRing& R = *ring_;
        const FiniteField& F = R.field();
        // F_p-basis of R: x^i t^k
        std::vector<int> basis;
        for (int k = 0; k <= R.depth(); ++k)
            for (int i = 0; i < F.degree(); ++i) {
                std::vector<int> dig(F.degree(), 0);
                dig[i] = 1;
                basis.push_back(R.monomial(F.from_digits(dig), k));
            }
        for (int a : basis) {
            gens_.push_back(index_checked({1, a, 0, 1}));
            gens_.push_back(index_checked({1, 0, a, 1}));
        }
        if (kind_ == GroupKind::GL2) {
            // diag(u, 1) for a generating set of the unit group of R
            gens_.push_back(index_checked({F.generator(), 0, 0, 1}));
            for (int a : basis) {
                if (R.valuation(a) == 0) continue;
                gens_.push_back(index_checked({R.add(1, a), 0, 0, 1}));
            }
        }
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    }

    GroupKind kind_;
    std::shared_ptr<JetRing> ring_;
    std::vector<JetMatrix> elems_;
    std::vector<std::uint32_t> codes_;
    std::vector<int> dense_;
    std::vector<int> inv_;
    std::vector<int> gens_;
    int identity_ = 0;
};

}  // namespace jetrep
