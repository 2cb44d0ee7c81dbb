#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/core/finite_field.hpp"

namespace jetrep {

/// The truncated polynomial ring R = F_q[t]/t^{r+1}. An element is encoded as
/// sum_k c_k q^k with c_k the field codes of its coefficients; operations are tabulated.
class JetRing {
public:
    JetRing(int q, int r) : field_(std::make_shared<FiniteField>(q)), r_(r) {
        if (r < 0) throw InvalidInput("jet depth must be nonnegative");
        size_ = 1;
        for (int i = 0; i <= r; ++i) size_ *= q;
        if (size_ > 512) throw TooLarge("jet ring F_q[t]/t^{r+1} too large to tabulate");
        build();
    }

    const FiniteField& field() const { return *field_; }
    int q() const { return field_->q(); }
    int p() const { return field_->p(); }
    int depth() const { return r_; }
    int size() const { return size_; }

    int add(int a, int b) const { return add_[a * size_ + b]; }
    int mul(int a, int b) const { return mul_[a * size_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    bool is_unit(int a) const { return coeff(a, 0) != 0; }
    int inv(int a) const {
        if (!is_unit(a)) throw InvalidInput("JetRing: inverse of a non-unit");
        return inv_[a];
    }

    int coeff(int a, int k) const {
        for (int i = 0; i < k; ++i) a /= q();
        return a % q();
    }
    std::vector<int> coeffs(int a) const {
        std::vector<int> c(r_ + 1);
        for (int k = 0; k <= r_; ++k) { c[k] = a % q(); a /= q(); }
        return c;
    }
    int make(const std::vector<int>& c) const {
        int a = 0;
        for (int k = r_; k >= 0; --k) a = a * q() + (k < static_cast<int>(c.size()) ? c[k] : 0);
        return a;
    }
    int constant(int fieldElem) const { return fieldElem; }
    /// c * t^k
    int monomial(int c, int k) const {
        if (k > r_) return 0;
        int a = c;
        for (int i = 0; i < k; ++i) a *= q();
        return a;
    }
    /// Reduction modulo t^k (keeps coefficients below k).
    int truncate(int a, int k) const {
        if (k > r_) return a;
        auto c = coeffs(a);
        for (int i = k; i <= r_; ++i) c[i] = 0;
        return make(c);
    }
    /// t-adic valuation; r+1 for zero.
    int valuation(int a) const {
        for (int k = 0; k <= r_; ++k)
            if (coeff(a, k)) return k;
        return r_ + 1;
    }
    int from_int(long long k) const { return field_->from_int(k); }

    std::string str(int a) const {
        auto c = coeffs(a);
        std::string s;
        for (int k = 0; k <= r_; ++k) {
            if (!c[k]) continue;
            if (!s.empty()) s += "+";
            s += std::to_string(c[k]);
            if (k >= 1) s += "t";
            if (k >= 2) s += "^" + std::to_string(k);
        }
        return s.empty() ? "0" : s;
    }

private:
    void build() {
        const FiniteField& F = *field_;
        add_.assign(size_ * size_, 0);
        mul_.assign(size_ * size_, 0);
        neg_.assign(size_, 0);
        inv_.assign(size_, 0);
        for (int a = 0; a < size_; ++a) {
            auto ca = coeffs(a);
            std::vector<int> n(r_ + 1);
            for (int k = 0; k <= r_; ++k) n[k] = F.neg(ca[k]);
            neg_[a] = make(n);
            for (int b = 0; b < size_; ++b) {
                auto cb = coeffs(b);
                std::vector<int> s(r_ + 1), m(r_ + 1, 0);
                for (int k = 0; k <= r_; ++k) s[k] = F.add(ca[k], cb[k]);
                for (int i = 0; i <= r_; ++i)
                    for (int j = 0; i + j <= r_; ++j) m[i + j] = F.add(m[i + j], F.mul(ca[i], cb[j]));
                add_[a * size_ + b] = make(s);
                mul_[a * size_ + b] = make(m);
            }
        }
        for (int a = 0; a < size_; ++a) {
            if (!is_unit(a)) continue;
            for (int b = 0; b < size_; ++b)
                if (mul(a, b) == 1) { inv_[a] = b; break; }
        }
    }

    std::shared_ptr<FiniteField> field_;
    int r_;
    int size_;
    std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace jetrep
