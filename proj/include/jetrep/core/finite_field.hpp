#pragma once

#include <array>
#include <string>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/core/intmath.hpp"

namespace jetrep {

/// Shipped primitive polynomials x^f + c_{f-1} x^{f-1} + ... + c_0 over F_p, listed as (p, f, c_0..c_{f-1}).
struct PrimitivePolynomial {
    int p;
    int f;
    std::array<int, 4> low;  // c_0 .. c_{f-1}
};

inline const std::vector<PrimitivePolynomial>& primitive_polynomials() {
    static const std::vector<PrimitivePolynomial> table = {
        {3, 1, {1, 0, 0, 0}},  {5, 1, {3, 0, 0, 0}},  {7, 1, {4, 0, 0, 0}},  {11, 1, {9, 0, 0, 0}},
        {13, 1, {11, 0, 0, 0}}, {3, 2, {2, 2, 0, 0}},  {3, 3, {1, 2, 0, 0}},  {3, 4, {2, 0, 0, 2}},
        {5, 2, {2, 4, 0, 0}},  {7, 2, {3, 6, 0, 0}},  {11, 2, {7, 10, 0, 0}},
    };
    return table;
}

/// The field F_q, q = p^f, with elements encoded as integers 0..q-1 (base-p digits of the
/// coefficient vector in the basis 1, x, ..., x^{f-1}). Addition and multiplication are tabulated.
class FiniteField {
public:
    explicit FiniteField(int q) : q_(q) {
        auto pp = prime_power(q);
        if (!pp) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
        p_ = static_cast<int>(pp->first);
        f_ = pp->second;
        const PrimitivePolynomial* poly = nullptr;
        for (const auto& pr : primitive_polynomials())
            if (pr.p == p_ && pr.f == f_) poly = &pr;
        if (!poly) throw InvalidInput("no shipped primitive polynomial for q = " + std::to_string(q));
        build(*poly);
    }

    int q() const { return q_; }
    int p() const { return p_; }
    int degree() const { return f_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int inv(int a) const {
        if (a == 0) throw InvalidInput("FiniteField: inverse of zero");
        return inv_[a];
    }
    int from_int(i64 k) const { return static_cast<int>(mod(k, p_)); }  // prime subfield
    int one() const { return 1; }
    int zero() const { return 0; }

    /// Generator of F_q^x fixed by the primitive polynomial (the class of x, or a primitive root when f = 1).
    int generator() const { return gen_; }
    /// Discrete log to base generator(); a != 0.
    int log(int a) const { return log_[a]; }
    int exp(i64 k) const { return exp_[mod(k, q_ - 1)]; }
    int pow(int a, i64 e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        return exp(static_cast<i64>(log(a)) * mod(e, q_ - 1));
    }
    bool is_square(int a) const { return a == 0 || log(a) % 2 == 0; }
    /// Least (by encoding) non-square of F_q.
    int least_nonsquare() const {
        for (int a = 1; a < q_; ++a)
            if (!is_square(a)) return a;
        throw InvalidInput("no nonsquare in F_2^f");
    }
    int frobenius(int a) const { return pow(a, p_); }
    /// Absolute trace F_q -> F_p, returned as an integer in [0, p).
    int trace(int a) const {
        int s = 0, x = a;
        for (int i = 0; i < f_; ++i) {
            s = add(s, x);
            x = frobenius(x);
        }
        return s;  // lies in the prime field, encoded as its own digit
    }
    /// Base-p digit vector of an element.
    std::vector<int> digits(int a) const {
        std::vector<int> d(f_);
        for (int i = 0; i < f_; ++i) { d[i] = a % p_; a /= p_; }
        return d;
    }
    int from_digits(const std::vector<int>& d) const {
        int a = 0;
        for (int i = f_; i-- > 0;) a = a * p_ + static_cast<int>(mod(d[i], p_));
        return a;
    }

private:
    void build(const PrimitivePolynomial& poly) {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            auto da = digits(a);
            for (int b = 0; b < q_; ++b) {
                auto db = digits(b);
                std::vector<int> s(f_);
                for (int i = 0; i < f_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = from_digits(s);
            }
            std::vector<int> n(f_);
            for (int i = 0; i < f_; ++i) n[i] = (p_ - da[i]) % p_;
            neg_[a] = from_digits(n);
        }
        // polynomial multiplication modulo the primitive polynomial
        for (int a = 0; a < q_; ++a) {
            auto da = digits(a);
            for (int b = 0; b < q_; ++b) {
                auto db = digits(b);
                std::vector<i64> prod(2 * f_, 0);
                for (int i = 0; i < f_; ++i)
                    for (int j = 0; j < f_; ++j) prod[i + j] += da[i] * db[j];
                for (int k = 2 * f_ - 1; k >= f_; --k) {
                    i64 c = prod[k] % p_;
                    prod[k] = 0;
                    for (int i = 0; i < f_; ++i) prod[k - f_ + i] -= c * poly.low[i];
                }
                std::vector<int> r(f_);
                for (int i = 0; i < f_; ++i) r[i] = static_cast<int>(mod(prod[i], p_));
                mul_[a * q_ + b] = from_digits(r);
            }
        }
        if (f_ == 1) {
            gen_ = static_cast<int>(mod(-poly.low[0], p_));
        } else {
            gen_ = p_;  // the class of x
        }
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, -1);
        int x = 1;
        for (int k = 0; k < q_ - 1; ++k) {
            if (log_[x] != -1) throw InvalidInput("shipped polynomial is not primitive");
            exp_[k] = x;
            log_[x] = k;
            x = mul(x, gen_);
        }
        if (x != 1) throw InvalidInput("shipped polynomial is not primitive");
        for (int a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    int q_, p_, f_;
    int gen_ = 1;
    std::vector<int> add_, mul_, neg_, inv_, exp_, log_;
};

}  // namespace jetrep
