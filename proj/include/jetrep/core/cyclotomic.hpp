#pragma once

#include <cctype>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/core/intmath.hpp"
#include "jetrep/core/rational.hpp"

namespace jetrep {

namespace detail {

/// Reduction data for Q(zeta_n): zeta_n^k written in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
struct CycloBasis {
    int n = 1;
    int phi = 1;
    std::vector<std::vector<i64>> power;  // power[k] has phi entries

    explicit CycloBasis(int n_) : n(n_) {
        phi = static_cast<int>(totient(n));
        std::vector<i64> poly = cyclotomic_poly(n);  // monic, degree phi
        power.assign(n, std::vector<i64>(phi, 0));
        std::vector<i64> cur(phi, 0);
        cur[0] = 1;
        for (int k = 0; k < n; ++k) {
            power[k] = cur;
            // multiply cur by zeta
            i64 top = cur[phi - 1];
            for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            for (int i = 0; i < phi; ++i) cur[i] -= top * poly[i];
        }
    }

    static std::vector<i64> poly_mul(const std::vector<i64>& a, const std::vector<i64>& b) {
        std::vector<i64> c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    }

    /// Exact division of a by monic b.
    static std::vector<i64> poly_div(std::vector<i64> a, const std::vector<i64>& b) {
        size_t db = b.size() - 1;
        std::vector<i64> q(a.size() - db, 0);
        for (size_t i = a.size(); i-- > db;) {
            i64 c = a[i];
            q[i - db] = c;
            for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
        }
        return q;
    }

    /// Coefficients of Phi_n, lowest degree first.
    static std::vector<i64> cyclotomic_poly(int n) {
        std::vector<i64> num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        for (int d = 1; d < n; ++d)
            if (n % d == 0) num = poly_div(num, cyclotomic_poly(d));
        return num;
    }
};

inline const CycloBasis& basis(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<CycloBasis>(n)).first;
    return *it->second;
}

}  // namespace detail

/// Exact element of a cyclotomic field Q(zeta_n), stored in the power basis mod Phi_n.
class Cyc {
public:
    Cyc() : n_(1), c_(1, Rational(0)) {}
    Cyc(const Rational& r) : n_(1), c_(1, r) {}  // NOLINT(implicit)
    Cyc(i64 v) : Cyc(Rational(v)) {}             // NOLINT(implicit)

    /// zeta_n^k with zeta_n = exp(2 pi i / n).
    static Cyc E(int n, i64 k = 1) {
        if (n < 1) throw InvalidInput("E(n): n must be positive");
        Cyc z;
        z.n_ = n;
        const auto& b = detail::basis(n);
        const auto& row = b.power[mod(k, n)];
        z.c_.assign(row.begin(), row.end());
        return z;
    }

    /// Builds sum_k counts[k] zeta_n^k.
    static Cyc from_root_counts(int n, const std::vector<i64>& counts) {
        const auto& b = detail::basis(n);
        std::vector<i64> acc(b.phi, 0);
        for (int k = 0; k < n; ++k) {
            if (!counts[k]) continue;
            const auto& row = b.power[k];
            for (int i = 0; i < b.phi; ++i) acc[i] += counts[k] * row[i];
        }
        Cyc z;
        z.n_ = n;
        z.c_.assign(acc.begin(), acc.end());
        return z;
    }

    int conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& r : c_)
            if (!r.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    Rational rational() const {
        if (!is_rational()) throw InvalidInput("Cyc: value is not rational");
        return c_[0];
    }

    /// Same value written over Q(zeta_m), m a multiple of the conductor.
    Cyc lifted(int m) const {
        if (m == n_) return *this;
        if (m % n_) throw InvalidInput("Cyc::lifted: conductor does not divide target");
        const auto& b = detail::basis(m);
        int step = m / n_;
        std::vector<Rational> acc(b.phi, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            const auto& row = b.power[(static_cast<i64>(i) * step) % m];
            for (int j = 0; j < b.phi; ++j)
                if (row[j]) acc[j] += c_[i] * Rational(row[j]);
        }
        Cyc z;
        z.n_ = m;
        z.c_ = std::move(acc);
        return z;
    }

    /// Galois automorphism zeta -> zeta^a (a prime to the conductor).
    Cyc galois(i64 a) const {
        if (std::gcd(mod(a, n_), static_cast<i64>(n_)) != 1 && n_ > 1)
            throw InvalidInput("Cyc::galois: exponent not prime to conductor");
        const auto& b = detail::basis(n_);
        std::vector<Rational> acc(b.phi, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            const auto& row = b.power[mod(a * static_cast<i64>(i), n_)];
            for (int j = 0; j < b.phi; ++j)
                if (row[j]) acc[j] += c_[i] * Rational(row[j]);
        }
        Cyc z;
        z.n_ = n_;
        z.c_ = std::move(acc);
        return z;
    }

    Cyc conj() const { return galois(-1); }

    friend Cyc operator+(const Cyc& a, const Cyc& b) {
        if (a.n_ != b.n_) {
            int m = static_cast<int>(lcm64(a.n_, b.n_));
            return a.lifted(m) + b.lifted(m);
        }
        Cyc z = a;
        for (size_t i = 0; i < z.c_.size(); ++i) z.c_[i] += b.c_[i];
        return z;
    }
    Cyc operator-() const {
        Cyc z = *this;
        for (auto& r : z.c_) r = -r;
        return z;
    }
    friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        if (a.n_ != b.n_) {
            if (a.n_ == 1) return b.scaled(a.c_[0]);
            if (b.n_ == 1) return a.scaled(b.c_[0]);
            int m = static_cast<int>(lcm64(a.n_, b.n_));
            return a.lifted(m) * b.lifted(m);
        }
        int n = a.n_;
        const auto& bs = detail::basis(n);
        std::vector<Rational> raw(n, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                raw[(i + j) % n] += a.c_[i] * b.c_[j];
            }
        }
        std::vector<Rational> acc(bs.phi, Rational(0));
        for (int k = 0; k < n; ++k) {
            if (raw[k].is_zero()) continue;
            const auto& row = bs.power[k];
            for (int j = 0; j < bs.phi; ++j)
                if (row[j]) acc[j] += raw[k] * Rational(row[j]);
        }
        Cyc z;
        z.n_ = n;
        z.c_ = std::move(acc);
        return z;
    }

    Cyc scaled(const Rational& r) const {
        Cyc z = *this;
        for (auto& c : z.c_) c *= r;
        return z;
    }

    /// Product of all Galois conjugates (a rational number).
    Rational norm() const {
        Cyc prod(1);
        for (int a = 1; a < n_; ++a)
            if (std::gcd(a, n_) == 1) prod = prod * galois(a);
        if (n_ == 1) return c_[0];
        return prod.rational();
    }

    Cyc inverse() const {
        if (is_zero()) throw InvalidInput("Cyc: inverse of zero");
        if (n_ == 1) return Cyc(Rational(1) / c_[0]);
        Cyc others(1);
        for (int a = 2; a < n_; ++a)
            if (std::gcd(a, n_) == 1) others = others * galois(a);
        Rational nm = (others * *this).rational();
        return others.scaled(Rational(1) / nm);
    }

    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    friend bool operator==(const Cyc& a, const Cyc& b) {
        if (a.n_ == b.n_) return a.c_ == b.c_;
        int m = static_cast<int>(lcm64(a.n_, b.n_));
        return a.lifted(m).c_ == b.lifted(m).c_;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        std::complex<double> s = 0;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            double ang = 2.0 * M_PI * static_cast<double>(i) / n_;
            s += c_[i].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return s;
    }

    /// Same value over the smallest Q(zeta_m) containing it (m divides the conductor).
    Cyc reduced() const {
        for (i64 m : divisors(n_)) {
            if (m == n_) break;
            if (in_subfield(static_cast<int>(m))) return express_in(static_cast<int>(m));
        }
        return *this;
    }

    /// Canonical text: minimal conductor, power-basis terms `c*E(n)^k`, no spaces.
    std::string str() const {
        Cyc r = reduced();
        std::string out;
        for (size_t i = 0; i < r.c_.size(); ++i) {
            const Rational& c = r.c_[i];
            if (c.is_zero()) continue;
            std::string term;
            Rational a = c < Rational(0) ? -c : c;
            bool neg = c < Rational(0);
            if (i == 0) {
                term = a.str();
            } else {
                if (a != Rational(1)) term = a.str() + "*";
                term += "E(" + std::to_string(r.n_) + ")";
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (neg) out += "-";
            else if (!out.empty()) out += "+";
            out += term;
        }
        return out.empty() ? "0" : out;
    }

    /// Parses sums of terms `c*E(n)^k`, `E(n)`, rationals `a/b`.
    static Cyc parse(std::string_view s) {
        size_t pos = 0;
        auto fail = [&](const std::string& msg) -> Cyc {
            throw ParseError("cyclotomic value '" + std::string(s) + "': " + msg, 0, static_cast<int>(pos) + 1);
        };
        if (s.empty()) return fail("empty");
        Cyc total(0);
        auto read_int = [&](i64& v) {
            size_t start = pos;
            v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + (s[pos] - '0');
                if (v > (INT64_MAX / 10)) fail("integer too large");
                ++pos;
            }
            return pos > start;
        };
        bool first = true;
        while (pos < s.size()) {
            int sign = 1;
            if (s[pos] == '+' || s[pos] == '-') {
                sign = s[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                fail("expected + or -");
            }
            first = false;
            Rational coef(1);
            bool have_coef = false;
            i64 v;
            if (read_int(v)) {
                have_coef = true;
                coef = Rational(v);
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    i64 d;
                    if (!read_int(d) || d == 0) fail("bad denominator");
                    coef = Rational(v, d);
                }
            }
            if (pos < s.size() && (s[pos] == '*' || s[pos] == 'E')) {
                if (s[pos] == '*') {
                    if (!have_coef) fail("dangling *");
                    ++pos;
                }
                if (pos + 1 >= s.size() || s[pos] != 'E' || s[pos + 1] != '(') fail("expected E(");
                pos += 2;
                i64 n;
                if (!read_int(n) || n == 0) fail("bad conductor");
                if (pos >= s.size() || s[pos] != ')') fail("expected )");
                ++pos;
                i64 k = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    bool negk = false;
                    if (pos < s.size() && s[pos] == '-') { negk = true; ++pos; }
                    if (!read_int(k)) fail("bad exponent");
                    if (negk) k = -k;
                }
                total += E(static_cast<int>(n), k).scaled(coef * Rational(sign));
            } else {
                if (!have_coef) fail("expected a term");
                total += Cyc(coef * Rational(sign));
            }
        }
        return total;
    }

private:
    bool in_subfield(int m) const {
        for (int a = 1; a < n_; ++a) {
            if (std::gcd(a, n_) != 1 || a % m != 1 % m) continue;
            if (galois(a).c_ != c_) return false;
        }
        return true;
    }

    /// Rewrites a value known to lie in Q(zeta_m) over the power basis of zeta_m.
    Cyc express_in(int m) const {
        int phim = static_cast<int>(totient(m));
        int phin = static_cast<int>(c_.size());
        // columns: zeta_m^j lifted to Q(zeta_n)
        std::vector<std::vector<Rational>> a(phin, std::vector<Rational>(phim + 1));
        for (int j = 0; j < phim; ++j) {
            Cyc col = E(m, j).lifted(n_);
            for (int i = 0; i < phin; ++i) a[i][j] = col.c_[i];
        }
        for (int i = 0; i < phin; ++i) a[i][phim] = c_[i];
        std::vector<int> pivcol;
        int row = 0;
        for (int col = 0; col < phim && row < phin; ++col) {
            int piv = -1;
            for (int i = row; i < phin; ++i)
                if (!a[i][col].is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(a[row], a[piv]);
            Rational inv = Rational(1) / a[row][col];
            for (auto& x : a[row]) x *= inv;
            for (int i = 0; i < phin; ++i) {
                if (i == row || a[i][col].is_zero()) continue;
                Rational f = a[i][col];
                for (int k = col; k <= phim; ++k) a[i][k] -= f * a[row][k];
            }
            pivcol.push_back(col);
            ++row;
        }
        Cyc z;
        z.n_ = m;
        z.c_.assign(phim, Rational(0));
        for (int i = 0; i < row; ++i) z.c_[pivcol[i]] = a[i][phim];
        return z;
    }

    int n_;
    std::vector<Rational> c_;
};

/// Integer multiset of roots of unity of a fixed order; converts to Cyc at the end.
class RootSum {
public:
    explicit RootSum(int n) : n_(n), counts_(n, 0) {}
    void add(i64 k, i64 mult = 1) { counts_[mod(k, n_)] += mult; }
    void add(const RootSum& o) {
        for (int k = 0; k < n_; ++k) counts_[k] += o.counts_[k];
    }
    int order() const { return n_; }
    const std::vector<i64>& counts() const { return counts_; }
    Cyc value() const { return Cyc::from_root_counts(n_, counts_); }
    void clear() { std::fill(counts_.begin(), counts_.end(), 0); }

private:
    int n_;
    std::vector<i64> counts_;
};

}  // namespace jetrep
