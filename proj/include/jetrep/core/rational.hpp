#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "jetrep/core/errors.hpp"
#include "jetrep/core/intmath.hpp"

namespace jetrep {

/// Exact rational with 64-bit numerator and denominator.
/// Intermediates use 128 bits; results that do not fit raise Overflow.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(i64 n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(i64 n, i64 d) { set(n, d); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return from128(-static_cast<i128>(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return from128(static_cast<i128>(a.num_) + b.num_, a.den_);
        i64 g = std::gcd(a.den_, b.den_);
        i128 n = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
        i128 d = static_cast<i128>(a.den_ / g) * b.den_;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        i64 g1 = std::gcd(a.num_, b.den_), g2 = std::gcd(b.num_, a.den_);
        i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
        i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
        return from128(n, d);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw InvalidInput("Rational: division by zero");
        return a * Rational(b.den_, b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        i128 l = static_cast<i128>(a.num_) * b.den_, r = static_cast<i128>(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void set(i64 n, i64 d) {
        if (d == 0) throw InvalidInput("Rational: zero denominator");
        *this = from128(n, d);
    }
    static Rational from128(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 a = n < 0 ? -n : n, b = d;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) throw Overflow("Rational overflow");
        Rational r;
        r.num_ = static_cast<i64>(n);
        r.den_ = n == 0 ? 1 : static_cast<i64>(d);
        return r;
    }

    i64 num_ = 0;
    i64 den_ = 1;
};

}  // namespace jetrep
