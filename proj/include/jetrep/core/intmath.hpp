#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "jetrep/core/errors.hpp"

namespace jetrep {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i128 mod128(i128 a, i128 m) {
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 powmod(i64 base, u64 e, i64 m) {
    i64 result = 1 % m;
    i64 b = mod(base, m);
    while (e) {
        if (e & 1) result = static_cast<i64>(static_cast<i128>(result) * b % m);
        b = static_cast<i64>(static_cast<i128>(b) * b % m);
        e >>= 1;
    }
    return result;
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline i64 invmod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1) {
        i64 qq = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - qq * a1);
        std::tie(x, x1) = std::make_pair(x1, x - qq * x1);
    }
    if (g != 1) throw InvalidInput("invmod: not invertible");
    return mod(x, m);
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Returns (p, f) with q = p^f, or nullopt when q is not a prime power.
inline std::optional<std::pair<i64, int>> prime_power(i64 q) {
    if (q < 2) return std::nullopt;
    auto f = factorize(q);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

inline i64 ipow(i64 b, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) {
        i128 t = static_cast<i128>(r) * b;
        if (t > INT64_MAX || t < INT64_MIN) throw Overflow("ipow overflow");
        r = static_cast<i64>(t);
    }
    return r;
}

inline i64 totient(i64 n) {
    i64 r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline std::vector<i64> divisors(i64 n) {
    std::vector<i64> small, large;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Smallest generator of (Z/p)^x for prime p.
inline i64 primitive_root(i64 p) {
    if (p == 2) return 1;
    auto fac = factorize(p - 1);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [r, e] : fac)
            if (powmod(g, (p - 1) / r, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw InvalidInput("primitive_root: no generator");
}

inline i64 lcm64(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

}  // namespace jetrep
