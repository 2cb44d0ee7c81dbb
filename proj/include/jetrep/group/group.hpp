#pragma once

#include <algorithm>
#include <concepts>
#include <numeric>
#include <utility>
#include <vector>

#include "jetrep/core/errors.hpp"
#include "jetrep/core/intmath.hpp"

namespace jetrep {

/// A finite group with elements indexed 0..order()-1.
template <class G>
concept FiniteGroup = requires(const G& g, int i, int j) {
    { g.order() } -> std::convertible_to<i64>;
    { g.mul(i, j) } -> std::convertible_to<int>;
    { g.inv(i) } -> std::convertible_to<int>;
    { g.identity() } -> std::convertible_to<int>;
    { g.generators() } -> std::convertible_to<const std::vector<int>&>;
    { g.characteristic() } -> std::convertible_to<int>;
};

template <FiniteGroup G>
int group_power(const G& g, int x, i64 e) {
    int result = g.identity();
    if (e < 0) { x = g.inv(x); e = -e; }
    int base = x;
    while (e) {
        if (e & 1) result = g.mul(result, base);
        base = g.mul(base, base);
        e >>= 1;
    }
    return result;
}

template <FiniteGroup G>
i64 element_order(const G& g, int x) {
    i64 k = 1;
    int cur = x;
    const int id = g.identity();
    while (cur != id) {
        cur = g.mul(cur, x);
        ++k;
        if (k > g.order()) throw VerificationFailure("element_order: no finite order found");
    }
    return k;
}

template <FiniteGroup G>
int conjugate(const G& g, int x, int by) {  // by * x * by^{-1}
    return g.mul(g.mul(by, x), g.inv(by));
}

/// Topological Jordan decomposition g = s u inside <g>: s of prime-to-p order, u of p-power order.
template <FiniteGroup G>
std::pair<int, int> topological_jordan(const G& g, int x) {
    const i64 p = g.characteristic();
    i64 m = element_order(g, x);
    i64 pa = 1;
    while (m % (pa * p) == 0) pa *= p;
    i64 mp = m / pa;
    // e_s = 0 mod p^a, 1 mod m'; e_u = 1 - e_s
    i64 es = mp == 1 ? 0 : pa * invmod(pa % mp, mp) % m;
    i64 eu = mod(1 - es, m);
    return {group_power(g, x, es), group_power(g, x, eu)};
}

/// Closure of a generating set under multiplication; sorted element list.
template <FiniteGroup G>
std::vector<int> closure(const G& g, const std::vector<int>& gens) {
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    std::vector<int> out{g.identity()};
    seen[g.identity()] = 1;
    for (size_t i = 0; i < out.size(); ++i)
        for (int s : gens) {
            int y = g.mul(out[i], s);
            if (!seen[y]) { seen[y] = 1; out.push_back(y); }
        }
    std::sort(out.begin(), out.end());
    return out;
}

template <FiniteGroup G>
bool is_abelian(const G& g) {
    const auto& gens = g.generators();
    for (int a : gens)
        for (int b : gens)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

}  // namespace jetrep
