#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "jetrep/core/cyclotomic.hpp"
#include "jetrep/core/errors.hpp"
#include "jetrep/group/class_function.hpp"
#include "jetrep/group/filtration.hpp"
#include "jetrep/springer/jet_lie.hpp"

namespace jetrep {

/// theta = (a; b_1, ..., b_r): theta(s u) = zeta_{q+1}^{a log s} * psi0(Tr sum_j b_j y_j(u)), where s is the
/// prime-to-p part, log s its discrete log in the reduction T(F_q), and log u = sum_j t^j y_j E.
struct ThetaSpec {
    i64 a = 0;
    std::vector<int> b;  // field codes, index j-1 for layer t^j

    static ThetaSpec parse(const std::string& text) {
        ThetaSpec s;
        auto semi = text.find(';');
        try {
            s.a = std::stoll(text.substr(0, semi));
            if (semi != std::string::npos) {
                std::stringstream ss(text.substr(semi + 1));
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) s.b.push_back(std::stoi(item));
            }
        } catch (const std::logic_error&) {
            throw InvalidInput("cannot parse theta spec '" + text + "' (expected a;b1,b2,...)");
        }
        return s;
    }
    std::string str() const {
        std::string out = std::to_string(a) + ";";
        for (size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
        return out;
    }
};

/// The elliptic torus of SL2 over the jet ring with its Jordan coordinates.
class EllipticTorus {
public:
    explicit EllipticTorus(const JetGroup& g) : g_(&g), T_(torus_subgroup(g, TorusKind::Elliptic)) {
        if (g.kind() != GroupKind::SL2) throw InvalidInput("elliptic torus data is implemented for SL2 only");
        const JetRing& R = g.ring();
        const int q = g.q();
        const i64 n = T_.order();
        modulus_ = q + 1;
        // generator of the prime-to-p part: least index element of order q+1
        teich_.assign(n, 0);
        int gen = -1;
        for (int i = 0; i < n && gen < 0; ++i)
            if (element_order(T_, i) == q + 1) gen = i;
        if (gen < 0) throw VerificationFailure("elliptic torus has no element of order q+1");
        generator_ = gen;
        slog_.assign(n, -1);
        std::vector<int> ts;
        int cur = T_.identity();
        for (int k = 0; k <= q; ++k) {
            ts.push_back(cur);
            cur = T_.mul(cur, gen);
        }
        teich_elems_ = ts;
        // every t = s u with s = gen^k; u in T_{0+}
        for (int i = 0; i < n; ++i) {
            auto [s, u] = topological_jordan(T_, i);
            for (int k = 0; k <= q; ++k)
                if (ts[k] == s) slog_[i] = k;
            if (slog_[i] < 0) throw VerificationFailure("prime-to-p torus part outside the Teichmuller group");
            plus_part_.push_back(u);
            semisimple_part_.push_back(s);
        }
        // log coordinates on T_{0+}
        ylog_.assign(n, std::vector<int>(g.depth(), 0));
        for (int i = 0; i < n; ++i) {
            if (slog_[i] != 0) continue;
            plus_.push_back(i);
            JetMatrix l = truncated_log(R, g.matrix(T_.to_parent(i)));
            for (int j = 1; j <= g.depth(); ++j) ylog_[i][j - 1] = R.coeff(l[2], j);
        }
    }

    const JetGroup& group() const { return *g_; }
    const JetSubgroup& subgroup() const { return T_; }
    i64 order() const { return T_.order(); }
    int generator() const { return generator_; }
    /// Local indices of T_{0+} = T cap ker(mod t).
    const std::vector<int>& plus() const { return plus_; }
    /// Teichmuller elements gen^k, k = 0..q.
    const std::vector<int>& teichmuller() const { return teich_elems_; }
    int slog(int i) const { return slog_[i]; }
    int semisimple_part(int i) const { return semisimple_part_[i]; }
    int plus_part(int i) const { return plus_part_[i]; }
    const std::vector<int>& ylog(int i) const { return ylog_[i]; }

    /// Exponent of theta(t) over N = (q+1) p, so theta(t) = E(N)^expo.
    i64 conductor() const { return static_cast<i64>(modulus_) * g_->p(); }
    std::vector<i64> theta_exponents(const ThetaSpec& s) const {
        const FiniteField& F = g_->ring().field();
        const i64 N = conductor();
        const i64 p = g_->p();
        std::vector<i64> e(T_.order());
        for (int i = 0; i < T_.order(); ++i) {
            int u = plus_part_[i];
            int acc = 0;
            for (int j = 0; j < static_cast<int>(s.b.size()) && j < g_->depth(); ++j)
                acc = F.add(acc, F.mul(s.b[j], ylog_[u][j]));
            i64 tr = F.trace(acc);
            e[i] = mod(s.a * slog_[i] * p + tr * modulus_, N);
        }
        return e;
    }

private:
    const JetGroup* g_;
    JetSubgroup T_;
    int modulus_ = 0;
    int generator_ = 0;
    std::vector<int> teich_, teich_elems_, slog_, plus_part_, semisimple_part_, plus_;
    std::vector<std::vector<int>> ylog_;
};

/// A character of the elliptic torus stored as exponents over E(N).
struct TorusCharacter {
    const EllipticTorus* torus = nullptr;
    ThetaSpec spec;
    std::vector<i64> expo;
    i64 N = 1;

    TorusCharacter() = default;
    TorusCharacter(const EllipticTorus& t, ThetaSpec s) : torus(&t), spec(std::move(s)), expo(t.theta_exponents(spec)), N(t.conductor()) {}

    Cyc value(int local) const { return Cyc::E(static_cast<int>(N), expo[local]); }
    Cyc at(int parent) const {
        int l = torus->subgroup().to_local(parent);
        if (l < 0) throw InvalidInput("element is not in the torus");
        return value(l);
    }
    std::vector<Cyc> values() const {
        std::vector<Cyc> v;
        for (size_t i = 0; i < expo.size(); ++i) v.push_back(value(static_cast<int>(i)));
        return v;
    }
    /// theta^w = theta, where w acts on T by inversion.
    bool weyl_fixed() const {
        const auto& T = torus->subgroup();
        for (int i = 0; i < T.order(); ++i)
            if (mod(expo[T.inv(i)] - expo[i], N) != 0) return false;
        return true;
    }
    /// Whether theta is nontrivial on the deepest layer T_r = T cap ker(mod t^r).
    bool nontrivial_on_deepest_layer() const {
        const JetGroup& g = torus->group();
        const auto& T = torus->subgroup();
        if (g.depth() == 0) return false;
        for (int i = 0; i < T.order(); ++i)
            if (g.in_congruence_kernel(T.to_parent(i), g.depth()) && mod(expo[i], N) != 0) return true;
        return false;
    }
    /// Multiplicativity check over all pairs of generators (cheap) and all elements against one generator.
    bool is_homomorphism() const {
        const auto& T = torus->subgroup();
        for (int i = 0; i < T.order(); ++i)
            for (int s : T.generators())
                if (mod(expo[T.mul(i, s)] - expo[i] - expo[s], N) != 0) return false;
        return true;
    }
};

}  // namespace jetrep
