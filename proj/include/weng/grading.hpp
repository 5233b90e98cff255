#pragma once
// lambda_p-grading of a root system: Sigma_p(k,h), the counting tables N and
// M, the constants c_p, k_p, hbar_k^{+-}, extremal roots and chain
// decompositions.  Everything here needs the root list only.

#include "weyl.hpp"

#include <functional>
#include <set>

namespace weng {

struct GradingTables {
    int p = 0;
    int c_p = 0;
    int k_p = 0;
    std::map<std::pair<int, int>, std::vector<int>> sigma; // (k,h) -> root indices, all of Phi
    std::map<std::pair<int, int>, int> N;                  // (k,h) -> |Sigma_p(k,h)|
    std::map<int, int> hbar_minus, hbar_plus;
    std::map<int, int> lowest, highest;
    const RootSystem* rs = nullptr;

    int n(int k, int h) const {
        auto it = N.find({k, h});
        return it == N.end() ? 0 : it->second;
    }

    // Sigma_p(k), sorted by (height, digits)
    std::vector<int> level(int k) const {
        std::vector<int> out;
        for (const auto& [kh, v] : sigma)
            if (kh.first == k) out.insert(out.end(), v.begin(), v.end());
        return out;
    }

    // nonzero (h, N) entries for fixed k
    std::vector<std::pair<int, int>> row(int k) const {
        std::vector<std::pair<int, int>> out;
        for (const auto& [kh, v] : N)
            if (kh.first == k) out.push_back({kh.second, v});
        return out;
    }
};

// c_p = 2<lambda_p - rho_p, alpha_p^vee>
inline int c_p_from_rho(const RootSystem& rs, int p) {
    auto [rho, rhop] = rho_and_rho_p(rs, p);
    Rational v = 2 - 2 * pair_weight_coroot(rs, rhop, p - 1);
    if (v.get_den() != 1) throw internal_inconsistency("non-integral c_p");
    return static_cast<int>(v.get_num().get_si());
}

// beta dominates alpha in coroot coordinates
inline bool coroot_geq(const RootSystem& rs, int beta, int alpha) {
    for (int i = 0; i < rs.r; ++i)
        if (rs.coroots[beta][i] < rs.coroots[alpha][i]) return false;
    return true;
}

inline GradingTables build_grading(const RootSystem& rs, int p) {
    if (p < 1 || p > rs.r) throw InvalidSpec("p out of range");
    GradingTables T;
    T.rs = &rs;
    T.p = p;
    for (int a = 0; a < rs.size(); ++a) {
        int k = pairing_fundamental(rs, p, a), h = height_coroot(rs, a);
        T.sigma[{k, h}].push_back(a);
    }
    for (auto& [kh, v] : T.sigma) T.N[kh] = static_cast<int>(v.size());
    T.k_p = rs.highest_coroot_coeffs[p - 1];

    for (int k = 1; k <= T.k_p; ++k) {
        auto lev = T.level(k);
        int lo = -1, hi = -1;
        for (int b : lev) {
            bool is_lo = true, is_hi = true;
            for (int g : lev) {
                if (!coroot_geq(rs, g, b)) is_lo = false;
                if (!coroot_geq(rs, b, g)) is_hi = false;
            }
            if (is_lo) lo = b;
            if (is_hi) hi = b;
        }
        if (lo < 0 || hi < 0) throw InternalError("NoExtremalRoot", "no extremal root in Sigma_p(" + std::to_string(k) + ")");
        T.lowest[k] = lo;
        T.highest[k] = hi;
        T.hbar_minus[k] = height_coroot(rs, lo) - k;
        T.hbar_plus[k] = height_coroot(rs, hi) - k;
    }

    T.c_p = c_p_from_rho(rs, p);
    if (T.c_p != 2 + T.hbar_plus.at(1))
        throw internal_inconsistency("c_p formulas disagree: " + std::to_string(T.c_p) + " vs " +
                                     std::to_string(2 + T.hbar_plus.at(1)));
    return T;
}

// #{alpha in w^{-1}Phi^- : <lambda_p, alpha^vee> = k, ht alpha^vee = h}
inline int N_pw(const GradingTables& T, const WeylGroup& G, int w, int k, int h) {
    auto it = T.sigma.find({k, h});
    if (it == T.sigma.end()) return 0;
    int n = 0;
    for (int a : it->second)
        if (G.act(w, a) >= G.P) ++n;
    return n;
}

// closed form, k >= 1
inline int M_p(const GradingTables& T, int k, int h) {
    if (2 * h - 1 <= k * T.c_p) return 0;
    return T.n(k, h - 1) - T.n(k, h);
}

// the definition: max over frak W_p
inline int M_p_bruteforce(const GradingTables& T, const WeylGroup& G, const ParabolicData& pd, int k, int h) {
    int best = std::numeric_limits<int>::min();
    for (int w : pd.frak_Wp) best = std::max(best, N_pw(T, G, w, k, h - 1) - N_pw(T, G, w, k, h));
    return best;
}

inline std::pair<int, int> lowest_highest(const GradingTables& T, int k) {
    if (!T.lowest.count(k)) throw InvalidSpec("k out of range 1..k_p");
    return {T.lowest.at(k), T.highest.at(k)};
}

struct ChainDecomposition {
    int k = 0;
    std::vector<std::vector<int>> chains;     // each chain runs upward
    std::vector<std::vector<int>> step_roots; // simple root index added between members
};

// Returns an empty string when all chain invariants hold, else a description.
inline std::string chain_invariant_violation(const GradingTables& T, const ChainDecomposition& D) {
    const RootSystem& rs = *T.rs;
    const int k = D.k, kc = k * T.c_p;
    auto lev = T.level(k);
    std::multiset<int> all;
    for (const auto& ch : D.chains) all.insert(ch.begin(), ch.end());
    if (all != std::multiset<int>(lev.begin(), lev.end())) return "chains do not partition Sigma_p(k)";
    if (D.chains.empty()) return "no chains";
    const auto& c1 = D.chains.front();
    if (c1.front() != T.lowest.at(k) || c1.back() != T.highest.at(k)) return "first chain does not join the extremal roots";
    if (static_cast<int>(c1.size()) != height_coroot(rs, c1.back()) - height_coroot(rs, c1.front()) + 1)
        return "first chain has wrong size";
    for (std::size_t m = 1; m < D.chains.size(); ++m)
        if (D.chains[m].size() >= c1.size() || D.chains[m].empty()) return "chain sizes not below the first";
    int prev = -1;
    for (std::size_t m = 0; m < D.chains.size(); ++m) {
        const auto& ch = D.chains[m];
        for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
            IVec d = rs.coroots[ch[i + 1]];
            for (int j = 0; j < rs.r; ++j) d[j] -= rs.coroots[ch[i]][j];
            int ones = 0, bad = 0;
            for (int j = 0; j < rs.r; ++j) {
                if (d[j] == 1 && j != T.p - 1) ++ones;
                else if (d[j] != 0) ++bad;
            }
            if (ones != 1 || bad) return "consecutive members do not differ by a simple coroot of Delta_p";
        }
        int hs = height_coroot(rs, ch.front()), he = height_coroot(rs, ch.back());
        if (2 * hs > kc) return "chain starts above k c_p / 2";
        if (m == 1 && hs <= prev) return "second chain does not start strictly higher than the first";
        if (m > 1 && hs < prev) return "start heights not monotone";
        if (he != kc - hs) return "chain ends are not mirror symmetric";
        prev = hs;
    }
    return {};
}

inline ChainDecomposition chain_decomposition(const GradingTables& T, int k) {
    const RootSystem& rs = *T.rs;
    if (k < 1 || k > T.k_p) throw InvalidSpec("k out of range 1..k_p");
    const int kc = k * T.c_p;
    auto lev = T.level(k);
    std::set<int> uncovered(lev.begin(), lev.end());
    ChainDecomposition D;
    D.k = k;

    // chains are chosen one at a time (lowest uncovered start, ties by smallest
    // digits; steps tried in increasing simple-root order); if the remainder
    // cannot be completed we backtrack into earlier chains
    auto start_of = [&]() {
        return *std::min_element(uncovered.begin(), uncovered.end(), [&](int a, int b) {
            int ha = height_coroot(rs, a), hb = height_coroot(rs, b);
            if (ha != hb) return ha < hb;
            return rs.coroots[a] < rs.coroots[b];
        });
    };
    std::function<bool()> place = [&]() -> bool {
        if (uncovered.empty()) return true;
        const int start = start_of();
        const bool first = D.chains.empty();
        const int target = kc - height_coroot(rs, start);
        if (target < height_coroot(rs, start)) return false;
        std::vector<int> path{start}, steps;
        uncovered.erase(start);
        std::function<bool(int)> dfs = [&](int cur) -> bool {
            if (height_coroot(rs, cur) == target) {
                if (first && cur != T.highest.at(k)) return false;
                D.chains.push_back(path);
                D.step_roots.push_back(steps);
                if (place()) return true;
                D.chains.pop_back();
                D.step_roots.pop_back();
                return false;
            }
            for (int j = 0; j < rs.r; ++j) {
                if (j == T.p - 1) continue;
                IVec up = rs.coroots[cur];
                up[j] += 1;
                int nxt = rs.find_coroot(up);
                if (nxt < 0 || !uncovered.count(nxt)) continue;
                uncovered.erase(nxt);
                path.push_back(nxt);
                steps.push_back(j);
                if (dfs(nxt)) return true;
                path.pop_back();
                steps.pop_back();
                uncovered.insert(nxt);
            }
            return false;
        };
        if (dfs(start)) return true;
        uncovered.insert(start);
        return false;
    };
    if (!place()) throw InternalError("DecompositionNotFound", "no chain decomposition of Sigma_p(" + std::to_string(k) + ")");
    auto err = chain_invariant_violation(T, D);
    if (!err.empty()) throw InternalError("DecompositionNotFound", err);
    return D;
}

} // namespace weng
