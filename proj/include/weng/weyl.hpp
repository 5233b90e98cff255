#pragma once
// Weyl group enumeration and the parabolic data used by the zeta formulas.
//
// Elements are stored as the images of the positive roots (one byte each);
// images of negative roots follow from w(-a) = -w(a).  An element is looked
// up by the images of the simple roots, which determine it.

#include "rootsys.hpp"

#include <cstdint>
#include <unordered_map>

namespace weng {

constexpr unsigned long long default_weyl_cap = 3000000ULL;

class WeylGroup {
public:
    const RootSystem* rs = nullptr;
    int P = 0;                         // number of positive roots
    std::vector<std::uint8_t> perm;    // order * P
    std::vector<std::uint16_t> len;
    std::vector<std::vector<int>> gens; // simple reflections on all root indices
    int w0 = 0;

    std::size_t order() const { return len.size(); }

    int act(int w, int a) const {
        if (a < P) return perm[static_cast<std::size_t>(w) * P + a];
        int b = perm[static_cast<std::size_t>(w) * P + (a - P)];
        return b < P ? b + P : b - P;
    }
    int length(int w) const { return len[w]; }

    int lookup(std::uint64_t key) const {
        auto it = ids_.find(key);
        return it == ids_.end() ? -1 : static_cast<int>(it->second);
    }

    std::uint64_t key_of(int w) const {
        std::uint64_t k = 0;
        for (int j = 0; j < rs->r; ++j) k |= static_cast<std::uint64_t>(act(w, j)) << (8 * j);
        return k;
    }

    // a * b
    int mul(int a, int b) const {
        std::uint64_t k = 0;
        for (int j = 0; j < rs->r; ++j) k |= static_cast<std::uint64_t>(act(a, act(b, j))) << (8 * j);
        int id = lookup(k);
        if (id < 0) throw internal_inconsistency("product not in group");
        return id;
    }

    int inverse(int w) const {
        std::uint64_t k = 0;
        for (int j = 0; j < rs->r; ++j) {
            int pre = -1;
            for (int a = 0; a < 2 * P; ++a)
                if (act(w, a) == j) { pre = a; break; }
            k |= static_cast<std::uint64_t>(pre) << (8 * j);
        }
        return lookup(k);
    }

    int generator(int j) const { return gen_ids_.at(j); }

    // a reduced word (1-based generator labels), read left to right
    std::vector<int> reduced_word(int w) const {
        std::vector<int> word;
        while (len[w] > 0) {
            int j = 0;
            while (act(w, j) < P) ++j; // right descent
            word.insert(word.begin(), j + 1);
            w = mul(w, gen_ids_[j]);
        }
        return word;
    }

    std::unordered_map<std::uint64_t, std::uint32_t> ids_;
    std::vector<int> gen_ids_;
};

inline std::vector<int> reflection_action(const RootSystem& rs, int j) {
    std::vector<int> g(rs.size());
    for (int a = 0; a < rs.size(); ++a) {
        IVec v = rs.roots[a];
        v[j] -= pair_with_simple_coroot(rs, rs.roots[a], j);
        g[a] = rs.find(v);
        if (g[a] < 0) throw internal_inconsistency("reflection left the root system");
    }
    return g;
}

inline WeylGroup enumerate_weyl(const RootSystem& rs, unsigned long long cap = default_weyl_cap) {
    unsigned long long order = classical_weyl_order(rs.spec);
    if (order > cap) throw CapExceeded(order, cap);
    WeylGroup G;
    G.rs = &rs;
    G.P = rs.npos;
    const int P = G.P, r = rs.r;
    for (int j = 0; j < r; ++j) G.gens.push_back(reflection_action(rs, j));
    G.perm.reserve(order * P);
    G.len.reserve(order);
    G.ids_.reserve(order * 2);

    std::vector<std::uint8_t> idp(P);
    for (int a = 0; a < P; ++a) idp[a] = static_cast<std::uint8_t>(a);
    G.perm.insert(G.perm.end(), idp.begin(), idp.end());
    G.len.push_back(0);
    G.ids_[G.key_of(0)] = 0;

    std::vector<std::uint8_t> buf(P);
    for (std::size_t cur = 0; cur < G.len.size(); ++cur) {
        for (int j = 0; j < r; ++j) {
            const auto& g = G.gens[j];
            std::uint64_t k = 0;
            for (int s = 0; s < r; ++s)
                k |= static_cast<std::uint64_t>(g[G.act(static_cast<int>(cur), s)]) << (8 * s);
            if (G.ids_.count(k)) continue;
            for (int a = 0; a < P; ++a) buf[a] = static_cast<std::uint8_t>(g[G.act(static_cast<int>(cur), a)]);
            G.ids_[k] = static_cast<std::uint32_t>(G.len.size());
            G.perm.insert(G.perm.end(), buf.begin(), buf.end());
            G.len.push_back(static_cast<std::uint16_t>(G.len[cur] + 1));
        }
    }
    if (G.order() != order) throw internal_inconsistency("Weyl group order mismatch");
    G.gen_ids_.assign(r, 0);
    for (int j = 0; j < r; ++j) {
        std::uint64_t k = 0;
        for (int s = 0; s < r; ++s) k |= static_cast<std::uint64_t>(G.gens[j][s]) << (8 * s);
        G.gen_ids_[j] = G.lookup(k);
    }
    G.w0 = static_cast<int>(std::max_element(G.len.begin(), G.len.end()) - G.len.begin());
    return G;
}

// Phi_w = Phi^+ cap w^{-1} Phi^-
inline std::vector<int> inversion_set(const WeylGroup& G, int w) {
    std::vector<int> out;
    for (int a = 0; a < G.P; ++a)
        if (G.act(w, a) >= G.P) out.push_back(a);
    return out;
}

// 1 iff w(alpha) is positive
inline int delta_indicator(const WeylGroup& G, int w, int a) { return G.act(w, a) < G.P ? 1 : 0; }

struct ParabolicData {
    int p = 0;
    std::vector<int> delta_p;      // simple root indices j != p-1
    std::vector<int> phi_p_plus;   // positive roots of the Levi factor
    std::vector<int> nonlevi_plus; // Phi^+ \ Phi_p^+
    int wp = 0;
    std::vector<int> frak_Wp;
    std::vector<int> lp;           // l_p for every element of W
    std::vector<int> plus, zero, minus, ddagger;
    std::vector<char> in_frak;
};

inline bool in_W_p(const WeylGroup& G, int p, int w) {
    const RootSystem& rs = *G.rs;
    for (int j = 0; j < rs.r; ++j)
        if (pairing_fundamental(rs, p, G.act(w, j)) != pairing_fundamental(rs, p, j)) return false;
    return true;
}

inline int compute_lp(const WeylGroup& G, const ParabolicData& pd, int w) {
    int n = 0;
    for (int a : pd.nonlevi_plus)
        if (G.act(w, a) >= G.P) ++n;
    return n;
}

inline ParabolicData compute_frak_Wp(const WeylGroup& G, const RootSystem& rs, int p) {
    if (p < 1 || p > rs.r) throw InvalidSpec("p out of range");
    ParabolicData pd;
    pd.p = p;
    for (int j = 0; j < rs.r; ++j)
        if (j != p - 1) pd.delta_p.push_back(j);
    for (int a = 0; a < rs.npos; ++a) (in_levi(rs, p, a) ? pd.phi_p_plus : pd.nonlevi_plus).push_back(a);

    pd.wp = -1;
    const int n = static_cast<int>(G.order());
    pd.in_frak.assign(n, 0);
    pd.lp.assign(n, 0);
    for (int w = 0; w < n; ++w) {
        bool ok = true;
        for (int j : pd.delta_p) {
            int im = G.act(w, j);
            if (!(im < rs.r || im >= G.P)) { ok = false; break; }
        }
        pd.in_frak[w] = ok;
        if (ok) pd.frak_Wp.push_back(w);
        pd.lp[w] = compute_lp(G, pd, w);
        if (pd.wp < 0 && in_W_p(G, p, w)) {
            bool all_neg = true;
            for (int j : pd.delta_p)
                if (G.act(w, j) < G.P) { all_neg = false; break; }
            if (all_neg) pd.wp = w;
        }
    }
    if (pd.wp < 0) throw internal_inconsistency("no longest element of W_p");
    const int total = static_cast<int>(pd.nonlevi_plus.size());
    for (int w : pd.frak_Wp) {
        int l = pd.lp[w];
        if (2 * l < total) pd.plus.push_back(w);
        else if (2 * l == total) pd.zero.push_back(w);
        else pd.minus.push_back(w);
        if (l == 0) pd.ddagger.push_back(w);
    }
    return pd;
}

inline int l_p(const ParabolicData& pd, int w) { return pd.lp.at(w); }

// w -> w0 w wp
inline int involution(const WeylGroup& G, const ParabolicData& pd, int w) {
    if (!pd.in_frak.at(w)) throw NotInFrakWp("element " + std::to_string(w) + " is not in frak W_p");
    return G.mul(G.mul(G.w0, w), pd.wp);
}

} // namespace weng
