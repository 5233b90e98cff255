#pragma once
// Irreducible reduced root systems built by closure from the Cartan matrix.
//
// Numbering follows Kac's tables (see README for the diagrams):
//   B_n: alpha_n short;  C_n: alpha_n long;  D_n: fork at n-2;
//   E_n: branch node attached to 3 (E6, E7) or 5 (E8);
//   F4: alpha_1, alpha_2 short;  G2: alpha_1 short, alpha_2 long.

#include "error.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace weng {

using Rational = mpq_class;
using IVec = std::vector<int>;

enum class Series { A, B, C, D, E, F, G };

inline char series_char(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

inline Series parse_series(const std::string& s) {
    if (s.size() == 1) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        if (c >= 'A' && c <= 'G') return static_cast<Series>(c - 'A');
    }
    throw InvalidSpec("unknown series '" + s + "'");
}

struct RootSystemSpec {
    Series series;
    int rank;

    std::string name() const { return std::string(1, series_char(series)) + std::to_string(rank); }
    bool operator==(const RootSystemSpec&) const = default;
};

inline bool valid_spec(const RootSystemSpec& sp) {
    int r = sp.rank;
    switch (sp.series) {
    case Series::A: return r >= 1;
    case Series::B: return r >= 2;
    case Series::C: return r >= 3;
    case Series::D: return r >= 4;
    case Series::E: return r >= 6 && r <= 8;
    case Series::F: return r == 4;
    case Series::G: return r == 2;
    }
    return false;
}

inline void require_valid(const RootSystemSpec& sp) {
    if (!valid_spec(sp)) throw InvalidSpec("invalid rank " + std::to_string(sp.rank) + " for series " +
                                           std::string(1, series_char(sp.series)));
}

struct RootSystem {
    RootSystemSpec spec;
    int r = 0;
    std::vector<IVec> cartan;       // A_ij = <alpha_i^vee, alpha_j>
    std::vector<int> symmetrizer;   // d_i = (alpha_i, alpha_i)/2, smallest integers
    std::vector<IVec> roots;        // simple-root coordinates
    std::vector<IVec> coroots;      // simple-coroot coordinates
    std::vector<int> norm;          // (alpha, alpha)/2 in units of the symmetrizer
    IVec highest_root_coeffs;       // highest root of Phi
    IVec highest_coroot_coeffs;     // highest root of Phi^vee
    int npos = 0;

    int size() const { return static_cast<int>(roots.size()); }
    bool positive(int i) const { return i < npos; }
    int neg(int i) const { return i < npos ? i + npos : i - npos; }
    int simple(int i) const { return i; } // simple roots are the first r positives

    // index lookup by root coordinates; -1 if not a root
    int find(const IVec& c) const {
        auto it = index_.find(c);
        return it == index_.end() ? -1 : it->second;
    }

    int find_coroot(const IVec& a) const {
        auto it = coindex_.find(a);
        return it == coindex_.end() ? -1 : it->second;
    }

    std::map<IVec, int> index_;
    std::map<IVec, int> coindex_;
};

namespace detail {

inline void link(std::vector<IVec>& B, int i, int j, int v) { B[i][j] = B[j][i] = v; }

// symmetrized Cartan matrix B = D A, together with D
inline void cartan_data(const RootSystemSpec& sp, std::vector<IVec>& A, std::vector<int>& d) {
    const int n = sp.rank;
    std::vector<IVec> B(n, IVec(n, 0));
    d.assign(n, 1);
    auto chain = [&](int from, int to) {
        for (int i = from; i + 1 <= to; ++i) link(B, i, i + 1, -1);
    };
    switch (sp.series) {
    case Series::A: chain(0, n - 1); break;
    case Series::B:
        for (int i = 0; i < n - 1; ++i) d[i] = 2;
        for (int i = 0; i + 1 < n - 1; ++i) link(B, i, i + 1, -2);
        link(B, n - 2, n - 1, -2);
        break;
    case Series::C:
        d[n - 1] = 2;
        chain(0, n - 2);
        link(B, n - 2, n - 1, -2);
        break;
    case Series::D:
        chain(0, n - 2);
        link(B, n - 3, n - 1, -1);
        break;
    case Series::E:
        chain(0, n - 2);
        link(B, n - 1, n == 8 ? 4 : 2, -1);
        break;
    case Series::F:
        d = {1, 1, 2, 2};
        link(B, 0, 1, -1);
        link(B, 1, 2, -2);
        link(B, 2, 3, -2);
        break;
    case Series::G:
        d = {1, 3};
        link(B, 0, 1, -3);
        break;
    }
    for (int i = 0; i < n; ++i) B[i][i] = 2 * d[i];
    A.assign(n, IVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = B[i][j] / d[i];
}

inline bool lex_less_height(const IVec& a, const IVec& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b; // puts alpha_i at index i-1

}

} // namespace detail

// <beta, alpha_i^vee> for beta in simple-root coordinates
inline int pair_with_simple_coroot(const RootSystem& rs, const IVec& beta, int i) {
    int s = 0;
    for (int j = 0; j < rs.r; ++j) s += beta[j] * rs.cartan[i][j];
    return s;
}

// (beta, gamma) with respect to the symmetrized form
inline int inner(const RootSystem& rs, const IVec& a, const IVec& b) {
    int s = 0;
    for (int i = 0; i < rs.r; ++i)
        for (int j = 0; j < rs.r; ++j) s += a[i] * rs.symmetrizer[i] * rs.cartan[i][j] * b[j];
    return s;
}

inline RootSystem build_root_system(const RootSystemSpec& spec) {
    require_valid(spec);
    RootSystem rs;
    rs.spec = spec;
    rs.r = spec.rank;
    const int n = rs.r;
    detail::cartan_data(spec, rs.cartan, rs.symmetrizer);

    // closure by height using alpha-strings: beta + alpha_i is a root iff q > 0,
    // q = p - <beta, alpha_i^vee>, p = length of the downward string
    std::vector<IVec> pos;
    std::map<IVec, int> seen;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        seen[e] = 1;
        pos.push_back(e);
    }
    for (std::size_t cur = 0; cur < pos.size(); ++cur) {
        const IVec beta = pos[cur];
        for (int i = 0; i < n; ++i) {
            int p = 0;
            IVec down = beta;
            while (true) {
                down[i] -= 1;
                if (!seen.count(down)) break;
                ++p;
            }
            int q = p - pair_with_simple_coroot(rs, beta, i);
            if (q > 0) {
                IVec up = beta;
                up[i] += 1;
                if (!seen.count(up)) {
                    seen[up] = 1;
                    pos.push_back(up);
                }
            }
        }
    }
    std::sort(pos.begin(), pos.end(), detail::lex_less_height);
    rs.npos = static_cast<int>(pos.size());
    rs.roots = pos;
    for (auto v : pos) {
        for (auto& x : v) x = -x;
        rs.roots.push_back(v);
    }
    for (int i = 0; i < rs.size(); ++i) rs.index_[rs.roots[i]] = i;

    // coroots: a_i = c_i d_i / |alpha|  with |alpha| = (alpha,alpha)/2
    for (const auto& c : rs.roots) {
        int nn = inner(rs, c, c) / 2;
        rs.norm.push_back(nn);
        IVec a(n);
        for (int i = 0; i < n; ++i) {
            int num = c[i] * rs.symmetrizer[i];
            if (num % nn != 0) throw internal_inconsistency("non-integral coroot");
            a[i] = num / nn;
        }
        rs.coroots.push_back(a);
    }
    for (int i = 0; i < rs.size(); ++i) rs.coindex_[rs.coroots[i]] = i;

    auto highest = [&](const std::vector<IVec>& vs) {
        IVec best = vs.front();
        for (const auto& v : vs)
            if (std::accumulate(v.begin(), v.end(), 0) > std::accumulate(best.begin(), best.end(), 0)) best = v;
        return best;
    };
    rs.highest_root_coeffs = highest(std::vector<IVec>(rs.roots.begin(), rs.roots.begin() + rs.npos));
    rs.highest_coroot_coeffs = highest(std::vector<IVec>(rs.coroots.begin(), rs.coroots.begin() + rs.npos));
    return rs;
}

inline const IVec& coroot_of(const RootSystem& rs, int idx) { return rs.coroots.at(idx); }

inline int height(const IVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

inline int height_root(const RootSystem& rs, int idx) { return height(rs.roots.at(idx)); }
inline int height_coroot(const RootSystem& rs, int idx) { return height(rs.coroots.at(idx)); }

// <lambda_p, alpha^vee>, p is 1-based
inline int pairing_fundamental(const RootSystem& rs, int p, int idx) { return rs.coroots.at(idx).at(p - 1); }

using QVec = std::vector<Rational>;

// Phi_p^+ : positive roots with zero alpha_p coefficient
inline bool in_levi(const RootSystem& rs, int p, int idx) { return rs.roots[idx][p - 1] == 0; }

// rho and rho_p in simple-root coordinates
inline std::pair<QVec, QVec> rho_and_rho_p(const RootSystem& rs, int p) {
    QVec rho(rs.r, 0), rhop(rs.r, 0);
    for (int i = 0; i < rs.npos; ++i) {
        for (int j = 0; j < rs.r; ++j) {
            rho[j] += Rational(rs.roots[i][j], 2);
            if (in_levi(rs, p, i)) rhop[j] += Rational(rs.roots[i][j], 2);
        }
    }
    for (auto& x : rho) x.canonicalize();
    for (auto& x : rhop) x.canonicalize();
    return {rho, rhop};
}

// <v, alpha^vee> for v in simple-root coordinates and a root index
inline Rational pair_weight_coroot(const RootSystem& rs, const QVec& v, int idx) {
    Rational s = 0;
    const IVec& a = rs.coroots[idx];
    for (int i = 0; i < rs.r; ++i)
        for (int j = 0; j < rs.r; ++j) s += v[i] * a[j] * rs.cartan[j][i];
    return s;
}

inline std::string digits(const IVec& v) {
    std::string s;
    for (int x : v) {
        if (x < 0 || x > 9) {
            s.clear();
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
            return s;
        }
        s += static_cast<char>('0' + x);
    }
    return s;
}

// Classical counts, for cross-checks only.
inline int classical_positive_count(const RootSystemSpec& sp) {
    int r = sp.rank;
    switch (sp.series) {
    case Series::A: return r * (r + 1) / 2;
    case Series::B:
    case Series::C: return r * r;
    case Series::D: return r * (r - 1);
    case Series::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
    }
    return 0;
}

inline unsigned long long classical_weyl_order(const RootSystemSpec& sp) {
    auto fact = [](int n) {
        unsigned long long f = 1;
        for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
        return f;
    };
    int r = sp.rank;
    switch (sp.series) {
    case Series::A: return fact(r + 1);
    case Series::B:
    case Series::C: return (1ULL << r) * fact(r);
    case Series::D: return (1ULL << (r - 1)) * fact(r);
    case Series::E: return r == 6 ? 51840ULL : r == 7 ? 2903040ULL : 696729600ULL;
    case Series::F: return 1152;
    case Series::G: return 12;
    }
    return 0;
}

} // namespace weng
