#pragma once
// Construction of the period omega_p, the zeta function zhat_p and the
// X/E/D/R decomposition, plus the exact checks built on them.

#include "grading.hpp"
#include "symbolic.hpp"

#include <limits>
#include <memory>
#include <set>

namespace weng {

// Everything attached to one (Phi, p).  The root system and Weyl group are
// shared between the p of one system.
struct Case {
    std::shared_ptr<const RootSystem> rs;
    std::shared_ptr<const WeylGroup> G;
    ParabolicData pd;
    GradingTables T;
    int p = 0;
    int c() const { return T.c_p; }
};

inline std::vector<Case> make_cases(const RootSystemSpec& spec, const std::vector<int>& ps,
                                    unsigned long long cap = default_weyl_cap) {
    auto rs = std::make_shared<const RootSystem>(build_root_system(spec));
    auto G = std::make_shared<const WeylGroup>(enumerate_weyl(*rs, cap));
    std::vector<Case> out;
    for (int p : ps) {
        if (p < 1 || p > rs->r) throw InvalidSpec("p out of range");
        Case c;
        c.rs = rs;
        c.G = G;
        c.p = p;
        c.pd = compute_frak_Wp(*G, *rs, p);
        c.T = build_grading(*rs, p);
        out.push_back(std::move(c));
    }
    return out;
}

inline Case make_case(const RootSystemSpec& spec, int p, unsigned long long cap = default_weyl_cap) {
    return std::move(make_cases(spec, {p}, cap).front());
}

namespace detail {

inline bool in_delta_p(const ParabolicData& pd, int a) {
    return std::find(pd.delta_p.begin(), pd.delta_p.end(), a) != pd.delta_p.end();
}

// w^{-1} Delta as root indices
inline std::vector<int> preimage_of_simple(const WeylGroup& G, int w) {
    std::vector<int> out;
    const int r = G.rs->r;
    for (int a = 0; a < 2 * G.P; ++a)
        if (G.act(w, a) < r) out.push_back(a);
    return out;
}

} // namespace detail

// ------------------------------------------------------------------ omega_p

inline Term omega_term(const Case& C, int w) {
    const RootSystem& rs = *C.rs;
    const WeylGroup& G = *C.G;
    Term t;
    for (int a : detail::preimage_of_simple(G, w)) {
        if (detail::in_delta_p(C.pd, a)) continue;
        t.mul_linear(pairing_fundamental(rs, C.p, a), height_coroot(rs, a) - 1, -1);
    }
    for (int a : inversion_set(G, w)) {
        const int k = pairing_fundamental(rs, C.p, a), h = height_coroot(rs, a);
        if (!detail::in_delta_p(C.pd, a)) t.mul_zhat(k, h, 1);
        t.mul_zhat(-k, -h, -1);
    }
    return t;
}

inline std::vector<Term> omega_terms(const Case& C) {
    std::vector<Term> out;
    for (int w : C.pd.frak_Wp) out.push_back(omega_term(C, w));
    return out;
}

inline ZetaExpression omega_p(const Case& C) { return ZetaExpression(omega_terms(C)); }

// ------------------------------------------------------------------ zhat_p

// The clearing product prod zhat(ks+h)^{M_p(k,h)}: k >= 1 from the closed
// form, k = 0 from the constant denominators of omega_p.
inline Term clearing_product(const Case& C, const std::vector<Term>& omega) {
    std::map<LinearFactor, long> need;
    for (const auto& t : omega) {
        for (const auto& [f, e] : t.mono)
            if (e < 0) need[f] = std::max(need[f], -e);
        for (const auto& [m, q] : t.coeff.terms())
            for (const auto& [n, e] : m)
                if (e < 0) need[{0, n}] = std::max(need[{0, n}], -e);
    }
    Term P;
    int hmax = 0;
    for (int a = 0; a < C.rs->npos; ++a) hmax = std::max(hmax, height_coroot(*C.rs, a));
    for (int k = 1; k <= C.T.k_p; ++k)
        for (int h = 2; h <= hmax + 1; ++h) {
            long m = M_p(C.T, k, h);
            auto it = need.find({k, h});
            long seen = it == need.end() ? 0 : it->second;
            if (m != seen)
                throw internal_inconsistency("M_p(" + std::to_string(k) + "," + std::to_string(h) + ") = " +
                                             std::to_string(m) + " but omega_p needs " + std::to_string(seen));
            P.mul_zhat(k, h, m);
        }
    for (const auto& [f, e] : need)
        if (f.k == 0) P.mul_zhat(0, f.c, e);
    return P;
}

inline void require_cleared(const Term& t) {
    for (const auto& [f, e] : t.mono)
        if (e < 0) throw InternalError("NotCleared", "zhat(" + detail::affine(f.k, f.c, false) + ") left in a denominator");
    for (const auto& [m, q] : t.coeff.terms())
        for (const auto& [n, e] : m)
            if (e < 0) throw InternalError("NotCleared", "zhat(" + std::to_string(n) + ") left in a denominator");
}

// per-w terms of zhat_p, in frak_Wp order
inline std::vector<Term> zhat_terms(const Case& C, const std::vector<Term>& omega) {
    Term P = clearing_product(C, omega);
    std::vector<Term> out;
    for (auto t : omega) {
        t.mul(P);
        require_cleared(t);
        out.push_back(t);
    }
    return out;
}

inline ZetaExpression zhat_p(const Case& C) { return ZetaExpression(zhat_terms(C, omega_terms(C))); }

// ------------------------------------------------------------ X, E, D, R

struct WData {
    int w = 0;
    int m = 0;           // |Delta_p cap w^{-1} Phi^+|
    FactoredRational q;  // q_w, so that Q_p = prod q_w
    ConstantCombo C;     // C_{p,w}
    Term X;              // X_{p,w}, xi factors expanded
    int lp = 0;
};

struct XEQDRecord {
    int p = 0, c = 0;
    std::vector<WData> wd;
    FactorBag Qp;      // monic part of Q_p
    Rational content;  // scalar of Q_p; X_p, E_p, Q^dd below are stored divided by it
    FactorBag lcm;     // per-factor max over q_w, so R_p = Qp - lcm
    FactorBag Rp;
    Term Dp;
    ZetaExpression Xp, Ep, xi, eps;
    Term Xdd;
    ZetaExpression Qdd;
    int sign = 0;      // Q_p(-c-s) = sign * Q_p(s)
    int xi_sign = 0;   // xi_p(-c-s) = xi_sign * xi_p(s)
};

inline WData w_data(const Case& C, int w) {
    const RootSystem& rs = *C.rs;
    const WeylGroup& G = *C.G;
    WData d;
    d.w = w;
    d.lp = C.pd.lp[w];
    for (int j : C.pd.delta_p)
        if (G.act(w, j) < G.P) ++d.m;
    d.q.scalar = rpow(Rational(2), d.m);
    d.C = rpow(Rational(2), d.m);
    if (d.m) d.C = d.C * ConstantCombo::zhat(2, d.m);
    for (int a : detail::preimage_of_simple(G, w))
        if (!detail::in_delta_p(C.pd, a)) d.q.mul_linear(pairing_fundamental(rs, C.p, a), height_coroot(rs, a) - 1, 1);
    for (int a = 0; a < rs.npos; ++a) {
        if (detail::in_delta_p(C.pd, a)) continue;
        const int k = pairing_fundamental(rs, C.p, a), n = height_coroot(rs, a) + delta_indicator(G, w, a);
        d.q.mul_linear(k, n, 1);
        d.q.mul_linear(k, n - 1, 1);
        if (k == 0) d.C = d.C * ConstantCombo::zhat(n) * Rational(n * (n - 1));
    }
    for (int a : C.pd.nonlevi_plus)
        d.X.mul_xi(pairing_fundamental(rs, C.p, a), height_coroot(rs, a) + delta_indicator(G, w, a), 1);
    return d;
}

inline Term D_p(const Case& C) {
    Term D;
    int hmax = 0;
    for (int a = 0; a < C.rs->npos; ++a) hmax = std::max(hmax, height_coroot(*C.rs, a));
    for (int k = 1; k <= C.T.k_p; ++k)
        for (int h = 2; h <= hmax + 1; ++h) D.mul_xi(k, h, C.T.n(k, h - 1) - M_p(C.T, k, h));
    return D;
}

inline Term inverse(const Term& t) {
    if (!t.coeff.is_rational()) throw internal_inconsistency("inverting a non-rational coefficient");
    Term r;
    r.coeff = Rational(1) / t.coeff.rational_value();
    for (const auto& [f, e] : t.rat) r.rat[f] = -e;
    for (const auto& [f, e] : t.mono) r.mono[f] = -e;
    return r;
}

inline void require_exact(const Term& t, const std::string& what) {
    for (const auto& [f, e] : t.rat)
        if (e < 0) throw InternalError("DivisionNotExact", what + ": factor " + detail::factor_string(f, 1, false) + " left over");
    for (const auto& [f, e] : t.mono)
        if (e < 0) throw InternalError("DivisionNotExact", what + ": zhat factor left over");
}

// sign s with reflect(Q) = s * Q, 0 if none
inline int reflection_sign(const FactoredRational& q, long c) {
    auto r = reflect(q, c);
    if (r.bag != q.bag) return 0;
    if (r.scalar == q.scalar) return 1;
    if (r.scalar == -q.scalar) return -1;
    return 0;
}

inline int expression_reflection_sign(const ZetaExpression& e, long c) {
    auto r = substitute_reflect(e, c);
    if (r == e) return 1;
    if (r == e.scaled(Rational(-1))) return -1;
    return 0;
}

inline XEQDRecord build_XEQD(const Case& C) {
    XEQDRecord R;
    R.p = C.p;
    R.c = C.c();
    R.content = 1;
    for (int w : C.pd.frak_Wp) R.wd.push_back(w_data(C, w));
    for (const auto& d : R.wd) {
        R.Qp = bag_sum(R.Qp, d.q.bag);
        R.content *= d.q.scalar;
        for (const auto& [f, e] : d.q.bag) R.lcm[f] = std::max(R.lcm[f], e);
    }
    R.Rp = bag_sum(R.Qp, R.lcm, -1);
    R.Dp = D_p(C);
    const Term Dinv = inverse(R.Dp);

    std::vector<Term> xp, ep, xi, eps, qdd;
    std::set<int> plus(C.pd.plus.begin(), C.pd.plus.end()), zero(C.pd.zero.begin(), C.pd.zero.end());
    for (const auto& d : R.wd) {
        // Q_{p,w} X_{p,w} / content
        Term t;
        t.coeff = d.C * (Rational(1) / d.q.scalar);
        t.rat = bag_sum(R.Qp, d.q.bag, -1);
        t.mul(d.X);
        // divided by R_p D_p
        Term u;
        u.coeff = d.C * (Rational(1) / d.q.scalar);
        u.rat = bag_sum(R.lcm, d.q.bag, -1);
        u.mul(d.X);
        u.mul(Dinv);
        require_exact(u, "xi_p");
        xp.push_back(t);
        xi.push_back(u);
        Rational half = zero.count(d.w) ? Rational(1, 2) : Rational(1);
        if (plus.count(d.w) || zero.count(d.w)) {
            t.coeff *= half;
            u.coeff *= half;
            ep.push_back(t);
            eps.push_back(u);
        }
        if (d.lp == 0) {
            Term q;
            q.coeff = d.C * (Rational(1) / d.q.scalar);
            q.rat = bag_sum(R.Qp, d.q.bag, -1);
            qdd.push_back(q);
        }
    }
    R.Xp = ZetaExpression(std::move(xp));
    R.Ep = ZetaExpression(std::move(ep));
    R.xi = ZetaExpression(std::move(xi));
    R.eps = ZetaExpression(std::move(eps));
    R.Qdd = ZetaExpression(std::move(qdd));
    for (const auto& d : R.wd)
        if (d.w == 0) R.Xdd = d.X;

    FactoredRational Q;
    Q.bag = R.Qp;
    R.sign = reflection_sign(Q, R.c);
    if (R.sign == 0) throw internal_inconsistency("Q_p is not reflection symmetric");
    R.xi_sign = expression_reflection_sign(R.xi, R.c);
    return R;
}

// ------------------------------------------------------- functional equations

struct FEReport {
    bool ok = false;
    bool termwise = true;
    std::string report;
};

inline FEReport check_functional_equation(const ZetaExpression& e, long c, int expected_sign) {
    FEReport r;
    auto diff = substitute_reflect(e, c) - e.scaled(Rational(expected_sign));
    r.ok = diff.empty();
    if (!r.ok) r.report = "reflect(e) - (" + std::to_string(expected_sign) + ")e = " + render(diff, Format::text);
    return r;
}

// terms indexed like frak_Wp; pairs w with w0 w w_p
inline bool check_termwise(const Case& C, const std::vector<Term>& terms, std::string* why = nullptr) {
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < C.pd.frak_Wp.size(); ++i) pos[C.pd.frak_Wp[i]] = i;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        int w = C.pd.frak_Wp[i], v = involution(*C.G, C.pd, w);
        auto it = pos.find(v);
        if (it == pos.end()) {
            if (why) *why = "involution leaves frak W_p";
            return false;
        }
        ZetaExpression a({reflect(terms[i], C.c())}), b({terms[it->second]});
        if (!(a == b)) {
            if (why) *why = "term of w=" + std::to_string(w) + " does not reflect onto its partner";
            return false;
        }
    }
    return true;
}

inline FEReport check_zhat_functional_equation(const Case& C) {
    auto om = omega_terms(C);
    auto zt = zhat_terms(C, om);
    FEReport r = check_functional_equation(ZetaExpression(zt), C.c(), 1);
    std::string why;
    r.termwise = check_termwise(C, zt, &why);
    if (!r.termwise) {
        r.ok = false;
        r.report += (r.report.empty() ? "" : "; ") + why;
    }
    return r;
}

// X~ and q_w reflect onto their partners; Q_p onto sign * Q_p
inline bool check_involution_pairing(const Case& C, const XEQDRecord& R, std::string* why = nullptr) {
    std::map<int, const WData*> by;
    for (const auto& d : R.wd) by[d.w] = &d;
    for (const auto& d : R.wd) {
        const WData& e = *by.at(involution(*C.G, C.pd, d.w));
        Term a;
        a.coeff = d.C;
        a.mul(d.X);
        Term b;
        b.coeff = e.C;
        b.mul(e.X);
        if (!(ZetaExpression({reflect(a, R.c)}) == ZetaExpression({b}))) {
            if (why) *why = "X~ fails for w=" + std::to_string(d.w);
            return false;
        }
        if (!(reflect(d.q, R.c) == e.q)) {
            if (why) *why = "q_w fails for w=" + std::to_string(d.w);
            return false;
        }
    }
    return R.sign != 0;
}

// X_p = E_p + sign * E_p(-c-s)
inline bool check_X_splitting(const XEQDRecord& R) {
    return R.Xp == R.Ep + substitute_reflect(R.Ep, R.c).scaled(Rational(R.sign));
}

// xi_p R_p D_p = X_p and xi_p = eps_p + xi_sign * eps_p(-c-s)
inline bool check_xi_identities(const XEQDRecord& R) {
    Term rd;
    rd.rat = R.Rp;
    rd.mul(R.Dp);
    if (!(R.xi.times(rd) == R.Xp)) return false;
    return R.xi == R.eps + substitute_reflect(R.eps, R.c).scaled(Rational(R.xi_sign));
}

// xi_p / zhat_p is a polynomial: Q_p F_p / (R_p D_p * clearing product)
inline bool check_xi_polynomial_multiple(const Case& C, const XEQDRecord& R, Term* multiplier = nullptr) {
    const auto z = zhat_p(C);
    if (z.empty() || R.xi.empty()) return false;
    // the multiplier is the same for every w, so the ratio of any matching
    // pair of single-monomial terms is a candidate
    for (const Term& b : z.terms()) {
        if (b.coeff.terms().size() != 1) continue;
        const auto& [bm, bq] = *b.coeff.terms().begin();
        for (const Term& a : R.xi.terms()) {
            if (a.mono != b.mono || a.coeff.terms().size() != 1) continue;
            const auto& [am, aq] = *a.coeff.terms().begin();
            Term m;
            m.coeff = aq / bq;
            for (const auto& [n, e] : am) m.coeff = m.coeff * ConstantCombo::zhat(n, e);
            for (const auto& [n, e] : bm) m.coeff = m.coeff * ConstantCombo::zhat(n, -e);
            m.rat = bag_sum(a.rat, b.rat, -1);
            if (z.times(m) == R.xi) {
                if (multiplier) *multiplier = m;
                return std::all_of(m.rat.begin(), m.rat.end(), [](const auto& f) { return f.second >= 0; });
            }
        }
        break;
    }
    return false;
}

// X^dd / D_p as a product of xi(ks+h)^{N(k,h-1)-N(k,h)} over 2h > kc+1
inline Term xdd_quotient(const Case& C) {
    Term t;
    int hmax = 0;
    for (int a = 0; a < C.rs->npos; ++a) hmax = std::max(hmax, height_coroot(*C.rs, a));
    for (int k = 1; k <= C.T.k_p; ++k)
        for (int h = 2; h <= hmax + 1; ++h)
            if (2 * h > k * C.c() + 1) t.mul_xi(k, h, C.T.n(k, h - 1) - C.T.n(k, h));
    return t;
}

inline bool check_xdd_quotient(const Case& C, const XEQDRecord& R) {
    Term q = R.Xdd;
    q.mul(inverse(R.Dp));
    return ZetaExpression({q}) == ZetaExpression({xdd_quotient(C)});
}

// every xi(ks+h) left in X^dd / D_p has (1-h)/k <= -c/2
inline bool check_xdd_quotient_bound(const Case& C, const Term& q) {
    for (const auto& [f, e] : q.mono)
        if (e != 0 && 2 * (f.c - 1) < f.k * C.c()) return false;
    return true;
}

// ------------------------------------------------------------ residue constant

inline std::vector<int> residue_index_from_ddagger(const Case& C) {
    const RootSystem& rs = *C.rs;
    std::vector<int> out;
    for (int w : C.pd.ddagger) {
        int n = 0;
        for (int a : detail::preimage_of_simple(*C.G, w))
            if (rs.roots[a][C.p - 1] != 0) ++n;
        if (n == 1) out.push_back(w);
    }
    return out;
}

inline std::vector<int> residue_index_from_Wp(const Case& C) {
    const WeylGroup& G = *C.G;
    std::vector<int> out;
    for (int w = 0; w < static_cast<int>(G.order()); ++w) {
        if (!in_W_p(G, C.p, w)) continue;
        bool ok = true;
        for (int j : C.pd.delta_p) {
            int im = G.act(w, j);
            if (!(detail::in_delta_p(C.pd, im) || im >= G.P)) ok = false;
        }
        if (ok) out.push_back(w);
    }
    return out;
}

inline ConstantCombo leading_residue_constant(const Case& C) {
    const RootSystem& rs = *C.rs;
    const WeylGroup& G = *C.G;
    auto A = residue_index_from_ddagger(C), B = residue_index_from_Wp(C);
    std::sort(A.begin(), A.end());
    std::sort(B.begin(), B.end());
    if (A != B) throw InternalError("IndexSetMismatch", "the two descriptions of the index set differ");
    ConstantCombo total;
    for (int w : A) {
        ConstantCombo t = Rational(1);
        int m = 0;
        for (int j : C.pd.delta_p)
            if (G.act(w, j) < G.P) ++m;
        if (m) t = t * ConstantCombo::zhat(2, m);
        for (int a : detail::preimage_of_simple(G, w)) {
            if (rs.roots[a][C.p - 1] != 0) t *= Rational(1) / Rational(pairing_fundamental(rs, C.p, a));
            else if (!detail::in_delta_p(C.pd, a)) t *= Rational(1) / Rational(height_coroot(rs, a) - 1);
        }
        for (int a : C.pd.phi_p_plus)
            if (!detail::in_delta_p(C.pd, a)) t = t * ConstantCombo::zhat(height_coroot(rs, a) + delta_indicator(G, w, a));
        total += t;
    }
    return total;
}

// prod_{Phi_p^+} zhat(ht+1) times the residue of the Levi period at rho_p,
// the residue written as a sum over W_p
inline ConstantCombo levi_residue_form(const Case& C) {
    const RootSystem& rs = *C.rs;
    const WeylGroup& G = *C.G;
    ConstantCombo pre = Rational(1);
    for (int a : C.pd.phi_p_plus) pre = pre * ConstantCombo::zhat(height_coroot(rs, a) + 1);
    ConstantCombo res;
    for (int w : residue_index_from_Wp(C)) {
        ConstantCombo t = Rational(1);
        int neg = 0;
        for (int j : C.pd.delta_p)
            if (G.act(w, j) >= G.P) ++neg;
        if (neg) t = t * ConstantCombo::zhat(2, -neg);
        for (int a = 0; a < 2 * G.P; ++a) {
            int im = G.act(w, a);
            if (im < rs.r && detail::in_delta_p(C.pd, im) && !detail::in_delta_p(C.pd, a))
                t *= Rational(1) / Rational(height_coroot(rs, a) - 1);
        }
        for (int a : C.pd.phi_p_plus) {
            if (detail::in_delta_p(C.pd, a) || G.act(w, a) < G.P) continue;
            int h = height_coroot(rs, a);
            t = t * ConstantCombo::zhat(h) * ConstantCombo::zhat(h + 1, -1);
        }
        res += t;
    }
    return pre * res;
}

// ------------------------------------------------------------ degree gap

struct DegreeGap {
    bool ok = false;
    long deg_Qdd = 0;
    ConstantCombo leading; // up to a nonzero rational factor
    std::vector<std::pair<int, long>> others; // (w, deg Q_{p,w})
};

// The top-degree part of Q^dd comes from the v in the ddagger stratum with
// minimal deg q_v; its coefficient is sum C_v / lead(q_v).
inline DegreeGap degree_gap(const XEQDRecord& R, const std::vector<int>& plus_zero) {
    DegreeGap g;
    const long dQ = bag_degree(R.Qp);
    long dmin = std::numeric_limits<long>::max();
    for (const auto& d : R.wd)
        if (d.lp == 0) dmin = std::min(dmin, d.q.degree());
    for (const auto& d : R.wd)
        if (d.lp == 0 && d.q.degree() == dmin) g.leading += d.C * (Rational(1) / d.q.leading());
    g.deg_Qdd = dQ - dmin;
    g.ok = !g.leading.is_zero();
    std::set<int> pz(plus_zero.begin(), plus_zero.end());
    for (const auto& d : R.wd) {
        if (d.lp == 0 || !pz.count(d.w)) continue;
        long dw = dQ - d.q.degree();
        g.others.push_back({d.w, dw});
        if (g.deg_Qdd < dw + 1) g.ok = false;
    }
    return g;
}

inline DegreeGap degree_gap_check(const Case& C, const XEQDRecord& R) {
    std::vector<int> pz = C.pd.plus;
    pz.insert(pz.end(), C.pd.zero.begin(), C.pd.zero.end());
    return degree_gap(R, pz);
}

} // namespace weng
