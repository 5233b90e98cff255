#pragma once
// Exact zeta expressions
//
//     sum_i  coeff_i * prod (k s + c)^e * prod zhat(k s + c)^m
//
// where coeff_i is a formal Q-linear combination of monomials in the
// constants zhat(n).  Only zhat symbols exist; xi(a) = a(a-1) zhat(a) is
// expanded on construction.  Linear factors are kept primitive
// (k > 0, gcd(k, c) = 1); rational content and k = 0 factors move into the
// coefficient.  zhat arguments are canonical under zhat(x) = zhat(1 - x):
// k >= 1, or k = 0 with c >= 1.

#include "error.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace weng {

using Rational = mpq_class;

struct LinearFactor {
    long k = 0;
    long c = 0;
    auto operator<=>(const LinearFactor&) const = default;
};

// signed multiset: positive exponents numerator, negative denominator
using FactorBag = std::map<LinearFactor, long>;

inline void bag_add(FactorBag& b, const LinearFactor& f, long e) {
    if (e == 0) return;
    auto& x = b[f];
    x += e;
    if (x == 0) b.erase(f);
}

inline FactorBag bag_sum(FactorBag a, const FactorBag& b, long sign = 1) {
    for (const auto& [f, e] : b) bag_add(a, f, sign * e);
    return a;
}

inline long bag_degree(const FactorBag& b) {
    long d = 0;
    for (const auto& [f, e] : b) d += e;
    return d;
}

inline Rational rpow(const Rational& x, long e) {
    Rational r = 1;
    Rational b = e >= 0 ? x : Rational(1) / x;
    for (long i = 0; i < std::labs(e); ++i) r *= b;
    return r;
}

// Product of linear factors with a rational scalar.
struct FactoredRational {
    Rational scalar = 1;
    FactorBag bag;

    // multiply by (k s + c)^e
    void mul_linear(long k, long c, long e) {
        if (e == 0) return;
        if (k == 0) {
            if (c == 0) throw internal_inconsistency("zero linear factor");
            scalar *= rpow(Rational(c), e);
            return;
        }
        if (k < 0) {
            k = -k;
            c = -c;
            if (e % 2) scalar = -scalar;
        }
        long g = std::gcd(k, std::labs(c));
        if (g > 1) {
            scalar *= rpow(Rational(g), e);
            k /= g;
            c /= g;
        }
        bag_add(bag, {k, c}, e);
    }

    void mul(const FactoredRational& o) {
        scalar *= o.scalar;
        bag = bag_sum(bag, o.bag);
    }

    long degree() const { return bag_degree(bag); }

    FactorBag numerator() const {
        FactorBag b;
        for (const auto& [f, e] : bag)
            if (e > 0) b[f] = e;
        return b;
    }
    FactorBag denominator() const {
        FactorBag b;
        for (const auto& [f, e] : bag)
            if (e < 0) b[f] = -e;
        return b;
    }

    // product of the leading coefficients k^e times the scalar
    Rational leading() const {
        Rational r = scalar;
        for (const auto& [f, e] : bag) r *= rpow(Rational(f.k), e);
        return r;
    }

    bool operator==(const FactoredRational& o) const { return scalar == o.scalar && bag == o.bag; }
};

// s -> -c - s
inline FactoredRational reflect(const FactoredRational& q, long c) {
    FactoredRational r;
    r.scalar = q.scalar;
    for (const auto& [f, e] : q.bag) r.mul_linear(-f.k, f.c - f.k * c, e);
    return r;
}

inline LinearFactor canonical_zhat_arg(long k, long c) {
    if (k < 0 || (k == 0 && c <= 0)) return {-k, 1 - c};
    return {k, c};
}

// formal monomial in constant symbols zhat(n), n >= 1
using ConstMono = std::map<long, long>;

class ConstantCombo {
public:
    ConstantCombo() = default;
    ConstantCombo(const Rational& q) { // NOLINT: implicit by design
        if (q != 0) terms_[{}] = q;
    }
    template <class T, class U>
    ConstantCombo(const __gmp_expr<T, U>& q) : ConstantCombo(Rational(q)) {} // NOLINT
    static ConstantCombo zhat(long n, long e = 1) {
        ConstantCombo c;
        if (n <= 0) n = 1 - n;
        if (n == 1) throw PoleError("PoleAtZeroOrOne", "constant zhat(1)");
        c.terms_[ConstMono{{n, e}}] = 1;
        return c;
    }

    const std::map<ConstMono, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational rational_value() const { return terms_.empty() ? Rational(0) : terms_.begin()->second; }

    ConstantCombo& operator+=(const ConstantCombo& o) {
        for (const auto& [m, q] : o.terms_) add(m, q);
        return *this;
    }
    ConstantCombo& operator-=(const ConstantCombo& o) {
        for (const auto& [m, q] : o.terms_) add(m, -q);
        return *this;
    }
    ConstantCombo& operator*=(const Rational& q) {
        if (q == 0) terms_.clear();
        for (auto& [m, x] : terms_) x *= q;
        return *this;
    }
    friend ConstantCombo operator*(const ConstantCombo& a, const ConstantCombo& b) {
        ConstantCombo r;
        for (const auto& [ma, qa] : a.terms_)
            for (const auto& [mb, qb] : b.terms_) {
                ConstMono m = ma;
                for (const auto& [n, e] : mb) {
                    m[n] += e;
                    if (m[n] == 0) m.erase(n);
                }
                r.add(m, qa * qb);
            }
        return r;
    }
    friend ConstantCombo operator+(ConstantCombo a, const ConstantCombo& b) { return a += b; }
    friend ConstantCombo operator-(ConstantCombo a, const ConstantCombo& b) { return a -= b; }
    bool operator==(const ConstantCombo& o) const { return terms_ == o.terms_; }

    void add(const ConstMono& m, const Rational& q) {
        if (q == 0) return;
        auto& x = terms_[m];
        x += q;
        if (x == 0) terms_.erase(m);
    }

private:
    std::map<ConstMono, Rational> terms_;
};

using ZhatMonomial = std::map<LinearFactor, long>; // keys have k >= 1

struct Term {
    ConstantCombo coeff = Rational(1);
    FactorBag rat;
    ZhatMonomial mono;

    void mul_linear(long k, long c, long e) {
        FactoredRational f;
        f.mul_linear(k, c, e);
        coeff *= f.scalar;
        rat = bag_sum(rat, f.bag);
    }
    void mul_rational(const FactoredRational& f) {
        coeff *= f.scalar;
        rat = bag_sum(rat, f.bag);
    }
    void mul_zhat(long k, long c, long e) {
        if (e == 0) return;
        auto a = canonical_zhat_arg(k, c);
        if (a.k == 0) {
            coeff = coeff * ConstantCombo::zhat(a.c, e);
            return;
        }
        bag_add(mono, a, e);
    }
    // xi(k s + c)^e = ((ks+c)(ks+c-1) zhat(ks+c))^e
    void mul_xi(long k, long c, long e) {
        mul_linear(k, c, e);
        mul_linear(k, c - 1, e);
        mul_zhat(k, c, e);
    }
    void mul(const Term& o) {
        coeff = coeff * o.coeff;
        rat = bag_sum(rat, o.rat);
        mono = bag_sum(mono, o.mono);
    }
};

class ZetaExpression {
public:
    ZetaExpression() = default;
    explicit ZetaExpression(std::vector<Term> t) : terms_(std::move(t)) { normalize(); }

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(const Term& t) {
        terms_.push_back(t);
        dirty_ = true;
    }
    void normalize() {
        std::map<std::pair<ZhatMonomial, FactorBag>, ConstantCombo> acc;
        for (const auto& t : terms_) acc[{t.mono, t.rat}] += t.coeff;
        terms_.clear();
        // higher zhat shifts first, matching the usual display order
        for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
            if (it->second.is_zero()) continue;
            terms_.push_back({it->second, it->first.second, it->first.first});
        }
        dirty_ = false;
    }
    ZetaExpression& operator+=(const ZetaExpression& o) {
        terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
        normalize();
        return *this;
    }
    ZetaExpression scaled(const ConstantCombo& c) const {
        ZetaExpression r;
        for (auto t : terms_) {
            t.coeff = t.coeff * c;
            r.terms_.push_back(t);
        }
        r.normalize();
        return r;
    }
    ZetaExpression times(const Term& m) const {
        ZetaExpression r;
        for (auto t : terms_) {
            t.mul(m);
            r.terms_.push_back(t);
        }
        r.normalize();
        return r;
    }
    friend ZetaExpression operator+(ZetaExpression a, const ZetaExpression& b) { return a += b; }
    friend ZetaExpression operator-(const ZetaExpression& a, const ZetaExpression& b) {
        return a + b.scaled(Rational(-1));
    }
    bool operator==(const ZetaExpression& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto &a = terms_[i], &b = o.terms_[i];
            if (!(a.coeff == b.coeff) || a.rat != b.rat || a.mono != b.mono) return false;
        }
        return true;
    }

private:
    std::vector<Term> terms_;
    bool dirty_ = false;
};

inline Term reflect(const Term& t, long c) {
    Term r;
    r.coeff = t.coeff;
    for (const auto& [f, e] : t.rat) r.mul_linear(-f.k, f.c - f.k * c, e);
    for (const auto& [f, e] : t.mono) r.mul_zhat(-f.k, f.c - f.k * c, e);
    return r;
}

// s -> -c - s, re-canonicalized
inline ZetaExpression substitute_reflect(const ZetaExpression& e, long c) {
    std::vector<Term> out;
    for (const auto& t : e.terms()) out.push_back(reflect(t, c));
    return ZetaExpression(std::move(out));
}

// ---------------------------------------------------------------- rendering

enum class Format { text, latex, json };

namespace detail {

inline std::string affine(long k, long c, bool tex) {
    std::string s;
    if (k != 0) {
        if (k == -1) s = "-";
        else if (k != 1) s = std::to_string(k) + (tex ? "" : "*");
        s += "s";
    }
    if (c != 0 || k == 0) {
        if (k != 0) s += c > 0 ? "+" : "-";
        s += std::to_string(k != 0 ? std::labs(c) : c);
    }
    return s;
}

inline std::string power(const std::string& base, long e, bool tex) {
    if (e == 1) return base;
    return tex ? base + "^{" + std::to_string(e) + "}" : base + "^" + std::to_string(e);
}

inline std::string zhat_sym(const std::string& arg, bool tex) {
    return tex ? "\\hat{\\zeta}(" + arg + ")" : "zhat(" + arg + ")";
}

struct Pieces {
    std::vector<std::string> num, den;
};

inline void const_pieces(const ConstMono& m, const Rational& q, bool tex, Pieces& P) {
    Rational a = abs(q);
    if (a.get_num() != 1) P.num.push_back(a.get_num().get_str());
    if (a.get_den() != 1) P.den.push_back(a.get_den().get_str());
    for (const auto& [n, e] : m) (e > 0 ? P.num : P.den).push_back(power(zhat_sym(std::to_string(n), tex), std::labs(e), tex));
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

inline std::string combo_string(const ConstantCombo& c, bool tex);

inline std::string fraction(const Pieces& P, bool tex) {
    const std::string mul = tex ? " " : "*";
    std::string n = P.num.empty() ? "1" : join(P.num, mul);
    if (P.den.empty()) return n;
    if (tex) return "\\frac{" + n + "}{" + join(P.den, " ") + "}";
    if (P.den.size() == 1) return n + "/" + P.den[0];
    return n + "/(" + join(P.den, "*") + ")";
}

inline std::string combo_string(const ConstantCombo& c, bool tex) {
    std::string s;
    bool first = true;
    for (const auto& [m, q] : c.terms()) {
        Pieces P;
        const_pieces(m, q, tex, P);
        std::string body = fraction(P, tex);
        if (first) s += (q < 0 ? "-" : "") + body;
        else s += (q < 0 ? " - " : " + ") + body;
        first = false;
    }
    return s.empty() ? "0" : s;
}

inline std::string factor_string(const LinearFactor& f, long e, bool tex) {
    std::string a = affine(f.k, f.c, tex);
    bool bare = f.c == 0 && f.k == 1;
    std::string b = bare ? a : (tex ? "(" + a + ")" : "(" + a + ")");
    return power(b, e, tex);
}

} // namespace detail

inline std::string render_term(const Term& t, bool tex, bool& negative) {
    using namespace detail;
    Pieces P;
    negative = false;
    if (t.coeff.terms().size() == 1) {
        const auto& [m, q] = *t.coeff.terms().begin();
        negative = q < 0;
        const_pieces(m, q, tex, P);
    } else {
        P.num.push_back("(" + combo_string(t.coeff, tex) + ")");
    }
    for (const auto& [f, e] : t.mono)
        if (e > 0) P.num.push_back(power(zhat_sym(affine(f.k, f.c, tex), tex), e, tex));
    for (const auto& [f, e] : t.rat)
        if (e > 0) P.num.push_back(factor_string(f, e, tex));
    for (const auto& [f, e] : t.rat)
        if (e < 0) P.den.push_back(factor_string(f, -e, tex));
    for (const auto& [f, e] : t.mono)
        if (e < 0) P.den.push_back(power(zhat_sym(affine(f.k, f.c, tex), tex), -e, tex));
    return fraction(P, tex);
}

inline nlohmann::json to_json(const ZetaExpression& e) {
    using nlohmann::json;
    json terms = json::array();
    for (const auto& t : e.terms()) {
        json coeff = json::array();
        for (const auto& [m, q] : t.coeff.terms()) {
            json z = json::array();
            for (const auto& [n, x] : m) z.push_back({n, x});
            coeff.push_back({{"q", q.get_str()}, {"zhat", z}});
        }
        json rat = json::array(), mono = json::array();
        for (const auto& [f, x] : t.rat) rat.push_back({f.k, f.c, x});
        for (const auto& [f, x] : t.mono) mono.push_back({f.k, f.c, x});
        terms.push_back({{"coeff", coeff}, {"rat", rat}, {"zhat", mono}});
    }
    return {{"format", "weng-zeta-expression"}, {"version", 1}, {"terms", terms}};
}

inline ZetaExpression expression_from_json(const nlohmann::json& j) {
    std::vector<Term> out;
    for (const auto& jt : j.at("terms")) {
        Term t;
        t.coeff = ConstantCombo();
        for (const auto& jc : jt.at("coeff")) {
            ConstMono m;
            for (const auto& z : jc.at("zhat")) m[z.at(0).get<long>()] = z.at(1).get<long>();
            t.coeff.add(m, Rational(jc.at("q").get<std::string>()));
        }
        for (const auto& r : jt.at("rat")) t.mul_linear(r.at(0), r.at(1), r.at(2));
        for (const auto& z : jt.at("zhat")) t.mul_zhat(z.at(0), z.at(1), z.at(2));
        out.push_back(t);
    }
    return ZetaExpression(std::move(out));
}

namespace detail {

inline long const_zhat_count(const Term& t) {
    long n = 0;
    for (const auto& [m, q] : t.coeff.terms())
        for (const auto& [k, e] : m) n = std::max(n, e > 0 ? e : 0L);
    return n;
}

inline void append_signed(std::string& s, bool& first, bool neg, const std::string& body) {
    if (first) s += (neg ? "-" : "") + body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
}

} // namespace detail

// Terms sharing a zhat monomial are collected into one parenthesized
// coefficient, the way the formulas are usually displayed.
inline std::string render(const ZetaExpression& e, Format fmt) {
    if (fmt == Format::json) return to_json(e).dump();
    if (e.empty()) return "0";
    const bool tex = fmt == Format::latex;
    std::string s;
    bool first = true;
    const auto& ts = e.terms();
    for (std::size_t i = 0; i < ts.size();) {
        std::size_t j = i;
        while (j < ts.size() && ts[j].mono == ts[i].mono) ++j;
        bool has_den = false;
        for (const auto& [f, x] : ts[i].mono) has_den = has_den || x < 0;
        if (j - i == 1 || ts[i].mono.empty() || has_den) {
            for (; i < j; ++i) {
                bool neg = false;
                std::string body = render_term(ts[i], tex, neg);
                detail::append_signed(s, first, neg, body);
            }
            continue;
        }
        std::vector<Term> grp(ts.begin() + i, ts.begin() + j);
        std::stable_sort(grp.begin(), grp.end(), [](const Term& a, const Term& b) {
            return detail::const_zhat_count(a) > detail::const_zhat_count(b);
        });
        std::vector<std::pair<bool, std::string>> parts;
        for (auto t : grp) {
            t.mono.clear();
            bool neg = false;
            parts.push_back({false, render_term(t, tex, neg)});
            parts.back().first = neg;
        }
        // the sign of the leading part is pulled out of the parentheses
        const bool lead_neg = parts.front().first;
        std::string inner;
        bool ifirst = true;
        for (const auto& [neg, body] : parts) detail::append_signed(inner, ifirst, neg != lead_neg, body);
        Term m;
        m.mono = ts[i].mono;
        bool dummy = false;
        std::string monos = render_term(m, tex, dummy);
        std::string body = tex ? "\\left(" + inner + "\\right)" + monos : "(" + inner + ")*" + monos;
        detail::append_signed(s, first, lead_neg, body);
        i = j;
    }
    return s;
}

} // namespace weng
