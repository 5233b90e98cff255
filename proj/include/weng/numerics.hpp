#pragma once
// Complex evaluation of zhat / xi and of zeta expressions, zero scans on the
// critical line and argument-principle counts.
//
// Two arithmetic modes share the code: double (Lanczos gamma) and 113-bit
// quad floats from Boost.Multiprecision (Stirling gamma).  Acceptance runs
// use double.

#include "zeta.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <atomic>
#include <cmath>
#include <complex>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

namespace weng {

struct DoubleMode {
    using real = double;
    using complex = std::complex<double>;
    static constexpr int bits = 53;
    static constexpr int bernoulli_terms = 12;
    static constexpr int em_min = 20;
    static constexpr double em_scale = 2.0;
};

struct QuadMode {
    using real = boost::multiprecision::cpp_bin_float_quad;
    using complex = boost::multiprecision::cpp_complex_quad;
    static constexpr int bits = 113;
    static constexpr int bernoulli_terms = 24;
    static constexpr int em_min = 40;
    static constexpr double em_scale = 4.0;
};

struct EvalContext {
    int precision = 53;
    double tol_online = 1e-8;
    double tol_zero = 1e-10;
    unsigned threads = 0; // 0: hardware concurrency
    double step = 0.05;
    double t_start = 0.02; // scans and rectangles stay off the real axis

    void validate() const {
        if (precision != 53 && precision != 113) throw InvalidSpec("precision must be 53 or 113 bits");
        if (!(tol_online > 0) || !(tol_zero > 0)) throw InvalidSpec("tolerances must be positive");
    }
};

namespace num {

template <class M>
typename M::real to_real(const Rational& q) {
    if constexpr (std::is_same_v<typename M::real, double>) return q.get_d();
    else return typename M::real(q.get_num().get_str()) / typename M::real(q.get_den().get_str());
}

template <class M>
double to_double(const typename M::real& x) {
    return static_cast<double>(x);
}

template <class M>
std::complex<double> to_cdouble(const typename M::complex& z) {
    return {static_cast<double>(real(z)), static_cast<double>(imag(z))};
}

template <class M>
typename M::real pi() {
    return boost::math::constants::pi<typename M::real>();
}

// log Gamma for Re z >= 1/2 (branch irrelevant: only exp() of it is used)
template <class M>
typename M::complex lgamma_right(typename M::complex z) {
    using C = typename M::complex;
    using R = typename M::real;
    using std::exp;
    using std::log;
    if constexpr (std::is_same_v<R, double>) {
        static const double g = 7;
        static const double p[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                    771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
        z -= 1.0;
        C x = p[0];
        for (int i = 1; i < 9; ++i) x += p[i] / (z + double(i));
        C t = z + g + 0.5;
        return 0.5 * std::log(2 * pi<M>()) + (z + 0.5) * log(t) - t + log(x);
    } else {
        // shift to |w| >= 40 and use the Stirling series
        C prod = 1;
        C w = z;
        while (abs(w) < 40) {
            prod *= w;
            w += R(1);
        }
        C s = (w - R(0.5)) * log(w) - w + log(2 * pi<M>()) / 2;
        C wp = w, w2 = w * w;
        for (int j = 1; j <= 30; ++j) {
            R b = boost::math::bernoulli_b2n<R>(j);
            s += b / (R(2 * j) * R(2 * j - 1) * wp);
            wp *= w2;
        }
        return s - log(prod);
    }
}

template <class M>
typename M::complex gamma(typename M::complex z) {
    using std::exp;
    using std::sin;
    using R = typename M::real;
    R re = real(z);
    if (re <= 0 && abs(imag(z)) < 1e-300) {
        R n = round(re);
        if (abs(re - n) < R(1e-14)) throw PoleError("PoleAtNonpositiveInteger", "gamma pole");
    }
    if (re < 0.5) return pi<M>() / (sin(pi<M>() * z) * gamma<M>(R(1) - z));
    return exp(lgamma_right<M>(z));
}

// Euler-Maclaurin, Re s >= -1
template <class M>
typename M::complex zeta_right(typename M::complex s) {
    using C = typename M::complex;
    using R = typename M::real;
    using std::exp;
    using std::log;
    const double t = std::abs(static_cast<double>(imag(s)));
    const int N = std::max(M::em_min, static_cast<int>(std::ceil(M::em_scale * t)));
    C sum = 0;
    for (int n = 1; n < N; ++n) sum += exp(-s * log(R(n)));
    const R lnN = log(R(N));
    C Ns = exp(-s * lnN); // N^{-s}
    sum += Ns * R(N) / (s - R(1)) + Ns / R(2);
    C term = s * Ns / R(N);
    R fact = 2; // (2j)!
    for (int j = 1; j <= M::bernoulli_terms; ++j) {
        sum += boost::math::bernoulli_b2n<R>(j) / fact * term;
        term *= (s + R(2 * j - 1)) * (s + R(2 * j)) / (R(N) * R(N));
        fact *= R(2 * j + 1) * R(2 * j + 2);
    }
    return sum;
}

template <class M>
typename M::complex zeta(typename M::complex s) {
    using R = typename M::real;
    using std::exp;
    using std::log;
    using std::sin;
    if (abs(s - R(1)) < R(1e-300)) throw PoleError("PoleAtOne", "zeta pole at s = 1");
    // the Euler-Maclaurin continuation is accurate a little left of 0 too
    if (real(s) >= -1) return zeta_right<M>(s);
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
    return exp(s * log(R(2))) * exp((s - R(1)) * log(pi<M>())) * sin(pi<M>() * s / R(2)) * gamma<M>(R(1) - s) *
           zeta_right<M>(R(1) - s);
}

// zhat(s) = pi^{-s/2} Gamma(s/2) zeta(s), evaluated on Re s >= 1/2 via zhat(s) = zhat(1-s)
template <class M>
typename M::complex zhat(typename M::complex s) {
    using R = typename M::real;
    using std::exp;
    using std::log;
    if (abs(s) < R(1e-9) || abs(s - R(1)) < R(1e-9)) throw PoleError("PoleAtZeroOrOne", "zhat pole");
    if (real(s) < 0.5) s = R(1) - s;
    auto h = s / R(2);
    // Gamma(h) = Gamma(h+1)/h keeps the Lanczos argument right of 1/2
    auto lg = lgamma_right<M>(h + R(1)) - log(h);
    return exp(-h * log(pi<M>()) + lg) * zeta_right<M>(s);
}

template <class M>
typename M::complex xi(typename M::complex s) {
    using R = typename M::real;
    using Cx = typename M::complex;
    if (abs(s) < R(1e-9) || abs(s - R(1)) < R(1e-9)) return Cx(R(1) / R(2)); // xi(0) = xi(1) = 1/2
    return s * (s - R(1)) * zhat<M>(s);
}

template <class M>
typename M::real zhat_integer(long n) {
    static std::map<long, typename M::real> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    typename M::real v = real(zhat<M>(typename M::complex(typename M::real(n))));
    cache[n] = v;
    return v;
}

template <class M>
typename M::real eval_constant(const ConstantCombo& c) {
    typename M::real total = 0;
    for (const auto& [m, q] : c.terms()) {
        typename M::real v = to_real<M>(q);
        for (const auto& [n, e] : m) {
            typename M::real z = zhat_integer<M>(n);
            for (long i = 0; i < std::labs(e); ++i) v = e > 0 ? v * z : v / z;
        }
        total += v;
    }
    return total;
}

} // namespace num

// An expression with coefficients converted and zhat arguments deduplicated,
// for repeated evaluation.
template <class M>
class CompiledExpression {
public:
    using C = typename M::complex;
    using R = typename M::real;

    CompiledExpression() = default;
    explicit CompiledExpression(const ZetaExpression& e) {
        std::map<LinearFactor, int> lin, zh;
        for (const auto& t : e.terms()) {
            CTerm ct;
            ct.coeff = num::eval_constant<M>(t.coeff);
            for (const auto& [f, x] : t.rat) {
                auto [it, ins] = lin.try_emplace(f, static_cast<int>(lin.size()));
                ct.rat.push_back({it->second, static_cast<int>(x)});
            }
            for (const auto& [f, x] : t.mono) {
                auto [it, ins] = zh.try_emplace(f, static_cast<int>(zh.size()));
                ct.mono.push_back({it->second, static_cast<int>(x)});
            }
            terms_.push_back(ct);
        }
        lin_.resize(lin.size());
        for (const auto& [f, i] : lin) lin_[i] = f;
        zh_.resize(zh.size());
        for (const auto& [f, i] : zh) zh_[i] = f;
    }

    // per-term values; the expression is their sum
    std::vector<C> term_values(const C& s) const {
        std::vector<C> lv(lin_.size()), zv(zh_.size());
        for (std::size_t i = 0; i < lin_.size(); ++i) lv[i] = R(lin_[i].k) * s + R(lin_[i].c);
        for (std::size_t i = 0; i < zh_.size(); ++i) {
            C a = R(zh_[i].k) * s + R(zh_[i].c);
            try {
                zv[i] = num::zhat<M>(a);
            } catch (const PoleError&) {
                throw NearPole("zhat argument at a pole");
            }
        }
        std::vector<C> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            C v = t.coeff;
            for (auto [i, e] : t.rat) {
                if (e < 0 && abs(lv[i]) < R(1e-9)) throw NearPole("denominator factor vanishes");
                for (int j = 0; j < std::abs(e); ++j) v = e > 0 ? v * lv[i] : v / lv[i];
            }
            for (auto [i, e] : t.mono)
                for (int j = 0; j < std::abs(e); ++j) v = e > 0 ? v * zv[i] : v / zv[i];
            out.push_back(v);
        }
        return out;
    }

    C operator()(const C& s) const {
        C total = 0;
        for (const auto& v : term_values(s)) total += v;
        return total;
    }

    // value and sum of |terms|, the natural scale for relative residuals
    std::pair<C, R> with_scale(const C& s) const {
        C total = 0;
        R scale = 0;
        for (const auto& v : term_values(s)) {
            total += v;
            scale += abs(v);
        }
        return {total, scale};
    }

private:
    struct CTerm {
        R coeff;
        std::vector<std::pair<int, int>> rat, mono;
    };
    std::vector<CTerm> terms_;
    std::vector<LinearFactor> lin_, zh_;
};

template <class M = DoubleMode>
typename M::complex eval_expression(const ZetaExpression& e, const typename M::complex& s) {
    return CompiledExpression<M>(e)(s);
}

inline std::complex<double> eval_expression(const ZetaExpression& e, std::complex<double> s, const EvalContext& ctx) {
    ctx.validate();
    if (ctx.precision == 113) return num::to_cdouble<QuadMode>(eval_expression<QuadMode>(e, QuadMode::complex(s.real(), s.imag())));
    return eval_expression<DoubleMode>(e, s);
}

// ------------------------------------------------------------ parallel map

inline unsigned worker_count(const EvalContext& ctx) {
    unsigned n = ctx.threads ? ctx.threads : std::thread::hardware_concurrency();
    return std::max(1u, n);
}

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned workers, F f) {
    std::vector<T> out(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto run = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    std::vector<std::thread> th;
    for (unsigned i = 1; i < workers; ++i) th.emplace_back(run);
    run();
    for (auto& t : th) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

// ------------------------------------------------------------ line function

class NotRealOnLine : public InternalError {
public:
    explicit NotRealOnLine(const std::string& w) : InternalError("NotRealOnLine", w) {}
};

// phi(t) = xi_p(-c/2 + it) * i^{-m}, real; also returns the term scale
template <class M = DoubleMode>
class LineFunction {
public:
    LineFunction(const ZetaExpression& xi, int c, int xi_sign) : f_(xi), c_(c), m_(xi_sign == 1 ? 0 : 1) {
        if (xi_sign == 0) throw NotRealOnLine("xi_p has no reflection sign");
    }
    explicit LineFunction(const XEQDRecord& R) : LineFunction(R.xi, R.c, R.xi_sign) {}

    typename M::complex point(double t) const {
        return typename M::complex(typename M::real(-c_) / 2, typename M::real(t));
    }

    std::pair<double, double> value_scale(double t) const {
        auto [v, sc] = f_.with_scale(point(t));
        auto w = num::to_cdouble<M>(v);
        double scale = num::to_double<M>(sc);
        if (m_ == 1) w = w * std::complex<double>(0, -1);
        if (std::abs(w.imag()) > 1e-9 * std::max(scale, 1e-300))
            throw NotRealOnLine("phi(" + std::to_string(t) + ") has imaginary part " + std::to_string(w.imag()));
        return {w.real(), scale};
    }
    double operator()(double t) const { return value_scale(t).first; }

    const CompiledExpression<M>& expr() const { return f_; }
    double center() const { return -c_ / 2.0; }
    int m() const { return m_; }

private:
    CompiledExpression<M> f_;
    int c_;
    int m_;
};

// ------------------------------------------------------------ zero scans

struct LineZero {
    double t = 0;
    double residual = 0;      // |xi_p| / sum |terms| at the located point
    double re_deviation = 0;  // |Re rho + c/2| after complex Newton refinement
    bool simple = false;
};

struct ZeroReport {
    std::vector<LineZero> zeros;
    int rectangle_count = -1;
    int line_count = 0;
    double t_max = 0;
};

namespace detail {

inline double bisect(const std::function<double(double)>& f, double a, double fa, double b) {
    for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, std::abs(a)); ++it) {
        double m = 0.5 * (a + b), fm = f(m);
        if (fm == 0) return m;
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// sign-change brackets of a real function on a grid, with local refinement
// where |f| dips without changing sign
inline std::vector<std::pair<double, double>> brackets(const std::vector<double>& ts, const std::vector<double>& vs,
                                                       const std::function<double(double)>& f) {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if (vs[i] == 0) {
            out.push_back({ts[i], ts[i]});
            continue;
        }
        if ((vs[i] < 0) != (vs[i + 1] < 0) && vs[i + 1] != 0) {
            out.push_back({ts[i], ts[i + 1]});
            continue;
        }
        bool dip = i > 0 && std::abs(vs[i]) < std::abs(vs[i - 1]) && std::abs(vs[i]) < std::abs(vs[i + 1]);
        if (dip) {
            const int sub = 20;
            double a = ts[i - 1], h = (ts[i + 1] - a) / sub, fa = vs[i - 1];
            for (int j = 1; j <= sub; ++j) {
                double b = a + h, fb = f(b);
                if ((fa < 0) != (fb < 0) && fb != 0) out.push_back({a, b});
                a = b;
                fa = fb;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](auto& x, auto& y) { return std::abs(x.first - y.first) < 1e-15 && std::abs(x.second - y.second) < 1e-15; }),
              out.end());
    return out;
}

} // namespace detail

// zeros of a real function on [t0, t1]
inline std::vector<double> real_zeros(const std::function<double(double)>& f, double t0, double t1, double step,
                                      unsigned workers) {
    const std::size_t n = static_cast<std::size_t>(std::floor((t1 - t0) / step)) + 1;
    std::vector<double> ts(n);
    for (std::size_t i = 0; i < n; ++i) ts[i] = t0 + step * static_cast<double>(i);
    auto vs = parallel_map<double>(n, workers, [&](std::size_t i) { return f(ts[i]); });
    std::vector<double> out;
    for (auto [a, b] : detail::brackets(ts, vs, f)) {
        if (a == b) out.push_back(a);
        else out.push_back(detail::bisect(f, a, f(a), b));
    }
    // a zero sitting on a grid point can be reported by two brackets
    std::vector<double> uniq;
    for (double t : out)
        if (uniq.empty() || t - uniq.back() > 1e-9) uniq.push_back(t);
    return uniq;
}

// complex Newton on f starting at s0
template <class M>
std::complex<double> newton_refine(const CompiledExpression<M>& f, std::complex<double> s0) {
    using C = typename M::complex;
    auto ev = [&](std::complex<double> s) { return num::to_cdouble<M>(f(C(s.real(), s.imag()))); };
    std::complex<double> s = s0;
    for (int it = 0; it < 30; ++it) {
        const double h = 1e-5 * std::max(1.0, std::abs(s));
        auto fs = ev(s);
        auto d = (ev(s + h) - ev(s - h)) / (2 * h);
        if (d == 0.0) break;
        auto step = fs / d;
        s -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(s))) break;
    }
    return s;
}

// ------------------------------------------------------------ rectangle counts

template <class M>
int count_zeros_rectangle_once(const CompiledExpression<M>& f, double re_lo, double re_hi, double t_lo, double t_hi,
                               double step) {
    using C = typename M::complex;
    auto ev = [&](std::complex<double> z) {
        auto [v, sc] = f.with_scale(C(z.real(), z.imag()));
        auto w = num::to_cdouble<M>(v);
        if (std::abs(w) < 1e-12 * num::to_double<M>(sc) || w == 0.0) throw ContourTooClose("zero on the contour");
        return w;
    };
    double total = 0;
    std::function<void(std::complex<double>, std::complex<double>, std::complex<double>, std::complex<double>, int)> seg =
        [&](std::complex<double> a, std::complex<double> fa, std::complex<double> b, std::complex<double> fb, int depth) {
            double d = std::arg(fb / fa);
            if (std::abs(d) < M_PI / 2 && depth > 0) {
                // confirm with the midpoint so a full turn cannot hide
                auto m = 0.5 * (a + b);
                auto fm = ev(m);
                double d1 = std::arg(fm / fa), d2 = std::arg(fb / fm);
                if (std::abs(d1 + d2 - d) < 1e-9 && std::abs(d1) < M_PI / 2 && std::abs(d2) < M_PI / 2) {
                    total += d;
                    return;
                }
                if (depth > 40) throw ContourTooClose("phase tracking did not settle");
                seg(a, fa, m, fm, depth + 1);
                seg(m, fm, b, fb, depth + 1);
                return;
            }
            if (depth > 40) throw ContourTooClose("phase tracking did not settle");
            auto m = 0.5 * (a + b);
            auto fm = ev(m);
            seg(a, fa, m, fm, depth + 1);
            seg(m, fm, b, fb, depth + 1);
        };
    std::complex<double> corners[5] = {{re_lo, t_lo}, {re_hi, t_lo}, {re_hi, t_hi}, {re_lo, t_hi}, {re_lo, t_lo}};
    for (int e = 0; e < 4; ++e) {
        auto a = corners[e], b = corners[e + 1];
        int n = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / step)));
        auto fa = ev(a);
        for (int i = 1; i <= n; ++i) {
            auto z = a + (b - a) * (static_cast<double>(i) / n);
            auto fz = ev(z);
            seg(i == 1 ? a : a + (b - a) * (static_cast<double>(i - 1) / n), fa, z, fz, 1);
            fa = fz;
        }
    }
    double w = total / (2 * M_PI);
    long k = std::lround(w);
    if (std::abs(w - static_cast<double>(k)) > 0.05) throw ContourTooClose("winding number not integral");
    return static_cast<int>(k);
}

// A bottom edge on t = 0 is lifted to ctx.t_start; edges are nudged up to
// three times when a zero sits too close to them.
template <class M = DoubleMode>
int count_zeros_rectangle(const CompiledExpression<M>& f, double re_lo, double re_hi, double t_lo, double t_hi,
                          const EvalContext& ctx) {
    if (!(re_lo < re_hi) || !(t_lo < t_hi)) throw InvalidSpec("empty rectangle");
    if (t_lo <= 0) t_lo = ctx.t_start;
    for (int attempt = 0;; ++attempt) {
        const double nudge = 1e-4 * attempt;
        try {
            return count_zeros_rectangle_once<M>(f, re_lo - nudge, re_hi + nudge, t_lo, t_hi + nudge, ctx.step);
        } catch (const ContourTooClose&) {
            if (attempt == 3) throw;
        } catch (const NearPole&) {
            if (attempt == 3) throw ContourTooClose("contour passes through a pole");
        }
    }
}

template <class M = DoubleMode>
ZeroReport scan_zeros_on_line(const XEQDRecord& R, double t_max, const EvalContext& ctx, bool with_rectangle = true) {
    ctx.validate();
    if (!(t_max > ctx.t_start) || t_max > 200) throw InvalidSpec("t_max must lie in (t_start, 200]");
    LineFunction<M> phi(R);
    ZeroReport rep;
    rep.t_max = t_max;
    auto f = [&](double t) { return phi(t); };
    for (double t : real_zeros(f, ctx.t_start, t_max, ctx.step, worker_count(ctx))) {
        LineZero z;
        z.t = t;
        auto [v, sc] = phi.value_scale(t);
        z.residual = std::abs(v) / sc;
        auto rho = newton_refine<M>(phi.expr(), {phi.center(), t});
        z.re_deviation = std::abs(rho.real() - phi.center());
        if (std::abs(rho.imag() - t) > 1e-6) z.re_deviation = std::max(z.re_deviation, std::abs(rho.imag() - t));
        const double h = 1e-6 * std::max(1.0, t);
        auto [vp, scp] = phi.value_scale(t + h);
        auto [vm, scm] = phi.value_scale(t - h);
        const double slope = std::abs(vp - vm) / (2 * h) / sc;
        z.simple = (vp < 0) != (vm < 0) && slope > 1e-10;
        rep.zeros.push_back(z);
    }
    rep.line_count = static_cast<int>(rep.zeros.size());
    if (with_rectangle)
        rep.rectangle_count = count_zeros_rectangle<M>(phi.expr(), phi.center() - 2, phi.center() + 2, 0, t_max, ctx);
    return rep;
}

// Zeros of xi(s + a) on Re s = 1/2 - a, i.e. Riemann zeros; the shift only
// relabels the variable.
inline std::vector<double> riemann_xi_zeros(int count, double shift, const EvalContext& ctx) {
    auto f = [&](double t) {
        std::complex<double> s(0.5 - shift, t);
        return num::xi<DoubleMode>(s + shift).real();
    };
    std::vector<double> out;
    double lo = ctx.t_start;
    while (static_cast<int>(out.size()) < count && lo < 200) {
        for (double t : real_zeros(f, lo, lo + 20, ctx.step, worker_count(ctx)))
            if (static_cast<int>(out.size()) < count) out.push_back(t);
        lo += 20;
    }
    return out;
}

// ------------------------------------------------------------ X^dd checks

struct RatioReport {
    bool ok = true;
    double max_off_line = 0; // max |X_w / X^dd| off the line
    double max_on_line = 0;
    bool equality_on_line = false;
    std::vector<std::complex<double>> witnesses;
};

inline RatioReport check_ratio_bound(const XEQDRecord& R, int w, int samples, std::uint64_t seed = 1) {
    const WData* d = nullptr;
    for (const auto& x : R.wd)
        if (x.w == w) d = &x;
    if (!d) throw NotInFrakWp("element not in frak W_p");
    if (d->lp == 0) throw InvalidSpec("w lies in the ddagger stratum");
    CompiledExpression<DoubleMode> num(ZetaExpression({d->X})), den(ZetaExpression({R.Xdd}));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> im(-50, 50);
    const double c2 = -R.c / 2.0, res[4] = {c2, c2 + 0.1, 0, 5};
    RatioReport rep;
    for (int i = 0; i < samples; ++i) {
        double x = res[i % 4];
        std::complex<double> s(x, im(rng));
        if (std::abs(s.imag()) < 1e-3) s += std::complex<double>(0, 0.5);
        double ratio = std::abs(num(s) / den(s));
        bool on_line = x == c2;
        if (on_line) {
            rep.max_on_line = std::max(rep.max_on_line, ratio);
            if (std::abs(ratio - 1) < 1e-12) rep.equality_on_line = true;
            if (ratio > 1 + 1e-12) {
                rep.ok = false;
                rep.witnesses.push_back(s);
            }
        } else {
            rep.max_off_line = std::max(rep.max_off_line, ratio);
            if (ratio > 1 + 1e-12) {
                rep.ok = false;
                rep.witnesses.push_back(s);
            }
        }
    }
    return rep;
}

// symbolic bound on the surviving xi factors of X^dd / D_p, plus a grid
// check that the quotient does not vanish on Re s >= -c/2
inline bool check_xdd_nonvanishing(const Case& C, const XEQDRecord& R) {
    if (!check_xdd_quotient(C, R)) return false;
    Term q = xdd_quotient(C);
    if (!check_xdd_quotient_bound(C, q)) return false;
    CompiledExpression<DoubleMode> f(ZetaExpression({q}));
    for (double x : {-C.c() / 2.0, -C.c() / 2.0 + 0.5, 0.0, 3.0})
        for (double t = 0.25; t <= 40; t += 0.75) {
            auto v = f({x, t});
            if (!(std::abs(v) > 0) || !std::isfinite(std::abs(v))) return false;
        }
    return true;
}

// ------------------------------------------------------------ FE shadow

struct FEShadow {
    double max_abs = 0;
    double max_rel = 0;
    std::vector<std::complex<double>> points;
};

template <class M = DoubleMode>
FEShadow fe_numeric_shadow(const ZetaExpression& e, int c, int sign, int points, std::uint64_t seed = 7) {
    CompiledExpression<M> f(e);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(-c / 2.0 - 3, -c / 2.0 + 3), im(0.5, 10);
    FEShadow out;
    for (int i = 0; i < points; ++i) {
        std::complex<double> s(re(rng), im(rng));
        using Cx = typename M::complex;
        auto a = num::to_cdouble<M>(f(Cx(s.real(), s.imag())));
        auto b = num::to_cdouble<M>(f(Cx(-c - s.real(), -s.imag())));
        double diff = std::abs(a - double(sign) * b);
        out.max_abs = std::max(out.max_abs, diff);
        out.max_rel = std::max(out.max_rel, diff / std::max(std::abs(a), 1e-300));
        out.points.push_back(s);
    }
    return out;
}

} // namespace weng
