// weng-cli: formula, fe-check, tables, chains, zeros, count, invariants.
//
// Exit codes: 0 ok, 1 a verification failed, 2 usage error, 3 internal
// inconsistency.  Errors are also written to stderr as one JSON object.

#include <weng/fixtures.hpp>
#include <weng/invariants.hpp>
#include <weng/numerics.hpp>
#include <weng/serialize.hpp>
#include <weng/zeta.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

using namespace weng;
using nlohmann::json;

namespace {

struct Job {
    std::string command, series;
    int rank = 0;
    int p = 0;
    bool all_p = false;
    double t_max = 30;
    int precision = 53;
    std::string output = "text";
    std::string compare;
    unsigned threads = 0;
    bool allow_e8_weyl = false;
    int k = 1;
    double trace = 0;
};

struct Usage : Error {
    explicit Usage(const std::string& w) : Error("Usage", w) {}
};

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// json numbers are written with 17 significant digits
json num17(double x) { return json::parse(fmt17(x)); }

RootSystemSpec spec_of(const Job& j) {
    RootSystemSpec sp{parse_series(j.series), j.rank};
    require_valid(sp);
    return sp;
}

std::vector<int> ps_of(const Job& j, const RootSystemSpec& sp, bool default_all) {
    if (j.p != 0 && j.all_p) throw Usage("--p and --all-p are exclusive");
    if (j.all_p || (j.p == 0 && default_all)) {
        std::vector<int> v;
        for (int p = 1; p <= sp.rank; ++p) v.push_back(p);
        return v;
    }
    if (j.p == 0) throw Usage("give --p or --all-p");
    if (j.p < 1 || j.p > sp.rank) throw Usage("--p out of range 1.." + std::to_string(sp.rank));
    return {j.p};
}

unsigned long long weyl_cap(const Job& j, const RootSystemSpec& sp) {
    if (sp.series == Series::E && sp.rank == 8) {
        if (!j.allow_e8_weyl) throw Usage("E8 needs the full Weyl group (696729600 elements); pass --allow-e8-weyl");
        return 700000000ULL;
    }
    return default_weyl_cap;
}

void require_output(const Job& j, std::initializer_list<const char*> ok) {
    for (const char* o : ok)
        if (j.output == o) return;
    throw Usage("--output " + j.output + " is not supported by " + j.command);
}

EvalContext context(const Job& j) {
    EvalContext ctx;
    ctx.precision = j.precision;
    ctx.threads = j.threads;
    ctx.validate();
    return ctx;
}

json spec_json(const RootSystemSpec& sp) { return {{"series", std::string(1, series_char(sp.series))}, {"rank", sp.rank}}; }

// ---------------------------------------------------------------- commands

int cmd_formula(const Job& j, std::ostream& out) {
    require_output(j, {"text", "latex", "json"});
    auto sp = spec_of(j);
    auto cases = make_cases(sp, ps_of(j, sp, false), weyl_cap(j, sp));
    json arr = json::array();
    for (const auto& C : cases) {
        auto e = zhat_p(C);
        if (j.output == "json") {
            json o = spec_json(sp);
            o["p"] = C.p;
            o["c_p"] = C.c();
            o["zhat_p"] = to_json(e);
            arr.push_back(o);
        } else {
            if (cases.size() > 1) out << "p=" << C.p << ": ";
            out << render(e, j.output == "latex" ? Format::latex : Format::text) << "\n";
        }
    }
    if (j.output == "json") out << (cases.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    return 0;
}

int cmd_fe_check(const Job& j, std::ostream& out) {
    require_output(j, {"text", "json"});
    auto sp = spec_of(j);
    auto cases = make_cases(sp, ps_of(j, sp, false), weyl_cap(j, sp));
    bool all = true;
    json arr = json::array();
    for (const auto& C : cases) {
        auto r = check_zhat_functional_equation(C);
        all = all && r.ok;
        if (j.output == "json") {
            json o = spec_json(sp);
            o["p"] = C.p;
            o["c_p"] = C.c();
            o["ok"] = r.ok;
            o["termwise"] = r.termwise;
            if (!r.ok) o["report"] = r.report;
            arr.push_back(o);
        } else {
            out << sp.name() << " p=" << C.p << " c_p=" << C.c() << ": " << (r.ok ? "ok" : "FAILED") << "\n";
            if (!r.ok) out << "  " << r.report << "\n";
        }
    }
    if (j.output == "json") out << json{{"ok", all}, {"cases", arr}}.dump(2) << "\n";
    return all ? 0 : 1;
}

int cmd_tables(const Job& j, std::ostream& out) {
    require_output(j, {"text", "json"});
    auto sp = spec_of(j);
    auto rs = build_root_system(sp);
    auto ps = ps_of(j, sp, true);
    std::vector<int> cps;
    json tabs = json::array();
    std::ostringstream text;
    for (int p : ps) {
        auto T = build_grading(rs, p);
        cps.push_back(T.c_p);
        json N = json::array(), M = json::array();
        text << sp.name() << " p=" << p << "  c_p=" << T.c_p << "  k_p=" << T.k_p << "\n";
        for (int k = 1; k <= T.k_p; ++k) {
            auto row = T.row(k);
            text << "  k=" << k << "\n";
            std::string hs = "    h  ", ns = "    N  ", ms = "    M  ";
            auto cell = [](int v) {
                char b[16];
                std::snprintf(b, sizeof b, "%5d", v);
                return std::string(b);
            };
            int hmin = row.front().first, hmax = row.back().first;
            for (int h = hmin; h <= hmax + 1; ++h) {
                int n = T.n(k, h), m = h >= 2 ? M_p(T, k, h) : 0;
                hs += cell(h);
                ns += cell(n);
                ms += cell(m);
                if (h <= hmax) N.push_back({{"k", k}, {"h", h}, {"n", n}});
                if (m != 0) M.push_back({{"k", k}, {"h", h}, {"m", m}});
            }
            text << hs << "\n" << ns << "\n" << ms << "\n";
        }
        tabs.push_back({{"p", p}, {"c_p", T.c_p}, {"k_p", T.k_p}, {"N", N}, {"M", M}});
    }
    int rc = 0;
    std::string mismatch;
    if (!j.compare.empty()) {
        bool found = false;
        for (const auto& f : load_cp_fixtures(j.compare)) {
            if (!(f.spec == sp)) continue;
            found = true;
            for (std::size_t i = 0; i < ps.size(); ++i)
                if (f.c_p.at(ps[i] - 1) != cps[i])
                    mismatch += "p=" + std::to_string(ps[i]) + ": computed " + std::to_string(cps[i]) + ", fixture " +
                                std::to_string(f.c_p.at(ps[i] - 1)) + "\n";
        }
        if (!found) throw Usage("fixture has no entry for " + sp.name());
        rc = mismatch.empty() ? 0 : 1;
    }
    if (j.output == "json") {
        json o = spec_json(sp);
        o["c_p"] = cps;
        o["tables"] = tabs;
        o["root_system"] = to_json(rs);
        if (!j.compare.empty()) o["compare_ok"] = mismatch.empty();
        out << o.dump(2) << "\n";
    } else {
        out << "c_p:";
        for (int c : cps) out << " " << c;
        out << "\n" << text.str();
        if (!j.compare.empty()) out << (mismatch.empty() ? "fixture: match\n" : "fixture: MISMATCH\n" + mismatch);
    }
    return rc;
}

int cmd_chains(const Job& j, std::ostream& out) {
    require_output(j, {"text", "json"});
    auto sp = spec_of(j);
    auto rs = build_root_system(sp);
    auto ps = ps_of(j, sp, true);
    std::vector<ChainFixture> fx;
    if (!j.compare.empty()) {
        if (j.k != 1) throw Usage("fixtures hold k=1 chains only");
        fx = load_chain_fixtures(j.compare);
    }
    int rc = 0;
    json arr = json::array();
    for (int p : ps) {
        auto T = build_grading(rs, p);
        if (j.k < 1 || j.k > T.k_p) throw Usage("--k out of range 1.." + std::to_string(T.k_p));
        auto D = chain_decomposition(T, j.k);
        auto got = chains_as_digits(rs, D);
        std::string diff;
        bool have = false;
        for (const auto& f : fx)
            if (f.spec == sp && f.p == p) {
                have = true;
                diff = compare_chains(got, f.chains);
            }
        if (!j.compare.empty() && (!have || !diff.empty())) rc = 1;
        if (j.output == "json") {
            json o = spec_json(sp);
            o["p"] = p;
            o["k"] = j.k;
            o["chains"] = got;
            if (!j.compare.empty()) o["compare_ok"] = have && diff.empty();
            arr.push_back(o);
        } else {
            out << sp.name() << " p=" << p << " k=" << j.k << "\n";
            for (const auto& ch : got) {
                out << " ";
                for (const auto& d : ch) out << " " << d;
                out << "\n";
            }
            if (!j.compare.empty()) {
                if (!have) out << "  fixture: no entry\n";
                else out << (diff.empty() ? "  fixture: match\n" : "  fixture: MISMATCH\n" + diff);
            }
        }
    }
    if (j.output == "json") out << arr.dump(2) << "\n";
    return rc;
}

template <class M>
ZeroReport scan(const XEQDRecord& R, const Job& j, const EvalContext& ctx) {
    return scan_zeros_on_line<M>(R, j.t_max, ctx, true);
}

// (t, phi(t)) on the scan grid, for plotting
int trace(const Job& j, const std::vector<Case>& cases, const EvalContext& ctx, std::ostream& out) {
    if (j.output != "csv") throw Usage("--trace needs --output csv");
    if (!(j.trace > 0) || (j.t_max - ctx.t_start) / j.trace > 1e6) throw Usage("--trace step out of range");
    out << (cases.size() > 1 ? "p,t,phi\n" : "t,phi\n");
    for (const auto& C : cases) {
        auto R = build_XEQD(C);
        LineFunction<DoubleMode> phi(R);
        const long n = static_cast<long>((j.t_max - ctx.t_start) / j.trace);
        for (long i = 0; i <= n; ++i) {
            double t = ctx.t_start + i * j.trace;
            if (cases.size() > 1) out << C.p << ",";
            out << fmt17(t) << "," << fmt17(phi(t)) << "\n";
        }
    }
    return 0;
}

int cmd_zeros(const Job& j, std::ostream& out) {
    require_output(j, {"text", "json", "csv"});
    auto sp = spec_of(j);
    auto ctx = context(j);
    auto cases = make_cases(sp, ps_of(j, sp, false), weyl_cap(j, sp));
    if (j.trace != 0) return trace(j, cases, ctx, out);
    int rc = 0;
    json arr = json::array();
    if (j.output == "csv") out << (cases.size() > 1 ? "p,t,residual,re_deviation,simple\n" : "t,residual,re_deviation,simple\n");
    for (const auto& C : cases) {
        auto R = build_XEQD(C);
        auto rep = ctx.precision == 113 ? scan<QuadMode>(R, j, ctx) : scan<DoubleMode>(R, j, ctx);
        bool ok = rep.rectangle_count == rep.line_count;
        for (const auto& z : rep.zeros) ok = ok && z.re_deviation < ctx.tol_online && z.simple;
        if (!ok) rc = 1;
        if (j.output == "csv") {
            for (const auto& z : rep.zeros) {
                if (cases.size() > 1) out << C.p << ",";
                out << fmt17(z.t) << "," << fmt17(z.residual) << "," << fmt17(z.re_deviation) << ","
                    << (z.simple ? "true" : "false") << "\n";
            }
        } else if (j.output == "json") {
            json zs = json::array();
            for (const auto& z : rep.zeros)
                zs.push_back({{"t", num17(z.t)}, {"residual", num17(z.residual)},
                              {"re_deviation", num17(z.re_deviation)}, {"simple", z.simple}});
            json o = spec_json(sp);
            o["p"] = C.p;
            o["c_p"] = C.c();
            o["critical_re"] = num17(-C.c() / 2.0);
            o["t_max"] = num17(rep.t_max);
            o["precision"] = ctx.precision;
            o["line_count"] = rep.line_count;
            o["rectangle_count"] = rep.rectangle_count;
            o["zeros"] = zs;
            arr.push_back(o);
        } else {
            out << sp.name() << " p=" << C.p << "  Re s = " << fmt17(-C.c() / 2.0) << "  t in (0, " << j.t_max
                << "]  line=" << rep.line_count << " rectangle=" << rep.rectangle_count << "\n";
            for (const auto& z : rep.zeros)
                out << "  t=" << fmt17(z.t) << "  residual=" << fmt17(z.residual) << "  re_dev=" << fmt17(z.re_deviation)
                    << (z.simple ? "  simple" : "  NOT-SIMPLE") << "\n";
        }
    }
    if (j.output == "json") out << (cases.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    return rc;
}

int cmd_count(const Job& j, std::ostream& out) {
    require_output(j, {"text", "json"});
    auto sp = spec_of(j);
    auto ctx = context(j);
    auto cases = make_cases(sp, ps_of(j, sp, false), weyl_cap(j, sp));
    json arr = json::array();
    for (const auto& C : cases) {
        auto R = build_XEQD(C);
        const double c2 = -C.c() / 2.0;
        int n;
        if (ctx.precision == 113) {
            LineFunction<QuadMode> phi(R);
            n = count_zeros_rectangle<QuadMode>(phi.expr(), c2 - 2, c2 + 2, 0, j.t_max, ctx);
        } else {
            LineFunction<DoubleMode> phi(R);
            n = count_zeros_rectangle<DoubleMode>(phi.expr(), c2 - 2, c2 + 2, 0, j.t_max, ctx);
        }
        if (j.output == "json") {
            json o = spec_json(sp);
            o["p"] = C.p;
            o["rectangle"] = {num17(c2 - 2), num17(c2 + 2), num17(ctx.t_start), num17(j.t_max)};
            o["count"] = n;
            arr.push_back(o);
        } else {
            out << sp.name() << " p=" << C.p << "  [" << fmt17(c2 - 2) << ", " << fmt17(c2 + 2) << "] x [" << ctx.t_start
                << ", " << j.t_max << "]: " << n << "\n";
        }
    }
    if (j.output == "json") out << (cases.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    return 0;
}

int cmd_invariants(const Job& j, std::ostream& out) {
    require_output(j, {"text", "json"});
    auto sp = spec_of(j);
    auto rs = build_root_system(sp);
    auto ps = ps_of(j, sp, true);
    const bool e8 = sp.series == Series::E && sp.rank == 8;
    std::unique_ptr<WeylGroup> G;
    if (!e8 || j.allow_e8_weyl) G = std::make_unique<WeylGroup>(enumerate_weyl(rs, weyl_cap(j, sp)));
    const bool brute = sp.rank <= 4 || sp.series == Series::F || sp.series == Series::G;
    bool all = true;
    json arr = json::array();
    if (!G && j.output == "text") out << "note: Weyl-dependent checks skipped for E8 (pass --allow-e8-weyl)\n";
    for (int p : ps) {
        auto T = build_grading(rs, p);
        auto res = root_invariants(rs, T);
        if (G) {
            auto pd = compute_frak_Wp(*G, rs, p);
            auto w = weyl_invariants(rs, T, *G, pd, brute);
            res.insert(res.end(), w.begin(), w.end());
        }
        json items = json::array();
        for (const auto& r : res) {
            if (!r.skipped) all = all && r.ok;
            if (j.output == "json") {
                json o{{"name", r.name}, {"ok", r.ok}, {"skipped", r.skipped}, {"root_only", r.root_only}};
                if (!r.witness.empty()) o["witness"] = r.witness;
                items.push_back(o);
            } else {
                out << sp.name() << " p=" << p << "  " << (r.skipped ? "skip" : r.ok ? "pass" : "FAIL") << "  " << r.name
                    << "\n";
                if (!r.ok && !r.witness.empty()) out << "    " << r.witness << "\n";
            }
        }
        if (j.output == "json") {
            json o = spec_json(sp);
            o["p"] = p;
            o["weyl_checks"] = static_cast<bool>(G);
            if (G) o["parabolic"] = to_json(compute_frak_Wp(*G, rs, p));
            o["results"] = items;
            arr.push_back(o);
        }
    }
    if (j.output == "json") out << json{{"ok", all}, {"cases", arr}}.dump(2) << "\n";
    return all ? 0 : 1;
}

int fail(const std::string& kind, const std::string& msg, int code) {
    std::cerr << json{{"error", kind}, {"message", msg}, {"exit_code", code}}.dump() << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    Job j;
    CLI::App app{"Weng zeta functions: construction, functional equations, zeros"};
    app.require_subcommand(1, 1);
    auto add = [&](const std::string& name, const std::string& desc) {
        auto* s = app.add_subcommand(name, desc);
        s->add_option("series", j.series, "A..G")->required();
        s->add_option("rank", j.rank, "rank r")->required();
        s->add_option("--p", j.p, "maximal parabolic index 1..r");
        s->add_flag("--all-p", j.all_p, "every p");
        s->add_option("--output", j.output, "text | latex | json | csv")
            ->check(CLI::IsMember({"text", "latex", "json", "csv"}));
        s->add_option("--threads", j.threads, "worker cap (0 = hardware)");
        s->add_flag("--allow-e8-weyl", j.allow_e8_weyl, "enumerate the E8 Weyl group");
        return s;
    };
    add("formula", "print zhat_p");
    add("fe-check", "verify zhat_p(s) = zhat_p(-c_p - s) exactly");
    add("tables", "N_p(k,h), M_p(k,h) and c_p")->add_option("--compare", j.compare, "c_p fixture");
    auto* ch = add("chains", "chain decompositions of Sigma_p(k)");
    ch->add_option("--compare", j.compare, "chain fixture");
    ch->add_option("--k", j.k, "level k (default 1)");
    for (const char* name : {"zeros", "count"}) {
        auto* s = add(name, name == std::string("zeros") ? "scan zeros on Re s = -c_p/2" : "argument-principle count");
        s->add_option("--t-max", j.t_max, "upper ordinate (default 30)");
        s->add_option("--precision", j.precision, "53 or 113 bits")->check(CLI::IsMember({53, 113}));
        if (name == std::string("zeros")) s->add_option("--trace", j.trace, "emit (t, phi(t)) every STEP as csv");
    }
    add("invariants", "root-combinatorial lemma checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("Usage", e.what(), 2);
    }
    j.command = app.get_subcommands().front()->get_name();

    try {
        std::ostringstream out;
        int rc = 0;
        if (j.command == "formula") rc = cmd_formula(j, out);
        else if (j.command == "fe-check") rc = cmd_fe_check(j, out);
        else if (j.command == "tables") rc = cmd_tables(j, out);
        else if (j.command == "chains") rc = cmd_chains(j, out);
        else if (j.command == "zeros") rc = cmd_zeros(j, out);
        else if (j.command == "count") rc = cmd_count(j, out);
        else rc = cmd_invariants(j, out);
        std::cout << out.str();
        return rc;
    } catch (const Usage& e) {
        return fail(e.kind(), e.what(), 2);
    } catch (const InvalidSpec& e) {
        return fail(e.kind(), e.what(), 2);
    } catch (const CapExceeded& e) {
        return fail(e.kind(), e.what(), 2);
    } catch (const Error& e) {
        return fail(e.kind(), e.what(), 3);
    } catch (const std::exception& e) {
        return fail("Internal", e.what(), 3);
    }
}
