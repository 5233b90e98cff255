#include <json.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Run {
    int rc = -1;
    std::string out, err;
};

Run run(const std::string& args) {
    auto errfile = std::filesystem::temp_directory_path() / ("weng_cli_err_" + std::to_string(::getpid()));
    std::string cmd = std::string(WENG_CLI) + " " + args + " 2>" + errfile.string();
    Run r;
    FILE* f = ::popen(cmd.c_str(), "r");
    if (!f) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    int st = ::pclose(f);
    r.rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    std::ifstream e(errfile);
    std::stringstream ss;
    ss << e.rdbuf();
    r.err = ss.str();
    std::filesystem::remove(errfile);
    return r;
}

void expect_error(const Run& r, int code, const std::string& kind) {
    EXPECT_EQ(r.rc, code) << r.err;
    auto j = json::parse(r.err);
    EXPECT_EQ(j.at("exit_code"), code);
    EXPECT_EQ(j.at("error"), kind);
    EXPECT_FALSE(j.at("message").get<std::string>().empty());
}

} // namespace

TEST(Cli, Formula) {
    auto r = run("formula A 1 --p 1");
    EXPECT_EQ(r.rc, 0);
    EXPECT_EQ(r.out, "zhat(s+2)/s - zhat(s+1)/(s+2)\n");
    auto j = json::parse(run("formula A 2 --p 1 --output json").out);
    EXPECT_EQ(j.at("c_p"), 3);
    EXPECT_EQ(j.at("zhat_p").at("format"), "weng-zeta-expression");
}

TEST(Cli, FeCheck) {
    auto r = run("fe-check B 3 --all-p --output json");
    EXPECT_EQ(r.rc, 0);
    auto j = json::parse(r.out);
    EXPECT_TRUE(j.at("ok").get<bool>());
    EXPECT_EQ(j.at("cases").size(), 3u);
}

TEST(Cli, TablesCompare) {
    auto r = run("tables F 4 --output json --compare " + std::string(WENG_DATA_DIR) + "/fixtures/cp.json");
    EXPECT_EQ(r.rc, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j.at("c_p"), (std::vector<int>{11, 7, 5, 8}));
    EXPECT_TRUE(j.at("compare_ok").get<bool>());
}

TEST(Cli, ChainsCompare) {
    auto r = run("chains G 2 --output json --compare " + std::string(WENG_DATA_DIR) + "/fixtures/chains_k1.json");
    EXPECT_EQ(r.rc, 0) << r.err;
    for (const auto& c : json::parse(r.out)) EXPECT_TRUE(c.at("compare_ok").get<bool>());
}

TEST(Cli, ZerosJsonAndCsv) {
    auto r = run("zeros A 1 --p 1 --t-max 20 --output json");
    ASSERT_EQ(r.rc, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j.at("critical_re"), -1.0);
    ASSERT_EQ(j.at("zeros").size(), 1u);
    EXPECT_NEAR(j.at("zeros")[0].at("t").get<double>(), 15.538160223165905, 1e-9);
    EXPECT_EQ(j.at("line_count"), j.at("rectangle_count"));
    auto c = run("zeros A 1 --p 1 --t-max 20 --output csv");
    EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "t,residual,re_deviation,simple");
}

TEST(Cli, Deterministic) {
    auto a = run("zeros G 2 --all-p --t-max 12 --output json --threads 1");
    auto b = run("zeros G 2 --all-p --t-max 12 --output json --threads 4");
    EXPECT_EQ(a.rc, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Invariants) {
    auto r = run("invariants D 4 --output json");
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(json::parse(r.out).at("ok").get<bool>());
}

TEST(Cli, Errors) {
    expect_error(run("formula A 1"), 2, "Usage");
    expect_error(run("formula C 2 --p 1"), 2, "InvalidSpec");
    expect_error(run("formula H 2 --p 1"), 2, "InvalidSpec");
    expect_error(run("formula A 2 --p 3"), 2, "Usage");
    expect_error(run("formula E 8 --p 1"), 2, "Usage");
    expect_error(run("zeros A 1 --p 1 --precision 64"), 2, "Usage");
    expect_error(run("zeros A 1 --p 1 --t-max 1000"), 2, "InvalidSpec");
    expect_error(run("bogus"), 2, "Usage");
}

TEST(Cli, Trace) {
    auto r = run("zeros A 1 --p 1 --t-max 20 --trace 0.5 --output csv");
    ASSERT_EQ(r.rc, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "t,phi");
    int rows = 0, sign_changes = 0;
    double prev = 0;
    while (std::getline(in, line)) {
        double phi = std::stod(line.substr(line.find(',') + 1));
        if (rows++ && (phi < 0) != (prev < 0)) ++sign_changes;
        prev = phi;
    }
    EXPECT_EQ(rows, 40);
    EXPECT_EQ(sign_changes, 1); // the zero near 15.54
    expect_error(run("zeros A 1 --p 1 --trace 0.5 --output json"), 2, "Usage");
}
