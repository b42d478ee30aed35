#include "json.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
};

Outcome run(const std::string& args)
{
    std::string cmd = std::string(ANOSOV_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(ANOSOV_DATA) + "/" + name; }

json parsed(const Outcome& r)
{
    json j = json::parse(r.out);
    EXPECT_TRUE(j.contains("tool_version"));
    EXPECT_TRUE(j.contains("assumptions"));
    EXPECT_TRUE(j.contains("command"));
    return j;
}

} // namespace

TEST(Cli, PolyCheck)
{
    Outcome r = run("poly check --poly x^2-3x+1");
    EXPECT_EQ(r.code, 0);
    json j = parsed(r);
    EXPECT_EQ(j["command"], "poly.check");
    EXPECT_EQ(j["result"]["anosov"], true);
    EXPECT_EQ(j["result"]["rank"], 1);
    EXPECT_EQ(j["result"]["d"], 2);

    Outcome c = run("poly check --coeffs 1,-6,-6,-6,-1");
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(parsed(c)["result"]["full_rank"], true);

    Outcome bad = run("poly check --poly x^4-x^3-x^2-x+1");
    EXPECT_EQ(bad.code, 3);
    EXPECT_EQ(parsed(bad)["result"]["hyperbolic"], false);
}

TEST(Cli, PolyRankAndGalois)
{
    Outcome r = run("poly rank --poly x^4-10x^2+1");
    EXPECT_EQ(r.code, 0);
    json j = parsed(r);
    EXPECT_EQ(j["result"]["rank"], 1);
    EXPECT_EQ(j["result"]["root_order"].size(), 4u);

    Outcome g = run("poly galois --poly x^4-10x^2+1");
    EXPECT_EQ(g.code, 0);
    EXPECT_EQ(parsed(g)["result"]["group"], "K4");

    EXPECT_EQ(run("poly rank --poly x^2-3x+2").code, 1);
}

TEST(Cli, InputErrors)
{
    EXPECT_EQ(run("poly check").code, 1);
    EXPECT_EQ(run("poly check --poly x^2-3x+1 --coeffs 1,-3,1").code, 1);
    EXPECT_EQ(run("poly check --poly 'x^2-+'").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
    EXPECT_EQ(run("family verify -k 4").code, 1);
    EXPECT_EQ(run("family extend -k 2 -n 13").code, 1);
    EXPECT_EQ(run("type verdict 3,x,2").code, 1);
    EXPECT_EQ(run("algebra validate --input " + data("malformed.json")).code, 1);
    EXPECT_EQ(run("algebra validate --input " + data("missing.json")).code, 1);
    EXPECT_EQ(run("family build -k 2 --xi 3,1").code, 1);
}

TEST(Cli, TypeVerdict)
{
    Outcome r = run("type verdict 6,2,3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(parsed(r)["result"]["status"], "AnosovImpossible");
    Outcome f = run("type verdict 4,2,2,2,2 --f1 x^4-6x^3-6x^2-6x-1");
    EXPECT_EQ(f.code, 0);
    EXPECT_EQ(parsed(f)["result"]["status"], "GradedGuaranteed");
    EXPECT_EQ(parsed(f)["result"]["d_A"], 4);
    EXPECT_EQ(parsed(run("type verdict 4,2,2,2,2"))["result"]["status"], "OutsideGuarantee");
}

TEST(Cli, Family)
{
    Outcome v = run("family verify -k 2");
    EXPECT_EQ(v.code, 0);
    json j = parsed(v);
    EXPECT_EQ(j["result"]["passed"], true);
    EXPECT_EQ(j["result"]["k"], 2);
    EXPECT_FALSE(j["assumptions"].empty());

    Outcome b = run("family build -k 2 --xi 17,12");
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(parsed(b)["result"]["xi"], json({"17", "12"}));

    Outcome e = run("family extend -k 3 -n 15");
    EXPECT_EQ(e.code, 0);
    json ej = parsed(e);
    EXPECT_EQ(ej["result"]["abelian_factor_dim"], 3);
    EXPECT_EQ(ej["result"]["verdict"]["status"], "AnosovWithoutGrading");
}

TEST(Cli, Algebra)
{
    Outcome ok = run("algebra validate --input " + data("base.json"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(parsed(ok)["result"]["type"], json({4, 2, 2, 2, 2}));

    Outcome bad = run("algebra validate --input " + data("not_jacobi.json"));
    EXPECT_EQ(bad.code, 3);
    EXPECT_EQ(parsed(bad)["result"]["validation"]["jacobi"], false);

    Outcome h = run("algebra grade --input " + data("h3.json"));
    EXPECT_EQ(h.code, 0);
    EXPECT_EQ(parsed(h)["result"]["certificate"]["kind"], "Feasible");

    Outcome base = run("algebra grade --input " + data("base.json"));
    EXPECT_EQ(base.code, 3);
    json bj = parsed(base);
    EXPECT_EQ(bj["result"]["certificate"]["kind"], "Infeasible");
    EXPECT_EQ(bj["result"]["certificate_checked"], true);

    Outcome gamma = run("algebra grade --basis gamma --input " + data("base.json"));
    EXPECT_EQ(gamma.code, 3);

    Outcome da = run("algebra grade --input " + data("free_two_step.json") + " --automorphism " +
                 data("free_two_step_auto.json"));
    EXPECT_EQ(da.code, 0);
    EXPECT_EQ(parsed(da)["result"]["d_A_verdict"]["status"], "GradedGuaranteed");
}

TEST(Cli, DeterministicOutput)
{
    for (const char* args :
         {"poly rank --poly x^4-6x^3-6x^2-6x-1", "family verify -k 3", "type verdict 3,2,2"}) {
        Outcome a = run(args), b = run(args);
        EXPECT_EQ(a.code, b.code) << args;
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_FALSE(a.out.empty()) << args;
    }
}

TEST(Cli, Version)
{
    Outcome r = run("--version");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find('.'), std::string::npos);
}
