#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polycert/cli.hpp"

using namespace polycert;

namespace {

const char* kQuintic = "2842*n^5 - 7821*n^4 - 16884*n^3 + 10428*n^2 + 5082*n - 2607";
const char* kQuartic = "(x-1)(x-2)(x-3)(x-4)";

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int status = cli::main(args, in, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST(Cli, CertifyIntegerJson) {
    Outcome o = run({"certify", "--mode", "integer", "--format", "json", kQuintic});
    ASSERT_EQ(o.status, 0) << o.err;
    json j = json::parse(o.out);
    EXPECT_EQ(j["shift"], json::array({"5", "1"}));
    EXPECT_EQ(j["remainder"], json::array({"2166128", "1"}));
    std::vector<std::string> q;
    for (const auto& c : j["quotient"])
        q.push_back(c[0].get<std::string>());
    EXPECT_EQ(q, (std::vector<std::string>{"2842", "6389", "15061", "85733", "433747"}));
}

TEST(Cli, CertifyAtNegativeExitsOne) {
    Outcome o = run({"certify-at", "--shift", "5", kQuartic});
    EXPECT_EQ(o.status, 1);
    EXPECT_NE(o.out.find("HasNegative(1)"), std::string::npos) << o.out;
    o = run({"certify-at", "--shift", "5", "--format", "json", kQuartic});
    EXPECT_EQ(o.status, 1);
    EXPECT_EQ(json::parse(o.out)["verdict"]["index"], "1");
}

TEST(Cli, CertifyAtPositiveExitsZero) {
    Outcome o = run({"certify-at", "--shift", "10", "--format", "latex", kQuartic});
    EXPECT_EQ(o.status, 0);
    EXPECT_EQ(o.out, "f(x) \\equiv (x^3 + 35 x + 300)(x - 10) + 3024\n");
}

TEST(Cli, VerifyTamperedCertificate) {
    Outcome o = run({"certify", "--format", "json", kQuintic});
    ASSERT_EQ(o.status, 0);
    json j = json::parse(o.out);

    Outcome ok = run({"verify"}, j.dump());
    EXPECT_EQ(ok.status, 0);
    EXPECT_EQ(ok.out, "Valid\n");

    j["remainder"] = json::array({"2166129", "1"});
    Outcome bad = run({"verify", "--format", "json"}, j.dump());
    EXPECT_EQ(bad.status, 1);
    EXPECT_EQ(json::parse(bad.out)["result"], "IdentityMismatch");
}

TEST(Cli, VerifyFromFile) {
    Outcome o = run({"certify", "--format", "json", kQuartic});
    std::string path = ::testing::TempDir() + "polycert_cert.json";
    {
        std::ofstream f(path);
        f << o.out;
    }
    Outcome v = run({"verify", "--input", path});
    EXPECT_EQ(v.status, 0) << v.err;
    std::remove(path.c_str());
}

TEST(Cli, ExpressionFromStdinAndFile) {
    Outcome o = run({"certify"}, kQuartic);
    EXPECT_EQ(o.status, 0) << o.err;
    EXPECT_NE(o.out.find("shift: 10"), std::string::npos);

    std::string path = ::testing::TempDir() + "polycert_expr.txt";
    {
        std::ofstream f(path);
        f << kQuintic << "\n";
    }
    o = run({"certify", "--input", path});
    EXPECT_EQ(o.status, 0) << o.err;
    EXPECT_NE(o.out.find("shift: 5"), std::string::npos);
    std::remove(path.c_str());
}

TEST(Cli, Threshold) {
    Outcome o = run({"threshold", "--format", "json", kQuartic});
    ASSERT_EQ(o.status, 0) << o.err;
    json j = json::parse(o.out);
    EXPECT_EQ(j["exact"], json::array({"10", "1"}));
    EXPECT_EQ(j["minimal_integer_shift"], "10");

    o = run({"threshold", "--epsilon", "1/1024", kQuintic});
    ASSERT_EQ(o.status, 0) << o.err;
    EXPECT_NE(o.out.find("minimal integer shift: 5"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("epsilon = 1/1024"), std::string::npos) << o.out;
}

TEST(Cli, Bound) {
    Outcome o = run({"bound", "--format", "json", kQuintic});
    ASSERT_EQ(o.status, 0);
    EXPECT_EQ(json::parse(o.out)["bound_overestimate"], json::array({"1409", "203"}));
    o = run({"bound", "x^3 + 5*x + 1"});
    EXPECT_EQ(o.status, 0);
    EXPECT_NE(o.out.find("no negative coefficients"), std::string::npos);
}

TEST(Cli, RealMode) {
    Outcome o = run({"certify", "--mode", "real", "--epsilon", "1/1048576", "--format", "json", kQuintic});
    ASSERT_EQ(o.status, 0) << o.err;
    Certificate c = certificate_from_json(json::parse(o.out));
    EXPECT_EQ(verify(c), VerifyResult::Valid);
    EXPECT_LT(c.shift, Rat(5));
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({"certify-at", kQuartic}).status, 2);                      // missing --shift
    EXPECT_EQ(run({"certify", "--shift", "3", kQuartic}).status, 2);         // --shift not allowed
    EXPECT_EQ(run({"certify", "2x + 1"}).status, 2);                         // parse error
    EXPECT_EQ(run({"certify", "x + y"}).status, 2);                          // two variables
    EXPECT_EQ(run({"certify", "--format", "yaml", kQuartic}).status, 2);     // bad flag value
    EXPECT_EQ(run({"frobnicate"}).status, 2);                                // unknown command
    EXPECT_EQ(run({}).status, 2);                                            // no command
    EXPECT_EQ(run({"certify", "--", "-x + 1"}).status, 2);                   // negative leading coefficient
    EXPECT_EQ(run({"certify-at", "--shift", "0.5", kQuartic}).status, 2);    // decimal shift
    EXPECT_EQ(run({"verify"}, "{").status, 2);                               // malformed JSON
    EXPECT_EQ(run({"threshold", "--mode", "real", kQuartic}).status, 2);     // mode only for certify
    EXPECT_EQ(run({"certify", "--input", "/nonexistent/file", }).status, 2); // unreadable file
}

TEST(Cli, ErrorsNameTheOffendingToken) {
    Outcome o = run({"certify", "2x + 1"});
    EXPECT_NE(o.err.find("position 1"), std::string::npos) << o.err;
    EXPECT_NE(o.err.find("'x'"), std::string::npos) << o.err;
}

TEST(Cli, VariableFlag) {
    EXPECT_EQ(run({"certify", "--var", "n", kQuintic}).status, 0);
    EXPECT_EQ(run({"certify", "--var", "x", kQuintic}).status, 2);
}

TEST(Cli, GallopGivesSameOutput) {
    EXPECT_EQ(run({"threshold", kQuintic}).out, run({"threshold", "--gallop", kQuintic}).out);
}

TEST(Cli, DeterministicOutput) {
    for (const char* cmd : {"certify", "threshold", "bound"}) {
        Outcome a = run({cmd, "--format", "json", kQuintic});
        Outcome b = run({cmd, "--format", "json", kQuintic});
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, Help) {
    Outcome o = run({"--help"});
    EXPECT_EQ(o.status, 0);
    EXPECT_NE(o.out.find("certify-at"), std::string::npos);
}
