// Acceptance suite: one test per exit criterion, each printed as a single
// PASS/FAIL line after the run. Runtime limits are asserted in-test.

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "polycert/cli.hpp"
#include "polycert/polycert.hpp"
#include "support/oracles.hpp"

using namespace polycert;
using polycert::testing::Gen;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Poly quintic() { return parse("2842*n^5 - 7821*n^4 - 16884*n^3 + 10428*n^2 + 5082*n - 2607").poly; }
Poly quartic() { return parse("(x-1)(x-2)(x-3)(x-4)").poly; }

std::vector<Rat> rats(std::initializer_list<long> v) {
    std::vector<Rat> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

/// Random polynomial for the search criteria: degree 1..6, integer
/// coefficients in [-50, 50], positive leading coefficient.
Poly search_poly(Gen& gen, bool force_negative) {
    std::size_t degree = static_cast<std::size_t>(gen.integer(1, 6));
    return force_negative ? gen.integer_poly_with_negative(degree, -50, 50) : gen.integer_poly(degree, -50, 50);
}

const Rat kEps20 = inverse_power_of_two(20);

} // namespace

TEST(Acceptance, C1_QuinticIntegerCertificate) {
    Poly f = quintic();
    (void)certify_minimal(f); // warm-up
    Certificate c;
    double best = 1e9;
    for (int i = 0; i < 5; ++i) {
        auto start = Clock::now();
        c = certify_minimal(f, CertifyMode::integer());
        best = std::min(best, seconds_since(start));
    }
    EXPECT_EQ(c.shift, Rat(5));
    EXPECT_EQ(c.quotient, rats({2842, 6389, 15061, 85733, 433747}));
    EXPECT_EQ(c.remainder, Rat(2166128));
    EXPECT_TRUE(c.verdict.ok());
    EXPECT_EQ(verify(c), VerifyResult::Valid);
    EXPECT_LT(best, 1e-3) << "certify took " << best << " s";

    std::istringstream in;
    std::ostringstream out, err;
    int status = cli::main({"certify", "--mode", "integer", "--format", "json",
                            "2842*n^5 - 7821*n^4 - 16884*n^3 + 10428*n^2 + 5082*n - 2607"},
                           in, out, err);
    EXPECT_EQ(status, 0);
    Certificate from_cli = certificate_from_json(json::parse(out.str()));
    EXPECT_EQ(from_cli.shift, Rat(5));
    EXPECT_EQ(from_cli.quotient, c.quotient);
    EXPECT_EQ(from_cli.remainder, c.remainder);
}

TEST(Acceptance, C2_QuinticAtFour) {
    EXPECT_EQ(eval(quintic(), Rat(4)), Rat(12025));
}

TEST(Acceptance, C3_QuarticFirstWorkingShiftIsTen) {
    Poly f = quartic();
    Certificate at5 = certify_at(f, Rat(5));
    EXPECT_EQ(at5.verdict, Verdict::has_negative(1));
    EXPECT_EQ(minimal_integer_shift(f), 10);
    ThresholdBracket t = optimal_threshold(f, kEps20);
    ASSERT_TRUE(t.exact.has_value());
    EXPECT_EQ(*t.exact, Rat(10));
}

TEST(Acceptance, C4_CertificateExistsForRootedPolynomials) {
    auto start = Clock::now();
    Gen gen(4004);
    int integer_certs = 0, real_certs = 0;
    for (int i = 0; i < 500; ++i) {
        std::vector<Rat> roots;
        Poly f = gen.rooted_poly(static_cast<std::size_t>(gen.integer(1, 8)), 4, &roots);
        bool positive_root = false;
        for (const Rat& r : roots)
            positive_root = positive_root || sgn(r) > 0;
        ASSERT_TRUE(positive_root);

        Certificate ci = certify_minimal(f, CertifyMode::integer());
        ASSERT_TRUE(ci.verdict.ok()) << format(f);
        ASSERT_EQ(verify(ci), VerifyResult::Valid) << format(f);
        ++integer_certs;

        Certificate cr = certify_minimal(f, CertifyMode::real(kEps20));
        ASSERT_TRUE(cr.verdict.ok()) << format(f);
        ASSERT_EQ(verify(cr), VerifyResult::Valid) << format(f);
        ++real_certs;

        // The shift lies at or beyond every root of f.
        for (const Rat& r : roots) {
            EXPECT_LE(r, ci.shift);
            EXPECT_LE(r, cr.shift);
        }
    }
    EXPECT_EQ(integer_certs, 500);
    EXPECT_EQ(real_certs, 500);
    double elapsed = seconds_since(start);
    EXPECT_LT(elapsed, 30.0) << elapsed << " s";
}

TEST(Acceptance, C5_MonotonicityOfThePredicate) {
    auto start = Clock::now();
    Gen gen(5005);
    int cases = 0;
    while (cases < 500) {
        Poly f = gen.integer_poly(static_cast<std::size_t>(gen.integer(1, 8)), -30, 30);
        Rat b = gen.rational(0, 20, 8);
        if (!predicate_P(f, b).holds)
            b = Rat(minimal_integer_shift(f)) + gen.rational(0, 3, 8);
        ASSERT_TRUE(predicate_P(f, b).holds);
        Rat b_prime = b + gen.rational(0, 10, 16) + Rat(1, 65536);
        ++cases;
        EXPECT_TRUE(predicate_P(f, b_prime).holds) << format(f) << " b=" << to_string(b);
        EXPECT_TRUE(polycert::testing::oracle_predicate(f, b_prime));
        if (sgn(b) > 0) {
            EXPECT_TRUE(monotone_extension_check(f, b, b_prime, f.degree()));
        }
    }
    double elapsed = seconds_since(start);
    EXPECT_LT(elapsed, 10.0) << elapsed << " s";
}

TEST(Acceptance, C6_LagrangeSoundness) {
    auto start = Clock::now();
    Gen gen(6006);
    for (int i = 0; i < 500; ++i) {
        Poly f = search_poly(gen, true);
        auto report = lagrange_bound(f);
        ASSERT_TRUE(report.has_value());
        const Rat& bound = report->bound_overestimate;
        for (int j = 0; j < 20; ++j) {
            Rat x = bound + gen.rational(0, 100, 97) + Rat(1, 1 << 20);
            EXPECT_GT(eval(f, x), Rat(0)) << format(f) << " at " << to_string(x);
        }
        for (const Rat& root : polycert::testing::scan_positive_roots(f, bound, kEps20, 512))
            EXPECT_LT(root, bound) << format(f);
    }
    double elapsed = seconds_since(start);
    EXPECT_LT(elapsed, 30.0) << elapsed << " s";
}

TEST(Acceptance, C7_MinimalIntegerShiftMatchesLinearScan) {
    auto start = Clock::now();
    Gen gen(7007);
    for (int i = 0; i < 200; ++i) {
        Poly f = search_poly(gen, false);
        EXPECT_EQ(minimal_integer_shift(f), polycert::testing::oracle_linear_scan(f)) << format(f);
    }
    double elapsed = seconds_since(start);
    EXPECT_LT(elapsed, 20.0) << elapsed << " s";
}

TEST(Acceptance, C8_ThresholdBracketValidity) {
    auto start = Clock::now();
    Gen gen(8008);
    int exact_hits = 0;
    for (int i = 0; i < 200; ++i) {
        Poly f = search_poly(gen, true);
        ThresholdBracket t = optimal_threshold(f, kEps20);
        EXPECT_TRUE(polycert::testing::oracle_predicate(f, t.hi)) << format(f);
        EXPECT_FALSE(polycert::testing::oracle_predicate(f, t.lo)) << format(f);
        EXPECT_LT(t.lo, t.hi);
        EXPECT_LE(t.hi - t.lo, kEps20) << format(f);

        // b* lies in (lo, hi] and the minimal integer shift is ceil(b*).
        Int m = polycert::testing::oracle_linear_scan(f);
        EXPECT_EQ(minimal_integer_shift(f), m);
        EXPECT_LT(std::max(t.lo, Rat(m - 1)), std::min(t.hi, Rat(m))) << format(f);
        if (t.exact) {
            ++exact_hits;
            EXPECT_EQ(ceil(*t.exact), m);
        } else if (Rat(ceil(t.hi) - 1) <= t.lo) {
            EXPECT_EQ(ceil(t.hi), m) << format(f);
        }
    }
    std::printf("  [C8] %d of 200 thresholds were rational and hit exactly\n", exact_hits);
    double elapsed = seconds_since(start);
    EXPECT_LT(elapsed, 60.0) << elapsed << " s";
}

TEST(Acceptance, C9_RoundTrips) {
    Gen gen(9009);
    for (int i = 0; i < 1000; ++i) {
        Poly f = gen.rational_poly(static_cast<std::size_t>(gen.integer(0, 12)), 1000, 60);
        f.set_variable(gen.coin() ? "x" : "n");
        ASSERT_EQ(parse(format(f)).poly, f) << format(f);
    }
    // Every certificate kind the suite produces.
    std::vector<Certificate> certs = {certify_at(quintic(), Rat(5)), certify_at(quartic(), Rat(5)),
                                      certify_at(quartic(), Rat(10)), certify_minimal(quintic()),
                                      certify_minimal(quartic(), CertifyMode::real())};
    for (int i = 0; i < 200; ++i) {
        Poly f = gen.rooted_poly(static_cast<std::size_t>(gen.integer(1, 8)), 4);
        certs.push_back(certify_minimal(f, gen.coin() ? CertifyMode::integer() : CertifyMode::real()));
    }
    for (const Certificate& c : certs) {
        std::string text = certificate_to_json(c).dump();
        Certificate back = certificate_from_json_text(text);
        ASSERT_EQ(verify(back), VerifyResult::Valid);
        EXPECT_EQ(back.input, c.input);
        EXPECT_EQ(back.shift, c.shift);
        EXPECT_EQ(back.quotient, c.quotient);
        EXPECT_EQ(back.remainder, c.remainder);
        EXPECT_EQ(back.verdict, c.verdict);
    }
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    int status = RUN_ALL_TESTS();

    const char* titles[] = {
        "C1 quintic certificate at b = 5 (exact, < 1 ms)",
        "C2 f(4) = 12025",
        "C3 quartic: negative at b = 5, minimal shift 10, exact threshold 10",
        "C4 certificate exists and verifies, 500 rooted polynomials (< 30 s)",
        "C5 predicate monotonicity, 500 cases (< 10 s)",
        "C6 Lagrange soundness, 500 polynomials (< 30 s)",
        "C7 minimal integer shift vs linear scan, 200 polynomials (< 20 s)",
        "C8 threshold bracket validity, 200 polynomials (< 60 s)",
        "C9 parser and certificate JSON round-trips",
    };
    std::printf("\nAcceptance criteria:\n");
    const ::testing::UnitTest& ut = *::testing::UnitTest::GetInstance();
    for (int s = 0; s < ut.total_test_suite_count(); ++s) {
        const ::testing::TestSuite& suite = *ut.GetTestSuite(s);
        if (std::string(suite.name()) != "Acceptance")
            continue;
        for (int t = 0; t < suite.total_test_count(); ++t) {
            const ::testing::TestInfo& info = *suite.GetTestInfo(t);
            if (!info.should_run())
                continue;
            std::string name = info.name();
            int idx = name[1] - '1';
            std::printf("%s  %s  (%.3f s)\n", info.result()->Passed() ? "PASS" : "FAIL", titles[idx],
                        static_cast<double>(info.result()->elapsed_time()) / 1000.0);
        }
    }
    return status;
}
