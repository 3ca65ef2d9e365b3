// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "chebrad/analysis.hpp"
#include "chebrad/verify.hpp"

using namespace chebrad;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string text;
    double budget_seconds;  // 0 = untimed
    std::function<bool(std::string&)> run;
};

bool sweep_ok(const SweepResult& r, std::string& detail) {
    if (r.ok()) {
        detail = std::to_string(r.passed) + "/" + std::to_string(r.total);
        return true;
    }
    detail = std::to_string(r.passed) + "/" + std::to_string(r.total);
    if (!r.failures.empty()) detail += "; first failure: " + r.failures.front();
    return false;
}

bool check_example(long ell, long long expect_ind, long long expect_ell_exp,
                   long long expect_shift_exp, long long expect_v, std::string& detail) {
    AnalysisReport r = analyze(make_instance(Int(ell), 3, Int(451251)));
    bool ok = r.v_ell == expect_v && !r.primes.empty() && r.primes[0].exact &&
              r.primes[0].ind_lo == expect_ind && r.delta.ell_exp == expect_ell_exp &&
              r.delta.shifted_exp == expect_shift_exp && r.delta.corrections.empty() &&
              r.delta.complete;
    char buf[160];
    std::snprintf(buf, sizeof buf, "nu=%lld ind_%ld=%lld Delta=%ld^%lld*(4-t0^2)^%lld", r.v_ell,
                  ell, r.primes.empty() ? -1 : r.primes[0].ind_lo, ell, r.delta.ell_exp,
                  r.delta.shifted_exp);
    detail = buf;
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "Example I: analyze(3,3,451251) -> ind_3 = 13, Delta = 3^55 (4-t0^2)^13",
                        10.0, [](std::string& d) { return check_example(3, 13, 55, 13, 6, d); }});
    criteria.push_back({2, "Example II: analyze(5,3,451251) -> nu_5 = 4, ind_5 = 31, Delta = 5^313 (4-t0^2)^62",
                        60.0, [](std::string& d) { return check_example(5, 31, 313, 62, 4, d); }});
    criteria.push_back({3, "Example III: analyze(7,3,451251) -> nu_7 = 2, ind_7 = 49, Delta = 7^931 (4-t0^2)^171",
                        600.0, [](std::string& d) { return check_example(7, 49, 931, 171, 2, d); }});
    criteria.push_back({4, "discriminant formula vs resultant oracle, ell in {3,5}, n in {1,2}, t in [-10,10]",
                        300.0, [](std::string& d) { return sweep_ok(sweeps::disc_oracle(), d); }});
    criteria.push_back({5, "monogenicity conditions equal Dedekind maximality for t in [-60,60]",
                        0.0, [](std::string& d) { return sweep_ok(sweeps::monogenic_dedekind(), d); }});
    criteria.push_back({6, "closed ell-index equals the exact polygon index on 50 instances + worked polygons",
                        0.0, [](std::string& d) { return sweep_ok(sweeps::ell_index(50, 1), d); }});
    criteria.push_back({7, "p-index squeeze on 50 instances with t = +-2 mod p^2",
                        0.0, [](std::string& d) { return sweep_ok(sweeps::p_index(50, 2), d); }});
    criteria.push_back({8, "integral bases: golden char poly + 20 instances verified, denominators = ell^ind",
                        0.0, [](std::string& d) { return sweep_ok(sweeps::basis(20, 3), d); }});
    criteria.push_back({9, "factor-shape prediction vs factorization for ell=5, p=7, n in {1,2,3}",
                        0.0, [](std::string& d) { return sweep_ok(sweeps::factor_shape(), d); }});
    criteria.push_back({10, "orbit structure of T_5 on F_49: fixed points, trees, weights", 1.0,
                        [](std::string& d) { return sweep_ok(sweeps::orbit(), d); }});
    criteria.push_back({11, "arithmetic lemma suite (digit sums, carries, binomials, residues)",
                        60.0, [](std::string& d) { return sweep_ok(sweeps::lemmas(4), d); }});

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        bool in_budget = c.budget_seconds <= 0.0 || secs <= c.budget_seconds;
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("[%s] %2d. %s  (%.2fs%s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.text.c_str(),
                    secs,
                    c.budget_seconds > 0.0
                        ? (std::string("/") + std::to_string((long)c.budget_seconds) + "s").c_str()
                        : "",
                    detail.empty() ? "" : "  -- ", detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s: %d/%zu criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
