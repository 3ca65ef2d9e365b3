#include <doctest.h>

#include <map>

#include "chebrad/analysis.hpp"

using namespace chebrad;

namespace {

// Frozen results from an independent maximal-order implementation
// (round_two over Q[x]/(Phi)): the factored field discriminant and the
// factored index, per instance.
struct ExternalCase {
    long ell;
    unsigned n;
    long t;
    int delta_sign;
    std::map<long, long> delta_factored;  // |Delta(K)|
    std::map<long, long> ind_factored;    // [O_K : Z[theta]]
};

const ExternalCase kCases[] = {
    {3, 1, 1, 1, {{3, 4}}, {}},
    {3, 1, 9, -1, {{3, 1}, {7, 1}, {11, 1}}, {{3, 1}}},
    {3, 1, 27, -1, {{3, 1}, {29, 1}}, {{3, 1}, {5, 1}}},
    {3, 1, 11, -1, {{3, 3}, {13, 1}}, {{3, 1}}},
    {3, 1, -11, -1, {{3, 3}, {13, 1}}, {{3, 1}}},
    {3, 2, 9, 1, {{3, 12}, {7, 4}, {11, 4}}, {{3, 3}}},
    {3, 2, 45, 1, {{3, 12}, {43, 4}, {47, 4}}, {{3, 3}}},
    {3, 1, 4, -1, {{2, 2}, {3, 4}}, {}},
    {3, 1, 123, -1, {{3, 3}, {5, 1}}, {{5, 1}, {11, 1}}},
    {5, 1, 7, 1, {{5, 7}}, {{3, 2}}},
    {5, 1, 27, 1, {{5, 5}, {29, 2}}, {{5, 2}}},
    {3, 2, 27, 1, {{3, 10}, {29, 4}}, {{3, 4}, {5, 4}}},
    {3, 1, 6, -1, {{2, 3}, {3, 3}}, {{2, 1}}},
    {3, 2, 6, 1, {{2, 12}, {3, 18}}, {{2, 4}}},
    {5, 1, 51, 1, {{5, 3}, {53, 2}}, {{5, 1}, {7, 2}}},
    {3, 1, 34, -1, {{2, 3}, {3, 3}}, {{2, 2}, {3, 1}}},
    {3, 2, 2847, 1, {{3, 18}, {5, 4}, {7, 4}, {11, 4}, {37, 4}, {569, 4}}, {}},
    {3, 1, 16, -1, {{2, 2}, {3, 3}, {7, 1}}, {{3, 1}}},
};

}  // namespace

TEST_CASE("field discriminants match an independent maximal-order computation") {
    for (const ExternalCase& c : kCases) {
        CAPTURE(c.ell);
        CAPTURE(c.n);
        CAPTURE(c.t);
        Instance inst = make_instance(Int(c.ell), c.n, Int(c.t));
        AnalysisReport r = analyze(inst, 42);

        for (const auto& e : r.primes) {
            long p = e.p.get_si();
            auto it = c.ind_factored.find(p);
            long expect = it == c.ind_factored.end() ? 0 : it->second;
            if (e.exact) {
                CHECK(e.ind_lo == expect);
            } else {
                CHECK(e.ind_lo <= expect);
                CHECK(expect <= e.ind_hi);
            }
        }
        // every index prime appears in the table
        for (const auto& [p, e] : c.ind_factored) {
            bool found = false;
            for (const auto& row : r.primes)
                if (row.p == p) found = true;
            CHECK(found);
        }
        if (r.delta.complete) {
            REQUIRE(r.delta.numeric_factored.has_value());
            Int mine = r.delta.numeric_factored->value();
            Int expect(c.delta_sign);
            for (const auto& [p, e] : c.delta_factored) {
                Int pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                              static_cast<unsigned long>(e));
                expect *= pw;
            }
            CHECK(mine == expect);
        } else {
            // incomplete only over the 2-adic part, and the truth must sit
            // inside the reported range
            for (const auto& u : r.delta.undetermined_ranges) {
                CHECK(u.p == 2);
                long p = u.p.get_si();
                long d_val = 0;
                for (const auto& row : r.primes)
                    if (row.p == u.p) d_val = row.disc_valuation;
                auto it = c.ind_factored.find(p);
                long true_ind = it == c.ind_factored.end() ? 0 : it->second;
                long true_delta = d_val - 2 * true_ind;
                CHECK(u.lo <= true_delta);
                CHECK(true_delta <= u.hi);
            }
        }
    }
}
