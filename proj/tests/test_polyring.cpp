#include <doctest.h>

#include <random>

#include "chebrad/intpoly.hpp"
#include "chebrad/modpoly.hpp"

using namespace chebrad;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int maxdeg, long coeff_range) {
    std::uniform_int_distribution<int> ddist(0, maxdeg);
    std::uniform_int_distribution<long> cdist(-coeff_range, coeff_range);
    int d = ddist(rng);
    std::vector<Int> v;
    for (int i = 0; i <= d; ++i) v.emplace_back(cdist(rng));
    return IntPoly(std::move(v));
}

IntPoly random_monic(std::mt19937_64& rng, int deg, long coeff_range) {
    std::uniform_int_distribution<long> cdist(-coeff_range, coeff_range);
    std::vector<Int> v;
    for (int i = 0; i < deg; ++i) v.emplace_back(cdist(rng));
    v.emplace_back(1);
    return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("divmod by monic divisors") {
    IntPoly f{-9, -3, 0, 1};  // x^3 - 3x - 9
    auto [q, r] = divmod_monic(f, IntPoly::x());
    CHECK(q == IntPoly{-3, 0, 1});
    CHECK(r == IntPoly(Int(-9)));

    auto [q1, r1] = divmod_monic(f, IntPoly(Int(1)));
    CHECK(q1 == f);
    CHECK(r1.is_zero());

    // remainder theorem: f mod (x - t) = f(t)
    Int t = 17;
    IntPoly lin{-t, 1};
    auto [q2, r2] = divmod_monic(f, lin);
    CHECK(r2 == IntPoly(f.eval(t)));

    CHECK_THROWS_AS(divmod_monic(f, IntPoly{1, 2}), invalid_argument);
}

TEST_CASE("phi development example") {
    IntPoly f{-27, -3, 0, 1};  // x^3 - 3x - 27 = (x-2)(x+1)^2 - 25
    IntPoly phi{1, 1};
    PhiDevelopment dev = phi_development(f, phi, Int(5));
    REQUIRE(dev.coeffs.size() == 4);
    CHECK(dev.coeffs[0] == IntPoly(Int(-25)));
    CHECK(dev.coeffs[1].is_zero());
    CHECK(dev.coeffs[2] == IntPoly(Int(-3)));
    CHECK(dev.coeffs[3] == IntPoly(Int(1)));
    CHECK(dev.vals[0] == Valuation(2));
    CHECK(dev.vals[1] == Valuation::infinity());
    CHECK(dev.vals[2] == Valuation(0));
    CHECK(dev.vals[3] == Valuation(0));

    PhiDevelopment self = phi_development(phi, phi, Int(5));
    REQUIRE(self.coeffs.size() == 2);
    CHECK(self.coeffs[0].is_zero());
    CHECK(self.coeffs[1] == IntPoly(Int(1)));
}

TEST_CASE("phi development round trip and quotient relations") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 200; ++iter) {
        IntPoly f = random_poly(rng, 12, 50);
        IntPoly phi = random_monic(rng, 1 + static_cast<int>(rng() % 4), 6);
        PhiDevelopment dev = phi_development(f, phi, Int(3));
        // reconstruct f = sum a_i phi^i
        IntPoly acc, power(Int(1));
        for (const IntPoly& a : dev.coeffs) {
            acc += a * power;
            power *= phi;
        }
        CHECK(acc == f);
        // q_j = phi * q_{j+1} + a_j
        for (size_t j = 0; j + 1 < dev.quotients.size(); ++j)
            CHECK(dev.quotients[j] == phi * dev.quotients[j + 1] + dev.coeffs[j + 1]);
        for (const IntPoly& a : dev.coeffs) CHECK(a.degree() < phi.degree());
    }
}

TEST_CASE("taylor development") {
    CHECK(IntPoly{0, 0, 1}.taylor(Int(1)) == std::vector<Int>{1, 2, 1});
    IntPoly t3m2{-2, -3, 0, 1};  // T_3(x) - 2
    auto coeffs = t3m2.taylor(Int(-2));
    CHECK(coeffs[0] == -4);  // T_3(-2) - 2
    // matches the phi-development at x - c
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 50; ++iter) {
        IntPoly f = random_poly(rng, 9, 40);
        Int c(static_cast<long>(rng() % 11) - 5);
        auto tl = f.taylor(c);
        PhiDevelopment dev = phi_development(f, IntPoly{-c, 1}, Int(2));
        for (size_t i = 0; i < tl.size(); ++i) {
            Int expect = i < dev.coeffs.size() ? dev.coeffs[i].coeff(0) : Int(0);
            CHECK(tl[i] == expect);
        }
    }
}

TEST_CASE("composition") {
    IntPoly x2{0, 0, 1};
    CHECK(x2.compose(IntPoly{1, 1}) == IntPoly{1, 2, 1});
    IntPoly f{-7, 2, 0, 5};
    CHECK(f.compose(IntPoly::x()) == f);
    IntPoly g{3, -1, 2};
    CHECK(f.compose(g).degree() == f.degree() * g.degree());
}

TEST_CASE("resultant values") {
    CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{-2, 1}) == 3);
    CHECK(resultant(IntPoly{-5, 1, 3}, IntPoly(Int(1))) == 1);
    // Sylvester convention: res(x - a, x - b) = a - b
    CHECK(resultant(IntPoly{-3, 1}, IntPoly{-8, 1}) == 3 - 8);
    CHECK_THROWS_AS(resultant(IntPoly(), IntPoly{1, 1}), invalid_argument);
}

TEST_CASE("resultant swap symmetry") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 100; ++iter) {
        IntPoly f = random_poly(rng, 6, 20);
        IntPoly g = random_poly(rng, 6, 20);
        if (f.is_zero() || g.is_zero()) continue;
        Int lhs = resultant(f, g);
        Int rhs = resultant(g, f);
        long sign = (static_cast<long>(f.degree()) * g.degree()) % 2 == 1 ? -1 : 1;
        CHECK(lhs == sign * rhs);
    }
}

TEST_CASE("resultant multiplicative in the first argument") {
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 50; ++iter) {
        IntPoly f = random_poly(rng, 4, 10);
        IntPoly g = random_poly(rng, 4, 10);
        IntPoly h = random_poly(rng, 4, 10);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
    }
}

TEST_CASE("discriminant oracle") {
    CHECK(discriminant_oracle(IntPoly{-1, -3, 0, 1}) == 81);
    CHECK(discriminant_oracle(IntPoly{-9, -3, 0, 1}) == -2079);
    for (long a : {-5L, 2L, 7L}) CHECK(discriminant_oracle(IntPoly{-a, 0, 1}) == 4 * a);
    CHECK_THROWS_AS(discriminant_oracle(IntPoly{1, 1}), invalid_argument);
    CHECK_THROWS_AS(discriminant_oracle(IntPoly{1, 0, 2}), invalid_argument);
}

TEST_CASE("discriminant of a product") {
    // disc(fg) = disc(f) disc(g) res(f,g)^2 for coprime monic f, g
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 40) {
        IntPoly f = random_monic(rng, 2 + static_cast<int>(rng() % 3), 8);
        IntPoly g = random_monic(rng, 2 + static_cast<int>(rng() % 3), 8);
        Int r = resultant(f, g);
        Int df = discriminant_oracle(f), dg = discriminant_oracle(g);
        if (r == 0 || df == 0 || dg == 0) continue;
        CHECK(discriminant_oracle(f * g) == df * dg * r * r);
        ++done;
    }
}

TEST_CASE("modpoly arithmetic") {
    ModPoly a(5, {-1, 0, 1});  // x^2 - 1
    ModPoly b(5, {-1, 1});     // x - 1
    CHECK(gcd(a, b) == ModPoly(5, {4, 1}));

    // derivative of T_3 vanishes mod 3
    ModPoly t3(3, {0, -3, 0, 1});
    CHECK(t3.derivative().is_zero());

    // Frobenius: x^7 mod x^2+1 over F_7
    ModPoly mod(7, {1, 0, 1});
    ModPoly frob = pow_mod(ModPoly::x(7), Int(7), mod);
    CHECK(frob == ModPoly(7, {0, 6}));  // x^7 = -x since x^2 = -1

    CHECK_THROWS_AS(ModPoly(5, {1, 1}) + ModPoly(7, {1, 1}), invalid_argument);
    CHECK_THROWS_AS(divmod(a, ModPoly(5)), division_by_zero);
}

TEST_CASE("modpoly gcd divides both inputs") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 200; ++iter) {
        uint64_t p = std::vector<uint64_t>{3, 5, 7, 13}[rng() % 4];
        std::vector<uint64_t> ca(1 + rng() % 8), cb(1 + rng() % 8);
        for (auto& c : ca) c = rng() % p;
        for (auto& c : cb) c = rng() % p;
        ModPoly a(p, std::move(ca)), b(p, std::move(cb));
        if (a.is_zero() || b.is_zero()) continue;
        ModPoly g = gcd(a, b);
        CHECK(rem(a, g).is_zero());
        CHECK(rem(b, g).is_zero());
        // any common divisor divides g: use b itself when it divides a
        if (rem(a, b).is_zero()) CHECK(rem(g, b.monic()).is_zero());
    }
}

TEST_CASE("extension field arithmetic") {
    // F_49 = F_7[x]/(x^2+1): x * x = -1
    auto F = make_ext_field(7, ModPoly(7, {1, 0, 1}));
    ExtElem x(F, ModPoly::x(7));
    CHECK((x * x) == ExtElem(F, uint64_t(6)));
    CHECK((x.frobenius().frobenius()) == x);

    std::mt19937_64 rng(47);
    int done = 0;
    while (done < 100) {
        ModPoly rep(7, {static_cast<long>(rng() % 7), static_cast<long>(rng() % 7)});
        ExtElem a(F, rep);
        if (a.is_zero()) continue;
        CHECK((a.inverse() * a) == ExtElem(F, uint64_t(1)));
        ++done;
    }
    CHECK_THROWS_AS(ExtElem(F, uint64_t(0)).inverse(), division_by_zero);

    auto F2 = find_ext_field(7, 2);
    CHECK(F2->modulus.degree() == 2);
}

TEST_CASE("ext poly gcd") {
    auto F = make_ext_field(5, ModPoly::x(5));
    auto mk = [&](std::initializer_list<long> cs) {
        std::vector<ExtElem> v;
        for (long c : cs) v.emplace_back(F, static_cast<uint64_t>((c % 5 + 5) % 5));
        return ExtPoly(F, std::move(v));
    };
    // R(y) = 2y^2 + 4 over F_5 is separable: gcd(R, R') = 1
    ExtPoly r = mk({4, 0, 2});
    CHECK(ext_gcd(r, r.derivative()).degree() == 0);
    // (y - 1)^2 is not
    ExtPoly s = mk({1, -2, 1});
    CHECK(ext_gcd(s, s.derivative()).degree() == 1);
}

namespace {

// Exact determinant by fraction-free (Bareiss) elimination; test-side
// oracle for the resultant's Sylvester-determinant convention.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                Int q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                REQUIRE(r == 0);
                m[i][j] = q;
            }
        prev = m[k][k];
    }
    return sign == 1 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Int sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    const size_t df = static_cast<size_t>(f.degree()), dg = static_cast<size_t>(g.degree());
    std::vector<std::vector<Int>> m(df + dg, std::vector<Int>(df + dg, Int(0)));
    for (size_t i = 0; i < dg; ++i)
        for (size_t j = 0; j <= df; ++j) m[i][i + j] = f.coeff(df - j);
    for (size_t i = 0; i < df; ++i)
        for (size_t j = 0; j <= dg; ++j) m[dg + i][i + j] = g.coeff(dg - j);
    return bareiss_det(std::move(m));
}

}  // namespace

TEST_CASE("resultant equals the Sylvester determinant") {
    std::mt19937_64 rng(131);
    int done = 0;
    while (done < 50) {
        std::uniform_int_distribution<long> c(-10000, 10000);
        int df = 1 + static_cast<int>(rng() % 8), dg = 1 + static_cast<int>(rng() % 8);
        std::vector<Int> fc, gc;
        for (int i = 0; i <= df; ++i) fc.emplace_back(c(rng));
        for (int i = 0; i <= dg; ++i) gc.emplace_back(c(rng));
        IntPoly f(std::move(fc)), g(std::move(gc));
        if (f.degree() < 1 || g.degree() < 1) continue;
        CHECK(resultant(f, g) == sylvester_resultant(f, g));
        ++done;
    }
}
