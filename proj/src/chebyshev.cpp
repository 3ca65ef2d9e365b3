#include "chebrad/chebyshev.hpp"

#include "chebrad/modpoly.hpp"

namespace chebrad {

IntPoly cheb_t(unsigned long d) {
    IntPoly prev(Int(2));          // T_0
    IntPoly cur = IntPoly::x();    // T_1
    if (d == 0) return prev;
    const IntPoly x = IntPoly::x();
    for (unsigned long i = 1; i < d; ++i) {
        IntPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly cheb_u(unsigned long d) {
    IntPoly prev(Int(1));          // U_0
    IntPoly cur = IntPoly::x();    // U_1
    if (d == 0) return prev;
    const IntPoly x = IntPoly::x();
    for (unsigned long i = 1; i < d; ++i) {
        IntPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly cheb_t_explicit(unsigned long d) {
    if (d == 0) return IntPoly(Int(2));
    // T_d = sum_k (-1)^k d/(d-k) C(d-k, k) x^(d-2k)
    std::vector<Int> v(d + 1, Int(0));
    for (unsigned long k = 0; 2 * k <= d; ++k) {
        Int c = binom_exact(Int(d - k), Int(k)) * Int(d);
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), Int(d - k).get_mpz_t());
        if (r != 0) throw internal_error("cheb_t_explicit: non-integer term");
        v[d - 2 * k] = (k % 2 == 0) ? q : -q;
    }
    return IntPoly(std::move(v));
}

IntPoly cheb_u_explicit(unsigned long d) {
    std::vector<Int> v(d + 1, Int(0));
    for (unsigned long k = 0; 2 * k <= d; ++k) {
        Int c = binom_exact(Int(d - k), Int(k));
        v[d - 2 * k] = (k % 2 == 0) ? c : -c;
    }
    return IntPoly(std::move(v));
}

IntPoly cheb_t_iterate(const Int& ell, unsigned n) {
    if (ell < 3 || !is_prime(ell) || ell == 2)
        throw invalid_argument("cheb_t_iterate: ell must be an odd prime");
    if (n < 1) throw invalid_argument("cheb_t_iterate: n must be >= 1");
    Int deg;
    mpz_pow_ui(deg.get_mpz_t(), ell.get_mpz_t(), n);
    if (deg > kMaxDegree) throw resource_limit("cheb_t_iterate: degree exceeds the dense cap");
    const IntPoly t_ell = cheb_t(ell.get_ui());
    IntPoly r = t_ell;
    for (unsigned i = 1; i < n; ++i) r = t_ell.compose(r);
    if (deg <= 243 && r != cheb_t(deg.get_ui()))
        throw theorem_violation("cheb_t_iterate: composition disagrees with the recurrence");
    return r;
}

const char* to_string(Irreducibility ir) {
    switch (ir) {
        case Irreducibility::proven_eisenstein: return "proven-eisenstein";
        case Irreducibility::proven_mod_q: return "proven-mod-q";
        default: return "assumed";
    }
}

namespace {

bool eisenstein_at(const IntPoly& f, const Int& p) {
    if (!f.is_monic()) return false;
    for (int i = 0; i < f.degree(); ++i)
        if (!mpz_divisible_p(f.coeff(static_cast<size_t>(i)).get_mpz_t(), p.get_mpz_t()))
            return false;
    Int p2 = p * p;
    return !mpz_divisible_p(f.coeff(0).get_mpz_t(), p2.get_mpz_t());
}

bool irreducible_mod_q_test(const IntPoly& f, uint64_t q) {
    ModPoly fq = ModPoly::reduce(f, Int(static_cast<unsigned long>(q)));
    if (fq.degree() != f.degree()) return false;
    // Rabin: x^(q^d) = x mod f, and gcd(x^(q^(d/r)) - x, f) = 1 for primes r | d
    const int d = fq.degree();
    std::vector<int> prime_divs;
    int m = d;
    for (int r = 2; r * r <= m; ++r)
        if (m % r == 0) {
            prime_divs.push_back(r);
            while (m % r == 0) m /= r;
        }
    if (m > 1) prime_divs.push_back(m);
    ModPoly x = ModPoly::x(q);
    auto frob = [&](unsigned k) {
        ModPoly r = x;
        for (unsigned i = 0; i < k; ++i) r = pow_mod(r, Int(static_cast<unsigned long>(q)), fq);
        return r;
    };
    for (int r : prime_divs) {
        ModPoly g = gcd(frob(static_cast<unsigned>(d / r)) - x, fq);
        if (g.degree() != 0) return false;
    }
    return (frob(static_cast<unsigned>(d)) - x).is_zero();
}

}  // namespace

Instance make_instance(const Int& ell, unsigned n, const Int& t) {
    Instance inst;
    inst.ell = ell;
    inst.n = n;
    inst.t = t;
    inst.phi = cheb_t_iterate(ell, n) - IntPoly(t);
    mpz_pow_ui(inst.degree.get_mpz_t(), ell.get_mpz_t(), n);

    if (eisenstein_at(inst.phi, ell)) {
        inst.irred = Irreducibility::proven_eisenstein;
        return inst;
    }
    // the mod-q scan costs ~deg^3 log q per prime; past a few hundred the
    // honest answer is the assumed flag
    if (inst.degree > 400) {
        inst.irred = Irreducibility::assumed;
        return inst;
    }
    // scan the first 25 primes q not dividing disc = ell * (t^2 - 4) * (...)
    Int t2m4 = t * t - 4;
    unsigned tried = 0;
    for (uint64_t q = 2; tried < 25; ++q) {
        if (!is_prime(Int(static_cast<unsigned long>(q)))) continue;
        if (mpz_divisible_ui_p(ell.get_mpz_t(), q)) continue;
        if (t2m4 != 0 && mpz_divisible_ui_p(t2m4.get_mpz_t(), q)) continue;
        ++tried;
        if (irreducible_mod_q_test(inst.phi, q)) {
            inst.irred = Irreducibility::proven_mod_q;
            inst.irred_witness = Int(static_cast<unsigned long>(q));
            return inst;
        }
    }
    inst.irred = Irreducibility::assumed;
    return inst;
}

std::pair<IntPoly, IntPoly> tau_factor(const Int& ell, unsigned n, int s) {
    if (s != 2 && s != -2) throw invalid_argument("tau_factor: shift must be +-2");
    IntPoly f = cheb_t_iterate(ell, n) - IntPoly(Int(s));
    IntPoly linear{Int(-s), Int(1)};
    auto [sq, r] = divmod_monic(f, linear);
    if (!r.is_zero()) throw theorem_violation("tau_factor: x - s does not divide T - s");
    // coefficient-wise square root of sq, from the leading term down;
    // integrality is guaranteed, so any failure is an implementation bug
    const int d = sq.degree();
    if (d % 2 != 0) throw theorem_violation("tau_factor: square part has odd degree");
    const int m = d / 2;
    std::vector<Int> tau(static_cast<size_t>(m) + 1, Int(0));
    tau[static_cast<size_t>(m)] = 1;
    for (int i = m - 1; i >= 0; --i) {
        // coefficient of x^(m+i) in tau^2 is 2*tau_i + sum_{j=i+1..m-1} tau_j tau_{m+i-j}
        Int acc = 0;
        for (int j = i + 1; j <= m - 1 && m + i - j <= m; ++j)
            if (m + i - j > j)
                acc += 2 * tau[static_cast<size_t>(j)] * tau[static_cast<size_t>(m + i - j)];
            else if (m + i - j == j)
                acc += tau[static_cast<size_t>(j)] * tau[static_cast<size_t>(j)];
        Int num = sq.coeff(static_cast<size_t>(m + i)) - acc;
        Int q, rr;
        mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(), Int(2).get_mpz_t());
        if (rr != 0) throw theorem_violation("tau_factor: non-integer square-root step");
        tau[static_cast<size_t>(i)] = q;
    }
    IntPoly tau_poly(std::move(tau));
    if (linear * tau_poly * tau_poly != f)
        throw theorem_violation("tau_factor: re-expansion mismatch");
    return {linear, tau_poly};
}

}  // namespace chebrad
