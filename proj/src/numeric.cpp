#include "chebrad/numeric.hpp"

#include <algorithm>
#include <array>

namespace chebrad {

namespace {

Int powmod(Int base, Int exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const Int& n, const Int& a) {
    // returns true if a witnesses compositeness of odd n > 2
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const std::array<unsigned long, 12> small = {2,  3,  5,  7,  11, 13,
                                                        17, 19, 23, 29, 31, 37};
    for (unsigned long p : small) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    // Bases {2,...,17} decide primality below 3.4e14 (first seven primes).
    static const Int deterministic_limit = Int("341550071728321");
    if (n < deterministic_limit) {
        for (unsigned long a : {2, 3, 5, 7, 11, 13, 17})
            if (miller_rabin_witness(n, Int(a))) return false;
        return true;
    }
    for (unsigned long a : small)
        if (miller_rabin_witness(n, Int(a))) return false;
    // 64 rounds with a fixed-seed generator keeps results reproducible.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x9e3779b97f4a7c15ull);
    for (int i = 0; i < 64; ++i) {
        Int a = rng.get_z_range(n - 3) + 2;
        if (miller_rabin_witness(n, a)) return false;
    }
    return true;
}

Valuation valuation(const Int& a, const Int& p) {
    if (p < 2 || !is_prime(p)) throw invalid_argument("valuation: p must be prime");
    if (a == 0) return Valuation::infinity();
    Int rest;
    unsigned long k = mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return Valuation(static_cast<long>(k));
}

unsigned long digit_sum(const Int& a, const Int& p) {
    if (a < 0) throw invalid_argument("digit_sum: a must be nonnegative");
    if (p < 2) throw invalid_argument("digit_sum: p must be >= 2");
    Int rest = a, digit;
    unsigned long sum = 0;
    while (rest != 0) {
        mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        sum += digit.get_ui();
    }
    return sum;
}

unsigned long carries(const Int& a, const Int& b, const Int& p) {
    if (a < 0 || b < 0) throw invalid_argument("carries: inputs must be nonnegative");
    if (p < 2) throw invalid_argument("carries: p must be >= 2");
    // digit simulation
    Int ra = a, rb = b, da, db;
    unsigned long count = 0;
    int carry = 0;
    while (ra != 0 || rb != 0 || carry != 0) {
        mpz_fdiv_qr(ra.get_mpz_t(), da.get_mpz_t(), ra.get_mpz_t(), p.get_mpz_t());
        mpz_fdiv_qr(rb.get_mpz_t(), db.get_mpz_t(), rb.get_mpz_t(), p.get_mpz_t());
        Int s = da + db + carry;
        carry = (s >= p) ? 1 : 0;
        count += carry;
    }
    // sigma identity cross-check
    unsigned long lhs = digit_sum(a, p) + digit_sum(b, p) - digit_sum(a + b, p);
    unsigned long pm1 = mpz_get_ui(Int(p - 1).get_mpz_t());
    if (lhs != count * pm1)
        throw theorem_violation("carries: digit simulation disagrees with the sigma identity");
    return count;
}

unsigned long binom_valuation(const Int& a, const Int& b, const Int& p) {
    if (!is_prime(p)) throw invalid_argument("binom_valuation: p must be prime");
    unsigned long by_carries = carries(a, b, p);
    // factorial-valuation route: nu(n!) = (n - sigma(n)) / (p - 1)
    Int num = (a + b - Int(digit_sum(a + b, p))) - (a - Int(digit_sum(a, p))) -
              (b - Int(digit_sum(b, p)));
    Int check = num / (p - 1);
    if (check != static_cast<long>(by_carries))
        throw theorem_violation("binom_valuation: carry count disagrees with factorial valuations");
    return by_carries;
}

Int binom_mod(const Int& n, const Int& m, const Int& p) {
    if (!is_prime(p)) throw invalid_argument("binom_mod: p must be prime");
    if (n < 0 || m < 0) throw invalid_argument("binom_mod: inputs must be nonnegative");
    if (m > n) return 0;  // documented convention
    Int rn = n, rm = m, dn, dm, result = 1;
    while (rm != 0 || rn != 0) {
        mpz_fdiv_qr(rn.get_mpz_t(), dn.get_mpz_t(), rn.get_mpz_t(), p.get_mpz_t());
        mpz_fdiv_qr(rm.get_mpz_t(), dm.get_mpz_t(), rm.get_mpz_t(), p.get_mpz_t());
        if (dm > dn) return 0;
        // binomial(dn, dm) mod p with dn, dm < p
        Int num = 1, den = 1;
        for (Int i = 0; i < dm; ++i) {
            num = num * ((dn - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        Int inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        result = result * num % p * inv % p;
        if (result == 0) return 0;
    }
    return result;
}

Int binom_exact(const Int& n, const Int& m) {
    if (m < 0 || m > n) return 0;
    Int r;
    Int k = (m * 2 > n) ? Int(n - m) : m;
    if (!k.fits_ulong_p()) throw resource_limit("binom_exact: arguments too large");
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

Int FactoredInt::value() const {
    Int v = sign;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    if (cofactor) v *= *cofactor;
    return v;
}

namespace {

// Brent's variant of Pollard rho with a fixed parameter schedule.
Int brent_rho(const Int& n, unsigned long budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1; c <= 8; ++c) {
        Int y = 2, m = 128, g = 1, r = 1, q = 1, x, ys;
        unsigned long spent = 0;
        while (g == 1 && spent < budget) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(m, Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
                spent += mpz_get_ui(lim.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack
            do {
                ys = (ys * ys + c) % n;
                mpz_gcd(g.get_mpz_t(), Int(abs(x - ys)).get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return 1;  // gave up
}

// Fold m (known to have no prime factor <= bound) into the result.
void absorb(FactoredInt& out, Int m, const FactorOptions& opts, unsigned long mult) {
    if (m == 1) return;
    if (is_prime(m)) {
        out.factors[m] += mult;
        return;
    }
    unsigned long k = 2;
    Int root;
    if (mpz_perfect_power_p(m.get_mpz_t())) {
        while (true) {
            if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k)) {
                absorb(out, root, opts, mult * k);
                return;
            }
            ++k;
            if (k > mpz_sizeinbase(m.get_mpz_t(), 2)) break;
        }
    }
    if (opts.rho_iterations > 0) {
        Int d = brent_rho(m, opts.rho_iterations);
        if (d > 1 && d < m) {
            unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
            absorb(out, d, opts, mult * e);
            absorb(out, m, opts, mult);
            return;
        }
    }
    if (mult > 1) {
        Int pm;
        mpz_pow_ui(pm.get_mpz_t(), m.get_mpz_t(), mult);
        m = pm;
    }
    out.cofactor = out.cofactor ? *out.cofactor * m : m;
}

}  // namespace

FactoredInt trial_factor(const Int& nz, const FactorOptions& opts) {
    if (nz == 0) throw invalid_argument("trial_factor: input must be nonzero");
    if (opts.trial_bound < 2) throw invalid_argument("trial_factor: bound must be >= 2");
    FactoredInt out;
    Int m = nz;
    if (m < 0) {
        out.sign = -1;
        m = -m;
    }
    unsigned long e2 = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Int(2).get_mpz_t());
    if (e2) out.factors[2] = e2;
    Int p = 3;
    while (p <= opts.trial_bound && p * p <= m) {
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            out.factors[p] = e;
        }
        p += 2;
    }
    if (m > 1) {
        if (m <= opts.trial_bound || m <= (opts.trial_bound * opts.trial_bound)) {
            // fully trial-divided: the survivor is prime
            out.factors[m] += 1;
        } else {
            absorb(out, m, opts, 1);
        }
    }
    if (out.value() != nz) throw internal_error("trial_factor: reassembly mismatch");
    return out;
}

Squarefree squarefree_status(const Int& nz, const FactorOptions& opts) {
    if (nz == 0) throw invalid_argument("squarefree_status: input must be nonzero");
    if (nz == 1 || nz == -1) return Squarefree::yes;
    FactoredInt f = trial_factor(nz, opts);
    for (const auto& [p, e] : f.factors)
        if (e >= 2) return Squarefree::no;
    if (f.cofactor) {
        if (mpz_perfect_power_p(f.cofactor->get_mpz_t())) return Squarefree::no;
        return Squarefree::unknown;
    }
    return Squarefree::yes;
}

const char* to_string(Squarefree s) {
    switch (s) {
        case Squarefree::yes: return "yes";
        case Squarefree::no: return "no";
        default: return "unknown";
    }
}

}  // namespace chebrad
