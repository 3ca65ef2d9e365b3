#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "chebrad/errors.hpp"

namespace chebrad {

using Int = mpz_class;

/// A p-adic valuation: a nonnegative integer, or infinity for the valuation
/// of zero. Infinity compares greater than every finite value and never
/// participates in arithmetic.
class Valuation {
  public:
    Valuation(long v) : v_(v), inf_(false) {
        if (v < 0) throw invalid_argument("valuation cannot be negative");
    }
    static Valuation infinity() {
        Valuation r(0);
        r.inf_ = true;
        return r;
    }

    bool is_infinite() const { return inf_; }
    long value() const {
        if (inf_) throw invalid_argument("infinite valuation has no finite value");
        return v_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

  private:
    long v_;
    bool inf_;
};

/// Primality test: deterministic Miller-Rabin bases below 3.3e14,
/// 64 pseudo-random rounds above.
bool is_prime(const Int& n);

/// nu_p(a): the largest k with p^k | a; infinity for a = 0.
/// Throws invalid_argument if p is not prime.
Valuation valuation(const Int& a, const Int& p);

/// sigma_p(a): sum of the base-p digits of a >= 0.
unsigned long digit_sum(const Int& a, const Int& p);

/// Number of carries when a + b is summed in base p. Computed by digit
/// simulation and cross-checked against the sigma_p identity.
unsigned long carries(const Int& a, const Int& b, const Int& p);

/// nu_p(binomial(a+b, b)), via Kummer's carry count, cross-checked against
/// the factorial-valuation identity.
unsigned long binom_valuation(const Int& a, const Int& b, const Int& p);

/// binomial(n, m) mod p by the digit-wise Lucas product. Returns 0 for m > n.
Int binom_mod(const Int& n, const Int& m, const Int& p);

/// Exact binomial coefficient (reference oracle for the two functions above).
Int binom_exact(const Int& n, const Int& m);

/// A partially factored nonzero integer. sign * prod(p^e) * cofactor
/// reproduces the input exactly; every map key is a (probable) prime and the
/// cofactor, when present, has no prime factor at or below the trial bound.
struct FactoredInt {
    int sign = 1;
    std::map<Int, unsigned long> factors;
    std::optional<Int> cofactor;  // composite remainder > 1
    Int value() const;
};

struct FactorOptions {
    Int trial_bound = 1000000;
    // Brent-rho iterations spent per surviving composite; 0 disables the stage.
    unsigned long rho_iterations = 200000;
};

/// Factor nz completely over the primes <= bound; any remaining part is
/// either split further by the deterministic rho stage or reported as an
/// explicit composite cofactor. Never guesses.
FactoredInt trial_factor(const Int& nz, const FactorOptions& opts = {});

enum class Squarefree { yes, no, unknown };

/// Squarefree test honest about incomplete factorizations: "unknown" when a
/// composite cofactor survives.
Squarefree squarefree_status(const Int& nz, const FactorOptions& opts = {});

const char* to_string(Squarefree s);

}  // namespace chebrad
