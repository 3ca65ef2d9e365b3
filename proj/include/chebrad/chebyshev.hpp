#pragma once

#include <optional>
#include <utility>

#include "chebrad/intpoly.hpp"

namespace chebrad {

// Degree guard for the dense polynomial machinery.
inline constexpr long kMaxDegree = 3000;

/// Chebyshev polynomial in the monic (Dickson) normalization:
/// T_d(z + 1/z) = z^d + z^-d, with T_0 = 2, T_1 = x. Built by the
/// three-term recurrence.
IntPoly cheb_t(unsigned long d);

/// Second-kind polynomial, U_0 = 1, U_1 = x, same recurrence.
IntPoly cheb_u(unsigned long d);

/// Explicit-sum constructions (the closed binomial formulas); independent
/// of the recurrence, used as cross-checks.
IntPoly cheb_t_explicit(unsigned long d);
IntPoly cheb_u_explicit(unsigned long d);

/// T_{ell^n} computed by n-fold composition of T_ell; equals cheb_t(ell^n)
/// (verified internally for ell^n <= 243).
IntPoly cheb_t_iterate(const Int& ell, unsigned n);

enum class Irreducibility { proven_eisenstein, proven_mod_q, assumed };
const char* to_string(Irreducibility ir);

/// A concrete analysis target: Phi(x) = T_{ell^n}(x) - t.
struct Instance {
    Int ell;
    unsigned n = 1;
    Int t;
    IntPoly phi;   // T_{ell^n} - t, monic of degree ell^n
    Int degree;    // ell^n
    Irreducibility irred = Irreducibility::assumed;
    std::optional<Int> irred_witness;  // the q of a proven-mod-q certificate
};

/// Build Phi and run the irreducibility heuristic: Eisenstein at ell when
/// nu_ell(t) = 1, otherwise a mod-q irreducibility scan over the first 25
/// primes q not dividing disc; "assumed" if both fail.
Instance make_instance(const Int& ell, unsigned n, const Int& t);

/// Square decomposition at the shift s = +-2:
/// T_{ell^n}(x) - s = (x - s) * tau(x)^2 with tau monic of degree
/// (ell^n - 1)/2. Returns {x - s, tau}; re-expands to verify.
std::pair<IntPoly, IntPoly> tau_factor(const Int& ell, unsigned n, int s);

}  // namespace chebrad
