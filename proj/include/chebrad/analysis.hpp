#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chebrad/chebyshev.hpp"
#include "chebrad/newton.hpp"
#include "chebrad/numeric.hpp"

namespace chebrad {

/// The ell residues mod ell^2 for which ell divides the index:
/// {T_ell(0), ..., T_ell(ell-1)} mod ell^2, sorted. Contains 0, 2 and -2.
std::vector<Int> bad_residues(const Int& ell);

struct MonogenicVerdict {
    enum class Answer { yes, no, unknown };
    Answer answer = Answer::unknown;
    bool ell_condition;          // T_ell(t) - t != 0 mod ell^2
    Int ell_condition_residue;   // T_ell(t) - t mod ell^2
    Squarefree tm2, tp2;         // squarefree status of t - 2 and t + 2
    std::vector<std::string> reasons;
};

const char* to_string(MonogenicVerdict::Answer a);

struct AnalyzeOptions {
    FactorOptions factor;
    /// Degree cap for the Dedekind cross-check of the closed monogenicity
    /// conditions and for basis char-poly verification.
    long cross_check_degree = 125;
    /// Restrict the per-prime table to these primes (besides ell) when set.
    std::vector<Int> prime_filter;
};

/// Theorem-of-monogenicity conditions, with a Dedekind cross-check at every
/// prime dividing the discriminant while the degree stays desk-sized.
MonogenicVerdict monogenicity(const Instance& inst, uint64_t seed = 0,
                              const AnalyzeOptions& opts = {});

struct EllIndex {
    long long ind;  // ind_ell(Phi)
    long long v;    // nu_ell(Phi(t))
};

/// Closed-form ell-index: sum of ell^(n-i) for i = 1..min(v-1, n), where
/// v = nu_ell(Phi(t)); 0 when v <= 1. Always cross-checked against the
/// polygon computation, which must be exact and equal.
/// Throws out_of_theory for t = +-2 mod ell^2.
EllIndex ind_ell_closed(const Instance& inst, uint64_t seed = 0);

/// Closed-form p-index floor(nu_p(t^2-4)/2) * (ell^n - 1)/2 for odd p != ell
/// with t = +-2 mod p^2 and t odd; confirmed by the lifted-polygon route.
long long ind_p_closed(const Instance& inst, const Int& p, uint64_t seed = 0);

/// The lifted-polygon verification behind the p-index formula: Hensel-lift
/// the factors of tau to precision nu_p(t^2-4)+1, assert each polygon is
/// one-sided from (0, nu) to (2, 0), and that the linear factor contributes
/// nothing.
struct LiftedPolygonVerdict {
    Int p;
    long long nu;              // nu_p(t^2 - 4)
    std::vector<IntPoly> lifts;
    std::vector<NewtonPolygon> polygons;
    long long ind_total = 0;   // sum over lifted factors
    bool linear_ok = false;    // the x -+ 2 polygon contributed 0
    bool regular = true;
};

LiftedPolygonVerdict lifted_polygon_check(const Instance& inst, const Int& p, uint64_t seed = 0);

/// D(Phi) in structured form: ell^(n ell^n) (4 - t^2)^((ell^n-1)/2).
struct DiscStructure {
    long long ell_exp;          // n * ell^n
    Int shifted_base;           // 4 - t^2
    long long shifted_exp;      // (ell^n - 1)/2
    FactoredInt t2m4_factored;  // numeric factorization of t^2 - 4 (t != +-2)
    int sign;                   // sign of the full value
    std::optional<Int> numeric; // expanded value when below the digit cap
    bool oracle_checked = false;
};

/// Structured discriminant, verified exactly against the resultant oracle
/// for ell^n <= 27.
DiscStructure poly_disc(const Instance& inst, const AnalyzeOptions& opts = {});

enum class IndexMethod { closed_form, polygon, dedekind };
const char* to_string(IndexMethod m);

struct PrimeIndexEntry {
    Int p;
    long long disc_valuation;  // nu_p(D(Phi))
    long long ind_lo = 0, ind_hi = 0;
    bool exact = false;
    bool undetermined = false;  // outside the proven theory and not pinched
    IndexMethod method = IndexMethod::closed_form;
    std::string note;
};

/// Field discriminant Delta(K) = D(Phi) / ind^2 in structured form:
/// ell^(n ell^n - 2 ind_ell) (4-t^2)^((ell^n-1)/2) / prod p^(2 ind_p).
struct DeltaReport {
    long long ell_exp;
    Int shifted_base;
    long long shifted_exp;
    struct Correction {
        Int p;
        long long exp;  // divide by p^exp (exp = 2 ind_p)
    };
    std::vector<Correction> corrections;
    std::vector<Int> undetermined_primes;
    // exponent ranges for undetermined primes: nu_p(Delta) within [lo, hi]
    struct Range {
        Int p;
        long long lo, hi;
    };
    std::vector<Range> undetermined_ranges;
    std::optional<FactoredInt> numeric_factored;  // |Delta| factored, when complete
    int sign = 1;
    bool complete = false;
};

/// D(Phi), the per-prime index table, and Delta(K) together.
struct DiscriminantReport {
    DiscStructure d_phi;
    std::vector<PrimeIndexEntry> primes;
    DeltaReport delta;
    long long v_ell = -1;  // nu_ell(Phi(t)); -1 when Phi(t) = 0
    std::vector<std::string> out_of_theory;
};

/// Assemble Delta(K) = D(Phi)/ind^2 from the per-prime analysis: the ell
/// side via the closed form or raw polygon bounds, each p | t^2 - 4 via the
/// Dedekind-derived criterion, the p-index theory, or polygon bounds, and
/// the 2-part by Dedekind only. Undetermined parts carry exponent ranges.
DiscriminantReport field_disc(const Instance& inst, uint64_t seed = 0,
                              const AnalyzeOptions& opts = {});

struct BasisElement {
    IntPoly numerator;    // polynomial in theta
    Int denominator;      // p^k
    Int denom_prime;      // p
    long long denom_exp;  // k
    bool verified = false;           // char poly computed and integral
    std::optional<IntPoly> char_poly;
};

/// Integral-basis generators. Power basis when monogenic; otherwise the
/// quotient generators q_{ell^(n-i)}(theta)/ell^i for i = 1..min(v-1, n)
/// under the squarefree/ell-index hypotheses. full_collection additionally
/// returns every q_j(theta)/ell^floor(y_j).
std::vector<BasisElement> integral_basis(const Instance& inst, uint64_t seed = 0,
                                         bool full_collection = false,
                                         const AnalyzeOptions& opts = {});

struct DensityEstimate {
    double value;         // truncated Euler product times the prefactor
    double tail_bound;    // multiplicative tail: true value in [value*(1-tail), value]
    Int prefactor_num, prefactor_den;  // (ell^2 - ell + 2)/ell^2
    unsigned long prime_bound;
};

DensityEstimate monogenic_density(const Int& ell, unsigned long prime_bound);

struct AnalysisReport {
    Int ell;
    unsigned n;
    Int t;
    Int degree;
    Irreducibility irred;
    std::optional<Int> irred_witness;
    uint64_t seed;

    DiscStructure disc;
    MonogenicVerdict monogenic;
    long long v_ell = -1;  // nu_ell(Phi(t)); -1 when Phi(t) = 0
    std::vector<PrimeIndexEntry> primes;
    DeltaReport delta;
    std::vector<BasisElement> basis;
    bool basis_available = false;
    std::string basis_note;
    std::vector<std::string> out_of_theory_notes;

    bool fully_determined() const;
};

/// Full pipeline: D(Phi), monogenicity, per-prime indices, Delta(K), and
/// integral basis where the hypotheses allow. Never throws for out-of-theory
/// inputs; partial results carry flags instead.
AnalysisReport analyze(const Instance& inst, uint64_t seed = 0, const AnalyzeOptions& opts = {});

}  // namespace chebrad
