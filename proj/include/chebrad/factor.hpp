#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chebrad/chebyshev.hpp"
#include "chebrad/modpoly.hpp"

namespace chebrad {

/// Full factorization over F_p: squarefree decomposition, then
/// distinct-degree, then seeded Cantor-Zassenhaus equal-degree splitting.
/// Deterministic for a fixed seed. Returns monic irreducible factors with
/// multiplicities; the product times the leading unit reproduces f.
std::vector<std::pair<ModPoly, unsigned>> factor_mod_p(const ModPoly& f, uint64_t seed);

bool is_irreducible(const ModPoly& f);

/// mu = least positive integer with ell | p^(2 mu) - 1, and
/// h = nu_ell(p^(2 mu) - 1). Controls factor degrees and tree heights.
std::pair<unsigned long, unsigned long> mu_h(const Int& ell, const Int& p);

/// Predicted shape of Phi mod p for t = +-2 mod p^2 (odd p != ell):
/// (degree, multiplicity, count) parts plus the linear factor x - t_bar.
struct FactorShape {
    struct Part {
        unsigned long degree;
        unsigned multiplicity;
        unsigned long count;
        friend bool operator==(const Part&, const Part&) = default;
    };
    std::vector<Part> parts;  // sorted by degree
    long linear_root;         // t mod p, symmetric representative
    unsigned long mu = 0, h = 0;
};

FactorShape predict_factor_shape(const Int& ell, unsigned n, const Int& p, const Int& t);

/// Multifactor Hensel lifting: given f = prod(factors) mod p with the factors
/// pairwise coprime mod p, produce monic lifts with product = f mod p^e.
/// Quadratic steps; the result is verified by multiplication before return.
std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& factors,
                                 unsigned e, const Int& p);

/// Functional graph of T_ell acting on F_{p^m}. Nodes are field elements in
/// the deterministic coefficient encoding; each node stores its unique
/// successor and its weight (minimal-polynomial degree over F_p).
struct OrbitGraph {
    ExtFieldPtr field;
    Int ell;
    std::vector<uint32_t> succ;
    std::vector<unsigned> weight;
    size_t size() const { return succ.size(); }
    ExtElem element(size_t index) const;
    size_t index_of(const ExtElem& e) const;
    std::vector<std::vector<uint32_t>> predecessors() const;
};

OrbitGraph orbit_graph(const Int& ell, const Int& p, unsigned m, uint64_t max_size = 100000);

/// DOT serialization: one node per field element labeled with its
/// representative polynomial and weight, one edge per evaluation.
std::string to_dot(const OrbitGraph& g);

}  // namespace chebrad
