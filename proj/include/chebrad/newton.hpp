#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chebrad/factor.hpp"
#include "chebrad/intpoly.hpp"
#include "chebrad/modpoly.hpp"

namespace chebrad {

/// One side of a principal polygon. Slope is -h/e in lowest terms with
/// h, e > 0; the degree d = length/e counts the on-side lattice steps.
struct Side {
    long x0, y0, x1, y1;
    long h, e;  // slope = -h/e, gcd(h, e) = 1
    long length() const { return x1 - x0; }
    long degree() const { return length() / e; }
    friend bool operator==(const Side&, const Side&) = default;
};

/// Principal phi-polygon: the negative-slope part of the lower convex
/// envelope of the points (i, u_i).
struct NewtonPolygon {
    std::vector<std::pair<long, long>> points;    // finite (i, u_i) from the development
    std::vector<std::pair<long, long>> vertices;  // strictly convex chain
    std::vector<Side> sides;                      // increasing slope
    long end_abscissa = 0;  // leftmost i with u_i = 0; equals mult of phi in f mod p

    bool empty() const { return sides.empty(); }
    long length() const { return end_abscissa; }

    /// Exact ordinate at abscissa x in [first vertex, last vertex], as a
    /// reduced fraction {num, den}, den > 0.
    std::pair<long, long> ordinate(long x) const;
    long floor_ordinate(long x) const;
    bool contains_point(long x, long y) const;  // lies on the polygon
};

/// Lower convex envelope restricted to sides of strictly negative slope.
/// Throws invalid_argument when f = 0 mod p (every u_i >= 1).
NewtonPolygon principal_polygon(const PhiDevelopment& dev);

/// Residual polynomial of a side, with coefficients in F_phi.
struct ResidualPoly {
    Side side;
    ExtFieldPtr field;            // F_phi = F_p[x]/(phi mod p)
    std::vector<ExtElem> coeffs;  // c_s, c_{s+e}, ..., degree d(S)
    ExtPoly poly() const;
};

ResidualPoly residual_polynomial(const PhiDevelopment& dev, const NewtonPolygon& np,
                                 const Side& side);

bool separable(const ResidualPoly& r);

struct RegularityDetail {
    bool regular = true;
    std::vector<bool> side_separable;
};

/// phi-regularity of f: every residual polynomial separable. The phi of the
/// development must be irreducible mod p.
RegularityDetail phi_regularity(const PhiDevelopment& dev, const NewtonPolygon& np);

/// deg(phi) times the number of lattice points (x, y), x >= 1, y >= 1, on or
/// below the polygon. Exact rational ordinates; equals the column sum of
/// floor(y(j)).
long long ind_phi(const NewtonPolygon& np, long deg_phi);

/// Per-factor data from one phi-development of f.
struct PhiIndexData {
    PhiIndexData(ModPoly f, unsigned m) : factor(std::move(f)), multiplicity(m) {}
    ModPoly factor;  // irreducible factor of f mod p
    unsigned multiplicity;
    IntPoly lift;
    NewtonPolygon polygon;
    long long ind = 0;
    RegularityDetail regularity;
};

struct IndexResult {
    std::vector<PhiIndexData> per_factor;
    long long lower = 0;   // sum of ind_phi, always a valid lower bound
    long long upper = 0;   // floor(nu_p(disc)/2) unless exactness holds
    bool regular = false;  // p-regular: every factor's residuals separable
    bool exact = false;    // lower == upper proven
    long long value() const;  // the index when exact
};

struct IndexOptions {
    /// Explicit monic lifts to use instead of the default symmetric lifts;
    /// each must reduce mod p to a distinct irreducible factor of f.
    std::vector<IntPoly> lifts;
    /// nu_p(disc f) when the caller knows it; avoids the resultant oracle.
    std::optional<long long> disc_valuation;
};

/// The index machinery at one prime: factor f mod p, build each
/// phi-development, polygon, and residual, and aggregate the Theorem-of-the-
/// index bounds. Exact when p-regular, or when the bounds pinch.
IndexResult index_at_prime(const IntPoly& f, const Int& p, uint64_t seed,
                           const IndexOptions& opts = {});

/// Dedekind's criterion at p. maximal means p does not divide the index
/// [O_K : Z[theta]]. The enlargement U gives O' = Z[theta] + (U(theta)/p)
/// with [O' : Z[theta]] = p^m.
struct DedekindResult {
    bool maximal;
    long m;
    IntPoly enlargement;
};

DedekindResult dedekind_test(const IntPoly& f, const Int& p, uint64_t seed);

}  // namespace chebrad
