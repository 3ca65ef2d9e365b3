#pragma once

#include <optional>

#include "chebrad/intpoly.hpp"

namespace chebrad {

/// Characteristic polynomial of the multiplication-by-q(theta) map on
/// Q[x]/(f), where f is monic; the result has integer coefficients and is
/// computed exactly by CRT over word primes with Hessenberg reduction.
/// log2_root_bound, when supplied, must bound log2(max |root of f|); the
/// default is the Fujiwara bound computed from f.
IntPoly element_char_poly(const IntPoly& f, const IntPoly& q,
                          std::optional<double> log2_root_bound = std::nullopt);

/// Characteristic polynomial of q(theta)/denom when that element is an
/// algebraic integer (all scaled coefficients divide out exactly);
/// std::nullopt otherwise.
std::optional<IntPoly> scaled_char_poly(const IntPoly& f, const IntPoly& q, const Int& denom,
                                        std::optional<double> log2_root_bound = std::nullopt);

}  // namespace chebrad
