#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "chebrad/numeric.hpp"

namespace chebrad {

/// Dense univariate polynomial over arbitrary-precision integers.
/// Coefficients are stored by ascending degree with no trailing zeros;
/// the zero polynomial is the empty vector.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(const Int& c) { if (c != 0) c_.push_back(c); }
    IntPoly(long c) : IntPoly(Int(c)) {}
    IntPoly(std::initializer_list<Int> ascending) : c_(ascending) { normalize(); }
    explicit IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { normalize(); }

    static IntPoly x() { return IntPoly({Int(0), Int(1)}); }
    static IntPoly monomial(size_t k, const Int& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Int& leading() const;

    /// Coefficient of x^i (zero beyond the degree).
    const Int& coeff(size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator+=(const IntPoly& b) { return *this = *this + b; }
    IntPoly& operator-=(const IntPoly& b) { return *this = *this - b; }
    IntPoly& operator*=(const IntPoly& b) { return *this = *this * b; }
    friend IntPoly operator*(const Int& s, const IntPoly& a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    Int eval(const Int& x) const;
    IntPoly derivative() const;

    /// f(g(x)), exact.
    IntPoly compose(const IntPoly& g) const;

    /// Coefficients of f in powers of (x - c), by synthetic division.
    std::vector<Int> taylor(const Int& c) const;

    std::string str(const char* var = "x") const;

  private:
    void normalize();
    std::vector<Int> c_;
};

/// Exact division by a monic divisor: f = g*q + r with deg r < deg g.
/// Throws invalid_argument if g is not monic.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& f, const IntPoly& g);

/// Resultant via the subresultant pseudo-remainder sequence; the sign follows
/// the Sylvester determinant, so resultant(x - a, x - b) = a - b.
Int resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^{d(d-1)/2} resultant(f, f') for monic f of degree d >= 2.
/// Brute-force oracle for closed discriminant formulas.
Int discriminant_oracle(const IntPoly& f);

/// nu_p of a polynomial: minimum valuation over its coefficients
/// (infinity for the zero polynomial).
Valuation poly_valuation(const IntPoly& f, const Int& p);

/// phi-adic development of f: f = sum a_i(x) phi(x)^i with deg a_i < deg phi,
/// together with the successive division quotients q_j (q_j = phi*q_{j+1} + a_j)
/// and the coefficient valuations u_i = nu_p(a_i).
struct PhiDevelopment {
    IntPoly f;
    IntPoly phi;
    Int prime;
    std::vector<IntPoly> coeffs;      // a_0 .. a_r
    std::vector<IntPoly> quotients;   // q_1 .. q_r
    std::vector<Valuation> vals;      // u_0 .. u_r
};

PhiDevelopment phi_development(const IntPoly& f, const IntPoly& phi, const Int& p);

}  // namespace chebrad
