#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chebrad/intpoly.hpp"

namespace chebrad {

/// Dense polynomial over F_p for a word-sized prime p. Coefficients are kept
/// reduced into [0, p) with no trailing zeros.
class ModPoly {
  public:
    explicit ModPoly(uint64_t p) : p_(p) { check_prime_size(p); }
    ModPoly(uint64_t p, std::vector<uint64_t> ascending);
    ModPoly(uint64_t p, std::initializer_list<long> ascending);

    /// Reduce an integer polynomial mod p. Throws resource_limit for p
    /// beyond the word-size guard.
    static ModPoly reduce(const IntPoly& f, const Int& p);
    static ModPoly x(uint64_t p) { return ModPoly(p, {0, 1}); }

    uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint64_t leading() const;
    const std::vector<uint64_t>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    ModPoly operator*(uint64_t s) const;
    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }
    bool operator<(const ModPoly& b) const;  // lexicographic, for deterministic maps

    ModPoly derivative() const;
    ModPoly monic() const;
    uint64_t eval(uint64_t x) const;
    IntPoly lift() const;            // coefficients in [0, p)
    IntPoly lift_symmetric() const;  // coefficients in (-p/2, p/2]
    std::string str(const char* var = "x") const;

    /// Convert to a power of x: f(x^k).
    ModPoly inflate(unsigned long k) const;

    static void check_prime_size(uint64_t p);

  private:
    void normalize();
    static void require_same(const ModPoly& a, const ModPoly& b);
    uint64_t p_;
    std::vector<uint64_t> c_;
};

std::pair<ModPoly, ModPoly> divmod(const ModPoly& f, const ModPoly& g);
ModPoly rem(const ModPoly& f, const ModPoly& g);
ModPoly gcd(const ModPoly& a, const ModPoly& b);  // monic
ModPoly pow_mod(const ModPoly& base, const Int& e, const ModPoly& mod);

/// Specification of F_{p^m} = F_p[x]/(modulus). Shared by all elements that
/// live in the same field.
struct ExtField {
    uint64_t p;
    ModPoly modulus;  // monic irreducible of degree m
    unsigned m;
};
using ExtFieldPtr = std::shared_ptr<const ExtField>;

ExtFieldPtr make_ext_field(uint64_t p, ModPoly modulus);
/// First monic irreducible of degree m in lexicographic coefficient order;
/// deterministic, so element encodings are reproducible.
ExtFieldPtr find_ext_field(uint64_t p, unsigned m);

/// Element of F_{p^m}, represented by its reduced polynomial.
class ExtElem {
  public:
    ExtElem(ExtFieldPtr field, ModPoly rep);
    ExtElem(ExtFieldPtr field, uint64_t scalar);

    const ExtFieldPtr& field() const { return f_; }
    const ModPoly& rep() const { return r_; }
    bool is_zero() const { return r_.is_zero(); }

    friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
    friend bool operator==(const ExtElem& a, const ExtElem& b);
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

    ExtElem inverse() const;  // throws division_by_zero on 0
    ExtElem pow(const Int& e) const;
    ExtElem frobenius() const;  // x -> x^p

    /// Degree of the minimal polynomial over F_p (divides m).
    unsigned min_poly_degree() const;

  private:
    static void require_same(const ExtElem& a, const ExtElem& b);
    ExtFieldPtr f_;
    ModPoly r_;
};

/// Polynomials over an extension field; just enough arithmetic for residual
/// polynomials (degree, derivative, gcd, equality).
class ExtPoly {
  public:
    ExtPoly(ExtFieldPtr field, std::vector<ExtElem> ascending);
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const ExtElem& coeff(size_t i) const;
    const std::vector<ExtElem>& coeffs() const { return c_; }
    ExtPoly derivative() const;
    ExtPoly monic() const;
    friend ExtPoly operator-(const ExtPoly& a, const ExtPoly& b);
    friend ExtPoly operator*(const ExtPoly& a, const ExtPoly& b);
    std::string str(const char* var = "y") const;

  private:
    void normalize();
    ExtFieldPtr f_;
    std::vector<ExtElem> c_;
};

ExtPoly ext_rem(const ExtPoly& f, const ExtPoly& g);
ExtPoly ext_gcd(const ExtPoly& a, const ExtPoly& b);  // monic

}  // namespace chebrad
