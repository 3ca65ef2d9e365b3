#include "chebrad/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace chebrad {

namespace {
const Int kZero = 0;
constexpr size_t kKaratsubaThreshold = 32;
}  // namespace

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(size_t k, const Int& c) {
    if (c == 0) return {};
    std::vector<Int> v(k + 1, Int(0));
    v[k] = c;
    return IntPoly(std::move(v));
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw invalid_argument("leading coefficient of zero polynomial");
    return c_.back();
}

const Int& IntPoly::coeff(size_t i) const { return i < c_.size() ? c_[i] : kZero; }

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return IntPoly(std::move(v));
}

namespace {

std::vector<Int> mul_school(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Karatsuba above the threshold; Chebyshev iterates are dense, so the
// classical split pays off well before FFT sizes.
std::vector<Int> mul_rec(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) < kKaratsubaThreshold) return mul_school(a, b);
    size_t h = (std::max(a.size(), b.size()) + 1) / 2;
    auto lo = [&](const std::vector<Int>& v) {
        return std::vector<Int>(v.begin(), v.begin() + std::min(h, v.size()));
    };
    auto hi = [&](const std::vector<Int>& v) {
        return v.size() > h ? std::vector<Int>(v.begin() + h, v.end()) : std::vector<Int>{};
    };
    auto add = [](std::vector<Int> x, const std::vector<Int>& y) {
        if (x.size() < y.size()) x.resize(y.size(), Int(0));
        for (size_t i = 0; i < y.size(); ++i) x[i] += y[i];
        return x;
    };
    std::vector<Int> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    std::vector<Int> z0 = mul_rec(a0, b0);
    std::vector<Int> z2 = mul_rec(a1, b1);
    std::vector<Int> z1 = mul_rec(add(a0, a1), add(b0, b1));
    for (size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < z0.size(); ++i) r[i] += z0[i];
    // the middle and high parts may carry zero padding beyond deg(a*b)
    for (size_t i = 0; i < z1.size(); ++i) {
        if (i + h < r.size())
            r[i + h] += z1[i];
        else if (z1[i] != 0)
            throw internal_error("karatsuba: nonzero overflow term");
    }
    for (size_t i = 0; i < z2.size(); ++i) {
        if (i + 2 * h < r.size())
            r[i + 2 * h] += z2[i];
        else if (z2[i] != 0)
            throw internal_error("karatsuba: nonzero overflow term");
    }
    return r;
}

}  // namespace

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return IntPoly(mul_rec(a.c_, b.c_));
}

IntPoly operator*(const Int& s, const IntPoly& a) {
    if (s == 0) return {};
    IntPoly r = a;
    for (auto& c : r.c_) c *= s;
    r.normalize();
    return r;
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Int(static_cast<long>(i)) * c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::compose(const IntPoly& g) const {
    IntPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + IntPoly(*it);
    return r;
}

std::vector<Int> IntPoly::taylor(const Int& c) const {
    if (c_.empty()) return {Int(0)};
    // repeated in-place synthetic division by (x - c)
    std::vector<Int> work = c_;
    const size_t n = work.size();
    for (size_t k = 0; k + 1 < n; ++k)
        for (size_t i = n - 1; i-- > k;) work[i] += c * work[i + 1];
    return work;
}

std::string IntPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& f, const IntPoly& g) {
    if (!g.is_monic()) throw invalid_argument("divmod_monic: divisor must be monic");
    if (f.degree() < g.degree()) return {IntPoly(), f};
    std::vector<Int> rem(f.coeffs());
    size_t dg = static_cast<size_t>(g.degree());
    std::vector<Int> quo(rem.size() - dg, Int(0));
    for (size_t i = rem.size(); i-- > dg;) {
        Int c = rem[i];
        if (c == 0) continue;
        quo[i - dg] = c;
        rem[i] = 0;
        for (size_t j = 0; j < dg; ++j) rem[i - dg + j] -= c * g.coeff(j);
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

namespace {

Int int_pow(const Int& b, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw internal_error("resultant: inexact subresultant division");
    return q;
}

IntPoly exact_div(const IntPoly& a, const Int& b) {
    std::vector<Int> v(a.coeffs());
    for (auto& c : v) c = exact_div(c, b);
    return IntPoly(std::move(v));
}

// Canonical pseudo-remainder lc(g)^(deg f - deg g + 1) * f  mod  g.
IntPoly prem(const IntPoly& f, const IntPoly& g) {
    IntPoly r = f;
    const Int& lg = g.leading();
    const int dg = g.degree();
    const long delta = f.degree() - dg;
    long steps = 0;
    while (!r.is_zero() && r.degree() >= dg) {
        r = lg * r - IntPoly::monomial(static_cast<size_t>(r.degree() - dg), r.leading()) * g;
        ++steps;
    }
    for (long i = steps; i <= delta; ++i) r = lg * r;
    return r;
}

}  // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw invalid_argument("resultant: inputs must be nonzero");
    if (f.degree() == 0) return int_pow(f.coeff(0), g.degree());
    if (g.degree() == 0) return int_pow(g.coeff(0), f.degree());

    // subresultant PRS (Cohen, Algorithm 3.3.7); Sylvester sign convention
    IntPoly a = f, b = g;
    int s = 1;
    if (a.degree() < b.degree()) {
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
        std::swap(a, b);
    }
    Int gc = 1, h = 1;
    while (true) {
        long delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
        IntPoly r = prem(a, b);
        a = b;
        b = exact_div(r, gc * int_pow(h, delta));
        gc = a.leading();
        if (delta == 1)
            h = gc;
        else if (delta > 1)
            h = exact_div(int_pow(gc, delta), int_pow(h, delta - 1));
        if (b.is_zero()) return 0;
        if (b.degree() == 0) {
            long da = a.degree();
            Int result = exact_div(int_pow(b.coeff(0), da), int_pow(h, da - 1));
            return s == 1 ? result : -result;
        }
    }
}

Int discriminant_oracle(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 2)
        throw invalid_argument("discriminant_oracle: f must be monic of degree >= 2");
    long d = f.degree();
    IntPoly df = f.derivative();
    if (df.is_zero()) return 0;
    Int r = resultant(f, df);
    return ((d * (d - 1) / 2) % 2 == 1) ? -r : r;
}

Valuation poly_valuation(const IntPoly& f, const Int& p) {
    if (f.is_zero()) return Valuation::infinity();
    bool have = false;
    long best = 0;
    for (const Int& c : f.coeffs()) {
        if (c == 0) continue;
        Int rest;
        long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t()));
        if (!have || v < best) {
            best = v;
            have = true;
        }
        if (best == 0) break;
    }
    return Valuation(best);
}

PhiDevelopment phi_development(const IntPoly& f, const IntPoly& phi, const Int& p) {
    if (!phi.is_monic() || phi.degree() < 1)
        throw invalid_argument("phi_development: phi must be monic of degree >= 1");
    if (!is_prime(p)) throw invalid_argument("phi_development: p must be prime");
    PhiDevelopment dev;
    dev.f = f;
    dev.phi = phi;
    dev.prime = p;
    IntPoly rest = f;
    while (true) {
        auto [q, r] = divmod_monic(rest, phi);
        dev.coeffs.push_back(r);
        dev.vals.push_back(poly_valuation(r, p));
        if (q.is_zero()) break;
        dev.quotients.push_back(q);
        rest = q;
    }
    return dev;
}

}  // namespace chebrad
