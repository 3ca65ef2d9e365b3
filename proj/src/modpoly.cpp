#include "chebrad/modpoly.hpp"

#include <algorithm>
#include <sstream>

namespace chebrad {

namespace {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) {
    if (a == 0) throw division_by_zero("inverse of zero mod p");
    return powmod_u64(a % p, p - 2, p);
}

}  // namespace

void ModPoly::check_prime_size(uint64_t p) {
    if (p < 2) throw invalid_argument("ModPoly: modulus must be a prime >= 2");
    if (p > (uint64_t(1) << 62)) throw resource_limit("ModPoly: prime exceeds the word-size guard");
}

void ModPoly::normalize() {
    for (auto& c : c_) c %= p_;
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly::ModPoly(uint64_t p, std::vector<uint64_t> ascending) : p_(p), c_(std::move(ascending)) {
    check_prime_size(p);
    normalize();
}

ModPoly::ModPoly(uint64_t p, std::initializer_list<long> ascending) : p_(p) {
    check_prime_size(p);
    for (long v : ascending) {
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        c_.push_back(static_cast<uint64_t>(r));
    }
    normalize();
}

ModPoly ModPoly::reduce(const IntPoly& f, const Int& p) {
    if (!p.fits_ulong_p()) throw resource_limit("ModPoly: prime exceeds the word-size guard");
    uint64_t pu = p.get_ui();
    check_prime_size(pu);
    std::vector<uint64_t> v;
    v.reserve(f.coeffs().size());
    for (const Int& c : f.coeffs()) v.push_back(mpz_fdiv_ui(c.get_mpz_t(), pu));
    return ModPoly(pu, std::move(v));
}

uint64_t ModPoly::leading() const {
    if (c_.empty()) throw invalid_argument("leading coefficient of zero polynomial");
    return c_.back();
}

void ModPoly::require_same(const ModPoly& a, const ModPoly& b) {
    if (a.p_ != b.p_) throw invalid_argument("ModPoly: mismatched moduli");
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    ModPoly::require_same(a, b);
    std::vector<uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = addmod(a.coeff(i), b.coeff(i), a.p_);
    return ModPoly(a.p_, std::move(v));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    ModPoly::require_same(a, b);
    std::vector<uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = submod(a.coeff(i), b.coeff(i), a.p_);
    return ModPoly(a.p_, std::move(v));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    ModPoly::require_same(a, b);
    if (a.is_zero() || b.is_zero()) return ModPoly(a.p_);
    std::vector<uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] = addmod(v[i + j], mulmod(a.c_[i], b.c_[j], a.p_), a.p_);
    }
    return ModPoly(a.p_, std::move(v));
}

ModPoly ModPoly::operator*(uint64_t s) const {
    s %= p_;
    std::vector<uint64_t> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = mulmod(c_[i], s, p_);
    return ModPoly(p_, std::move(v));
}

bool ModPoly::operator<(const ModPoly& b) const {
    if (p_ != b.p_) return p_ < b.p_;
    if (c_.size() != b.c_.size()) return c_.size() < b.c_.size();
    for (size_t i = c_.size(); i-- > 0;)
        if (c_[i] != b.c_[i]) return c_[i] < b.c_[i];
    return false;
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(p_);
    std::vector<uint64_t> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = mulmod(c_[i], i % p_, p_);
    return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    return *this * invmod(leading(), p_);
}

uint64_t ModPoly::eval(uint64_t x) const {
    uint64_t r = 0;
    x %= p_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = addmod(mulmod(r, x, p_), *it, p_);
    return r;
}

IntPoly ModPoly::lift() const {
    std::vector<Int> v;
    v.reserve(c_.size());
    for (uint64_t c : c_) v.push_back(Int(static_cast<unsigned long>(c)));
    return IntPoly(std::move(v));
}

IntPoly ModPoly::lift_symmetric() const {
    std::vector<Int> v;
    v.reserve(c_.size());
    for (uint64_t c : c_) {
        if (c > p_ / 2)
            v.push_back(-Int(static_cast<unsigned long>(p_ - c)));
        else
            v.push_back(Int(static_cast<unsigned long>(c)));
    }
    return IntPoly(std::move(v));
}

ModPoly ModPoly::inflate(unsigned long k) const {
    if (is_zero() || k == 1) return *this;
    std::vector<uint64_t> v(c_.size() * k - k + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return ModPoly(p_, std::move(v));
}

std::string ModPoly::str(const char* var) const { return lift_symmetric().str(var); }

std::pair<ModPoly, ModPoly> divmod(const ModPoly& f, const ModPoly& g) {
    if (g.is_zero()) throw division_by_zero("ModPoly: division by zero");
    if (f.modulus() != g.modulus()) throw invalid_argument("ModPoly: mismatched moduli");
    const uint64_t p = f.modulus();
    if (f.degree() < g.degree()) return {ModPoly(p), f};
    uint64_t inv_lead = invmod(g.leading(), p);
    std::vector<uint64_t> rem(f.coeffs());
    size_t dg = static_cast<size_t>(g.degree());
    std::vector<uint64_t> quo(rem.size() - dg, 0);
    for (size_t i = rem.size(); i-- > dg;) {
        uint64_t c = mulmod(rem[i], inv_lead, p);
        if (c == 0) continue;
        quo[i - dg] = c;
        rem[i] = 0;
        for (size_t j = 0; j < dg; ++j)
            rem[i - dg + j] = submod(rem[i - dg + j], mulmod(c, g.coeff(j), p), p);
    }
    return {ModPoly(p, std::move(quo)), ModPoly(p, std::move(rem))};
}

ModPoly rem(const ModPoly& f, const ModPoly& g) { return divmod(f, g).second; }

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
    if (a.modulus() != b.modulus()) throw invalid_argument("ModPoly: mismatched moduli");
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = rem(x, y);
        x = y;
        y = r;
    }
    return x.monic();
}

ModPoly pow_mod(const ModPoly& base, const Int& e, const ModPoly& mod) {
    if (e < 0) throw invalid_argument("pow_mod: negative exponent");
    ModPoly r(base.modulus(), {1});
    ModPoly b = rem(base, mod);
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        r = rem(r * r, mod);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<unsigned long>(bit))) r = rem(r * b, mod);
    }
    if (e == 0) return ModPoly(base.modulus(), {1});
    return r;
}

ExtFieldPtr make_ext_field(uint64_t p, ModPoly modulus) {
    if (modulus.modulus() != p) throw invalid_argument("ExtField: modulus prime mismatch");
    if (!modulus.is_monic() || modulus.degree() < 1)
        throw invalid_argument("ExtField: modulus must be monic of degree >= 1");
    auto f = std::make_shared<ExtField>(
        ExtField{p, modulus, static_cast<unsigned>(modulus.degree())});
    return f;
}

namespace {

// x^(p^k) mod f, by repeated Frobenius of x.
ModPoly frob_power(const ModPoly& f, unsigned k) {
    ModPoly r = ModPoly::x(f.modulus());
    for (unsigned i = 0; i < k; ++i) r = pow_mod(r, Int(static_cast<unsigned long>(f.modulus())), f);
    return r;
}

bool irreducible_mod_p(const ModPoly& f) {
    // Rabin test
    const int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    Int p(static_cast<unsigned long>(f.modulus()));
    ModPoly x = ModPoly::x(f.modulus());
    ModPoly xp = x;
    // x^(p^d) must equal x, and x^(p^(d/r)) - x must be a unit gcd for prime r | d
    std::vector<int> prime_divs;
    int n = d;
    for (int q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            prime_divs.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) prime_divs.push_back(n);
    for (int q : prime_divs) {
        ModPoly t = frob_power(f, static_cast<unsigned>(d / q));
        ModPoly g = gcd(t - x, f);
        if (g.degree() != 0) return false;
    }
    ModPoly t = frob_power(f, static_cast<unsigned>(d));
    return (t - x).is_zero();
}

}  // namespace

ExtFieldPtr find_ext_field(uint64_t p, unsigned m) {
    ModPoly::check_prime_size(p);
    if (m == 0) throw invalid_argument("ExtField: degree must be >= 1");
    if (m == 1) return make_ext_field(p, ModPoly::x(p));
    // scan monic polynomials x^m + a_{m-1}x^{m-1} + ... + a_0 in lex order
    std::vector<uint64_t> a(m, 0);
    while (true) {
        std::vector<uint64_t> coeffs = a;
        coeffs.push_back(1);
        ModPoly cand(p, std::move(coeffs));
        if (irreducible_mod_p(cand)) return make_ext_field(p, cand);
        size_t i = 0;
        while (i < m && ++a[i] == p) a[i++] = 0;
        if (i == m) throw internal_error("no irreducible polynomial found");
    }
}

ExtElem::ExtElem(ExtFieldPtr field, ModPoly rep) : f_(std::move(field)), r_(std::move(rep)) {
    if (r_.modulus() != f_->p) throw invalid_argument("ExtElem: modulus mismatch");
    r_ = rem(r_, f_->modulus);
}

ExtElem::ExtElem(ExtFieldPtr field, uint64_t scalar)
    : f_(std::move(field)), r_(f_->p, std::vector<uint64_t>{scalar % f_->p}) {}

void ExtElem::require_same(const ExtElem& a, const ExtElem& b) {
    if (a.f_ == b.f_) return;
    if (a.f_->p != b.f_->p || !(a.f_->modulus == b.f_->modulus))
        throw invalid_argument("ExtElem: elements of different fields");
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    ExtElem::require_same(a, b);
    return ExtElem(a.f_, a.r_ + b.r_);
}

ExtElem operator-(const ExtElem& a, const ExtElem& b) {
    ExtElem::require_same(a, b);
    return ExtElem(a.f_, a.r_ - b.r_);
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    ExtElem::require_same(a, b);
    return ExtElem(a.f_, rem(a.r_ * b.r_, a.f_->modulus));
}

bool operator==(const ExtElem& a, const ExtElem& b) {
    ExtElem::require_same(a, b);
    return a.r_ == b.r_;
}

ExtElem ExtElem::inverse() const {
    if (is_zero()) throw division_by_zero("ExtElem: inverse of zero");
    // extended Euclid in F_p[x]
    const uint64_t p = f_->p;
    ModPoly r0 = f_->modulus, r1 = r_;
    ModPoly s0(p), s1(p, {1});
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        ModPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd (a nonzero constant since modulus is irreducible)
    if (r0.degree() != 0) throw internal_error("ExtElem: modulus not irreducible");
    return ExtElem(f_, s0 * invmod(r0.coeff(0), p));
}

ExtElem ExtElem::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    return ExtElem(f_, pow_mod(r_, e, f_->modulus));
}

ExtElem ExtElem::frobenius() const { return pow(Int(static_cast<unsigned long>(f_->p))); }

unsigned ExtElem::min_poly_degree() const {
    ExtElem t = frobenius();
    unsigned k = 1;
    while (!(t == *this)) {
        t = t.frobenius();
        ++k;
        if (k > f_->m) throw internal_error("ExtElem: Frobenius orbit exceeded field degree");
    }
    return k;
}

ExtPoly::ExtPoly(ExtFieldPtr field, std::vector<ExtElem> ascending)
    : f_(std::move(field)), c_(std::move(ascending)) {
    normalize();
}

void ExtPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const ExtElem& ExtPoly::coeff(size_t i) const {
    if (i >= c_.size()) throw invalid_argument("ExtPoly: coefficient out of range");
    return c_[i];
}

ExtPoly ExtPoly::derivative() const {
    if (c_.size() <= 1) return ExtPoly(f_, {});
    std::vector<ExtElem> v;
    v.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        ExtElem k(f_, static_cast<uint64_t>(i % f_->p));
        v.push_back(k * c_[i]);
    }
    return ExtPoly(f_, std::move(v));
}

ExtPoly ExtPoly::monic() const {
    if (is_zero()) return *this;
    ExtElem inv = c_.back().inverse();
    std::vector<ExtElem> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c * inv);
    return ExtPoly(f_, std::move(v));
}

ExtPoly operator-(const ExtPoly& a, const ExtPoly& b) {
    ExtFieldPtr f = a.f_;
    ExtElem zero(f, uint64_t(0));
    std::vector<ExtElem> v(std::max(a.c_.size(), b.c_.size()), zero);
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] = v[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] - b.c_[i];
    return ExtPoly(f, std::move(v));
}

ExtPoly operator*(const ExtPoly& a, const ExtPoly& b) {
    ExtFieldPtr f = a.f_;
    if (a.is_zero() || b.is_zero()) return ExtPoly(f, {});
    ExtElem zero(f, uint64_t(0));
    std::vector<ExtElem> v(a.c_.size() + b.c_.size() - 1, zero);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return ExtPoly(f, std::move(v));
}

ExtPoly ext_rem(const ExtPoly& f, const ExtPoly& g) {
    if (g.is_zero()) throw division_by_zero("ExtPoly: division by zero");
    ExtPoly r = f;
    ExtPoly gm = g.monic();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - g.degree());
        ExtElem lead = r.coeffs().back();
        // r -= lead * y^shift * gm
        std::vector<ExtElem> sub;
        ExtElem zero(lead.field(), uint64_t(0));
        sub.assign(shift, zero);
        for (const auto& c : gm.coeffs()) sub.push_back(lead * c);
        r = r - ExtPoly(lead.field(), std::move(sub));
    }
    return r;
}

ExtPoly ext_gcd(const ExtPoly& a, const ExtPoly& b) {
    ExtPoly x = a, y = b;
    while (!y.is_zero()) {
        ExtPoly r = ext_rem(x, y);
        x = y;
        y = r;
    }
    return x.monic();
}

std::string ExtPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].rep().str() << ")";
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace chebrad
