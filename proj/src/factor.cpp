#include "chebrad/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace chebrad {

namespace {

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = static_cast<uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
        b = static_cast<uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
        e >>= 1;
    }
    return r;
}

// f = g(x^p) -> g. Valid whenever f' = 0 in characteristic p.
ModPoly deflate_p(const ModPoly& f) {
    const uint64_t p = f.modulus();
    std::vector<uint64_t> root;
    for (size_t i = 0; i <= static_cast<size_t>(f.degree()); i += p) root.push_back(f.coeff(i));
    return ModPoly(p, std::move(root));
}

// Distinct-degree decomposition of a squarefree monic f:
// pairs (product of the degree-d irreducible factors, d).
std::vector<std::pair<ModPoly, unsigned>> distinct_degree(const ModPoly& f) {
    std::vector<std::pair<ModPoly, unsigned>> out;
    const uint64_t p = f.modulus();
    ModPoly rest = f;
    ModPoly h = ModPoly::x(p);
    unsigned d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * static_cast<int>(d) > rest.degree()) {
            out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
            break;
        }
        h = pow_mod(h, Int(static_cast<unsigned long>(p)), rest);
        ModPoly g = gcd(h - ModPoly::x(p), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = divmod(rest, g).first;
            h = rem(h, rest);
        }
    }
    return out;
}

// Equal-degree splitting of a monic squarefree product of degree-d
// irreducibles: Cantor-Zassenhaus for odd p, the trace map for p = 2.
void equal_degree(const ModPoly& f, unsigned d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    const uint64_t p = f.modulus();
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f.monic());
        return;
    }
    std::uniform_int_distribution<uint64_t> coeff(0, p - 1);
    while (true) {
        std::vector<uint64_t> rc(static_cast<size_t>(f.degree()), 0);
        for (auto& c : rc) c = coeff(rng);
        ModPoly a(p, std::move(rc));
        if (a.degree() < 1) continue;
        ModPoly g(p);
        if (p == 2) {
            // trace map over F_{2^d}: a + a^2 + ... + a^(2^(d-1))
            ModPoly t = a, s = a;
            for (unsigned i = 1; i < d; ++i) {
                t = rem(t * t, f);
                s = s + t;
            }
            g = gcd(s, f);
        } else {
            Int e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), d);
            e = (e - 1) / 2;
            ModPoly b = pow_mod(a, e, f);
            g = gcd(b - ModPoly(p, {1}), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

// All distinct monic irreducible factors of f.
void collect_irreducibles(const ModPoly& f, std::mt19937_64& rng, std::set<ModPoly>& out) {
    if (f.degree() <= 0) return;
    ModPoly df = f.derivative();
    if (df.is_zero()) {
        collect_irreducibles(deflate_p(f), rng, out);
        return;
    }
    ModPoly c = gcd(f, df);
    ModPoly v = divmod(f, c).first.monic();  // squarefree slice, nonempty here
    for (const auto& [prod, d] : distinct_degree(v)) {
        std::vector<ModPoly> irr;
        equal_degree(prod, d, rng, irr);
        out.insert(irr.begin(), irr.end());
    }
    collect_irreducibles(c, rng, out);
}

}  // namespace

std::vector<std::pair<ModPoly, unsigned>> factor_mod_p(const ModPoly& f, uint64_t seed) {
    if (f.is_zero()) throw invalid_argument("factor_mod_p: zero polynomial");
    std::vector<std::pair<ModPoly, unsigned>> result;
    if (f.degree() == 0) return result;
    std::mt19937_64 rng(seed);
    std::set<ModPoly> irr;
    collect_irreducibles(f.monic(), rng, irr);
    // multiplicities by repeated exact division
    for (const ModPoly& q : irr) {
        unsigned mult = 0;
        ModPoly rest = f;
        while (true) {
            auto [quo, r] = divmod(rest, q);
            if (!r.is_zero()) break;
            ++mult;
            rest = quo;
        }
        result.emplace_back(q, mult);
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first < b.first;
    });
    ModPoly check(f.modulus(), {1});
    for (const auto& [g, m] : result)
        for (unsigned i = 0; i < m; ++i) check = check * g;
    if (!(check * f.leading() == f))
        throw internal_error("factor_mod_p: factor product does not reproduce the input");
    return result;
}

bool is_irreducible(const ModPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const uint64_t p = f.modulus();
    const int d = f.degree();
    ModPoly x = ModPoly::x(p);
    auto frob = [&](unsigned k) {
        ModPoly r = x;
        for (unsigned i = 0; i < k; ++i) r = pow_mod(r, Int(static_cast<unsigned long>(p)), f);
        return r;
    };
    std::vector<int> prime_divs;
    int m = d;
    for (int r = 2; r * r <= m; ++r)
        if (m % r == 0) {
            prime_divs.push_back(r);
            while (m % r == 0) m /= r;
        }
    if (m > 1) prime_divs.push_back(m);
    for (int r : prime_divs)
        if (gcd(frob(static_cast<unsigned>(d / r)) - x, f).degree() != 0) return false;
    return (frob(static_cast<unsigned>(d)) - x).is_zero();
}

std::pair<unsigned long, unsigned long> mu_h(const Int& ell, const Int& p) {
    if (p == ell) throw invalid_argument("mu_h: p must differ from ell");
    if (!is_prime(ell) || !is_prime(p)) throw invalid_argument("mu_h: arguments must be prime");
    if (ell == 2) throw invalid_argument("mu_h: ell must be odd");
    if (!ell.fits_ulong_p()) throw resource_limit("mu_h: ell too large");
    Int p2 = p * p % ell;
    Int acc = 1;
    for (unsigned long mu = 1; mu < ell.get_ui(); ++mu) {
        acc = acc * p2 % ell;
        if (acc == 1) {
            Int pw;
            mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), 2 * mu);
            Int rest;
            unsigned long h =
                mpz_remove(rest.get_mpz_t(), Int(pw - 1).get_mpz_t(), ell.get_mpz_t());
            if ((ell.get_ui() - 1) % mu != 0)
                throw theorem_violation("mu_h: mu does not divide ell - 1");
            return {mu, h};
        }
    }
    throw theorem_violation("mu_h: order of p^2 mod ell not found");
}

FactorShape predict_factor_shape(const Int& ell, unsigned n, const Int& p, const Int& t) {
    if (p == 2 || p == ell)
        throw invalid_argument("predict_factor_shape: p must be odd and different from ell");
    if (!is_prime(p)) throw invalid_argument("predict_factor_shape: p must be prime");
    Int p2 = p * p;
    bool plus = mpz_divisible_p(Int(t - 2).get_mpz_t(), p2.get_mpz_t());
    bool minus = mpz_divisible_p(Int(t + 2).get_mpz_t(), p2.get_mpz_t());
    if (!plus && !minus) throw invalid_argument("predict_factor_shape: t must be +-2 mod p^2");
    FactorShape shape;
    shape.linear_root = plus ? 2 : -2;
    auto [mu, h] = mu_h(ell, p);
    shape.mu = mu;
    shape.h = h;
    auto ell_pow = [&](unsigned long k) {
        Int v;
        mpz_pow_ui(v.get_mpz_t(), ell.get_mpz_t(), k);
        return v;
    };
    auto exact_count = [&](const Int& num, unsigned long den) {
        Int q, rr;
        mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(), Int(den).get_mpz_t());
        if (rr != 0) throw theorem_violation("predict_factor_shape: non-integer factor count");
        return mpz_get_ui(q.get_mpz_t());
    };
    if (n <= h) {
        shape.parts.push_back({mu, 2, exact_count(ell_pow(n) - 1, 2 * mu)});
    } else {
        unsigned long e = n - h;
        shape.parts.push_back({mu, 2, exact_count(ell_pow(h) - 1, 2 * mu)});
        unsigned long band = exact_count(ell_pow(h) - ell_pow(h - 1), 2 * mu);
        for (unsigned long k = 1; k <= e; ++k) {
            unsigned long deg = mu * mpz_get_ui(ell_pow(k).get_mpz_t());
            shape.parts.push_back({deg, 2, band});
        }
    }
    return shape;
}

namespace {

// One quadratic Hensel step for a coprime pair: from g*h = f and
// s*g + t*h = 1 (mod m) to the same congruences mod m^2, g and h monic.
struct HenselPair {
    IntPoly g, h, s, t;
};

IntPoly mod_coeffs(const IntPoly& f, const Int& m) {
    std::vector<Int> v(f.coeffs());
    for (auto& c : v) {
        c %= m;
        if (c < 0) c += m;
    }
    return IntPoly(std::move(v));
}

IntPoly mod_coeffs_symmetric(const IntPoly& f, const Int& m) {
    std::vector<Int> v(f.coeffs());
    for (auto& c : v) {
        c %= m;
        if (c < 0) c += m;
        if (c * 2 > m) c -= m;
    }
    return IntPoly(std::move(v));
}

HenselPair hensel_step(const IntPoly& f, const HenselPair& in, const Int& m) {
    const Int m2 = m * m;
    auto md = [&](const IntPoly& a) { return mod_coeffs(a, m2); };
    IntPoly e = md(f - in.g * in.h);
    auto [q, r] = divmod_monic(md(in.s * e), in.h);
    IntPoly g2 = md(in.g + in.t * e + q * in.g);
    IntPoly h2 = md(in.h + r);
    IntPoly b = md(in.s * g2 + in.t * h2 - IntPoly(Int(1)));
    auto [c, d] = divmod_monic(md(in.s * b), h2);
    IntPoly s2 = md(in.s - d);
    IntPoly t2 = md(in.t - in.t * b - c * g2);
    return {g2, h2, s2, t2};
}

// Bezout pair s*g + t*h = 1 for coprime g, h over F_p.
std::pair<IntPoly, IntPoly> bezout_mod_p(const ModPoly& g, const ModPoly& h) {
    const uint64_t p = g.modulus();
    ModPoly r0 = g, r1 = h;
    ModPoly s0(p, {1}), s1(p), t0(p), t1(p, {1});
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        ModPoly s2 = s0 - q * s1;
        ModPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw invalid_argument("hensel_lift: factors are not coprime mod p");
    uint64_t inv = powmod_u64(r0.coeff(0), p - 2, p);
    return {(s0 * inv).lift(), (t0 * inv).lift()};
}

void lift_recursive(const IntPoly& f, const std::vector<ModPoly>& factors, size_t lo, size_t hi,
                    const Int& target, const Int& p, std::vector<IntPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(f);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    const uint64_t pu = p.get_ui();
    ModPoly gbar(pu, {1}), hbar(pu, {1});
    for (size_t i = lo; i < mid; ++i) gbar = gbar * factors[i];
    for (size_t i = mid; i < hi; ++i) hbar = hbar * factors[i];
    auto [s, t] = bezout_mod_p(gbar, hbar);
    HenselPair pair{gbar.lift(), hbar.lift(), s, t};
    Int m = p;
    while (m < target) {
        pair = hensel_step(f, pair, m);
        m = m * m;
    }
    IntPoly g = mod_coeffs(pair.g, target), h = mod_coeffs(pair.h, target);
    if (!mod_coeffs(g * h - f, target).is_zero())
        throw internal_error("hensel_lift: lifted product mismatch");
    lift_recursive(g, factors, lo, mid, target, p, out);
    lift_recursive(h, factors, mid, hi, target, p, out);
}

}  // namespace

std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& factors,
                                 unsigned e, const Int& p) {
    if (factors.empty()) throw invalid_argument("hensel_lift: no factors");
    if (e == 0) throw invalid_argument("hensel_lift: target exponent must be >= 1");
    if (!p.fits_ulong_p()) throw resource_limit("hensel_lift: prime exceeds the word-size guard");
    const uint64_t pu = p.get_ui();
    ModPoly::check_prime_size(pu);
    ModPoly fbar = ModPoly::reduce(f, p);
    if (fbar.degree() != f.degree())
        throw invalid_argument("hensel_lift: leading coefficient vanishes mod p");
    ModPoly prod(pu, {1});
    for (size_t i = 0; i < factors.size(); ++i) {
        if (!factors[i].is_monic()) throw invalid_argument("hensel_lift: factors must be monic");
        for (size_t j = i + 1; j < factors.size(); ++j)
            if (gcd(factors[i], factors[j]).degree() != 0)
                throw invalid_argument("hensel_lift: factors are not pairwise coprime");
        prod = prod * factors[i];
    }
    if (!(prod * fbar.leading() == fbar))
        throw invalid_argument("hensel_lift: factors do not multiply to f mod p");

    Int target;
    mpz_pow_ui(target.get_mpz_t(), p.get_mpz_t(), e);
    IntPoly fw = f;
    if (!f.is_monic()) {
        Int inv;
        if (!mpz_invert(inv.get_mpz_t(), f.leading().get_mpz_t(), target.get_mpz_t()))
            throw invalid_argument("hensel_lift: leading coefficient not invertible mod p^e");
        fw = mod_coeffs(inv * f, target);
    } else {
        fw = mod_coeffs(fw, target);
    }
    std::vector<IntPoly> out;
    if (factors.size() == 1)
        out.push_back(fw);
    else
        lift_recursive(fw, factors, 0, factors.size(), target, p, out);
    IntPoly check(Int(1));
    for (const auto& g : out) check = mod_coeffs(check * g, target);
    if (!mod_coeffs(check - fw, target).is_zero())
        throw internal_error("hensel_lift: verification failed");
    for (size_t i = 0; i < out.size(); ++i)
        if (!(ModPoly::reduce(out[i], p) == factors[i]))
            throw internal_error("hensel_lift: lift does not reduce to its factor");
    for (auto& g : out) g = mod_coeffs_symmetric(g, target);
    return out;
}

ExtElem OrbitGraph::element(size_t index) const {
    std::vector<uint64_t> digits;
    for (unsigned i = 0; i < field->m; ++i) {
        digits.push_back(index % field->p);
        index /= field->p;
    }
    return ExtElem(field, ModPoly(field->p, std::move(digits)));
}

size_t OrbitGraph::index_of(const ExtElem& e) const {
    size_t idx = 0;
    for (size_t i = field->m; i-- > 0;) idx = idx * field->p + e.rep().coeff(i);
    return idx;
}

std::vector<std::vector<uint32_t>> OrbitGraph::predecessors() const {
    std::vector<std::vector<uint32_t>> pre(succ.size());
    for (size_t i = 0; i < succ.size(); ++i) pre[succ[i]].push_back(static_cast<uint32_t>(i));
    return pre;
}

OrbitGraph orbit_graph(const Int& ell, const Int& p, unsigned m, uint64_t max_size) {
    if (!is_prime(ell) || ell == 2) throw invalid_argument("orbit_graph: ell must be an odd prime");
    if (!is_prime(p)) throw invalid_argument("orbit_graph: p must be prime");
    if (p == ell) throw invalid_argument("orbit_graph: p must differ from ell");
    if (m == 0) throw invalid_argument("orbit_graph: m must be >= 1");
    Int size;
    mpz_pow_ui(size.get_mpz_t(), p.get_mpz_t(), m);
    if (!size.fits_ulong_p() || size.get_ui() > max_size)
        throw resource_limit("orbit_graph: field size guard exceeded");

    OrbitGraph g;
    g.ell = ell;
    g.field = find_ext_field(p.get_ui(), m);
    const size_t total = size.get_ui();
    g.succ.resize(total);
    g.weight.resize(total);
    const ModPoly t_ell = ModPoly::reduce(cheb_t(ell.get_ui()), p);
    for (size_t i = 0; i < total; ++i) {
        ExtElem a = g.element(i);
        ExtElem r(g.field, uint64_t(0));
        for (size_t k = t_ell.coeffs().size(); k-- > 0;)
            r = r * a + ExtElem(g.field, t_ell.coeff(k));
        g.succ[i] = static_cast<uint32_t>(g.index_of(r));
        g.weight[i] = a.min_poly_degree();
    }
    return g;
}

std::string to_dot(const OrbitGraph& g) {
    std::ostringstream os;
    os << "digraph chebyshev_orbit {\n";
    os << "  // T_" << g.ell.get_str() << " acting on F_" << g.field->p << "^" << g.field->m
       << ", modulus " << g.field->modulus.str() << "\n";
    os << "  // nodes: " << g.size() << "  edges: " << g.size() << "\n";
    for (size_t i = 0; i < g.size(); ++i)
        os << "  n" << i << " [label=\"" << g.element(i).rep().str() << " (w=" << g.weight[i]
           << ")\"];\n";
    for (size_t i = 0; i < g.size(); ++i) os << "  n" << i << " -> n" << g.succ[i] << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace chebrad
