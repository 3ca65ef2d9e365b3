#include "chebrad/newton.hpp"

#include <algorithm>
#include <numeric>

namespace chebrad {

namespace {

long floor_div(long num, long den) {
    long q = num / den, r = num % den;
    return (r != 0 && (r < 0) != (den < 0)) ? q - 1 : q;
}

}  // namespace

std::pair<long, long> NewtonPolygon::ordinate(long x) const {
    for (const Side& s : sides) {
        if (x < s.x0 || x > s.x1) continue;
        // y = y0 - (x - x0) h / e, as a reduced fraction
        long num = s.y0 * s.e - (x - s.x0) * s.h;
        long den = s.e;
        long g = std::gcd(std::abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        return {num, den};
    }
    throw invalid_argument("ordinate: abscissa outside the polygon");
}

long NewtonPolygon::floor_ordinate(long x) const {
    for (const Side& s : sides) {
        if (x < s.x0 || x > s.x1) continue;
        return floor_div(s.y0 * s.e - (x - s.x0) * s.h, s.e);
    }
    throw invalid_argument("floor_ordinate: abscissa outside the polygon");
}

bool NewtonPolygon::contains_point(long x, long y) const {
    for (const Side& s : sides) {
        if (x < s.x0 || x > s.x1) continue;
        return y * s.e == s.y0 * s.e - (x - s.x0) * s.h;
    }
    return false;
}

NewtonPolygon principal_polygon(const PhiDevelopment& dev) {
    NewtonPolygon np;
    bool unit_seen = false;
    for (size_t i = 0; i < dev.vals.size(); ++i) {
        if (dev.vals[i].is_infinite()) continue;
        long u = dev.vals[i].value();
        np.points.emplace_back(static_cast<long>(i), u);
        if (u == 0 && !unit_seen) {
            unit_seen = true;
            np.end_abscissa = static_cast<long>(i);
        }
    }
    // some u_i = 0 is exactly the condition f != 0 mod p
    if (!unit_seen) throw invalid_argument("principal_polygon: f vanishes mod p");

    // lower hull by monotone chain (points are sorted by abscissa)
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : np.points) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep strictly convex turns: drop b when it lies on or above a->pt
            __int128 cross = static_cast<__int128>(b.first - a.first) * (pt.second - a.second) -
                             static_cast<__int128>(b.second - a.second) * (pt.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    // principal part: sides of strictly negative slope
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        const auto [x0, y0] = hull[i];
        const auto [x1, y1] = hull[i + 1];
        if (y1 >= y0) break;  // slopes increase; nothing negative remains
        Side s;
        s.x0 = x0;
        s.y0 = y0;
        s.x1 = x1;
        s.y1 = y1;
        long dy = y0 - y1, dx = x1 - x0;
        long g = std::gcd(dy, dx);
        s.h = dy / g;
        s.e = dx / g;
        np.sides.push_back(s);
    }
    if (!np.sides.empty()) {
        np.vertices.emplace_back(np.sides.front().x0, np.sides.front().y0);
        for (const Side& s : np.sides) np.vertices.emplace_back(s.x1, s.y1);
    }
    return np;
}

ExtPoly ResidualPoly::poly() const { return ExtPoly(field, coeffs); }

ResidualPoly residual_polynomial(const PhiDevelopment& dev, const NewtonPolygon& np,
                                 const Side& side) {
    ResidualPoly r;
    r.side = side;
    ModPoly phibar = ModPoly::reduce(dev.phi, dev.prime);
    r.field = make_ext_field(phibar.modulus(), phibar.monic());
    const long d = side.degree();
    for (long j = 0; j <= d; ++j) {
        long i = side.x0 + j * side.e;
        bool on = i < static_cast<long>(dev.vals.size()) && !dev.vals[i].is_infinite() &&
                  np.contains_point(i, dev.vals[i].value());
        if (!on) {
            r.coeffs.emplace_back(r.field, uint64_t(0));
            continue;
        }
        // c_i = red(a_i / p^{u_i})
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), dev.prime.get_mpz_t(),
                   static_cast<unsigned long>(dev.vals[i].value()));
        std::vector<Int> reduced;
        for (const Int& c : dev.coeffs[i].coeffs()) {
            Int q, rr;
            mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), c.get_mpz_t(), scale.get_mpz_t());
            if (rr != 0) throw internal_error("residual_polynomial: valuation overshoots");
            reduced.push_back(q);
        }
        ModPoly num = ModPoly::reduce(IntPoly(std::move(reduced)), dev.prime);
        r.coeffs.emplace_back(r.field, num);
        if (r.coeffs.back().is_zero())
            throw internal_error("residual_polynomial: on-polygon coefficient reduced to zero");
    }
    if (r.coeffs.front().is_zero() || r.coeffs.back().is_zero())
        throw internal_error("residual_polynomial: vertex coefficient vanished");
    return r;
}

bool separable(const ResidualPoly& r) {
    ExtPoly R = r.poly();
    if (R.degree() <= 1) return true;
    return ext_gcd(R, R.derivative()).degree() == 0;
}

RegularityDetail phi_regularity(const PhiDevelopment& dev, const NewtonPolygon& np) {
    RegularityDetail detail;
    for (const Side& s : np.sides) {
        bool sep = separable(residual_polynomial(dev, np, s));
        detail.side_separable.push_back(sep);
        if (!sep) detail.regular = false;
    }
    return detail;
}

long long ind_phi(const NewtonPolygon& np, long deg_phi) {
    if (np.empty()) return 0;
    // abscissa 1 is tolerated: phi can divide a squarefree f exactly once
    // over Z, leaving no column left of the hull
    if (np.vertices.front().first > 1)
        throw invalid_argument("ind_phi: phi^2 divides f; the index is not finite");
    long long count = 0;
    const long xlast = np.vertices.back().first;
    for (long j = std::max(1L, np.vertices.front().first); j <= xlast; ++j) {
        long fy = np.floor_ordinate(j);
        if (fy > 0) count += fy;
    }
    return count * deg_phi;
}

long long IndexResult::value() const {
    if (!exact) throw out_of_theory("index is not determined exactly");
    return lower;
}

namespace {

// One-sided squarefreeness certificate: gcd(f, f') = 1 over F_q for a prime
// q not dividing the leading coefficient forces gcd = 1 over Q.
bool certify_squarefree(const IntPoly& f) {
    unsigned tried = 0;
    for (uint64_t q = 2; tried < 40; ++q) {
        if (!is_prime(Int(static_cast<unsigned long>(q)))) continue;
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), q)) continue;
        ++tried;
        ModPoly fq = ModPoly::reduce(f, Int(static_cast<unsigned long>(q)));
        ModPoly dq = fq.derivative();
        if (dq.is_zero()) continue;
        if (gcd(fq, dq).degree() == 0) return true;
    }
    return discriminant_oracle(f) != 0;
}

}  // namespace

IndexResult index_at_prime(const IntPoly& f, const Int& p, uint64_t seed,
                           const IndexOptions& opts) {
    if (!f.is_monic() || f.degree() < 1)
        throw invalid_argument("index_at_prime: f must be monic of degree >= 1");
    if (!is_prime(p)) throw invalid_argument("index_at_prime: p must be prime");
    if (!certify_squarefree(f)) throw invalid_argument("index_at_prime: disc(f) = 0");

    IndexResult res;
    res.regular = true;
    auto factors = factor_mod_p(ModPoly::reduce(f, p), seed);
    for (const auto& [fac, mult] : factors) {
        PhiIndexData data(fac, mult);
        if (mult == 1) {
            // length-1 polygon: no interior columns, linear residual
            data.lift = fac.lift_symmetric();
            res.per_factor.push_back(std::move(data));
            continue;
        }
        data.lift = fac.lift_symmetric();
        for (const IntPoly& cand : opts.lifts)
            if (ModPoly::reduce(cand, p) == fac) {
                data.lift = cand;
                break;
            }
        if (!data.lift.is_monic()) throw invalid_argument("index_at_prime: lift must be monic");
        PhiDevelopment dev = phi_development(f, data.lift, p);
        data.polygon = principal_polygon(dev);
        if (data.polygon.length() != static_cast<long>(mult))
            throw theorem_violation(
                "index_at_prime: polygon length differs from the factor multiplicity");
        data.ind = ind_phi(data.polygon, data.lift.degree());
        data.regularity = phi_regularity(dev, data.polygon);
        if (!data.regularity.regular) res.regular = false;
        res.lower += data.ind;
        res.per_factor.push_back(std::move(data));
    }
    if (res.regular) {
        res.upper = res.lower;
        res.exact = true;
        return res;
    }
    long long disc_val;
    if (opts.disc_valuation) {
        disc_val = *opts.disc_valuation;
    } else {
        Valuation v = valuation(discriminant_oracle(f), p);
        disc_val = v.value();
    }
    res.upper = disc_val / 2;
    if (res.upper < res.lower)
        throw theorem_violation("index_at_prime: lower bound exceeds the disc bound");
    res.exact = (res.upper == res.lower);
    return res;
}

DedekindResult dedekind_test(const IntPoly& f, const Int& p, uint64_t seed) {
    if (!f.is_monic() || f.degree() < 1)
        throw invalid_argument("dedekind_test: f must be monic of degree >= 1");
    if (!is_prime(p)) throw invalid_argument("dedekind_test: p must be prime");
    if (!p.fits_ulong_p()) throw resource_limit("dedekind_test: prime exceeds the word-size guard");
    auto factors = factor_mod_p(ModPoly::reduce(f, p), seed);

    const uint64_t pu = p.get_ui();
    ModPoly gbar(pu, {1}), hbar(pu, {1});
    for (const auto& [fac, mult] : factors) {
        gbar = gbar * fac;
        for (unsigned i = 1; i < mult; ++i) hbar = hbar * fac;
    }
    IntPoly g = gbar.lift_symmetric();
    IntPoly h = hbar.lift_symmetric();
    IntPoly gh_minus_f = g * h - f;
    std::vector<Int> fstar_coeffs;
    for (const Int& c : gh_minus_f.coeffs()) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        if (r != 0) throw internal_error("dedekind_test: g*h - f not divisible by p");
        fstar_coeffs.push_back(q);
    }
    ModPoly fstar = ModPoly::reduce(IntPoly(std::move(fstar_coeffs)), p);
    ModPoly common = gcd(gcd(fstar, gbar), hbar);
    DedekindResult out;
    out.m = common.degree();
    out.maximal = (out.m == 0);
    ModPoly fbar = ModPoly::reduce(f, p);
    out.enlargement = divmod(fbar, common).first.lift_symmetric();
    return out;
}

}  // namespace chebrad
