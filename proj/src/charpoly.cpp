#include "chebrad/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace chebrad {

namespace {

// word primes stay below 2^30 so the float-assisted reduction is exact
// with a single +-p correction
struct SmallMod {
    uint64_t p;
    double inv;
    explicit SmallMod(uint64_t prime) : p(prime), inv(1.0 / static_cast<double>(prime)) {}
    uint64_t mul(uint64_t a, uint64_t b) const {
        uint64_t u = a * b;
        uint64_t q = static_cast<uint64_t>(static_cast<double>(a) * static_cast<double>(b) * inv);
        int64_t r = static_cast<int64_t>(u - q * p);
        if (r < 0) r += static_cast<int64_t>(p);
        if (r >= static_cast<int64_t>(p)) r -= static_cast<int64_t>(p);
        return static_cast<uint64_t>(r);
    }
    uint64_t pow(uint64_t b, uint64_t e) const {
        uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
};

// char poly of an n x n matrix over F_p by Hessenberg reduction
// (Cohen, Algorithm 2.2.9). Column-major m[j][i] = entry (i, j).
std::vector<uint64_t> charpoly_mod(std::vector<std::vector<uint64_t>> m, const SmallMod& F) {
    const size_t n = m.size();
    const uint64_t p = F.p;
    auto at = [&](size_t i, size_t j) -> uint64_t& { return m[j][i]; };
    for (size_t k = 1; k + 1 < n; ++k) {
        size_t piv = 0;
        bool found = false;
        for (size_t i = k; i < n; ++i)
            if (at(i, k - 1) != 0) {
                piv = i;
                found = true;
                break;
            }
        if (!found) continue;
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
            for (size_t i = 0; i < n; ++i) std::swap(at(i, piv), at(i, k));
        }
        uint64_t inv = F.pow(at(k, k - 1), p - 2);
        for (size_t i = k + 1; i < n; ++i) {
            uint64_t u = F.mul(at(i, k - 1), inv);
            if (u == 0) continue;
            // row_i -= u * row_k ; col_k += u * col_i
            for (size_t j = 0; j < n; ++j) {
                uint64_t sub = F.mul(u, at(k, j));
                uint64_t& cell = at(i, j);
                cell = cell >= sub ? cell - sub : cell + p - sub;
            }
            for (size_t r = 0; r < n; ++r) {
                uint64_t add = F.mul(u, at(r, i));
                uint64_t& cell = at(r, k);
                cell += add;
                if (cell >= p) cell -= p;
            }
        }
    }
    std::vector<std::vector<uint64_t>> ps(n + 1);
    ps[0] = {1};
    for (size_t mdim = 1; mdim <= n; ++mdim) {
        const size_t mm = mdim - 1;
        std::vector<uint64_t> cur(mdim + 1, 0);
        const auto& prev = ps[mdim - 1];
        for (size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] = (cur[i + 1] + prev[i]) % p;
            uint64_t sub = F.mul(at(mm, mm), prev[i]);
            cur[i] = (cur[i] + p - sub) % p;
        }
        uint64_t prod = 1;
        for (size_t i = mdim - 1; i-- > 0;) {
            prod = F.mul(prod, at(i + 1, i));
            if (prod == 0) break;
            uint64_t coef = F.mul(prod, at(i, mm));
            if (coef == 0) continue;
            const auto& pi = ps[i];
            for (size_t j = 0; j < pi.size(); ++j) {
                uint64_t sub = F.mul(coef, pi[j]);
                cur[j] = (cur[j] + p - sub) % p;
            }
        }
        ps[mdim] = std::move(cur);
    }
    return ps[n];
}

double fujiwara_log2_bound(const IntPoly& f) {
    // monic f: all roots satisfy |z| <= 2 max_k |a_{n-k}|^(1/k)
    const int n = f.degree();
    double best = 0.0;
    for (int k = 1; k <= n; ++k) {
        const Int& c = f.coeff(static_cast<size_t>(n - k));
        if (c == 0) continue;
        double lg = static_cast<double>(mpz_sizeinbase(c.get_mpz_t(), 2));
        best = std::max(best, lg / k);
    }
    return best + 1.0;  // the factor 2
}

}  // namespace

IntPoly element_char_poly(const IntPoly& f, const IntPoly& q,
                          std::optional<double> log2_root_bound) {
    if (!f.is_monic() || f.degree() < 1)
        throw invalid_argument("element_char_poly: f must be monic of degree >= 1");
    const size_t n = static_cast<size_t>(f.degree());
    if (q.degree() >= static_cast<int>(n))
        throw invalid_argument("element_char_poly: deg q must be < deg f");

    // |e_k| <= C(n,k) A^k <= 2^n A^n with the eigenvalue bound
    // A = sum_j |q_j| R^j, accumulated term-wise in log space
    double log2R = std::max(0.0, log2_root_bound ? *log2_root_bound : fujiwara_log2_bound(f));
    double log2A = 0.0;
    for (size_t j = 0; j < q.coeffs().size(); ++j) {
        const Int& c = q.coeff(j);
        if (c == 0) continue;
        double term = static_cast<double>(mpz_sizeinbase(c.get_mpz_t(), 2)) +
                      static_cast<double>(j) * log2R;
        log2A = std::max(log2A, term);
    }
    log2A += std::log2(static_cast<double>(q.coeffs().size() + 1));
    double bound_bits = static_cast<double>(n) * (1.0 + log2A) + 16.0;

    // CRT over a fixed descending sequence of sub-2^30 primes
    std::vector<uint64_t> primes;
    std::vector<std::vector<uint64_t>> residues;  // per prime, n+1 coefficients
    uint64_t candidate = (uint64_t(1) << 30) - 1;
    double bits_done = 0.0;
    while (bits_done < bound_bits + 1.0) {
        while (!is_prime(Int(static_cast<unsigned long>(candidate)))) --candidate;
        const SmallMod F(candidate);
        const uint64_t p = candidate--;
        std::vector<uint64_t> fp(n + 1), col(n);
        for (size_t i = 0; i <= n; ++i) fp[i] = mpz_fdiv_ui(f.coeff(i).get_mpz_t(), p);
        for (size_t i = 0; i < n; ++i) col[i] = mpz_fdiv_ui(q.coeff(i).get_mpz_t(), p);
        std::vector<std::vector<uint64_t>> mat(n);
        mat[0] = col;
        for (size_t j = 1; j < n; ++j) {
            uint64_t top = col[n - 1];
            for (size_t i = n; i-- > 1;) col[i] = col[i - 1];
            col[0] = 0;
            if (top != 0)
                for (size_t i = 0; i < n; ++i) {
                    uint64_t sub = F.mul(top, fp[i]);
                    col[i] = col[i] >= sub ? col[i] - sub : col[i] + p - sub;
                }
            mat[j] = col;
        }
        primes.push_back(p);
        residues.push_back(charpoly_mod(std::move(mat), F));
        bits_done += std::log2(static_cast<double>(p));
    }

    // combine: incremental Garner CRT per coefficient
    std::vector<Int> acc(n + 1, Int(0));
    Int modulus = 1;
    for (size_t k = 0; k < primes.size(); ++k) {
        Int pz(static_cast<unsigned long>(primes[k]));
        if (k == 0) {
            for (size_t i = 0; i <= n; ++i)
                acc[i] = Int(static_cast<unsigned long>(residues[k][i]));
            modulus = pz;
            continue;
        }
        Int inv;
        if (!mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t()))
            throw internal_error("element_char_poly: repeated CRT prime");
        unsigned long inv_u = mpz_get_ui(inv.get_mpz_t());
        const SmallMod F(primes[k]);
        for (size_t i = 0; i <= n; ++i) {
            unsigned long r_prev = mpz_fdiv_ui(acc[i].get_mpz_t(), primes[k]);
            uint64_t want = residues[k][i];
            uint64_t delta = want >= r_prev ? want - r_prev : want + primes[k] - r_prev;
            delta = F.mul(delta, inv_u);
            if (delta != 0) {
                Int step = modulus * Int(static_cast<unsigned long>(delta));
                acc[i] += step;
            }
        }
        modulus *= pz;
    }
    std::vector<Int> out(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        Int c = acc[i] % modulus;
        if (c < 0) c += modulus;
        if (c * 2 > modulus) c -= modulus;
        out[i] = c;
    }
    IntPoly result(std::move(out));
    if (!result.is_monic() || result.degree() != static_cast<int>(n))
        throw internal_error("element_char_poly: result is not monic of full degree");
    return result;
}

std::optional<IntPoly> scaled_char_poly(const IntPoly& f, const IntPoly& q, const Int& denom,
                                        std::optional<double> log2_root_bound) {
    if (denom < 1) throw invalid_argument("scaled_char_poly: denominator must be positive");
    IntPoly cp = element_char_poly(f, q, log2_root_bound);
    const size_t n = static_cast<size_t>(cp.degree());
    std::vector<Int> out(n + 1);
    Int scale = 1;
    for (size_t k = 0; k <= n; ++k) {
        const Int& e = cp.coeff(n - k);
        Int quo, rem;
        mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), e.get_mpz_t(), scale.get_mpz_t());
        if (rem != 0) return std::nullopt;
        out[n - k] = quo;
        scale *= denom;
    }
    return IntPoly(std::move(out));
}

}  // namespace chebrad
