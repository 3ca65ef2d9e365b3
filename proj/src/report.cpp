#include "chebrad/report.hpp"

#include <sstream>

namespace chebrad {

namespace {

using nlohmann::json;

std::string dec(const Int& v) { return v.get_str(); }

json factored_json(const FactoredInt& f) {
    json terms = json::array();
    for (const auto& [p, e] : f.factors) terms.push_back({{"prime", dec(p)}, {"exponent", e}});
    json out;
    out["sign"] = f.sign;
    out["factors"] = terms;
    out["cofactor"] = f.cofactor ? json(dec(*f.cofactor)) : json(nullptr);
    return out;
}

json poly_json(const IntPoly& f) {
    json coeffs = json::array();
    for (const Int& c : f.coeffs()) coeffs.push_back(dec(c));
    return coeffs;
}

std::string power_product(const std::vector<std::pair<std::string, long long>>& terms) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [base, exp] : terms) {
        if (exp == 0) continue;
        if (!first) os << " * ";
        os << "(" << base << ")^" << exp;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace

json to_json(const AnalysisReport& r) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["input"] = {{"ell", dec(r.ell)}, {"n", r.n}, {"t", dec(r.t)}};
    j["degree"] = dec(r.degree);
    j["seed"] = r.seed;
    j["irreducibility"] = to_string(r.irred);
    j["irreducibility_witness"] = r.irred_witness ? json(dec(*r.irred_witness)) : json(nullptr);

    json disc;
    disc["structured"] = json::array({
        json{{"base", dec(r.ell)}, {"exponent", r.disc.ell_exp}},
        json{{"base", dec(r.disc.shifted_base)}, {"exponent", r.disc.shifted_exp}},
    });
    disc["sign"] = r.disc.sign;
    disc["numeric"] = r.disc.numeric ? json(dec(*r.disc.numeric)) : json(nullptr);
    disc["t2m4_factored"] = factored_json(r.disc.t2m4_factored);
    disc["oracle_checked"] = r.disc.oracle_checked;
    j["disc_phi"] = disc;

    json mono;
    mono["verdict"] = to_string(r.monogenic.answer);
    mono["ell_condition_holds"] = r.monogenic.ell_condition;
    mono["ell_condition_residue"] = dec(r.monogenic.ell_condition_residue);
    mono["t_minus_2_squarefree"] = to_string(r.monogenic.tm2);
    mono["t_plus_2_squarefree"] = to_string(r.monogenic.tp2);
    mono["reasons"] = r.monogenic.reasons;
    j["monogenic"] = mono;

    j["v_ell"] = r.v_ell;

    json primes = json::array();
    for (const auto& e : r.primes) {
        json row;
        row["p"] = dec(e.p);
        row["disc_valuation"] = e.disc_valuation;
        row["ind_lower"] = e.ind_lo;
        row["ind_upper"] = e.ind_hi;
        if (e.exact) row["ind"] = e.ind_lo;
        row["exact"] = e.exact;
        row["undetermined"] = e.undetermined;
        row["method"] = to_string(e.method);
        row["note"] = e.note;
        primes.push_back(row);
    }
    j["primes"] = primes;

    json delta;
    delta["structured"] = json::array({
        json{{"base", dec(r.ell)}, {"exponent", r.delta.ell_exp}},
        json{{"base", dec(r.delta.shifted_base)}, {"exponent", r.delta.shifted_exp}},
    });
    json corr = json::array();
    for (const auto& c : r.delta.corrections)
        corr.push_back({{"p", dec(c.p)}, {"exponent", c.exp}});
    delta["divided_by"] = corr;
    json und = json::array();
    for (const auto& u : r.delta.undetermined_ranges)
        und.push_back({{"p", dec(u.p)}, {"exponent_range", json::array({u.lo, u.hi})}});
    delta["undetermined"] = und;
    delta["sign"] = r.delta.sign;
    delta["complete"] = r.delta.complete;
    if (r.delta.numeric_factored) {
        delta["numeric_factored"] = factored_json(*r.delta.numeric_factored);
        Int value = r.delta.numeric_factored->value();
        if (mpz_sizeinbase(value.get_mpz_t(), 10) <= 10000)
            delta["numeric"] = dec(value);
        else
            delta["numeric"] = json(nullptr);
    } else {
        delta["numeric_factored"] = json(nullptr);
        delta["numeric"] = json(nullptr);
    }
    j["delta_k"] = delta;

    json basis;
    basis["available"] = r.basis_available;
    basis["note"] = r.basis_note;
    json elems = json::array();
    for (const auto& b : r.basis) {
        json be;
        be["numerator"] = poly_json(b.numerator);
        be["denominator"] = dec(b.denominator);
        be["denominator_prime"] = dec(b.denom_prime);
        be["denominator_exponent"] = b.denom_exp;
        be["verified"] = b.verified;
        be["char_poly"] = b.char_poly ? poly_json(*b.char_poly) : json(nullptr);
        elems.push_back(be);
    }
    basis["elements"] = elems;
    j["integral_basis"] = basis;

    j["out_of_theory"] = r.out_of_theory_notes;
    j["fully_determined"] = r.fully_determined();
    return j;
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "Phi = T_" << r.ell.get_str() << "^" << r.n << "(x) - " << r.t.get_str()
       << "   (degree " << r.degree.get_str() << ", irreducibility: " << to_string(r.irred);
    if (r.irred_witness) os << " at q=" << r.irred_witness->get_str();
    os << ")\n\n";

    os << "D(Phi) = "
       << power_product({{r.ell.get_str(), r.disc.ell_exp},
                         {r.disc.shifted_base.get_str(), r.disc.shifted_exp}})
       << "\n";
    os << "       = " << r.ell.get_str() << "^" << r.disc.ell_exp << " * ("
       << r.disc.shifted_base.get_str() << ")^" << r.disc.shifted_exp;
    if (r.disc.oracle_checked) os << "   (verified against the resultant oracle)";
    os << "\n";
    if (r.disc.numeric && mpz_sizeinbase(r.disc.numeric->get_mpz_t(), 10) <= 80)
        os << "       = " << r.disc.numeric->get_str() << "\n";
    os << "\n";

    os << "monogenic: " << to_string(r.monogenic.answer) << "\n";
    for (const auto& reason : r.monogenic.reasons) os << "  - " << reason << "\n";
    os << "nu_ell(Phi(t)) = ";
    if (r.v_ell < 0)
        os << "infinite (Phi(t) = 0)";
    else
        os << r.v_ell;
    os << "\n\n";

    os << "per-prime index table:\n";
    for (const auto& e : r.primes) {
        os << "  p = " << e.p.get_str() << ": nu_p(D) = " << e.disc_valuation << ", ind_p = ";
        if (e.exact)
            os << e.ind_lo;
        else
            os << "[" << e.ind_lo << ", " << e.ind_hi << "]";
        os << "  (" << to_string(e.method) << (e.exact ? ", exact" : "")
           << (e.undetermined ? ", undetermined" : "") << ")";
        if (!e.note.empty()) os << "  " << e.note;
        os << "\n";
    }
    os << "\n";

    os << "Delta(K) = " << r.ell.get_str() << "^" << r.delta.ell_exp << " * ("
       << r.delta.shifted_base.get_str() << ")^" << r.delta.shifted_exp;
    for (const auto& c : r.delta.corrections)
        os << " / " << c.p.get_str() << "^" << c.exp;
    os << (r.delta.complete ? "" : "   [incomplete]") << "\n";
    for (const auto& u : r.delta.undetermined_ranges)
        os << "  undetermined at p = " << u.p.get_str() << ": nu_p(Delta) in [" << u.lo << ", "
           << u.hi << "]\n";
    if (r.delta.numeric_factored) {
        os << "  |Delta| factored:";
        for (const auto& [p, e] : r.delta.numeric_factored->factors)
            os << " " << p.get_str() << "^" << e;
        os << (r.delta.sign < 0 ? "  (negative)" : "") << "\n";
        Int value = r.delta.numeric_factored->value();
        if (mpz_sizeinbase(value.get_mpz_t(), 10) <= 80)
            os << "  Delta = " << value.get_str() << "\n";
    }
    os << "\n";

    os << "integral basis: ";
    if (!r.basis_available) {
        os << "unavailable (" << r.basis_note << ")\n";
    } else {
        os << r.basis.size() << " generator(s)";
        if (!r.basis_note.empty()) os << " [" << r.basis_note << "]";
        os << "\n";
        for (const auto& b : r.basis) {
            os << "  (" << b.numerator.str("theta") << ") / " << b.denominator.get_str();
            if (b.verified) os << "   [char poly integral]";
            os << "\n";
        }
    }
    if (!r.out_of_theory_notes.empty()) {
        os << "\nout-of-theory flags:\n";
        for (const auto& note : r.out_of_theory_notes) os << "  - " << note << "\n";
    }
    return os.str();
}

}  // namespace chebrad
