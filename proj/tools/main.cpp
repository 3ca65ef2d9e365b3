#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chebrad/analysis.hpp"
#include "chebrad/render.hpp"
#include "chebrad/report.hpp"
#include "chebrad/verify.hpp"

namespace {

// exit-code contract: 0 ok, 1 usage, 2 out-of-theory, 3 resource,
// 4 verification failure
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitOutOfTheory = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerifyFailed = 4;

uint64_t resolve_seed(const CLI::Option* opt, uint64_t value) {
    if (opt->count() > 0) return value;
    if (const char* env = std::getenv("CHEBRAD_SEED")) return std::strtoull(env, nullptr, 10);
    return value;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw chebrad::error("cannot open output file: " + out_path);
    f << content;
}

chebrad::Int parse_int(const std::string& s) {
    try {
        return chebrad::Int(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("not an integer: " + s);
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace chebrad;
    CLI::App app{"chebrad: exact analysis of shifted iterated Chebyshev polynomials\n"
                 "T_{ell^n}(x) - t: discriminants, monogenicity, p-adic indices via\n"
                 "phi-Newton polygons, field discriminants, and integral bases"};
    app.require_subcommand(1);

    std::string ell_s, t_s = "0", prime_s, out_path;
    unsigned n = 1, m = 1;
    uint64_t seed = 0;
    bool as_json = false, as_svg = false;
    unsigned long factor_bound = 1000000;
    uint64_t max_field = 100000;

    auto add_instance_flags = [&](CLI::App* cmd) {
        cmd->add_option("--ell", ell_s, "odd prime ell")->required();
        cmd->add_option("--n", n, "iteration depth n >= 1")->check(CLI::PositiveNumber);
        cmd->add_option("--t", t_s, "integer shift t (arbitrary precision)");
        return cmd;
    };

    CLI::App* analyze_cmd =
        add_instance_flags(app.add_subcommand("analyze", "full report for one instance"));
    analyze_cmd->add_flag("--json", as_json, "emit the versioned JSON document");
    CLI::Option* seed_opt =
        analyze_cmd->add_option("--seed", seed, "seed for the factorization randomness");
    analyze_cmd->add_option("--out", out_path, "write the report to a file");
    analyze_cmd->add_option("--factor-bound", factor_bound, "trial-division bound");
    std::vector<std::string> prime_filter;
    analyze_cmd->add_option("--prime", prime_filter,
                            "restrict the per-prime table to these primes");

    CLI::App* polygon_cmd = add_instance_flags(
        app.add_subcommand("polygon", "render the phi-Newton polygons at one prime"));
    polygon_cmd->add_option("--prime", prime_s, "the prime p")->required();
    polygon_cmd->add_flag("--svg", as_svg, "emit SVG instead of ASCII");
    CLI::Option* seed_opt_poly = polygon_cmd->add_option("--seed", seed, "factorization seed");
    polygon_cmd->add_option("--out", out_path, "write the rendering to a file");

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "DOT graph of T_ell acting on F_{p^m}");
    orbit_cmd->add_option("--ell", ell_s, "odd prime ell")->required();
    orbit_cmd->add_option("--prime", prime_s, "field characteristic p")->required();
    orbit_cmd->add_option("--m", m, "extension degree m")->check(CLI::PositiveNumber);
    orbit_cmd->add_option("--max-field-size", max_field, "size guard for p^m");
    orbit_cmd->add_option("--out", out_path, "write the DOT file");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the cross-check sweeps and print a pass/fail table");
    std::string sweep_name;
    std::vector<long> sweep_ells;
    std::vector<unsigned> sweep_ns;
    verify_cmd->add_option("--sweep", sweep_name, "run a single named sweep");
    verify_cmd->add_option("--ell", sweep_ells, "ell values for the disc-oracle sweep");
    verify_cmd->add_option("--n", sweep_ns, "n values for the disc-oracle sweep");
    CLI::Option* seed_opt_verify = verify_cmd->add_option("--seed", seed, "sweep seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) {
            uint64_t s = resolve_seed(seed_opt, seed);
            Int ell = parse_int(ell_s);
            if (ell == 2 || !is_prime(ell)) {
                std::cerr << "error: --ell must be an odd prime, got " << ell.get_str() << "\n";
                return kExitUsage;
            }
            AnalyzeOptions opts;
            opts.factor.trial_bound = static_cast<long>(factor_bound);
            for (const auto& p : prime_filter) opts.prime_filter.push_back(parse_int(p));
            Instance inst = make_instance(ell, n, parse_int(t_s));
            AnalysisReport rep = analyze(inst, s, opts);
            emit(as_json ? to_json(rep).dump(2) + "\n" : to_text(rep), out_path);
            if (!rep.fully_determined()) {
                std::cerr << "note: report contains out-of-theory or undetermined parts\n";
                return kExitOutOfTheory;
            }
            return kExitOk;
        }
        if (polygon_cmd->parsed()) {
            uint64_t s = resolve_seed(seed_opt_poly, seed);
            Int ell = parse_int(ell_s);
            if (ell == 2 || !is_prime(ell)) {
                std::cerr << "error: --ell must be an odd prime\n";
                return kExitUsage;
            }
            Int p = parse_int(prime_s);
            if (!is_prime(p)) {
                std::cerr << "error: --prime must be prime\n";
                return kExitUsage;
            }
            Instance inst = make_instance(ell, n, parse_int(t_s));
            IndexOptions iopts;
            iopts.disc_valuation = [&] {
                long long deg = inst.degree.get_si();
                long long v = (p == ell) ? static_cast<long long>(n) * deg : 0;
                Int t2m4 = inst.t * inst.t - 4;
                if (t2m4 == 0) return v;
                return v + valuation(t2m4, p).value() * ((deg - 1) / 2);
            }();
            IndexResult idx = index_at_prime(inst.phi, p, s, iopts);
            std::ostringstream os;
            os << "Phi = T_" << ell.get_str() << "^" << n << "(x) - " << inst.t.get_str()
               << " at p = " << p.get_str() << "\n";
            for (const auto& data : idx.per_factor) {
                if (data.multiplicity < 2) continue;
                os << "\nphi = " << data.lift.str() << " (factor " << data.factor.str()
                   << ", multiplicity " << data.multiplicity << ")\n";
                os << (as_svg ? render_svg(data.polygon, data.lift.degree())
                              : render_ascii(data.polygon, data.lift.degree()));
            }
            os << "\nind_" << p.get_str() << (idx.exact ? " = " : " >= ") << idx.lower;
            if (!idx.exact) os << " (upper bound " << idx.upper << ")";
            os << (idx.regular ? ", p-regular" : ", not p-regular") << "\n";
            emit(os.str(), out_path);
            return kExitOk;
        }
        if (orbit_cmd->parsed()) {
            Int ell = parse_int(ell_s), p = parse_int(prime_s);
            OrbitGraph g = orbit_graph(ell, p, m, max_field);
            emit(to_dot(g), out_path);
            std::cerr << "nodes: " << g.size() << "  edges: " << g.size() << "\n";
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            uint64_t s = resolve_seed(seed_opt_verify, seed ? seed : 1);
            if (s == 0) s = 1;
            std::vector<SweepResult> results;
            if (sweep_name.empty())
                results = run_all_sweeps(s);
            else
                results.push_back(run_sweep(sweep_name, s, sweep_ells, sweep_ns));
            bool all_ok = true;
            for (const auto& r : results) {
                std::cout << (r.ok() ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.passed
                          << "/" << r.total << ")\n";
                for (const auto& f : r.failures) std::cout << "      failed: " << f << "\n";
                if (!r.ok()) all_ok = false;
            }
            return all_ok ? kExitOk : kExitVerifyFailed;
        }
    } catch (const chebrad::out_of_theory& e) {
        std::cerr << "out of theory: " << e.what() << "\n";
        return kExitOutOfTheory;
    } catch (const chebrad::resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const chebrad::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
