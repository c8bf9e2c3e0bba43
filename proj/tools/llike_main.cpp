// llike_main.cpp
// Command-line front end: builds a coprime set from a family or a file,
// then dispatches to decomposition, semigroup, estimator, bound, sieve-dump
// and self-verification commands.
//
// Exit codes: 0 ok, 2 usage/config error, 3 verification failure.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "llike/bounds.hpp"
#include "llike/config.hpp"
#include "llike/error.hpp"
#include "llike/estimators.hpp"
#include "llike/oracle.hpp"
#include "llike/primes.hpp"
#include "llike/report.hpp"
#include "llike/semigroup.hpp"
#include "llike/sieve.hpp"

using namespace llike;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

struct Cli {
    RunConfig cfg;
    std::string set_spec;  // "file:<path>" or a bare path
    std::string variant = "big-omega";
    bool format_given = false;
};

std::string join(const std::vector<std::uint64_t>& v, std::size_t limit = 50) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? "," : "") + std::to_string(v[i]);
    if (v.size() > limit) s += ",... (" + std::to_string(v.size()) + " total)";
    return s + "}";
}

std::string describe(const RationalSum& s) {
    std::string r = format_double(s.value());
    if (s.exact()) r += " = " + s.exact()->str();
    else r += " +/- " + format_double(s.error_bound());
    return r;
}

void add_set_options(CLI::App* sub, Cli& cli) {
    sub->add_option("--family", cli.cfg.family, "built-in set: all-primes, augmented-primes, sparse-primes");
    sub->add_option("--set", cli.set_spec, "generator file, as file:<path>");
    sub->add_option("--inject", cli.cfg.inject, "augmented-primes: composites to inject")->delimiter(',');
    sub->add_option("--variant", cli.variant, "omega | big-omega");
    sub->add_option("--xmax", cli.cfg.xmax, "materialization bound X_max (default: derived)");
}

void add_output_options(CLI::App* sub, Cli& cli) {
    sub->add_option("--out", cli.cfg.out, "output file (default: summary on stdout)");
    sub->add_option("--format", cli.cfg.format, "csv | json")
        ->each([&cli](const std::string&) { cli.format_given = true; });
    sub->add_option("--svg", cli.cfg.svg, "write an SVG chart of |value| vs log10 x");
    sub->add_option("--workers", cli.cfg.workers, "worker threads");
    sub->add_option("--segment-len", cli.cfg.segment_len, "sieve segment length");
    sub->add_option("--seed", cli.cfg.seed, "random seed");
}

CoprimeSet load_set(const RunConfig& cfg, std::uint64_t needed) {
    if (!cfg.set_file.empty()) {
        std::vector<std::uint64_t> gens = read_set_file(cfg.set_file);
        std::uint64_t bound = cfg.xmax;
        if (bound == 0) {
            bound = std::max<std::uint64_t>(needed, 2);
            for (std::uint64_t g : gens) bound = std::max(bound, g);
        }
        return validate(std::move(gens), cfg.variant, bound, "file:" + cfg.set_file);
    }
    const std::string family = cfg.family.empty() ? "all-primes" : cfg.family;
    const std::uint64_t bound = cfg.xmax != 0 ? cfg.xmax : std::max<std::uint64_t>(needed, 2);
    FamilyParams params;
    params.inject = cfg.inject;
    return builtin_family(family, params, bound, cfg.variant);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::io, "cannot write " + path);
    f << text;
}

// Writes the chosen format to --out, or to stdout when --format was given
// without --out; otherwise prints the human summary.
void emit(const Cli& cli, const nlohmann::json& body, const std::function<void(std::ostream&)>& csv,
          const std::string& summary) {
    nlohmann::json doc = body;
    doc["config"] = to_json(cli.cfg);
    auto render = [&](std::ostream& os) {
        if (cli.cfg.format == "json")
            os << doc.dump(2) << '\n';
        else
            csv(os);
    };
    if (!cli.cfg.out.empty()) {
        std::ostringstream os;
        render(os);
        write_text(cli.cfg.out, os.str());
        std::cout << summary;
    } else if (cli.format_given) {
        render(std::cout);
    } else {
        std::cout << summary;
    }
}

std::uint64_t correlation_top(const RunConfig& cfg, std::uint64_t x) {
    std::uint64_t top = x;
    for (std::size_t i = 0; i < cfg.a.size(); ++i) top = std::max(top, cfg.a[i] * x + cfg.h[i]);
    return top;
}

CorrelationSpec spec_from(const RunConfig& cfg) {
    if (cfg.a.empty()) return mean_spec();
    return make_correlation_spec(cfg.a, cfg.h);
}

int cmd_decompose(const Cli& cli) {
    const CoprimeSet set = load_set(cli.cfg, 2);
    const Decomposition d = decompose(set);
    std::ostringstream s;
    s << "set: " << set.family() << " (" << variant_name(set.variant()) << ", X_max=" << set.bound()
      << ", " << set.size() << " generators)\n";
    s << "C=" << (d.composites.empty() ? "{} (empty)" : join(d.composites)) << '\n';
    s << "P=" << join(d.primes) << '\n';
    s << "spf:";
    for (std::size_t i = 0; i < d.composites.size(); ++i) s << ' ' << d.composites[i] << "->" << d.spf[i];
    s << "\nsum 1/c over C: " << describe(d.recip_sum_C) << '\n';
    s << "sum 1/p over P: " << describe(d.recip_sum_P) << '\n';
    emit(cli, {{"set", set_json(set)}, {"decomposition", to_json(d)}},
         [&](std::ostream& os) { write_decomposition_csv(os, d); }, s.str());
    return kExitOk;
}

int cmd_semigroup(const Cli& cli) {
    const RunConfig& c = cli.cfg;
    if (c.x < 1) throw Error(Errc::bad_params, "--x is required");
    const CoprimeSet set = load_set(c, c.x);
    const Decomposition d = decompose(set);
    std::vector<std::uint64_t> comps;
    for (std::uint64_t v : d.composites)
        if (v <= c.x) comps.push_back(v);
    const SemigroupEnumeration e = enumerate(comps, c.x);
    const ReciprocalMass m = reciprocal_mass(e);
    nlohmann::json body = {{"set", set_json(set)}, {"enumeration", to_json(e)}, {"mass", to_json(m)}};
    std::ostringstream s;
    s << "|<C>_x| = " << e.count() << " (floor(sqrt(x)) = " << isqrt(c.x) << ")\n";
    s << "I(x) = " << describe(m.mass) << "\nproduct bound = "
      << format_double(static_cast<double>(m.product_bound)) << '\n';
    if (c.T != 0) {
        const TailMass t = tail_mass(e, c.T);
        body["tail"] = to_json(t);
        s << "tail(T=" << c.T << ") = " << describe(t.tail) << ", T^-1/2 I(x) = " << format_double(t.comparison)
          << '\n';
    }
    if (c.l != 0) {
        const LcmMoment lm = lcm_moment(comps, c.l, c.x);
        body["lcm_moment"] = to_json(lm);
        s << "lcm moment (l=" << c.l << ") = " << describe(lm.sum)
          << ", product bound = " << format_double(static_cast<double>(lm.product_bound)) << '\n';
    }
    emit(cli, body, [&](std::ostream& os) { write_semigroup_csv(os, e); }, s.str());
    return kExitOk;
}

int emit_report(const Cli& cli, const CoprimeSet& set, const ConvergenceReport& r,
                nlohmann::json extra, const std::string& label) {
    if (!cli.cfg.svg.empty())
        write_text(cli.cfg.svg, svg_chart(r.grid, r.values, label + " for " + set.family()));
    std::ostringstream s;
    for (std::size_t i = 0; i < r.grid.size(); ++i)
        s << label << '(' << r.grid[i] << ") = " << format_double(r.values[i]) << "  (sum "
          << r.counts[i] << ")\n";
    nlohmann::json body = {{"set", set_json(set)}, {"report", to_json(r)}};
    for (auto& [k, v] : extra.items()) body[k] = v;
    emit(cli, body, [&](std::ostream& os) { write_convergence_csv(os, r); }, s.str());
    return kExitOk;
}

int cmd_mean(const Cli& cli) {
    const RunConfig& c = cli.cfg;
    if (c.x < 1) throw Error(Errc::bad_params, "--x is required");
    const CoprimeSet set = load_set(c, c.x);
    const SieveOptions opts = c.sieve_options();
    const ConvergenceReport r = convergence_grid(set, mean_spec(), {c.x}, opts);
    nlohmann::json extra = nlohmann::json::object();
    if (c.T != 0) {
        const Decomposition d = decompose(set);
        const TruncationReport tr = truncation_diagnostic(set, d, c.x, c.T, opts);
        extra["truncation"] = to_json(tr);
    }
    return emit_report(cli, set, r, extra, "M");
}

int cmd_correlate(const Cli& cli, std::size_t k) {
    const RunConfig& c = cli.cfg;
    if (c.x < 1) throw Error(Errc::bad_params, "--x is required");
    if (c.a.empty()) throw Error(Errc::bad_params, "--a and --h are required");
    if (k != 0 && k != c.a.size()) throw Error(Errc::bad_params, "--k does not match --a/--h");
    const CorrelationSpec spec = make_correlation_spec(c.a, c.h);
    const CoprimeSet set = load_set(c, correlation_top(c, c.x));
    const ConvergenceReport r = convergence_grid(set, spec, {c.x}, c.sieve_options());
    return emit_report(cli, set, r, nlohmann::json::object(), "S" + std::to_string(spec.k()));
}

int cmd_grid(const Cli& cli) {
    const RunConfig& c = cli.cfg;
    if (c.grid.empty()) throw Error(Errc::bad_params, "--grid is required");
    const CorrelationSpec spec = spec_from(c);
    const std::uint64_t top = correlation_top(c, *std::max_element(c.grid.begin(), c.grid.end()));
    const CoprimeSet set = load_set(c, top);
    const ConvergenceReport r = convergence_grid(set, spec, c.grid, c.sieve_options());
    return emit_report(cli, set, r, nlohmann::json::object(),
                       spec.is_mean() ? std::string("M") : "S" + std::to_string(spec.k()));
}

int cmd_bounds(const Cli& cli) {
    const RunConfig& c = cli.cfg;
    std::vector<std::uint64_t> xs = c.grid;
    if (c.x != 0) xs.push_back(c.x);
    if (xs.empty()) throw Error(Errc::bad_params, "--x or --grid is required");
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const CoprimeSet set = load_set(c, xs.back());
    const Decomposition d = decompose(set);
    std::vector<BoundReport> rows;
    nlohmann::json arr = nlohmann::json::array();
    std::ostringstream s;
    for (std::uint64_t x : xs) {
        rows.push_back(hall_tenenbaum_bound(set, d, x, c.K, c.sieve_options()));
        arr.push_back(to_json(rows.back()));
        s << "x=" << x << " sum 1/p=" << format_double(rows.back().recip_sum.value())
          << " bound=" << format_double(rows.back().ht_bound) << " |sum lambda_P|=" << rows.back().empirical
          << " ratio=" << format_double(rows.back().ratio) << '\n';
    }
    nlohmann::json body = {{"set", set_json(set)}, {"bounds", arr}};
    if (c.y != 0) {
        const RationalSum dist = distance_sum(d.primes, c.y, xs.back());
        body["distance_sum"] = {{"y", c.y}, {"x", xs.back()}, {"value", to_json(dist)}};
        s << "distance sum (" << c.y << ", " << xs.back() << "] = " << describe(dist) << '\n';
    }
    emit(cli, body, [&](std::ostream& os) { write_bounds_csv(os, rows); }, s.str());
    return kExitOk;
}

int cmd_verify(const Cli& cli) {
    const RunConfig& c = cli.cfg;
    if (c.nmax < 2) throw Error(Errc::bad_params, "--nmax must be >= 2");
    const VerifySummary v = run_verification(c.seed, c.nmax, c.sets, c.sieve_options());
    std::ostringstream s;
    s << "checked " << v.sets << " set/variant pairs, " << v.integers << " integers\n";
    s << "oracle mismatches: " << v.oracle_mismatches << "\nn_C mismatches: " << v.n_c_mismatches
      << "\nadditivity failures: " << v.additivity_failures
      << "\nconvolution failures: " << v.convolution_failures << '\n';
    for (const auto& f : v.first_failures) s << "  " << f << '\n';
    s << (v.ok() ? "all identities hold\n" : "VERIFICATION FAILED\n");
    nlohmann::json body = {{"sets", v.sets},
                           {"integers", v.integers},
                           {"oracle_mismatches", v.oracle_mismatches},
                           {"n_c_mismatches", v.n_c_mismatches},
                           {"additivity_failures", v.additivity_failures},
                           {"convolution_failures", v.convolution_failures},
                           {"first_failures", v.first_failures},
                           {"ok", v.ok()}};
    emit(cli, body,
         [&](std::ostream& os) {
             os << "check,failures\noracle," << v.oracle_mismatches << "\nn_c," << v.n_c_mismatches
                << "\nadditivity," << v.additivity_failures << "\nconvolution," << v.convolution_failures
                << '\n';
         },
         s.str());
    return v.ok() ? kExitOk : kExitVerify;
}

int cmd_sieve_dump(const Cli& cli) {
    const RunConfig& c = cli.cfg;
    if (c.hi < c.lo || c.lo < 1) throw Error(Errc::bad_params, "need 1 <= --lo <= --hi");
    const CoprimeSet set = load_set(c, c.hi);
    std::optional<Decomposition> d;
    if (c.with_n_c) d = decompose(set);
    const SieveTable t = sieve_range(set, c.lo, c.hi, d ? &*d : nullptr, c.sieve_options());
    std::ostringstream os;
    if (c.format == "bin")
        write_table_binary(os, t);
    else
        write_table_csv(os, t);
    if (c.out.empty())
        std::cout << os.str();
    else
        write_text(c.out, os.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Liouville-like functions of coprime generator sets"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI config file (flags override it)");

    Cli cli;
    if (const char* env = std::getenv("LLIKE_SEGMENT_LEN")) {
        try {
            cli.cfg.segment_len = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: LLIKE_SEGMENT_LEN is not an integer\n";
            return kExitUsage;
        }
    }
    std::size_t k = 0;

    auto* dec = app.add_subcommand("decompose", "split A into composites C and primes P");
    auto* sg = app.add_subcommand("semigroup", "enumerate <C>_x and its reciprocal sums");
    auto* mn = app.add_subcommand("mean", "summatory mean M(x)");
    auto* co = app.add_subcommand("correlate", "k-point correlation S_k(x)");
    auto* gr = app.add_subcommand("grid", "mean or correlation along a grid of x");
    auto* bd = app.add_subcommand("bounds", "reciprocal sums and the mean-value bound diagnostic");
    auto* vf = app.add_subcommand("verify", "randomized oracle and identity checks");
    auto* sd = app.add_subcommand("sieve-dump", "dump omega, Omega, lambda over [lo, hi]");
    for (CLI::App* sub : {dec, sg, mn, co, gr, bd, vf, sd}) {
        sub->set_help_flag("--help", "print this help");  // frees -h/--h for the shifts
        add_set_options(sub, cli);
        add_output_options(sub, cli);
    }
    for (CLI::App* sub : {sg, mn, co, bd}) sub->add_option("--x", cli.cfg.x, "evaluation point x");
    sg->add_option("--T", cli.cfg.T, "tail threshold");
    sg->add_option("--l", cli.cfg.l, "lcm-moment arity (1..4)");
    mn->add_option("--T", cli.cfg.T, "truncation threshold for the n_C split");
    for (CLI::App* sub : {co, gr}) {
        sub->add_option("--a", cli.cfg.a, "coefficients a_i")->delimiter(',');
        sub->add_option("--h", cli.cfg.h, "shifts h_i")->delimiter(',');
    }
    co->add_option("--k", k, "arity (must match --a/--h)");
    for (CLI::App* sub : {gr, bd}) sub->add_option("--grid", cli.cfg.grid, "x values")->delimiter(',');
    bd->add_option("--K", cli.cfg.K, "constant K > 0 in the bound");
    bd->add_option("--y", cli.cfg.y, "lower end of the distance sum");
    vf->add_option("--nmax", cli.cfg.nmax, "check every n <= nmax");
    vf->add_option("--sets", cli.cfg.sets, "number of random sets");
    sd->add_option("--lo", cli.cfg.lo, "first n");
    sd->add_option("--hi", cli.cfg.hi, "last n");
    sd->add_flag("--n-c", cli.cfg.with_n_c, "include the n_C plane (csv only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        cli.cfg.command = sub->get_name();
        cli.cfg.variant = parse_variant(cli.variant);
        if (!cli.set_spec.empty())
            cli.cfg.set_file = cli.set_spec.rfind("file:", 0) == 0 ? cli.set_spec.substr(5) : cli.set_spec;
        if (cli.cfg.command == "sieve-dump") {
            if (cli.cfg.format != "csv" && cli.cfg.format != "bin")
                throw Error(Errc::bad_params, "sieve-dump format must be csv or bin");
            RunConfig probe = cli.cfg;
            probe.format = "csv";
            check_config(probe);
        } else {
            check_config(cli.cfg);
        }

        const std::string& cmd = cli.cfg.command;
        if (cmd == "decompose") return cmd_decompose(cli);
        if (cmd == "semigroup") return cmd_semigroup(cli);
        if (cmd == "mean") return cmd_mean(cli);
        if (cmd == "correlate") return cmd_correlate(cli, k);
        if (cmd == "grid") return cmd_grid(cli);
        if (cmd == "bounds") return cmd_bounds(cli);
        if (cmd == "verify") return cmd_verify(cli);
        if (cmd == "sieve-dump") return cmd_sieve_dump(cli);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
