#include "unimod/cli.hpp"

#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "unimod/matrix_io.hpp"
#include "unimod/reports.hpp"

namespace unimod::cli {

namespace {

using nlohmann::json;

void require_positive(long v, const char* name) {
    if (v < 1) throw DomainError(std::string(name) + " must be at least 1 (got " + std::to_string(v) + ")");
}

IntMatrix load_matrix(const std::string& path) {
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return parse_matrix_file(text);
    }
    return read_matrix_file(path);
}

struct Options {
    std::string file;
    std::string mode = "unimodular";
    std::string format = "json";
    std::string stream = "random";
    long k = 0, n = 0, d = 0, j = 0;
    double tol = 1e-12;
    std::uint64_t bound = 0, samples = 0, seed = 0, p = 0;
    unsigned shards = 1;
    std::uint64_t budget = kDefaultEnumerationBudget;
    std::vector<std::uint64_t> primes, bounds;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int analyze(const Options& o, std::ostream& out) {
    const IntMatrix a = load_matrix(o.file);
    const bool as_matrix = o.format == "matrix";
    if (o.mode == "unimodular") {
        const BigInt g = full_rank_minor_gcd(a);
        emit(out, {{"unimodular", g == 1}, {"minor_gcd", g.get_str()}});
    } else if (o.mode == "hnf") {
        HnfResult r = hnf(a);
        if (as_matrix)
            out << format_matrix_file(r.H);
        else
            emit(out, to_json(r));
    } else if (o.mode == "snf") {
        SnfResult r = snf(a);
        if (as_matrix)
            out << format_matrix_file(r.S);
        else
            emit(out, to_json(r));
    } else {
        try {
            IntMatrix m = complete_to_gl(a);
            if (as_matrix)
                out << format_matrix_file(m);
            else
                emit(out, {{"completion", matrix_to_json(m)}});
        } catch (const NotUnimodular& e) {
            emit(out, {{"error", "NotUnimodular"}, {"minor_gcd", e.minor_gcd().get_str()}});
            throw;
        }
    }
    return kOk;
}

BoxSpec box(const Options& o) {
    require_positive(o.k, "k");
    require_positive(o.n, "n");
    BoxSpec s{static_cast<unsigned>(o.k), static_cast<unsigned>(o.n), o.bound};
    s.validate();
    return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact unimodularity, normal forms, and natural densities of integer matrices", "unimod"};
    app.require_subcommand(1);
    Options o;

    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a matrix file ('-' reads standard input)");
    analyze_cmd->add_option("file", o.file, "Matrix file")->required();
    analyze_cmd->add_option("--mode", o.mode, "unimodular | hnf | snf | complete")
        ->check(CLI::IsMember({"unimodular", "hnf", "snf", "complete"}));
    analyze_cmd->add_option("--format", o.format, "json | matrix (plain matrix file)")
        ->check(CLI::IsMember({"json", "matrix"}));

    auto* density_cmd = app.add_subcommand("density", "d_{k,n}, the density of unimodular k x n matrices");
    density_cmd->add_option("--k", o.k)->required();
    density_cmd->add_option("--n", o.n)->required();
    density_cmd->add_option("--tol", o.tol, "Absolute error tolerance");

    auto* limit_cmd = app.add_subcommand("limit", "d_d, the limit of d_{n-d,n} as n grows");
    limit_cmd->add_option("--d", o.d)->required();
    limit_cmd->add_option("--tol", o.tol, "Absolute error tolerance");

    auto* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta at an integer j >= 2");
    zeta_cmd->add_option("--j", o.j)->required();
    zeta_cmd->add_option("--tol", o.tol, "Absolute error tolerance");

    auto* local_cmd = app.add_subcommand("local", "Exact local density over a finite prime set");
    local_cmd->add_option("--primes", o.primes, "Comma-separated increasing primes")->required()->delimiter(',');
    local_cmd->add_option("--k", o.k)->required();
    local_cmd->add_option("--n", o.n)->required();

    auto* verify_cmd = app.add_subcommand("verify-local", "Enumerate matrices over Z/pZ and compare with theory");
    verify_cmd->add_option("--p", o.p)->required();
    verify_cmd->add_option("--k", o.k)->required();
    verify_cmd->add_option("--n", o.n)->required();
    verify_cmd->add_option("--budget", o.budget);

    auto* estimate_cmd = app.add_subcommand("estimate", "Seeded Monte Carlo estimate of the density");
    estimate_cmd->add_option("--k", o.k)->required();
    estimate_cmd->add_option("--n", o.n)->required();
    estimate_cmd->add_option("--bound", o.bound)->required();
    estimate_cmd->add_option("--samples", o.samples)->required();
    estimate_cmd->add_option("--seed", o.seed)->required();
    estimate_cmd->add_option("--shards", o.shards);
    estimate_cmd->add_option("--stream", o.stream)->check(CLI::IsMember({"random", "enumeration"}));
    estimate_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

    auto* exhaustive_cmd = app.add_subcommand("exhaustive", "Exact count over the whole box [-B, B)^(kn)");
    exhaustive_cmd->add_option("--k", o.k)->required();
    exhaustive_cmd->add_option("--n", o.n)->required();
    exhaustive_cmd->add_option("--bound", o.bound)->required();
    exhaustive_cmd->add_option("--budget", o.budget);
    exhaustive_cmd->add_option("--shards", o.shards);

    auto* sweep_cmd = app.add_subcommand("sweep", "Estimates over increasing bounds");
    sweep_cmd->add_option("--k", o.k)->required();
    sweep_cmd->add_option("--n", o.n)->required();
    sweep_cmd->add_option("--bounds", o.bounds)->required()->delimiter(',');
    sweep_cmd->add_option("--samples", o.samples)->required();
    sweep_cmd->add_option("--seed", o.seed)->required();
    sweep_cmd->add_option("--shards", o.shards);
    std::string sweep_format = "csv";
    sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"json", "csv"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (analyze_cmd->parsed()) return analyze(o, out);
        if (density_cmd->parsed()) {
            emit(out, to_json(density_exact(o.k, o.n, o.tol)));
        } else if (limit_cmd->parsed()) {
            emit(out, to_json(density_limit(o.d, o.tol)));
        } else if (zeta_cmd->parsed()) {
            ZetaValue z = zeta(o.j, o.tol);
            emit(out, {{"j", o.j},
                       {"value", to_decimal_string(z.value)},
                       {"abs_error_bound", to_sci_string(z.error_bound)},
                       {"terms", {{"partial_terms", z.terms.partial_terms},
                                  {"correction_terms", z.terms.correction_terms}}}});
        } else if (local_cmd->parsed()) {
            const Rational q = local_density(PrimeSet(o.primes), o.k, o.n);
            json ps = json::array();
            for (auto p : o.primes) ps.push_back(std::to_string(p));
            emit(out, {{"primes", ps}, {"k", o.k}, {"n", o.n}, {"density", rational_string(q)},
                       {"density_decimal", q.get_d()}});
        } else if (verify_cmd->parsed()) {
            require_positive(o.k, "k");
            require_positive(o.n, "n");
            emit(out, to_json(verify_local_density(o.p, static_cast<unsigned>(o.k), static_cast<unsigned>(o.n),
                                                   o.budget)));
        } else if (estimate_cmd->parsed()) {
            const auto stream = o.stream == "random" ? SampleStream::Random : SampleStream::Enumeration;
            EstimateReport r = estimate_density(box(o), o.samples, o.seed, o.shards, stream);
            if (o.format == "csv")
                out << sweep_csv(std::span<const EstimateReport>(&r, 1));
            else
                emit(out, to_json(r));
        } else if (exhaustive_cmd->parsed()) {
            emit(out, to_json(exhaustive_density(box(o), o.budget, o.shards)));
        } else if (sweep_cmd->parsed()) {
            require_positive(o.k, "k");
            require_positive(o.n, "n");
            auto reports = convergence_sweep(static_cast<unsigned>(o.k), static_cast<unsigned>(o.n), o.bounds,
                                             o.samples, o.seed, o.shards);
            if (sweep_format == "csv") {
                out << sweep_csv(reports);
            } else {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(to_json(r));
                emit(out, arr);
            }
        }
        return kOk;
    } catch (const NotUnimodular& e) {
        err << "error: " << e.what() << '\n';
        return kNotUnimodular;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace unimod::cli
