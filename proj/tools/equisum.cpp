// equisum: construct, verify and benchmark equal-sum partitionings of {1..n}.
//
// Exit codes: 0 ok, 1 negative verdict, 2 infeasible input or precondition,
// 3 arithmetic overflow, 4 malformed input file, 5 search budget exceeded.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equisum/equisum.hpp"

namespace {

using equisum::u64;

enum class Format { text, json, csv };

const std::map<std::string, Format> kFormatNames{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

struct SolveArgs {
    u64 n = 0;
    u64 k = 0;
    std::optional<u64> t;
    bool no_meander = false;
    bool show_matrix = false;
    bool trace = false;
    Format format = Format::text;
};

struct VerifyArgs {
    std::string input;
    Format format = Format::text;
};

struct EnumerateArgs {
    u64 n = 0;
    Format format = Format::text;
};

struct OracleArgs {
    u64 n = 0;
    u64 k = 0;
    std::optional<u64> t;
    std::optional<u64> max_nodes;
    Format format = Format::text;
};

struct BenchArgs {
    std::vector<u64> ns;
    std::optional<u64> k;
    u64 reps = 5;
    bool no_meander = false;
};

u64 derive_target(u64 n, u64 k, const std::optional<u64>& t)
{
    const u64 mass = equisum::delta(n);
    if (!t) {
        if (k == 0 || mass % k != 0)
            throw equisum::InfeasibleSumError("no integer t satisfies k*t = delta("
                                              + std::to_string(n) + ") = " + std::to_string(mass));
        return mass / k;
    }
    return *t; // make_instance cross-checks the given value
}

void emit_partitioning(const equisum::Partitioning& p, Format format)
{
    switch (format) {
    case Format::text:
        std::cout << equisum::render_text(p);
        break;
    case Format::json:
        std::cout << equisum::to_json_string(p) << "\n";
        break;
    case Format::csv:
        std::cout << equisum::render_csv(p);
        break;
    }
}

int cmd_solve(const SolveArgs& args)
{
    const equisum::Instance inst =
        equisum::make_instance(args.n, args.k, derive_target(args.n, args.k, args.t));

    equisum::SolveOptions options;
    options.meander_stop = !args.no_meander;
    if (args.trace)
        options.trace = [](const equisum::TraceRecord& r) {
            std::cerr << to_string(r.tag) << " n=" << r.n_remaining << " k=" << r.slots
                      << " t=" << r.capacity << " placed=" << r.placed << "\n";
        };

    const equisum::SolveResult result = equisum::solve_detailed(inst, options);
    if (args.show_matrix && result.meander) {
        // keep stdout machine-readable in non-text formats
        (args.format == Format::text ? std::cout : std::cerr)
            << equisum::render_matrix(*result.meander);
    }
    emit_partitioning(result.partitioning, args.format);
    return 0;
}

int cmd_verify(const VerifyArgs& args)
{
    std::ifstream in(args.input);
    if (!in)
        throw equisum::MalformedInputError("cannot read file: " + args.input);
    std::stringstream buffer;
    buffer << in.rdbuf();

    const equisum::Partitioning p = equisum::partitioning_from_json(buffer.str());
    const equisum::VerificationReport report = equisum::verify(p);
    if (args.format == Format::json)
        std::cout << equisum::report_to_json(report).dump() << "\n";
    else
        std::cout << equisum::render_report(report);
    return report.valid ? 0 : 1;
}

int cmd_enumerate(const EnumerateArgs& args)
{
    const auto pairs = equisum::enumerate_feasible(args.n);
    const equisum::GaussParams gauss = equisum::gauss_params(args.n);

    equisum::json rows = equisum::json::array();
    if (args.format == Format::csv)
        std::cout << "k,t,meander_applicable,is_gauss\n";
    for (auto [k, t] : pairs) {
        const bool meander = equisum::meander_applicable(args.n, k);
        const bool is_gauss = k == gauss.k_g;
        switch (args.format) {
        case Format::text:
            std::cout << "k=" << k << " t=" << t << (meander ? " [meander]" : "")
                      << (is_gauss ? " [gauss]" : "") << "\n";
            break;
        case Format::csv:
            std::cout << k << "," << t << "," << (meander ? 1 : 0) << "," << (is_gauss ? 1 : 0)
                      << "\n";
            break;
        case Format::json:
            rows.push_back({{"k", k}, {"t", t}, {"meander_applicable", meander},
                            {"is_gauss", is_gauss}});
            break;
        }
    }
    if (args.format == Format::json)
        std::cout << rows.dump() << "\n";
    return 0;
}

int cmd_oracle(const OracleArgs& args)
{
    equisum::OracleLimits limits;
    if (args.max_nodes)
        limits.max_nodes = *args.max_nodes;

    u64 t = 0;
    if (args.t) {
        t = *args.t;
    } else {
        const u64 mass = equisum::delta(args.n);
        if (args.k == 0 || mass % args.k != 0) {
            std::cout << "no partitioning exists: k does not divide delta(n)\n";
            return 1;
        }
        t = mass / args.k;
    }

    const equisum::OracleResult result = equisum::brute_force_solve(args.n, args.k, t, limits);
    switch (result.status) {
    case equisum::OracleStatus::found:
        emit_partitioning(*result.partitioning, args.format);
        return 0;
    case equisum::OracleStatus::no_solution:
        std::cout << "no (" << args.k << "," << t << ")-partitioning of {1.." << args.n
                  << "} exists\n";
        return 1;
    case equisum::OracleStatus::budget_exceeded:
        std::cerr << "verdictless: exceeded " << limits.max_nodes << " search nodes\n";
        return 5;
    }
    return 70;
}

struct BenchRecord {
    u64 n = 0;
    u64 k = 0;
    std::optional<u64> t;
    bool meander_stop = true;
    u64 rep = 0;
    std::optional<u64> wall_ns;
    std::optional<u64> steps;
};

int cmd_bench(const BenchArgs& args)
{
    std::vector<BenchRecord> records;
    for (u64 n : args.ns) {
        u64 k = 0;
        equisum::Instance inst;
        try {
            if (args.k) {
                k = *args.k;
            } else {
                const auto feasible = equisum::enumerate_feasible(n);
                k = feasible.back().first; // list is ascending in k
            }
            inst = equisum::make_instance(n, k, derive_target(n, k, std::nullopt));
        } catch (const equisum::Error& e) {
            std::cerr << "skipping n=" << n << ": " << e.what() << "\n";
            records.push_back({n, k, std::nullopt, !args.no_meander, 0, std::nullopt, std::nullopt});
            continue;
        }
        for (u64 rep = 0; rep < args.reps; ++rep) {
            equisum::SolveOptions options;
            options.meander_stop = !args.no_meander;
            const auto start = std::chrono::steady_clock::now();
            const equisum::SolveResult result = equisum::solve_detailed(inst, options);
            const auto stop = std::chrono::steady_clock::now();
            const u64 ns = static_cast<u64>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
            records.push_back({n, k, inst.t, !args.no_meander, rep, ns, result.steps});
        }
    }

    std::stable_sort(records.begin(), records.end(),
                     [](const BenchRecord& a, const BenchRecord& b) {
                         return std::tie(a.n, a.k, a.rep) < std::tie(b.n, b.k, b.rep);
                     });

    auto out_opt = [](const std::optional<u64>& v) { return v ? std::to_string(*v) : ""; };
    std::cout << "n,k,t,meander_stop,rep,wall_ns,steps\n";
    for (const BenchRecord& r : records)
        std::cout << r.n << "," << r.k << "," << out_opt(r.t) << "," << (r.meander_stop ? 1 : 0)
                  << "," << r.rep << "," << out_opt(r.wall_ns) << "," << out_opt(r.steps) << "\n";

    // median wall time per n, to stderr so stdout stays pure CSV
    std::map<u64, std::vector<u64>> times;
    for (const BenchRecord& r : records)
        if (r.wall_ns)
            times[r.n].push_back(*r.wall_ns);
    for (auto& [n, values] : times) {
        std::sort(values.begin(), values.end());
        std::cerr << "n=" << n << " median_ns=" << values[(values.size() - 1) / 2] << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"equal-sum partitioning of {1..n} into k subsets"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "construct a (k,t)-partitioning");
    solve->add_option("--n", solve_args.n, "element count")->required();
    solve->add_option("--k", solve_args.k, "number of containers")->required();
    solve->add_option("--t", solve_args.t, "target sum (default: delta(n)/k)");
    solve->add_flag("--no-meander", solve_args.no_meander, "disable the meander stop rule");
    solve->add_flag("--show-matrix", solve_args.show_matrix, "print the meander grid when one is used");
    solve->add_flag("--trace", solve_args.trace, "log each recursion step to stderr");
    solve->add_option("--format", solve_args.format, "output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check a partitioning JSON file");
    verify->add_option("--input", verify_args.input, "path to partitioning JSON")->required();
    verify->add_option("--format", verify_args.format, "report format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));

    EnumerateArgs enumerate_args;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list all feasible (k,t) pairs");
    enumerate->add_option("--n", enumerate_args.n, "element count")->required();
    enumerate->add_option("--format", enumerate_args.format, "output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference search (small n)");
    oracle->add_option("--n", oracle_args.n, "element count")->required();
    oracle->add_option("--k", oracle_args.k, "number of containers")->required();
    oracle->add_option("--t", oracle_args.t, "target sum (default: delta(n)/k)");
    oracle->add_option("--max-nodes", oracle_args.max_nodes, "search-node budget");
    oracle->add_option("--format", oracle_args.format, "output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "time solves, emit CSV records");
    bench->add_option("--n", bench_args.ns, "element count (repeatable)")->required();
    bench->add_option("--k", bench_args.k, "container count (default: largest feasible)");
    bench->add_option("--reps", bench_args.reps, "repetitions per instance");
    bench->add_flag("--no-meander", bench_args.no_meander, "disable the meander stop rule");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (solve->parsed())
            return cmd_solve(solve_args);
        if (verify->parsed())
            return cmd_verify(verify_args);
        if (enumerate->parsed())
            return cmd_enumerate(enumerate_args);
        if (oracle->parsed())
            return cmd_oracle(oracle_args);
        if (bench->parsed())
            return cmd_bench(bench_args);
    } catch (const equisum::OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const equisum::InfeasibleSumError& e) {
        std::cerr << "infeasible (k*t != delta(n)): " << e.what() << "\n";
        return 2;
    } catch (const equisum::InfeasibleTargetError& e) {
        std::cerr << "infeasible (t < n): " << e.what() << "\n";
        return 2;
    } catch (const equisum::PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 2;
    } catch (const equisum::NotApplicableError& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return 2;
    } catch (const equisum::MalformedInputError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 4;
    } catch (const equisum::BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 2;
}
