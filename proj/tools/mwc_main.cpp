#include "mwc/bnb.hpp"
#include "mwc/bounds.hpp"
#include "mwc/io.hpp"
#include "mwc/oracle.hpp"
#include "mwc/peel.hpp"
#include "mwc/report.hpp"
#include "mwc/scheduler.hpp"
#include "mwc/trace.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

namespace {

using namespace mwc;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;

struct CommonOptions {
    std::uint64_t seed = 1;
    bool seed_given = false;
    int runs = 5;
    double time_limit = 3600.0;
    std::string rules = "all";
    std::string weights = "auto"; // auto: uniform200 when a seed was given
    std::string format;           // text (default) | csv | json
    std::string input_format = "auto";
    bool no_local_search = false;
    bool no_maxsat = false; // disables all three MaxSAT stages
};

void add_common(CLI::App* cmd, CommonOptions& o, double default_time_limit) {
    o.time_limit = default_time_limit;
    cmd->add_option("--seed", o.seed, "base RNG seed")->each([&o](const std::string&) {
        o.seed_given = true;
    });
    cmd->add_option("--runs", o.runs, "runs per instance, averaged (default 5)");
    cmd->add_option("--time-limit", o.time_limit, "seconds per run");
    cmd->add_option("--rules", o.rules, "reduction rule set: old|all")
        ->check(CLI::IsMember({"old", "all"}));
    cmd->add_option("--weights", o.weights, "weight mode for unweighted inputs: unit|uniform200")
        ->check(CLI::IsMember({"unit", "uniform200", "auto"}));
    cmd->add_option("--format", o.format, "report format: text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--input-format", o.input_format,
                    "instance format (default: by extension)")
        ->check(CLI::IsMember({"auto", "dimacs", "metis", "edgelist"}));
    cmd->add_flag("--no-local-search", o.no_local_search, "disable interleaved local search");
    cmd->add_flag("--no-maxsat", o.no_maxsat, "disable MaxSAT reasoning in the exact solver");
}

ParsedInstance load_instance(const std::string& path, const CommonOptions& o) {
    if (o.input_format == "dimacs")
        return parse_instance_file(path, InstanceFormat::dimacs_clique);
    if (o.input_format == "metis") return parse_instance_file(path, InstanceFormat::metis);
    if (o.input_format == "edgelist")
        return parse_instance_file(path, InstanceFormat::edge_list);
    return parse_instance_file(path);
}

RuleSet rule_set(const CommonOptions& o) {
    return o.rules == "old" ? RuleSet::old_rules : RuleSet::all_rules;
}

// fresh weighted copy for one run
WeightedGraph instance_graph(const ParsedInstance& parsed, const CommonOptions& o,
                             std::uint64_t run_seed) {
    WeightedGraph g = parsed.graph;
    bool draw = !parsed.has_weights &&
                (o.weights == "uniform200" || (o.weights == "auto" && o.seed_given));
    if (draw) assign_weights(g, run_seed);
    return g;
}

SchedulerConfig scheduler_config(const CommonOptions& o, std::uint64_t run_seed) {
    SchedulerConfig cfg;
    cfg.seed = run_seed;
    cfg.ls_interleave = !o.no_local_search;
    return cfg;
}

struct RunOutcome {
    Clique clique;
    double t_sol = 0.0;
    double t_prv = 0.0;
    bool proven = false;
    std::size_t kernel_n = 0, kernel_m = 0;
    std::array<std::uint64_t, kRuleCount> removals{};
    std::string termination;
};

void collect_rule_removals(const ReduceStats& stats, RunOutcome& out) {
    for (std::size_t i = 0; i < kRuleCount; ++i)
        out.removals[i] +=
            stats.per_rule[i].vertices_removed + stats.per_rule[i].edges_removed;
}

RunOutcome run_reduce(const WeightedGraph& input, const CommonOptions& o,
                      std::uint64_t run_seed) {
    RunOutcome out;
    auto t0 = Clock::now();
    auto now = [&] { return std::chrono::duration<double>(Clock::now() - t0).count(); };
    WeightedGraph g = input;
    ReductionTrace trace;
    BestClique best{initial_clique(g)};
    out.t_sol = now();
    ReduceStats stats = reduce(g, best, trace, scheduler_config(o, run_seed), rule_set(o));
    if (stats.last_improvement_s > 0) out.t_sol = stats.last_improvement_s;
    collect_rule_removals(stats, out);
    out.kernel_n = g.n();
    out.kernel_m = g.m();
    out.clique = best.clique;
    out.t_prv = now();
    out.proven = false;
    out.termination = "reduced";
    return out;
}

WeightedGraph reduce_to_kernel(const WeightedGraph& input, const CommonOptions& o,
                               std::uint64_t run_seed) {
    WeightedGraph g = input;
    ReductionTrace trace;
    BestClique best{initial_clique(g)};
    reduce(g, best, trace, scheduler_config(o, run_seed), rule_set(o));
    return g.compact().graph;
}

RunOutcome run_exact(const WeightedGraph& input, const CommonOptions& o,
                     std::uint64_t run_seed) {
    RunOutcome out;
    auto t0 = Clock::now();
    auto now = [&] { return std::chrono::duration<double>(Clock::now() - t0).count(); };
    WeightedGraph g = input;
    ReductionTrace trace;
    BestClique best{initial_clique(g)};
    out.t_sol = now();
    ReduceStats stats = reduce(g, best, trace, scheduler_config(o, run_seed), rule_set(o));
    if (stats.last_improvement_s > 0) out.t_sol = stats.last_improvement_s;
    collect_rule_removals(stats, out);
    out.kernel_n = g.n();
    out.kernel_m = g.m();

    bool proven = true;
    if (g.n() > 0) {
        auto [kernel, orig_ids] = g.compact();
        SolveOptions opts;
        opts.use_binary_maxsat = opts.use_ordered_maxsat = opts.use_unit_propagation =
            !o.no_maxsat;
        opts.floor = best.weight();
        double solve_offset = now();
        opts.time_limit_s = std::max(0.0, o.time_limit - solve_offset);
        SolveResult sr = solve_exact(kernel, initial_clique(kernel), opts);
        proven = sr.proven;
        if (sr.best.weight > best.weight()) {
            std::vector<VertexId> lifted;
            for (VertexId v : sr.best.members) lifted.push_back(orig_ids[v]);
            if (best.maybe_adopt(reconstruct(trace, Clique{std::move(lifted), sr.best.weight})))
                out.t_sol = solve_offset + sr.stats.t_best_s;
        }
    }
    out.clique = best.clique;
    out.proven = proven;
    out.t_prv = now();
    out.termination = proven ? "optimal" : "time limit";
    return out;
}

RunOutcome run_heuristic(const WeightedGraph& input, const CommonOptions& o,
                         std::uint64_t run_seed) {
    PeelConfig cfg;
    cfg.scheduler = scheduler_config(o, run_seed);
    cfg.exact.use_binary_maxsat = cfg.exact.use_ordered_maxsat =
        cfg.exact.use_unit_propagation = !o.no_maxsat;
    cfg.time_limit_s = o.time_limit;
    PeelResult pr = mwc_peel(input, cfg);
    RunOutcome out;
    out.clique = pr.best;
    out.t_sol = pr.stats.t_best_s;
    out.t_prv = pr.stats.elapsed_s;
    // with no peeling and a fully solved residue the result is exact
    out.proven = pr.stats.rounds == 0 && !pr.stats.restored_snapshot &&
                 pr.stats.residue_solved_exactly;
    out.kernel_n = pr.stats.residue_n;
    out.kernel_m = pr.stats.residue_m;
    collect_rule_removals(pr.stats.first_reduce, out);
    out.termination = pr.stats.stop_reason.empty() ? "done" : pr.stats.stop_reason;
    return out;
}

SolveReport average_runs(const std::string& name, const ParsedInstance& parsed,
                         const CommonOptions& o,
                         RunOutcome (*runner)(const WeightedGraph&, const CommonOptions&,
                                              std::uint64_t)) {
    SolveReport rep;
    rep.instance = name;
    rep.n = parsed.graph.n();
    rep.m = parsed.graph.m();
    rep.density = rep.n > 1 ? 2.0 * static_cast<double>(rep.m) /
                                  (static_cast<double>(rep.n) * static_cast<double>(rep.n - 1))
                            : 0.0;
    rep.seed = o.seed;
    int runs = std::max(1, o.runs);
    double t_prv_sum = 0.0;
    int proven_count = 0;
    Weight best_seen = -1;
    std::array<std::uint64_t, kRuleCount> removal_sum{};
    for (int r = 0; r < runs; ++r) {
        std::uint64_t run_seed = o.seed + static_cast<std::uint64_t>(r);
        WeightedGraph g = instance_graph(parsed, o, run_seed);
        WeightedGraph pristine = g;
        RunOutcome run = runner(g, o, run_seed);
        if (!pristine.validate_clique(run.clique))
            throw std::runtime_error("internal error: reported clique failed validation on " +
                                     name);
        rep.kernel_n += static_cast<double>(run.kernel_n);
        rep.kernel_m += static_cast<double>(run.kernel_m);
        rep.w_best += static_cast<double>(run.clique.weight);
        rep.t_sol += run.t_sol;
        if (run.proven) {
            ++proven_count;
            t_prv_sum += run.t_prv;
        }
        for (std::size_t i = 0; i < kRuleCount; ++i) removal_sum[i] += run.removals[i];
        if (run.clique.weight > best_seen) {
            best_seen = run.clique.weight;
            rep.witness = run.clique.members;
            rep.termination = run.termination;
        }
    }
    double k = static_cast<double>(runs);
    rep.kernel_n /= k;
    rep.kernel_m /= k;
    rep.w_best /= k;
    rep.t_sol /= k;
    rep.proven = static_cast<double>(proven_count) / k;
    if (proven_count == runs) rep.t_prv = t_prv_sum / k;
    for (std::size_t i = 0; i < kRuleCount; ++i)
        if (removal_sum[i] > 0)
            rep.rule_removals[rule_name(static_cast<Rule>(i))] =
                removal_sum[i] / static_cast<std::uint64_t>(runs);
    return rep;
}

void emit(const std::vector<SolveReport>& rows, const CommonOptions& o, bool footer,
          const std::string& default_format) {
    std::string format = o.format.empty() ? default_format : o.format;
    if (format == "csv") {
        write_csv(std::cout, rows, footer);
    } else if (format == "json") {
        write_json(std::cout, rows, footer);
    } else {
        for (const auto& r : rows) write_text(std::cout, r);
    }
}

int cmd_solve(const std::string& path, const CommonOptions& o,
              RunOutcome (*runner)(const WeightedGraph&, const CommonOptions&, std::uint64_t),
              const std::string& kernel_out_path = "") {
    ParsedInstance parsed = load_instance(path, o);
    SolveReport rep = average_runs(std::filesystem::path(path).filename().string(), parsed, o,
                                   runner);
    emit({rep}, o, false, "text");
    if (!kernel_out_path.empty()) {
        WeightedGraph kernel = reduce_to_kernel(instance_graph(parsed, o, o.seed), o, o.seed);
        std::ofstream f(kernel_out_path);
        if (!f) throw std::runtime_error("cannot write " + kernel_out_path);
        serialize_dimacs(kernel, f);
    }
    return kExitOk;
}

int cmd_oracle(const std::string& path, const CommonOptions& o) {
    ParsedInstance parsed = load_instance(path, o);
    WeightedGraph g = instance_graph(parsed, o, o.seed);
    if (g.n() > 35) {
        std::cerr << "oracle: instance has " << g.n() << " vertices (limit 35)\n";
        return kExitUsage;
    }
    Clique best = brute_force_opt(g);
    std::cout << "w = " << best.weight << "\nclique =";
    for (VertexId v : best.members) std::cout << " " << v + 1;
    std::cout << "\n";
    return kExitOk;
}

int cmd_bench(const std::string& dir, const CommonOptions& o, const std::string& solver) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    auto runner = solver == "heuristic" ? run_heuristic : run_exact;
    std::vector<SolveReport> rows;
    for (const auto& f : files) {
        ParsedInstance parsed = load_instance(f.string(), o);
        rows.push_back(average_runs(f.filename().string(), parsed, o, runner));
    }
    emit(rows, o, true, "csv");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum weight clique toolkit: kernelization, exact search, peeling"};
    app.require_subcommand(1);

    CommonOptions reduce_opts, exact_opts, heur_opts, oracle_opts, bench_opts;
    std::string reduce_path, exact_path, heur_path, oracle_path, bench_dir;
    std::string kernel_out, bench_solver = "exact";

    auto* reduce_cmd = app.add_subcommand("reduce", "kernelize an instance and report stats");
    reduce_cmd->add_option("instance", reduce_path, "instance file")->required();
    add_common(reduce_cmd, reduce_opts, 3600.0);
    reduce_cmd->add_option("--out", kernel_out, "write the kernel as DIMACS to this file");

    auto* exact_cmd = app.add_subcommand("exact", "reduce, then solve exactly (MWCRedu)");
    exact_cmd->add_option("instance", exact_path, "instance file")->required();
    add_common(exact_cmd, exact_opts, 3600.0);

    auto* heur_cmd = app.add_subcommand("heuristic", "reduce-and-peel solver (MWCPeel)");
    heur_cmd->add_option("instance", heur_path, "instance file")->required();
    add_common(heur_cmd, heur_opts, 1000.0);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force optimum (n <= 35)");
    oracle_cmd->add_option("instance", oracle_path, "instance file")->required();
    add_common(oracle_cmd, oracle_opts, 3600.0);

    auto* bench_cmd = app.add_subcommand("bench", "run a directory of instances");
    bench_cmd->add_option("dir", bench_dir, "instance directory")->required();
    add_common(bench_cmd, bench_opts, 3600.0);
    bench_cmd->add_option("--solver", bench_solver, "exact|heuristic")
        ->check(CLI::IsMember({"exact", "heuristic"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (reduce_cmd->parsed()) return cmd_solve(reduce_path, reduce_opts, run_reduce, kernel_out);
        if (exact_cmd->parsed()) return cmd_solve(exact_path, exact_opts, run_exact);
        if (heur_cmd->parsed()) return cmd_solve(heur_path, heur_opts, run_heuristic);
        if (oracle_cmd->parsed()) return cmd_oracle(oracle_path, oracle_opts);
        if (bench_cmd->parsed()) return cmd_bench(bench_dir, bench_opts, bench_solver);
    } catch (const mwc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
