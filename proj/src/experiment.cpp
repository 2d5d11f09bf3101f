#include "dyts/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dyts/error.hpp"

namespace dyts {

namespace fs = std::filesystem;

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

std::string format_sci(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2E", value);
    return buf;
}

std::string run_stem(const RunRecord& r) {
    return std::string(problem_name(r.problem)) + "_" + r.policy.file_label() + "_" + std::to_string(r.seed);
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + path.string());
    return out;
}

constexpr const char* kRunsHeader =
    "problem,policy,seed,evaluations,generations,replacements,front_size,final_igd,final_hv\n";

std::string runs_row(const RunRecord& r) {
    std::ostringstream os;
    os << problem_name(r.problem) << ',' << r.policy.name() << ',' << r.seed << ',' << r.evaluations << ','
       << r.generations << ',' << r.replacements << ',' << r.front.size() << ',' << format_real(r.final_igd) << ','
       << format_real(r.final_hv) << '\n';
    return os.str();
}

void write_run_files(const fs::path& dir, const RunRecord& r) {
    write_points(dir / ("front_" + run_stem(r) + ".dat"), r.front);

    auto ops = open_out(dir / ("operators_" + run_stem(r) + ".csv"));
    ops << "window_start_generation";
    for (OperatorId op : kOperatorPool) ops << ',' << operator_name(op);
    for (std::size_t k = 0; k < kOperatorCount; ++k) ops << ",alpha_" << operator_name(kOperatorPool[k]) << ",beta_"
                                                         << operator_name(kOperatorPool[k]);
    ops << '\n';
    for (const auto& w : r.usage) {
        ops << w.first_generation;
        for (std::size_t c : w.counts) ops << ',' << c;
        for (const auto& arm : w.arms) ops << ',' << format_real(arm.alpha) << ',' << format_real(arm.beta);
        ops << '\n';
    }

    if (!r.snapshots.empty()) {
        auto snap = open_out(dir / ("snapshots_" + run_stem(r) + ".csv"));
        snap << "evaluations,igd,hv\n";
        for (const auto& s : r.snapshots) {
            snap << s.evaluations << ',' << format_real(s.igd) << ',' << format_real(s.hv) << '\n';
        }
    }
}

void write_summary(const fs::path& dir, const std::vector<SummaryRow>& rows) {
    auto out = open_out(dir / "summary.csv");
    out << "problem,policy,runs,igd_mean,igd_std,igd_median,hv_mean,hv_std,hv_median,igd_vs_dyts,igd_p,hv_vs_dyts,"
           "hv_p\n";
    for (const auto& s : rows) {
        out << problem_name(s.problem) << ',' << s.policy.name() << ',' << s.runs << ',' << format_real(s.igd_mean)
            << ',' << format_real(s.igd_std) << ',' << format_real(s.igd_median) << ',' << format_real(s.hv_mean)
            << ',' << format_real(s.hv_std) << ',' << format_real(s.hv_median) << ',' << s.igd_vs_dyts << ','
            << format_real(s.igd_p) << ',' << s.hv_vs_dyts << ',' << format_real(s.hv_p) << '\n';
    }

    // Human-readable table: mean(std) with the rank-sum symbol against DYTS.
    auto table = open_out(dir / "table.txt");
    table << "problem  policy                 IGD mean(std)            HV mean(std)\n";
    for (const auto& s : rows) {
        char line[256];
        const std::string igd = format_sci(s.igd_mean) + "(" + format_sci(s.igd_std) + ")" + s.igd_vs_dyts;
        const std::string hv = format_sci(s.hv_mean) + "(" + format_sci(s.hv_std) + ")" + s.hv_vs_dyts;
        std::snprintf(line, sizeof line, "%-8s %-22s %-24s %s\n", std::string(problem_name(s.problem)).c_str(),
                      s.policy.name().c_str(), igd.c_str(), hv.c_str());
        table << line;
    }
}

std::string comparison_symbol(Verdict v) {
    // Mirrors the convention "+ better than DYTS, - worse, ~ similar".
    switch (v) {
    case Verdict::ABetter: return "+";
    case Verdict::BBetter: return "-";
    case Verdict::NoDifference: return "~";
    }
    return "~";
}

} // namespace

AlgoConfig default_config(ProblemId id) {
    AlgoConfig c;
    c.neighborhood_size = 20;
    c.delta_prob = 0.8;
    c.threshold_c = 100.0;
    c.utility_period = 50;
    c.dra_update_interval = 50;
    if (is_wfg(id)) {
        c.population_size = 100;
        c.max_evaluations = 25000;
    } else if (Problem(id).num_objectives() == 3) {
        c.population_size = 600;
        c.max_evaluations = 300000;
    } else {
        c.population_size = 300;
        c.max_evaluations = 300000;
    }
    return c;
}

Vec default_hv_reference(ProblemId id) {
    if (is_wfg(id)) return {3.0, 5.0};
    if (Problem(id).num_objectives() == 3) return {2.0, 2.0, 2.0};
    return {2.0, 2.0};
}

RunRecord run_single(const ProblemContext& ctx, const Policy& policy, std::uint64_t seed,
                     std::size_t snapshot_interval) {
    RunRecord record;
    record.problem = ctx.problem.id();
    record.policy = policy;
    record.seed = seed;

    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed, static_cast<std::uint64_t>(ctx.problem.id()));
    EvolveHooks hooks;
    if (snapshot_interval > 0) {
        hooks.snapshot_interval = snapshot_interval;
        hooks.on_snapshot = [&](std::size_t neval, const std::vector<Subproblem>& sps) {
            ObjectiveSet objs;
            objs.reserve(sps.size());
            for (const auto& sp : sps) objs.push_back(sp.incumbent.f);
            const ObjectiveSet front = nondominated_filter(objs);
            record.snapshots.push_back({neval, igd(front, ctx.reference), hypervolume(front, ctx.hv_reference)});
        };
    }
    const EvolutionResult result = evolve(ctx.problem, ctx.config, policy, rng, hooks);
    record.front = nondominated_filter(result.objectives());
    record.final_igd = igd(record.front, ctx.reference);
    record.final_hv = hypervolume(record.front, ctx.hv_reference);
    record.evaluations = result.evaluations;
    record.generations = result.generations;
    record.replacements = result.replacements;
    record.operator_totals = result.operator_totals;
    record.usage = result.usage;
    record.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

void apply_quick_preset(ExperimentConfig& config, bool seeds_given) {
    if (!seeds_given) config.seeds = {1, 2, 3, 4, 5};
    config.budget_divisor = 3;
}

AlgoConfig effective_config(const ExperimentConfig& config, ProblemId id) {
    auto it = config.overrides.find(id);
    AlgoConfig c = it != config.overrides.end() ? it->second : default_config(id);
    if (config.population_size) c.population_size = *config.population_size;
    if (config.max_evaluations) c.max_evaluations = *config.max_evaluations;
    if (config.budget_divisor > 1) c.max_evaluations /= config.budget_divisor;
    return c;
}

void validate_experiment(const ExperimentConfig& config) {
    if (config.problems.empty()) throw ConfigError("no problems selected");
    if (config.policies.empty()) throw ConfigError("no policies selected");
    if (config.seeds.empty()) throw ConfigError("no seeds selected");
    if (config.jobs == 0) throw ConfigError("jobs must be positive");
    if (config.reference_points < 2) throw ConfigError("reference sets need at least two points");
    for (ProblemId id : config.problems) {
        const Problem problem(id);
        validate_config(problem, effective_config(config, id));
        auto hv = config.hv_reference_overrides.find(id);
        if (hv != config.hv_reference_overrides.end() && hv->second.size() != problem.num_objectives()) {
            throw ConfigError("HV reference point for " + std::string(problem.name()) + " has the wrong dimension");
        }
    }
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    const fs::path probe = config.output_dir / ".write_probe";
    {
        std::ofstream out(probe);
        if (!out) throw ConfigError("output directory " + config.output_dir.string() + " is not writable");
    }
    fs::remove(probe, ec);
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& runs) {
    std::vector<std::pair<ProblemId, Policy>> keys;
    for (const auto& r : runs) {
        const auto key = std::make_pair(r.problem, r.policy);
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
    auto collect = [&](ProblemId p, const Policy& pol, bool want_igd) {
        std::vector<double> out;
        for (const auto& r : runs) {
            if (r.problem == p && r.policy == pol) out.push_back(want_igd ? r.final_igd : r.final_hv);
        }
        return out;
    };
    std::vector<SummaryRow> rows;
    for (const auto& [problem, policy] : keys) {
        SummaryRow s;
        s.problem = problem;
        s.policy = policy;
        const auto igds = collect(problem, policy, true);
        const auto hvs = collect(problem, policy, false);
        s.runs = igds.size();
        s.igd_mean = mean(igds);
        s.igd_std = stddev(igds);
        s.igd_median = median(igds);
        s.hv_mean = mean(hvs);
        s.hv_std = stddev(hvs);
        s.hv_median = median(hvs);
        const auto base_igd = collect(problem, Policy::dyts(), true);
        if (!(policy == Policy::dyts()) && !base_igd.empty()) {
            const auto base_hv = collect(problem, Policy::dyts(), false);
            const auto ti = wilcoxon_rank_sum(igds, base_igd, 0.05, Sense::Minimize);
            const auto th = wilcoxon_rank_sum(hvs, base_hv, 0.05, Sense::Maximize);
            s.igd_vs_dyts = comparison_symbol(ti.verdict);
            s.igd_p = ti.p_value;
            s.hv_vs_dyts = comparison_symbol(th.verdict);
            s.hv_p = th.p_value;
        }
        rows.push_back(std::move(s));
    }
    return rows;
}

void write_points(const fs::path& path, const ObjectiveSet& points) {
    auto out = open_out(path);
    for (const auto& p : points) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (k > 0) out << ' ';
            out << format_real(p[k]);
        }
        out << '\n';
    }
}

ObjectiveSet read_points(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path.string());
    ObjectiveSet out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        Vec p;
        double v = 0.0;
        while (ls >> v) p.push_back(v);
        if (!p.empty()) out.push_back(std::move(p));
    }
    return out;
}

ObjectiveSet load_or_build_reference(const Problem& problem, std::size_t count, const fs::path& dir) {
    const fs::path path = dir / (std::string(problem.name()) + "_" + std::to_string(count) + ".txt");
    if (fs::exists(path)) {
        ObjectiveSet cached = read_points(path);
        if (!cached.empty() && cached.front().size() == problem.num_objectives()) return cached;
    }
    ObjectiveSet fresh = sample_true_pf(problem, count);
    std::error_code ec;
    fs::create_directories(dir, ec);
    write_points(path, fresh);
    // Round-trip through text so a cached and a fresh set are bit-identical.
    return read_points(path);
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config) {
    validate_experiment(config);
    const fs::path ref_dir = config.reference_dir.value_or(config.output_dir / "reference");

    std::map<ProblemId, ProblemContext> contexts;
    for (ProblemId id : config.problems) {
        Problem problem(id);
        ObjectiveSet reference = load_or_build_reference(problem, config.reference_points, ref_dir);
        auto hv = config.hv_reference_overrides.find(id);
        Vec hv_ref = hv != config.hv_reference_overrides.end() ? hv->second : default_hv_reference(id);
        contexts.emplace(id, ProblemContext{problem, effective_config(config, id), std::move(reference),
                                            std::move(hv_ref)});
    }

    struct Cell {
        ProblemId problem;
        Policy policy;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (ProblemId p : config.problems) {
        for (const Policy& pol : config.policies) {
            for (std::uint64_t s : config.seeds) cells.push_back({p, pol, s});
        }
    }

    auto runs_csv = open_out(config.output_dir / "runs.csv");
    auto timings = open_out(config.output_dir / "timings.csv");
    runs_csv << kRunsHeader << std::flush;
    timings << "problem,policy,seed,wall_seconds\n";

    std::vector<std::optional<RunRecord>> done(cells.size());
    std::size_t flushed = 0;
    std::string failure;

#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(config.jobs))
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(cells.size()); ++c) {
        const Cell& cell = cells[static_cast<std::size_t>(c)];
        std::optional<RunRecord> record;
        std::string error;
        try {
            record = run_single(contexts.at(cell.problem), cell.policy, cell.seed, config.snapshot_interval);
        } catch (const std::exception& e) {
            error = e.what();
        }
#pragma omp critical(dyts_results)
        {
            if (!error.empty() && failure.empty()) failure = error;
            done[static_cast<std::size_t>(c)] = std::move(record);
            // Rows leave in matrix order so the files do not depend on scheduling.
            while (flushed < done.size() && done[flushed].has_value()) {
                const RunRecord& r = *done[flushed];
                write_run_files(config.output_dir, r);
                runs_csv << runs_row(r) << std::flush;
                timings << problem_name(r.problem) << ',' << r.policy.name() << ',' << r.seed << ','
                        << format_real(r.wall_seconds) << '\n'
                        << std::flush;
                if (!config.quiet) {
                    std::cerr << problem_name(r.problem) << ' ' << r.policy.name() << " seed " << r.seed
                              << ": IGD " << format_sci(r.final_igd) << " HV " << r.final_hv << " ("
                              << r.wall_seconds << " s)\n";
                }
                ++flushed;
            }
        }
    }
    if (!failure.empty()) throw std::runtime_error("run failed: " + failure);

    std::vector<RunRecord> records;
    records.reserve(done.size());
    for (auto& r : done) records.push_back(std::move(*r));
    write_summary(config.output_dir, summarize(records));
    return records;
}

} // namespace dyts
