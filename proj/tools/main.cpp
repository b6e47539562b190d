// Command-line surface for the patrol planner: scenario generation, route
// planning, batch evaluation, simulation, the Hamiltonian-path reduction and
// TSPLIB interop. Exit codes: 0 ok, 2 validation/usage, 3 infeasible, 4 I/O.

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "aoi_patrol/construction.hpp"
#include "aoi_patrol/errors.hpp"
#include "aoi_patrol/exact.hpp"
#include "aoi_patrol/json_io.hpp"
#include "aoi_patrol/local_search.hpp"
#include "aoi_patrol/metrics.hpp"
#include "aoi_patrol/scenarios.hpp"
#include "aoi_patrol/simulate.hpp"

namespace fs = std::filesystem;
using namespace aoi_patrol;

namespace {

std::string format_seconds(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

int worker_count(std::size_t jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("AOI_PATROL_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return static_cast<int>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

Scenario load_scenario(const fs::path& path) {
    Scenario s = read_scenario(path);
    const auto report = validate(s.instance);
    if (!is_valid(report)) {
        std::string msg = path.string() + " failed validation:";
        for (const auto& v : report) {
            if (v.is_error()) msg += "\n  " + v.message;
        }
        throw ValidationError(msg);
    }
    return s;
}

Route plan_route(const Instance& inst, const std::string& algo, std::uint64_t seed) {
    ImproverConfig cfg;
    cfg.seed = seed;
    if (algo == "greedy") return nearest_neighbor(inst);
    if (algo == "srtt") return srtt(inst);
    if (algo == "enforced") return enforced(inst);
    if (algo == "dp") return dp_optimal(inst);
    if (algo == "ls") return ls_route(inst, cfg);
    if (algo == "hybrid") return hybrid(inst, cfg);
    throw ValidationError("unknown algorithm: " + algo);
}

// Runs an external TSP solver in the LKH parameter-file convention against a
// TSPLIB export of the instance and reads the tour back.
Route external_route(const Instance& inst, const std::string& solver, std::uint64_t seed) {
    const fs::path dir = fs::temp_directory_path() / ("aoi_patrol_solver_" + std::to_string(
                             static_cast<unsigned long long>(::getpid())));
    fs::create_directories(dir);
    const fs::path problem = dir / "instance.tsp";
    const fs::path tour = dir / "instance.tour";
    const fs::path par = dir / "instance.par";
    export_tsplib(inst, problem);
    {
        std::ofstream out(par);
        out << "PROBLEM_FILE = " << problem.string() << "\n"
            << "TOUR_FILE = " << tour.string() << "\n"
            << "RUNS = 1\n"
            << "SEED = " << seed << "\n";
        if (!out) throw IoError("cannot write " + par.string());
    }
    const std::string cmd = solver + " " + par.string();
    if (std::system(cmd.c_str()) != 0) {
        throw IoError("external solver failed: " + cmd);
    }
    Route route = import_tour(inst, tour);
    fs::remove_all(dir);
    return route;
}

struct EvalRecord {
    std::string scenario_id;
    int n_data = 0;
    std::string distribution;
    std::string algorithm;
    double mai_s = 0.0;
    std::optional<double> normalized_mai;
    double round_trip_s = 0.0;
    double plan_time_ms = 0.0;
};

// --- gen ---------------------------------------------------------------

int cmd_gen(int n, std::string dist, int count, std::uint64_t seed, double area, double speed,
            const fs::path& out_dir) {
    if (area <= 0.0) area = n <= 8 ? 1000.0 : 8000.0;
    const Distribution d = distribution_from_string(dist);
    fs::create_directories(out_dir);
    for (int i = 0; i < count; ++i) {
        ScenarioConfig cfg;
        cfg.n_data = n;
        cfg.area_m = area;
        cfg.distribution = d;
        cfg.seed = seed + static_cast<std::uint64_t>(i);
        cfg.speed_mps = speed;
        const Scenario s = gen_scenario(cfg);
        write_scenario(s, out_dir / ("scenario_" + s.id + ".json"));
    }
    std::cout << "wrote " << count << " scenario file(s) to " << out_dir.string() << "\n";
    return 0;
}

// --- plan --------------------------------------------------------------

int cmd_plan(const fs::path& scenario_path, const std::string& algo, std::uint64_t seed,
             const std::string& solver, const fs::path& out) {
    const Scenario s = load_scenario(scenario_path);
    const auto start = std::chrono::steady_clock::now();
    const Route route = solver.empty() ? plan_route(s.instance, algo, seed)
                                       : external_route(s.instance, solver, seed);
    const auto elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start).count();

    const std::string json = route_to_json(s.instance, route, solver.empty() ? algo : "external");
    std::cout << json;
    std::fprintf(stderr, "plan_time_ms %.3f\n", elapsed);
    if (!out.empty()) {
        std::ofstream file(out);
        if (!file) throw IoError("cannot write " + out.string());
        file << json;
    }
    return 0;
}

// --- eval --------------------------------------------------------------

int cmd_eval(const std::vector<fs::path>& scenario_paths, const std::string& algos_csv,
             const std::string& normalize_by, const fs::path& out, bool no_timing,
             std::uint64_t seed) {
    if (scenario_paths.empty()) throw ValidationError("no scenario files given");
    std::vector<std::string> algos;
    {
        std::stringstream ss(algos_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) algos.push_back(item);
        }
    }
    if (algos.empty()) throw ValidationError("no algorithms given");
    const bool normalize = normalize_by == "dp";
    if (!normalize && normalize_by != "none") {
        throw ValidationError("--normalize-by must be dp or none");
    }

    // One result slot per scenario keeps the output order deterministic no
    // matter how the workers interleave.
    std::vector<std::vector<EvalRecord>> per_scenario(scenario_paths.size());
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= scenario_paths.size()) return;
            try {
                const Scenario s = load_scenario(scenario_paths[idx]);
                std::optional<double> dp_mai;
                if (normalize) {
                    dp_mai = route_mai(s.instance, dp_optimal(s.instance));
                }
                for (const auto& algo : algos) {
                    const auto start = std::chrono::steady_clock::now();
                    const Route route = plan_route(s.instance, algo, seed);
                    const double ms = std::chrono::duration<double, std::milli>(
                                          std::chrono::steady_clock::now() - start).count();
                    EvalRecord rec;
                    rec.scenario_id = s.id;
                    rec.n_data = s.instance.n_data;
                    rec.distribution = s.distribution;
                    rec.algorithm = algo;
                    rec.mai_s = route_mai(s.instance, route);
                    rec.round_trip_s = round_trip(s.instance, route);
                    rec.plan_time_ms = no_timing ? 0.0 : ms;
                    if (dp_mai) rec.normalized_mai = rec.mai_s / *dp_mai;
                    per_scenario[idx].push_back(rec);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    const int workers = worker_count(scenario_paths.size());
    std::vector<std::thread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    // Rows grouped by algorithm, each group sorted by normalized MAI (or raw
    // MAI without normalization) so the CSV plots directly as a curve.
    std::vector<EvalRecord> rows;
    for (const auto& algo : algos) {
        std::vector<EvalRecord> group;
        for (const auto& bucket : per_scenario) {
            for (const auto& rec : bucket) {
                if (rec.algorithm == algo) group.push_back(rec);
            }
        }
        std::stable_sort(group.begin(), group.end(), [](const EvalRecord& a, const EvalRecord& b) {
            const double ka = a.normalized_mai.value_or(a.mai_s);
            const double kb = b.normalized_mai.value_or(b.mai_s);
            return ka < kb;
        });
        rows.insert(rows.end(), group.begin(), group.end());
    }

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file) throw IoError("cannot write " + out.string());
        os = &file;
    }
    *os << "scenario_id,n_data,distribution,algorithm,mai_s,normalized_mai,round_trip_s,"
           "plan_time_ms\n";
    char buf[128];
    for (const auto& r : rows) {
        *os << r.scenario_id << ',' << r.n_data << ',' << r.distribution << ',' << r.algorithm
            << ',' << format_seconds(r.mai_s) << ',';
        if (r.normalized_mai) *os << format_seconds(*r.normalized_mai);
        std::snprintf(buf, sizeof(buf), ",%.9f,%.3f\n", r.round_trip_s, r.plan_time_ms);
        *os << buf;
    }
    if (!*os) throw IoError("write failed for " + out.string());

    // Per-algorithm summary: mean normalized MAI and optimal-hit counts.
    for (const auto& algo : algos) {
        double sum = 0.0;
        int count = 0;
        int wins = 0;
        for (const auto& r : rows) {
            if (r.algorithm != algo || !r.normalized_mai) continue;
            sum += *r.normalized_mai;
            ++count;
            if (*r.normalized_mai <= 1.0 + 1e-9) ++wins;
        }
        if (count > 0) {
            std::fprintf(stderr, "%-10s mean_normalized_mai %.6f optimal %d/%d\n", algo.c_str(),
                         sum / count, wins, count);
        }
    }
    return 0;
}

// --- simulate ----------------------------------------------------------

int cmd_simulate(const fs::path& scenario_path, const fs::path& route_path,
                 const std::string& process, double delta, double interval, double phase,
                 double rate, std::uint64_t proc_seed, int cycles, const fs::path& out) {
    const Scenario s = load_scenario(scenario_path);
    const Route route = read_route(s.instance, route_path);

    GenerationProcess proc;
    if (process == "worst_case") {
        proc = GenerationProcess::worst_case(delta);
    } else if (process == "periodic") {
        proc = GenerationProcess::periodic(interval, phase);
    } else if (process == "poisson") {
        proc = GenerationProcess::poisson(rate, proc_seed);
    } else {
        throw ValidationError("unknown process: " + process);
    }

    const AoiTrace trace = run(s.instance, route, proc, cycles);
    if (!out.empty()) write_trace_csv(trace, out);

    const TraceSummary summary = summarize(trace);
    std::cout << "node,max_aoi_s,mean_aoi_s,packets\n";
    for (const auto& node : summary.per_node) {
        std::cout << node.node << ',' << format_seconds(node.max_aoi) << ','
                  << format_seconds(node.mean_aoi) << ',' << node.packets << "\n";
    }
    std::cout << "route_max_aoi_s " << format_seconds(summary.route_max_aoi) << "\n";
    return 0;
}

// --- reduce ------------------------------------------------------------

int cmd_reduce(const fs::path& graph_path, int n_vertices, const fs::path& out) {
    std::ifstream in(graph_path);
    if (!in) throw IoError("cannot read " + graph_path.string());
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::string line;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        int u, v;
        if (!(ss >> u >> v)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw ValidationError("malformed edge line: " + line);
        }
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    if (n_vertices <= 0) n_vertices = max_vertex + 1;
    if (n_vertices < 2) throw ValidationError("edge list defines fewer than 2 vertices");

    const Instance inst = ham_path_reduction(n_vertices, edges);
    Scenario s;
    s.instance = inst;
    s.distribution = "reduction";
    s.id = "reduction_" + std::to_string(n_vertices);
    if (!out.empty()) write_scenario(s, out);

    if (n_vertices <= HK_LIMIT) {
        const double mai = route_mai(inst, dp_optimal(inst));
        const bool yes = mai <= 2.0 * n_vertices + 1.0 + inst.tol();
        std::cout << "HAM-PATH: " << (yes ? "yes" : "no") << " (optimal MAI "
                  << format_seconds(mai) << ")\n";
    } else {
        std::cout << "HAM-PATH: unknown (instance too large for the exact solver)\n";
    }
    return 0;
}

// --- tsplib interop ----------------------------------------------------

int cmd_export_tsplib(const fs::path& scenario_path, const fs::path& out) {
    const Scenario s = load_scenario(scenario_path);
    export_tsplib(s.instance, out);
    std::cout << "wrote " << out.string() << "\n";
    return 0;
}

int cmd_import_tour(const fs::path& scenario_path, const fs::path& tour_path,
                    const fs::path& out) {
    const Scenario s = load_scenario(scenario_path);
    const Route route = import_tour(s.instance, tour_path);
    const std::string json = route_to_json(s.instance, route, "imported");
    std::cout << json;
    if (!out.empty()) {
        std::ofstream file(out);
        if (!file) throw IoError("cannot write " + out.string());
        file << json;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Drone patrol route planner minimizing the maximum age of information"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate synthetic scenario files");
    int gen_n = 8;
    std::string gen_dist = "grid";
    int gen_count = 100;
    std::uint64_t gen_seed = 0;
    double gen_area = 0.0;
    double gen_speed = 20.0;
    fs::path gen_out = ".";
    gen->add_option("--n", gen_n, "Number of data nodes");
    gen->add_option("--dist", gen_dist, "grid, cluster or outlier");
    gen->add_option("--count", gen_count, "Number of scenarios");
    gen->add_option("--seed", gen_seed, "Base seed; scenario i uses seed + i");
    gen->add_option("--area", gen_area, "Area side length in meters (default 1000 for n <= 8, 8000 above)");
    gen->add_option("--speed", gen_speed, "Drone speed in m/s");
    gen->add_option("--out", gen_out, "Output directory");

    // plan
    auto* plan = app.add_subcommand("plan", "Plan a route for one scenario");
    fs::path plan_scenario;
    std::string plan_algo = "enforced";
    std::uint64_t plan_seed = 1;
    std::string plan_solver;
    fs::path plan_out;
    plan->add_option("--scenario", plan_scenario, "Scenario JSON file")->required();
    plan->add_option("--algo", plan_algo, "greedy, srtt, enforced, dp, ls or hybrid");
    plan->add_option("--seed", plan_seed, "Seed for randomized restarts");
    plan->add_option("--external-solver", plan_solver,
                     "TSP solver binary invoked as <path> <parfile>");
    plan->add_option("--out", plan_out, "Route JSON output file");

    // eval
    auto* eval = app.add_subcommand("eval", "Batch-evaluate algorithms over scenarios");
    std::vector<fs::path> eval_scenarios;
    std::string eval_algos = "greedy,srtt,enforced,hybrid,dp";
    std::string eval_norm = "dp";
    fs::path eval_out;
    bool eval_no_timing = false;
    std::uint64_t eval_seed = 1;
    eval->add_option("scenarios", eval_scenarios, "Scenario JSON files")->required();
    eval->add_option("--algos", eval_algos, "Comma-separated algorithm list");
    eval->add_option("--normalize-by", eval_norm, "dp or none");
    eval->add_option("--out", eval_out, "Results CSV (default stdout)");
    eval->add_flag("--no-timing", eval_no_timing, "Zero the timing column for reproducible output");
    eval->add_option("--seed", eval_seed, "Seed for randomized restarts");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Replay a route and trace packet ages");
    fs::path sim_scenario, sim_route, sim_out;
    std::string sim_process = "worst_case";
    double sim_delta = 0.0, sim_interval = 1.0, sim_phase = 0.0, sim_rate = 1.0;
    std::uint64_t sim_seed = 0;
    int sim_cycles = 10;
    sim->add_option("--scenario", sim_scenario, "Scenario JSON file")->required();
    sim->add_option("--route", sim_route, "Route JSON file")->required();
    sim->add_option("--process", sim_process, "worst_case, periodic or poisson");
    sim->add_option("--delta", sim_delta, "worst_case: generation lag after departure, seconds");
    sim->add_option("--interval", sim_interval, "periodic: seconds between packets");
    sim->add_option("--phase", sim_phase, "periodic: time of the first packet");
    sim->add_option("--rate", sim_rate, "poisson: packets per second per node");
    sim->add_option("--proc-seed", sim_seed, "poisson: stream seed");
    sim->add_option("--cycles", sim_cycles, "Number of patrol cycles");
    sim->add_option("--out", sim_out, "Trace CSV output file");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Hamiltonian-path reduction from an edge list");
    fs::path red_graph, red_out;
    int red_n = 0;
    reduce->add_option("--graph", red_graph, "Edge list file, 'u v' per line, 0-based")->required();
    reduce->add_option("--n-vertices", red_n, "Vertex count (default: max index + 1)");
    reduce->add_option("--out", red_out, "Instance JSON output file");

    // export-tsplib / import-tour
    auto* exp = app.add_subcommand("export-tsplib", "Write a scenario in TSPLIB95 format");
    fs::path exp_scenario, exp_out;
    exp->add_option("--scenario", exp_scenario, "Scenario JSON file")->required();
    exp->add_option("--out", exp_out, "TSPLIB output file")->required();

    auto* imp = app.add_subcommand("import-tour", "Read a TSPLIB tour as a route");
    fs::path imp_scenario, imp_tour, imp_out;
    imp->add_option("--scenario", imp_scenario, "Scenario JSON file")->required();
    imp->add_option("--tour", imp_tour, "TSPLIB .tour file")->required();
    imp->add_option("--out", imp_out, "Route JSON output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(gen_n, gen_dist, gen_count, gen_seed, gen_area, gen_speed, gen_out);
        }
        if (plan->parsed()) {
            return cmd_plan(plan_scenario, plan_algo, plan_seed, plan_solver, plan_out);
        }
        if (eval->parsed()) {
            return cmd_eval(eval_scenarios, eval_algos, eval_norm, eval_out, eval_no_timing,
                            eval_seed);
        }
        if (sim->parsed()) {
            return cmd_simulate(sim_scenario, sim_route, sim_process, sim_delta, sim_interval,
                                sim_phase, sim_rate, sim_seed, sim_cycles, sim_out);
        }
        if (reduce->parsed()) {
            return cmd_reduce(red_graph, red_n, red_out);
        }
        if (exp->parsed()) {
            return cmd_export_tsplib(exp_scenario, exp_out);
        }
        if (imp->parsed()) {
            return cmd_import_tour(imp_scenario, imp_tour, imp_out);
        }
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
