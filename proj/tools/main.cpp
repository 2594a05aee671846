#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mallows/distribution.hpp"
#include "mallows/experiments.hpp"
#include "mallows/hypercube.hpp"
#include "mallows/info.hpp"
#include "mallows/io.hpp"
#include "mallows/process.hpp"
#include "mallows/stats.hpp"

namespace fs = std::filesystem;
using namespace mallows;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitStatFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct io_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_output(const fs::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw io_failure("cannot create directory " + path.parent_path().string());
    }
    std::ofstream out(path);
    if (!out) throw io_failure("cannot open " + path.string() + " for writing");
    return out;
}

// canonical key=value rendering hashed into every output file
std::string config_hash(const std::vector<std::pair<std::string, std::string>>& items) {
    std::string canonical;
    for (const auto& [key, value] : items) canonical += key + "=" + value + "\n";
    return io::hash_hex(io::fnv1a(canonical));
}

std::string format_count(std::int64_t v) { return std::to_string(v); }

void print_reports(const std::vector<stats::GofReport>& reports) {
    for (const auto& r : reports)
        std::cerr << (r.pass ? "  [pass] " : "  [FAIL] ") << r.name
                  << "  statistic=" << r.statistic << " threshold=" << r.threshold << "\n";
}

bool all_pass(const std::vector<stats::GofReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

struct CommonOptions {
    int n = 5;
    std::uint64_t seed = 20240914;
    double horizon = 2.0;
    std::int64_t replications = 1000;
    std::string construction = "birth";
    std::vector<double> t_grid;
    double alpha = 1e-3;
    std::string out_dir = "out";
    int threads = 0;
};

int run_simulate(const CommonOptions& opt, bool emit_sigma, const std::string& replay,
                 const std::string& save_driver) {
    if (opt.n < 1 || opt.replications < 1 || !(opt.horizon > 0.0)) {
        std::cerr << "simulate: need n >= 1, replications >= 1, horizon > 0\n";
        return kExitUsage;
    }
    Construction construction;
    try {
        construction = construction_from_name(opt.construction);
    } catch (const std::exception& e) {
        std::cerr << "simulate: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!replay.empty() || !save_driver.empty()) {
        if (construction != Construction::uniform || opt.replications != 1) {
            std::cerr << "simulate: --replay/--save-driver need --construction uniform "
                         "and --replications 1\n";
            return kExitUsage;
        }
    }

    const std::string hash = config_hash({{"cmd", "simulate"},
                                          {"n", format_count(opt.n)},
                                          {"seed", format_count(static_cast<std::int64_t>(opt.seed))},
                                          {"horizon", io::format_double(opt.horizon)},
                                          {"replications", format_count(opt.replications)},
                                          {"construction", opt.construction},
                                          {"replay", replay}});

    std::vector<ProcessTrajectory> trajectories;
    std::uint64_t ties = 0;
    if (!replay.empty()) {
        std::ifstream in(replay);
        if (!in) {
            std::cerr << "simulate: cannot read driver file " << replay << "\n";
            return kExitIo;
        }
        const UniformDriver driver = io::read_driver_json(in);
        if (driver.size() != opt.n) {
            std::cerr << "simulate: driver size does not match --n\n";
            return kExitUsage;
        }
        trajectories.push_back(simulate_uniform_process(opt.n, opt.horizon, driver));
    } else {
        std::cerr << "simulating " << opt.replications << " replications (n=" << opt.n
                  << ", construction=" << opt.construction << ")...\n";
        trajectories = simulate_batch(opt.n, opt.horizon, construction, opt.replications,
                                      opt.seed, opt.threads, &ties);
    }
    if (ties > 0) std::cerr << "rejected " << ties << " tied replication(s)\n";

    auto events_out = open_output(fs::path(opt.out_dir) / "trajectories.jsonl");
    io::write_trajectories_jsonl(events_out, trajectories, emit_sigma, hash);
    auto summary_out = open_output(fs::path(opt.out_dir) / "summary.csv");
    io::write_summary_csv(summary_out, trajectories, hash);

    if (!save_driver.empty()) {
        const rng::StreamFamily family{opt.seed, 0};
        const UniformDriver driver = UniformDriver::sample(opt.n, family);
        auto driver_out = open_output(save_driver);
        io::write_driver_json(driver_out, driver, hash);
    }
    return kExitPass;
}

int run_validate(const std::string& suite, const CommonOptions& opt, int k) {
    Construction construction;
    try {
        construction = construction_from_name(opt.construction);
    } catch (const std::exception& e) {
        std::cerr << "validate: " << e.what() << "\n";
        return kExitUsage;
    }
    std::vector<double> t_grid = opt.t_grid;

    std::vector<stats::GofReport> reports;
    try {
        if (suite == "marginals") {
            if (t_grid.empty()) t_grid = {0.3, 1.0, 2.0};
            std::cerr << "validating marginals (n=" << opt.n << ", "
                      << opt.replications << " replications)...\n";
            reports = validate_marginals(opt.n, construction, t_grid, opt.replications,
                                         opt.alpha, opt.seed, opt.threads);
        } else if (suite == "jumps") {
            if (opt.n <= 20) {
                const std::int64_t pairs = static_cast<std::int64_t>(opt.n) * (opt.n - 1) / 2;
                const int k_max = std::min<std::int64_t>(k > 0 ? k : 3, pairs);
                std::cerr << "validating exact jumping-time law (n=" << opt.n << ")...\n";
                reports = validate_jump_law(opt.n, k_max, opt.replications, opt.horizon,
                                            opt.alpha, opt.seed, opt.threads, construction);
            } else {
                std::cerr << "validating Poisson limit of jumping times (n=" << opt.n
                          << ")...\n";
                reports = validate_poisson(opt.n, k > 0 ? k : 5, opt.replications, opt.alpha,
                                           opt.seed, opt.threads, construction);
            }
        } else if (suite == "graph") {
            if (opt.n > 6) {
                std::cerr << "validate graph: n must be <= 6\n";
                return kExitUsage;
            }
            const double coverage = opt.n == 3 ? 0.99 : 0.0;
            std::cerr << "certifying transition graph (n=" << opt.n << ")...\n";
            auto certified = validate_graph(opt.n, opt.replications, opt.horizon, coverage,
                                            opt.seed, opt.threads, construction);
            reports = std::move(certified.reports);
        } else if (suite == "info") {
            std::cerr << "validating information process (n=" << opt.n << ")...\n";
            reports = validate_info_tu(opt.n, opt.replications, opt.alpha, opt.seed,
                                       opt.threads);
            for (auto& r : validate_info_moments(opt.n, opt.replications, 4.0, opt.seed + 1,
                                                 opt.threads))
                reports.push_back(std::move(r));
            reports.push_back(validate_info_tail(opt.n, 1e4, 0.98, 1.02));
            if (opt.n >= 1000) {
                if (t_grid.empty()) t_grid = {0.25, 0.5, 0.75};
                for (auto& r : validate_info_brownian(opt.n, opt.replications, t_grid, 0.10,
                                                      opt.seed + 2, opt.threads))
                    reports.push_back(std::move(r));
            }
        } else if (suite == "clt") {
            const double t = t_grid.empty() ? 0.5 : t_grid.front();
            std::cerr << "validating jump-count normalization (n=" << opt.n << ", t=" << t
                      << ")...\n";
            reports = validate_clt(opt.n, t, opt.replications, 4.0, 0.10, opt.seed,
                                   opt.threads, construction);
        } else {
            std::cerr << "validate: unknown suite '" << suite
                      << "' (expected marginals|jumps|graph|info|clt)\n";
            return kExitUsage;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "validate: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::string hash = config_hash({{"cmd", "validate"},
                                          {"suite", suite},
                                          {"n", format_count(opt.n)},
                                          {"seed", format_count(static_cast<std::int64_t>(opt.seed))},
                                          {"replications", format_count(opt.replications)},
                                          {"alpha", io::format_double(opt.alpha)},
                                          {"construction", opt.construction}});
    auto out = open_output(fs::path(opt.out_dir) / "report.csv");
    io::write_report_csv(out, reports, hash);
    print_reports(reports);
    return all_pass(reports) ? kExitPass : kExitStatFailure;
}

int run_graph(int n, const std::string& out_dir, bool check_generator) {
    if (n < 1 || n > 8) {
        std::cerr << "graph: n must be in 1..8\n";
        return kExitUsage;
    }
    const HypercubeGraph graph = build_hypercube(n);
    const std::string hash = config_hash({{"cmd", "graph"}, {"n", format_count(n)}});
    auto edges_out = open_output(fs::path(out_dir) / "edges.csv");
    io::write_edges_csv(edges_out, graph, hash);
    auto labels_out = open_output(fs::path(out_dir) / "labels.json");
    io::write_labels_json(labels_out, graph, hash);
    std::cout << "vertices=" << graph.vertex_count << " edges=" << graph.edges.size()
              << "\n";
    if (check_generator) {
        const bool ok = generator_set(graph) == all_transpositions(n);
        std::cout << "generator_set_is_all_transpositions="
                  << (ok ? "true" : "false") << "\n";
        if (!ok) return kExitStatFailure;
    }
    return kExitPass;
}

int run_info(const CommonOptions& opt) {
    if (opt.n < 2 || opt.replications < 1) {
        std::cerr << "info: need n >= 2 and replications >= 1\n";
        return kExitUsage;
    }
    std::vector<double> t_grid = opt.t_grid;
    if (t_grid.empty()) t_grid = {0.25, 0.5, 0.75, 1.0};

    std::cerr << "running information experiment (n=" << opt.n << ", "
              << opt.replications << " drivers)...\n";
    std::vector<double> retrieval(static_cast<std::size_t>(opt.replications));
    std::vector<std::vector<double>> fractions(
        t_grid.size(), std::vector<double>(static_cast<std::size_t>(opt.replications)));
    for (std::int64_t rep = 0; rep < opt.replications; ++rep) {
        const rng::StreamFamily family{opt.seed, static_cast<std::uint64_t>(rep)};
        const InfoPath path(UniformDriver::sample(opt.n, family));
        retrieval[static_cast<std::size_t>(rep)] = full_retrieval_time(path);
        for (std::size_t ti = 0; ti < t_grid.size(); ++ti)
            fractions[ti][static_cast<std::size_t>(rep)] = info_fraction(path, t_grid[ti]);
    }

    std::vector<double> mean(t_grid.size()), variance(t_grid.size());
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
        const auto m = stats::moments(fractions[ti]);
        mean[ti] = m.mean;
        variance[ti] = m.variance;
    }

    const std::string hash = config_hash({{"cmd", "info"},
                                          {"n", format_count(opt.n)},
                                          {"seed", format_count(static_cast<std::int64_t>(opt.seed))},
                                          {"replications", format_count(opt.replications)}});
    auto fraction_out = open_output(fs::path(opt.out_dir) / "info_fraction.csv");
    io::write_info_fraction_csv(fraction_out, t_grid, mean, variance, opt.n, hash);
    auto times_out = open_output(fs::path(opt.out_dir) / "retrieval_times.csv");
    io::write_retrieval_times_csv(times_out, retrieval, hash);
    return kExitPass;
}

int run_dist(int n, double q, const std::string& table_path, const std::string& oracle_path,
             const std::string& pmf_key, int sf_k, double sf_t) {
    if (n < 1) {
        std::cerr << "dist: n must be >= 1\n";
        return kExitUsage;
    }
    const std::string hash = config_hash(
        {{"cmd", "dist"}, {"n", format_count(n)}, {"q", io::format_double(q)}});
    try {
        if (!table_path.empty()) {
            auto out = open_output(table_path);
            io::write_count_table_csv(out, inversion_count_table(n), hash);
        }
        if (!oracle_path.empty()) {
            auto out = open_output(oracle_path);
            io::write_oracle_json(out, enumerate_oracle(n, q), hash);
        }
        if (!pmf_key.empty()) {
            const Permutation sigma = io::permutation_from_key(pmf_key, n);
            std::cout << io::format_double(pmf(sigma, {n, q})) << "\n";
        }
        if (sf_k > 0) {
            std::cout << io::format_double(exact_jump_time_sf(n, sf_k, sf_t)) << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "dist: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulation and validation toolkit for continuous-time "
                 "Mallows processes on permutations"};
    app.require_subcommand(1);
    app.set_config("--config")->description("TOML-like key=value config file; flags win");

    CommonOptions opt;
    bool emit_sigma = false;
    std::string replay, save_driver, suite;
    int k = 0;
    bool check_generator = false;
    std::string table_path, oracle_path, pmf_key;
    int sf_k = 0;
    double sf_t = 1.0;

    const auto add_common = [&](CLI::App* cmd, bool with_construction = true) {
        cmd->add_option("--n", opt.n, "permutation size");
        cmd->add_option("--seed", opt.seed, "64-bit master seed");
        cmd->add_option("--replications", opt.replications, "independent replications");
        cmd->add_option("--t", opt.t_grid, "time grid")->delimiter(',');
        cmd->add_option("--alpha", opt.alpha, "significance level")
            ->check(CLI::Range(1e-12, 0.999999));
        cmd->add_option("--out", opt.out_dir, "output directory");
        cmd->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
        cmd->add_option("--horizon", opt.horizon, "simulation horizon");
        if (with_construction)
            cmd->add_option("--construction", opt.construction, "birth|uniform");
    };

    auto* simulate_cmd = app.add_subcommand("simulate", "simulate process trajectories");
    add_common(simulate_cmd);
    simulate_cmd->add_flag("--emit-sigma", emit_sigma, "include states in the event log");
    simulate_cmd->add_option("--replay", replay, "driver JSON to replay (uniform only)");
    simulate_cmd->add_option("--save-driver", save_driver, "write the driver JSON used");

    auto* validate_cmd = app.add_subcommand("validate", "run a validation suite");
    validate_cmd->add_option("suite", suite, "marginals|jumps|graph|info|clt")->required();
    add_common(validate_cmd);
    validate_cmd->add_option("--k", k, "jumping-time order");

    auto* graph_cmd = app.add_subcommand("graph", "export the expanded hypercube");
    graph_cmd->add_option("--n", opt.n, "permutation size")->required();
    graph_cmd->add_option("--out", opt.out_dir, "output directory");
    graph_cmd->add_flag("--check-generator", check_generator,
                        "also assert the generator set is all transpositions");

    auto* info_cmd = app.add_subcommand("info", "information-retrieval experiment");
    add_common(info_cmd, false);

    auto* dist_cmd = app.add_subcommand("dist", "distribution queries");
    dist_cmd->add_option("--n", opt.n, "permutation size")->required();
    double q = 1.0;
    dist_cmd->add_option("--q", q, "distribution parameter");
    dist_cmd->add_option("--table", table_path, "write the inversion-count table CSV");
    dist_cmd->add_option("--oracle", oracle_path, "write the exact pmf JSON (n <= 8)");
    dist_cmd->add_option("--pmf", pmf_key, "print pmf of a one-line permutation \"2,3,1\"");
    dist_cmd->add_option("--sf-k", sf_k, "print P(T_k > t) for this k");
    dist_cmd->add_option("--sf-t", sf_t, "time for --sf-k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (simulate_cmd->parsed())
            return run_simulate(opt, emit_sigma, replay, save_driver);
        if (validate_cmd->parsed()) return run_validate(suite, opt, k);
        if (graph_cmd->parsed()) return run_graph(opt.n, opt.out_dir, check_generator);
        if (info_cmd->parsed()) return run_info(opt);
        if (dist_cmd->parsed())
            return run_dist(opt.n, q, table_path, oracle_path, pmf_key, sf_k, sf_t);
    } catch (const io_failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
