#include "mallows/io.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mallows/info.hpp"
#include "mallows/numeric.hpp"
#include <nlohmann/json.hpp>

namespace mallows::io {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hash_hex(std::uint64_t hash) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string permutation_key(const Permutation& sigma) {
    std::string out;
    const auto line = sigma.to_one_line();
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(line[i]);
    }
    return out;
}

Permutation permutation_from_key(const std::string& key, int expected_n) {
    std::vector<int> values;
    std::stringstream ss(key);
    std::string token;
    while (std::getline(ss, token, ',')) values.push_back(std::stoi(token));
    if (expected_n >= 0 && static_cast<int>(values.size()) != expected_n)
        throw std::invalid_argument("permutation_from_key: unexpected length");
    return Permutation::from_one_line(values);
}

std::string permutation_json(const Permutation& sigma) {
    return json(sigma.to_one_line()).dump();
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_count_table_csv(std::ostream& out, const InversionCountTable& table,
                           const std::string& config_hash) {
    out << "# config_hash=" << config_hash << "\n";
    out << "ell,count\n";
    for (std::size_t ell = 0; ell < table.counts.size(); ++ell)
        out << ell << ',' << numeric::u128_to_string(table.counts[ell]) << "\n";
}

void write_oracle_json(std::ostream& out, const std::map<Permutation, double>& oracle,
                       const std::string& config_hash) {
    json obj;
    obj["config_hash"] = config_hash;
    json probs = json::object();
    for (const auto& [sigma, p] : oracle) probs[permutation_key(sigma)] = p;
    obj["pmf"] = std::move(probs);
    out << obj.dump(2) << "\n";
}

void write_trajectories_jsonl(std::ostream& out,
                              const std::vector<ProcessTrajectory>& trajectories,
                              bool emit_sigma, const std::string& config_hash) {
    out << R"({"config_hash":")" << config_hash << R"("})" << "\n";
    for (std::size_t rep = 0; rep < trajectories.size(); ++rep) {
        const auto& traj = trajectories[rep];
        std::vector<int> entries(static_cast<std::size_t>(traj.n), 0);
        for (const auto& e : traj.events) {
            out << "{\"rep\":" << rep << ",\"t\":" << format_double(e.t)
                << ",\"j\":" << e.j << ",\"k\":" << e.k;
            if (emit_sigma) {
                entries[static_cast<std::size_t>(e.j - 1)] = e.k;
                out << ",\"sigma_after\":"
                    << permutation_json(phi(InversionVector(entries)));
            }
            out << "}\n";
        }
    }
}

void write_summary_csv(std::ostream& out,
                       const std::vector<ProcessTrajectory>& trajectories,
                       const std::string& config_hash) {
    out << "# config_hash=" << config_hash << "\n";
    std::size_t max_jumps = 0;
    for (const auto& traj : trajectories) max_jumps = std::max(max_jumps, traj.events.size());
    out << "replication";
    for (std::size_t k = 1; k <= max_jumps; ++k) out << ",T" << k;
    out << "\n";
    for (std::size_t rep = 0; rep < trajectories.size(); ++rep) {
        out << rep;
        const auto& events = trajectories[rep].events;
        for (std::size_t k = 0; k < max_jumps; ++k) {
            out << ',';
            if (k < events.size()) out << format_double(events[k].t);
        }
        out << "\n";
    }
}

void write_driver_json(std::ostream& out, const UniformDriver& driver,
                       const std::string& config_hash) {
    json obj;
    obj["config_hash"] = config_hash;
    obj["u"] = driver.values();
    out << obj.dump(2) << "\n";
}

UniformDriver read_driver_json(std::istream& in) {
    json obj = json::parse(in);
    if (obj.is_array()) return UniformDriver(obj.get<std::vector<double>>());
    return UniformDriver(obj.at("u").get<std::vector<double>>());
}

void write_edges_csv(std::ostream& out, const HypercubeGraph& graph,
                     const std::string& config_hash) {
    out << "# config_hash=" << config_hash << "\n";
    out << "id_a,id_b\n";
    for (const auto& [a, b] : graph.edges) out << a << ',' << b << "\n";
}

void write_labels_json(std::ostream& out, const HypercubeGraph& graph,
                       const std::string& config_hash) {
    json obj;
    obj["config_hash"] = config_hash;
    json labels = json::object();
    for (std::uint64_t id = 0; id < graph.vertex_count; ++id)
        labels[std::to_string(id)] = permutation_key(phi(lehmer_unrank(graph.n, id)));
    obj["labels"] = std::move(labels);
    out << obj.dump(2) << "\n";
}

void write_report_csv(std::ostream& out, const std::vector<stats::GofReport>& reports,
                      const std::string& config_hash) {
    out << "# config_hash=" << config_hash << "\n";
    out << "test,statistic,threshold,pass\n";
    for (const auto& r : reports)
        out << r.name << ',' << format_double(r.statistic) << ','
            << format_double(r.threshold) << ',' << (r.pass ? "true" : "false") << "\n";
}

std::string report_json(const stats::GofReport& report) {
    json obj;
    obj["name"] = report.name;
    obj["test"] = report.test;
    obj["statistic"] = report.statistic;
    obj["threshold"] = report.threshold;
    obj["pass"] = report.pass;
    obj["sample_size"] = report.sample_size;
    if (report.dof >= 0) obj["dof"] = report.dof;
    return obj.dump();
}

void write_info_fraction_csv(std::ostream& out, const std::vector<double>& t_grid,
                             const std::vector<double>& mean,
                             const std::vector<double>& variance, int n,
                             const std::string& config_hash) {
    out << "# config_hash=" << config_hash << "\n";
    out << "t,I_t_mean,I_t_var,expected,variance_formula\n";
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double expected = expected_info(n, t_grid[i]);
        const double var_formula = t_grid[i] == 1.0 ? var_info_at_1(n) : std::nan("");
        out << format_double(t_grid[i]) << ',' << format_double(mean[i]) << ','
            << format_double(variance[i]) << ',' << format_double(expected) << ',';
        if (t_grid[i] == 1.0) out << format_double(var_formula);
        out << "\n";
    }
}

void write_retrieval_times_csv(std::ostream& out, const std::vector<double>& times,
                               const std::string& config_hash) {
    out << "# config_hash=" << config_hash << "\n";
    out << "replication,T_U\n";
    for (std::size_t rep = 0; rep < times.size(); ++rep)
        out << rep << ',' << format_double(times[rep]) << "\n";
}

} // namespace mallows::io
