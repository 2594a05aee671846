#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mallows/distribution.hpp"
#include "mallows/hypercube.hpp"
#include "mallows/info.hpp"
#include "mallows/permutation.hpp"
#include "mallows/process.hpp"
#include "mallows/stats.hpp"
#include "mallows/uniform.hpp"

namespace mallows::io {

// FNV-1a over a canonical key=value rendering; stamped into every output
// file for provenance.
std::uint64_t fnv1a(const std::string& text);
std::string hash_hex(std::uint64_t hash);

// "2,3,1" <-> permutation (one-based)
std::string permutation_key(const Permutation& sigma);
Permutation permutation_from_key(const std::string& key, int expected_n = -1);

std::string permutation_json(const Permutation& sigma); // one-based array

// full precision, shortest-round-trip style
std::string format_double(double v);

void write_count_table_csv(std::ostream& out, const InversionCountTable& table,
                           const std::string& config_hash);
void write_oracle_json(std::ostream& out, const std::map<Permutation, double>& oracle,
                       const std::string& config_hash);

// one record per event: {"rep":0,"t":...,"j":...,"k":...} with an optional
// "sigma_after" array; the first line is a meta record carrying the hash
void write_trajectories_jsonl(std::ostream& out,
                              const std::vector<ProcessTrajectory>& trajectories,
                              bool emit_sigma, const std::string& config_hash);

// replication,T1,T2,... with empty cells for censored jumping times
void write_summary_csv(std::ostream& out,
                       const std::vector<ProcessTrajectory>& trajectories,
                       const std::string& config_hash);

void write_driver_json(std::ostream& out, const UniformDriver& driver,
                       const std::string& config_hash);
UniformDriver read_driver_json(std::istream& in);

void write_edges_csv(std::ostream& out, const HypercubeGraph& graph,
                     const std::string& config_hash);
void write_labels_json(std::ostream& out, const HypercubeGraph& graph,
                       const std::string& config_hash);

// test,statistic,threshold,pass
void write_report_csv(std::ostream& out, const std::vector<stats::GofReport>& reports,
                      const std::string& config_hash);
std::string report_json(const stats::GofReport& report);

void write_info_fraction_csv(std::ostream& out, const std::vector<double>& t_grid,
                             const std::vector<double>& mean,
                             const std::vector<double>& variance, int n,
                             const std::string& config_hash);
void write_retrieval_times_csv(std::ostream& out, const std::vector<double>& times,
                               const std::string& config_hash);

} // namespace mallows::io
