#pragma once

#include "simplexmatch/diagnostics.hpp"
#include "simplexmatch/graph_models.hpp"
#include "simplexmatch/solvers.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace simplexmatch {

enum class AlgoKind { EMD, PGD, GRAMPA, UMEYAMA };

std::string to_string(AlgoKind kind);
AlgoKind parse_algo_kind(const std::string& name);

struct AlgorithmSpec {
  AlgoKind kind = AlgoKind::EMD;
  std::string label;  // defaults to EMDGM / PGDGM / GRAMPA / Umeyama
  int iters = 125;
  std::string step = "dynamic";
  double eta = 0.2;
  double theta = 1.0;  // used by "heuristic" without an inline value
  bool invert_fixed_l = false;

  StepSizeRule rule() const;
};

struct ExperimentConfig {
  ModelKind model = ModelKind::CGW;
  int n = 100;
  double p = 0.5;             // CER
  bool standardize = true;    // CER
  std::string parent_path;    // SUBSAMPLE edge list
  // σ for CGW/CER, retention probability s for SUBSAMPLE.
  std::vector<double> sigma_grid;
  std::vector<AlgorithmSpec> algorithms;
  int trials = 1;
  std::uint64_t base_seed = 0;
  std::string outputs = "out";
  bool track_properties = false;

  void validate() const;
};

// JSON document; unknown keys are rejected. Relative parent paths resolve against base_dir.
ExperimentConfig parse_config(const std::string& json_text, const std::string& base_dir = "");
ExperimentConfig load_config(const std::string& path);

struct RunRecord {
  std::string model;
  double sigma = 0.0;
  std::string algo;
  int trial = 0;
  std::uint64_t seed = 0;
  double overlap = 0.0;
  double energy_best = 0.0;
  double runtime_seconds = 0.0;
  long long metric1 = 0;  // non-dominant rows of the unpermuted similarity
  long long metric2 = 0;  // MAX-condition failures (ordered pairs) of the unpermuted similarity
  int iterations = 0;
  std::string error;      // empty on success
};

struct TrialInstance {
  SymMatrix a, b;
  Permutation truth;
  std::uint64_t seed = 0;
};

// SUBSAMPLE only: the parent edge list restricted to n vertices drawn once per config; null otherwise.
std::unique_ptr<SymMatrix> load_parent_graph(const ExperimentConfig& cfg);

// The model draw for grid point sigma_index and a trial; shared by every algorithm.
TrialInstance sample_instance(const ExperimentConfig& cfg, const SymMatrix* parent, std::size_t sigma_index,
                              int trial);

// Runs one algorithm on one instance and scores it.
RunRecord run_algorithm(const ExperimentConfig& cfg, const AlgorithmSpec& algo, const TrialInstance& inst,
                        double sigma);

// Records ordered by (σ index, algorithm index, trial). Identical for any thread count.
std::vector<RunRecord> run_benchmark(const ExperimentConfig& cfg, int threads = 1);

struct PropertyRow {
  double sigma = 0.0;
  int trial = 0;  // −1 marks the mean over trials
  int k = 0;
  PropertyReport report;
};

// One row per (σ, trial, iterate), then one mean row per (σ, iterate).
std::vector<PropertyRow> run_property_tracking(const ExperimentConfig& cfg, int threads = 1);

// runs.csv, timings.csv, summary.csv, recovery.svg
void write_outputs(const std::vector<RunRecord>& records, const std::string& dir);
void write_property_table(const std::vector<PropertyRow>& rows, const std::string& dir);

// Resolves the worker count: SIMPLEXMATCH_THREADS wins over the requested value; at least 1.
int resolve_threads(int requested);

}  // namespace simplexmatch
