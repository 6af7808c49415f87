// simplexmatch command-line front end. Talks to the library only through its C interface.
#include "simplexmatch/simplexmatch.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CliFailure {
  int code;
  std::string message;
};

void check(sm_status st) {
  if (st == SM_OK) return;
  const int code = st == SM_ERR_NUMERIC ? kExitNumeric : st == SM_ERR_INTERNAL ? kExitInternal : kExitConfig;
  throw CliFailure{code, sm_last_error()};
}

[[noreturn]] void usage_error(const std::string& msg) { throw CliFailure{kExitConfig, msg}; }

struct MatrixDel {
  void operator()(sm_matrix* m) const { sm_matrix_free(m); }
};
struct PermDel {
  void operator()(sm_permutation* p) const { sm_permutation_free(p); }
};
using MatrixPtr = std::unique_ptr<sm_matrix, MatrixDel>;
using PermPtr = std::unique_ptr<sm_permutation, PermDel>;

MatrixPtr read_matrix(const std::string& path) {
  sm_matrix* m = nullptr;
  check(sm_matrix_read(path.c_str(), &m));
  return MatrixPtr(m);
}

PermPtr read_perm(const std::string& path) {
  sm_permutation* p = nullptr;
  check(sm_permutation_read(path.c_str(), &p));
  return PermPtr(p);
}

std::string join(const std::string& dir, const char* name) { return (std::filesystem::path(dir) / name).string(); }

void make_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) usage_error("cannot create output directory '" + dir + "'");
}

std::string num(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      usage_error(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

int env_threads(int requested) {
  if (const char* env = std::getenv("SIMPLEXMATCH_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 4096) usage_error("SIMPLEXMATCH_THREADS must be a positive integer");
    return static_cast<int>(v);
  }
  return requested < 1 ? 1 : requested;
}

// Rate schedules: "0.1,0.2,...", "const:<γ>:<count>", "theorem:<count>" (each (n−1)·log 2/(8·count)),
// "gaps:<c>:<count>" (targets g_k = 1 + c/k).
std::vector<double> parse_rates(const std::string& spec, int n, double sigma) {
  auto fields = [&](const std::string& rest) {
    std::vector<std::string> f;
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ':')) f.push_back(item);
    return f;
  };
  auto to_count = [&](const std::string& s) {
    const double v = parse_list(s, "count").at(0);
    if (v < 0 || v != std::floor(v) || v > 1e7) usage_error("bad schedule count '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  if (spec.rfind("const:", 0) == 0) {
    const auto f = fields(spec.substr(6));
    if (f.size() != 2) usage_error("expected const:<gamma>:<count>");
    return std::vector<double>(to_count(f[1]), parse_list(f[0], "gamma").at(0));
  }
  if (spec.rfind("theorem:", 0) == 0) {
    const std::size_t count = to_count(spec.substr(8));
    if (count == 0) return {};
    return std::vector<double>(count, (n - 1.0) * std::numbers::ln2 / (8.0 * static_cast<double>(count)));
  }
  if (spec.rfind("gaps:", 0) == 0) {
    const auto f = fields(spec.substr(5));
    if (f.size() != 2) usage_error("expected gaps:<c>:<count>");
    const double c = parse_list(f[0], "gap scale").at(0);
    const std::size_t count = to_count(f[1]);
    std::vector<double> gaps(count), rates(count);
    for (std::size_t k = 0; k < count; ++k) gaps[k] = 1.0 + c / static_cast<double>(k + 1);
    check(sm_rates_for_gaps(n, sigma, gaps.data(), count, rates.data()));
    return rates;
  }
  return parse_list(spec, "rate");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph matching over the unit simplex"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sm_version()));

  // generate
  auto* gen = app.add_subcommand("generate", "Sample a graph pair and its ground-truth permutation");
  std::string gen_config, gen_out = ".", gen_kind = "CGW", gen_parent;
  int gen_n = 100, gen_trial = 0;
  std::size_t gen_sigma_index = 0;
  double gen_sigma = 0.0, gen_p = 0.5, gen_s = 1.0;
  std::uint64_t gen_seed = 0;
  bool gen_raw = false;
  gen->add_option("--config", gen_config, "Benchmark config; samples its instance for --sigma-index/--trial");
  gen->add_option("--sigma-index", gen_sigma_index, "Grid index when --config is given");
  gen->add_option("--trial", gen_trial, "Trial index when --config is given");
  gen->add_option("--model", gen_kind, "CGW, CER or SUBSAMPLE")->check(CLI::IsMember({"CGW", "CER", "SUBSAMPLE"}));
  gen->add_option("--n", gen_n, "Number of vertices");
  gen->add_option("--sigma", gen_sigma, "Noise level");
  gen->add_option("--p", gen_p, "CER edge density");
  gen->add_option("--s", gen_s, "SUBSAMPLE retention probability");
  gen->add_option("--parent", gen_parent, "SUBSAMPLE parent edge list");
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_flag("--raw", gen_raw, "CER: keep 0/1 adjacency instead of standardizing");
  gen->add_option("--out", gen_out, "Output directory (A.csv, B.csv, truth.txt)");

  // solve
  auto* sol = app.add_subcommand("solve", "Match two graphs");
  std::string sol_a, sol_b, sol_truth, sol_out = ".", sol_algo = "emd", sol_step;
  int sol_iters = 125;
  double sol_eta = 0.2;
  bool sol_invert = false;
  std::uint64_t sol_seed = 0;
  sol->add_option("--a", sol_a, "First graph (.csv matrix or edge list)")->required();
  sol->add_option("--b", sol_b, "Second graph (.csv matrix or edge list)")->required();
  sol->add_option("--truth", sol_truth, "Ground-truth permutation file, enables overlap and property output");
  sol->add_option("--algo", sol_algo, "emd, pgd, grampa or umeyama")
      ->check(CLI::IsMember({"emd", "pgd", "grampa", "umeyama"}));
  sol->add_option("--iters", sol_iters, "Iterations N for emd/pgd");
  sol->add_option("--step", sol_step, "fixed, dynamic, heuristic:θ or const:γ (default dynamic for emd, heuristic:1 for pgd)");
  sol->add_option("--eta", sol_eta, "GRAMPA regularization");
  sol->add_flag("--invert-fixed-l", sol_invert, "Fixed rules: put the running gradient bound in the denominator");
  sol->add_option("--seed", sol_seed, "Recorded in the output; every solver here is deterministic");
  sol->add_option("--out", sol_out, "Output directory (similarity.csv, permutation.txt)");

  // benchmark
  auto* bench = app.add_subcommand("benchmark", "Run a Monte-Carlo sweep from a JSON config");
  std::string bench_config, bench_out;
  int bench_threads = 1;
  bench->add_option("--config", bench_config, "JSON experiment config")->required();
  bench->add_option("--out", bench_out, "Output directory (overrides the config)");
  bench->add_option("--threads", bench_threads, "Worker threads (SIMPLEXMATCH_THREADS overrides)");

  // population
  auto* pop = app.add_subcommand("population", "Expected-gradient EMD dynamics");
  int pop_n = 100;
  double pop_sigma = 0.0;
  std::string pop_rates, pop_out;
  pop->add_option("--n", pop_n, "Number of vertices")->required();
  pop->add_option("--sigma", pop_sigma, "Noise level")->required();
  pop->add_option("--rates", pop_rates,
                  "Comma list, const:<γ>:<count>, theorem:<count> or gaps:<c>:<count>")
      ->required();
  pop->add_option("--out", pop_out, "Output directory (population.csv); stdout when omitted");

  // diagnose
  auto* diag = app.add_subcommand("diagnose", "Property report, efficiency ratio and error CDF");
  std::string diag_x, diag_truth, diag_a, diag_b, diag_errors, diag_grid = "0";
  int diag_samples = 1000;
  std::uint64_t diag_seed = 0;
  diag->add_option("--x", diag_x, "Similarity matrix CSV for the property report");
  diag->add_option("--truth", diag_truth, "Ground-truth permutation for the property report");
  diag->add_option("--a", diag_a, "First graph for the efficiency ratio");
  diag->add_option("--b", diag_b, "Second graph for the efficiency ratio");
  diag->add_option("--samples", diag_samples, "Simplex samples for the efficiency ratio");
  diag->add_option("--seed", diag_seed, "Seed for the efficiency ratio");
  diag->add_option("--errors", diag_errors, "One-column CSV of nonnegative errors");
  diag->add_option("--grid", diag_grid, "Comma-separated ascending thresholds for the error CDF");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*gen) {
      sm_matrix *a = nullptr, *b = nullptr;
      sm_permutation* truth = nullptr;
      if (!gen_config.empty()) {
        check(sm_generate_from_config(gen_config.c_str(), gen_sigma_index, gen_trial, &a, &b, &truth));
      } else {
        sm_model_params params{gen_kind.c_str(), gen_n, gen_sigma, gen_p, gen_s, gen_raw ? 0 : 1,
                               gen_parent.empty() ? nullptr : gen_parent.c_str(), gen_seed};
        check(sm_generate(&params, &a, &b, &truth));
      }
      MatrixPtr pa(a), pb(b);
      PermPtr pt(truth);
      make_dir(gen_out);
      check(sm_matrix_write_csv(pa.get(), join(gen_out, "A.csv").c_str()));
      check(sm_matrix_write_csv(pb.get(), join(gen_out, "B.csv").c_str()));
      check(sm_permutation_write(pt.get(), join(gen_out, "truth.txt").c_str()));
      std::cout << "{\"n\": " << sm_matrix_dim(pa.get()) << ", \"out\": \"" << gen_out << "\"}\n";
    } else if (*sol) {
      MatrixPtr a = read_matrix(sol_a), b = read_matrix(sol_b);
      sm_solve_options opts;
      sm_solve_options_default(&opts);
      opts.algo = sol_algo.c_str();
      opts.iters = sol_iters;
      opts.step = sol_step.empty() ? nullptr : sol_step.c_str();
      opts.eta = sol_eta;
      opts.invert_fixed_l = sol_invert ? 1 : 0;
      sm_matrix* sim = nullptr;
      sm_permutation* rounded = nullptr;
      sm_solve_info info{};
      check(sm_solve(a.get(), b.get(), &opts, &sim, &rounded, &info));
      MatrixPtr psim(sim);
      PermPtr prounded(rounded);
      make_dir(sol_out);
      check(sm_matrix_write_csv(psim.get(), join(sol_out, "similarity.csv").c_str()));
      check(sm_permutation_write(prounded.get(), join(sol_out, "permutation.txt").c_str()));
      std::cout << "{\"algo\": \"" << sol_algo << "\", \"seed\": " << sol_seed;
      if (sol_algo == "emd" || sol_algo == "pgd")
        std::cout << ", \"iterations\": " << info.iterations << ", \"best_iteration\": " << info.best_iteration
                  << ", \"energy_best\": " << num(info.energy_best);
      if (!sol_truth.empty()) {
        PermPtr truth = read_perm(sol_truth);
        double ov = 0.0;
        check(sm_overlap(prounded.get(), truth.get(), &ov));
        std::cout << ", \"overlap\": " << num(ov);
      }
      std::cout << "}\n";
    } else if (*bench) {
      const int threads = env_threads(bench_threads);
      check(sm_benchmark_run(bench_config.c_str(), bench_out.empty() ? nullptr : bench_out.c_str(), threads));
    } else if (*pop) {
      const std::vector<double> rates = parse_rates(pop_rates, pop_n, pop_sigma);
      std::vector<sm_population_row> rows(rates.size() + 1);
      check(sm_population_trajectory(pop_n, pop_sigma, rates.data(), rates.size(), rows.data()));
      std::ofstream file;
      if (!pop_out.empty()) {
        make_dir(pop_out);
        file.open(join(pop_out, "population.csv"), std::ios::binary);
        if (!file) usage_error("cannot write population.csv in '" + pop_out + "'");
      }
      std::ostream& out = pop_out.empty() ? std::cout : file;
      out << "k,x_diag,x_off,ratio,rounds_to_identity\n";
      for (const auto& r : rows)
        out << r.k << ',' << num(r.x_diag) << ',' << num(r.x_off) << ',' << num(r.ratio) << ','
            << r.rounds_to_identity << '\n';
      int ok = 0;
      check(sm_check_multistep_rates(pop_n, rates.data(), rates.size(), &ok));
      if (!pop_out.empty())
        std::cout << "{\"steps\": " << rates.size() << ", \"rate_condition\": " << (ok ? "true" : "false") << "}\n";
    } else if (*diag) {
      bool any = false;
      std::cout << "{";
      if (!diag_x.empty() || !diag_truth.empty()) {
        if (diag_x.empty() || diag_truth.empty()) usage_error("--x and --truth go together");
        MatrixPtr x = read_matrix(diag_x);
        PermPtr truth = read_perm(diag_truth);
        sm_property_report r{};
        check(sm_property_report_compute(x.get(), truth.get(), &r));
        std::cout << "\"property_report\": {\"frac_suffcond_max\": " << num(r.frac_suffcond_max)
                  << ", \"frac_suffcond_sum\": " << num(r.frac_suffcond_sum)
                  << ", \"frac_suffcond_summax\": " << num(r.frac_suffcond_summax)
                  << ", \"frac_diag_dominant_rows\": " << num(r.frac_diag_dominant_rows)
                  << ", \"overlap_after_rounding\": " << num(r.overlap_after_rounding) << "}";
        any = true;
      }
      if (!diag_a.empty() || !diag_b.empty()) {
        if (diag_a.empty() || diag_b.empty()) usage_error("--a and --b go together");
        MatrixPtr a = read_matrix(diag_a), b = read_matrix(diag_b);
        double rho = 0.0;
        check(sm_efficiency_ratio(a.get(), b.get(), diag_samples, diag_seed, &rho));
        const double n = sm_matrix_dim(a.get());
        std::cout << (any ? ", " : "") << "\"efficiency_ratio\": {\"value\": " << num(rho)
                  << ", \"lower\": " << num(std::sqrt(std::log(n)) / n) << ", \"upper\": "
                  << num(std::sqrt(std::log(n))) << ", \"samples\": " << diag_samples << "}";
        any = true;
      }
      if (!diag_errors.empty()) {
        std::ifstream in(diag_errors);
        if (!in) usage_error("cannot open '" + diag_errors + "'");
        std::vector<double> errors;
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
          if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
          try {
            std::size_t used = 0;
            errors.push_back(std::stod(line, &used));
          } catch (const std::exception&) {
            if (!first) usage_error("cannot parse error value '" + line + "'");
          }
          first = false;
        }
        const std::vector<double> grid = parse_list(diag_grid, "grid");
        std::vector<double> cdf(grid.size());
        check(sm_error_cdf(errors.data(), errors.size(), grid.data(), grid.size(), cdf.data()));
        std::cout << (any ? ", " : "") << "\"error_cdf\": [";
        for (std::size_t i = 0; i < grid.size(); ++i)
          std::cout << (i ? ", " : "") << "{\"t\": " << num(grid[i]) << ", \"cdf\": " << num(cdf[i]) << "}";
        std::cout << "]";
        any = true;
      }
      std::cout << "}\n";
      if (!any) usage_error("diagnose needs --x/--truth, --a/--b or --errors");
    }
  } catch (const CliFailure& f) {
    std::cerr << "simplexmatch: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "simplexmatch: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
