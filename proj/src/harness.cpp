#include "simplexmatch/harness.hpp"

#include "simplexmatch/matrix_io.hpp"
#include "simplexmatch/rng.hpp"
#include "simplexmatch/rounding.hpp"
#include "simplexmatch/spectral.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace simplexmatch {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::string to_string(AlgoKind kind) {
  switch (kind) {
    case AlgoKind::EMD: return "emd";
    case AlgoKind::PGD: return "pgd";
    case AlgoKind::GRAMPA: return "grampa";
    case AlgoKind::UMEYAMA: return "umeyama";
  }
  return "?";
}

AlgoKind parse_algo_kind(const std::string& name) {
  if (name == "emd") return AlgoKind::EMD;
  if (name == "pgd") return AlgoKind::PGD;
  if (name == "grampa") return AlgoKind::GRAMPA;
  if (name == "umeyama") return AlgoKind::UMEYAMA;
  throw InvalidArgument("unknown algorithm '" + name + "' (expected emd, pgd, grampa or umeyama)");
}

StepSizeRule AlgorithmSpec::rule() const {
  const bool md = kind == AlgoKind::EMD;
  if (step == "heuristic") return StepSizeRule::heuristic_pgd(theta);
  return parse_step_rule(step, md, iters, invert_fixed_l);
}

void ExperimentConfig::validate() const {
  if (n < 2) throw InvalidArgument("config: model.n must be >= 2");
  if (trials < 1) throw InvalidArgument("config: trials must be >= 1");
  if (sigma_grid.empty()) throw InvalidArgument("config: sigma_grid must be nonempty");
  for (double s : sigma_grid) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw InvalidArgument("config: sigma_grid values must be finite and >= 0");
    if (model == ModelKind::SUBSAMPLE && s > 1.0)
      throw InvalidArgument("config: SUBSAMPLE grid values are retention probabilities in [0,1]");
    if (model == ModelKind::CER) {
      if (s > 1.0) throw InvalidArgument("config: CER requires sigma <= 1");
    }
  }
  if (model == ModelKind::CER) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("config: CER requires 0 < p < 1");
  }
  if (model == ModelKind::SUBSAMPLE && parent_path.empty())
    throw InvalidArgument("config: SUBSAMPLE requires model.parent");
  if (algorithms.empty()) throw InvalidArgument("config: algorithms must be nonempty");
  std::set<std::string> labels;
  for (const auto& a : algorithms) {
    if ((a.kind == AlgoKind::EMD || a.kind == AlgoKind::PGD) && a.iters < 1)
      throw InvalidArgument("config: iters must be >= 1 for " + a.label);
    if (a.kind == AlgoKind::EMD || a.kind == AlgoKind::PGD) (void)a.rule();
    if (a.kind == AlgoKind::GRAMPA && (!std::isfinite(a.eta) || a.eta < 0.0))
      throw InvalidArgument("config: eta must be finite and >= 0");
    if (!labels.insert(a.label).second) throw InvalidArgument("config: duplicate algorithm label '" + a.label + "'");
  }
}

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw InvalidArgument("config: " + where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw InvalidArgument("config: unknown key '" + it.key() + "' in " + where);
  }
}

template <typename T>
void read_opt(const json& obj, const char* key, T& out, const std::string& where) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidArgument(std::string("config: bad type for '") + key + "' in " + where);
  }
}

std::string default_label(AlgoKind k) {
  switch (k) {
    case AlgoKind::EMD: return "EMDGM";
    case AlgoKind::PGD: return "PGDGM";
    case AlgoKind::GRAMPA: return "GRAMPA";
    case AlgoKind::UMEYAMA: return "Umeyama";
  }
  return "?";
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: invalid JSON: ") + e.what());
  }
  reject_unknown(doc, {"model", "sigma_grid", "algorithms", "trials", "base_seed", "outputs", "track_properties"},
                 "top level");
  ExperimentConfig cfg;
  if (!doc.contains("model")) throw InvalidArgument("config: missing 'model'");
  const json& m = doc.at("model");
  reject_unknown(m, {"kind", "n", "p", "parent", "standardize"}, "model");
  std::string kind = "CGW";
  read_opt(m, "kind", kind, "model");
  cfg.model = parse_model_kind(kind);
  read_opt(m, "n", cfg.n, "model");
  read_opt(m, "p", cfg.p, "model");
  read_opt(m, "standardize", cfg.standardize, "model");
  read_opt(m, "parent", cfg.parent_path, "model");
  if (!cfg.parent_path.empty() && !base_dir.empty() && fs::path(cfg.parent_path).is_relative())
    cfg.parent_path = (fs::path(base_dir) / cfg.parent_path).string();

  read_opt(doc, "sigma_grid", cfg.sigma_grid, "top level");
  read_opt(doc, "trials", cfg.trials, "top level");
  read_opt(doc, "base_seed", cfg.base_seed, "top level");
  read_opt(doc, "outputs", cfg.outputs, "top level");
  read_opt(doc, "track_properties", cfg.track_properties, "top level");

  if (doc.contains("algorithms")) {
    const json& algos = doc.at("algorithms");
    if (!algos.is_array()) throw InvalidArgument("config: algorithms must be an array");
    for (const json& a : algos) {
      reject_unknown(a, {"algo", "label", "iters", "step", "eta", "theta", "invert_fixed_l"}, "algorithms[]");
      AlgorithmSpec spec;
      std::string name;
      read_opt(a, "algo", name, "algorithms[]");
      if (name.empty()) throw InvalidArgument("config: algorithms[] entry without 'algo'");
      spec.kind = parse_algo_kind(name);
      spec.label = default_label(spec.kind);
      if (spec.kind == AlgoKind::PGD) spec.step = "heuristic";
      read_opt(a, "label", spec.label, "algorithms[]");
      read_opt(a, "iters", spec.iters, "algorithms[]");
      read_opt(a, "step", spec.step, "algorithms[]");
      read_opt(a, "eta", spec.eta, "algorithms[]");
      read_opt(a, "theta", spec.theta, "algorithms[]");
      read_opt(a, "invert_fixed_l", spec.invert_fixed_l, "algorithms[]");
      cfg.algorithms.push_back(spec);
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), fs::path(path).parent_path().string());
}

TrialInstance sample_instance(const ExperimentConfig& cfg, const SymMatrix* parent, std::size_t sigma_index,
                              int trial) {
  const double sigma = cfg.sigma_grid.at(sigma_index);
  TrialInstance inst;
  inst.seed = derive_seed(cfg.base_seed, {sigma_index, static_cast<std::uint64_t>(trial)});
  const std::uint64_t model_seed = derive_seed(inst.seed, {1});
  switch (cfg.model) {
    case ModelKind::CGW: {
      inst.truth = sample_permutation(cfg.n, derive_seed(inst.seed, {0}));
      auto [a, b] = sample_cgw(cfg.n, sigma, inst.truth, model_seed);
      inst.a = std::move(a);
      inst.b = std::move(b);
      break;
    }
    case ModelKind::CER: {
      inst.truth = sample_permutation(cfg.n, derive_seed(inst.seed, {0}));
      auto [a, b] = sample_cer(cfg.n, sigma, cfg.p, inst.truth, model_seed);
      inst.a = cfg.standardize ? standardize_cer(a, cfg.p) : std::move(a);
      inst.b = cfg.standardize ? standardize_cer(b, cfg.p) : std::move(b);
      break;
    }
    case ModelKind::SUBSAMPLE: {
      if (!parent) throw InvalidArgument("SUBSAMPLE instance requires a parent graph");
      const int n = parent->size();
      inst.truth = sample_permutation(n, derive_seed(inst.seed, {0}));
      auto [a, b] = subsample_pair(*parent, sigma, model_seed);
      inst.a = std::move(a);
      inst.b = conjugate(b, inst.truth);
      break;
    }
  }
  return inst;
}

RunRecord run_algorithm(const ExperimentConfig& cfg, const AlgorithmSpec& algo, const TrialInstance& inst,
                        double sigma) {
  RunRecord rec;
  rec.model = to_string(cfg.model);
  rec.sigma = sigma;
  rec.algo = algo.label;
  rec.seed = inst.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    const EnergyContext ctx(inst.a, inst.b);
    Matrix similarity;
    switch (algo.kind) {
      case AlgoKind::EMD:
      case AlgoKind::PGD: {
        const SolveReport rep = algo.kind == AlgoKind::EMD ? run_emdgm(ctx, algo.iters, algo.rule())
                                                           : run_pgdgm(ctx, algo.iters, algo.rule());
        similarity = rep.x_best.matrix();
        rec.energy_best = rep.energy_best;
        rec.iterations = rep.iterations_run;
        break;
      }
      case AlgoKind::GRAMPA:
        similarity = grampa_similarity(inst.a, inst.b, algo.eta);
        break;
      case AlgoKind::UMEYAMA:
        similarity = umeyama_similarity(inst.a, inst.b);
        break;
    }
    const Permutation rounded = gmwm(similarity);
    rec.overlap = overlap(rounded, inst.truth);
    if (algo.kind == AlgoKind::GRAMPA || algo.kind == AlgoKind::UMEYAMA)
      rec.energy_best = energy(ctx, rounded.matrix() / static_cast<double>(ctx.size()));
    const Matrix aligned = unpermute(similarity, inst.truth);
    rec.metric1 = count_nondominant_rows(aligned);
    rec.metric2 = count_suffcond_failures(aligned, SuffCond::MAX);
  } catch (const std::exception& e) {
    rec.error = e.what();
    rec.overlap = 0.0;
  }
  rec.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::unique_ptr<SymMatrix> load_parent_graph(const ExperimentConfig& cfg) {
  if (cfg.model != ModelKind::SUBSAMPLE) return nullptr;
  SymMatrix h = load_edge_list(cfg.parent_path);
  if (cfg.n > h.size())
    throw InvalidArgument("config: model.n exceeds the parent graph size " + std::to_string(h.size()));
  return std::make_unique<SymMatrix>(induced_subgraph(h, cfg.n, derive_seed(cfg.base_seed, {0x5eed})));
}

namespace {

// Runs body(task) for task in [0, count) on `threads` workers; the first exception is rethrown.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body body) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, threads)), count);
  if (workers <= 1) {
    for (std::size_t t = 0; t < count; ++t) body(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < count; t = next++) {
        try {
          body(t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<RunRecord> run_benchmark(const ExperimentConfig& cfg, int threads) {
  cfg.validate();
  const auto parent = load_parent_graph(cfg);
  const std::size_t n_sigma = cfg.sigma_grid.size();
  const std::size_t n_algo = cfg.algorithms.size();
  const std::size_t n_trial = static_cast<std::size_t>(cfg.trials);
  std::vector<RunRecord> records(n_sigma * n_algo * n_trial);
  parallel_for(n_sigma * n_trial, threads, [&](std::size_t task) {
    const std::size_t si = task / n_trial;
    const int trial = static_cast<int>(task % n_trial);
    const TrialInstance inst = sample_instance(cfg, parent.get(), si, trial);
    for (std::size_t ai = 0; ai < n_algo; ++ai) {
      RunRecord rec = run_algorithm(cfg, cfg.algorithms[ai], inst, cfg.sigma_grid[si]);
      rec.trial = trial;
      records[(si * n_algo + ai) * n_trial + static_cast<std::size_t>(trial)] = std::move(rec);
    }
  });
  return records;
}

std::vector<PropertyRow> run_property_tracking(const ExperimentConfig& cfg, int threads) {
  cfg.validate();
  if (!cfg.track_properties) throw InvalidArgument("property tracking requires track_properties = true");
  if (cfg.algorithms.size() != 1) throw InvalidArgument("property tracking requires exactly one algorithm");
  const AlgorithmSpec& algo = cfg.algorithms.front();
  if (algo.kind != AlgoKind::EMD && algo.kind != AlgoKind::PGD)
    throw InvalidArgument("property tracking requires an iterative algorithm (emd or pgd)");
  const auto parent = load_parent_graph(cfg);
  const std::size_t n_sigma = cfg.sigma_grid.size();
  const std::size_t n_trial = static_cast<std::size_t>(cfg.trials);
  const std::size_t n_iter = static_cast<std::size_t>(algo.iters) + 1;
  std::vector<std::vector<PropertyRow>> per_task(n_sigma * n_trial);
  parallel_for(n_sigma * n_trial, threads, [&](std::size_t task) {
    const std::size_t si = task / n_trial;
    const int trial = static_cast<int>(task % n_trial);
    const TrialInstance inst = sample_instance(cfg, parent.get(), si, trial);
    const EnergyContext ctx(inst.a, inst.b);
    std::vector<PropertyRow>& rows = per_task[task];
    rows.reserve(n_iter);
    SolveOptions opts;
    opts.on_iterate = [&](int k, const SimplexMatrix& x) {
      rows.push_back(PropertyRow{cfg.sigma_grid[si], trial, k, property_report(x.matrix(), inst.truth)});
    };
    if (algo.kind == AlgoKind::EMD) run_emdgm(ctx, algo.iters, algo.rule(), opts);
    else run_pgdgm(ctx, algo.iters, algo.rule(), opts);
  });
  std::vector<PropertyRow> out;
  for (const auto& rows : per_task) out.insert(out.end(), rows.begin(), rows.end());
  for (std::size_t si = 0; si < n_sigma; ++si)
    for (std::size_t k = 0; k < n_iter; ++k) {
      PropertyRow mean{cfg.sigma_grid[si], -1, static_cast<int>(k), {}};
      for (std::size_t t = 0; t < n_trial; ++t) {
        const PropertyReport& r = per_task[si * n_trial + t][k].report;
        mean.report.frac_suffcond_max += r.frac_suffcond_max;
        mean.report.frac_suffcond_sum += r.frac_suffcond_sum;
        mean.report.frac_suffcond_summax += r.frac_suffcond_summax;
        mean.report.frac_diag_dominant_rows += r.frac_diag_dominant_rows;
        mean.report.overlap_after_rounding += r.overlap_after_rounding;
      }
      const double m = static_cast<double>(n_trial);
      mean.report.frac_suffcond_max /= m;
      mean.report.frac_suffcond_sum /= m;
      mean.report.frac_suffcond_summax /= m;
      mean.report.frac_diag_dominant_rows /= m;
      mean.report.overlap_after_rounding /= m;
      out.push_back(mean);
    }
  return out;
}

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + dir + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

struct Group {
  double sigma;
  std::string algo;
  std::vector<const RunRecord*> runs;
};

std::vector<Group> group_records(const std::vector<RunRecord>& records) {
  std::vector<Group> groups;
  std::map<std::pair<double, std::string>, std::size_t> index;
  for (const auto& r : records) {
    auto key = std::make_pair(r.sigma, r.algo);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, groups.size()).first;
      groups.push_back(Group{r.sigma, r.algo, {}});
    }
    groups[it->second].runs.push_back(&r);
  }
  return groups;
}

void write_svg(const std::vector<Group>& groups, const fs::path& path) {
  std::vector<std::string> algos;
  std::vector<double> sigmas;
  for (const auto& g : groups) {
    if (std::find(algos.begin(), algos.end(), g.algo) == algos.end()) algos.push_back(g.algo);
    sigmas.push_back(g.sigma);
  }
  const double lo = *std::min_element(sigmas.begin(), sigmas.end());
  double hi = *std::max_element(sigmas.begin(), sigmas.end());
  if (hi == lo) hi = lo + 1.0;
  const double left = 60, right = 460, top = 20, bottom = 300;
  auto px = [&](double s) { return left + (s - lo) / (hi - lo) * (right - left); };
  auto py = [&](double v) { return bottom - v * (bottom - top); };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  auto out = open_output(path);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"620\" height=\"350\" viewBox=\"0 0 620 350\">\n"
      << "<g id=\"axes\" stroke=\"black\" fill=\"none\">\n"
      << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\"" << bottom << "\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << left << "\" y2=\"" << top << "\"/>\n"
      << "</g>\n"
      << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<text x=\"" << (left + right) / 2 << "\" y=\"335\" text-anchor=\"middle\">noise level</text>\n"
      << "<text x=\"15\" y=\"" << (top + bottom) / 2 << "\" transform=\"rotate(-90 15 " << (top + bottom) / 2
      << ")\" text-anchor=\"middle\">mean overlap</text>\n"
      << "<text x=\"" << left << "\" y=\"" << bottom + 15 << "\" text-anchor=\"middle\">" << format_double(lo)
      << "</text>\n"
      << "<text x=\"" << right << "\" y=\"" << bottom + 15 << "\" text-anchor=\"middle\">" << format_double(hi)
      << "</text>\n"
      << "<text x=\"" << left - 5 << "\" y=\"" << bottom << "\" text-anchor=\"end\">0</text>\n"
      << "<text x=\"" << left - 5 << "\" y=\"" << top + 4 << "\" text-anchor=\"end\">1</text>\n"
      << "</g>\n";
  for (std::size_t a = 0; a < algos.size(); ++a) {
    const char* color = palette[a % (sizeof palette / sizeof *palette)];
    std::ostringstream d;
    bool first = true;
    for (const auto& g : groups) {
      if (g.algo != algos[a]) continue;
      double sum = 0.0;
      std::size_t ok = 0;
      for (const RunRecord* r : g.runs)
        if (r->error.empty()) sum += r->overlap, ++ok;
      const double mean = ok ? sum / static_cast<double>(ok) : 0.0;
      d << (first ? "M " : " L ") << format_double(px(g.sigma)) << ' ' << format_double(py(mean));
      first = false;
    }
    std::string label;
    for (char c : algos[a]) {
      if (c == '<') label += "&lt;";
      else if (c == '>') label += "&gt;";
      else if (c == '&') label += "&amp;";
      else if (c == '"') label += "&quot;";
      else label += c;
    }
    out << "<path d=\"" << d.str() << "\" stroke=\"" << color << "\" stroke-width=\"2\" fill=\"none\"/>\n"
        << "<text x=\"480\" y=\"" << 40 + 18 * a << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color
        << "\">" << label << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace

void write_outputs(const std::vector<RunRecord>& records, const std::string& dir) {
  if (records.empty()) throw InvalidArgument("write_outputs: no records");
  ensure_dir(dir);
  const fs::path root(dir);
  {
    auto out = open_output(root / "runs.csv");
    out << "model,sigma,algo,trial,seed,overlap,energy_best,metric1,metric2,iterations,error\n";
    for (const auto& r : records)
      out << r.model << ',' << format_double(r.sigma) << ',' << csv_field(r.algo) << ',' << r.trial << ',' << r.seed
          << ',' << format_double(r.overlap) << ',' << format_double(r.energy_best) << ',' << r.metric1 << ','
          << r.metric2 << ',' << r.iterations << ',' << csv_field(r.error) << '\n';
  }
  {
    auto out = open_output(root / "timings.csv");
    out << "sigma,algo,trial,runtime_seconds\n";
    for (const auto& r : records)
      out << format_double(r.sigma) << ',' << csv_field(r.algo) << ',' << r.trial << ','
          << format_double(r.runtime_seconds) << '\n';
  }
  const auto groups = group_records(records);
  {
    auto out = open_output(root / "summary.csv");
    out << "sigma,algo,runs,failed,overlap_mean,overlap_std,energy_mean,metric1_mean,metric2_mean\n";
    for (const auto& g : groups) {
      std::vector<const RunRecord*> ok;
      for (const RunRecord* r : g.runs)
        if (r->error.empty()) ok.push_back(r);
      const double m = static_cast<double>(ok.size());
      double ov = 0, en = 0, m1 = 0, m2 = 0;
      for (const RunRecord* r : ok) {
        ov += r->overlap;
        en += r->energy_best;
        m1 += static_cast<double>(r->metric1);
        m2 += static_cast<double>(r->metric2);
      }
      double sd = 0.0;
      if (ok.size() > 1) {
        const double mean = ov / m;
        for (const RunRecord* r : ok) sd += (r->overlap - mean) * (r->overlap - mean);
        sd = std::sqrt(sd / (m - 1.0));
      }
      auto mean_or_nan = [&](double total) { return ok.empty() ? std::nan("") : total / m; };
      out << format_double(g.sigma) << ',' << csv_field(g.algo) << ',' << g.runs.size() << ','
          << g.runs.size() - ok.size() << ',' << format_double(mean_or_nan(ov)) << ',' << format_double(sd) << ','
          << format_double(mean_or_nan(en)) << ',' << format_double(mean_or_nan(m1)) << ','
          << format_double(mean_or_nan(m2)) << '\n';
    }
  }
  write_svg(groups, root / "recovery.svg");
}

void write_property_table(const std::vector<PropertyRow>& rows, const std::string& dir) {
  if (rows.empty()) throw InvalidArgument("write_property_table: no rows");
  ensure_dir(dir);
  auto out = open_output(fs::path(dir) / "properties.csv");
  out << "sigma,trial,k,frac_suffcond_max,frac_suffcond_sum,frac_suffcond_summax,frac_diag_dominant_rows,"
         "overlap_after_rounding\n";
  for (const auto& r : rows)
    out << format_double(r.sigma) << ',' << (r.trial < 0 ? std::string("mean") : std::to_string(r.trial)) << ','
        << r.k << ',' << format_double(r.report.frac_suffcond_max) << ','
        << format_double(r.report.frac_suffcond_sum) << ',' << format_double(r.report.frac_suffcond_summax) << ','
        << format_double(r.report.frac_diag_dominant_rows) << ',' << format_double(r.report.overlap_after_rounding)
        << '\n';
}

int resolve_threads(int requested) {
  if (const char* env = std::getenv("SIMPLEXMATCH_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 4096)
      throw InvalidArgument("SIMPLEXMATCH_THREADS must be a positive integer, got '" + std::string(env) + "'");
    return static_cast<int>(v);
  }
  return std::max(1, requested);
}

}  // namespace simplexmatch
