#include "simplexmatch/simplexmatch.h"

#include "simplexmatch/diagnostics.hpp"
#include "simplexmatch/graph_models.hpp"
#include "simplexmatch/harness.hpp"
#include "simplexmatch/matrix_io.hpp"
#include "simplexmatch/population.hpp"
#include "simplexmatch/rng.hpp"
#include "simplexmatch/rounding.hpp"
#include "simplexmatch/solvers.hpp"
#include "simplexmatch/spectral.hpp"

#include <cstring>
#include <memory>
#include <new>
#include <string>

struct sm_matrix {
  simplexmatch::Matrix m;
};

struct sm_permutation {
  simplexmatch::Permutation p;
};

namespace sm = simplexmatch;

namespace {

thread_local std::string last_error;

template <typename F>
sm_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SM_OK;
  } catch (const sm::NumericError& e) {
    last_error = e.what();
    return SM_ERR_NUMERIC;
  } catch (const sm::IoError& e) {
    last_error = e.what();
    return SM_ERR_IO;
  } catch (const sm::InvalidArgument& e) {
    last_error = e.what();
    return SM_ERR_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SM_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SM_ERR_INTERNAL;
  }
}

void need(const void* ptr, const char* what) {
  if (!ptr) throw sm::InvalidArgument(std::string(what) + " must not be NULL");
}

sm::SymMatrix sym(const sm_matrix* m, const char* what) {
  need(m, what);
  return sm::SymMatrix(m->m);
}

sm_matrix* wrap(sm::Matrix m) { return new sm_matrix{std::move(m)}; }
sm_permutation* wrap(sm::Permutation p) { return new sm_permutation{std::move(p)}; }

std::vector<double> to_vector(const double* data, size_t count, const char* what) {
  if (count) need(data, what);
  return std::vector<double>(data, data + count);
}

}  // namespace

extern "C" {

const char* sm_last_error(void) { return last_error.c_str(); }

const char* sm_status_name(sm_status status) {
  switch (status) {
    case SM_OK: return "ok";
    case SM_ERR_ARGUMENT: return "invalid argument";
    case SM_ERR_NUMERIC: return "numeric failure";
    case SM_ERR_IO: return "i/o error";
    case SM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sm_version(void) { return "0.1.0"; }

sm_status sm_matrix_create(int n, const double* row_major, sm_matrix** out) {
  return guarded([&] {
    need(out, "out");
    if (n < 1) throw sm::InvalidArgument("matrix dimension must be >= 1");
    sm::Matrix m = sm::Matrix::Zero(n, n);
    if (row_major)
      m = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(row_major, n, n);
    *out = wrap(std::move(m));
  });
}

void sm_matrix_free(sm_matrix* m) { delete m; }

int sm_matrix_dim(const sm_matrix* m) { return m ? static_cast<int>(m->m.rows()) : 0; }

sm_status sm_matrix_copy_data(const sm_matrix* m, double* row_major, size_t capacity) {
  return guarded([&] {
    need(m, "matrix");
    need(row_major, "buffer");
    const auto n = static_cast<size_t>(m->m.rows());
    if (capacity < n * n) throw sm::InvalidArgument("buffer too small");
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        row_major, m->m.rows(), m->m.cols()) = m->m;
  });
}

sm_status sm_matrix_read(const char* path, sm_matrix** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    const std::string p(path);
    if (p.size() >= 4 && p.compare(p.size() - 4, 4, ".csv") == 0) *out = wrap(sm::read_matrix_csv(p));
    else *out = wrap(sm::load_edge_list(p).matrix());
  });
}

sm_status sm_matrix_write_csv(const sm_matrix* m, const char* path) {
  return guarded([&] {
    need(m, "matrix");
    need(path, "path");
    sm::write_matrix_csv(path, m->m);
  });
}

sm_status sm_permutation_create(int n, const int* map, sm_permutation** out) {
  return guarded([&] {
    need(out, "out");
    if (n < 1) throw sm::InvalidArgument("permutation size must be >= 1");
    if (!map) {
      *out = wrap(sm::Permutation::identity(n));
      return;
    }
    *out = wrap(sm::Permutation(std::vector<int>(map, map + n)));
  });
}

void sm_permutation_free(sm_permutation* p) { delete p; }

int sm_permutation_size(const sm_permutation* p) { return p ? p->p.size() : 0; }

sm_status sm_permutation_copy_map(const sm_permutation* p, int* map, size_t capacity) {
  return guarded([&] {
    need(p, "permutation");
    need(map, "buffer");
    if (capacity < static_cast<size_t>(p->p.size())) throw sm::InvalidArgument("buffer too small");
    std::copy(p->p.map().begin(), p->p.map().end(), map);
  });
}

sm_status sm_permutation_read(const char* path, sm_permutation** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = wrap(sm::read_permutation(path));
  });
}

sm_status sm_permutation_write(const sm_permutation* p, const char* path) {
  return guarded([&] {
    need(p, "permutation");
    need(path, "path");
    sm::write_permutation(path, p->p);
  });
}

sm_status sm_overlap(const sm_permutation* p, const sm_permutation* truth, double* out) {
  return guarded([&] {
    need(p, "permutation");
    need(truth, "truth");
    need(out, "out");
    *out = sm::overlap(p->p, truth->p);
  });
}

sm_status sm_generate(const sm_model_params* params, sm_matrix** a, sm_matrix** b, sm_permutation** truth) {
  return guarded([&] {
    need(params, "params");
    need(a, "a");
    need(b, "b");
    need(truth, "truth");
    const sm::ModelKind kind = sm::parse_model_kind(params->kind ? params->kind : "CGW");
    const std::uint64_t seed = params->seed;
    sm::GraphPair pair;
    sm::Permutation perm;
    switch (kind) {
      case sm::ModelKind::CGW:
        perm = sm::sample_permutation(params->n, sm::derive_seed(seed, {0}));
        pair = sm::sample_cgw(params->n, params->sigma, perm, sm::derive_seed(seed, {1}));
        break;
      case sm::ModelKind::CER:
        perm = sm::sample_permutation(params->n, sm::derive_seed(seed, {0}));
        pair = sm::sample_cer(params->n, params->sigma, params->p, perm, sm::derive_seed(seed, {1}));
        if (params->standardize)
          pair = {sm::standardize_cer(pair.first, params->p), sm::standardize_cer(pair.second, params->p)};
        break;
      case sm::ModelKind::SUBSAMPLE: {
        need(params->parent_path, "parent_path");
        sm::SymMatrix h = sm::load_edge_list(params->parent_path);
        if (params->n > 0 && params->n < h.size()) h = sm::induced_subgraph(h, params->n, sm::derive_seed(seed, {2}));
        perm = sm::sample_permutation(h.size(), sm::derive_seed(seed, {0}));
        auto [ha, hb] = sm::subsample_pair(h, params->s, sm::derive_seed(seed, {1}));
        pair = {std::move(ha), sm::conjugate(hb, perm)};
        break;
      }
    }
    std::unique_ptr<sm_matrix> pa(wrap(pair.first.matrix()));
    std::unique_ptr<sm_matrix> pb(wrap(pair.second.matrix()));
    *truth = wrap(std::move(perm));
    *a = pa.release();
    *b = pb.release();
  });
}

void sm_solve_options_default(sm_solve_options* opts) {
  if (!opts) return;
  opts->algo = "emd";
  opts->iters = 125;
  opts->step = nullptr;
  opts->eta = 0.2;
  opts->invert_fixed_l = 0;
}

sm_status sm_solve(const sm_matrix* a, const sm_matrix* b, const sm_solve_options* opts, sm_matrix** similarity,
                   sm_permutation** rounded, sm_solve_info* info) {
  return guarded([&] {
    need(opts, "options");
    const sm::SymMatrix sa = sym(a, "a");
    const sm::SymMatrix sb = sym(b, "b");
    sm::AlgorithmSpec spec;
    spec.kind = sm::parse_algo_kind(opts->algo ? opts->algo : "emd");
    spec.iters = opts->iters;
    spec.eta = opts->eta;
    spec.invert_fixed_l = opts->invert_fixed_l != 0;
    spec.step = opts->step ? opts->step : (spec.kind == sm::AlgoKind::PGD ? "heuristic:1" : "dynamic");
    sm::Matrix x;
    sm_solve_info local{0.0, 0, 0};
    switch (spec.kind) {
      case sm::AlgoKind::EMD:
      case sm::AlgoKind::PGD: {
        const sm::EnergyContext ctx(sa, sb);
        const sm::SolveReport rep = spec.kind == sm::AlgoKind::EMD ? sm::run_emdgm(ctx, spec.iters, spec.rule())
                                                                   : sm::run_pgdgm(ctx, spec.iters, spec.rule());
        x = rep.x_best.matrix();
        local = {rep.energy_best, rep.iterations_run, rep.best_iteration};
        break;
      }
      case sm::AlgoKind::GRAMPA:
        x = sm::grampa_similarity(sa, sb, spec.eta);
        break;
      case sm::AlgoKind::UMEYAMA:
        x = sm::umeyama_similarity(sa, sb);
        break;
    }
    std::unique_ptr<sm_permutation> perm;
    if (rounded) perm.reset(wrap(sm::gmwm(x)));
    if (similarity) *similarity = wrap(std::move(x));
    if (rounded) *rounded = perm.release();
    if (info) *info = local;
  });
}

sm_status sm_property_report_compute(const sm_matrix* x, const sm_permutation* truth, sm_property_report* out) {
  return guarded([&] {
    need(x, "x");
    need(truth, "truth");
    need(out, "out");
    const sm::PropertyReport r = sm::property_report(x->m, truth->p);
    *out = {r.frac_suffcond_max, r.frac_suffcond_sum, r.frac_suffcond_summax, r.frac_diag_dominant_rows,
            r.overlap_after_rounding};
  });
}

sm_status sm_efficiency_ratio(const sm_matrix* a, const sm_matrix* b, int samples, uint64_t seed, double* out) {
  return guarded([&] {
    need(out, "out");
    const sm::EnergyContext ctx(sym(a, "a"), sym(b, "b"));
    *out = sm::efficiency_ratio(ctx, samples, seed);
  });
}

sm_status sm_error_cdf(const double* errors, size_t count, const double* grid, size_t grid_count, double* out) {
  return guarded([&] {
    if (grid_count) need(out, "out");
    const auto cdf = sm::error_cdf(to_vector(errors, count, "errors"), to_vector(grid, grid_count, "grid"));
    std::copy(cdf.begin(), cdf.end(), out);
  });
}

sm_status sm_population_trajectory(int n, double sigma, const double* rates, size_t count, sm_population_row* rows) {
  return guarded([&] {
    need(rows, "rows");
    const auto gammas = to_vector(rates, count, "rates");
    sm::PopulationState s = sm::pop_init(n);
    auto emit = [&](const sm::PopulationState& st) {
      rows[st.k] = {st.k, st.x_diag, st.x_off, st.ratio(), st.x_diag > st.x_off ? 1 : 0};
    };
    emit(s);
    for (double g : gammas) {
      s = sm::pop_step(s, sigma, g);
      emit(s);
    }
  });
}

sm_status sm_ratio_recursion(int n, double sigma, const double* rates, size_t count, double* out) {
  return guarded([&] {
    if (count) need(out, "out");
    const auto r = sm::ratio_recursion(n, sigma, to_vector(rates, count, "rates"));
    std::copy(r.begin(), r.end(), out);
  });
}

sm_status sm_rates_for_gaps(int n, double sigma, const double* gaps, size_t count, double* rates) {
  return guarded([&] {
    if (count) need(rates, "rates");
    const auto r = sm::rates_for_gaps(n, sigma, to_vector(gaps, count, "gaps"));
    std::copy(r.begin(), r.end(), rates);
  });
}

sm_status sm_check_multistep_rates(int n, const double* rates, size_t count, int* ok) {
  return guarded([&] {
    need(ok, "ok");
    *ok = sm::check_multistep_rates(n, to_vector(rates, count, "rates")) ? 1 : 0;
  });
}

sm_status sm_benchmark_run(const char* config_path, const char* out_dir, int threads) {
  return guarded([&] {
    need(config_path, "config_path");
    sm::ExperimentConfig cfg = sm::load_config(config_path);
    if (out_dir) cfg.outputs = out_dir;
    const auto records = sm::run_benchmark(cfg, threads);
    sm::write_outputs(records, cfg.outputs);
    if (cfg.track_properties) sm::write_property_table(sm::run_property_tracking(cfg, threads), cfg.outputs);
  });
}

sm_status sm_generate_from_config(const char* config_path, size_t sigma_index, int trial, sm_matrix** a,
                                  sm_matrix** b, sm_permutation** truth) {
  return guarded([&] {
    need(config_path, "config_path");
    need(a, "a");
    need(b, "b");
    need(truth, "truth");
    const sm::ExperimentConfig cfg = sm::load_config(config_path);
    if (sigma_index >= cfg.sigma_grid.size()) throw sm::InvalidArgument("sigma index out of range");
    if (trial < 0 || trial >= cfg.trials) throw sm::InvalidArgument("trial index out of range");
    const auto parent = sm::load_parent_graph(cfg);
    sm::TrialInstance inst = sm::sample_instance(cfg, parent.get(), sigma_index, trial);
    std::unique_ptr<sm_matrix> pa(wrap(inst.a.matrix()));
    std::unique_ptr<sm_matrix> pb(wrap(inst.b.matrix()));
    *truth = wrap(std::move(inst.truth));
    *a = pa.release();
    *b = pb.release();
  });
}

}  // extern "C"
