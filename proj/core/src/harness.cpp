#include "netres/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "netres/error.hpp"

namespace netres {

using nlohmann::json;

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_sig12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "markdown" || s == "md") return OutputFormat::markdown;
  throw ValidationError("format: expected json, csv or markdown, got '" + s +
                        "'");
}

namespace {

json num(double x) { return round_sig12(x); }

template <class T>
json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_floating_point_v<T>) {
    return num(*v);
  } else {
    return *v;
  }
}

template <class T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else if constexpr (std::is_floating_point_v<T>) {
    return format_number(*v);
  } else {
    return std::to_string(*v);
  }
}

std::string short_name(BoundVariant v) {
  return v == BoundVariant::statement_vol_over_2 ? "statement" : "proof";
}

std::string short_name(CutMode m) {
  return m == CutMode::size_bounded ? "size" : "count";
}

std::size_t max_of(const std::vector<std::size_t>& v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

json cut_json(const CutResult& c) {
  json w = json::array();
  for (const auto& e : c.witness) w.push_back({e.u, e.v});
  return {{"size", c.proven_optimal ? json(c.size) : json(nullptr)},
          {"upper_bound", c.size},
          {"proven_optimal", c.proven_optimal},
          {"lower_bound", c.stats.lower_bound},
          {"nodes", c.stats.nodes},
          {"witness", w}};
}

}  // namespace

void validate(const AnalysisConfig& c) {
  if (c.input_path.has_value() == c.gen.has_value()) {
    throw ValidationError("input: exactly one of --input or --gen is required");
  }
  if (c.k_values.empty()) throw ValidationError("k_values: must be non-empty");
  for (auto k : c.k_values)
    if (k < 2)
      throw ValidationError("k_values: every k must be >= 2, got " +
                            std::to_string(k));
  if (c.max_dim + 1 < max_of(c.k_values)) {
    throw ValidationError("max_dim: must be >= max(k_values) - 1 = " +
                          std::to_string(max_of(c.k_values) - 1));
  }
  if (c.variants.empty()) throw ValidationError("variant: none selected");
  if (c.modes.empty()) throw ValidationError("cut_mode: none selected");
  if (!(c.kernel_tol >= 0.0)) throw ValidationError("kernel_tol: must be >= 0");
}

AnalysisReport analyze(const AnalysisConfig& config) {
  validate(config);
  AnalysisReport r;
  r.config = config;
  SimplicialComplex complex;
  if (config.gen) {
    r.source = to_string(*config.gen);
    r.graph = generate(*config.gen);
    complex = clique_complex(r.graph, config.max_dim);
  } else if (config.input_format == InputFormat::edges) {
    r.source = *config.input_path;
    r.graph = load_edge_list_file(*config.input_path);
    complex = clique_complex(r.graph, config.max_dim);
  } else {
    r.source = *config.input_path;
    auto fc = load_facet_list_file(*config.input_path, config.max_dim);
    auto skeleton = fc.complex.one_skeleton();
    std::vector<Edge> edges(skeleton.edges().begin(), skeleton.edges().end());
    r.graph = Graph(skeleton.num_vertices(), std::move(edges), fc.labels);
    complex = std::move(fc.complex);
  }

  const auto inv = compute_invariants(r.graph, complex, config.kernel_tol);
  r.betti = inv.betti;

  auto ks = config.k_values;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (auto k : ks) {
    AnalysisRow row;
    row.k = k;
    row.lambda2 = inv.lambda2;
    row.beta0 = inv.betti.at(0);
    row.beta1 = inv.betti.at(1);
    row.lambda2_1 = inv.lambda2_k(1, config.l2k_mode);
    if (config.max_dim >= 2) {
      row.beta2 = inv.betti.at(2);
      row.lambda2_2 = inv.lambda2_k(2, config.l2k_mode);
    }
    ActualCuts cuts;
    for (auto mode : config.modes) {
      if (mode == CutMode::component_count && k > inv.n) continue;
      auto cut = lambda_s(r.graph, k, mode, config.budget);
      (mode == CutMode::size_bounded ? cuts.size_bounded
                                     : cuts.component_count) = std::move(cut);
    }
    for (auto variant : config.variants)
      row.bounds.push_back(
          theorem34_bound(inv, k, variant, config.l2k_mode, cuts));
    r.rows.push_back(std::move(row));
  }
  return r;
}

std::string to_json(const AnalysisReport& r) {
  const auto& cfg = r.config;
  json variants = json::array(), modes = json::array();
  for (auto v : cfg.variants) variants.push_back(to_string(v));
  for (auto m : cfg.modes) modes.push_back(to_string(m));

  json graph = {{"n", r.graph.num_vertices()},
                {"m", r.graph.num_edges()},
                {"vol", volume(r.graph)}};
  if (!r.graph.labels().empty()) graph["labels"] = r.graph.labels();

  json rows = json::array();
  for (const auto& row : r.rows) {
    const auto& first = row.bounds.front();
    json bounds = json::object(), violated = json::object();
    for (const auto& b : row.bounds) {
      bounds[to_string(b.variant)] = {{"term2", num(b.term2)},
                                      {"bound", num(b.bound)}};
      json per_mode = json::object();
      for (auto m : cfg.modes) per_mode[to_string(m)] = opt(b.violated(m));
      violated[to_string(b.variant)] = per_mode;
    }
    json actuals = json::object();
    for (auto m : cfg.modes) {
      const auto& cut = first.actual.get(m);
      actuals[to_string(m)] = cut ? cut_json(*cut) : json(nullptr);
    }
    const auto& primary = first.actual.get(cfg.modes.front());
    json actual = primary && primary->proven_optimal ? json(primary->size)
                                                     : json(nullptr);
    rows.push_back({{"k", row.k},
                    {"lambda2", num(row.lambda2)},
                    {"beta0", row.beta0},
                    {"beta1", row.beta1},
                    {"beta2", opt(row.beta2)},
                    {"lambda2_1", num(row.lambda2_1)},
                    {"lambda2_2", opt(row.lambda2_2)},
                    {"beta_km1", first.beta_km1},
                    {"lambda2_km1", num(first.lambda2_km1)},
                    {"term1", num(first.term1)},
                    {"bound", num(first.bound)},
                    {"actual", actual},
                    {"bounds", bounds},
                    {"actuals", actuals},
                    {"violated", violated},
                    {"variant", to_string(first.variant)},
                    {"cut_mode", to_string(cfg.modes.front())},
                    {"l2k_mode", to_string(cfg.l2k_mode)}});
  }

  json doc = {
      {"schema_version", 1},
      {"command", "analyze"},
      {"input", r.source},
      {"graph", graph},
      {"config",
       {{"k_values", cfg.k_values},
        {"max_dim", cfg.max_dim},
        {"variants", variants},
        {"cut_modes", modes},
        {"l2k_mode", to_string(cfg.l2k_mode)},
        {"node_budget", cfg.budget.max_nodes},
        {"time_budget_ms", cfg.budget.max_time.count()},
        {"kernel_tol", num(cfg.kernel_tol)}}},
      {"betti", r.betti.betti},
      {"simplex_counts", r.betti.counts},
      {"boundary_ranks", r.betti.ranks},
      {"conventions",
       {{"vol", "sum of degrees (2|E|)"},
        {"complex", "clique complex truncated at max_dim"},
        {"term1", "lambda2 * min(beta_{k-1}/beta0, 1)"},
        {"actual", "null unless proven optimal; see actuals.*.upper_bound"}}},
      {"rows", rows}};
  return doc.dump(2) + "\n";
}

namespace {

struct FlatRow {
  const AnalysisRow* row;
  const BoundReport* bound;
  CutMode mode;
};

std::vector<FlatRow> flatten(const AnalysisReport& r) {
  std::vector<FlatRow> out;
  for (const auto& row : r.rows)
    for (const auto& b : row.bounds)
      for (auto m : r.config.modes) out.push_back({&row, &b, m});
  return out;
}

}  // namespace

std::string to_csv(const AnalysisReport& r) {
  std::ostringstream out;
  out << kAnalysisCsvHeader << "\n";
  for (const auto& f : flatten(r)) {
    const auto& row = *f.row;
    const auto& b = *f.bound;
    const auto& cut = b.actual.get(f.mode);
    out << row.k << ',' << format_number(row.lambda2) << ',' << row.beta0
        << ',' << row.beta1 << ',' << opt_text(row.beta2) << ','
        << format_number(row.lambda2_1) << ',' << opt_text(row.lambda2_2)
        << ',' << to_string(b.variant) << ',' << to_string(f.mode) << ','
        << to_string(b.l2k_mode) << ',' << format_number(b.term1) << ','
        << format_number(b.term2) << ',' << format_number(b.bound) << ','
        << (cut && cut->proven_optimal ? std::to_string(cut->size) : "") << ','
        << (cut ? std::to_string(cut->size) : "") << ','
        << (cut ? (cut->proven_optimal ? "true" : "false") : "") << ','
        << opt_text(b.violated(f.mode)) << "\n";
  }
  return out.str();
}

std::string to_markdown(const AnalysisReport& r) {
  std::ostringstream out;
  out << "| k | lambda2 | beta0 | beta1 | beta2 | lambda2_1 | lambda2_2 | "
         "bound | actual | flags |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& f : flatten(r)) {
    const auto& row = *f.row;
    const auto& b = *f.bound;
    const auto& cut = b.actual.get(f.mode);
    std::string actual = "-";
    if (cut) {
      actual = cut->proven_optimal ? std::to_string(cut->size)
                                   : "<=" + std::to_string(cut->size);
    }
    std::string flags = short_name(b.variant) + "," + short_name(f.mode) + "," +
                        (b.l2k_mode == L2kMode::second_smallest ? "second"
                                                                : "nonzero");
    if (auto v = b.violated(f.mode); v && *v) flags += ",violated";
    if (cut && !cut->proven_optimal) flags += ",unproven";
    out << "| " << row.k << " | " << format_number(row.lambda2) << " | "
        << row.beta0 << " | " << row.beta1 << " | "
        << (row.beta2 ? std::to_string(*row.beta2) : "-") << " | "
        << format_number(row.lambda2_1) << " | "
        << (row.lambda2_2 ? format_number(*row.lambda2_2) : "-") << " | "
        << format_number(b.bound) << " | " << actual << " | " << flags
        << " |\n";
  }
  return out.str();
}

std::string render(const AnalysisReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return to_json(r);
    case OutputFormat::csv: return to_csv(r);
    case OutputFormat::markdown: return to_markdown(r);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t as_count(const std::string& name, double v) {
  if (!(v >= 0.0) || v != std::floor(v)) {
    throw ValidationError("values: parameter '" + name +
                          "' needs nonnegative integers, got " +
                          format_number(v));
  }
  return static_cast<std::size_t>(v);
}

GraphSpec with_param(GraphSpec spec, const std::string& name, double v) {
  if (name.empty()) return spec;
  bool ok = std::visit(
      overloaded{
          [&](family::ErdosRenyi& f) {
            if (name == "p") return f.p = v, true;
            if (name == "n") return f.n = as_count(name, v), true;
            return false;
          },
          [&](family::RandomRegular& f) {
            if (name == "d") return f.d = as_count(name, v), true;
            if (name == "n") return f.n = as_count(name, v), true;
            return false;
          },
          [&](family::WattsStrogatz& f) {
            if (name == "beta") return f.beta = v, true;
            if (name == "k") return f.k = as_count(name, v), true;
            if (name == "n") return f.n = as_count(name, v), true;
            return false;
          },
          [](auto&) { return false; },
      },
      spec.family);
  if (!ok) {
    throw ValidationError("param: '" + name + "' is not a parameter of family '" +
                          family_name(spec.family) + "'");
  }
  return spec;
}

struct SampleK {
  std::vector<double> bounds;                 // per variant
  std::vector<std::optional<CutResult>> cuts; // per mode
  std::vector<std::optional<bool>> violated;  // per variant*modes + mode
  double prediction = 0.0;
};

struct Sample {
  std::vector<SampleK> per_k;
};

Sample run_sample(const SweepConfig& cfg, const GraphSpec& spec,
                  const std::vector<std::size_t>& ks) {
  const auto g = generate(spec);
  const auto complex = clique_complex(g, cfg.max_dim);
  const auto inv = compute_invariants(g, complex, cfg.kernel_tol);
  double p;
  if (const auto* er = std::get_if<family::ErdosRenyi>(&spec.family)) {
    p = er->p;
  } else {
    const double n = static_cast<double>(inv.n);
    p = inv.n >= 2 ? 2.0 * static_cast<double>(inv.m) / (n * (n - 1)) : 0.0;
  }
  Sample s;
  for (auto k : ks) {
    SampleK sk;
    ActualCuts cuts;
    for (auto mode : cfg.modes) {
      std::optional<CutResult> cut;
      if (!(mode == CutMode::component_count && k > inv.n))
        cut = lambda_s(g, k, mode, cfg.budget);
      (mode == CutMode::size_bounded ? cuts.size_bounded
                                     : cuts.component_count) = cut;
      sk.cuts.push_back(cut);
    }
    for (auto variant : cfg.variants) {
      auto b = theorem34_bound(inv, k, variant, cfg.l2k_mode, cuts);
      sk.bounds.push_back(b.bound);
      for (auto mode : cfg.modes) sk.violated.push_back(b.violated(mode));
    }
    sk.prediction =
        inv.n >= 1 ? random_graph_prediction(inv.n, std::clamp(p, 0.0, 1.0),
                                             inv.betti.at(k - 1))
                   : 0.0;
    s.per_k.push_back(std::move(sk));
  }
  return s;
}

Stat stat_of(const std::vector<double>& xs) {
  Stat s;
  if (xs.empty()) return s;
  s.min = *std::min_element(xs.begin(), xs.end());
  s.max = *std::max_element(xs.begin(), xs.end());
  double total = 0.0;
  for (double x : xs) total += x;
  s.mean = total / static_cast<double>(xs.size());
  return s;
}

}  // namespace

void validate(const SweepConfig& c) {
  if (!is_random(c.base)) {
    throw ValidationError("gen: sweep needs a random family (er, rr, ws), got '" +
                          family_name(c.base.family) + "'");
  }
  if (c.seeds == 0) throw ValidationError("seeds: must be >= 1");
  if (c.k_values.empty()) throw ValidationError("k_values: must be non-empty");
  for (auto k : c.k_values)
    if (k < 2)
      throw ValidationError("k_values: every k must be >= 2, got " +
                            std::to_string(k));
  if (c.max_dim + 1 < max_of(c.k_values)) {
    throw ValidationError("max_dim: must be >= max(k_values) - 1 = " +
                          std::to_string(max_of(c.k_values) - 1));
  }
  if (c.variants.empty()) throw ValidationError("variant: none selected");
  if (c.modes.empty()) throw ValidationError("cut_mode: none selected");
  if (!c.param.empty() && c.values.empty())
    throw ValidationError("values: --param given without values");
  if (c.param.empty() && !c.values.empty())
    throw ValidationError("param: values given without --param");
  const auto n = static_cast<double>(family_size(c.base.family));
  for (double v : c.values) {
    if (!std::isfinite(v)) throw ValidationError("values: not finite");
    const double value = c.values_logn && n > 1 ? v * std::log(n) / n : v;
    validate(with_param(c.base, c.param, value));
  }
}

std::uint64_t sweep_seed(std::uint64_t master, std::size_t index) {
  return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(index) + 1));
}

SweepReport sweep(const SweepConfig& config) {
  validate(config);
  SweepReport report;
  report.config = config;

  auto ks = config.k_values;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  // Resolve the concrete spec for every swept value.
  std::vector<GraphSpec> specs;
  std::vector<double> values;
  if (config.param.empty()) {
    specs.push_back(config.base);
    values.push_back(0.0);
  } else {
    for (double v : config.values) {
      double value = v;
      if (config.values_logn) {
        const auto n = static_cast<double>(family_size(config.base.family));
        value = n > 1 ? v * std::log(n) / n : 0.0;
      }
      auto spec = with_param(config.base, config.param, value);
      validate(spec);
      specs.push_back(spec);
      values.push_back(value);
    }
  }

  const std::size_t total = specs.size() * config.seeds;
  std::vector<Sample> samples(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < total;) {
      try {
        auto spec = specs[i / config.seeds];
        spec.seed = sweep_seed(config.master_seed, i % config.seeds);
        samples[i] = run_sample(config, spec, ks);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t jobs = config.jobs ? config.jobs
                                  : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, total);
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  const auto nmodes = config.modes.size();
  for (std::size_t vi = 0; vi < specs.size(); ++vi) {
    const auto& spec = specs[vi];
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      for (std::size_t bi = 0; bi < config.variants.size(); ++bi) {
        for (std::size_t mi = 0; mi < nmodes; ++mi) {
          SweepRow row;
          row.family = family_name(spec.family);
          row.n = family_size(spec.family);
          row.param = config.param;
          row.value = values[vi];
          row.k = ks[ki];
          row.variant = config.variants[bi];
          row.mode = config.modes[mi];
          row.l2k_mode = config.l2k_mode;
          row.seeds = config.seeds;
          std::vector<double> bounds, actuals, preds;
          std::size_t optimal = 0, decided = 0, violated = 0;
          for (std::size_t s = 0; s < config.seeds; ++s) {
            const auto& sk = samples[vi * config.seeds + s].per_k[ki];
            bounds.push_back(sk.bounds[bi]);
            preds.push_back(sk.prediction);
            if (const auto& cut = sk.cuts[mi]) {
              actuals.push_back(static_cast<double>(cut->size));
              if (cut->proven_optimal) ++optimal;
            }
            if (const auto& v = sk.violated[bi * nmodes + mi]) {
              ++decided;
              if (*v) ++violated;
            }
          }
          row.bound = stat_of(bounds);
          row.prediction = stat_of(preds);
          if (!actuals.empty()) {
            row.actual = stat_of(actuals);
            row.optimal_fraction =
                static_cast<double>(optimal) / static_cast<double>(actuals.size());
            if (row.prediction.mean > 0.0)
              row.ratio = row.actual->mean / row.prediction.mean;
            if (row.bound.mean > 0.0)
              row.ratio_bound = row.actual->mean / row.bound.mean;
          }
          if (decided > 0)
            row.violation_fraction =
                static_cast<double>(violated) / static_cast<double>(decided);
          if (const auto* er = std::get_if<family::ErdosRenyi>(&spec.family)) {
            const auto n = static_cast<double>(er->n);
            if (er->n > 1) {
              row.threshold = std::log(n) / n;
              row.above_threshold = er->p >= *row.threshold;
            }
          }
          report.rows.push_back(std::move(row));
        }
      }
    }
  }
  return report;
}

std::string to_csv(const SweepReport& r) {
  std::ostringstream out;
  out << kSweepCsvHeader << "\n";
  for (const auto& row : r.rows) {
    out << row.family << ',' << row.n << ',' << row.param << ','
        << format_number(row.value) << ',' << row.k << ','
        << to_string(row.variant) << ',' << to_string(row.mode) << ','
        << to_string(row.l2k_mode) << ',' << row.seeds << ','
        << format_number(row.bound.mean) << ',' << format_number(row.bound.min)
        << ',' << format_number(row.bound.max) << ',';
    if (row.actual) {
      out << format_number(row.actual->mean) << ','
          << format_number(row.actual->min) << ','
          << format_number(row.actual->max) << ',';
    } else {
      out << ",,,";
    }
    out << format_number(row.optimal_fraction) << ','
        << format_number(row.prediction.mean) << ','
        << format_number(row.prediction.min) << ','
        << format_number(row.prediction.max) << ',' << opt_text(row.ratio)
        << ',' << opt_text(row.ratio_bound) << ','
        << opt_text(row.violation_fraction) << ',' << opt_text(row.threshold)
        << ',' << opt_text(row.above_threshold) << "\n";
  }
  return out.str();
}

std::string to_json(const SweepReport& r) {
  auto stat = [](const Stat& s) {
    return json{{"mean", num(s.mean)}, {"min", num(s.min)}, {"max", num(s.max)}};
  };
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"family", row.family},
                    {"n", row.n},
                    {"param", row.param},
                    {"value", num(row.value)},
                    {"k", row.k},
                    {"variant", to_string(row.variant)},
                    {"cut_mode", to_string(row.mode)},
                    {"l2k_mode", to_string(row.l2k_mode)},
                    {"seeds", row.seeds},
                    {"bound", stat(row.bound)},
                    {"actual", row.actual ? stat(*row.actual) : json(nullptr)},
                    {"optimal_fraction", num(row.optimal_fraction)},
                    {"prediction", stat(row.prediction)},
                    {"ratio", opt(row.ratio)},
                    {"ratio_bound", opt(row.ratio_bound)},
                    {"violation_fraction", opt(row.violation_fraction)},
                    {"threshold", opt(row.threshold)},
                    {"above_threshold", opt(row.above_threshold)}});
  }
  const auto& c = r.config;
  json doc = {{"schema_version", 1},
              {"command", "sweep"},
              {"gen", to_string(c.base)},
              {"master_seed", c.master_seed},
              {"seeds", c.seeds},
              {"rows", rows}};
  return doc.dump(2) + "\n";
}

std::string to_markdown(const SweepReport& r) {
  std::ostringstream out;
  out << "| family | n | " << (r.config.param.empty() ? "param" : r.config.param)
      << " | k | variant | mode | bound (mean) | actual (mean) | "
         "prediction (mean) | ratio | violation fraction | optimal fraction "
         "| above log(n)/n |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : r.rows) {
    out << "| " << row.family << " | " << row.n << " | "
        << format_number(row.value) << " | " << row.k << " | "
        << short_name(row.variant) << " | " << short_name(row.mode) << " | "
        << format_number(row.bound.mean) << " | "
        << (row.actual ? format_number(row.actual->mean) : "-") << " | "
        << format_number(row.prediction.mean) << " | "
        << (row.ratio ? format_number(*row.ratio) : "-") << " | "
        << (row.violation_fraction ? format_number(*row.violation_fraction)
                                   : "-")
        << " | " << format_number(row.optimal_fraction) << " | "
        << (row.above_threshold ? (*row.above_threshold ? "yes" : "no") : "-")
        << " |\n";
  }
  return out.str();
}

std::string render(const SweepReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return to_json(r);
    case OutputFormat::csv: return to_csv(r);
    case OutputFormat::markdown: return to_markdown(r);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Oracle check

std::vector<CorpusEntry> small_graph_corpus(std::size_t max_n,
                                            std::size_t max_edges,
                                            std::size_t random_seeds) {
  std::vector<CorpusEntry> out;
  auto add = [&](const std::string& id, Graph g) {
    if (g.num_vertices() > max_n || g.num_edges() > max_edges) return;
    std::vector<std::size_t> ks;
    for (std::size_t k = 2; k <= g.num_vertices(); ++k) ks.push_back(k);
    out.push_back({id, std::move(g), std::move(ks)});
  };
  auto add_spec = [&](const GraphSpec& spec) {
    add(to_string(spec), generate(spec));
  };
  for (std::size_t n = 2; n <= max_n; ++n) {
    add_spec({family::Complete{n}});
    if (n >= 3) add_spec({family::Cycle{n}});
    add_spec({family::Path{n}});
  }
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 4); ++n)
    add_spec({family::Edgeless{n}});
  {
    // Octahedron: K6 minus a perfect matching.
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 6; ++i)
      for (Vertex j = i + 1; j < 6; ++j)
        if (j != i + 3) edges.push_back({i, j});
    add("octahedron", Graph(6, std::move(edges)));
  }
  for (std::size_t n = 5; n <= max_n; ++n)
    for (double p : {0.3, 0.5, 0.7})
      for (std::uint64_t s = 1; s <= random_seeds; ++s)
        add_spec({family::ErdosRenyi{n, p}, s});
  for (std::size_t n : {6u, 8u})
    for (std::size_t d : {2u, 3u, 4u})
      for (std::uint64_t s = 1; s <= 2; ++s)
        add_spec({family::RandomRegular{n, d}, s});
  for (std::size_t k : {2u, 4u})
    for (double beta : {0.1, 0.5})
      for (std::uint64_t s = 1; s <= 2; ++s)
        add_spec({family::WattsStrogatz{8, k, beta}, s});
  return out;
}

OracleCheckSummary oracle_check(const std::vector<CorpusEntry>& corpus,
                                const SearchBudget& budget) {
  OracleCheckSummary summary;
  for (const auto& entry : corpus) {
    if (entry.graph.num_edges() > kOracleMaxEdges) continue;
    ++summary.graphs;
    for (auto k : entry.k_values) {
      for (auto mode : {CutMode::size_bounded, CutMode::component_count}) {
        if (mode == CutMode::component_count && k > entry.graph.num_vertices())
          continue;
        ++summary.cases;
        const auto fast = lambda_s(entry.graph, k, mode, budget);
        const auto slow = lambda_s_oracle(entry.graph, k, mode);
        std::string problem;
        if (!fast.proven_optimal) {
          problem = "search budget exhausted";
        } else if (fast.size != slow.size) {
          problem = "search " + std::to_string(fast.size) + " vs oracle " +
                    std::to_string(slow.size);
        } else if (fast.witness.size() != fast.size ||
                   !satisfies(entry.graph, fast.witness, k, mode)) {
          problem = "invalid search witness";
        } else if (!satisfies(entry.graph, slow.witness, k, mode)) {
          problem = "invalid oracle witness";
        }
        if (problem.empty()) {
          ++summary.passed;
        } else {
          summary.failures.push_back(entry.id + " k=" + std::to_string(k) +
                                     " " + to_string(mode) + ": " + problem);
        }
      }
    }
  }
  return summary;
}

}  // namespace netres
