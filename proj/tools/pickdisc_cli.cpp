// Command-line front end: loads embeddings and coefficient sequences from
// JSON, runs the analyses, and emits deterministic machine-readable reports.
//
// Exit codes: 0 success / analysis positive, 1 analysis negative,
// 2 malformed or invalid input.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <memory>
#include <numbers>
#include <optional>
#include <string>

#include "pickdisc/isomorphism.hpp"
#include "pickdisc/json_io.hpp"
#include "pickdisc/kernel.hpp"
#include "pickdisc/series.hpp"

namespace {

using pickdisc::Complex;
using pickdisc::Json;

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pickdisc::InvalidInput("cannot open input file: " + path);
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw pickdisc::InvalidInput("malformed JSON in " + path);
  return j;
}

void write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw pickdisc::InvalidInput("cannot open output file: " + output_path);
  out << text;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json crossing_to_json(const pickdisc::CrossingPair& p) {
  Json j;
  j["xi"] = pickdisc::complex_to_json(p.xi);
  j["zeta"] = pickdisc::complex_to_json(p.zeta);
  j["residual"] = p.residual;
  return j;
}

Json crossings_to_json(const pickdisc::CrossingScan& scan) {
  Json arr = Json::array();
  for (const auto& p : scan.pairs) arr.push_back(crossing_to_json(p));
  return arr;
}

std::unique_ptr<pickdisc::Kernel> kernel_from_json(const Json& j, int truncation) {
  if (j.is_object() && j.contains("dimension")) {
    return std::make_unique<pickdisc::DiscKernel>(pickdisc::embedding_from_json(j));
  }
  if (j.is_object() && j.contains("c")) {
    auto c = pickdisc::coefficients_from_json(j);
    return std::make_unique<pickdisc::RotationInvariantKernel>(c.values(), truncation);
  }
  throw pickdisc::InvalidInput("kernel must be an embedding or a coefficient sequence");
}

struct ValidateArgs {
  std::string input;
  std::string output;
  int grid = 512;
  std::optional<double> tolerance;
};

int cmd_validate(const ValidateArgs& args) {
  auto f = pickdisc::embedding_from_json(load_json_file(args.input));
  pickdisc::ValidationTolerances tols;
  if (args.tolerance) {
    tols.boundary = *args.tolerance;
    tols.transversality = *args.tolerance;
  }
  const auto rep = pickdisc::validate_embedding(f, args.grid, tols);

  Json j;
  j["grid"] = args.grid;
  j["boundary_norm_dev"] = rep.boundary_norm_dev;
  j["interior_norm_max"] = rep.interior_norm_max;
  j["derivative_min"] = rep.derivative_min;
  j["transversality_min"] = rep.transversality_min;
  j["transversality_imag_max"] = rep.transversality_imag_max;
  j["checks"] = Json{{"boundary", rep.boundary_ok},
                     {"interior", rep.interior_ok},
                     {"derivative", rep.derivative_ok},
                     {"transversality", rep.transversality_ok}};
  j["failures"] = rep.failures();
  j["pass"] = rep.pass();
  write_output(pickdisc::dump_deterministic(j), args.output);
  return rep.pass() ? kExitPass : kExitNegative;
}

struct CrossingsArgs {
  std::string input;
  std::string compare;
  std::string output;
  int grid = 2048;
  std::optional<double> tolerance;
};

int cmd_crossings(const CrossingsArgs& args) {
  auto f = pickdisc::embedding_from_json(load_json_file(args.input));
  pickdisc::CrossingSearchOptions opts;
  if (args.tolerance) opts.residual_tol = *args.tolerance;
  const auto scan = pickdisc::find_self_crossings(f, args.grid, opts);

  Json j;
  j["grid"] = args.grid;
  j["crossings"] = crossings_to_json(scan);
  j["refinement_failures"] = scan.refinement_failures;

  int exit_code = kExitPass;
  if (!args.compare.empty()) {
    auto g = pickdisc::embedding_from_json(load_json_file(args.compare));
    const auto scan_g = pickdisc::find_self_crossings(g, args.grid, opts);
    const auto verdict = pickdisc::same_crossing_type_pairs(scan.pairs, scan_g.pairs);
    Json cmp;
    cmp["crossings_other"] = crossings_to_json(scan_g);
    cmp["same_crossing_type"] = verdict.same;
    if (verdict.witness) cmp["witness"] = crossing_to_json(*verdict.witness);
    j["compare"] = std::move(cmp);
    exit_code = verdict.same ? kExitPass : kExitNegative;
  }
  write_output(pickdisc::dump_deterministic(j), args.output);
  return exit_code;
}

struct ObstructArgs {
  std::string input_f;
  std::string input_g;
  std::string output;
  std::string format = "json";
  int grid = 2048;
  double t_min = 1e-6;
};

Json mobius_to_json(const pickdisc::MobiusTransform& m) {
  Json j;
  j["lambda"] = pickdisc::complex_to_json(m.lambda());
  j["alpha"] = pickdisc::complex_to_json(m.alpha());
  return j;
}

int cmd_obstruct(const ObstructArgs& args) {
  auto f = pickdisc::embedding_from_json(load_json_file(args.input_f));
  auto g = pickdisc::embedding_from_json(load_json_file(args.input_g));
  const auto scan_f = pickdisc::find_self_crossings(f, args.grid);
  const auto scan_g = pickdisc::find_self_crossings(g, args.grid);
  const auto type = pickdisc::same_crossing_type_pairs(scan_f.pairs, scan_g.pairs);

  Json j;
  j["crossings_f"] = crossings_to_json(scan_f);
  j["crossings_g"] = crossings_to_json(scan_g);
  j["same_crossing_type"] = type.same;

  if (!type.same) {
    j["verdict"] = "obstruction_failed";
    j["reason"] = "crossing types differ";
    if (type.witness) j["witness"] = crossing_to_json(*type.witness);
    write_output(pickdisc::dump_deterministic(j), args.output);
    return kExitNegative;
  }

  if (scan_f.pairs.size() != 1) {
    // Injective pair (or a richer same-type configuration): nothing left to
    // obstruct with the two-point machinery.
    j["verdict"] = "obstruction_passed";
    j["note"] = scan_f.pairs.empty() ? "both maps are boundary-injective"
                                     : "crossing configurations match";
    write_output(pickdisc::dump_deterministic(j), args.output);
    return kExitPass;
  }

  // Normalize the single crossing to +-1 when needed; the applied map is
  // part of the report.
  auto normalized = [&](const pickdisc::EmbeddingMap& m, const pickdisc::CrossingPair& pair,
                        const char* key) {
    if (pickdisc::has_crossing_at_pm1(m)) return m;
    const auto nu = pickdisc::crossing_normalization_map(pair.xi, pair.zeta);
    j["normalization"][key] = mobius_to_json(nu);
    return pickdisc::compose_with_mobius(m, nu);
  };
  const auto fn = normalized(f, scan_f.pairs.front(), "f");
  const auto gn = normalized(g, scan_g.pairs.front(), "g");

  const double ratio_f = pickdisc::invariant_ratio(fn).value;
  const double ratio_g = pickdisc::invariant_ratio(gn).value;
  const auto cand = pickdisc::candidate_automorphisms(fn, gn);
  j["ratio_f"] = ratio_f;
  j["ratio_g"] = ratio_g;
  j["alpha"] = cand.alpha;
  j["beta"] = cand.beta;
  if (std::abs(cand.alpha) < 1e-12 && std::abs(cand.beta) < 1e-12) {
    j["note"] = "identity and flip are the only candidates";
  }

  // Matched-path limits for the pair as given and after aligning g by the
  // alpha candidate.
  const auto raw = pickdisc::matched_path_limits(fn, gn, args.t_min);
  j["predicted_dg_limit"] = raw.predicted_dg_limit;
  j["extrapolated_dg"] = raw.extrapolated_dg;
  j["extrapolated_df"] = raw.extrapolated_df;
  j["collision_bound"] = raw.collision_bound;
  j["singular_samples"] = raw.singular_samples;
  j["extrapolation_order"] = 1;  // heuristic: error terms are only o(1)

  const auto g_aligned = pickdisc::compose_with_mobius(gn, cand.alpha_map());
  const auto aligned = pickdisc::matched_path_limits(fn, g_aligned, args.t_min);
  j["aligned_predicted_dg_limit"] = aligned.predicted_dg_limit;
  j["aligned_extrapolated_dg"] = aligned.extrapolated_dg;

  const bool passed = aligned.extrapolated_dg < 1e-3;
  j["verdict"] = passed ? "obstruction_passed" : "obstruction_failed";

  if (args.format == "csv") {
    std::string csv = "t,df_sq,dg_sq,gap_sq\n";
    for (std::size_t i = 0; i < raw.t_samples.size(); ++i) {
      csv += format_double(raw.t_samples[i]) + "," + format_double(raw.df_sq[i]) + "," +
             format_double(raw.dg_sq[i]) + "," + format_double(raw.observed_gap_sq[i]) + "\n";
    }
    write_output(csv, args.output);
  } else {
    Json ladder = Json::array();
    for (std::size_t i = 0; i < raw.t_samples.size(); ++i) {
      ladder.push_back(Json{{"t", raw.t_samples[i]},
                            {"df_sq", raw.df_sq[i]},
                            {"dg_sq", raw.dg_sq[i]},
                            {"gap_sq", raw.observed_gap_sq[i]}});
    }
    j["ladder"] = std::move(ladder);
    write_output(pickdisc::dump_deterministic(j), args.output);
  }
  return passed ? kExitPass : kExitNegative;
}

struct SeriesArgs {
  std::string input;
  std::string output;
  std::string format = "json";
  std::optional<double> weighted_hardy;
  int truncation = 200;
  bool truncation_given = false;  // file input keeps all terms unless set
  bool require_cp = false;
};

const char* verdict_name(pickdisc::PickVerdict v) {
  switch (v) {
    case pickdisc::PickVerdict::CompletePick:
      return "complete_pick";
    case pickdisc::PickVerdict::NotCompletePick:
      return "not_complete_pick";
    default:
      return "inconclusive";
  }
}

pickdisc::CoefficientSequence truncated(const pickdisc::CoefficientSequence& c, int truncation) {
  if (truncation < 0 || truncation >= c.truncation()) return c;
  const std::size_t len = static_cast<std::size_t>(truncation) + 1;
  if (c.is_exact()) {
    auto v = c.exact_values();
    v.resize(len);
    return pickdisc::CoefficientSequence::exact(std::move(v), c.generator());
  }
  auto v = c.values();
  v.resize(len);
  return pickdisc::CoefficientSequence::floating(std::move(v), c.generator());
}

int cmd_series(const SeriesArgs& args) {
  pickdisc::CoefficientSequence c =
      args.weighted_hardy
          ? pickdisc::weighted_hardy_coeffs(*args.weighted_hardy, args.truncation)
          : truncated(pickdisc::coefficients_from_json(load_json_file(args.input)),
                      args.truncation_given ? args.truncation : -1);
  const auto cn = pickdisc::normalize(c);
  const auto rec = pickdisc::reciprocal_coeffs(cn);
  const auto cp = pickdisc::complete_pick_check(cn);

  Json j;
  j["mode"] = cn.is_exact() ? "exact" : "float";
  j["generator"] = cn.generator();
  j["truncation"] = cn.truncation();
  j["zero_coefficient_indices"] = cn.zero_indices();
  {
    Json r = Json::array();
    for (std::size_t n = 1; n < rec.r.size(); ++n) r.push_back(rec.r[n]);
    j["reciprocal"] = Json{{"r", std::move(r)},
                           {"sum", rec.sum_r},
                           {"all_nonnegative", rec.all_nonnegative}};
  }
  {
    Json v;
    v["verdict"] = verdict_name(cp.verdict);
    if (cp.first_bad_index >= 0) v["first_bad_index"] = cp.first_bad_index;
    v["sum_exceeds_one"] = cp.sum_exceeds_one;
    j["complete_pick"] = std::move(v);
  }

  if (cp.verdict == pickdisc::PickVerdict::CompletePick) {
    const auto dim = pickdisc::embedding_dimension(cn);
    Json d;
    d["kind"] = dim.kind == pickdisc::EmbeddingDimensionVerdict::Kind::Finite
                    ? "finite"
                    : "infinite_up_to_truncation";
    if (dim.kind == pickdisc::EmbeddingDimensionVerdict::Kind::Finite) {
      d["dimension"] = dim.dimension;
    }
    d["nonzero_indices"] = dim.nonzero_indices;
    d["truncation"] = dim.truncation;
    d["tolerance_used"] = dim.tolerance_used;
    j["embedding_dimension"] = std::move(d);

    const auto ren = pickdisc::renewal_limit(cn);
    j["renewal"] = Json{{"mu", ren.mu},
                        {"limit", ren.limit},
                        {"c_tail_min", ren.c_tail_min},
                        {"c_tail_max", ren.c_tail_max},
                        {"hardy_equivalent", ren.hardy_equivalent},
                        {"sum_r", ren.sum_r},
                        {"sum_is_one", ren.sum_is_one},
                        {"extension_predicted", ren.extension_predicted},
                        {"periodic_support", ren.periodic_support},
                        {"support_gcd", ren.support_gcd}};
  }

  if (args.format == "csv") {
    std::string csv = "n,c,r\n";
    for (std::size_t n = 0; n < cn.size(); ++n) {
      csv += std::to_string(n) + "," + format_double(cn.value(n)) + "," +
             format_double(rec.r[n]) + "\n";
    }
    write_output(csv, args.output);
  } else {
    write_output(pickdisc::dump_deterministic(j), args.output);
  }

  if (args.require_cp && cp.verdict != pickdisc::PickVerdict::CompletePick) {
    return kExitNegative;
  }
  return kExitPass;
}

struct PickArgs {
  std::string input;
  std::string output;
  int truncation = -1;
};

int cmd_pick(const PickArgs& args) {
  const Json in = load_json_file(args.input);
  if (!in.is_object() || !in.contains("kernel") || !in.contains("points") ||
      !in.contains("targets")) {
    throw pickdisc::InvalidInput("pick problem needs \"kernel\", \"points\" and \"targets\"");
  }
  const auto kernel = kernel_from_json(in["kernel"], args.truncation);
  std::vector<Complex> points, targets;
  for (const Json& e : in["points"]) points.push_back(pickdisc::complex_from_json(e));
  for (const Json& e : in["targets"]) targets.push_back(pickdisc::complex_from_json(e));

  const auto rep = pickdisc::pick_matrix(*kernel, points, targets);
  Json j;
  j["size"] = rep.size;
  Json rows = Json::array();
  for (std::size_t i = 0; i < rep.size; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < rep.size; ++k) {
      row.push_back(pickdisc::complex_to_json(rep.matrix[i * rep.size + k]));
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  j["min_eigenvalue"] = rep.min_eigenvalue;
  j["norm_estimate"] = rep.norm_estimate;
  j["psd"] = rep.psd;
  write_output(pickdisc::dump_deterministic(j), args.output);
  return rep.psd ? kExitPass : kExitNegative;
}

struct MetricArgs {
  std::string input;
  std::string output;
  std::string format = "json";
  int grid = 64;
  int truncation = -1;
  std::vector<double> base = {0.0, 0.0};
};

int cmd_metric(const MetricArgs& args) {
  const auto kernel = kernel_from_json(load_json_file(args.input), args.truncation);
  const Complex base(args.base[0], args.base[1]);
  if (std::abs(base) >= 1.0) throw pickdisc::InvalidInput("base point must lie in the open disc");

  const int n_radii = std::max(4, args.grid / 16);
  std::string csv = "re,im,dist\n";
  Json samples = Json::array();
  for (int k = 1; k <= n_radii; ++k) {
    const double radius = 0.95 * k / n_radii;
    for (int i = 0; i < args.grid; ++i) {
      const Complex z = std::polar(radius, 2.0 * std::numbers::pi * i / args.grid);
      const double dist = pickdisc::metric(*kernel, z, base);
      if (args.format == "csv") {
        csv += format_double(z.real()) + "," + format_double(z.imag()) + "," +
               format_double(dist) + "\n";
      } else {
        samples.push_back(Json{{"z", pickdisc::complex_to_json(z)}, {"dist", dist}});
      }
    }
  }
  if (args.format == "csv") {
    write_output(csv, args.output);
  } else {
    Json j;
    j["base"] = pickdisc::complex_to_json(base);
    j["grid"] = args.grid;
    j["samples"] = std::move(samples);
    write_output(pickdisc::dump_deterministic(j), args.output);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analytic discs attached to the sphere: kernels, crossings, obstructions"};
  app.require_subcommand(1);

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "check the embedding-map conditions");
  validate->add_option("input", validate_args.input, "embedding JSON")->required();
  validate->add_option("--grid", validate_args.grid, "boundary samples")
      ->check(CLI::Range(64, 1 << 20));
  validate->add_option("--tolerance", validate_args.tolerance, "pass/fail tolerance override");
  validate->add_option("--output", validate_args.output, "write the report here");

  CrossingsArgs crossings_args;
  auto* crossings = app.add_subcommand("crossings", "find boundary self-crossings");
  crossings->add_option("input", crossings_args.input, "embedding JSON")->required();
  crossings->add_option("--grid", crossings_args.grid, "scan grid size")
      ->check(CLI::Range(64, 1 << 20));
  crossings->add_option("--tolerance", crossings_args.tolerance, "crossing residual tolerance");
  crossings->add_option("--compare", crossings_args.compare,
                        "second embedding: compare crossing types");
  crossings->add_option("--output", crossings_args.output, "write the report here");

  ObstructArgs obstruct_args;
  auto* obstruct = app.add_subcommand("obstruct", "isomorphism obstructions for two embeddings");
  obstruct->add_option("f", obstruct_args.input_f, "first embedding JSON")->required();
  obstruct->add_option("g", obstruct_args.input_g, "second embedding JSON")->required();
  obstruct->add_option("--grid", obstruct_args.grid, "scan grid size")
      ->check(CLI::Range(64, 1 << 20));
  obstruct->add_option("--t-min", obstruct_args.t_min, "smallest matched-path parameter")
      ->check(CLI::Range(1e-12, 1e-2));
  obstruct->add_option("--format", obstruct_args.format, "json or csv (ladder table)")
      ->check(CLI::IsMember({"json", "csv"}));
  obstruct->add_option("--output", obstruct_args.output, "write the report here");

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series",
                                    "coefficient pipeline: reciprocal, Pick, dimension, renewal");
  series->add_option("input", series_args.input, "coefficient JSON");
  series->add_option("--weighted-hardy", series_args.weighted_hardy,
                     "use c_n = (1+n)^s instead of a file");
  series->add_option("--truncation", series_args.truncation, "series truncation")
      ->check(CLI::Range(16, 1 << 20))
      ->each([&series_args](const std::string&) { series_args.truncation_given = true; });
  series->add_flag("--require-cp", series_args.require_cp, "exit 1 unless complete Pick");
  series->add_option("--format", series_args.format, "json or csv (n, c, r table)")
      ->check(CLI::IsMember({"json", "csv"}));
  series->add_option("--output", series_args.output, "write the report here");

  PickArgs pick_args;
  auto* pick = app.add_subcommand("pick", "Pick matrix and positivity verdict");
  pick->add_option("input", pick_args.input, "problem JSON: kernel, points, targets")->required();
  pick->add_option("--truncation", pick_args.truncation, "series-kernel truncation")
      ->check(CLI::Range(16, 1 << 20));
  pick->add_option("--output", pick_args.output, "write the report here");

  MetricArgs metric_args;
  auto* metric = app.add_subcommand("metric", "kernel metric grid dump");
  metric->add_option("input", metric_args.input, "embedding or coefficient JSON")->required();
  metric->add_option("--grid", metric_args.grid, "angular samples per ring")
      ->check(CLI::Range(64, 1 << 20));
  metric->add_option("--truncation", metric_args.truncation, "series-kernel truncation")
      ->check(CLI::Range(16, 1 << 20));
  metric->add_option("--base", metric_args.base, "base point re im")->expected(2);
  metric->add_option("--format", metric_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  metric->add_option("--output", metric_args.output, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitInputError;
  }

  try {
    if (*validate) return cmd_validate(validate_args);
    if (*crossings) return cmd_crossings(crossings_args);
    if (*obstruct) return cmd_obstruct(obstruct_args);
    if (*series) {
      if (series_args.input.empty() && !series_args.weighted_hardy) {
        throw pickdisc::InvalidInput("series needs a coefficient file or --weighted-hardy");
      }
      return cmd_series(series_args);
    }
    if (*pick) return cmd_pick(pick_args);
    if (*metric) return cmd_metric(metric_args);
  } catch (const pickdisc::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
