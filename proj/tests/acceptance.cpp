// Acceptance suite: one check per shipped guarantee, one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pickdisc/isomorphism.hpp"
#include "pickdisc/json_io.hpp"
#include "pickdisc/kernel.hpp"
#include "pickdisc/series.hpp"

using namespace pickdisc;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Criterion {
  int id;
  const char* title;
  std::function<void(std::string&)> run;  // throws or appends detail on failure
};

struct Failure {
  std::string detail;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Complex random_disc_point(std::mt19937& rng, double max_radius) {
  std::uniform_real_distribution<double> radius(0.0, max_radius);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  return std::polar(radius(rng), angle(rng));
}

// ---------------------------------------------------------------------------

void criterion_ratio_law(std::string&) {
  for (double r : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const double ratio = invariant_ratio(make_f_r(r)).value;
    const double expected = (1.0 + r) / (1.0 - r);
    require(std::abs(ratio - expected) <= 1e-9,
            "ratio mismatch at r = " + std::to_string(r));
  }
}

void criterion_mobius_covariance(std::string&) {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> rdist(0.1, 0.9);
  std::uniform_real_distribution<double> adist(-0.6, 0.6);
  for (int trial = 0; trial < 50; ++trial) {
    const double r = rdist(rng);
    const double alpha = adist(rng);
    auto f = make_f_r(r);
    auto m = mobius_fixing_pm1(alpha, false);
    auto composed = compose_with_mobius(f, m);
    for (Complex xi : {Complex(1.0, 0.0), Complex(-1.0, 0.0)}) {
      const double predicted = transform_semi_invariant(f, m, xi);
      const double actual = semi_invariant(composed, xi);
      require(std::abs(predicted - actual) <= 1e-8 * (1.0 + std::abs(actual)),
              "covariance mismatch at r = " + std::to_string(r) +
                  ", alpha = " + std::to_string(alpha));
    }
  }
}

void criterion_candidate_automorphisms(std::string&) {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> rdist(0.1, 0.85);
  for (int trial = 0; trial < 10; ++trial) {
    const double r = rdist(rng);
    const double s = rdist(rng);
    auto cand = candidate_automorphisms(make_f_rs(r, -r), make_f_rs(s, -s));
    require(std::abs(cand.alpha) <= 1e-12, "alpha not zero for the symmetric family");
    require(std::abs(cand.beta) <= 1e-12, "beta not zero for the symmetric family");
  }

  const std::pair<double, double> pairs[] = {
      {0.5, 0.25}, {0.3, 0.7}, {0.1, 0.9}, {0.6, 0.2}, {0.45, 0.8}};
  for (auto [r, s] : pairs) {
    auto f = make_f_r(r);
    auto g = make_f_r(s);
    auto cand = candidate_automorphisms(f, g);
    auto aligned = compose_with_mobius(g, cand.alpha_map());
    const double rf = invariant_ratio(f).value;
    const double rg = invariant_ratio(aligned).value;
    require(std::abs(rf - rg) <= 1e-8 * (1.0 + rf),
            "alpha map fails to equalize ratios for (" + std::to_string(r) + ", " +
                std::to_string(s) + ")");
  }
}

void criterion_matched_path(std::string& detail) {
  auto rep = matched_path_limits(make_f_r(0.5), make_f_r(0.25), 1e-6);
  detail = "extrapolated dg^2 = " + std::to_string(rep.extrapolated_dg);
  require(std::abs(rep.predicted_dg_limit - 4.0 / 49.0) <= 1e-12, "predicted limit is not 4/49");
  require(std::abs(rep.extrapolated_dg - 4.0 / 49.0) <= 2e-3,
          "extrapolated dg^2 misses 4/49 by more than 2e-3");
  require(rep.extrapolated_df <= 1e-3, "df^2 does not extrapolate below 1e-3");
}

void criterion_collision_bound(std::string&) {
  auto f = make_f_r(0.5);
  for (int k = 1; k <= 10; ++k) {
    const Complex v = std::polar(0.07 * k, 2.0 * kPi * k / 10.0);
    auto rep = collision_bound_check(f, v, 1e-4);
    require(std::abs(rep.bound_constant - 0.25) <= 1e-12, "bound constant is not 1/4");
    require(rep.within_bound, "a ladder sample exceeds 1/4 * 1.25 at v index " +
                                  std::to_string(k));
    require(rep.final_gap_sq < 1e-6,
            "final gap^2 not below 1e-6 at v index " + std::to_string(k));
    require(rep.gap_vanishes, "gap is not decreasing at v index " + std::to_string(k));
  }
}

void criterion_crossing_detection(std::string&) {
  for (double r : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
    auto scan = find_self_crossings(make_f_r(r), 2048);
    require(scan.pairs.size() == 1, "crossing count != 1 at r = " + std::to_string(r));
    require(std::abs(scan.pairs[0].xi - Complex(1.0, 0.0)) <= 1e-8 &&
                std::abs(scan.pairs[0].zeta - Complex(-1.0, 0.0)) <= 1e-8,
            "crossing not at +-1 for r = " + std::to_string(r));
    require(scan.pairs[0].residual <= 1e-10, "residual too large at r = " + std::to_string(r));
  }

  require(find_self_crossings(make_injective_example(), 2048).pairs.empty(),
          "injective example reports a crossing");

  const double r = 0.6;
  const double t = (-1.0 + std::sqrt(1.0 - r * r)) / r;  // = -1/3
  auto composed = compose_with_mobius(make_f_rs(0.0, r), mobius_fixing_pm1(t, false));
  auto a = find_self_crossings(composed, 2048);
  auto b = find_self_crossings(make_f_rs(t, -t), 2048);
  require(a.pairs.size() == 1 && b.pairs.size() == 1, "composed family crossing count mismatch");
  require(std::abs(a.pairs[0].xi - b.pairs[0].xi) <= 1e-8 &&
              std::abs(a.pairs[0].zeta - b.pairs[0].zeta) <= 1e-8,
          "crossings of f_{0,r} o b_t and f_{t,-t} disagree");
}

void criterion_series_pipeline(std::string&) {
  auto szego = embedding_dimension(szego_coeffs(200));
  require(szego.kind == EmbeddingDimensionVerdict::Kind::Finite && szego.dimension == 1,
          "szego dimension != 1");

  for (double s : {-0.5, -1.0, -2.0}) {
    auto c = weighted_hardy_coeffs(s, 200);
    auto rec = reciprocal_coeffs(c);
    for (std::size_t n = 1; n < rec.r.size(); ++n) {
      const bool positive = c.is_exact() ? rec.r_exact[n] > 0 : rec.r[n] > 0.0;
      require(positive, "r_n not positive for weighted Hardy s = " + std::to_string(s));
    }
    auto dim = embedding_dimension(c);
    require(dim.kind == EmbeddingDimensionVerdict::Kind::InfiniteUpToTruncation,
            "weighted Hardy s = " + std::to_string(s) + " not flagged infinite");
  }

  auto bergman = complete_pick_check(bergman_coeffs(200));
  require(bergman.verdict == PickVerdict::NotCompletePick && bergman.first_bad_index == 2,
          "Bergman verdict is not not_complete_pick(2)");

  for (auto c : {szego_coeffs(200), weighted_hardy_coeffs(-1.0, 200)}) {
    auto rec = reciprocal_coeffs(c);
    auto back = coeffs_from_reciprocal_exact(rec.r_exact, c.truncation());
    require(back.exact_values() == c.exact_values(), "exact round trip c -> r -> c failed");
  }
}

void criterion_renewal_limits(std::string&) {
  {
    auto c = coeffs_from_reciprocal({0.0, 0.5, 0.5}, 200);
    auto rep = renewal_limit(c);
    require(std::abs(rep.mu - 1.5) <= 1e-12, "mu != 3/2 for r = (1/2, 1/2)");
    require(std::abs(c.value(200) - 2.0 / 3.0) < 1e-10, "|c_200 - 2/3| >= 1e-10");
    require(rep.hardy_equivalent, "renewal window misses [1/mu - delta, 1]");
  }
  {
    std::vector<Rat> r(201, Rat(0));
    Rat power(1, 2);
    for (int n = 1; n <= 200; ++n) {
      r[static_cast<std::size_t>(n)] = power;
      power /= 2;
    }
    auto c = coeffs_from_reciprocal_exact(r, 200);
    for (int n = 1; n <= 200; ++n) {
      require(c.exact_values()[static_cast<std::size_t>(n)] == Rat(1, 2),
              "c_n != 1/2 exactly at n = " + std::to_string(n));
    }
    auto rep = renewal_limit(c);
    require(std::abs(rep.mu - 2.0) <= 1e-12, "mu != 2 for r_n = 2^{-n}");
    require(std::abs(rep.limit - 0.5) <= 1e-12, "limit != 1/2 for r_n = 2^{-n}");
  }
}

void criterion_pick_positivity(std::string&) {
  RotationInvariantKernel szego(std::vector<double>(201, 1.0));

  auto feasible = pick_matrix(szego, {Complex(0.0, 0.0), Complex(0.5, 0.0)},
                              {Complex(0.0, 0.0), Complex(0.5, 0.0)});
  require(feasible.min_eigenvalue >= -1e-12, "feasible 2-point example not PSD");

  auto infeasible = pick_matrix(szego, {Complex(0.0, 0.0), Complex(0.5, 0.0)},
                                {Complex(0.0, 0.0), Complex(0.6, 0.0)});
  require(infeasible.min_eigenvalue < -1e-3, "infeasible 2-point example not detected");

  DiscKernel disc{make_f_r(0.5)};
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> points;
    for (int i = 0; i < 6; ++i) points.push_back(random_disc_point(rng, 0.8));
    for (const Kernel* k :
         {static_cast<const Kernel*>(&szego), static_cast<const Kernel*>(&disc)}) {
      auto rep = gram_matrix(*k, points);
      require(rep.min_eigenvalue >= -1e-10 * rep.norm_estimate,
              "gram matrix not PSD at trial " + std::to_string(trial));
    }
  }
}

int run_command(const std::string& args, const fs::path& out) {
  const std::string cmd =
      std::string(PICKDISC_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (status == -1) throw Failure{"failed to spawn the CLI"};
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_cli_determinism(std::string&) {
  const fs::path dir =
      fs::temp_directory_path() / ("pickdisc_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  const auto write = [&](const std::string& name, const std::string& content) {
    const fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  };
  const auto f05 = write("f05.json", dump_deterministic(embedding_to_json(make_f_r(0.5))));
  const auto f025 = write("f025.json", dump_deterministic(embedding_to_json(make_f_r(0.25))));
  const auto bergman =
      write("bergman.json", dump_deterministic(coefficients_to_json(bergman_coeffs(64))));
  Json problem;
  problem["kernel"] = coefficients_to_json(szego_coeffs(64));
  problem["points"] = Json::array({Json::array({0.0, 0.0}), Json::array({0.5, 0.0})});
  problem["targets"] = Json::array({Json::array({0.0, 0.0}), Json::array({0.5, 0.0})});
  const auto pick = write("pick.json", dump_deterministic(problem));

  const std::string commands[] = {
      "validate " + f05.string(),
      "crossings " + f05.string() + " --compare " + f025.string(),
      "obstruct " + f05.string() + " " + f025.string(),
      "obstruct " + f05.string() + " " + f025.string() + " --format csv",
      "series " + bergman.string(),
      "series --weighted-hardy -1 --truncation 64",
      "pick " + pick.string(),
      "metric " + f05.string() + " --grid 64",
      "metric " + f05.string() + " --grid 64 --format csv",
  };
  int idx = 0;
  for (const std::string& cmd : commands) {
    const fs::path a = dir / ("run" + std::to_string(idx) + "a");
    const fs::path b = dir / ("run" + std::to_string(idx) + "b");
    const int code_a = run_command(cmd, a);
    const int code_b = run_command(cmd, b);
    if (code_a != code_b || slurp(a) != slurp(b)) {
      fs::remove_all(dir);
      throw Failure{"command not deterministic: " + cmd};
    }
    ++idx;
  }
  fs::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "invariant ratio of f_r equals (1+r)/(1-r)", [](std::string& d) { criterion_ratio_law(d); }},
      {2, "semi-invariant transforms covariantly under mobius maps",
       [](std::string& d) { criterion_mobius_covariance(d); }},
      {3, "candidate automorphisms: symmetric family gives 0, alpha equalizes ratios",
       [](std::string& d) { criterion_candidate_automorphisms(d); }},
      {4, "matched-path metric limits reach 4/49 and 0",
       [](std::string& d) { criterion_matched_path(d); }},
      {5, "collision gap bounded by 1/4 * 1.25 and vanishing",
       [](std::string& d) { criterion_collision_bound(d); }},
      {6, "self-crossing detection on the example families",
       [](std::string& d) { criterion_crossing_detection(d); }},
      {7, "series pipeline: dimensions, Bergman, exact round trip",
       [](std::string& d) { criterion_series_pipeline(d); }},
      {8, "renewal limits match 1/mu", [](std::string& d) { criterion_renewal_limits(d); }},
      {9, "pick matrix positivity", [](std::string& d) { criterion_pick_positivity(d); }},
      {10, "CLI reports are byte-identical across runs",
       [](std::string& d) { criterion_cli_determinism(d); }},
  };

  // Runtime budgets (seconds) where the guarantee includes one.
  const double budgets[] = {1.0, 5.0, 0.0, 10.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    try {
      c.run(detail);
    } catch (const Failure& f) {
      ok = false;
      detail = f.detail;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double budget = budgets[c.id - 1];
    if (ok && budget > 0.0 && seconds > budget) {
      ok = false;
      detail = "exceeded runtime budget of " + std::to_string(budget) + " s";
    }
    std::printf("criterion %2d: %s - %s (%.2f s)%s%s\n", c.id, ok ? "PASS" : "FAIL", c.title,
                seconds, detail.empty() ? "" : " | ", detail.c_str());
    if (!ok) ++failures;
  }

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
