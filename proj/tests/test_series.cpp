#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pickdisc/series.hpp"

using namespace pickdisc;

TEST_CASE("normalization rescales by c_0") {
  // ||f||^2 = |a_0|^2/2 + sum |a_n|^2 has c = (2, 1, 1, ...).
  std::vector<Rat> c(32, Rat(1));
  c[0] = Rat(2);
  auto normalized = normalize(CoefficientSequence::exact(std::move(c)));
  CHECK(normalized.exact_values()[0] == 1);
  CHECK(normalized.exact_values()[1] == Rat(1, 2));
  CHECK(normalized.exact_values()[5] == Rat(1, 2));

  auto already = szego_coeffs(16);
  CHECK(normalize(already).exact_values() == already.exact_values());

  std::vector<double> zero_first = {0.0, 1.0};
  CHECK_THROWS_AS(normalize(CoefficientSequence::floating(zero_first)), ZeroAtOrigin);
}

TEST_CASE("weighted Hardy coefficients") {
  auto h0 = weighted_hardy_coeffs(0.0, 16);
  CHECK(h0.is_exact());
  for (std::size_t n = 0; n < h0.size(); ++n) CHECK(h0.exact_values()[n] == 1);

  auto dirichlet = weighted_hardy_coeffs(-1.0, 16);
  CHECK(dirichlet.exact_values()[1] == Rat(1, 2));
  CHECK(dirichlet.exact_values()[2] == Rat(1, 3));

  auto h2 = weighted_hardy_coeffs(-2.0, 16);
  CHECK(h2.exact_values()[3] == Rat(1, 16));

  auto hhalf = weighted_hardy_coeffs(-0.5, 16);
  CHECK_FALSE(hhalf.is_exact());
  CHECK(hhalf.value(3) == doctest::Approx(0.5));
}

TEST_CASE("reciprocal coefficients of the standard kernels") {
  // Szego: 1 - 1/k = t.
  auto szego = reciprocal_coeffs(szego_coeffs(32));
  CHECK(szego.r_exact[1] == 1);
  for (std::size_t n = 2; n < szego.r_exact.size(); ++n) CHECK(szego.r_exact[n] == 0);
  CHECK(szego.all_nonnegative);

  // Bergman: 1 - (1 - t)^2 = 2t - t^2 flags a negative coefficient.
  auto bergman = reciprocal_coeffs(bergman_coeffs(32));
  CHECK(bergman.r_exact[1] == 2);
  CHECK(bergman.r_exact[2] == -1);
  for (std::size_t n = 3; n < bergman.r_exact.size(); ++n) CHECK(bergman.r_exact[n] == 0);
  CHECK_FALSE(bergman.all_nonnegative);

  // Modified Hardy c = (1, 1/2, 1/2, ...): r_n = 2^{-n} (t/(2 - t) expanded).
  std::vector<Rat> modified(24, Rat(1, 2));
  modified[0] = Rat(1);
  auto rec = reciprocal_coeffs(CoefficientSequence::exact(std::move(modified)));
  Rat power(1, 2);
  for (std::size_t n = 1; n < rec.r_exact.size(); ++n) {
    CHECK(rec.r_exact[n] == power);
    power /= 2;
  }
}

TEST_CASE("reciprocal requires a normalized sequence") {
  std::vector<double> c = {2.0, 1.0};
  CHECK_THROWS_AS(reciprocal_coeffs(CoefficientSequence::floating(std::move(c))), NotNormalized);
}

TEST_CASE("round trip c -> r -> c") {
  // Exact mode reproduces the input exactly.
  for (auto make : {+[] { return szego_coeffs(64); }, +[] { return bergman_coeffs(64); },
                    +[] { return weighted_hardy_coeffs(-1.0, 64); }}) {
    auto c = make();
    auto rec = reciprocal_coeffs(c);
    auto back = coeffs_from_reciprocal_exact(rec.r_exact, c.truncation());
    CHECK(back.exact_values() == c.exact_values());
  }

  // Floating mode within 1e-12.
  auto c = weighted_hardy_coeffs(-0.5, 64);
  auto rec = reciprocal_coeffs(c);
  auto back = coeffs_from_reciprocal(rec.r, c.truncation());
  for (std::size_t n = 0; n < c.size(); ++n) {
    CHECK(std::abs(back.value(n) - c.value(n)) < 1e-12);
  }
}

TEST_CASE("complete Pick verdicts") {
  CHECK(complete_pick_check(szego_coeffs(64)).verdict == PickVerdict::CompletePick);

  auto bergman = complete_pick_check(bergman_coeffs(64));
  CHECK(bergman.verdict == PickVerdict::NotCompletePick);
  CHECK(bergman.first_bad_index == 2);

  // Dirichlet at N = 200.
  auto dirichlet = complete_pick_check(weighted_hardy_coeffs(-1.0, 200));
  CHECK(dirichlet.verdict == PickVerdict::CompletePick);

  // A barely negative r_2 inside the floating zero band is inconclusive.
  auto fuzzy = complete_pick_check(
      CoefficientSequence::floating({1.0, 0.5, 0.25 - 1e-13, 0.125 + 1e-13}));
  CHECK(fuzzy.verdict == PickVerdict::Inconclusive);

  // The same perturbation above the band is a clean negative.
  auto negative = complete_pick_check(
      CoefficientSequence::floating({1.0, 0.5, 0.25 - 1e-9, 0.125}));
  CHECK(negative.verdict == PickVerdict::NotCompletePick);
  CHECK(negative.first_bad_index == 2);
}

TEST_CASE("monotone bound and positivity propagation") {
  for (auto c : {szego_coeffs(100), weighted_hardy_coeffs(-1.0, 100),
                 weighted_hardy_coeffs(-2.0, 100)}) {
    auto cp = complete_pick_check(c);
    REQUIRE(cp.verdict == PickVerdict::CompletePick);
    auto rec = reciprocal_coeffs(c);
    REQUIRE(rec.r_exact[1] > 0);
    for (std::size_t n = 0; n < c.size(); ++n) {
      CHECK(c.exact_values()[n] <= c.exact_values()[0]);  // c_n <= c_0
      CHECK(c.exact_values()[n] > 0);                     // r_1 > 0 propagates
    }
  }
}

TEST_CASE("embedding dimension verdicts") {
  auto szego = embedding_dimension(szego_coeffs(64));
  CHECK(szego.kind == EmbeddingDimensionVerdict::Kind::Finite);
  CHECK(szego.dimension == 1);
  CHECK(szego.nonzero_indices == std::vector<int>{1});

  // r = 0.5 t + 0.25 t^3, c reconstructed by the forward recurrence.
  std::vector<Rat> r(65, Rat(0));
  r[1] = Rat(1, 2);
  r[3] = Rat(1, 4);
  auto c = coeffs_from_reciprocal_exact(r, 64);
  auto two = embedding_dimension(c);
  CHECK(two.kind == EmbeddingDimensionVerdict::Kind::Finite);
  CHECK(two.dimension == 2);
  CHECK(two.nonzero_indices == std::vector<int>{1, 3});

  auto dirichlet = embedding_dimension(weighted_hardy_coeffs(-1.0, 200));
  CHECK(dirichlet.kind == EmbeddingDimensionVerdict::Kind::InfiniteUpToTruncation);
  CHECK(dirichlet.truncation == 200);
  auto rec = reciprocal_coeffs(weighted_hardy_coeffs(-1.0, 200));
  for (std::size_t n = 1; n < rec.r_exact.size(); ++n) CHECK(rec.r_exact[n] > 0);

  CHECK_THROWS_AS(embedding_dimension(bergman_coeffs(64)), NotCompletePick);
}

TEST_CASE("renewal limits") {
  // r = (1): the szego case, c_n = 1.
  {
    auto c = szego_coeffs(64);
    auto rep = renewal_limit(c);
    CHECK(rep.mu == doctest::Approx(1.0));
    CHECK(rep.limit == doctest::Approx(1.0));
    CHECK(rep.sum_is_one);
    CHECK(rep.hardy_equivalent);
  }

  // r = (1/2, 1/2): mu = 3/2, c_n -> 2/3, prefix (1, 0.5, 0.75, 0.625).
  {
    auto c = coeffs_from_reciprocal({0.0, 0.5, 0.5}, 200);
    CHECK(c.value(1) == doctest::Approx(0.5));
    CHECK(c.value(2) == doctest::Approx(0.75));
    CHECK(c.value(3) == doctest::Approx(0.625));
    auto rep = renewal_limit(c);
    CHECK(rep.mu == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(std::abs(c.value(200) - 2.0 / 3.0) < 1e-10);
    CHECK(rep.sum_is_one);
    CHECK(rep.hardy_equivalent);
    CHECK_FALSE(rep.periodic_support);
  }

  // r_n = 2^{-n}: mu = 2, c_n = 1/2 for n >= 1, exactly in rational mode.
  {
    std::vector<Rat> r(201, Rat(0));
    Rat power(1, 2);
    for (int n = 1; n <= 200; ++n) {
      r[static_cast<std::size_t>(n)] = power;
      power /= 2;
    }
    auto c = coeffs_from_reciprocal_exact(r, 200);
    for (int n = 1; n <= 200; ++n) CHECK(c.exact_values()[static_cast<std::size_t>(n)] == Rat(1, 2));
    auto rep = renewal_limit(c);
    CHECK(std::abs(rep.mu - 2.0) < 1e-12);
    CHECK(std::abs(rep.limit - 0.5) < 1e-12);
    CHECK(rep.hardy_equivalent);
  }
}

TEST_CASE("renewal flags periodic support") {
  // r supported on {2}: gcd 2, no renewal limit.
  auto c = coeffs_from_reciprocal({0.0, 0.0, 1.0}, 64);
  auto rep = renewal_limit(c);
  CHECK(rep.periodic_support);
  CHECK(rep.support_gcd == 2);
  CHECK_FALSE(rep.hardy_equivalent);
}

TEST_CASE("renewal predicts extension when the reciprocal sums below 1") {
  // r = (1/2): q(1) = 1/2 < 1, kernel extends to a larger disc.
  auto c = coeffs_from_reciprocal({0.0, 0.5}, 64);
  auto rep = renewal_limit(c);
  CHECK_FALSE(rep.sum_is_one);
  CHECK(rep.extension_predicted);
  CHECK_FALSE(rep.hardy_equivalent);
}

TEST_CASE("renewal convergence is monotone on the tail") {
  auto c = coeffs_from_reciprocal({0.0, 0.5, 0.5}, 200);
  auto rep = renewal_limit(c);
  for (int n = 150; n < 200; ++n) {
    const double err_n = std::abs(c.value(static_cast<std::size_t>(n)) - rep.limit);
    const double err_next = std::abs(c.value(static_cast<std::size_t>(n) + 1) - rep.limit);
    CHECK(err_next <= err_n + 1e-15);
  }
}

TEST_CASE("sequence constructors reject bad inputs") {
  CHECK_THROWS_AS(CoefficientSequence::floating({}), ParameterOutOfRange);
  CHECK_THROWS_AS(CoefficientSequence::floating({1.0, -0.1}), ParameterOutOfRange);
  CHECK_THROWS_AS(CoefficientSequence::exact({Rat(1), Rat(-1)}), ParameterOutOfRange);
}

TEST_CASE("zero coefficient indices are reported") {
  auto c = CoefficientSequence::exact({Rat(1), Rat(0), Rat(1), Rat(0)});
  CHECK(c.zero_indices() == std::vector<int>{1, 3});
}
