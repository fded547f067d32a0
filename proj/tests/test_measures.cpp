#include "doctest.h"

#include <cmath>
#include <numbers>

#include "gsym/exact.hpp"
#include "gsym/measures.hpp"

using namespace gsym;

TEST_CASE("loop counts") {
  auto half_line = segment(17);
  auto l = loop_counts(half_line, 0, 10);
  std::vector<int> cat{1, 1, 2, 5, 14, 42};
  for (int k = 0; k <= 5; ++k) CHECK(l[2 * k] == cat[k]);
  auto line = segment(33);
  auto c = loop_counts(line, 16, 8);
  std::vector<int> central{1, 2, 6, 20, 70};
  for (int k = 0; k <= 4; ++k) CHECK(c[2 * k] == central[k]);
  auto cube = loop_counts(hypercube(3), 0, 9);
  for (int k = 1; k <= 9; k += 2) CHECK(cube[k] == 0);
}

TEST_CASE("spectral measures") {
  auto k2 = spectral_measure(complete(2), 0);
  REQUIRE(k2.atoms.size() == 2);
  CHECK(k2.atoms[0] == doctest::Approx(-1));
  CHECK(k2.weights[0] == doctest::Approx(0.5));
  auto c4 = spectral_measure(cycle(4), 0);
  REQUIRE(c4.atoms.size() == 3);
  CHECK(c4.weights[0] == doctest::Approx(0.25));
  CHECK(c4.weights[1] == doctest::Approx(0.5));
  for (int n = 2; n <= 6; ++n) {
    auto g = ade(AdeTag::At, 2 * n);
    auto mu = spectral_measure(g, 0);
    auto l = loop_counts(g, 0, 12);
    for (int k = 0; k <= 12; ++k) {
      double ref = static_cast<double>(l[k]);
      CHECK(std::abs(mu.moment(k) - ref) <= 1e-6 * std::max(1.0, ref));
    }
  }
}

TEST_CASE("moment oracles") {
  std::vector<int> cat{1, 2, 5, 14, 42, 132};
  for (int k = 1; k <= 6; ++k) CHECK(moment_oracle(MomentKind::Catalan, k) == cat[k - 1]);
  CHECK(moment_oracle(MomentKind::Central, 4) == 70);
  std::vector<int> bells{1, 2, 5, 15};
  for (int k = 1; k <= 4; ++k) CHECK(moment_oracle(MomentKind::Bell, k) == bells[k - 1]);
  for (int k = 0; k <= 30; ++k) {
    BigInt s = 0;
    for (int a = 0; a <= k; ++a) s += catalan(a) * catalan(k - a);
    CHECK(s == catalan(k + 1));
  }
}

TEST_CASE("hankel positivity") {
  std::vector<Rational> cat;
  for (int k = 0; k < 15; ++k) cat.push_back(Rational(catalan(k)));
  CHECK(hankel_positive(cat).positive);
  auto bad = hankel_positive({Rational(1), Rational(0), Rational(-1)});
  CHECK_FALSE(bad.positive);
  CHECK(bad.failing_size == 2);
}

TEST_CASE("density laws") {
  for (int k = 0; k <= 8; ++k) {
    CHECK(std::abs(density_moment(DensityLaw::Semicircle, 2 * k) - static_cast<double>(catalan(k))) < 1e-8);
    if (k < 8) CHECK(std::abs(density_moment(DensityLaw::Semicircle, 2 * k + 1)) < 1e-10);
    CHECK(std::abs(density_moment(DensityLaw::MarchenkoPastur, k) - static_cast<double>(catalan(k))) < 1e-8);
    CHECK(std::abs(density_moment(DensityLaw::Arcsine, k) - static_cast<double>(central_binomial(k))) < 1e-8);
    CHECK(std::abs(density_moment(DensityLaw::ModifiedArcsine, k) - static_cast<double>(middle_binomial(k))) <
          1e-8);
  }
  CHECK(std::abs(stieltjes_density(DensityLaw::Semicircle, 0, 1e-3) - 1 / std::numbers::pi) < 2e-2);
  CHECK(std::abs(stieltjes_density(DensityLaw::Arcsine, 2, 1e-3) - 1 / (2 * std::numbers::pi)) < 2e-2);
  for (auto law : {DensityLaw::Semicircle, DensityLaw::MarchenkoPastur, DensityLaw::Arcsine,
                   DensityLaw::ModifiedArcsine}) {
    auto [lo, hi] = support(law);
    for (int i = 1; i <= 5; ++i) {
      double x = lo + (hi - lo) * i / 6.0;
      CHECK(std::abs(stieltjes_density(law, x, 1e-3) - density(law, x)) < 2e-2);
    }
    auto g = cauchy_transform(law, {1e4, 0});
    CHECK(std::abs(g * 1e4 - 1.0) < 1e-3);
  }
  AtomicMeasure delta{{0.0}, {1.0}};
  CHECK(stieltjes_density(delta, 0, 1e-6) * 1e-6 * std::numbers::pi == doctest::Approx(1.0));
  CHECK_THROWS_AS(stieltjes_density(DensityLaw::Semicircle, 0, 0), ContractError);
}

TEST_CASE("theta and T series") {
  for (int n = 3; n <= 12; ++n) {
    auto f = poincare_series(ade(AdeTag::A, n - 1), 12);
    auto theta = theta_from_poincare(f);
    CHECK(theta == theta_by_substitution(f));
    CHECK(theta_coefficients(f).all_integers());
    auto t = t_series(theta);
    CHECK(t == cyclotomic_series({{n - 1, false}}, {{n, false}}, 0, 12));
  }
  auto e6 = t_series(theta_from_poincare(poincare_series(ade(AdeTag::E6), 12)));
  CHECK(e6 == cyclotomic_series({{8, false}}, {{3, false}, {6, true}}, 0, 12));
  CHECK_THROWS_AS(poincare_series(cycle(5).with_root(0), 4), ContractError);
}

TEST_CASE("cyclotomic series") {
  CHECK(cyclotomic_series({{2, true}}, {{3, false}}, 0, 48) ==
        cyclotomic_series({{4, false}}, {{2, false}, {3, false}}, 0, 48));
  CHECK(cyclotomic_series({{5, false}}, {{5, false}}, 0, 48) == PowerSeries::constant(1, 48));
  for (int n = 2; n <= 6; ++n) {
    auto t = t_series(theta_from_poincare(poincare_series(ade(AdeTag::At, 2 * n), 12)));
    CHECK(t == cyclotomic_series({{n, true}}, {{n, false}}, 1, 12));
  }
  auto spec = parse_cyclotomic("'5+,9+:15+");
  CHECK(spec.prime == 1);
  CHECK(spec.num.size() == 2);
  CHECK(spec.den[0].plus);
}

TEST_CASE("circular measures") {
  for (int n = 2; n <= 6; ++n) {
    auto eps = circular_measure(ade(AdeTag::At, 2 * n));
    REQUIRE(eps.atoms.size() == static_cast<size_t>(2 * n));
    for (int j = 0; j < 2 * n; ++j) {
      CHECK(eps.atoms[j] == doctest::Approx(std::numbers::pi * j / n));
      CHECK(eps.weights[j] == doctest::Approx(1.0 / (2 * n)));
    }
  }
  for (auto g : {ade(AdeTag::A, 5), ade(AdeTag::D, 6), ade(AdeTag::E6), ade(AdeTag::E7), ade(AdeTag::E8)}) {
    auto eps = circular_measure(g);
    for (int k = 1; k <= 12; ++k) {
      CHECK(std::abs(circular_moment(eps, 2 * k - 1)) < 1e-9);
      double twice = 2 * circular_moment(eps, 2 * k);
      CHECK(std::abs(twice - std::round(twice)) < 1e-9);
    }
  }
  CHECK_THROWS_AS(circular_measure(complete(4).with_root(0)), ContractError);
}
