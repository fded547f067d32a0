#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "gsym/exact.hpp"
#include "gsym/spectral.hpp"

using namespace gsym;

TEST_CASE("eigen_sym on simplex, circle and zero") {
  for (int n = 2; n <= 9; ++n) {
    auto sd = eigen_sym(adjacency_real(complete(n)));
    REQUIRE(sd.eigenvalues.size() == 2);
    CHECK(sd.eigenvalues[0] == doctest::Approx(-1).epsilon(1e-12));
    CHECK(sd.multiplicities[0] == n - 1);
    CHECK(sd.eigenvalues[1] == doctest::Approx(n - 1).epsilon(1e-12));
  }
  for (int n = 3; n <= 32; ++n) {
    auto sd = eigen_sym(adjacency_real(cycle(n)));
    std::vector<double> expect;
    for (int k = 0; k < n; ++k) expect.push_back(2 * std::cos(2 * std::numbers::pi * k / n));
    std::sort(expect.begin(), expect.end());
    for (int k = 0; k < n; ++k) CHECK(std::abs(sd.raw_eigenvalues(k) - expect[k]) < 1e-9);
  }
  auto z = eigen_sym(Eigen::MatrixXd::Zero(4, 4));
  CHECK(z.eigenvalues.size() == 1);
  CHECK(z.projections[0].isApprox(Eigen::MatrixXd::Identity(4, 4)));
  Eigen::MatrixXd ns(2, 2);
  ns << 0, 1, 2, 0;
  CHECK_THROWS_AS(eigen_sym(ns), ContractError);
}

TEST_CASE("decomposition invariants on random symmetric matrices") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 12;
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m(i, j) = m(j, i) = t % 3 ? u(rng) : std::round(u(rng));
    auto sd = eigen_sym(m);
    double tol = sd.tol;
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    for (size_t a = 0; a < sd.projections.size(); ++a) {
      sum += sd.projections[a];
      CHECK((sd.projections[a] * sd.projections[a] - sd.projections[a]).cwiseAbs().maxCoeff() <= 10 * tol);
      for (size_t b = a + 1; b < sd.projections.size(); ++b)
        CHECK((sd.projections[a] * sd.projections[b]).cwiseAbs().maxCoeff() <= 10 * tol);
    }
    CHECK((sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 10 * tol);
    CHECK((sd.reconstruct() - m).cwiseAbs().maxCoeff() <= 10 * tol);
    CHECK(std::abs(sd.raw_eigenvalues.sum() - m.trace()) <= tol);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oracle(m);
    CHECK((oracle.eigenvalues() - sd.raw_eigenvalues).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("laplacian") {
  MatrixXi k2(2, 2);
  k2 << 1, -1, -1, 1;
  CHECK(laplacian(complete(2)) == k2);
  auto l3 = laplacian(complete(3));
  CHECK(l3(0, 0) == 2);
  CHECK(l3(0, 1) == -1);
  CHECK(laplacian(empty_graph(4)) == MatrixXi::Zero(4, 4));
  auto sd = eigen_sym(laplacian(empty_graph(4)).cast<double>().eval());
  CHECK(sd.multiplicities[0] == 4);
}

TEST_CASE("circulant symbol and Fourier eigenvalues") {
  auto g = circulant_symbol(adjacency_real(cycle(6)));
  REQUIRE(g);
  Eigen::VectorXd expect(6);
  expect << 0, 1, 0, 0, 0, 1;
  CHECK(*g == expect);
  auto q = fourier_eigenvalues(*g);
  for (int j = 0; j < 6; ++j) CHECK(q[j].real() == doctest::Approx(2 * std::cos(2 * std::numbers::pi * j / 6)));
  auto id = circulant_symbol(Eigen::MatrixXd::Identity(5, 5));
  REQUIRE(id);
  for (auto v : fourier_eigenvalues(*id)) CHECK(std::abs(v - 1.0) < 1e-12);
  CHECK_FALSE(circulant_symbol(adjacency_real(petersen())));

  for (int n = 3; n <= 32; ++n) {
    for (int k = 2; k < n / 2; k += 3) {
      auto d = adjacency_real(cycle_with_chords(n, k));
      auto fe = fourier_eigenvalues(*circulant_symbol(d));
      std::vector<double> re;
      for (auto c : fe) {
        CHECK(std::abs(c.imag()) < 1e-9);
        re.push_back(c.real());
      }
      std::sort(re.begin(), re.end());
      auto sd = eigen_sym(d);
      for (int i = 0; i < n; ++i) CHECK(std::abs(re[i] - sd.raw_eigenvalues(i)) < 1e-9);
    }
  }
}

TEST_CASE("segment characteristic polynomials") {
  CHECK(segment_charpoly(4).to_string() == "x^4 - 3x^2 + 1");
  CHECK(segment_charpoly(6).to_string() == "x^6 - 5x^4 + 6x^2 - 1");
  CHECK(segment_charpoly(1).to_string() == "x");
  for (int n = 1; n <= 10; ++n) {
    auto p = segment_charpoly(n);
    MatrixXb d = to_big(adjacency(segment(n)));
    // a degree-n polynomial is pinned by n+1 values
    for (int x = -2; x <= n - 1; ++x) {
      MatrixXb m = -d;
      for (int i = 0; i < n; ++i) m(i, i) += x;
      CHECK(bareiss_det(m) == p(BigInt(x)));
    }
    auto sd = eigen_sym(adjacency_real(segment(n)));
    for (int i = 0; i < n; ++i) CHECK(std::abs(p(sd.raw_eigenvalues(i))) < 1e-6);
  }
}

TEST_CASE("color decomposition") {
  auto comps = color_decomposition(adjacency_real(cycle(5)), 1e-9);
  CHECK(comps.size() == 2);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(5, 5);
  for (auto& c : comps) sum += c.value * c.indicator;
  CHECK(sum.isApprox(adjacency_real(cycle(5))));
  CHECK(color_decomposition(Eigen::MatrixXd::Constant(3, 3, 2.5), 1e-9).size() == 1);

  auto sd = eigen_sym(adjacency_real(petersen()));
  for (size_t k = 0; k < sd.eigenvalues.size(); ++k) {
    if (std::abs(sd.eigenvalues[k] - 1) > 1e-6) continue;
    auto pc = color_decomposition(sd.projections[k], 1e-9);
    CHECK(pc.size() == 3);
  }
}

TEST_CASE("closures") {
  for (int n = 2; n <= 8; ++n) {
    auto c = color_spectral_closure(adjacency_real(complete(n)));
    CHECK(c.converged);
    CHECK(c.dimension == 2);
    CHECK(coherent_closure_exact(adjacency(complete(n))).dimension == 2);
  }
  CHECK(color_spectral_closure(adjacency_real(petersen())).dimension == 3);
  CHECK(coherent_closure_exact(adjacency(petersen())).dimension == 3);
  // 5 classes: two diagonal types, two edge directions, the far pair
  CHECK(coherent_closure_exact(adjacency(segment(3))).dimension == 5);
  Eigen::MatrixXd diag = Eigen::Vector3d(1, 2, 3).asDiagonal();
  CHECK(color_spectral_closure(diag).dimension == 3);

  for (auto g : {segment(3), segment(6), cycle(5), cycle(7), cycle(10), hypercube(3), ade(AdeTag::E7),
                 copies(2, cycle(4)), copies(2, cycle(5))}) {
    auto a = color_spectral_closure(adjacency_real(g));
    auto b = coherent_closure_exact(adjacency(g));
    CHECK(span_contained(a.basis, b.basis));
  }
}

TEST_CASE("projections of degenerate eigenspaces are accurate") {
  for (int n = 5; n <= 12; ++n) {
    auto sd = eigen_sym(adjacency_real(cycle(n)));
    for (const auto& p : sd.projections) {
      double d0 = p(0, 0);
      CHECK((p.diagonal().array() - d0).abs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("heat and wave evolution") {
  auto traj = evolve(complete(2), Eigen::Vector2d(1, 0), EvolveKind::Heat, 1.0, 0.25, 1);
  CHECK(traj[1](0) == doctest::Approx(0.75));
  CHECK(traj[1](1) == doctest::Approx(0.25));
  auto flat = evolve(petersen(), Eigen::VectorXd::Constant(10, 2.0), EvolveKind::Heat, 0.3, 0.1, 50);
  CHECK((flat.back().array() - 2.0).abs().maxCoeff() < 1e-12);
  Eigen::VectorXd init = Eigen::VectorXd::Zero(10);
  init(0) = 1;
  auto heat = evolve(cycle(10), init, EvolveKind::Heat, 1.0, 0.1, 1000);
  CHECK(std::abs(heat.back().sum() - 1.0) < 1e-12);
  auto wave = evolve(cycle(10), init, EvolveKind::Wave, 1.0, 0.1, 100);
  CHECK(wave.size() == 101);
  CHECK(std::abs(wave.back().sum() - 1.0) < 1e-9);
  CHECK(stable_step_bound(cycle(10)) == doctest::Approx(0.5));
}
