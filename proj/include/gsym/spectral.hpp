#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gsym/graph.hpp"
#include "gsym/polynomial.hpp"
#include "gsym/types.hpp"

namespace gsym {

/// Clustered eigen-decomposition of a real symmetric matrix.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // distinct, ascending
  std::vector<int> multiplicities;
  std::vector<Eigen::MatrixXd> projections;
  Eigen::MatrixXd eigenvectors;  // columns ordered by ascending raw eigenvalue
  Eigen::VectorXd raw_eigenvalues;
  double tol = 0;

  Eigen::MatrixXd reconstruct() const;
};

/// Default clustering tolerance 1e-9 * max(1, ||m||_inf).
double default_tol(const Eigen::MatrixXd& m);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is <= 1e-12
/// (relative to the matrix scale). Eigenvalues come back ascending.
void jacobi_eigen(const Eigen::MatrixXd& m, Eigen::VectorXd& values, Eigen::MatrixXd& vectors);

/// Single-linkage clustering of sorted reals: a new cluster starts at every
/// gap larger than `tol`. Returns the cluster index of each input.
std::vector<int> cluster_sorted(const std::vector<double>& sorted, double tol);

/// tol <= 0 selects default_tol(m).
SpectralDecomposition eigen_sym(const Eigen::MatrixXd& m, double tol = 0);

template <typename Derived>
SpectralDecomposition eigen_sym(const Eigen::MatrixBase<Derived>& m, double tol = 0) {
  return eigen_sym(Eigen::MatrixXd(m.template cast<double>()), tol);
}

MatrixXi laplacian(const Graph& g);

/// gamma with m(i,j) = gamma[(j-i) mod N] exactly, or nothing.
std::optional<Eigen::VectorXd> circulant_symbol(const Eigen::MatrixXd& m);
/// q_j = sum_r gamma_r w^{jr}, w = exp(2 pi i / N).
std::vector<std::complex<double>> fourier_eigenvalues(const Eigen::VectorXd& gamma);

/// P_0 = 1, P_1 = x, P_{N+1} = x P_N - P_{N-1}.
Polynomial<BigInt> segment_charpoly(int n);

struct ColorComponent {
  double value;
  Eigen::MatrixXd indicator;
};

/// Groups entries into value classes by single-linkage at `tol`.
std::vector<ColorComponent> color_decomposition(const Eigen::MatrixXd& m, double tol);

struct MatrixAlgebraBasis {
  std::vector<Eigen::MatrixXd> basis;
  int dimension = 0;
  bool converged = true;
  int iterations = 0;
};

MatrixAlgebraBasis color_spectral_closure(const Eigen::MatrixXd& d, double tol = 0, int max_iter = 32);

/// Pair-refinement (2-dim Weisfeiler-Leman) coherent closure of a 0-1 matrix.
/// The basis consists of the disjoint 0-1 class matrices.
MatrixAlgebraBasis coherent_closure_exact(const MatrixXi& d);
/// Class index per position, classes numbered 0..k-1 deterministically.
MatrixXi coherent_classes(const MatrixXi& d);

/// Rank of a family of matrices seen as vectors (SVD, relative tolerance).
int span_rank(const std::vector<Eigen::MatrixXd>& mats, double tol = 1e-8);
/// True when span(a) is contained in span(b), by rank comparison.
bool span_contained(const std::vector<Eigen::MatrixXd>& a, const std::vector<Eigen::MatrixXd>& b,
                    double tol = 1e-8);

enum class EvolveKind { Heat, Wave };

/// Explicit lattice evolution. Heat: phi <- phi - coeff*delta*L phi.
/// Wave (coeff = v^2): leapfrog with phi_{-1} = phi_0. Returns steps+1 states.
std::vector<Eigen::VectorXd> evolve(const Graph& g, const Eigen::VectorXd& init, EvolveKind kind,
                                    double coeff, double delta, int steps);

/// Stability advice for the explicit schemes: 2 / lambda_max(L).
double stable_step_bound(const Graph& g);

}  // namespace gsym
