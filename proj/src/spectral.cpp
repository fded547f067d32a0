#include "gsym/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <limits>
#include <numbers>

#include <Eigen/Jacobi>
#include <Eigen/SVD>

namespace gsym {

Eigen::MatrixXd SpectralDecomposition::reconstruct() const {
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(eigenvectors.rows(), eigenvectors.rows());
  for (size_t k = 0; k < eigenvalues.size(); ++k) r += eigenvalues[k] * projections[k];
  return r;
}

double default_tol(const Eigen::MatrixXd& m) {
  double norm = m.size() ? m.cwiseAbs().rowwise().sum().maxCoeff() : 0.0;
  return 1e-9 * std::max(1.0, norm);
}

void jacobi_eigen(const Eigen::MatrixXd& m, Eigen::VectorXd& values, Eigen::MatrixXd& vectors) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd a = m;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double scale = std::max(1.0, a.norm());
  for (int sweep = 0; sweep < 100; ++sweep) {
    // summed directly: ||a||^2 - ||diag a||^2 cancels long before 1e-12
    double off = 0;
    for (Eigen::Index q = 0; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) off += 2 * a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-12 * scale) break;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        Eigen::JacobiRotation<double> j;
        j.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, j.adjoint());
        a.applyOnTheRight(p, q, j);
        v.applyOnTheRight(p, q, j);
      }
  }
  std::vector<Eigen::Index> order(n);
  for (Eigen::Index i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return a(x, x) < a(y, y); });
  values.resize(n);
  vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    values(k) = a(order[k], order[k]);
    vectors.col(k) = v.col(order[k]);
  }
}

std::vector<int> cluster_sorted(const std::vector<double>& sorted, double tol) {
  std::vector<int> id(sorted.size(), 0);
  for (size_t i = 1; i < sorted.size(); ++i) id[i] = id[i - 1] + (sorted[i] - sorted[i - 1] > tol ? 1 : 0);
  return id;
}

SpectralDecomposition eigen_sym(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) throw ContractError("eigen_sym needs a square matrix");
  if (m.rows() > kNumericCap) throw RefusalError("matrix exceeds numeric size cap");
  if (m.size() && (m - m.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw ContractError("eigen_sym needs a symmetric matrix");
  SpectralDecomposition sd;
  sd.tol = tol > 0 ? tol : default_tol(m);
  jacobi_eigen(m, sd.raw_eigenvalues, sd.eigenvectors);
  const Eigen::Index n = m.rows();
  std::vector<double> vals(sd.raw_eigenvalues.data(), sd.raw_eigenvalues.data() + n);
  auto id = cluster_sorted(vals, sd.tol);
  for (Eigen::Index k = 0; k < n;) {
    Eigen::Index e = k;
    double sum = 0;
    while (e < n && id[e] == id[k]) sum += vals[e++];
    const Eigen::Index mult = e - k;
    auto block = sd.eigenvectors.middleCols(k, mult);
    sd.eigenvalues.push_back(sum / static_cast<double>(mult));
    sd.multiplicities.push_back(static_cast<int>(mult));
    sd.projections.push_back(block * block.transpose());
    k = e;
  }
  return sd;
}

MatrixXi laplacian(const Graph& g) {
  MatrixXi d = adjacency(g);
  MatrixXi l = -d;
  l.diagonal() = d.rowwise().sum();
  return l;
}

std::optional<Eigen::VectorXd> circulant_symbol(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Eigen::Index n = m.rows();
  if (n == 0) return std::nullopt;
  Eigen::VectorXd gamma = m.row(0).transpose();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (m(i, j) != gamma((j - i + n) % n)) return std::nullopt;
  return gamma;
}

std::vector<std::complex<double>> fourier_eigenvalues(const Eigen::VectorXd& gamma) {
  const Eigen::Index n = gamma.size();
  std::vector<std::complex<double>> q(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    std::complex<double> acc = 0;
    for (Eigen::Index r = 0; r < n; ++r)
      acc += gamma(r) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>((j * r) % n) / n);
    q[j] = acc;
  }
  return q;
}

Polynomial<BigInt> segment_charpoly(int n) {
  if (n < 0) throw ContractError("segment_charpoly needs N >= 0");
  using P = Polynomial<BigInt>;
  P prev = P::constant(1), cur = P::x();
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    P next = P::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

// Cluster ids of the entries of m, numbered by ascending value.
Eigen::MatrixXi entry_clusters(const Eigen::MatrixXd& m, double tol, std::vector<double>* centers) {
  std::vector<std::pair<double, Eigen::Index>> entries;
  entries.reserve(m.size());
  for (Eigen::Index k = 0; k < m.size(); ++k) entries.emplace_back(m.data()[k], k);
  std::sort(entries.begin(), entries.end());
  std::vector<double> sorted;
  for (auto& e : entries) sorted.push_back(e.first);
  auto id = cluster_sorted(sorted, tol);
  Eigen::MatrixXi out(m.rows(), m.cols());
  std::vector<double> sums, counts;
  for (size_t k = 0; k < entries.size(); ++k) {
    out.data()[entries[k].second] = id[k];
    if (id[k] >= static_cast<int>(sums.size())) sums.push_back(0), counts.push_back(0);
    sums[id[k]] += entries[k].first;
    counts[id[k]] += 1;
  }
  if (centers) {
    centers->clear();
    for (size_t c = 0; c < sums.size(); ++c) centers->push_back(sums[c] / counts[c]);
  }
  return out;
}

// Joint refinement of the entry partitions of all matrices in `mats`. Positions
// where every matrix vanishes get cell -1.
Eigen::MatrixXi joint_partition(const std::vector<Eigen::MatrixXd>& mats, Eigen::Index n, double tol) {
  std::vector<Eigen::MatrixXi> labels;
  for (const auto& m : mats) labels.push_back(entry_clusters(m, tol, nullptr));
  auto vanishes = [&](Eigen::Index k) {
    return std::all_of(mats.begin(), mats.end(), [&](const Eigen::MatrixXd& m) { return std::abs(m.data()[k]) <= tol; });
  };
  auto key_of = [&](Eigen::Index k) {
    std::vector<int> key;
    key.reserve(labels.size());
    for (const auto& l : labels) key.push_back(l.data()[k]);
    return key;
  };
  std::map<std::vector<int>, int> ids;
  for (Eigen::Index k = 0; k < n * n; ++k)
    if (!vanishes(k)) ids.emplace(key_of(k), 0);
  int next = 0;
  for (auto& [key, id] : ids) id = next++;
  Eigen::MatrixXi cell(n, n);
  for (Eigen::Index k = 0; k < n * n; ++k) cell.data()[k] = vanishes(k) ? -1 : ids[key_of(k)];
  return cell;
}

std::vector<Eigen::MatrixXd> indicators(const Eigen::MatrixXi& cell) {
  int k = cell.size() ? cell.maxCoeff() + 1 : 0;
  std::vector<Eigen::MatrixXd> out(k, Eigen::MatrixXd::Zero(cell.rows(), cell.cols()));
  for (Eigen::Index i = 0; i < cell.rows(); ++i)
    for (Eigen::Index j = 0; j < cell.cols(); ++j)
      if (cell(i, j) >= 0) out[cell(i, j)](i, j) = 1.0;
  return out;
}

}  // namespace

std::vector<ColorComponent> color_decomposition(const Eigen::MatrixXd& m, double tol) {
  std::vector<double> centers;
  Eigen::MatrixXi id = entry_clusters(m, tol, &centers);
  std::vector<ColorComponent> out;
  auto ind = indicators(id);
  for (size_t c = 0; c < ind.size(); ++c) out.push_back({centers[c], ind[c]});
  return out;
}

MatrixAlgebraBasis color_spectral_closure(const Eigen::MatrixXd& d, double tol, int max_iter) {
  if (d.rows() != d.cols() || (d.size() && (d - d.transpose()).cwiseAbs().maxCoeff() > 0))
    throw ContractError("color_spectral_closure needs a symmetric matrix");
  const Eigen::Index n = d.rows();
  if (tol <= 0) tol = default_tol(d);
  std::vector<Eigen::MatrixXd> elements{Eigen::MatrixXd::Identity(n, n), d};
  MatrixAlgebraBasis out;
  out.converged = false;
  int prev_dim = -1, stable = 0;
  for (int it = 1; it <= max_iter; ++it) {
    out.iterations = it;
    Eigen::MatrixXi cell = joint_partition(elements, n, tol);
    out.basis = indicators(cell);
    out.dimension = static_cast<int>(out.basis.size());
    stable = out.dimension == prev_dim ? stable + 1 : 0;
    if (stable >= 2) {
      out.converged = true;
      break;
    }
    prev_dim = out.dimension;
    elements = out.basis;
    for (const auto& c : out.basis) {
      Eigen::MatrixXd s = c + c.transpose();
      for (const auto& p : eigen_sym(s, tol).projections) elements.push_back(p);
    }
  }
  return out;
}

MatrixXi coherent_classes(const MatrixXi& d) {
  const Eigen::Index n = d.rows();
  if (d.rows() != d.cols()) throw ContractError("coherent closure needs a square matrix");
  if (n > kExhaustiveCap) throw RefusalError("coherent closure exceeds exhaustive size cap");
  MatrixXi c(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) c(i, j) = i == j ? 2 + d(i, j) : d(i, j);
  auto renumber = [&](const MatrixXi& raw) {
    std::map<int, int> ids;
    for (Eigen::Index k = 0; k < raw.size(); ++k) ids.emplace(raw.data()[k], 0);
    int next = 0;
    for (auto& [v, id] : ids) id = next++;
    MatrixXi r(n, n);
    for (Eigen::Index k = 0; k < raw.size(); ++k) r.data()[k] = ids[raw.data()[k]];
    return r;
  };
  c = renumber(c);
  int count = c.size() ? c.maxCoeff() + 1 : 0;
  while (true) {
    std::map<std::vector<int>, int> sigs;
    std::vector<std::vector<int>> keys(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        std::vector<int> pairs;
        pairs.reserve(n);
        for (Eigen::Index k = 0; k < n; ++k) pairs.push_back(c(i, k) * count + c(k, j));
        std::sort(pairs.begin(), pairs.end());
        std::vector<int> key{c(i, j), c(j, i)};
        key.insert(key.end(), pairs.begin(), pairs.end());
        sigs.emplace(key, 0);
        keys[i * n + j] = std::move(key);
      }
    int next = 0;
    for (auto& [k, id] : sigs) id = next++;
    MatrixXi nc(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) nc(i, j) = sigs[keys[i * n + j]];
    c = nc;
    if (next == count) break;
    count = next;
  }
  return c;
}

MatrixAlgebraBasis coherent_closure_exact(const MatrixXi& d) {
  MatrixAlgebraBasis out;
  out.basis = indicators(coherent_classes(d));
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

int span_rank(const std::vector<Eigen::MatrixXd>& mats, double tol) {
  if (mats.empty()) return 0;
  const Eigen::Index len = mats[0].size();
  Eigen::MatrixXd stack(len, static_cast<Eigen::Index>(mats.size()));
  for (size_t k = 0; k < mats.size(); ++k)
    stack.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Eigen::VectorXd>(mats[k].data(), len);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(stack);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cut = tol * std::max(1.0, sv(0));
  return static_cast<int>((sv.array() > cut).count());
}

bool span_contained(const std::vector<Eigen::MatrixXd>& a, const std::vector<Eigen::MatrixXd>& b, double tol) {
  std::vector<Eigen::MatrixXd> both = b;
  both.insert(both.end(), a.begin(), a.end());
  return span_rank(both, tol) == span_rank(b, tol);
}

std::vector<Eigen::VectorXd> evolve(const Graph& g, const Eigen::VectorXd& init, EvolveKind kind, double coeff,
                                    double delta, int steps) {
  if (init.size() != g.order()) throw ContractError("initial state size does not match the graph");
  if (!(delta > 0)) throw ContractError("time step must be positive");
  if (steps < 0) throw ContractError("step count must be non-negative");
  const Eigen::MatrixXd l = laplacian(g).cast<double>();
  std::vector<Eigen::VectorXd> traj{init};
  traj.reserve(steps + 1);
  if (kind == EvolveKind::Heat) {
    for (int s = 0; s < steps; ++s) traj.push_back(traj.back() - coeff * delta * (l * traj.back()));
  } else {
    Eigen::VectorXd prev = init;
    for (int s = 0; s < steps; ++s) {
      const Eigen::VectorXd& cur = traj.back();
      Eigen::VectorXd next = 2 * cur - prev - coeff * delta * delta * (l * cur);
      prev = cur;
      traj.push_back(std::move(next));
    }
  }
  return traj;
}

double stable_step_bound(const Graph& g) {
  auto sd = eigen_sym(laplacian(g).cast<double>().eval());
  double top = sd.eigenvalues.empty() ? 0.0 : sd.eigenvalues.back();
  return top > 0 ? 2.0 / top : std::numeric_limits<double>::infinity();
}

}  // namespace gsym
