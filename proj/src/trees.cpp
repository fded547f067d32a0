#include "gsym/trees.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gsym/exact.hpp"
#include "gsym/spectral.hpp"

namespace gsym {

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

PruferSeq prufer_encode(const Graph& tree) {
  const int n = tree.order();
  if (n < 2) throw ContractError("prufer_encode needs at least 2 vertices");
  if (!is_tree(tree)) throw ContractError("prufer_encode needs a tree");
  auto nb = tree.neighbours();
  std::vector<int> deg(n);
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(nb[v].size());
    if (deg[v] == 1) leaves.insert(v);
  }
  std::vector<bool> gone(n, false);
  PruferSeq seq;
  for (int step = 0; step < n - 2; ++step) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    gone[leaf] = true;
    int parent = *std::find_if(nb[leaf].begin(), nb[leaf].end(), [&](int u) { return !gone[u]; });
    seq.push_back(parent);
    if (--deg[parent] == 1) leaves.insert(parent);
  }
  return seq;
}

Graph prufer_decode(const PruferSeq& seq, int n) {
  if (n < 2) throw ContractError("prufer_decode needs n >= 2");
  if (static_cast<int>(seq.size()) != n - 2) throw ContractError("Prufer sequence must have length n-2");
  std::vector<int> deg(n, 1);
  for (int a : seq) {
    if (a < 0 || a >= n) throw ContractError("Prufer entry out of range");
    ++deg[a];
  }
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  std::vector<Edge> e;
  for (int a : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.emplace_back(leaf, a);
    if (--deg[a] == 1) leaves.insert(a);
  }
  int u = *leaves.begin(), v = *std::next(leaves.begin());
  e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

BigInt count_labeled_trees(int n) {
  if (n < 1) throw ContractError("count_labeled_trees needs n >= 1");
  return n <= 2 ? BigInt(1) : ipow(BigInt(n), n - 2);
}

BigInt count_with_valences(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  if (n < 2) throw ContractError("valence vector needs at least 2 entries");
  int sum = 0;
  for (int x : v) {
    if (x < 1) throw ContractError("valences must be positive");
    sum += x - 1;
  }
  if (sum != n - 2) throw ContractError("valences must satisfy sum(v_i - 1) = n - 2");
  BigInt r = factorial(n - 2);
  for (int x : v) r /= factorial(x - 1);
  return r;
}

std::string to_string(SpanningMethod m) {
  switch (m) {
    case SpanningMethod::Cofactor: return "cofactor";
    case SpanningMethod::Spectral: return "spectral";
    case SpanningMethod::Circulant: return "circulant";
  }
  return "?";
}

SpanningMethod parse_spanning_method(const std::string& text) {
  for (auto m : {SpanningMethod::Cofactor, SpanningMethod::Spectral, SpanningMethod::Circulant})
    if (to_string(m) == text) return m;
  throw ParseError("unknown spanning-tree method '" + text + "'", 0);
}

BigInt laplacian_cofactor(const Graph& g, int i, int j) {
  const int n = g.order();
  if (i < 0 || j < 0 || i >= n || j >= n) throw ContractError("cofactor index out of range");
  MatrixXb l = to_big(laplacian(g));
  MatrixXb minor(n - 1, n - 1);
  for (int r = 0, rr = 0; r < n; ++r) {
    if (r == i) continue;
    for (int c = 0, cc = 0; c < n; ++c) {
      if (c == j) continue;
      minor(rr, cc++) = l(r, c);
    }
    ++rr;
  }
  BigInt det = bareiss_det(minor);
  return (i + j) % 2 ? BigInt(-det) : det;
}

namespace {

void require_connected(const Graph& g) {
  if (g.order() == 0) throw ContractError("spanning trees of the empty vertex set are undefined");
  if (!is_connected(g)) throw ContractError("graph is disconnected: it has 0 spanning trees");
}

}  // namespace

BigInt spanning_tree_count(const Graph& g) {
  require_connected(g);
  return laplacian_cofactor(g, 0, 0);
}

double spanning_tree_count_spectral(const Graph& g) {
  require_connected(g);
  auto sd = eigen_sym(laplacian(g).cast<double>().eval());
  double p = 1;
  for (Eigen::Index k = 1; k < sd.raw_eigenvalues.size(); ++k) p *= sd.raw_eigenvalues(k);
  return p / g.order();
}

double spanning_tree_count_circulant(const Graph& g) {
  require_connected(g);
  auto gamma = circulant_symbol(adjacency_real(g));
  if (!gamma) throw ContractError("graph is not circulant under its labelling");
  auto mu = fourier_eigenvalues(*gamma);
  const double k = gamma->sum();
  double p = 1;
  for (size_t j = 1; j < mu.size(); ++j) p *= k - mu[j].real();
  return p / g.order();
}

SpanningCount spanning_tree_count(const Graph& g, SpanningMethod method) {
  SpanningCount r;
  r.method = method;
  switch (method) {
    case SpanningMethod::Cofactor:
      r.exact = spanning_tree_count(g);
      r.value = r.exact->convert_to<double>();
      break;
    case SpanningMethod::Spectral: r.value = spanning_tree_count_spectral(g); break;
    case SpanningMethod::Circulant: r.value = spanning_tree_count_circulant(g); break;
  }
  return r;
}

namespace {

using Multi = std::vector<std::vector<int>>;

bool multi_connected(const Multi& m) {
  const int n = static_cast<int>(m.size());
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (m[u][v] && !seen[v]) seen[v] = true, ++count, stack.push_back(v);
  }
  return count == n;
}

Multi remove_vertex(const Multi& m, int v) {
  Multi r;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    if (i == v) continue;
    std::vector<int> row;
    for (int j = 0; j < static_cast<int>(m.size()); ++j)
      if (j != v) row.push_back(m[i][j]);
    r.push_back(std::move(row));
  }
  return r;
}

BigInt deletion_contraction(Multi m) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return 1;
  if (!multi_connected(m)) return 0;
  // pendant vertex: its edge bundle is in every spanning tree
  for (int v = 0; v < n; ++v) {
    int nbrs = 0, u = -1;
    for (int w = 0; w < n; ++w)
      if (m[v][w]) ++nbrs, u = w;
    if (nbrs == 1) return BigInt(m[v][u]) * deletion_contraction(remove_vertex(m, v));
  }
  int u = -1, v = -1;
  for (int i = 0; i < n && u < 0; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[i][j]) {
        u = i, v = j;
        break;
      }
  const int mult = m[u][v];
  Multi deleted = m;
  deleted[u][v] = deleted[v][u] = 0;
  Multi contracted = m;
  for (int w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    contracted[u][w] += m[v][w];
    contracted[w][u] += m[w][v];
  }
  contracted[u][v] = contracted[v][u] = 0;
  contracted = remove_vertex(contracted, v);
  return deletion_contraction(std::move(deleted)) + BigInt(mult) * deletion_contraction(std::move(contracted));
}

}  // namespace

BigInt spanning_tree_count_oracle(const Graph& g) {
  if (g.size() > 24) throw RefusalError("deletion-contraction oracle is capped at 24 edges");
  if (g.order() == 0) throw ContractError("spanning trees of the empty vertex set are undefined");
  Multi m(g.order(), std::vector<int>(g.order(), 0));
  for (auto [i, j] : g.edges()) m[i][j] = m[j][i] = 1;
  return deletion_contraction(std::move(m));
}

void enumerate_labeled_trees(int n, const std::function<void(const Graph&)>& sink) {
  if (n < 1) throw ContractError("enumerate_labeled_trees needs n >= 1");
  if (n > 7) throw RefusalError("labelled tree listing is capped at n = 7");
  std::vector<Edge> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  const int m = static_cast<int>(all.size()), k = n - 1;
  if (k == 0) {
    sink(Graph(1));
    return;
  }
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> parent(n);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  while (true) {
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (int t : idx) {
      int a = find(all[t].first), b = find(all[t].second);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
    }
    if (acyclic) {
      std::vector<Edge> e;
      for (int t : idx) e.push_back(all[t]);
      sink(Graph(n, std::move(e)));
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace gsym
