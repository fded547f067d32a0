#include "gsym/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "gsym/exact.hpp"
#include "gsym/spectral.hpp"

namespace gsym {

// ---- Perm ------------------------------------------------------------------

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) throw ContractError("image list is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Perm r;
  r.images_ = std::move(inv);
  return r;
}

Eigen::MatrixXd Perm::matrix() const {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(degree(), degree());
  for (int i = 0; i < degree(); ++i) p(images_[i], i) = 1;
  return p;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw ContractError("composing permutations of different degree");
  Perm r;
  r.images_.resize(q.images_.size());
  for (int i = 0; i < q.degree(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

bool is_automorphism(const Graph& g, const Perm& p) {
  if (p.degree() != g.order()) return false;
  // edges map injectively, so preserving edges preserves non-edges too
  for (auto [i, j] : g.edges())
    if (!g.has_edge(p(i), p(j))) return false;
  return true;
}

// ---- PermGroup -------------------------------------------------------------

PermGroup::PermGroup(int n, std::vector<Perm> generators) : n_(n) {
  if (n < 0) throw ContractError("negative degree");
  for (auto& g : generators) {
    if (g.degree() != n) throw ContractError("generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
  build();
}

void PermGroup::rebuild_orbit(size_t l) {
  Level& lv = levels_[l];
  lv.transversal.assign(n_, std::nullopt);
  lv.orbit = {lv.point};
  lv.transversal[lv.point] = Perm::identity(n_);
  for (size_t k = 0; k < lv.orbit.size(); ++k) {
    int beta = lv.orbit[k];
    for (const auto& s : lv.strong) {
      int gamma = s(beta);
      if (!lv.transversal[gamma]) {
        lv.transversal[gamma] = s * *lv.transversal[beta];
        lv.orbit.push_back(gamma);
      }
    }
  }
}

std::pair<Perm, size_t> PermGroup::strip(Perm h, size_t from) const {
  for (size_t l = from; l < levels_.size(); ++l) {
    int beta = h(levels_[l].point);
    if (!levels_[l].transversal[beta]) return {h, l};
    h = levels_[l].transversal[beta]->inverse() * h;
  }
  return {h, levels_.size()};
}

namespace {

int first_moved(const Perm& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) != i) return i;
  return -1;
}

}  // namespace

void PermGroup::build() {
  levels_.clear();
  for (const auto& g : gens_) {
    bool fixes_all = std::all_of(levels_.begin(), levels_.end(), [&](const Level& l) { return g(l.point) == l.point; });
    if (fixes_all) levels_.push_back(Level{first_moved(g), {}, {}, {}});
  }
  for (size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : gens_) {
      bool fixes = true;
      for (size_t k = 0; k < l; ++k) fixes = fixes && g(levels_[k].point) == levels_[k].point;
      if (fixes) levels_[l].strong.push_back(g);
    }
    rebuild_orbit(l);
  }

  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    for (size_t oi = 0; oi < levels_[i].orbit.size() && !restarted; ++oi) {
      const int beta = levels_[i].orbit[oi];
      for (size_t si = 0; si < levels_[i].strong.size(); ++si) {
        const Perm s = levels_[i].strong[si];
        Perm h = levels_[i].transversal[s(beta)]->inverse() * s * *levels_[i].transversal[beta];
        if (h.is_identity()) continue;
        auto [res, j] = strip(std::move(h), i + 1);
        if (j == levels_.size() && res.is_identity()) continue;
        if (j == levels_.size()) levels_.push_back(Level{first_moved(res), {}, {}, {}});
        for (size_t l = i + 1; l <= j; ++l) {
          levels_[l].strong.push_back(res);
          rebuild_orbit(l);
        }
        i = static_cast<long>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  base_.clear();
  for (const auto& l : levels_) {
    order_ *= static_cast<long>(l.orbit.size());
    base_.push_back(l.point);
  }
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != n_) return false;
  auto [res, j] = strip(p, 0);
  return j == levels_.size() && res.is_identity();
}

std::vector<Perm> PermGroup::elements() const {
  if (order_ > kElementListCap) throw RefusalError("group has more than 10^7 elements");
  std::vector<Perm> out{Perm::identity(n_)};
  for (auto l = levels_.rbegin(); l != levels_.rend(); ++l) {
    std::vector<Perm> next;
    next.reserve(out.size() * l->orbit.size());
    for (int beta : l->orbit)
      for (const auto& e : out) next.push_back(*l->transversal[beta] * e);
    out = std::move(next);
  }
  return out;
}

// ---- automorphism search ---------------------------------------------------

namespace {

using Adj = std::vector<std::vector<int>>;

int class_count(const std::vector<int>& c) {
  std::vector<int> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

// Joint equitable refinement of two colourings; false once they diverge.
bool refine(const Adj& na, const Adj& nb, std::vector<int>& ca, std::vector<int>& cb) {
  const int n = static_cast<int>(ca.size());
  using Sig = std::pair<int, std::vector<int>>;
  int classes = -1;
  while (true) {
    std::vector<Sig> sa(n), sb(n);
    for (int v = 0; v < n; ++v) {
      sa[v].first = ca[v];
      for (int u : na[v]) sa[v].second.push_back(ca[u]);
      std::sort(sa[v].second.begin(), sa[v].second.end());
      sb[v].first = cb[v];
      for (int u : nb[v]) sb[v].second.push_back(cb[u]);
      std::sort(sb[v].second.begin(), sb[v].second.end());
    }
    std::vector<Sig> keys = sa, other = sb;
    std::sort(keys.begin(), keys.end());
    std::sort(other.begin(), other.end());
    if (keys != other) return false;
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int v = 0; v < n; ++v) {
      ca[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sa[v]) - keys.begin());
      cb[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sb[v]) - keys.begin());
    }
    const int now = static_cast<int>(keys.size());
    if (now == classes) return true;
    classes = now;
  }
}

int first_open_cell(const std::vector<int>& c) {
  std::vector<int> count(c.size() + 1, 0);
  for (int x : c) ++count[x];
  for (size_t k = 0; k < count.size(); ++k)
    if (count[k] > 1) return static_cast<int>(k);
  return -1;
}

struct Search {
  const Graph& a;
  const Graph& b;
  Adj na, nb;

  std::optional<Perm> extend(std::vector<int> ca, std::vector<int> cb) const {
    if (!refine(na, nb, ca, cb)) return std::nullopt;
    const int n = a.order();
    const int cell = first_open_cell(ca);
    if (cell < 0) {
      std::vector<int> where(n), images(n);
      for (int w = 0; w < n; ++w) where[cb[w]] = w;
      for (int v = 0; v < n; ++v) images[v] = where[ca[v]];
      for (auto [i, j] : a.edges())
        if (!b.has_edge(images[i], images[j])) return std::nullopt;
      return Perm(std::move(images));
    }
    const int fresh = class_count(ca);
    const int x = static_cast<int>(std::find(ca.begin(), ca.end(), cell) - ca.begin());
    for (int y = 0; y < n; ++y) {
      if (cb[y] != cell) continue;
      auto ca2 = ca, cb2 = cb;
      ca2[x] = fresh;
      cb2[y] = fresh;
      if (auto p = extend(std::move(ca2), std::move(cb2))) return p;
    }
    return std::nullopt;
  }
};

std::vector<int> orbit_of(int x, int n, const std::vector<Perm>& gens) {
  std::vector<bool> seen(n, false);
  std::vector<int> orbit{x};
  seen[x] = true;
  for (size_t k = 0; k < orbit.size(); ++k)
    for (const auto& g : gens)
      if (!seen[g(orbit[k])]) seen[g(orbit[k])] = true, orbit.push_back(g(orbit[k]));
  return orbit;
}

}  // namespace

PermGroup automorphism_group(const Graph& g) {
  const int n = g.order();
  if (n > kExhaustiveCap) throw RefusalError("automorphism search is capped at 64 vertices");
  Search s{g, g, g.neighbours(), g.neighbours()};

  struct Level {
    std::vector<int> colouring;  // before individualising `point`
    int point;
    std::vector<int> cell;
  };
  std::vector<Level> path;
  std::vector<int> cur(n, 0), twin(n, 0);
  refine(s.na, s.na, cur, twin);
  for (int c = first_open_cell(cur); c >= 0; c = first_open_cell(cur)) {
    Level lv{cur, -1, {}};
    for (int v = 0; v < n; ++v)
      if (cur[v] == c) lv.cell.push_back(v);
    lv.point = lv.cell.front();
    cur[lv.point] = class_count(cur);
    twin = cur;
    refine(s.na, s.na, cur, twin);
    path.push_back(std::move(lv));
  }

  std::vector<Perm> gens;
  for (auto lv = path.rbegin(); lv != path.rend(); ++lv) {
    auto orbit = orbit_of(lv->point, n, gens);
    const int fresh = class_count(lv->colouring);
    for (int y : lv->cell) {
      if (std::find(orbit.begin(), orbit.end(), y) != orbit.end()) continue;
      auto ca = lv->colouring, cb = lv->colouring;
      ca[lv->point] = fresh;
      cb[y] = fresh;
      if (auto p = s.extend(std::move(ca), std::move(cb))) {
        gens.push_back(std::move(*p));
        orbit = orbit_of(lv->point, n, gens);
      }
    }
  }
  return PermGroup(n, std::move(gens));
}

BigInt automorphism_order_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw RefusalError("exhaustive automorphism filter is capped at 8 vertices");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long count = 0;
  do {
    if (is_automorphism(g, Perm(p))) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::optional<Perm> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (g.order() > kExhaustiveCap) throw RefusalError("isomorphism search is capped at 64 vertices");
  Search s{g, h, g.neighbours(), h.neighbours()};
  return s.extend(std::vector<int>(g.order(), 0), std::vector<int>(h.order(), 0));
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

// ---- orbits and spectral checks ---------------------------------------------

bool check_eigenspace_preservation(const PermGroup& group, const Graph& g, double tol) {
  if (group.degree() != g.order()) throw ContractError("group and graph degrees differ");
  auto sd = eigen_sym(adjacency_real(g), tol);
  for (const auto& s : group.generators()) {
    Eigen::MatrixXd p = s.matrix();
    for (const auto& proj : sd.projections)
      if ((p * proj * p.transpose() - proj).cwiseAbs().maxCoeff() > 10 * sd.tol) return false;
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<int>> orbits(const PermGroup& group) {
  const int n = group.degree();
  UnionFind uf(n);
  for (const auto& s : group.generators())
    for (int i = 0; i < n; ++i) uf.unite(i, s(i));
  std::map<int, std::vector<int>> cls;
  for (int i = 0; i < n; ++i) cls[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : cls) out.push_back(std::move(members));
  return out;
}

OrbitalPartition orbitals(const PermGroup& group) {
  const int n = group.degree();
  UnionFind uf(n * n);
  for (const auto& s : group.generators())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) uf.unite(i * n + j, s(i) * n + s(j));
  OrbitalPartition r;
  r.n = n;
  r.class_of.assign(n * n, -1);
  std::map<int, int> id;
  for (int k = 0; k < n * n; ++k) {
    auto [it, fresh] = id.emplace(uf.find(k), static_cast<int>(id.size()));
    r.class_of[k] = it->second;
  }
  r.count = static_cast<int>(id.size());
  return r;
}

bool is_transitive(const PermGroup& group) { return group.degree() <= 1 || orbits(group).size() == 1; }

bool is_doubly_transitive(const PermGroup& group) {
  if (group.degree() < 2) return false;
  return orbitals(group).count == 2;
}

bool adjacency_constant_on_orbitals(const Graph& g, const PermGroup& group) {
  if (group.degree() != g.order()) throw ContractError("group and graph degrees differ");
  auto orb = orbitals(group);
  const int n = g.order();
  MatrixXi d = adjacency(g);
  std::vector<int> value(orb.count, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int& v = value[orb.class_of[i * n + j]];
      if (v < 0) v = d(i, j);
      if (v != d(i, j)) return false;
    }
  return true;
}

// ---- product theorems --------------------------------------------------------

BigInt order_cyclic(int n) { return n; }
BigInt order_dihedral(int n) { return 2 * n; }
BigInt order_symmetric(int n) { return factorial(n); }
BigInt order_hyperoctahedral(int n) { return ipow(BigInt(2), n) * factorial(n); }
BigInt order_wreath(const BigInt& inner, int degree, const BigInt& outer) { return ipow(inner, degree) * outer; }

namespace {

bool regular_connected(const Graph& g) { return is_connected(g) && basic_stats(g).is_regular; }

bool overlap(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (double x : a)
    for (double y : b)
      if (std::abs(x - y) <= tol) return true;
  return false;
}

}  // namespace

ProductReport verify_product_theorem(const Graph& x, const Graph& y, ProductKind kind, double tol) {
  ProductReport r;
  auto lam = eigen_sym(adjacency_real(x)).eigenvalues;
  auto mu = eigen_sym(adjacency_real(y)).eigenvalues;
  std::vector<double> a, b;
  switch (kind) {
    case ProductKind::Direct:
    case ProductKind::Cartesian: {
      if (!regular_connected(x) || !regular_connected(y)) {
        r.applicable = false;
        r.note = "operands must be connected and regular";
        break;
      }
      const bool ratio = kind == ProductKind::Direct;
      auto zero = [&](const std::vector<double>& s) {
        return std::any_of(s.begin(), s.end(), [&](double v) { return std::abs(v) <= tol; });
      };
      if (ratio && (zero(lam) || zero(mu))) {
        r.note = "spectrum contains 0";
        break;
      }
      for (size_t i = 0; i < lam.size(); ++i)
        for (size_t j = 0; j < lam.size(); ++j)
          if (i != j) a.push_back(ratio ? lam[i] / lam[j] : lam[i] - lam[j]);
      for (size_t i = 0; i < mu.size(); ++i)
        for (size_t j = 0; j < mu.size(); ++j)
          if (i != j) b.push_back(ratio ? mu[i] / mu[j] : mu[i] - mu[j]);
      r.conditions_hold = !overlap(a, b, tol);
      if (!r.conditions_hold) r.note = ratio ? "eigenvalue ratio sets meet" : "eigenvalue difference sets meet";
      break;
    }
    case ProductKind::Lexicographic: {
      if (!regular_connected(x)) {
        r.applicable = false;
        r.note = "first operand must be connected and regular";
        break;
      }
      const double top = lam.back();
      for (size_t i = 0; i + 1 < lam.size(); ++i) a.push_back(top - lam[i]);
      for (double m : mu) b.push_back(-x.order() * m);
      r.conditions_hold = !overlap(a, b, tol);
      if (!r.conditions_hold) r.note = "spectral gap meets the scaled second spectrum";
      break;
    }
  }
  BigInt gx = automorphism_group(x).order(), gy = automorphism_group(y).order();
  r.order_product = kind == ProductKind::Lexicographic ? order_wreath(gx, y.order(), gy) : gx * gy;
  r.order_actual = automorphism_group(product(x, y, kind)).order();
  r.equal = r.order_product == r.order_actual;
  return r;
}

// ---- classification table ----------------------------------------------------

const std::vector<TableRow>& symmetry_table_rows() {
  static const std::vector<TableRow> rows = [] {
    const BigInt z2 = order_cyclic(2);
    auto d = order_dihedral;
    auto s = order_symmetric;
    auto h = order_hyperoctahedral;
    return std::vector<TableRow>{
        {2, "K2", "k2", "Z2", z2, false},
        {3, "K3", "k3", "S3", s(3), false},
        {4, "2K2", "copies:2,k2", "H2", h(2), true},
        {4, "K4", "k4", "S4", s(4), true},
        {5, "C5", "c5", "D5", d(5), false},
        {5, "K5", "k5", "S5", s(5), true},
        {6, "C6", "c6", "D6", d(6), false},
        {6, "2K3", "copies:2,k3", "S3 wr Z2", order_wreath(s(3), 2, z2), true},
        {6, "3K2", "copies:3,k2", "H3", h(3), true},
        {6, "K6", "k6", "S6", s(6), true},
        {7, "C7", "c7", "D7", d(7), false},
        {7, "K7", "k7", "S7", s(7), true},
        {8, "C8", "c8", "D8", d(8), false},
        {8, "C8+", "chord:8,4", "D8", d(8), false},
        {8, "P(C4)", "prism:c4", "H3", h(3), true},
        {8, "2K4", "copies:2,k4", "S4 wr Z2", order_wreath(s(4), 2, z2), true},
        {8, "2C4", "copies:2,c4", "H2 wr Z2", order_wreath(h(2), 2, z2), true},
        {8, "4K2", "copies:4,k2", "H4", h(4), true},
        {8, "K8", "k8", "S8", s(8), true},
        {9, "C9", "c9", "D9", d(9), false},
        {9, "C9^3", "chord:9,3", "D9", d(9), false},
        {9, "K3xK3", "cartesian:k3,k3", "S3 wr Z2", order_wreath(s(3), 2, z2), false},
        {9, "3K3", "copies:3,k3", "S3 wr S3", order_wreath(s(3), 3, s(3)), true},
        {9, "K9", "k9", "S9", s(9), true},
        {10, "C10", "c10", "D10", d(10), false},
        {10, "C10^2", "chord:10,2", "D10", d(10), false},
        {10, "C10+", "chord:10,5", "D10", d(10), false},
        {10, "P(C5)", "prism:c5", "D10", d(10), false},
        {10, "P(K5)", "prism:k5", "S5 x Z2", s(5) * z2, true},
        {10, "C10^4", "chord:10,4", "Z2 wr D5", order_wreath(z2, 5, d(5)), true},
        {10, "2C5", "copies:2,c5", "D5 wr Z2", order_wreath(d(5), 2, z2), true},
        {10, "2K5", "copies:2,k5", "S5 wr Z2", order_wreath(s(5), 2, z2), true},
        {10, "5K2", "copies:5,k2", "H5", h(5), true},
        {10, "K10", "k10", "S10", s(10), true},
        {10, "P10", "petersen", "S5", s(5), false},
        {11, "C11", "c11", "D11", d(11), false},
        {11, "C11^2", "chord:11,2", "D11", d(11), false},
        {11, "C11^3", "chord:11,3", "D11", d(11), false},
        {11, "K11", "k11", "S11", s(11), true},
    };
  }();
  return rows;
}

std::vector<TableResult> table_n_le_11() {
  std::vector<TableResult> out;
  for (const auto& row : symmetry_table_rows()) {
    TableResult r{row, automorphism_group(build_family(row.family)).order(), false};
    r.match = r.actual == row.expected;
    out.push_back(std::move(r));
  }
  return out;
}

// ---- characters ----------------------------------------------------------------

Rational derangement_probability(int n) {
  if (n < 0) throw ContractError("negative n");
  Rational p = 0;
  for (int r = 0; r <= n; ++r) p += Rational(r % 2 ? -1 : 1, factorial(r));
  return p;
}

CharacterStats character_stats(int n, int k_max) {
  if (n < 1) throw ContractError("character statistics need N >= 1");
  if (n > 30) throw RefusalError("cycle-type summation is capped at N = 30");
  if (k_max < 0) throw ContractError("negative moment order");
  CharacterStats st;
  st.derangement_prob = derangement_probability(n);
  std::vector<BigInt> sums(k_max + 1, 0);
  const BigInt total = factorial(n);
  for (const auto& m : integer_partitions(n)) {
    BigInt denom = 1;
    for (int len = 1; len <= n; ++len) denom *= ipow(BigInt(len), m[len]) * factorial(m[len]);
    BigInt size = total / denom, fix = m[1], term = size;
    for (int k = 1; k <= k_max; ++k) {
      term *= fix;
      sums[k] += term;
    }
  }
  for (int k = 1; k <= k_max; ++k) st.fixed_point_moments.push_back(Rational(sums[k], total));
  return st;
}

CharacterEigen character_eigenvector(const Graph& g, int j) {
  const int n = g.order();
  if (j < 0 || j >= n) throw ContractError("character index out of range");
  Eigen::MatrixXd d = adjacency_real(g);
  auto gamma = circulant_symbol(d);
  if (!gamma) throw ContractError("graph is not circulant under its labelling");
  const std::complex<double> w = std::polar(1.0, 2 * std::numbers::pi / n);
  CharacterEigen r;
  r.vector.resize(n);
  for (int i = 0; i < n; ++i) r.vector(i) = std::pow(w, static_cast<double>((static_cast<long>(j) * i) % n));
  r.eigenvalue = 0;
  for (int s = 0; s < n; ++s)
    if ((*gamma)(s) != 0) r.eigenvalue += (*gamma)(s) * std::pow(w, static_cast<double>((static_cast<long>(j) * s) % n));
  r.residual = (d.cast<std::complex<double>>() * r.vector - r.eigenvalue * r.vector).cwiseAbs().maxCoeff();
  return r;
}

// ---- partial permutations ------------------------------------------------------

MatrixXi oriented_cycle_adjacency(int n) {
  if (n < 2) throw ContractError("oriented cycle needs N >= 2");
  MatrixXi d = MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, (i + 1) % n) = 1;
  return d;
}

std::vector<PartialPerm> partial_automorphisms(const MatrixXi& d) {
  const int n = static_cast<int>(d.rows());
  if (d.cols() != n) throw ContractError("adjacency matrix must be square");
  if (n > 6) throw RefusalError("partial automorphism enumeration is capped at N = 6");
  std::vector<PartialPerm> out;
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back({img});
      return;
    }
    self(self, i + 1);
    for (int t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = d(i, i) == d(t, t);
      for (int k = 0; k < i && ok; ++k)
        if (img[k] >= 0) ok = d(i, k) == d(t, img[k]) && d(k, i) == d(img[k], t);
      if (!ok) continue;
      img[i] = t;
      used[t] = true;
      self(self, i + 1);
      used[t] = false;
      img[i] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<PartialPerm> partial_automorphisms(const Graph& g) { return partial_automorphisms(adjacency(g)); }

BigInt count_partial_perms(int n) {
  if (n < 0) throw ContractError("negative n");
  if (n > kExhaustiveCap) throw RefusalError("partial permutation count is capped at N = 64");
  BigInt s = 0;
  for (int k = 0; k <= n; ++k) s += factorial(k) * binomial(n, k) * binomial(n, k);
  return s;
}

std::vector<BigInt> cyclic_component_counts(int n) {
  if (n < 1) throw ContractError("cyclic component counts need N >= 1");
  if (n > 20) throw RefusalError("subset enumeration is capped at N = 20");
  std::vector<BigInt> k(n + 1, 0);
  const unsigned full = (1u << n) - 1;
  for (unsigned mask = 0; mask <= full; ++mask) {
    int p = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i & 1) && !(mask >> ((i + n - 1) % n) & 1)) ++p;
    if (mask == full) p = 1;
    k[p] += 1;
  }
  return k;
}

BigInt partial_counts_cycle(int n, bool oriented) {
  if (n < 3) throw ContractError("cycle partial counts need N >= 3");
  auto k = cyclic_component_counts(n);
  BigInt total = 1 + BigInt(n) * k[1];
  const BigInt choices = oriented ? n : 2 * n;
  for (int p = 2; p <= n / 2; ++p) total += ipow(choices, p) * k[p];
  return total;
}

}  // namespace gsym
