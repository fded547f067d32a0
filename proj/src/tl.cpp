#include "gsym/tl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gsym/exact.hpp"

namespace gsym {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  int components() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i;
    return c;
  }
};

bool pairs_cross(int a, int b, int c, int d) { return (a < c && c < b && b < d) || (c < a && a < d && d < b); }

using Endpoint = std::pair<int, int>;

int position(int up, int down, Endpoint e) { return e.first == 0 ? e.second : up + down - 1 - e.second; }

}  // namespace

// ---- diagrams -----------------------------------------------------------------

Diagram::Diagram(int up, int down, std::vector<int> mate) : up_(up), down_(down), mate_(std::move(mate)) {
  const int n = up + down;
  if (up < 0 || down < 0 || static_cast<int>(mate_.size()) != n) throw ContractError("diagram size mismatch");
  for (int p = 0; p < n; ++p)
    if (mate_[p] < 0 || mate_[p] >= n || mate_[p] == p || mate_[mate_[p]] != p)
      throw ContractError("diagram is not a perfect matching");
  if (!is_noncrossing(*this)) throw ContractError("diagram is not noncrossing");
}

Diagram Diagram::identity(int k) {
  std::vector<std::pair<Endpoint, Endpoint>> p;
  for (int i = 0; i < k; ++i) p.push_back({{0, i}, {1, i}});
  return from_pairs(k, k, p);
}

Diagram Diagram::epsilon(int k, int i) {
  if (i < 1 || i >= k) throw ContractError("epsilon index out of range");
  std::vector<std::pair<Endpoint, Endpoint>> p;
  for (int j = 0; j < k; ++j)
    if (j != i - 1 && j != i) p.push_back({{0, j}, {1, j}});
  p.push_back({{0, i - 1}, {0, i}});
  p.push_back({{1, i - 1}, {1, i}});
  return from_pairs(k, k, p);
}

Diagram Diagram::from_pairs(int up, int down, const std::vector<std::pair<Endpoint, Endpoint>>& pairs) {
  std::vector<int> mate(up + down, -1);
  for (auto [a, b] : pairs) {
    int pa = position(up, down, a), pb = position(up, down, b);
    if (pa < 0 || pb < 0 || pa >= up + down || pb >= up + down) throw ContractError("endpoint out of range");
    mate[pa] = pb;
    mate[pb] = pa;
  }
  return Diagram(up, down, std::move(mate));
}

std::pair<int, int> Diagram::endpoint(int pos) const {
  return pos < up_ ? Endpoint{0, pos} : Endpoint{1, up_ + down_ - 1 - pos};
}

std::vector<std::pair<int, int>> Diagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < static_cast<int>(mate_.size()); ++p)
    if (p < mate_[p]) out.emplace_back(p, mate_[p]);
  return out;
}

Diagram Diagram::star() const {
  std::vector<std::pair<Endpoint, Endpoint>> p;
  for (auto [a, b] : pairs()) {
    auto ea = endpoint(a), eb = endpoint(b);
    p.push_back({{1 - ea.first, ea.second}, {1 - eb.first, eb.second}});
  }
  return from_pairs(down_, up_, p);
}

bool is_noncrossing(const Diagram& d) {
  auto p = d.pairs();
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (pairs_cross(p[i].first, p[i].second, p[j].first, p[j].second)) return false;
  return true;
}

std::pair<Diagram, int> compose(const Diagram& a, const Diagram& b) {
  if (a.down() != b.up()) throw ContractError("composition shape mismatch");
  const int A = a.up(), M = a.down(), B = b.down(), n = A + M + B;
  // nodes: a's top row, the shared middle row, b's bottom row
  std::vector<std::vector<int>> adj(n);
  auto link = [&](int x, int y) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  };
  for (auto [p, q] : a.pairs()) {
    auto node = [&](Endpoint e) { return e.first == 0 ? e.second : A + e.second; };
    link(node(a.endpoint(p)), node(a.endpoint(q)));
  }
  for (auto [p, q] : b.pairs()) {
    auto node = [&](Endpoint e) { return e.first == 0 ? A + e.second : A + M + e.second; };
    link(node(b.endpoint(p)), node(b.endpoint(q)));
  }
  auto external = [&](int x) { return x < A || x >= A + M; };
  auto as_endpoint = [&](int x) { return x < A ? Endpoint{0, x} : Endpoint{1, x - A - M}; };
  std::vector<bool> seen(n, false);
  std::vector<std::pair<Endpoint, Endpoint>> result;
  for (int s = 0; s < n; ++s) {
    if (!external(s) || seen[s]) continue;
    int prev = -1, cur = s;
    seen[s] = true;
    while (true) {
      int next = adj[cur][0] != prev || adj[cur].size() == 1 ? adj[cur][0] : adj[cur][1];
      prev = cur;
      cur = next;
      seen[cur] = true;
      if (external(cur)) break;
    }
    result.push_back({as_endpoint(s), as_endpoint(cur)});
  }
  int loops = 0;
  for (int s = A; s < A + M; ++s) {
    if (seen[s]) continue;
    ++loops;
    int prev = -1, cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
      prev = cur;
      cur = next;
    }
  }
  return {Diagram::from_pairs(A, B, result), loops};
}

Diagram tensor(const Diagram& a, const Diagram& b) {
  std::vector<std::pair<Endpoint, Endpoint>> p;
  for (auto [x, y] : a.pairs()) p.push_back({a.endpoint(x), a.endpoint(y)});
  auto shift = [&](Endpoint e) { return Endpoint{e.first, e.second + (e.first == 0 ? a.up() : a.down())}; };
  for (auto [x, y] : b.pairs()) p.push_back({shift(b.endpoint(x)), shift(b.endpoint(y))});
  return Diagram::from_pairs(a.up() + b.up(), a.down() + b.down(), p);
}

int closure_loops(const Diagram& d) {
  if (d.up() != d.down()) throw ContractError("closure needs a square diagram");
  const int k = d.up();
  UnionFind uf(2 * k);
  auto node = [&](Endpoint e) { return e.first * k + e.second; };
  for (auto [x, y] : d.pairs()) uf.unite(node(d.endpoint(x)), node(d.endpoint(y)));
  for (int i = 0; i < k; ++i) uf.unite(i, k + i);
  return uf.components();
}

std::vector<Diagram> enumerate_nc2(int up, int down) {
  const int n = up + down;
  if (up < 0 || down < 0) throw ContractError("negative point count");
  if (n > 20) throw RefusalError("noncrossing pairing enumeration is capped at 20 points");
  if (n % 2) return {};
  std::vector<std::vector<int>> out;
  std::vector<int> mate(n, -1);
  // fill the lowest unmatched position; partners leave an even gap inside
  auto rec = [&](auto&& self) -> void {
    int lo = static_cast<int>(std::find(mate.begin(), mate.end(), -1) - mate.begin());
    if (lo == n) {
      out.push_back(mate);
      return;
    }
    for (int m = lo + 1; m < n; m += 2) {
      if (mate[m] != -1) break;
      bool inside_free = true;
      for (int t = lo + 1; t < m && inside_free; ++t) inside_free = mate[t] == -1;
      if (!inside_free) break;
      mate[lo] = m;
      mate[m] = lo;
      self(self);
      mate[lo] = mate[m] = -1;
    }
  };
  rec(rec);
  std::vector<Diagram> d;
  for (auto& m : out) d.emplace_back(up, down, std::move(m));
  std::sort(d.begin(), d.end());
  return d;
}

// ---- traces and generators ----------------------------------------------------

Rational markov_trace(const TLElement<Rational>& a) {
  if (a.up() != a.down()) throw ContractError("trace needs a square shape");
  if (a.loop() == 0) throw ContractError("trace needs a nonzero loop value");
  Rational s = 0;
  for (const auto& [d, c] : a.terms()) s += c * rpow(a.loop(), closure_loops(d) - a.up());
  return s;
}

TLElement<Rational> jones_projection(int k, int i, const Rational& loop) {
  if (loop == 0) throw ContractError("Jones projection needs a nonzero loop value");
  return TLElement<Rational>(Diagram::epsilon(k, i), loop, Rational(1) / loop);
}

// ---- braids ----------------------------------------------------------------------

int BraidWord::writhe() const {
  int w = 0;
  for (int x : letters) w += x > 0 ? 1 : -1;
  return w;
}

BraidWord parse_braid(const std::string& text, int strands) {
  if (strands < 1) throw ContractError("a braid needs at least one strand");
  BraidWord b;
  b.strands = strands;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad braid letter '" + tok + "'", 0);
    }
    if (used != tok.size() || v == 0) throw ParseError("bad braid letter '" + tok + "'", 0);
    if (std::abs(v) >= strands) throw ContractError("braid letter " + tok + " out of range");
    b.letters.push_back(v);
  }
  return b;
}

std::string to_string(const BraidWord& b) {
  std::string s;
  for (int x : b.letters) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

LaurentPoly jones_loop() { return LaurentPoly::monomial(1) + LaurentPoly::monomial(-1); }

TLElement<LaurentPoly> braid_to_tl(const BraidWord& b) {
  const int k = b.strands;
  const LaurentPoly loop = jones_loop();
  auto r = TLElement<LaurentPoly>::identity(k, loop);
  const auto one = TLElement<LaurentPoly>::identity(k, loop);
  for (int x : b.letters) {
    if (x == 0 || std::abs(x) >= k) throw ContractError("braid letter out of range");
    TLElement<LaurentPoly> g(Diagram::epsilon(k, std::abs(x)), loop, LaurentPoly::monomial(x > 0 ? 1 : -1));
    r = r * (g - one);
  }
  return r;
}

LaurentPoly jones_polynomial(const BraidWord& b) {
  LaurentPoly v = braid_to_tl(b).closure_sum().divided_by(jones_loop());
  v = v * LaurentPoly::monomial(b.writhe());
  return b.strands % 2 ? v : -v;
}

LaurentPoly skein_residual(const BraidWord& b, size_t position, bool plus_form) {
  if (position >= b.letters.size()) throw ContractError("skein position out of range");
  BraidWord lp = b, lm = b, l0 = b;
  const int i = std::abs(b.letters[position]);
  lp.letters[position] = i;
  lm.letters[position] = -i;
  l0.letters.erase(l0.letters.begin() + static_cast<long>(position));
  LaurentPoly c = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1, plus_form ? 1 : -1);
  return LaurentPoly::monomial(-2) * jones_polynomial(lp) - LaurentPoly::monomial(2) * jones_polynomial(lm) -
         c * jones_polynomial(l0);
}

// ---- set partitions ---------------------------------------------------------------

int SetPartition::blocks() const { return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1; }

std::vector<std::vector<int>> SetPartition::block_lists() const {
  std::vector<std::vector<int>> out(blocks());
  for (int i = 0; i < size(); ++i) out[block[i]].push_back(i);
  return out;
}

SetPartition normalise(std::vector<int> labels) {
  std::map<int, int> rename;
  for (int& l : labels) {
    auto [it, fresh] = rename.emplace(l, static_cast<int>(rename.size()));
    l = it->second;
  }
  return SetPartition{std::move(labels)};
}

bool is_noncrossing(const SetPartition& p) {
  const int k = p.size();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (p.block[a] == p.block[b]) continue;
      for (int c = b + 1; c < k; ++c) {
        if (p.block[c] != p.block[a]) continue;
        for (int d = c + 1; d < k; ++d)
          if (p.block[d] == p.block[b]) return false;
      }
    }
  return true;
}

bool refines(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) throw ContractError("partitions of different sets");
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a.block[i] == a.block[j] && b.block[i] != b.block[j]) return false;
  return true;
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) throw ContractError("partitions of different sets");
  const int k = a.size();
  UnionFind uf(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (a.block[i] == a.block[j] || b.block[i] == b.block[j]) uf.unite(i, j);
  std::vector<int> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = uf.find(i);
  return normalise(std::move(labels));
}

SetPartition nc_join(const SetPartition& a, const SetPartition& b) {
  SetPartition j = join(a, b);
  const int k = j.size();
  bool changed = true;
  while (changed) {
    changed = false;
    UnionFind uf(k);
    for (int i = 0; i < k; ++i)
      for (int t = i + 1; t < k; ++t)
        if (j.block[i] == j.block[t]) uf.unite(i, t);
    for (int p = 0; p < k && !changed; ++p)
      for (int q = p + 1; q < k && !changed; ++q)
        for (int r = q + 1; r < k && !changed; ++r)
          for (int s = r + 1; s < k && !changed; ++s)
            if (j.block[p] == j.block[r] && j.block[q] == j.block[s] && j.block[p] != j.block[q])
              changed = uf.unite(p, q);
    if (changed) {
      std::vector<int> labels(k);
      for (int i = 0; i < k; ++i) labels[i] = uf.find(i);
      j = normalise(std::move(labels));
    }
  }
  return j;
}

std::vector<SetPartition> enumerate_partitions(int k) {
  if (k < 0) throw ContractError("negative set size");
  if (k > 10) throw RefusalError("set partition enumeration is capped at k = 10");
  std::vector<SetPartition> out;
  std::vector<int> rgs(k, 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == k) {
      out.push_back({rgs});
      return;
    }
    for (int b = 0; b <= used; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](const SetPartition& x, const SetPartition& y) {
    if (x.blocks() != y.blocks()) return x.blocks() > y.blocks();
    return x.block < y.block;
  });
  return out;
}

std::vector<SetPartition> enumerate_nc(int k) {
  auto all = enumerate_partitions(k);
  std::vector<SetPartition> out;
  for (auto& p : all)
    if (is_noncrossing(p)) out.push_back(std::move(p));
  return out;
}

Diagram fatten(const SetPartition& p) {
  if (!is_noncrossing(p)) throw ContractError("fattening needs a noncrossing partition");
  const int k = p.size();
  std::vector<int> mate(2 * k, -1);
  auto link = [&](int x, int y) { mate[x] = y, mate[y] = x; };
  for (const auto& b : p.block_lists()) {
    link(2 * b.front(), 2 * b.back() + 1);
    for (size_t j = 0; j + 1 < b.size(); ++j) link(2 * b[j] + 1, 2 * b[j + 1]);
  }
  return Diagram(2 * k, 0, std::move(mate));
}

SetPartition shrink(const Diagram& d) {
  if (d.down() != 0 || d.up() % 2) throw ContractError("shrinking needs a one-row pairing on an even count");
  const int k = d.up() / 2;
  UnionFind uf(k);
  for (auto [x, y] : d.pairs()) uf.unite(x / 2, y / 2);
  std::vector<int> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = uf.find(i);
  return normalise(std::move(labels));
}

// ---- Gram matrices --------------------------------------------------------------

std::string to_string(GramBasis b) {
  switch (b) {
    case GramBasis::NC2: return "nc2";
    case GramBasis::NC: return "nc";
    case GramBasis::P: return "p";
  }
  return "?";
}

GramBasis parse_gram_basis(const std::string& text) {
  for (auto b : {GramBasis::NC2, GramBasis::NC, GramBasis::P})
    if (to_string(b) == text) return b;
  throw ParseError("unknown Gram basis '" + text + "'", 0);
}

namespace {

int pairing_loops(const Diagram& a, const Diagram& b) {
  UnionFind uf(a.up());
  for (auto [x, y] : a.pairs()) uf.unite(x, y);
  for (auto [x, y] : b.pairs()) uf.unite(x, y);
  return uf.components();
}

}  // namespace

MatrixXb gram_matrix(GramBasis basis, int k, const BigInt& n) {
  if (k < 0) throw ContractError("negative point count");
  switch (basis) {
    case GramBasis::NC2: {
      if (k > 12) throw RefusalError("NC_2 Gram matrices are capped at 12 points");
      auto d = enumerate_nc2(k, 0);
      MatrixXb g(d.size(), d.size());
      for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = 0; j < d.size(); ++j) g(i, j) = ipow(n, pairing_loops(d[i], d[j]));
      return g;
    }
    case GramBasis::NC:
    case GramBasis::P: {
      const bool nc = basis == GramBasis::NC;
      if (k > (nc ? 7 : 6)) throw RefusalError("partition Gram matrices are capped (NC: k <= 7, P: k <= 6)");
      auto p = nc ? enumerate_nc(k) : enumerate_partitions(k);
      MatrixXb g(p.size(), p.size());
      for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p.size(); ++j)
          g(i, j) = ipow(n, join(p[i], p[j]).blocks());
      return g;
    }
  }
  throw ContractError("unknown basis");
}

MatrixXq mobius_matrix(int k) {
  if (k > 6) throw RefusalError("Mobius matrices are capped at k = 6");
  auto p = enumerate_partitions(k);
  MatrixXq a(p.size(), p.size());
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j) a(i, j) = refines(p[i], p[j]) ? 1 : 0;
  return inverse_exact(a);
}

BigInt lindstrom_det(int k, const BigInt& n) {
  BigInt r = 1;
  for (const auto& p : enumerate_partitions(k)) r *= falling_factorial(n, p.blocks());
  return r;
}

Polynomial<BigInt> chebyshev_p(int r) {
  if (r < 0) throw ContractError("negative Chebyshev index");
  Polynomial<BigInt> prev = Polynomial<BigInt>::constant(1), cur = Polynomial<BigInt>::x();
  if (r == 0) return prev;
  for (int i = 1; i < r; ++i) {
    auto next = Polynomial<BigInt>::x() * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BigInt meander_exponent(int k, int r) {
  auto f = [k](int rr) { return binomial(2 * k, k - rr) - binomial(2 * k, k - rr - 1); };
  return f(r) - f(r + 1);
}

namespace {

LaurentPoly to_laurent(const Polynomial<BigInt>& p) {
  LaurentPoly l;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) l += LaurentPoly::monomial(i, Rational(p.coeff(i)));
  return l;
}

}  // namespace

BigInt meander_det(int points, const BigInt& n) {
  if (points < 0) throw ContractError("negative point count");
  if (points % 2) return 1;
  const int pairs = points / 2;
  BigInt r = 1;
  for (int q = 1; q <= pairs; ++q) {
    BigInt d = meander_exponent(pairs, q);
    if (d < 0) throw ContractError("negative meander exponent");
    r *= ipow(chebyshev_p(q)(n), d.convert_to<int>());
  }
  return r;
}

BigInt nc_gram_det_formula(int k, const BigInt& n, bool all_partitions) {
  if (k < 1) throw ContractError("NC Gram formula needs k >= 1");
  long a = 0;
  for (const auto& p : all_partitions ? enumerate_partitions(k) : enumerate_nc(k)) a += 2 * p.blocks() - k;
  // evaluate as a Laurent polynomial in X = sqrt(N), then substitute X^2 = N
  LaurentPoly x = LaurentPoly::monomial(static_cast<int>(a));
  for (int r = 1; r <= k; ++r) x = x * to_laurent(chebyshev_p(r)).pow(meander_exponent(k, r).convert_to<int>());
  Rational v = 0;
  for (const auto& [pw, c] : x.terms()) {
    if (pw % 2) throw ContractError("formula value is not rational at integer N");
    v += c * rpow(Rational(n), pw / 2);
  }
  if (denominator(v) != 1) throw ContractError("formula value is not an integer");
  return numerator(v);
}

bool fattening_gram_relation(int k, const BigInt& n, bool use_nc_join) {
  if (k < 1 || k > 7) throw RefusalError("fattening relation is checked for 1 <= k <= 7");
  if (n == 0) throw ContractError("relation needs n != 0");
  auto nc = enumerate_nc(k);
  const Rational nq(n);
  for (const auto& a : nc)
    for (const auto& b : nc) {
      Rational lhs = rpow(nq, pairing_loops(fatten(a), fatten(b)));
      int jb = (use_nc_join ? nc_join(a, b) : join(a, b)).blocks();
      Rational rhs = rpow(nq, k) * rpow(nq, 2 * jb) / (rpow(nq, a.blocks()) * rpow(nq, b.blocks()));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace gsym
