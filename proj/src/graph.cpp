#include "gsym/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace gsym {

Graph::Graph(int n, std::vector<Edge> edges, std::optional<int> root) : n_(n), root_(root) {
  if (n < 0) throw ContractError("vertex count must be non-negative");
  if (n > kNumericCap) throw RefusalError("graph exceeds " + std::to_string(kNumericCap) + " vertices");
  if (root && (*root < 0 || *root >= n)) throw ContractError("root out of range");
  for (auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw ContractError("edge endpoint out of range");
    if (i == j) throw ContractError("self-loop");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ContractError("duplicate edge");
  edges_ = std::move(edges);
}

Graph Graph::with_root(std::optional<int> root) const { return Graph(n_, edges_, root); }

bool Graph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

std::vector<std::vector<int>> Graph::neighbours() const {
  std::vector<std::vector<int>> nb(n_);
  for (auto [i, j] : edges_) {
    nb[i].push_back(j);
    nb[j].push_back(i);
  }
  for (auto& v : nb) std::sort(v.begin(), v.end());
  return nb;
}

MatrixXi adjacency(const Graph& g) {
  MatrixXi d = MatrixXi::Zero(g.order(), g.order());
  for (auto [i, j] : g.edges()) d(i, j) = d(j, i) = 1;
  return d;
}

Eigen::MatrixXd adjacency_real(const Graph& g) { return adjacency(g).cast<double>(); }

Graph from_adjacency(const MatrixXi& d) {
  if (d.rows() != d.cols()) throw ContractError("adjacency matrix must be square");
  std::vector<Edge> e;
  for (int i = 0; i < d.rows(); ++i) {
    if (d(i, i) != 0) throw ContractError("adjacency matrix must have zero diagonal");
    for (int j = i + 1; j < d.cols(); ++j) {
      if (d(i, j) != d(j, i)) throw ContractError("adjacency matrix must be symmetric");
      if (d(i, j) == 1) e.emplace_back(i, j);
      else if (d(i, j) != 0) throw ContractError("adjacency entries must be 0 or 1");
    }
  }
  return Graph(static_cast<int>(d.rows()), std::move(e));
}

Graph complete(int n) {
  if (n < 1) throw ContractError("K(N) needs N >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph empty_graph(int n) {
  if (n < 0) throw ContractError("empty graph needs N >= 0");
  return Graph(n);
}

Graph cycle(int n) {
  if (n < 3) throw ContractError("C(N) needs N >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph segment(int n) {
  if (n < 1) throw ContractError("segment needs N >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph hypercube(int dim) {
  if (dim < 0 || dim > 12) throw ContractError("hypercube dimension must be in [0,12]");
  int n = 1 << dim;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (int w = v ^ (1 << b); v < w) e.emplace_back(v, w);
  return Graph(n, std::move(e));
}

Graph kneser(int n, int s) {
  if (n < 1 || s < 1 || s > n) throw ContractError("Kneser(n,s) needs 1 <= s <= n");
  // lexicographic s-subsets as bit masks
  std::vector<unsigned> subsets;
  std::vector<int> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    unsigned m = 0;
    for (int x : idx) m |= 1u << x;
    subsets.push_back(m);
    if (subsets.size() > static_cast<size_t>(kNumericCap))
      throw RefusalError("Kneser graph exceeds vertex cap");
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::vector<Edge> e;
  int v = static_cast<int>(subsets.size());
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if ((subsets[a] & subsets[b]) == 0) e.emplace_back(a, b);
  return Graph(v, std::move(e));
}

Graph petersen() { return kneser(5, 2); }

Graph circulant(int n, const std::vector<int>& s) {
  if (n < 1) throw ContractError("circulant needs N >= 1");
  std::set<int> conn;
  for (int x : s) {
    int r = ((x % n) + n) % n;
    if (r == 0) throw ContractError("connection set must not contain 0");
    conn.insert(r);
  }
  for (int r : conn)
    if (!conn.count(n - r)) throw ContractError("connection set must satisfy S = -S");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int r : conn)
      if (int j = (i + r) % n; i < j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph cycle_with_chords(int n, int k) {
  if (n < 3) throw ContractError("C(N,k) needs N >= 3");
  if (k < 1 || k >= n) throw ContractError("chord offset must be in [1,N)");
  return circulant(n, {1, -1, k, -k});
}

Graph wheel(int n) {
  if (n < 4 || n % 2) throw ContractError("wheel needs even N >= 4");
  return cycle_with_chords(n, n / 2);
}

Graph prism(const Graph& g) { return product(g, complete(2), ProductKind::Cartesian); }

Graph ade(AdeTag tag, int size) {
  std::vector<Edge> e;
  int n = 0;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) e.emplace_back(i, i + 1);
  };
  switch (tag) {
    case AdeTag::A:
      if (size < 2) throw ContractError("A_n needs n >= 2");
      n = size;
      chain(0, n - 1);
      break;
    case AdeTag::At:
      if (size < 4 || size % 2) throw ContractError("At_{2n} needs an even size >= 4");
      return cycle(size).with_root(0);
    case AdeTag::D:
      if (size < 3) throw ContractError("D_n needs n >= 3");
      n = size;
      chain(0, n - 3);
      e.emplace_back(n - 3, n - 2);
      e.emplace_back(n - 3, n - 1);
      break;
    case AdeTag::Dt:
      if (size < 4) throw ContractError("Dt_n needs n >= 4");
      n = size + 1;
      e.emplace_back(0, 2);
      e.emplace_back(1, 2);
      chain(2, n - 3);
      e.emplace_back(n - 3, n - 2);
      e.emplace_back(n - 3, n - 1);
      break;
    case AdeTag::E6:
    case AdeTag::E7:
    case AdeTag::E8: {
      n = tag == AdeTag::E6 ? 6 : tag == AdeTag::E7 ? 7 : 8;
      int branch = n - 4;
      chain(0, branch);
      e.emplace_back(branch, n - 3);
      e.emplace_back(branch, n - 2);
      e.emplace_back(n - 2, n - 1);
      break;
    }
    case AdeTag::Et6:
      n = 7;
      e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}};
      break;
    case AdeTag::Et7:
      n = 8;
      e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}};
      break;
    case AdeTag::Et8:
      n = 9;
      e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {7, 8}};
      break;
  }
  return Graph(n, std::move(e), 0);
}

std::string to_string(AdeTag tag) {
  switch (tag) {
    case AdeTag::A: return "A";
    case AdeTag::At: return "At";
    case AdeTag::D: return "D";
    case AdeTag::Dt: return "Dt";
    case AdeTag::E6: return "E6";
    case AdeTag::E7: return "E7";
    case AdeTag::E8: return "E8";
    case AdeTag::Et6: return "Et6";
    case AdeTag::Et7: return "Et7";
    case AdeTag::Et8: return "Et8";
  }
  return "?";
}

AdeTag parse_ade_tag(const std::string& text) {
  for (AdeTag t : {AdeTag::A, AdeTag::At, AdeTag::D, AdeTag::Dt, AdeTag::E6, AdeTag::E7, AdeTag::E8,
                   AdeTag::Et6, AdeTag::Et7, AdeTag::Et8})
    if (to_string(t) == text) return t;
  throw ParseError("unknown ADE tag '" + text + "'", 0);
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.has_edge(i, j)) e.emplace_back(i, j);
  return Graph(g.order(), std::move(e), g.root());
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  for (auto [i, j] : h.edges()) e.emplace_back(i + g.order(), j + g.order());
  return Graph(g.order() + h.order(), std::move(e));
}

Graph copies(int k, const Graph& g) {
  if (k < 1) throw ContractError("copies needs k >= 1");
  Graph out = g.with_root(std::nullopt);
  for (int c = 1; c < k; ++c) out = disjoint_union(out, g);
  return out;
}

Graph product(const Graph& g, const Graph& h, ProductKind kind) {
  const int m = h.order();
  const long long total = static_cast<long long>(g.order()) * m;
  if (total > kNumericCap) throw RefusalError("product exceeds vertex cap");
  MatrixXi dg = adjacency(g), dh = adjacency(h);
  std::vector<Edge> e;
  for (int i = 0; i < g.order(); ++i)
    for (int a = 0; a < m; ++a)
      for (int j = 0; j < g.order(); ++j)
        for (int b = 0; b < m; ++b) {
          int u = i * m + a, v = j * m + b;
          if (u >= v) continue;
          bool adj = false;
          switch (kind) {
            case ProductKind::Direct: adj = dg(i, j) && dh(a, b); break;
            case ProductKind::Cartesian: adj = (i == j && dh(a, b)) || (a == b && dg(i, j)); break;
            case ProductKind::Lexicographic: adj = dh(a, b) || (a == b && dg(i, j)); break;
          }
          if (adj) e.emplace_back(u, v);
        }
  return Graph(static_cast<int>(total), std::move(e));
}

std::string to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::Direct: return "direct";
    case ProductKind::Cartesian: return "cartesian";
    case ProductKind::Lexicographic: return "lex";
  }
  return "?";
}

ProductKind parse_product_kind(const std::string& text) {
  if (text == "direct") return ProductKind::Direct;
  if (text == "cartesian") return ProductKind::Cartesian;
  if (text == "lex" || text == "lexicographic") return ProductKind::Lexicographic;
  throw ParseError("unknown product kind '" + text + "'", 0);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw ContractError("relabel: size mismatch");
  std::vector<Edge> e;
  for (auto [i, j] : g.edges()) e.emplace_back(perm[i], perm[j]);
  std::optional<int> r;
  if (g.root()) r = perm[*g.root()];
  return Graph(g.order(), std::move(e), r);
}

BasicStats basic_stats(const Graph& g) {
  BasicStats s;
  const int n = g.order();
  s.valences.assign(n, 0);
  for (auto [i, j] : g.edges()) ++s.valences[i], ++s.valences[j];
  s.is_regular = std::adjacent_find(s.valences.begin(), s.valences.end(), std::not_equal_to<>()) ==
                 s.valences.end();
  s.component_of.assign(n, -1);
  auto nb = g.neighbours();
  for (int v = 0; v < n; ++v) {
    if (s.component_of[v] >= 0) continue;
    std::queue<int> q;
    q.push(v);
    s.component_of[v] = s.components;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : nb[u])
        if (s.component_of[w] < 0) s.component_of[w] = s.components, q.push(w);
    }
    ++s.components;
  }
  return s;
}

int component_count(const Graph& g) { return basic_stats(g).components; }
bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  auto nb = g.neighbours();
  for (int v = 0; v < g.order(); ++v) {
    if (side[v] >= 0) continue;
    side[v] = 0;
    std::queue<int> q;
    q.push(v);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : nb[u]) {
        if (side[w] < 0) side[w] = 1 - side[u], q.push(w);
        else if (side[w] == side[u]) return false;
      }
    }
  }
  return true;
}

Graph build(const GraphFamily& f) {
  switch (f.kind) {
    case FamilyKind::Complete: return complete(f.a);
    case FamilyKind::Empty: return empty_graph(f.a);
    case FamilyKind::Cycle: return cycle(f.a);
    case FamilyKind::Segment: return segment(f.a);
    case FamilyKind::Hypercube: return hypercube(f.a);
    case FamilyKind::Petersen: return petersen();
    case FamilyKind::Kneser: return kneser(f.a, f.b);
    case FamilyKind::CycleWithChords: return cycle_with_chords(f.a, f.b);
    case FamilyKind::Ade: return ade(f.tag, f.a);
    case FamilyKind::Prism:
      if (f.inner.size() != 1) throw ContractError("prism takes one operand");
      return prism(build(f.inner[0]));
    case FamilyKind::Copies:
      if (f.inner.size() != 1) throw ContractError("copies takes one operand");
      return copies(f.a, build(f.inner[0]));
    case FamilyKind::Product:
      if (f.inner.size() != 2) throw ContractError("product takes two operands");
      return product(build(f.inner[0]), build(f.inner[1]), f.product_kind);
  }
  throw ContractError("unknown family");
}

namespace {

int parse_int(const std::string& s, const std::string& ctx) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("expected integer in '" + ctx + "'", 0);
  if (s.size() > 6) throw ParseError("integer too large in '" + ctx + "'", 0);
  return std::stoi(s);
}

std::pair<std::string, std::string> split_first_comma(const std::string& s, const std::string& ctx) {
  auto p = s.find(',');
  if (p == std::string::npos) throw ParseError("expected ',' in '" + ctx + "'", 0);
  return {s.substr(0, p), s.substr(p + 1)};
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

GraphFamily parse_family(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  GraphFamily f;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon), rest = text.substr(colon + 1);
    if (head == "kneser" || head == "chord") {
      auto [a, b] = split_first_comma(rest, text);
      f.kind = head == "kneser" ? FamilyKind::Kneser : FamilyKind::CycleWithChords;
      f.a = parse_int(a, text);
      f.b = parse_int(b, text);
    } else if (head == "copies") {
      auto [a, b] = split_first_comma(rest, text);
      f.kind = FamilyKind::Copies;
      f.a = parse_int(a, text);
      f.inner.push_back(parse_family(b));
    } else if (head == "ade") {
      f.kind = FamilyKind::Ade;
      auto p = rest.find(',');
      f.tag = parse_ade_tag(rest.substr(0, p));
      if (p != std::string::npos) f.a = parse_int(rest.substr(p + 1), text);
    } else if (head == "prism") {
      f.kind = FamilyKind::Prism;
      f.inner.push_back(parse_family(rest));
    } else if (head == "direct" || head == "cartesian" || head == "lex") {
      f.kind = FamilyKind::Product;
      f.product_kind = parse_product_kind(head);
      // operands may contain commas themselves; take the first split that parses
      for (size_t p = rest.find(','); p != std::string::npos; p = rest.find(',', p + 1)) {
        try {
          auto l = parse_family(rest.substr(0, p));
          auto r = parse_family(rest.substr(p + 1));
          f.inner = {l, r};
          return f;
        } catch (const ParseError&) {
        }
      }
      throw ParseError("cannot split product operands in '" + text + "'", 0);
    } else {
      throw ParseError("unknown family '" + head + "'", 0);
    }
    return f;
  }
  if (text == "petersen") {
    f.kind = FamilyKind::Petersen;
    return f;
  }
  static const std::pair<const char*, FamilyKind> prefixes[] = {
      {"segment", FamilyKind::Segment}, {"cube", FamilyKind::Hypercube}, {"empty", FamilyKind::Empty},
      {"k", FamilyKind::Complete},      {"c", FamilyKind::Cycle}};
  for (auto [p, kind] : prefixes) {
    if (starts_with(text, p)) {
      f.kind = kind;
      f.a = parse_int(text.substr(std::string(p).size()), text);
      return f;
    }
  }
  throw ParseError("unknown family '" + text + "'", 0);
}

Graph build_family(const std::string& text) { return build(parse_family(text)); }

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long a, b;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra)) throw ParseError("malformed line '" + line + "'", lineno);
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError("negative header value", lineno);
      if (a > kNumericCap) throw RefusalError("graph exceeds vertex cap");
      n = static_cast<int>(a);
      m = static_cast<int>(b);
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError("vertex out of range in '" + line + "'", lineno);
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), lineno);
    Edge e{static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b))};
    if (!seen.insert(e).second) throw ParseError("duplicate edge '" + line + "'", lineno);
    if (static_cast<int>(edges.size()) == m) throw ParseError("more edges than declared", lineno);
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("missing 'N M' header", 0);
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                     lineno);
  return Graph(n, std::move(edges));
}

const std::vector<std::string>& named_corpus() {
  static const std::vector<std::string> corpus = [] {
    std::vector<std::string> c;
    for (int n = 2; n <= 8; ++n) c.push_back("k" + std::to_string(n));
    for (int n = 3; n <= 12; ++n) c.push_back("c" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) c.push_back("segment" + std::to_string(n));
    for (int d = 1; d <= 4; ++d) c.push_back("cube" + std::to_string(d));
    for (const char* s :
         {"empty4", "petersen", "kneser:5,2", "kneser:6,2", "copies:2,k3", "copies:2,c4", "copies:3,k2",
          "copies:2,c5", "chord:8,4", "chord:9,3", "chord:10,2", "chord:10,4", "chord:11,2", "chord:11,3",
          "prism:c4", "prism:c5", "prism:k4", "cartesian:k3,k3", "direct:k3,k3", "cartesian:c4,c5",
          "lex:c5,k2", "ade:A,6", "ade:D,6", "ade:At,8", "ade:Dt,6", "ade:E6", "ade:E7", "ade:E8",
          "ade:Et6", "ade:Et7", "ade:Et8"})
      c.emplace_back(s);
    return c;
  }();
  return corpus;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
  return out.str();
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
  j["root"] = g.root() ? nlohmann::json(*g.root()) : nlohmann::json(nullptr);
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<Edge> e;
    for (const auto& p : j.at("edges")) e.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    std::optional<int> r;
    if (j.contains("root") && !j["root"].is_null()) r = j["root"].get<int>();
    return Graph(n, std::move(e), r);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad graph JSON: ") + ex.what(), 0);
  }
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

}  // namespace gsym
