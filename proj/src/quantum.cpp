#include "gsym/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gsym/exact.hpp"
#include "gsym/spectral.hpp"
#include "gsym/symmetry.hpp"

namespace gsym {

std::optional<CirculantData> circulant_data(const Graph& g) {
  const int n = g.order();
  if (n < 1) return std::nullopt;
  auto gamma = circulant_symbol(adjacency_real(g));
  if (!gamma) return std::nullopt;
  CirculantData c;
  c.n = n;
  for (int i = 1; i < n; ++i)
    if ((*gamma)(i) != 0) c.s.push_back(i);
  for (int u = 1; u <= std::max(1, n - 1); ++u) {
    if (std::gcd(u, n) != 1) continue;
    std::vector<int> us;
    for (int x : c.s) us.push_back(static_cast<int>((static_cast<long>(u) * x) % n));
    std::sort(us.begin(), us.end());
    if (us == c.s) c.e.push_back(u % std::max(1, n));
  }
  return c;
}

std::optional<std::vector<int>> find_circulant_labelling(const Graph& g) {
  const int n = g.order();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  if (circulant_data(g)) return id;
  if (n > 11) return std::nullopt;
  auto grp = automorphism_group(g);
  if (grp.order() > kElementListCap) return std::nullopt;
  for (const auto& s : grp.elements()) {
    std::vector<int> label(n, -1);
    int x = 0;
    for (int k = 0; k < n; ++k, x = s(x)) {
      if (label[x] >= 0) break;
      label[x] = k;
    }
    if (std::find(label.begin(), label.end(), -1) != label.end()) continue;
    return label;
  }
  return std::nullopt;
}

bool two_maximal(const std::vector<int>& e, int p) {
  if (!is_prime(p)) throw ContractError("two_maximal needs a prime modulus");
  auto mod = [p](long v) { return static_cast<int>(((v % p) + p) % p); };
  for (int a : e)
    for (int b : e)
      for (int c : e)
        for (int d : e)
          if (mod(a - b) == mod(2L * (c - d)) && a != b && mod(a + b) != 0) return false;
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HasQuantum: return "HasQuantum";
    case Verdict::NoQuantum: return "NoQuantum";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

QFlag no_quantum_cert_circulant(const Graph& g) {
  QFlag f;
  f.rule = "circulant-certificate";
  auto label = find_circulant_labelling(g);
  if (!label) {
    f.reason = "no circulant labelling found";
    return f;
  }
  auto data = *circulant_data(relabel(g, *label));
  CirculantCertificate c;
  c.p = data.n;
  c.s = data.s;
  c.e = data.e;
  c.k = data.k();
  c.labelling = *label;
  if (c.p < 5 || !is_prime(c.p)) {
    f.reason = "vertex count is not a prime >= 5";
    f.certificate = c;
    return f;
  }
  c.two_maximal = two_maximal(c.e, c.p);
  c.two_three_excluded = std::find(c.e.begin(), c.e.end(), 2) == c.e.end() &&
                         std::find(c.e.begin(), c.e.end(), 3 % c.p) == c.e.end();
  c.bound_holds = std::log(static_cast<double>(c.p)) > euler_phi(c.k) * std::log(6.0);
  f.certificate = c;
  if (c.two_maximal) {
    f.verdict = Verdict::NoQuantum;
    f.reason = "circulant on a prime number of vertices with 2-maximal multiplier group";
  } else {
    f.reason = "multiplier group is not 2-maximal";
  }
  return f;
}

namespace {

bool is_complete_or_empty(const Graph& g) {
  const long n = g.order();
  return g.size() == 0 || g.size() == n * (n - 1) / 2;
}

QFlag decided(Verdict v, std::string rule, std::string reason) {
  QFlag f;
  f.verdict = v;
  f.rule = std::move(rule);
  f.reason = std::move(reason);
  return f;
}

std::vector<Graph> components(const Graph& g) {
  auto st = basic_stats(g);
  std::vector<Graph> out;
  for (int c = 0; c < st.components; ++c) {
    std::vector<int> local(g.order(), -1);
    int m = 0;
    for (int v = 0; v < g.order(); ++v)
      if (st.component_of[v] == c) local[v] = m++;
    std::vector<Edge> e;
    for (auto [i, j] : g.edges())
      if (st.component_of[i] == c) e.emplace_back(local[i], local[j]);
    out.emplace_back(m, std::move(e));
  }
  return out;
}

std::optional<QFlag> structural(const Graph& g) {
  const int n = g.order();
  if (n <= 3) return decided(Verdict::NoQuantum, "small-order", "S_N^+ = S_N for N <= 3");
  if (is_complete_or_empty(g)) return decided(Verdict::HasQuantum, "simplex", "complete or empty graph on N >= 4 vertices");

  auto comps = components(g);
  if (comps.size() >= 2) {
    bool same = std::all_of(comps.begin() + 1, comps.end(), [&](const Graph& c) { return are_isomorphic(c, comps[0]); });
    if (same && (comps.size() >= 4 || automorphism_group(comps[0]).order() > 1))
      return decided(Verdict::HasQuantum, "isomorphic-components",
                     std::to_string(comps.size()) + " isomorphic components with a nontrivial free wreath product");
  }
  if (n == 4 && are_isomorphic(g, cycle(4))) return decided(Verdict::HasQuantum, "square", "C_4");
  if ((n & (n - 1)) == 0) {
    int dim = 0;
    while ((1 << dim) < n) ++dim;
    if (dim >= 2 && are_isomorphic(g, hypercube(dim)))
      return decided(Verdict::HasQuantum, "hypercube", "hypercube of dimension " + std::to_string(dim));
  }
  if (comps.size() == 1 && basic_stats(g).is_regular && g.size() == n)
    return decided(Verdict::NoQuantum, "cycle", "cycle C_N with N != 4");
  if (n == 10 && are_isomorphic(g, petersen())) return decided(Verdict::NoQuantum, "petersen", "Petersen graph");
  if (n == 9 && are_isomorphic(g, product(complete(3), complete(3), ProductKind::Cartesian)))
    return decided(Verdict::NoQuantum, "torus", "K_3 x K_3");
  auto cert = no_quantum_cert_circulant(g);
  if (cert.verdict == Verdict::NoQuantum) return cert;
  return std::nullopt;
}

}  // namespace

QFlag quantum_flag(const Graph& g) {
  if (auto f = structural(g)) return *f;
  const Graph gc = complement(g);
  if (auto f = structural(gc)) {
    f->rule = "complement:" + f->rule;
    f->reason = "complement: " + f->reason;
    return *f;
  }
  if (g.order() <= 11) {
    for (const auto& row : symmetry_table_rows()) {
      if (row.order != g.order()) continue;
      Graph r = build_family(row.family);
      if (are_isomorphic(g, r) || are_isomorphic(gc, r))
        return decided(row.quantum ? Verdict::HasQuantum : Verdict::NoQuantum, "table",
                       "matches table row " + row.graph);
    }
  }
  QFlag f;
  f.rule = "none";
  f.reason = "no rule applies";
  return f;
}

nlohmann::json to_json(const QFlag& f) {
  nlohmann::json j{{"verdict", to_string(f.verdict)}, {"rule", f.rule}, {"reason", f.reason}};
  if (f.certificate) {
    const auto& c = *f.certificate;
    j["certificate"] = {{"p", c.p},
                        {"S", c.s},
                        {"E", c.e},
                        {"k", c.k},
                        {"two_maximal", c.two_maximal},
                        {"two_three_excluded", c.two_three_excluded},
                        {"bound_holds", c.bound_holds},
                        {"labelling", c.labelling}};
  }
  return j;
}

}  // namespace gsym
