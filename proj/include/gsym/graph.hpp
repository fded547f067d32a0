#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsym/types.hpp"

namespace gsym {

using Edge = std::pair<int, int>;

/// Finite simple graph on vertices 0..n-1 with an optional distinguished root.
///
/// Edges are stored normalized (i < j) and sorted, so two graphs compare equal
/// exactly when they have the same labelled edge set and root.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<Edge> edges = {}, std::optional<int> root = std::nullopt);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<int> root() const { return root_; }

  Graph with_root(std::optional<int> root) const;
  bool has_edge(int i, int j) const;
  std::vector<std::vector<int>> neighbours() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::optional<int> root_;
};

/// 0-1 symmetric adjacency matrix with zero diagonal.
MatrixXi adjacency(const Graph& g);
Eigen::MatrixXd adjacency_real(const Graph& g);

/// Rebuilds a graph from a symmetric 0-1 matrix with zero diagonal.
Graph from_adjacency(const MatrixXi& d);

// Named families. Labelling conventions:
//   complete / cycle: 0..N-1, cycle edges i ~ i+1 mod N
//   segment: path 0-1-...-(N-1)
//   hypercube: bit masks, adjacent when differing in one bit
//   kneser: s-subsets of {0..n-1} in lexicographic order, adjacent when disjoint
//   cycle_with_chords(N,k): circulant with connection set {±1, ±k}
Graph complete(int n);
Graph empty_graph(int n);
Graph cycle(int n);
Graph segment(int n);
Graph hypercube(int dim);
Graph kneser(int n, int s);
Graph petersen();
Graph cycle_with_chords(int n, int k);
/// Cycle with all diameters added (n even).
Graph wheel(int n);
Graph prism(const Graph& g);
/// Circulant graph with connection set `s` (must satisfy s = -s mod n, 0 not in s).
Graph circulant(int n, const std::vector<int>& s);

enum class AdeTag { A, At, D, Dt, E6, E7, E8, Et6, Et7, Et8 };

/// ADE Dynkin-type graphs with the distinguished vertex as vertex 0 and root.
/// `size` is the subscript: A_n and D_n have n vertices, At_{2n} is the cycle on
/// 2n vertices, Dt_n has n+1 vertices; the E tags ignore `size`.
Graph ade(AdeTag tag, int size = 0);
std::string to_string(AdeTag tag);
AdeTag parse_ade_tag(const std::string& text);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph copies(int k, const Graph& g);

enum class ProductKind { Direct, Cartesian, Lexicographic };

/// Vertex (i, a) of the product is indexed i * h.order() + a.
Graph product(const Graph& g, const Graph& h, ProductKind kind);
std::string to_string(ProductKind kind);
ProductKind parse_product_kind(const std::string& text);

/// Relabels vertices: vertex v of `g` becomes `perm[v]`.
Graph relabel(const Graph& g, const std::vector<int>& perm);

struct BasicStats {
  std::vector<int> valences;
  bool is_regular = true;
  int components = 0;
  std::vector<int> component_of;
};

BasicStats basic_stats(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// ---- family descriptors --------------------------------------------------

enum class FamilyKind {
  Complete, Empty, Cycle, Segment, Hypercube, Prism, Petersen, Kneser, Copies, CycleWithChords, Ade,
  Product
};

/// Parameterized description of a named graph; `build` turns it into a Graph.
struct GraphFamily {
  FamilyKind kind = FamilyKind::Complete;
  int a = 0;
  int b = 0;
  AdeTag tag = AdeTag::A;
  ProductKind product_kind = ProductKind::Direct;
  std::vector<GraphFamily> inner;  // prism / copies / product operands
};

Graph build(const GraphFamily& family);

/// Parses the shell grammar: k4, c7, segment5, cube3, petersen, kneser:5,2,
/// copies:2,k3, ade:At,8, chord:10,4, prism:c5. Also accepts empty<N> and
/// products direct:X,Y / cartesian:X,Y / lex:X,Y.
GraphFamily parse_family(const std::string& text);
Graph build_family(const std::string& text);

/// Family strings of the named test corpus, in a fixed order.
const std::vector<std::string>& named_corpus();

/// Erdos-Renyi G(n, p), each pair drawn in lexicographic order.
Graph random_graph(std::mt19937_64& rng, int n, double p);

// ---- text and JSON I/O ---------------------------------------------------

/// Edge-list format: "N M" header, then M lines "i j"; '#' lines are comments.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace gsym
