#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsym/graph.hpp"
#include "gsym/types.hpp"

namespace gsym {

using PruferSeq = std::vector<int>;

bool is_tree(const Graph& g);

/// Repeatedly removes the smallest leaf and records its neighbour.
PruferSeq prufer_encode(const Graph& tree);
/// Inverse of prufer_encode; every sequence with entries in [0,n) decodes.
Graph prufer_decode(const PruferSeq& seq, int n);

/// n^{n-2}, with the value 1 at n = 1, 2.
BigInt count_labeled_trees(int n);
/// (n-2)! / prod (v_i - 1)! for a valence vector with sum(v_i - 1) = n - 2.
BigInt count_with_valences(const std::vector<int>& valences);

enum class SpanningMethod { Cofactor, Spectral, Circulant };
std::string to_string(SpanningMethod m);
SpanningMethod parse_spanning_method(const std::string& text);

/// Signed cofactor (-1)^{i+j} det L^{(i,j)}, exact.
BigInt laplacian_cofactor(const Graph& g, int i = 0, int j = 0);
BigInt spanning_tree_count(const Graph& g);
double spanning_tree_count_spectral(const Graph& g);
/// Needs a circulant adjacency matrix under the identity labelling.
double spanning_tree_count_circulant(const Graph& g);
struct SpanningCount {
  SpanningMethod method = SpanningMethod::Cofactor;
  std::optional<BigInt> exact;  // cofactor only
  double value = 0;
};
SpanningCount spanning_tree_count(const Graph& g, SpanningMethod method);

/// Deletion-contraction oracle on the multigraph; refuses above 24 edges.
BigInt spanning_tree_count_oracle(const Graph& g);

/// Streams every labelled tree on n <= 7 vertices to `sink`.
void enumerate_labeled_trees(int n, const std::function<void(const Graph&)>& sink);

}  // namespace gsym
