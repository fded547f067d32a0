#include "doctest.h"

#include <chrono>
#include <cmath>
#include <random>
#include <set>

#include "gsym/exact.hpp"
#include "gsym/trees.hpp"

using namespace gsym;

namespace {

Graph sample_tree() {
  // labels 1..6 shifted down by one
  return Graph(6, {{5, 4}, {4, 3}, {3, 0}, {3, 1}, {3, 2}});
}

}  // namespace

TEST_CASE("prufer examples") {
  CHECK(prufer_encode(sample_tree()) == PruferSeq{3, 3, 3, 4});
  CHECK(prufer_decode({3, 3, 3, 4}, 6) == sample_tree());
  CHECK(prufer_encode(segment(3)) == PruferSeq{1});
  Graph star(5, {{2, 0}, {2, 1}, {2, 3}, {2, 4}});
  CHECK(prufer_encode(star) == PruferSeq{2, 2, 2});
  CHECK(prufer_decode({}, 2) == complete(2));
  CHECK_THROWS_AS(prufer_encode(cycle(4)), ContractError);
  CHECK_THROWS_AS(prufer_decode({7}, 3), ContractError);
}

TEST_CASE("prufer round trip exhaustive") {
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> seq(n - 2, 0);
    long total = 0, bad = 0;
    while (true) {
      auto t = prufer_decode(seq, n);
      ++total;
      if (!is_tree(t) || prufer_encode(t) != seq) ++bad;
      auto nb = t.neighbours();
      for (int v = 0; v < n; ++v)
        if (std::count(seq.begin(), seq.end(), v) != static_cast<long>(nb[v].size()) - 1) ++bad;
      int i = n - 3;
      while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
      if (i < 0) break;
      ++seq[i];
    }
    CHECK(bad == 0);
    CHECK(BigInt(total) == count_labeled_trees(n));
    long listed = 0;
    enumerate_labeled_trees(n, [&](const Graph& t) {
      ++listed;
      if (prufer_decode(prufer_encode(t), n) != t) ++bad;
    });
    CHECK(bad == 0);
    CHECK(BigInt(listed) == count_labeled_trees(n));
  }
}

TEST_CASE("cayley and valence counts") {
  CHECK(count_labeled_trees(1) == 1);
  CHECK(count_labeled_trees(2) == 1);
  CHECK(count_labeled_trees(4) == 16);
  CHECK(count_labeled_trees(5) == 125);
  long listed = 0;
  enumerate_labeled_trees(6, [&](const Graph&) { ++listed; });
  CHECK(listed == 1296);
  for (int n = 2; n <= 7; ++n) {
    BigInt sum = 0;
    std::vector<int> v(n, 1);
    // valence vectors with sum(v_i - 1) = n - 2
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n) {
        if (left == 0) sum += count_with_valences(v);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        v[i] = e + 1;
        rec(i + 1, left - e);
      }
      v[i] = 1;
    };
    rec(0, n - 2);
    CHECK(sum == count_labeled_trees(n));
  }
  CHECK_THROWS_AS(count_with_valences({2, 2, 2}), ContractError);
}

TEST_CASE("spanning tree counts") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(spanning_tree_count(complete(n)) == count_labeled_trees(n));
    CHECK(spanning_tree_count_oracle(complete(n)) == count_labeled_trees(n));
  }
  for (int n = 3; n <= 12; ++n) {
    CHECK(spanning_tree_count(cycle(n)) == n);
    CHECK(spanning_tree_count_circulant(cycle(n)) == doctest::Approx(n));
  }
  CHECK(spanning_tree_count(petersen()) == 2000);
  CHECK(spanning_tree_count_oracle(petersen()) == 2000);
  CHECK(spanning_tree_count_oracle(complete(3)) == 3);
  CHECK(spanning_tree_count_spectral(petersen()) == doctest::Approx(2000).epsilon(1e-9));
  CHECK_THROWS_AS(spanning_tree_count(empty_graph(3)), ContractError);
  CHECK_THROWS_AS(spanning_tree_count_oracle(complete(8)), RefusalError);
  CHECK_THROWS_AS(spanning_tree_count_circulant(petersen()), ContractError);
  auto sc = spanning_tree_count(cycle(7), SpanningMethod::Circulant);
  CHECK_FALSE(sc.exact);
  CHECK(sc.value == doctest::Approx(7));
}

TEST_CASE("kirchhoff agreement on the named corpus") {
  for (const auto& name : named_corpus()) {
    auto g = build_family(name);
    if (!is_connected(g) || g.size() > 24) continue;
    CAPTURE(name);
    auto exact = spanning_tree_count(g);
    CHECK(spanning_tree_count_oracle(g) == exact);
    double ref = exact.convert_to<double>();
    CHECK(std::abs(spanning_tree_count_spectral(g) - ref) <= 1e-6 * ref);
  }
}

TEST_CASE("all signed cofactors agree") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 100) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) e.emplace_back(i, j);
    Graph g(n, e);
    if (!is_connected(g)) continue;
    ++checked;
    auto ref = spanning_tree_count(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(laplacian_cofactor(g, i, j) == ref);
    if (g.size() <= 24) CHECK(spanning_tree_count_oracle(g) == ref);
  }
}
