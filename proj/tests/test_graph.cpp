#include "doctest.h"

#include <random>

#include "gsym/graph.hpp"

using namespace gsym;

TEST_CASE("named families") {
  auto k4 = complete(4);
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  auto s = basic_stats(k4);
  CHECK(s.is_regular);
  CHECK(s.valences[0] == 3);

  auto p = kneser(5, 2);
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  CHECK(basic_stats(p).is_regular);
  CHECK(basic_stats(p).valences[0] == 3);
  CHECK(basic_stats(p).components == 1);

  auto at8 = ade(AdeTag::At, 8);
  CHECK(at8.root() == 0);
  CHECK(at8.with_root(std::nullopt) == cycle(8));

  CHECK(kneser(6, 1) == complete(6));
  CHECK_THROWS_AS(kneser(3, 4), ContractError);
  CHECK_THROWS_AS(ade(AdeTag::A, 1), ContractError);
}

TEST_CASE("ADE shapes") {
  CHECK(ade(AdeTag::A, 5).size() == 4);
  auto d5 = ade(AdeTag::D, 5);
  CHECK(d5.order() == 5);
  CHECK(basic_stats(d5).valences[2] == 3);
  auto dt6 = ade(AdeTag::Dt, 6);
  CHECK(dt6.order() == 7);
  CHECK(dt6.size() == 6);
  for (auto t : {AdeTag::E6, AdeTag::E7, AdeTag::E8, AdeTag::Et6, AdeTag::Et7, AdeTag::Et8}) {
    auto g = ade(t);
    CHECK(g.size() == g.order() - 1);
    CHECK(is_connected(g));
    auto v = basic_stats(g).valences;
    CHECK(std::count(v.begin(), v.end(), 3) == 1);
  }
  CHECK(ade(AdeTag::E8).order() == 8);
  CHECK(ade(AdeTag::Et8).order() == 9);
}

TEST_CASE("adjacency matrices") {
  MatrixXi tri(3, 3);
  tri << 0, 1, 1, 1, 0, 1, 1, 1, 0;
  CHECK(adjacency(complete(3)) == tri);
  CHECK(adjacency(empty_graph(3)) == MatrixXi::Zero(3, 3));
  Eigen::RowVectorXi row(6);
  row << 0, 1, 0, 0, 0, 1;
  CHECK(adjacency(cycle(6)).row(0) == row);
  CHECK(from_adjacency(adjacency(petersen())) == petersen());
}

TEST_CASE("complement") {
  CHECK(complement(complete(5)) == empty_graph(5));
  auto pr = complement(copies(2, complete(3)));
  CHECK(pr.order() == 6);
  CHECK(basic_stats(pr).is_regular);
  CHECK(basic_stats(pr).valences[0] == 3);
  auto c5c = complement(cycle(5));
  CHECK(c5c.size() == 5);
  CHECK(basic_stats(c5c).is_regular);
  CHECK(is_connected(c5c));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    auto g = random_graph(rng, 1 + t % 12, 0.4);
    CHECK(complement(complement(g)) == g);
    MatrixXi sum = adjacency(g) + adjacency(complement(g));
    MatrixXi jmi = MatrixXi::Ones(g.order(), g.order()) - MatrixXi::Identity(g.order(), g.order());
    CHECK(sum == jmi);
  }
}

TEST_CASE("unions and copies") {
  auto u = disjoint_union(complete(3), cycle(4));
  MatrixXi expected = MatrixXi::Zero(7, 7);
  expected.topLeftCorner(3, 3) = adjacency(complete(3));
  expected.bottomRightCorner(4, 4) = adjacency(cycle(4));
  CHECK(adjacency(u) == expected);
  CHECK(copies(2, complete(2)).order() == 4);
  CHECK(copies(2, complete(2)).size() == 2);
  CHECK(component_count(copies(5, complete(2))) == 5);
  CHECK(component_count(copies(3, complete(2))) == 3);
}

namespace {

MatrixXi kron(const MatrixXi& a, const MatrixXi& b) {
  MatrixXi r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

}  // namespace

TEST_CASE("products follow the tensor identities") {
  auto t = product(complete(3), complete(3), ProductKind::Direct);
  CHECK(t.order() == 9);
  CHECK(basic_stats(t).is_regular);
  CHECK(basic_stats(t).valences[0] == 4);
  auto pr = product(complete(2), complete(3), ProductKind::Cartesian);
  CHECK(pr.order() == 6);
  CHECK(basic_stats(pr).valences[0] == 3);
  CHECK(product(cycle(5), complete(1), ProductKind::Lexicographic) == cycle(5));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_graph(rng, 2 + trial % 4, 0.5);
    auto h = random_graph(rng, 1 + trial % 3, 0.5);
    MatrixXi dg = adjacency(g), dh = adjacency(h);
    MatrixXi ig = MatrixXi::Identity(g.order(), g.order()), ih = MatrixXi::Identity(h.order(), h.order());
    MatrixXi jg = MatrixXi::Ones(g.order(), g.order());
    CHECK(adjacency(product(g, h, ProductKind::Direct)) == kron(dg, dh));
    CHECK(adjacency(product(g, h, ProductKind::Cartesian)) == kron(dg, ih) + kron(ig, dh));
    CHECK(adjacency(product(g, h, ProductKind::Lexicographic)) == kron(dg, ih) + kron(jg, dh));
  }
}

TEST_CASE("family grammar") {
  CHECK(build_family("k4") == complete(4));
  CHECK(build_family("c7") == cycle(7));
  CHECK(build_family("segment5") == segment(5));
  CHECK(build_family("cube3") == hypercube(3));
  CHECK(build_family("petersen") == petersen());
  CHECK(build_family("kneser:5,2") == petersen());
  CHECK(build_family("copies:2,k3") == copies(2, complete(3)));
  CHECK(build_family("ade:At,8") == ade(AdeTag::At, 8));
  CHECK(build_family("ade:E7") == ade(AdeTag::E7));
  CHECK(build_family("chord:10,4") == cycle_with_chords(10, 4));
  CHECK(build_family("prism:c5") == prism(cycle(5)));
  CHECK(build_family("direct:k3,k3") == product(complete(3), complete(3), ProductKind::Direct));
  CHECK(build_family("cartesian:kneser:5,2,k2") == prism(petersen()));
  CHECK(build_family("copies:2,kneser:5,2").order() == 20);
  CHECK_THROWS_AS(parse_family("zz9"), ParseError);
  CHECK_THROWS_AS(parse_family("kneser:5"), ParseError);
}

TEST_CASE("edge-list parsing") {
  CHECK(parse_edge_list("3 3\n0 1\n1 2\n0 2") == complete(3));
  CHECK(parse_edge_list("2 0") == empty_graph(2));
  CHECK(parse_edge_list("# comment\n3 1\n\n# x\n0 2\n") == Graph(3, {{0, 2}}));

  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("3 1\n0 3") == 2);
  CHECK(line_of("3 2\n0 1\n1 0") == 3);
  CHECK(line_of("3 1\n1 1") == 2);
  CHECK(line_of("3 1\n0 x") == 2);
  CHECK(line_of("3 2\n0 1") > 0);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto g = random_graph(rng, t % 15, 0.3);
    CHECK(parse_edge_list(serialize_edge_list(g)) == g);
    CHECK(graph_from_json(to_json(g)) == g);
  }
  auto rooted = ade(AdeTag::E6);
  CHECK(graph_from_json(to_json(rooted)) == rooted);
}

TEST_CASE("basic stats") {
  // snowflake: centre with four arms, each arm ending in three leaves
  std::vector<Edge> e;
  int next = 5;
  for (int a = 1; a <= 4; ++a) {
    e.emplace_back(0, a);
    for (int l = 0; l < 3; ++l) e.emplace_back(a, next++);
  }
  auto flake = Graph(next, e);
  auto s = basic_stats(flake);
  CHECK_FALSE(s.is_regular);
  for (int v : s.valences) CHECK((v == 1 || v == 4));
  CHECK(is_bipartite(flake));
  CHECK_FALSE(is_bipartite(complete(3)));
}
