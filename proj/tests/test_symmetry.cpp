#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "gsym/exact.hpp"
#include "gsym/symmetry.hpp"

using namespace gsym;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int density_pct) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(rng() % 100) < density_pct) e.emplace_back(i, j);
  return Graph(n, e);
}

}  // namespace

TEST_CASE("perm basics") {
  Perm p({1, 2, 0}), q({1, 0, 2});
  CHECK((p * q).images() == std::vector<int>{2, 1, 0});
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.matrix()(1, 0) == 1);
  CHECK_THROWS_AS(Perm({0, 0}), ContractError);
}

TEST_CASE("schreier-sims orders") {
  for (int n = 2; n <= 11; ++n) {
    std::vector<int> cyc(n), tr(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n, tr[i] = i;
    std::swap(tr[0], tr[1]);
    CHECK(PermGroup(n, {Perm(cyc), Perm(tr)}).order() == factorial(n));
    CHECK(PermGroup(n, {Perm(cyc)}).order() == n);
  }
  CHECK(PermGroup(4, {}).order() == 1);
  PermGroup a4(4, {Perm({1, 2, 0, 3}), Perm({0, 2, 3, 1})});
  CHECK(a4.order() == 12);
  CHECK(a4.contains(Perm({1, 0, 3, 2})));
  CHECK_FALSE(a4.contains(Perm({1, 0, 2, 3})));
  auto el = a4.elements();
  CHECK(el.size() == 12);
  std::set<Perm> set(el.begin(), el.end());
  CHECK(set.size() == 12);
  for (const auto& x : el)
    for (const auto& y : el) CHECK(set.count(x * y.inverse()));
}

TEST_CASE("automorphism groups of named graphs") {
  CHECK(automorphism_group(cycle(5)).order() == 10);
  CHECK(automorphism_group(petersen()).order() == 120);
  CHECK(automorphism_group(build_family("cartesian:k3,k3")).order() == 72);
  CHECK(automorphism_group(complete(11)).order() == factorial(11));
  CHECK(automorphism_group(empty_graph(7)).order() == factorial(7));
  CHECK(automorphism_group(hypercube(4)).order() == 384);
  CHECK(automorphism_group(Graph(1)).order() == 1);
  for (const auto& name : named_corpus()) {
    CAPTURE(name);
    auto g = build_family(name);
    auto grp = automorphism_group(g);
    for (const auto& s : grp.generators()) CHECK(is_automorphism(g, s));
    CHECK(check_eigenspace_preservation(grp, g));
    CHECK(adjacency_constant_on_orbitals(g, grp));
    auto gc = automorphism_group(complement(g));
    CHECK(gc.order() == grp.order());
    for (const auto& s : gc.generators()) CHECK(grp.contains(s));
    if (g.order() <= 8) CHECK(grp.order() == automorphism_order_bruteforce(g));
  }
}

TEST_CASE("automorphism search against exhaustive filter") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto g = random_graph(rng, n, 15 + static_cast<int>(rng() % 70));
    CAPTURE(serialize_edge_list(g));
    auto grp = automorphism_group(g);
    CHECK(grp.order() == automorphism_order_bruteforce(g));
    if (n <= 6) {
      auto el = grp.elements();
      std::set<Perm> set(el.begin(), el.end());
      CHECK(set.size() == el.size());
      for (const auto& x : el) {
        CHECK(is_automorphism(g, x));
        for (const auto& y : el) CHECK(set.count(x * y));
      }
    }
  }
}

TEST_CASE("isomorphism") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    auto g = random_graph(rng, 9, 40);
    std::vector<int> p(9);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    auto h = relabel(g, p);
    auto iso = find_isomorphism(g, h);
    REQUIRE(iso);
    for (auto [i, j] : g.edges()) CHECK(h.has_edge((*iso)(i), (*iso)(j)));
  }
  CHECK_FALSE(are_isomorphic(cycle(6), copies(2, complete(3))));
  CHECK(are_isomorphic(build_family("chord:8,4"), build_family("chord:8,4")));
}

TEST_CASE("orbits and orbitals") {
  auto pg = automorphism_group(petersen());
  CHECK(orbitals(pg).count == 3);
  CHECK(is_transitive(pg));
  for (int n = 2; n <= 7; ++n) CHECK(is_doubly_transitive(automorphism_group(complete(n))));
  CHECK(is_transitive(automorphism_group(copies(2, complete(2)))));
  CHECK_FALSE(is_transitive(automorphism_group(segment(3))));
  PermGroup c4(4, {Perm({1, 2, 3, 0})});
  CHECK(adjacency_constant_on_orbitals(cycle(4), c4));
  PermGroup s3(3, {Perm({1, 2, 0}), Perm({1, 0, 2})});
  CHECK_FALSE(adjacency_constant_on_orbitals(segment(3), s3));
  PermGroup bad(5, {Perm({1, 0, 2, 3, 4})});
  CHECK_FALSE(check_eigenspace_preservation(bad, cycle(5)));
  CHECK(check_eigenspace_preservation(PermGroup(5, {}), cycle(5)));
  for (const auto& name : {"segment6", "copies:2,c4", "ade:E6", "petersen"}) {
    auto g = automorphism_group(build_family(name));
    auto orb = orbitals(g);
    auto pts = orbits(g);
    std::vector<int> where(g.degree());
    for (size_t k = 0; k < pts.size(); ++k)
      for (int v : pts[k]) where[v] = static_cast<int>(k);
    const int n = g.degree();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK((orb.class_of[i * n + i] == orb.class_of[j * n + j]) == (where[i] == where[j]));
  }
}

TEST_CASE("product theorems") {
  auto cart = verify_product_theorem(cycle(4), cycle(5), ProductKind::Cartesian);
  CHECK(cart.conditions_hold);
  CHECK(cart.order_product == 80);
  CHECK(cart.order_actual == 80);
  auto dir = verify_product_theorem(complete(3), complete(3), ProductKind::Direct);
  CHECK_FALSE(dir.conditions_hold);
  CHECK(dir.order_actual == 72);
  CHECK(dir.order_product == 36);
  auto lex = verify_product_theorem(complete(3), complete(2), ProductKind::Lexicographic);
  CHECK(lex.order_product == 72);
  CHECK(lex.order_actual == 720);
  CHECK_FALSE(lex.conditions_hold);
  auto lex2 = verify_product_theorem(cycle(5), empty_graph(2), ProductKind::Lexicographic);
  CHECK(lex2.conditions_hold);
  CHECK(lex2.equal);
  CHECK_FALSE(verify_product_theorem(segment(3), cycle(4), ProductKind::Cartesian).applicable);
}

TEST_CASE("classification table") {
  for (const auto& r : table_n_le_11()) {
    CAPTURE(r.row.graph);
    CHECK(r.match);
    CHECK(build_family(r.row.family).order() == r.row.order);
  }
}

TEST_CASE("characters") {
  auto st = character_stats(10, 5);
  CHECK(std::abs(st.derangement_prob.convert_to<double>() - std::exp(-1.0)) < 1e-3);
  CHECK(derangement_probability(1) == 0);
  for (int n = 1; n <= 12; ++n) {
    auto s = character_stats(n, n);
    for (int k = 1; k <= n; ++k) CHECK(s.fixed_point_moments[k - 1] == Rational(bell(k)));
  }
  auto s6 = character_stats(6, 4);
  std::vector<int> b{1, 2, 5, 15};
  for (int k = 0; k < 4; ++k) CHECK(s6.fixed_point_moments[k] == b[k]);

  for (int n = 3; n <= 12; ++n)
    for (int j = 0; j < n; ++j) {
      auto ce = character_eigenvector(cycle(n), j);
      CHECK(ce.residual < 1e-9);
      CHECK(ce.eigenvalue.real() == doctest::Approx(2 * std::cos(2 * std::numbers::pi * j / n)));
    }
  auto k0 = character_eigenvector(complete(5), 0);
  CHECK(k0.eigenvalue.real() == doctest::Approx(4));
  CHECK(character_eigenvector(complete(5), 2).eigenvalue.real() == doctest::Approx(-1));
  CHECK_THROWS_AS(character_eigenvector(petersen(), 1), ContractError);
}

TEST_CASE("partial permutations") {
  std::vector<int> expect{1, 2, 7, 34, 209};
  for (int n = 0; n <= 4; ++n) {
    CHECK(count_partial_perms(n) == expect[n]);
    CHECK(BigInt(partial_automorphisms(MatrixXi::Zero(n, n)).size()) == count_partial_perms(n));
  }
  auto k = cyclic_component_counts(6);
  BigInt total = 0;
  for (auto& x : k) total += x;
  CHECK(total == 64);
  CHECK(k[0] == 1);
  CHECK(k[3] == 2);
  CHECK_THROWS_AS(partial_automorphisms(MatrixXi::Zero(7, 7)), RefusalError);
}
