#include "doctest.h"

#include <random>

#include "gsym/exact.hpp"
#include "gsym/quantum.hpp"
#include "gsym/symmetry.hpp"

using namespace gsym;

TEST_CASE("circulant data") {
  for (int n = 5; n <= 12; ++n) {
    auto c = circulant_data(cycle(n));
    REQUIRE(c);
    CHECK(c->s == std::vector<int>{1, n - 1});
    CHECK(c->k() == 2);
    auto k = circulant_data(complete(n));
    REQUIRE(k);
    CHECK(k->k() == euler_phi(n));
    CHECK(static_cast<int>(k->s.size()) == n - 1);
  }
  CHECK_FALSE(circulant_data(petersen()));
  auto lab = find_circulant_labelling(prism(cycle(5)));
  REQUIRE(lab);
  CHECK(circulant_data(relabel(prism(cycle(5)), *lab)));
  CHECK_FALSE(find_circulant_labelling(petersen()));
}

TEST_CASE("two maximality") {
  CHECK(two_maximal({1, 6}, 7));
  CHECK(two_maximal({1, 4}, 5));
  CHECK_FALSE(two_maximal({1, 2, 3, 4}, 5));
  CHECK_THROWS_AS(two_maximal({1}, 9), ContractError);
  for (int p : {5, 7, 11, 13, 17, 19, 23}) {
    for (int k = 2; k < p; k += 2) {
      if ((p - 1) % k) continue;
      // subgroup of order k in the cyclic group Z_p^*
      int gen = 0;
      for (int g = 2; g < p && !gen; ++g) {
        int x = 1, ord = 0;
        do x = x * g % p, ++ord;
        while (x != 1);
        if (ord == p - 1) gen = g;
      }
      int h = 1;
      for (int i = 0; i < (p - 1) / k; ++i) h = h * gen % p;
      std::vector<int> e;
      int x = 1;
      for (int i = 0; i < k; ++i) e.push_back(x), x = x * h % p;
      std::sort(e.begin(), e.end());
      if (two_maximal(e, p)) {
        CHECK(std::find(e.begin(), e.end(), 2) == e.end());
        CHECK(std::find(e.begin(), e.end(), 3) == e.end());
      }
    }
  }
}

TEST_CASE("circulant certificates") {
  for (int p : {5, 7, 11, 13}) {
    auto f = no_quantum_cert_circulant(cycle(p));
    CHECK(f.verdict == Verdict::NoQuantum);
    REQUIRE(f.certificate);
    CHECK(f.certificate->two_maximal);
    CHECK(f.certificate->k == 2);
    CHECK(f.certificate->bound_holds == (p > 6));
  }
  CHECK(no_quantum_cert_circulant(complete(5)).verdict == Verdict::Unknown);
  auto c11 = no_quantum_cert_circulant(build_family("chord:11,2"));
  REQUIRE(c11.certificate);
  CHECK(c11.certificate->k == 2);
  CHECK(c11.verdict == Verdict::NoQuantum);
  CHECK(no_quantum_cert_circulant(petersen()).verdict == Verdict::Unknown);
}

TEST_CASE("quantum flags on the table") {
  for (const auto& row : symmetry_table_rows()) {
    CAPTURE(row.graph);
    auto g = build_family(row.family);
    auto f = quantum_flag(g);
    CHECK(f.verdict == (row.quantum ? Verdict::HasQuantum : Verdict::NoQuantum));
    CHECK(quantum_flag(complement(g)).verdict == f.verdict);
  }
  CHECK(quantum_flag(copies(2, complete(2))).rule == "isomorphic-components");
  CHECK(quantum_flag(cycle(5)).verdict == Verdict::NoQuantum);
  CHECK(quantum_flag(hypercube(3)).rule == "hypercube");
  CHECK(quantum_flag(segment(5)).verdict == Verdict::Unknown);
  CHECK(to_json(quantum_flag(cycle(7)))["verdict"] == "NoQuantum");
}

TEST_CASE("flag complement consistency") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng() % 8);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) e.emplace_back(i, j);
    Graph g(n, e);
    auto a = quantum_flag(g), b = quantum_flag(complement(g));
    if (a.verdict != Verdict::Unknown || b.verdict != Verdict::Unknown) CHECK(a.verdict == b.verdict);
  }
}
