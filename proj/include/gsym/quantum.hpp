#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsym/graph.hpp"

namespace gsym {

struct CirculantData {
  int n = 0;
  std::vector<int> s;  // connection set, sorted
  std::vector<int> e;  // multipliers u in Z_n^* with uS = S, sorted
  int k() const { return static_cast<int>(e.size()); }
};

/// Present iff g is circulant under its own labelling.
std::optional<CirculantData> circulant_data(const Graph& g);
/// Relabelling turning g into a circulant; identity first, then n-cycle automorphisms for n <= 11.
std::optional<std::vector<int>> find_circulant_labelling(const Graph& g);

/// a - b = 2(c - d) over E forces a = +-b; exhaustive over E^4.
bool two_maximal(const std::vector<int>& e, int p);

enum class Verdict { HasQuantum, NoQuantum, Unknown };
std::string to_string(Verdict v);

struct CirculantCertificate {
  int p = 0;
  std::vector<int> s, e;
  int k = 0;
  bool two_maximal = false;
  bool two_three_excluded = false;  // secondary check: 2, 3 not in E
  bool bound_holds = false;         // p > 6^{phi(k)}
  std::vector<int> labelling;       // vertex v sits at position labelling[v]
};

struct QFlag {
  Verdict verdict = Verdict::Unknown;
  std::string rule;
  std::string reason;
  std::optional<CirculantCertificate> certificate;
};

QFlag no_quantum_cert_circulant(const Graph& g);
QFlag quantum_flag(const Graph& g);

nlohmann::json to_json(const QFlag& f);

}  // namespace gsym
