#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gsym::acceptance {

/// Deliberate corruptions used to prove that a criterion can fail.
struct Faults {
  bool corrupt_catalan = false;
};

struct Options {
  /// Criterion ids ("A5") or groups ("trees"); empty runs everything.
  std::vector<std::string> filter;
  std::uint64_t seed = 1;
  Faults faults;
};

struct Criterion {
  std::string id;
  std::string group;
  std::string title;
};

struct Outcome {
  Criterion criterion;
  bool pass = false;
  std::string detail;
  double millis = 0;
};

const std::vector<Criterion>& criteria();
bool selected(const Criterion& c, const std::vector<std::string>& filter);
std::vector<Outcome> run(const Options& options);

/// "PASS A1 ..." / "FAIL A1 ..." lines.
std::string to_text(const std::vector<Outcome>& outcomes);
nlohmann::json to_json(const std::vector<Outcome>& outcomes, bool timings);

}  // namespace gsym::acceptance
