// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <iostream>

#include <CLI11.hpp>

#include "gsym/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  gsym::acceptance::Options opt;
  std::vector<std::string> inject;
  bool json = false;
  app.add_option("--filter", opt.filter, "criterion ids or groups");
  app.add_option("--seed", opt.seed, "seed for randomized suites");
  app.add_option("--inject", inject, "fault to inject (corrupt-catalan)")->check(CLI::IsMember({"corrupt-catalan"}));
  app.add_flag("--json", json, "emit JSON");
  CLI11_PARSE(app, argc, argv);
  for (const auto& f : inject)
    if (f == "corrupt-catalan") opt.faults.corrupt_catalan = true;
  try {
    auto out = gsym::acceptance::run(opt);
    if (json)
      std::cout << gsym::acceptance::to_json(out, true).dump(2) << "\n";
    else
      std::cout << gsym::acceptance::to_text(out);
    int failed = 0;
    for (const auto& o : out) failed += !o.pass;
    if (!json) std::cout << out.size() - failed << "/" << out.size() << " criteria passed\n";
    return failed ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
