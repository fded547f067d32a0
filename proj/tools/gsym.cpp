#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gsym/acceptance.hpp"
#include "gsym/exact.hpp"
#include "gsym/graph.hpp"
#include "gsym/measures.hpp"
#include "gsym/quantum.hpp"
#include "gsym/spectral.hpp"
#include "gsym/symmetry.hpp"
#include "gsym/tl.hpp"
#include "gsym/trees.hpp"

using namespace gsym;
using json = nlohmann::json;

namespace {

struct Global {
  std::string format = "text";
  double tol = 0;
  std::uint64_t seed = 1;
  bool one_based = false;
  int order = 12;
};

struct Source {
  std::string family, file;
  int root = -1;
};

Global g_opt;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph load(const Source& src) {
  if (src.family.empty() == src.file.empty()) throw ParseError("give exactly one of --family or --file", 0);
  Graph g;
  if (!src.family.empty()) {
    g = build_family(src.family);
  } else {
    std::string text = read_file(src.file);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception& e) {
        throw ParseError(e.what(), 0);
      }
      g = graph_from_json(j);
    } else {
      g = parse_edge_list(text);
    }
  }
  if (src.root >= 0) g = g.with_root(src.root);
  return g;
}

void add_source(CLI::App* app, Source& src) {
  app->add_option("--family", src.family, "named graph, e.g. petersen, kneser:5,2, ade:E6");
  app->add_option("--file", src.file, "edge-list or JSON graph file");
  app->add_option("--root", src.root, "root vertex override");
}

int shift() { return g_opt.one_based ? 1 : 0; }

json labels(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(x < 0 ? x : x + shift());
  return a;
}

json big(const BigInt& b) { return b.str(); }
json rat(const Rational& r) { return r.str(); }

json series_json(const PowerSeries& s) {
  json a = json::array();
  for (const auto& c : s.coeffs()) a.push_back(rat(c));
  return a;
}

json big_list(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& b : v) a.push_back(big(b));
  return a;
}

json measure_json(const AtomicMeasure& m) {
  json a = json::array();
  for (size_t i = 0; i < m.atoms.size(); ++i) a.push_back({{"x", m.atoms[i]}, {"weight", m.weights[i]}});
  return a;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    a.push_back(row);
  }
  return a;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string t = text;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + tok + "'", 0);
    }
    if (used != tok.size()) throw ParseError("not an integer: '" + tok + "'", 0);
    out.push_back(v);
  }
  return out;
}

void render_text(const json& j, std::ostream& out) {
  if (!j.is_object()) {
    out << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) {
    out << k << ": ";
    if (v.is_string())
      out << v.get<std::string>();
    else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
      bool first = true;
      for (const auto& x : v) {
        out << (first ? "" : " ") << (x.is_string() ? x.get<std::string>() : x.dump());
        first = false;
      }
    } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_object(); })) {
      for (const auto& row : v) {
        out << "\n ";
        for (const auto& [rk, rv] : row.items()) out << " " << rk << "=" << (rv.is_string() ? rv.get<std::string>() : rv.dump());
      }
    } else {
      out << v.dump();
    }
    out << "\n";
  }
}

void emit(const json& j) {
  if (g_opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    render_text(j, std::cout);
}

// ---- graph ---------------------------------------------------------------------

json graph_report(const Graph& g) {
  auto st = basic_stats(g);
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i + shift(), j + shift()});
  return {{"n", g.order()},
          {"m", g.size()},
          {"root", g.root() ? json(*g.root() + shift()) : json(nullptr)},
          {"valences", st.valences},
          {"regular", st.is_regular},
          {"components", st.components},
          {"bipartite", is_bipartite(g)},
          {"edges", edges}};
}

// ---- spectral ------------------------------------------------------------------

// rounds away Jacobi noise so output is stable across platforms
double tidy(double x) { return std::round(x * 1e10) / 1e10 + 0.0; }

json eigen_report(const Eigen::MatrixXd& m) {
  auto sd = eigen_sym(m, g_opt.tol);
  json ev = json::array();
  for (size_t i = 0; i < sd.eigenvalues.size(); ++i)
    ev.push_back({{"value", tidy(sd.eigenvalues[i])}, {"multiplicity", sd.multiplicities[i]}});
  return {{"eigenvalues", ev}, {"tol", sd.tol}};
}

// ---- knots ---------------------------------------------------------------------

json poly_json(const LaurentPoly& p) {
  json o = json::object();
  for (const auto& [pw, c] : p.terms()) o[std::to_string(pw)] = rat(c);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gsym: spectral graph theory, graph symmetries and Temperley-Lieb computations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g_opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tol", g_opt.tol, "eigenvalue clustering tolerance (0 = default)");
  app.add_option("--seed", g_opt.seed, "seed for randomized suites");
  app.add_flag("--one-based", g_opt.one_based, "1-based vertex labels in input and output");
  app.add_option("--order", g_opt.order, "series truncation order");

  std::function<json()> action;
  Source src;

  // graph
  auto* graph = app.add_subcommand("graph", "graph summary and edge list");
  add_source(graph, src);
  bool complement_flag = false;
  graph->add_flag("--complement", complement_flag, "report the complement instead");
  graph->callback([&] {
    action = [&] {
      Graph g = load(src);
      return graph_report(complement_flag ? complement(g) : g);
    };
  });

  // spectral
  auto* spectral = app.add_subcommand("spectral", "eigenvalues, Laplacian, circulant symbol, closures");
  spectral->require_subcommand(1);
  auto* sp_eigen = spectral->add_subcommand("eigen", "clustered adjacency spectrum");
  add_source(sp_eigen, src);
  bool with_projections = false;
  sp_eigen->add_flag("--projections", with_projections, "include spectral projections");
  sp_eigen->callback([&] {
    action = [&] {
      Graph g = load(src);
      json j = eigen_report(adjacency_real(g));
      if (with_projections) {
        json p = json::array();
        for (const auto& m : eigen_sym(adjacency_real(g), g_opt.tol).projections) p.push_back(matrix_json(m));
        j["projections"] = p;
      }
      return j;
    };
  });
  auto* sp_lap = spectral->add_subcommand("laplacian", "clustered Laplacian spectrum");
  add_source(sp_lap, src);
  sp_lap->callback([&] {
    action = [&] {
      Graph g = load(src);
      json j = eigen_report(laplacian(g).cast<double>());
      j["components"] = component_count(g);
      return j;
    };
  });
  auto* sp_circ = spectral->add_subcommand("circulant", "circulant symbol and Fourier eigenvalues");
  add_source(sp_circ, src);
  sp_circ->callback([&] {
    action = [&] {
      Graph g = load(src);
      auto gamma = circulant_symbol(adjacency_real(g));
      if (!gamma) return json{{"circulant", false}};
      json q = json::array();
      for (auto z : fourier_eigenvalues(*gamma)) q.push_back({tidy(z.real()), tidy(z.imag())});
      std::vector<double> sym(gamma->data(), gamma->data() + gamma->size());
      return json{{"circulant", true}, {"symbol", sym}, {"eigenvalues", q}};
    };
  });
  auto* sp_closure = spectral->add_subcommand("closure", "color-spectral closure against the exact coherent closure");
  add_source(sp_closure, src);
  sp_closure->callback([&] {
    action = [&] {
      Graph g = load(src);
      auto a = color_spectral_closure(adjacency_real(g), g_opt.tol);
      auto b = coherent_closure_exact(adjacency(g));
      return json{{"dimension", a.dimension},
                  {"converged", a.converged},
                  {"iterations", a.iterations},
                  {"coherent_dimension", b.dimension},
                  {"contained", span_contained(a.basis, b.basis)}};
    };
  });
  auto* sp_seg = spectral->add_subcommand("segment-charpoly", "characteristic polynomial of the N-vertex segment");
  int seg_n = 4;
  sp_seg->add_option("--n", seg_n)->required();
  sp_seg->callback([&] {
    action = [&] {
      auto p = segment_charpoly(seg_n);
      return json{{"n", seg_n}, {"coefficients", big_list(p.coeffs())}, {"text", p.to_string()}};
    };
  });
  auto* sp_evolve = spectral->add_subcommand("evolve", "explicit heat or wave evolution from a point mass");
  add_source(sp_evolve, src);
  std::string evolve_kind = "heat";
  double coeff = 1, delta = 0.1;
  int steps = 10, start = 0;
  sp_evolve->add_option("--kind", evolve_kind)->check(CLI::IsMember({"heat", "wave"}));
  sp_evolve->add_option("--coeff", coeff);
  sp_evolve->add_option("--delta", delta);
  sp_evolve->add_option("--steps", steps);
  sp_evolve->add_option("--start", start, "vertex carrying the initial unit mass");
  sp_evolve->callback([&] {
    action = [&] {
      Graph g = load(src);
      int v = start - shift();
      if (v < 0 || v >= g.order()) throw ContractError("start vertex out of range");
      Eigen::VectorXd init = Eigen::VectorXd::Zero(g.order());
      init(v) = 1;
      auto states = evolve(g, init, evolve_kind == "heat" ? EvolveKind::Heat : EvolveKind::Wave, coeff, delta, steps);
      std::vector<double> last(states.back().data(), states.back().data() + states.back().size());
      return json{{"final", last},
                  {"mass", states.back().sum()},
                  {"stable_step_bound", g.size() ? stable_step_bound(g) : 0.0}};
    };
  });

  // measures
  auto* measures = app.add_subcommand("measures", "loop counts, measures, series and density laws");
  measures->require_subcommand(1);
  auto* m_loops = measures->add_subcommand("loops", "closed walks at the root");
  add_source(m_loops, src);
  m_loops->callback([&] {
    action = [&] {
      Graph g = load(src);
      int root = g.root().value_or(0);
      return json{{"root", root + shift()}, {"loops", big_list(loop_counts(g, root, g_opt.order))}};
    };
  });
  auto* m_spec = measures->add_subcommand("spectral", "spectral measure at the root");
  add_source(m_spec, src);
  m_spec->callback([&] {
    action = [&] {
      Graph g = load(src);
      return json{{"atoms", measure_json(spectral_measure(g, g.root().value_or(0), g_opt.tol))}};
    };
  });
  auto* m_circ = measures->add_subcommand("circular", "circular measure of a rooted graph with norm <= 2");
  add_source(m_circ, src);
  m_circ->callback([&] {
    action = [&] {
      Graph g = load(src);
      return json{{"atoms", measure_json(circular_measure(g, g_opt.tol))}};
    };
  });
  auto* m_series = measures->add_subcommand("series", "Poincare, theta and T series; optional cyclotomic match");
  add_source(m_series, src);
  std::string cyclo;
  m_series->add_option("--cyclotomic", cyclo, "expected T series, e.g. 8:3,6+ or '5+,9+:15+");
  m_series->callback([&] {
    action = [&] {
      Graph g = load(src);
      if (!g.root()) g = g.with_root(0);
      auto f = poincare_series(g, g_opt.order);
      auto theta = theta_from_poincare(f);
      auto t = t_series(theta);
      json j{{"loops", series_json(f)},
             {"theta", series_json(theta)},
             {"theta_integral", theta_coefficients(f).all_integers()},
             {"t_series", series_json(t)}};
      if (!cyclo.empty()) {
        auto spec = parse_cyclotomic(cyclo);
        j["match"] = t == cyclotomic_series(spec.num, spec.den, spec.prime, g_opt.order);
      }
      return j;
    };
  });
  auto* m_density = measures->add_subcommand("density", "density law: moments and Stieltjes inversion");
  std::string law_name = "semicircle";
  std::vector<double> xs;
  double t_im = 1e-3;
  m_density->add_option("--law", law_name)->required();
  m_density->add_option("--x", xs, "sample points");
  m_density->add_option("--t", t_im, "imaginary offset for Stieltjes inversion");
  m_density->callback([&] {
    action = [&] {
      auto law = parse_density_law(law_name);
      json moments = json::array();
      for (int k = 0; k <= std::min(g_opt.order, 16); ++k) moments.push_back(density_moment(law, k));
      json samples = json::array();
      for (double x : xs)
        samples.push_back({{"x", x}, {"density", density(law, x)}, {"stieltjes", stieltjes_density(law, x, t_im)}});
      auto [lo, hi] = support(law);
      return json{{"law", to_string(law)}, {"support", {lo, hi}}, {"moments", moments}, {"samples", samples}};
    };
  });
  auto* m_oracle = measures->add_subcommand("oracle", "exact moment sequences");
  std::string oracle_kind = "catalan";
  m_oracle->add_option("--kind", oracle_kind, "catalan, central, middle or bell");
  m_oracle->callback([&] {
    action = [&] {
      auto kind = parse_moment_kind(oracle_kind);
      std::vector<BigInt> v;
      for (int k = 0; k <= g_opt.order; ++k) v.push_back(moment_oracle(kind, k));
      std::vector<Rational> q(v.begin(), v.end());
      return json{{"values", big_list(v)}, {"hankel_positive", hankel_positive(q).positive}};
    };
  });

  // trees
  auto* trees = app.add_subcommand("trees", "Prufer codes and tree counting");
  trees->require_subcommand(1);
  auto* t_enc = trees->add_subcommand("prufer-encode", "Prufer sequence of a labelled tree");
  add_source(t_enc, src);
  t_enc->callback([&] {
    action = [&] { return json{{"sequence", labels(prufer_encode(load(src)))}}; };
  });
  auto* t_dec = trees->add_subcommand("prufer-decode", "labelled tree of a Prufer sequence");
  std::string seq_text;
  int dec_n = 0;
  t_dec->add_option("sequence", seq_text, "entries separated by spaces or commas")->required();
  t_dec->add_option("--n", dec_n, "vertex count (default: length + 2)");
  t_dec->callback([&] {
    action = [&] {
      auto seq = parse_ints(seq_text);
      for (int& x : seq) x -= shift();
      int n = dec_n ? dec_n : static_cast<int>(seq.size()) + 2;
      return graph_report(prufer_decode(seq, n));
    };
  });
  auto* t_count = trees->add_subcommand("count", "labelled trees on N vertices, optionally with valences");
  int count_n = 0;
  std::string valences;
  t_count->add_option("--n", count_n);
  t_count->add_option("--valences", valences, "valence vector, e.g. 1,1,1,4,2,1");
  t_count->callback([&] {
    action = [&] {
      if (!valences.empty()) return json{{"count", big(count_with_valences(parse_ints(valences)))}};
      if (count_n <= 0) throw ParseError("give --n or --valences", 0);
      return json{{"n", count_n}, {"count", big(count_labeled_trees(count_n))}};
    };
  });
  auto* t_span = trees->add_subcommand("spanning", "spanning-tree count");
  add_source(t_span, src);
  std::string method = "cofactor";
  t_span->add_option("--method", method, "cofactor, spectral or circulant");
  t_span->callback([&] {
    action = [&] {
      auto c = spanning_tree_count(load(src), parse_spanning_method(method));
      json j{{"method", to_string(c.method)}, {"value", c.value}};
      if (c.exact) j["count"] = big(*c.exact);
      return j;
    };
  });

  // symmetry
  auto* sym = app.add_subcommand("sym", "automorphism groups and related structure");
  sym->require_subcommand(1);
  auto* s_aut = sym->add_subcommand("aut", "automorphism group");
  add_source(s_aut, src);
  s_aut->callback([&] {
    action = [&] {
      Graph g = load(src);
      auto grp = automorphism_group(g);
      json gens = json::array();
      for (const auto& p : grp.generators()) gens.push_back(labels(p.images()));
      return json{{"order", big(grp.order())},
                  {"generators", gens},
                  {"transitive", is_transitive(grp)},
                  {"eigenspaces_preserved", check_eigenspace_preservation(grp, g, g_opt.tol)}};
    };
  });
  auto* s_orbits = sym->add_subcommand("orbits", "vertex orbits");
  add_source(s_orbits, src);
  s_orbits->callback([&] {
    action = [&] {
      json o = json::array();
      for (const auto& orb : orbits(automorphism_group(load(src)))) o.push_back(labels(orb));
      return json{{"orbits", o}};
    };
  });
  auto* s_orbitals = sym->add_subcommand("orbitals", "orbitals on vertex pairs");
  add_source(s_orbitals, src);
  s_orbitals->callback([&] {
    action = [&] {
      Graph g = load(src);
      auto grp = automorphism_group(g);
      auto o = orbitals(grp);
      json rows = json::array();
      for (int i = 0; i < o.n; ++i) {
        std::vector<int> r(o.class_of.begin() + static_cast<long>(i) * o.n,
                           o.class_of.begin() + static_cast<long>(i + 1) * o.n);
        rows.push_back(r);
      }
      return json{{"count", o.count},
                  {"classes", rows},
                  {"doubly_transitive", is_doubly_transitive(grp)},
                  {"adjacency_constant", adjacency_constant_on_orbitals(g, grp)}};
    };
  });
  auto* s_table = sym->add_subcommand("table", "reproduce the N <= 11 classification table");
  s_table->callback([&] {
    action = [&] {
      json rows = json::array();
      bool all = true;
      for (const auto& r : table_n_le_11()) {
        rows.push_back({{"graph", r.row.graph},
                        {"family", r.row.family},
                        {"group", r.row.group},
                        {"expected", big(r.row.expected)},
                        {"actual", big(r.actual)},
                        {"status", r.match ? "ok" : "mismatch"}});
        all = all && r.match;
      }
      return json{{"rows", rows}, {"all_ok", all}};
    };
  });
  auto* s_partial = sym->add_subcommand("partial", "partial permutations and partial automorphisms");
  int partial_n = 4;
  std::string partial_kind = "cycle";
  s_partial->add_option("--n", partial_n);
  s_partial->add_option("--kind", partial_kind, "cycle or oriented-cycle");
  s_partial->callback([&] {
    action = [&] {
      bool oriented = partial_kind == "oriented-cycle";
      if (!oriented && partial_kind != "cycle") throw ParseError("--kind must be cycle or oriented-cycle", 0);
      long enumerated = static_cast<long>(
          (oriented ? partial_automorphisms(oriented_cycle_adjacency(partial_n)) : partial_automorphisms(cycle(partial_n))).size());
      return json{{"n", partial_n},
                  {"all_partial_perms", big(count_partial_perms(partial_n))},
                  {"formula", big(partial_counts_cycle(partial_n, oriented))},
                  {"enumerated", enumerated}};
    };
  });
  auto* s_char = sym->add_subcommand("characters", "fixed points and derangements in S_N");
  int char_n = 10, char_k = 5;
  s_char->add_option("--n", char_n);
  s_char->add_option("--k", char_k, "highest moment");
  s_char->callback([&] {
    action = [&] {
      auto st = character_stats(char_n, char_k);
      json m = json::array();
      for (const auto& r : st.fixed_point_moments) m.push_back(rat(r));
      return json{{"n", char_n},
                  {"derangement_probability", rat(st.derangement_prob)},
                  {"derangement_probability_float", st.derangement_prob.convert_to<double>()},
                  {"fixed_point_moments", m}};
    };
  });
  auto* s_prod = sym->add_subcommand("product", "product theorem check for two graphs");
  std::string left, right, kind_name = "cartesian";
  s_prod->add_option("--left", left)->required();
  s_prod->add_option("--right", right)->required();
  s_prod->add_option("--kind", kind_name, "direct, cartesian or lex");
  s_prod->callback([&] {
    action = [&] {
      auto r = verify_product_theorem(build_family(left), build_family(right), parse_product_kind(kind_name));
      return json{{"applicable", r.applicable},
                  {"conditions_hold", r.conditions_hold},
                  {"order_product", big(r.order_product)},
                  {"order_actual", big(r.order_actual)},
                  {"equal", r.equal},
                  {"note", r.note}};
    };
  });

  // quantum
  auto* qflag = app.add_subcommand("qflag", "quantum symmetry verdict");
  add_source(qflag, src);
  qflag->callback([&] {
    action = [&] { return to_json(quantum_flag(load(src))); };
  });

  // knots
  auto* knots = app.add_subcommand("knots", "Temperley-Lieb determinants and Jones polynomials");
  knots->require_subcommand(1);
  auto* k_jones = knots->add_subcommand("jones", "Jones polynomial of a braid closure");
  int strands = 1;
  std::string word;
  k_jones->add_option("--strands", strands)->required();
  k_jones->add_option("word", word, "signed generator indices, e.g. \"1 1 1\"");
  k_jones->callback([&] {
    action = [&] {
      auto b = parse_braid(word, strands);
      auto v = jones_polynomial(b);
      return json{{"poly", poly_json(v)}, {"text", v.to_q_string()}, {"writhe", b.writhe()}};
    };
  });
  auto* k_gram = knots->add_subcommand("gram", "Gram determinant with the matching product formula");
  std::string basis_name = "nc2";
  int gram_k = 4;
  long gram_n = 2;
  k_gram->add_option("--basis", basis_name, "nc2 (k = points), nc or p");
  k_gram->add_option("--k", gram_k);
  k_gram->add_option("--n", gram_n);
  k_gram->callback([&] {
    action = [&] {
      auto basis = parse_gram_basis(basis_name);
      BigInt n(gram_n);
      BigInt det = bareiss_det(gram_matrix(basis, gram_k, n));
      json j{{"basis", to_string(basis)}, {"k", gram_k}, {"n", gram_n}, {"det", big(det)}};
      BigInt formula = basis == GramBasis::NC2 ? meander_det(gram_k, n)
                       : basis == GramBasis::P ? lindstrom_det(gram_k, n)
                                               : nc_gram_det_formula(gram_k, n, false);
      j["formula"] = big(formula);
      j["match"] = formula == det;
      return j;
    };
  });
  auto* k_fat = knots->add_subcommand("fattening", "check the fattening relation between Gram matrices");
  int fat_k = 3;
  long fat_n = 2;
  k_fat->add_option("--k", fat_k);
  k_fat->add_option("--n", fat_n);
  k_fat->callback([&] {
    action = [&] { return json{{"k", fat_k}, {"n", fat_n}, {"holds", fattening_gram_relation(fat_k, fat_n)}}; };
  });

  // corpus
  auto* corpus = app.add_subcommand("corpus", "run the acceptance criteria or list the named corpus");
  acceptance::Options acc;
  bool list = false, timings = false;
  std::vector<std::string> inject;
  corpus->add_option("--filter", acc.filter, "criterion ids or groups");
  corpus->add_option("--inject", inject, "fault to inject")->check(CLI::IsMember({"corrupt-catalan"}));
  corpus->add_flag("--list", list, "list the named graph corpus");
  corpus->add_flag("--timings", timings, "include per-criterion timings in JSON");
  int corpus_status = 0;
  corpus->callback([&] {
    action = [&] {
      if (list) return json{{"corpus", named_corpus()}};
      acc.seed = g_opt.seed;
      for (const auto& f : inject)
        if (f == "corrupt-catalan") acc.faults.corrupt_catalan = true;
      auto out = acceptance::run(acc);
      json j = acceptance::to_json(out, timings);
      json failing = json::array();
      for (const auto& o : out)
        if (!o.pass) failing.push_back(o.criterion.id);
      j["failing"] = failing;
      if (!failing.empty()) corpus_status = 1;
      if (g_opt.format == "text") return json(acceptance::to_text(out));
      return j;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }
  try {
    emit(action());
    return corpus_status;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
