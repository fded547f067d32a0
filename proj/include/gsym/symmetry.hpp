#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gsym/graph.hpp"
#include "gsym/types.hpp"

namespace gsym {

/// Permutation of {0..n-1} stored as its image list; (p * q)(x) = p(q(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Perm inverse() const;
  /// Permutation matrix with P e_i = e_{p(i)}.
  Eigen::MatrixXd matrix() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

bool is_automorphism(const Graph& g, const Perm& p);

/// Permutation group held as a stabilizer chain (deterministic Schreier-Sims).
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int n, std::vector<Perm> generators);

  int degree() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  const std::vector<int>& base() const { return base_; }
  bool contains(const Perm& p) const;
  /// Full listing; refuses above 10^7 elements.
  std::vector<Perm> elements() const;

 private:
  struct Level {
    int point = 0;
    std::vector<Perm> strong;
    std::vector<std::optional<Perm>> transversal;  // u with u(point) = key
    std::vector<int> orbit;
  };

  void build();
  void rebuild_orbit(size_t level);
  std::pair<Perm, size_t> strip(Perm h, size_t from) const;

  int n_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  std::vector<int> base_;
  BigInt order_ = 1;
};

inline constexpr long kElementListCap = 10'000'000;

/// Refinement-pruned backtracking search; refuses above kExhaustiveCap vertices.
PermGroup automorphism_group(const Graph& g);
/// Exhaustive filter of all n! permutations, n <= 8 (test oracle).
BigInt automorphism_order_bruteforce(const Graph& g);
std::optional<Perm> find_isomorphism(const Graph& g, const Graph& h);
bool are_isomorphic(const Graph& g, const Graph& h);

bool check_eigenspace_preservation(const PermGroup& group, const Graph& g, double tol = 0);

struct OrbitalPartition {
  int n = 0;
  std::vector<int> class_of;  // index i * n + j
  int count = 0;
};

std::vector<std::vector<int>> orbits(const PermGroup& group);
OrbitalPartition orbitals(const PermGroup& group);
bool is_transitive(const PermGroup& group);
bool is_doubly_transitive(const PermGroup& group);
bool adjacency_constant_on_orbitals(const Graph& g, const PermGroup& group);

struct ProductReport {
  bool applicable = true;
  bool conditions_hold = false;
  BigInt order_product = 0;
  BigInt order_actual = 0;
  bool equal = false;
  std::string note;
};

/// Lexicographic products follow `product`: |G(x)|^{|y|} |G(y)| is the wreath order.
ProductReport verify_product_theorem(const Graph& x, const Graph& y, ProductKind kind, double tol = 1e-7);

// named group orders used by the classification table
BigInt order_cyclic(int n);
BigInt order_dihedral(int n);
BigInt order_symmetric(int n);
BigInt order_hyperoctahedral(int n);
BigInt order_wreath(const BigInt& inner, int degree, const BigInt& outer);

struct TableRow {
  int order = 0;
  std::string graph;   // display name
  std::string family;  // --family string
  std::string group;
  BigInt expected;
  bool quantum = false;  // classical and quantum groups differ in the source table
};

struct TableResult {
  TableRow row;
  BigInt actual;
  bool match = false;
};

const std::vector<TableRow>& symmetry_table_rows();
std::vector<TableResult> table_n_le_11();

struct CharacterStats {
  Rational derangement_prob;
  std::vector<Rational> fixed_point_moments;  // k = 1..k_max
};

/// Moments sum over cycle types; exact for N <= 12.
CharacterStats character_stats(int n, int k_max);
Rational derangement_probability(int n);

struct CharacterEigen {
  Eigen::VectorXcd vector;
  std::complex<double> eigenvalue;
  double residual = 0;
};

/// f_i = w^{ji}; needs a circulant labelling.
CharacterEigen character_eigenvector(const Graph& g, int j);

/// Injective partial map; images[i] = -1 outside the domain.
struct PartialPerm {
  std::vector<int> images;
  friend bool operator==(const PartialPerm&, const PartialPerm&) = default;
};

/// Adjacency matrix of the oriented cycle, d(i, i+1) = 1.
MatrixXi oriented_cycle_adjacency(int n);

/// Partial maps with d(i,j) = d(s(i), s(j)) on the domain; n <= 6.
std::vector<PartialPerm> partial_automorphisms(const MatrixXi& d);
std::vector<PartialPerm> partial_automorphisms(const Graph& g);
BigInt count_partial_perms(int n);
/// Number of subsets of Z_n with exactly p cyclic-interval components; index p.
std::vector<BigInt> cyclic_component_counts(int n);
BigInt partial_counts_cycle(int n, bool oriented);

}  // namespace gsym
