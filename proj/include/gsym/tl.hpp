#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsym/polynomial.hpp"
#include "gsym/types.hpp"

namespace gsym {

// ---- noncrossing pairings ---------------------------------------------------

/// Perfect matching between `up` top points and `down` bottom points.
///
/// Boundary positions run clockwise from the top-left corner: top points
/// 0..up-1 left to right, then bottom points right to left. `mate[p]` is the
/// partner of position p.
class Diagram {
 public:
  Diagram() = default;
  Diagram(int up, int down, std::vector<int> mate);
  static Diagram identity(int k);
  /// Cap-cup generator epsilon_i on k strands, 1 <= i < k.
  static Diagram epsilon(int k, int i);
  /// Builds from pairs of (row, index-from-left) endpoints; row 0 = top.
  static Diagram from_pairs(int up, int down, const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& pairs);

  int up() const { return up_; }
  int down() const { return down_; }
  const std::vector<int>& mate() const { return mate_; }
  int top(int i) const { return i; }
  int bottom(int j) const { return up_ + down_ - 1 - j; }
  /// (row, index-from-left) of a boundary position.
  std::pair<int, int> endpoint(int pos) const;

  /// Sorted (a, b) pairs with a < b.
  std::vector<std::pair<int, int>> pairs() const;
  /// Flipped upside down.
  Diagram star() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  int up_ = 0, down_ = 0;
  std::vector<int> mate_;
};

bool is_noncrossing(const Diagram& d);

/// `a` stacked on top of `b`; returns the diagram and the number of closed loops.
std::pair<Diagram, int> compose(const Diagram& a, const Diagram& b);
Diagram tensor(const Diagram& a, const Diagram& b);
/// Loops after joining top i to bottom i for every i.
int closure_loops(const Diagram& d);

/// All noncrossing pairings; refuses above 20 points.
std::vector<Diagram> enumerate_nc2(int up, int down);

// ---- Temperley-Lieb elements ---------------------------------------------

/// Linear combination of diagrams of one shape with loop value `loop`.
template <typename Scalar>
class TLElement {
 public:
  TLElement() = default;
  TLElement(int up, int down, Scalar loop) : up_(up), down_(down), loop_(std::move(loop)) {}
  TLElement(const Diagram& d, Scalar loop, Scalar coeff = Scalar(1)) : TLElement(d.up(), d.down(), std::move(loop)) {
    add(d, coeff);
  }
  static TLElement identity(int k, Scalar loop) { return TLElement(Diagram::identity(k), std::move(loop)); }

  int up() const { return up_; }
  int down() const { return down_; }
  const Scalar& loop() const { return loop_; }
  const std::map<Diagram, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Diagram& d, const Scalar& c) {
    if (d.up() != up_ || d.down() != down_) throw ContractError("diagram shape mismatch");
    Scalar& slot = terms_[d];
    slot = slot + c;
    if (is_zero_coeff(slot)) terms_.erase(d);
  }

  friend TLElement operator+(TLElement a, const TLElement& b) {
    a.require_same(b);
    for (const auto& [d, c] : b.terms_) a.add(d, c);
    return a;
  }
  friend TLElement operator-(const TLElement& a) {
    TLElement r(a.up_, a.down_, a.loop_);
    for (const auto& [d, c] : a.terms_) r.add(d, Scalar(0) - c);
    return r;
  }
  friend TLElement operator-(const TLElement& a, const TLElement& b) { return a + (-b); }
  friend TLElement operator*(const Scalar& s, const TLElement& a) {
    TLElement r(a.up_, a.down_, a.loop_);
    for (const auto& [d, c] : a.terms_) r.add(d, s * c);
    return r;
  }
  /// Composition with `a` on top.
  friend TLElement operator*(const TLElement& a, const TLElement& b) {
    if (a.down_ != b.up_) throw ContractError("composition shape mismatch");
    if (!(a.loop_ == b.loop_)) throw ContractError("loop values differ");
    TLElement r(a.up_, b.down_, a.loop_);
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) {
        auto [d, loops] = compose(da, db);
        Scalar c = ca * cb;
        for (int i = 0; i < loops; ++i) c = c * a.loop_;
        r.add(d, c);
      }
    return r;
  }
  friend bool operator==(const TLElement& a, const TLElement& b) {
    return a.up_ == b.up_ && a.down_ == b.down_ && a.terms_ == b.terms_;
  }

  TLElement star() const {
    TLElement r(down_, up_, loop_);
    for (const auto& [d, c] : terms_) r.add(d.star(), conj_coeff(c));
    return r;
  }

  /// Sum of coeff * loop^{closed loops}; the unnormalised closure.
  Scalar closure_sum() const {
    if (up_ != down_) throw ContractError("closure needs a square shape");
    Scalar s(0);
    for (const auto& [d, c] : terms_) {
      Scalar t = c;
      for (int i = closure_loops(d); i > 0; --i) t = t * loop_;
      s = s + t;
    }
    return s;
  }

 private:
  void require_same(const TLElement& b) const {
    if (up_ != b.up_ || down_ != b.down_) throw ContractError("element shape mismatch");
    if (!(loop_ == b.loop_)) throw ContractError("loop values differ");
  }

  int up_ = 0, down_ = 0;
  Scalar loop_{};
  std::map<Diagram, Scalar> terms_;
};

template <typename Scalar>
TLElement<Scalar> tensor(const TLElement<Scalar>& a, const TLElement<Scalar>& b) {
  TLElement<Scalar> r(a.up() + b.up(), a.down() + b.down(), a.loop());
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) r.add(tensor(da, db), ca * cb);
  return r;
}

/// Normalised trace N^{c-k}, tr(1) = 1.
Rational markov_trace(const TLElement<Rational>& a);

/// Jones projection e_i = epsilon_i / N over the rationals.
TLElement<Rational> jones_projection(int k, int i, const Rational& loop);

// ---- braids and the Jones polynomial ---------------------------------------

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +-i for g_i^{+-1}
  int writhe() const;
};

/// Whitespace-separated signed integers, e.g. "1 1 -2".
BraidWord parse_braid(const std::string& text, int strands);
std::string to_string(const BraidWord& b);

/// Loop value q^{1/2} + q^{-1/2} in the variable s = q^{1/2}.
LaurentPoly jones_loop();
/// g_i -> s eps_i - 1 and g_i^{-1} -> s^{-1} eps_i - 1, i.e. (1+q) e_i - 1.
TLElement<LaurentPoly> braid_to_tl(const BraidWord& b);
/// (-1)^{k-1} s^{writhe} N^{-1} sum coeff N^{loops}; keyed by powers of q^{1/2}.
LaurentPoly jones_polynomial(const BraidWord& b);

/// q^{-1} V(L+) - q V(L-) - c V(L0) with c = q^{1/2} + q^{-1/2} when `plus_form`,
/// q^{1/2} - q^{-1/2} otherwise. L+/L-/L0 carry g_i, g_i^{-1}, nothing at `position`.
LaurentPoly skein_residual(const BraidWord& b, size_t position, bool plus_form);

// ---- partitions and Gram determinants ---------------------------------------

/// Set partition of {0..k-1} as a restricted growth string.
struct SetPartition {
  std::vector<int> block;
  int size() const { return static_cast<int>(block.size()); }
  int blocks() const;
  std::vector<std::vector<int>> block_lists() const;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
};

SetPartition normalise(std::vector<int> labels);
bool is_noncrossing(const SetPartition& p);
bool refines(const SetPartition& a, const SetPartition& b);
SetPartition join(const SetPartition& a, const SetPartition& b);
/// Smallest noncrossing partition above both.
SetPartition nc_join(const SetPartition& a, const SetPartition& b);

/// Block count descending, then lexicographic; refuses above k = 10.
std::vector<SetPartition> enumerate_partitions(int k);
std::vector<SetPartition> enumerate_nc(int k);

/// Doubling map NC(k) -> NC_2(2k) and its inverse (top-row pairings).
Diagram fatten(const SetPartition& p);
SetPartition shrink(const Diagram& d);

enum class GramBasis { NC2, NC, P };
std::string to_string(GramBasis b);
GramBasis parse_gram_basis(const std::string& text);

/// NC2: loops of the glued pairings on k points; NC / P: blocks of the join in P(k).
MatrixXb gram_matrix(GramBasis basis, int k, const BigInt& n);
/// Inverse of the order matrix [pi <= sigma] on P(k), exact.
MatrixXq mobius_matrix(int k);
BigInt lindstrom_det(int k, const BigInt& n);
/// Chebyshev P_0 = 1, P_1 = X, P_{r+1} = X P_r - P_{r-1}.
Polynomial<BigInt> chebyshev_p(int r);
/// d_{kr} with f_{kr} = C(2k,k-r) - C(2k,k-r-1); k counts pairs.
BigInt meander_exponent(int k, int r);
/// Product over r = 1..pairs of P_r(n)^{d_{pairs,r}} for NC_2 on `points` points.
BigInt meander_det(int points, const BigInt& n);
/// Product formula for the NC(k) Gram determinant at N, with a_k summed over
/// P(k) (`all_partitions`) or over NC(k). Throws when the value is irrational.
BigInt nc_gram_det_formula(int k, const BigInt& n, bool all_partitions);
/// Entrywise check of G_{2k,n} = n^k Delta^{-1} G_{k,n^2} Delta^{-1} under shrinking.
bool fattening_gram_relation(int k, const BigInt& n, bool use_nc_join = false);

}  // namespace gsym
