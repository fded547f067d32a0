#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gsym/graph.hpp"
#include "gsym/series.hpp"
#include "gsym/types.hpp"

namespace gsym {

/// L_k = (d^k)_{root,root} for k = 0..k_max, exact.
std::vector<BigInt> loop_counts(const Graph& g, int root, int k_max);

/// Finitely supported probability measure on the real line.
struct AtomicMeasure {
  std::vector<double> atoms;  // strictly increasing
  std::vector<double> weights;

  double moment(int k) const;
  double total_mass() const;
};

AtomicMeasure spectral_measure(const Graph& g, int root, double tol = 0);

enum class MomentKind { Catalan, Central, Middle, Bell };
BigInt moment_oracle(MomentKind kind, int k);
MomentKind parse_moment_kind(const std::string& text);

struct HankelReport {
  bool positive = true;
  int failing_size = 0;  // size of the first negative minor, 0 when none
  std::vector<Rational> minors;
};

/// Nested Hankel minors det (M_{i+j})_{0<=i,j<=m} for every m with 2m < |M|.
HankelReport hankel_positive(const std::vector<Rational>& moments);

enum class DensityLaw { Semicircle, MarchenkoPastur, Arcsine, ModifiedArcsine };
std::string to_string(DensityLaw law);
DensityLaw parse_density_law(const std::string& text);

double density(DensityLaw law, double x);
/// Support interval [lo, hi].
std::pair<double, double> support(DensityLaw law);

/// Closed-form Cauchy transform with the branch ~ 1/xi at infinity.
std::complex<double> cauchy_transform(DensityLaw law, std::complex<double> xi);
std::complex<double> cauchy_transform(const AtomicMeasure& mu, std::complex<double> xi);

/// -Im G(x + i t) / pi. Throws ContractError for t <= 0.
double stieltjes_density(DensityLaw law, double x, double t);
double stieltjes_density(const AtomicMeasure& mu, double x, double t);

/// k-th moment by adaptive Gauss-Kronrod after an angle substitution that
/// removes the endpoint singularities.
double density_moment(DensityLaw law, int k);

/// c_k = L_{2k} at the root, k = 0..order. Requires a bipartite rooted graph.
PowerSeries poincare_series(const Graph& g, int order);
/// a_r = sum_k (-1)^{r-k} 2r/(r+k) C(r+k, r-k) c_k with a_0 = c_0. These are
/// the coefficients of Theta - q, i.e. of (1-q)/(1+q) f(q/(1+q)^2).
PowerSeries theta_coefficients(const PowerSeries& f);
/// Theta = q + sum a_r q^r.
PowerSeries theta_from_poincare(const PowerSeries& f);
/// Theta = q + (1-q)/(1+q) f(q/(1+q)^2) by series substitution.
PowerSeries theta_by_substitution(const PowerSeries& f);
/// T = (Theta - q) / (1 - q).
PowerSeries t_series(const PowerSeries& theta);

struct CycloFactor {
  int n;
  bool plus;  // 1+q^n instead of 1-q^n
};

/// prod(num) / prod(den), optionally divided by (1-q) (prime = 1) or
/// (1-q^2) (prime = 2), truncated at q^order.
PowerSeries cyclotomic_series(const std::vector<CycloFactor>& num, const std::vector<CycloFactor>& den,
                              int prime, int order);

struct CycloSpec {
  std::vector<CycloFactor> num, den;
  int prime = 0;
};

/// Parses "8:3,6+" with optional leading "'" or "''" for the primed forms.
CycloSpec parse_cyclotomic(const std::string& text);
std::string to_string(const CycloSpec& spec);

/// Circular measure on angles in [0, 2 pi): each atom x of law(d^2) at the
/// root spreads weight w/4 over +-alpha, pi +- alpha with alpha = arccos(sqrt(x)/2).
AtomicMeasure circular_measure(const Graph& g, double tol = 0);
/// m_k = sum w cos(k theta) over the circular measure.
double circular_moment(const AtomicMeasure& eps, int k);

}  // namespace gsym
