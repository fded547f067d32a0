#include "gsym/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gsym/exact.hpp"
#include "gsym/spectral.hpp"

namespace gsym {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::vector<BigInt> loop_counts(const Graph& g, int root, int k_max) {
  if (root < 0 || root >= g.order()) throw ContractError("root out of range");
  if (k_max < 0) throw ContractError("k_max must be non-negative");
  const auto nb = g.neighbours();
  std::vector<BigInt> v(g.order(), BigInt(0)), next(g.order());
  v[root] = 1;
  std::vector<BigInt> out{BigInt(1)};
  for (int k = 1; k <= k_max; ++k) {
    for (int i = 0; i < g.order(); ++i) {
      BigInt s = 0;
      for (int j : nb[i]) s += v[j];
      next[i] = s;
    }
    std::swap(v, next);
    out.push_back(v[root]);
  }
  return out;
}

double AtomicMeasure::moment(int k) const {
  double s = 0;
  for (size_t i = 0; i < atoms.size(); ++i) s += weights[i] * std::pow(atoms[i], k);
  return s;
}

double AtomicMeasure::total_mass() const {
  double s = 0;
  for (double w : weights) s += w;
  return s;
}

AtomicMeasure spectral_measure(const Graph& g, int root, double tol) {
  if (root < 0 || root >= g.order()) throw ContractError("root out of range");
  auto sd = eigen_sym(adjacency_real(g), tol);
  AtomicMeasure mu;
  for (size_t k = 0; k < sd.eigenvalues.size(); ++k) {
    double w = sd.projections[k](root, root);
    if (w <= sd.tol) continue;
    mu.atoms.push_back(sd.eigenvalues[k]);
    mu.weights.push_back(w);
  }
  return mu;
}

BigInt moment_oracle(MomentKind kind, int k) {
  if (k < 0) throw ContractError("moment index must be non-negative");
  switch (kind) {
    case MomentKind::Catalan: return catalan(k);
    case MomentKind::Central: return central_binomial(k);
    case MomentKind::Middle: return middle_binomial(k);
    case MomentKind::Bell: return bell(k);
  }
  return 0;
}

MomentKind parse_moment_kind(const std::string& text) {
  if (text == "catalan") return MomentKind::Catalan;
  if (text == "central") return MomentKind::Central;
  if (text == "middle") return MomentKind::Middle;
  if (text == "bell") return MomentKind::Bell;
  throw ParseError("unknown moment kind '" + text + "'", 0);
}

HankelReport hankel_positive(const std::vector<Rational>& m) {
  HankelReport r;
  for (int size = 1; 2 * size - 1 <= static_cast<int>(m.size()); ++size) {
    MatrixXq h(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) h(i, j) = m[i + j];
    Rational det = gauss_det(h);
    r.minors.push_back(det);
    if (det < 0 && r.positive) {
      r.positive = false;
      r.failing_size = size;
    }
  }
  return r;
}

std::string to_string(DensityLaw law) {
  switch (law) {
    case DensityLaw::Semicircle: return "semicircle";
    case DensityLaw::MarchenkoPastur: return "marchenko-pastur";
    case DensityLaw::Arcsine: return "arcsine";
    case DensityLaw::ModifiedArcsine: return "modified-arcsine";
  }
  return "?";
}

DensityLaw parse_density_law(const std::string& text) {
  for (auto l : {DensityLaw::Semicircle, DensityLaw::MarchenkoPastur, DensityLaw::Arcsine,
                 DensityLaw::ModifiedArcsine})
    if (to_string(l) == text) return l;
  throw ParseError("unknown density law '" + text + "'", 0);
}

std::pair<double, double> support(DensityLaw law) {
  switch (law) {
    case DensityLaw::Semicircle:
    case DensityLaw::ModifiedArcsine: return {-2.0, 2.0};
    default: return {0.0, 4.0};
  }
}

double density(DensityLaw law, double x) {
  auto [lo, hi] = support(law);
  if (x <= lo || x >= hi) return 0.0;
  switch (law) {
    case DensityLaw::Semicircle: return std::sqrt(4 - x * x) / (2 * kPi);
    case DensityLaw::MarchenkoPastur: return std::sqrt(4 * x - x * x) / (2 * kPi * x);
    case DensityLaw::Arcsine: return 1 / (kPi * std::sqrt(x * (4 - x)));
    case DensityLaw::ModifiedArcsine: return std::sqrt((2 + x) / (2 - x)) / (2 * kPi);
  }
  return 0.0;
}

cd cauchy_transform(DensityLaw law, cd xi) {
  switch (law) {
    case DensityLaw::Semicircle: return (xi - std::sqrt(xi - 2.0) * std::sqrt(xi + 2.0)) / 2.0;
    case DensityLaw::MarchenkoPastur: return (xi - std::sqrt(xi) * std::sqrt(xi - 4.0)) / (2.0 * xi);
    case DensityLaw::Arcsine: return 1.0 / (std::sqrt(xi) * std::sqrt(xi - 4.0));
    case DensityLaw::ModifiedArcsine: return (std::sqrt(xi + 2.0) / std::sqrt(xi - 2.0) - 1.0) / 2.0;
  }
  return 0.0;
}

cd cauchy_transform(const AtomicMeasure& mu, cd xi) {
  cd g = 0;
  for (size_t i = 0; i < mu.atoms.size(); ++i) {
    if (xi == cd(mu.atoms[i], 0)) throw ContractError("Cauchy transform evaluated at an atom");
    g += mu.weights[i] / (xi - mu.atoms[i]);
  }
  return g;
}

double stieltjes_density(DensityLaw law, double x, double t) {
  if (!(t > 0)) throw ContractError("Stieltjes inversion needs t > 0");
  return -cauchy_transform(law, cd(x, t)).imag() / kPi;
}

double stieltjes_density(const AtomicMeasure& mu, double x, double t) {
  if (!(t > 0)) throw ContractError("Stieltjes inversion needs t > 0");
  return -cauchy_transform(mu, cd(x, t)).imag() / kPi;
}

double density_moment(DensityLaw law, int k) {
  if (k < 0 || k > 16) throw ContractError("density_moment supports 0 <= k <= 16");
  using boost::math::quadrature::gauss_kronrod;
  std::function<double(double)> f;
  switch (law) {
    case DensityLaw::Semicircle:
      f = [k](double th) { double s = std::sin(th); return std::pow(2 * std::cos(th), k) * 2 / kPi * s * s; };
      break;
    case DensityLaw::MarchenkoPastur:
      f = [k](double th) { double c = std::cos(th / 2); return std::pow(2 - 2 * std::cos(th), k) * 2 / kPi * c * c; };
      break;
    case DensityLaw::Arcsine:
      f = [k](double th) { return std::pow(2 - 2 * std::cos(th), k) / kPi; };
      break;
    case DensityLaw::ModifiedArcsine:
      f = [k](double th) { return std::pow(2 * std::cos(th), k) * (1 + std::cos(th)) / kPi; };
      break;
  }
  return gauss_kronrod<double, 61>::integrate(f, 0.0, kPi, 15, 1e-15);
}

PowerSeries poincare_series(const Graph& g, int order) {
  if (!g.root()) throw ContractError("poincare_series needs a rooted graph");
  if (!is_bipartite(g)) throw ContractError("poincare_series needs a bipartite graph");
  if (order < 0 || order > 24) throw ContractError("series order must be in [0,24]");
  auto loops = loop_counts(g, *g.root(), 2 * order);
  PowerSeries f(order);
  for (int k = 0; k <= order; ++k) f[k] = Rational(loops[2 * k]);
  return f;
}

PowerSeries theta_coefficients(const PowerSeries& f) {
  PowerSeries a(f.order());
  a[0] = f[0];
  for (int r = 1; r <= f.order(); ++r) {
    Rational acc = 0;
    for (int k = 0; k <= r; ++k) {
      Rational term = Rational(2 * r, r + k) * Rational(binomial(r + k, r - k)) * f[k];
      acc += (r - k) % 2 ? -term : term;
    }
    a[r] = acc;
  }
  return a;
}

PowerSeries theta_from_poincare(const PowerSeries& f) {
  PowerSeries theta = theta_coefficients(f);
  if (theta.order() >= 1) theta[1] += 1;
  return theta;
}

PowerSeries theta_by_substitution(const PowerSeries& f) {
  const int R = f.order();
  PowerSeries one_plus_q({1, 1}, R), one_minus_q({1, -1}, R), q = PowerSeries::monomial(1, 1, R);
  PowerSeries z = q / (one_plus_q * one_plus_q);
  return q + one_minus_q / one_plus_q * f.compose(z);
}

PowerSeries t_series(const PowerSeries& theta) {
  const int R = theta.order();
  return (theta - PowerSeries::monomial(1, 1, R)) / PowerSeries({1, -1}, R);
}

PowerSeries cyclotomic_series(const std::vector<CycloFactor>& num, const std::vector<CycloFactor>& den, int prime,
                              int order) {
  if (order < 0 || order > 48) throw ContractError("cyclotomic order must be in [0,48]");
  if (prime < 0 || prime > 2) throw ContractError("prime mark must be 0, 1 or 2");
  auto factor = [order](const CycloFactor& f) {
    if (f.n < 1) throw ContractError("cyclotomic exponents must be positive");
    PowerSeries s = PowerSeries::constant(1, order);
    if (f.n <= order) s[f.n] = f.plus ? 1 : -1;
    return s;
  };
  PowerSeries r = PowerSeries::constant(1, order);
  for (const auto& f : num) r = r * factor(f);
  for (const auto& f : den) r = r / factor(f);
  if (prime) r = r / factor({prime, false});
  return r;
}

CycloSpec parse_cyclotomic(const std::string& raw) {
  CycloSpec spec;
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  while (!text.empty() && text[0] == '\'') ++spec.prime, text.erase(0, 1);
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("cyclotomic spec needs ':'", 0);
  auto parse_list = [&](const std::string& part) {
    std::vector<CycloFactor> out;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      CycloFactor f{0, false};
      if (item.back() == '+') f.plus = true, item.pop_back();
      try {
        size_t used = 0;
        f.n = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ParseError("bad cyclotomic factor '" + item + "'", 0);
      }
      out.push_back(f);
    }
    return out;
  };
  spec.num = parse_list(text.substr(0, colon));
  spec.den = parse_list(text.substr(colon + 1));
  return spec;
}

std::string to_string(const CycloSpec& spec) {
  auto list = [](const std::vector<CycloFactor>& fs) {
    std::string s;
    for (size_t i = 0; i < fs.size(); ++i) s += (i ? "," : "") + std::to_string(fs[i].n) + (fs[i].plus ? "+" : "");
    return s;
  };
  return std::string(spec.prime, '\'') + "xi(" + list(spec.num) + ":" + list(spec.den) + ")";
}

AtomicMeasure circular_measure(const Graph& g, double tol) {
  if (!g.root()) throw ContractError("circular_measure needs a rooted graph");
  auto sd = eigen_sym(adjacency_real(g), tol);
  double radius = 0;
  for (double l : sd.eigenvalues) radius = std::max(radius, std::abs(l));
  if (radius > 2 + 1e-9) throw ContractError("circular measure needs spectral radius <= 2");
  const int r = *g.root();
  std::vector<std::pair<double, double>> pts;
  for (size_t k = 0; k < sd.eigenvalues.size(); ++k) {
    double w = sd.projections[k](r, r);
    if (w <= sd.tol) continue;
    double lam = sd.eigenvalues[k];
    // acos is ill-conditioned near 1; snap values that are 2 up to rounding
    double c = std::abs(lam) / 2;
    if (c > 1 - 1e-10) c = 1;
    if (c < 1e-12) c = 0;
    double alpha = std::acos(c);
    for (double th : {alpha, 2 * kPi - alpha, kPi - alpha, kPi + alpha}) {
      th = std::fmod(th, 2 * kPi);
      if (th > 2 * kPi - 1e-9) th = 0;
      pts.emplace_back(th, w / 4);
    }
  }
  std::sort(pts.begin(), pts.end());
  AtomicMeasure eps;
  for (auto [th, w] : pts) {
    if (!eps.atoms.empty() && th - eps.atoms.back() <= 1e-7) eps.weights.back() += w;
    else eps.atoms.push_back(th), eps.weights.push_back(w);
  }
  return eps;
}

double circular_moment(const AtomicMeasure& eps, int k) {
  double s = 0;
  for (size_t i = 0; i < eps.atoms.size(); ++i) s += eps.weights[i] * std::cos(k * eps.atoms[i]);
  return s;
}

}  // namespace gsym
