#include "kin/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kin {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Surface measure of S^{d-1}: 2, 2*pi, 4*pi for d = 1, 2, 3.
double sphere_measure(int d) {
  switch (d) {
    case 1: return 2.0;
    case 2: return 2.0 * kPi;
    case 3: return 4.0 * kPi;
  }
  throw std::invalid_argument("sphere_measure: dimension must be 1, 2 or 3");
}

struct Reducer {
  EnergyMeasure operator()(const Monoatomic& m) const {
    return EnergyMeasure(m.epsilon0, {{0.0, 1.0}}, {});
  }

  EnergyMeasure operator()(const ContinuousPower& m) const {
    return EnergyMeasure(m.epsilon0, {}, {{m.coeff, 0.0, m.alpha}});
  }

  EnergyMeasure operator()(const DiscreteLevels& m) const {
    double eps0 = kInf;
    for (const auto& l : m.levels) eps0 = std::min(eps0, l.energy);
    std::vector<Atom> atoms;
    atoms.reserve(m.levels.size());
    for (const auto& l : m.levels) {
      const double loc = l.energy - eps0;
      atoms.push_back({loc == 0.0 ? 0.0 : loc, l.degeneracy});
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    // Exactly coincident levels fold into one atom.
    std::vector<Atom> merged;
    for (const auto& a : atoms) {
      if (!merged.empty() && merged.back().location == a.location)
        merged.back().mass += a.mass;
      else
        merged.push_back(a);
    }
    return EnergyMeasure(eps0, std::move(merged), {});
  }

  EnergyMeasure operator()(const QuadraticClassical& m) const {
    const int d = static_cast<int>(m.inertias.size());
    double inertia_scale;
    if (d == 1) {
      inertia_scale = m.inertias[0];
    } else if (d == 2) {
      // Level sets are ellipses; only the geometric mean of the inertias
      // enters the (flat) image density.
      inertia_scale = std::sqrt(m.inertias[0] * m.inertias[1]);
    } else {
      const double i0 = m.inertias[0];
      for (double i : m.inertias)
        if (std::fabs(i - i0) > 1e-12 * i0)
          throw std::invalid_argument(
              "reduce: unequal inertias in d = 3 are unsupported (triaxial ellipsoid)");
      inertia_scale = i0;
    }
    const double c = std::pow(2.0, 0.5 * d - 1.0) * std::pow(inertia_scale, -0.5 * d) *
                     sphere_measure(d);
    return EnergyMeasure(m.epsilon0, {}, {{c, 0.0, 0.5 * d - 1.0}});
  }

  EnergyMeasure operator()(const Product& m) const {
    EnergyMeasure acc = reduce(m.children.front());
    for (std::size_t i = 1; i < m.children.size(); ++i) acc = convolve(acc, reduce(m.children[i]));
    return acc;
  }
};

} // namespace

EnergyMeasure reduce(const InternalModel& model) {
  validate(model);
  return std::visit(Reducer{}, model);
}

double density_at(const EnergyMeasure& measure, double I) { return measure.density_at(I); }

void BinningSpec::validate() const {
  if (edges.size() < 2) throw std::invalid_argument("BinningSpec: need at least two edges");
  if (edges.front() != 0.0) throw std::invalid_argument("BinningSpec: edges must start at 0");
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (!(edges[i] > edges[i - 1]))
      throw std::invalid_argument("BinningSpec: edges must increase strictly");
}

BinningSpec uniform_bins(int n, double e_max) {
  if (n < 1 || !(e_max > 0.0)) throw std::invalid_argument("uniform_bins: bad parameters");
  BinningSpec spec;
  spec.edges.resize(n + 1);
  for (int i = 0; i <= n; ++i) spec.edges[i] = e_max * static_cast<double>(i) / n;
  spec.edges[0] = 0.0;
  return spec;
}

BinningSpec gibbs_quantile_bins(const EnergyMeasure& measure, int n, double temperature,
                                double k_B) {
  if (n < 1 || !(temperature > 0.0) || !(k_B > 0.0))
    throw std::invalid_argument("gibbs_quantile_bins: bad parameters");
  const double beta = 1.0 / (k_B * temperature);
  // Cap the range where the Gibbs tail is ~e^-40 of the total.
  const double e_cap = 40.0 * k_B * temperature;
  const double total = measure.weighted_mass_below(e_cap, beta);
  if (!(total > 0.0)) throw std::invalid_argument("gibbs_quantile_bins: no mass below the cap");
  BinningSpec spec;
  spec.edges.push_back(0.0);
  for (int k = 1; k < n; ++k) {
    const double target = total * static_cast<double>(k) / n;
    double lo = 0.0, hi = e_cap;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (measure.weighted_mass_below(mid, beta) < target ? lo : hi) = mid;
    }
    const double edge = 0.5 * (lo + hi);
    if (edge > spec.edges.back()) spec.edges.push_back(edge);
  }
  if (e_cap > spec.edges.back()) spec.edges.push_back(e_cap);
  return spec;
}

DiscreteLevels bin(const EnergyMeasure& measure, const BinningSpec& spec) {
  spec.validate();
  const auto& e = spec.edges;
  const double eps0 = measure.ground_offset();

  if (spec.open_tail && !measure.terms().empty())
    throw std::invalid_argument("bin: open tail bin has infinite mass for density terms");
  if (!spec.open_tail) {
    // Dropped atoms are a hard error; the power-density tail is infinite in
    // raw mass by construction, so its truncation is governed by the caller's
    // choice of last edge (40 k_B T_ref leaves a Gibbs tail below e^-40).
    const double inside = measure.mass_between(0.0, e.back());
    if (!(inside > 0.0)) throw std::invalid_argument("bin: no mass below the last edge");
    double atom_beyond = 0.0;
    for (const auto& a : measure.atoms())
      if (a.location >= e.back()) atom_beyond += a.mass;
    if (atom_beyond > 1e-12 * inside)
      throw std::invalid_argument("bin: atom mass beyond the last edge exceeds 1e-12 of the "
                                  "total; extend the edges or use an open tail");
  }

  DiscreteLevels out;
  const std::size_t n_bins = e.size() - 1 + (spec.open_tail ? 1 : 0);
  for (std::size_t k = 0; k < n_bins; ++k) {
    const double lo = e[k];
    const double hi = (k + 1 < e.size()) ? e[k + 1] : kInf;
    const double r = measure.mass_between(lo, hi);
    if (r == 0.0) continue; // empty bins are dropped
    if (std::isinf(r)) throw std::invalid_argument("bin: infinite mass in a bin");
    const double mean = measure.first_moment_between(lo, hi) / r;
    out.levels.push_back({eps0 + mean, r});
  }
  if (out.levels.empty()) throw std::invalid_argument("bin: every bin is empty");
  return out;
}

} // namespace kin
