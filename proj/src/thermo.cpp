#include "kin/thermo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace kin {

namespace {
constexpr double kTableTmin = 1.0;
constexpr double kTableTmax = 1.0e7;
constexpr int kTablePoints = 257;
constexpr double kTwoPi = 6.28318530717958647692;
} // namespace

ThermoModel::ThermoModel(EnergyMeasure measure, PhysicalConstants constants)
    : measure_(std::move(measure)), constants_(constants) {
  constants_.validate();

  if (measure_.purely_atomic() && measure_.atoms().size() == 1) {
    constant_delta_ = 0.0; // lone atom sits at zero by groundedness
  } else if (measure_.atoms().empty() && measure_.terms().size() == 1 &&
             measure_.terms()[0].shift == 0.0) {
    constant_delta_ = 2.0 * (measure_.terms()[0].exponent + 1.0);
  }

  table_T_.resize(kTablePoints);
  table_theta_.resize(kTablePoints);
  const double log_lo = std::log(kTableTmin), log_hi = std::log(kTableTmax);
  for (int i = 0; i < kTablePoints; ++i) {
    const double T = std::exp(log_lo + (log_hi - log_lo) * i / (kTablePoints - 1));
    table_T_[i] = T;
    table_theta_[i] = theta(T);
    if (i > 0 && !(table_theta_[i] > table_theta_[i - 1]))
      throw std::runtime_error("ThermoModel: Theta table is not strictly increasing");
  }
}

double ThermoModel::partition_Z(double beta) const {
  if (!(beta > 0.0)) throw std::domain_error("partition_Z: beta must be positive");
  return measure_.laplace_moment(0, beta);
}

double ThermoModel::delta_dof(double temperature) const {
  if (!(temperature > 0.0)) throw std::domain_error("delta_dof: temperature must be positive");
  if (constant_delta_) return *constant_delta_;
  const double beta = beta_of(temperature);
  const double z = measure_.laplace_moment(0, beta);
  const double m1 = measure_.laplace_moment(1, beta);
  return 2.0 * beta * m1 / z;
}

ThermoModel::HeatCapacity ThermoModel::heat_capacity(double temperature) const {
  if (!(temperature > 0.0)) throw std::domain_error("heat_capacity: temperature must be positive");
  double D;
  if (constant_delta_) {
    D = *constant_delta_;
  } else {
    const double beta = beta_of(temperature);
    const double z = measure_.laplace_moment(0, beta);
    const double mean = measure_.laplace_moment(1, beta) / z;
    const double msq = measure_.laplace_moment(2, beta) / z;
    // Gibbs variance; clamp the tiny negative round-off a difference of
    // near-equal moments can produce.
    D = std::max(0.0, 2.0 * (msq - mean * mean) * beta * beta);
  }
  return {D, 0.5 * (3.0 + D)};
}

double ThermoModel::theta(double temperature) const {
  if (temperature < 0.0) throw std::domain_error("theta: temperature must be nonnegative");
  if (temperature == 0.0) return 0.0;
  const double kT = constants_.k_B * temperature;
  return 1.5 * kT + 0.5 * kT * delta_dof(temperature);
}

double ThermoModel::theta_inv(double energy) const {
  if (energy < 0.0) throw std::domain_error("theta_inv: energy must be nonnegative");
  if (energy == 0.0) return 0.0;
  if (constant_delta_) return energy / ((1.5 + 0.5 * *constant_delta_) * constants_.k_B);

  // Theta(T) >= (3/2) k_B T gives a guaranteed upper bracket.
  double hi = energy / (1.5 * constants_.k_B);
  double lo = hi;
  while (theta(lo) > energy) {
    lo *= 0.5;
    if (lo < 1e-300) return 0.0;
  }
  // Seed from the cached table when it brackets the target.
  if (energy > table_theta_.front() && energy < table_theta_.back()) {
    auto it = std::lower_bound(table_theta_.begin(), table_theta_.end(), energy);
    const std::size_t i = static_cast<std::size_t>(it - table_theta_.begin());
    lo = std::max(lo, table_T_[i - 1]);
    hi = std::min(hi, table_T_[i]);
  }

  // Bisection to ~1e-3 relative, then Newton with Theta' = c_V k_B, which is
  // safe because c_V >= 3/2 bounds the slope away from zero.
  for (int it = 0; it < 60 && (hi - lo) > 1e-3 * lo; ++it) {
    const double mid = 0.5 * (lo + hi);
    (theta(mid) < energy ? lo : hi) = mid;
  }
  double T = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double f = theta(T) - energy;
    const double slope = heat_capacity(T).cV * constants_.k_B;
    double next = T - f / slope;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    (theta(next) < energy ? lo : hi) = next;
    if (std::fabs(next - T) <= 1e-14 * T) return next;
    T = next;
  }
  return T;
}

double ThermoModel::equilibrium_energy(const Vec3& u, double temperature) const {
  if (!(temperature > 0.0))
    throw std::domain_error("equilibrium_energy: temperature must be positive");
  const double kT = constants_.k_B * temperature;
  return epsilon0() + 0.5 * constants_.molecular_mass * norm2(u) +
         0.5 * (3.0 + delta_dof(temperature)) * kT;
}

GibbsSample ThermoModel::gibbs_sample(double temperature, Rng& rng) const {
  if (!(temperature > 0.0)) throw std::domain_error("gibbs_sample: temperature must be positive");
  const double beta = beta_of(temperature);
  const auto& atoms = measure_.atoms();
  const auto& terms = measure_.terms();

  // Component weights are the partial partition functions.
  double total = 0.0;
  std::vector<double> cumulative;
  cumulative.reserve(atoms.size() + terms.size());
  for (const auto& a : atoms) {
    total += a.mass * std::exp(-beta * a.location);
    cumulative.push_back(total);
  }
  for (const auto& t : terms) {
    total += t.coeff * std::exp(-beta * t.shift +
                                std::lgamma(t.exponent + 1.0) -
                                (t.exponent + 1.0) * std::log(beta));
    cumulative.push_back(total);
  }

  const double pick = rng.uniform() * total;
  std::size_t idx = 0;
  while (idx + 1 < cumulative.size() && cumulative[idx] <= pick) ++idx;

  if (idx < atoms.size()) {
    GibbsSample s{atoms[idx].location, std::nullopt};
    if (measure_.purely_atomic()) s.level = static_cast<int>(idx);
    return s;
  }
  const auto& t = terms[idx - atoms.size()];
  std::gamma_distribution<double> gamma(t.exponent + 1.0, 1.0 / beta);
  return {t.shift + gamma(rng), std::nullopt};
}

double ThermoModel::maxwellian_density(double rho, const Vec3& u, double temperature,
                                       const Vec3& v, double ebar) const {
  if (!(rho > 0.0)) throw std::domain_error("maxwellian_density: rho must be positive");
  if (!(temperature > 0.0))
    throw std::domain_error("maxwellian_density: temperature must be positive");
  if (ebar < 0.0) throw std::domain_error("maxwellian_density: ebar must be nonnegative");
  const double m = constants_.molecular_mass;
  const double kT = constants_.k_B * temperature;
  const double z = partition_Z(1.0 / kT);
  return rho * std::sqrt(m) * std::pow(kTwoPi * kT, -1.5) / z *
         std::exp(-0.5 * m * norm2(v - u) / kT - ebar / kT);
}

} // namespace kin
