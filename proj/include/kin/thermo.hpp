#pragma once

#include <optional>
#include <vector>

#include "kin/constants.hpp"
#include "kin/measure.hpp"
#include "kin/rng.hpp"
#include "kin/vec3.hpp"

namespace kin {

struct GibbsSample {
  double ebar = 0.0;              // grounded energy, J
  std::optional<int> level;       // atom index, set for purely atomic measures
};

// Equilibrium thermodynamics on a reduced measure. All temperature-side
// quantities flow through three closed-form exponential moments of the
// measure, so there is no quadrature anywhere in here.
//
//   Z(beta)   partition function
//   delta(T)  internal degrees of freedom, 2 <ebar>/k_B T under the Gibbs law
//   D(T)      2 Var(ebar/k_B T); c_V = (3 + D)/2
//   Theta(T)  cumulative specific heat integral k_B int_0^T c_V; evaluated
//             through the identity Theta = (3/2) k_B T + (k_B T/2) delta(T),
//             exact because delta(T) = (1/T) int_0^T D
//   Theta^-1  the temperature map used to define T from mean energies
//
// Immutable after construction; concurrent reads are safe. Sampling takes a
// caller-owned RNG.
class ThermoModel {
public:
  ThermoModel(EnergyMeasure measure, PhysicalConstants constants);

  const EnergyMeasure& measure() const { return measure_; }
  const PhysicalConstants& constants() const { return constants_; }
  double epsilon0() const { return measure_.ground_offset(); }

  double partition_Z(double beta) const;

  double delta_dof(double temperature) const;

  struct HeatCapacity {
    double D = 0.0;
    double cV = 1.5;
  };
  HeatCapacity heat_capacity(double temperature) const;

  double theta(double temperature) const;
  double theta_inv(double energy) const;

  // Polytropic fast path: delta independent of T (single atom at zero or a
  // single unshifted power term); theta_inv is then linear.
  std::optional<double> constant_delta() const { return constant_delta_; }

  double equilibrium_energy(const Vec3& u, double temperature) const;

  GibbsSample gibbs_sample(double temperature, Rng& rng) const;

  // Phase-space density of the Maxwellian M[rho,u,T] at (v, ebar).
  double maxwellian_density(double rho, const Vec3& u, double temperature, const Vec3& v,
                            double ebar) const;

  // Monotone cached map T -> Theta(T) over [1, 1e7] K (log-spaced); exposed
  // for bracket seeding and monotonicity checks. Queries outside the range
  // are computed directly.
  const std::vector<double>& theta_table_temperatures() const { return table_T_; }
  const std::vector<double>& theta_table_values() const { return table_theta_; }

private:
  double beta_of(double temperature) const { return 1.0 / (constants_.k_B * temperature); }

  EnergyMeasure measure_;
  PhysicalConstants constants_;
  std::optional<double> constant_delta_;
  std::vector<double> table_T_, table_theta_;
};

} // namespace kin
