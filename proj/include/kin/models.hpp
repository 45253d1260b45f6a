#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace kin {

// State-based descriptions of a molecule's internal structure. These are the
// constructors' view; thermodynamics and simulation consume the reduced
// energy measure (see kin/reduction.hpp). Values are immutable in practice:
// build once, share freely.

struct Monoatomic {
  double epsilon0 = 0.0; // J
};

// Continuous internal energy with weight phi(I) = coeff * I^alpha.
struct ContinuousPower {
  double coeff = 1.0;  // > 0
  double alpha = 0.0;  // > -1
  double epsilon0 = 0.0;
};

struct Level {
  double energy = 0.0;     // J, absolute scale
  double degeneracy = 1.0; // > 0
};

// Finite level list; the ground energy is the minimum level energy.
struct DiscreteLevels {
  std::vector<Level> levels;
};

// Classical rigid rotor, eps(z) = 1/2 sum_i inertia_i z_i^2 over angular
// velocities z in R^d, d in {1,2,3}.
struct QuadraticClassical {
  std::vector<double> inertias; // kg m^2, all > 0
  double epsilon0 = 0.0;
};

struct Product;

using InternalModel =
    std::variant<Monoatomic, ContinuousPower, DiscreteLevels, QuadraticClassical, Product>;

struct Product {
  std::vector<InternalModel> children;
};

// Throws std::invalid_argument on any violated invariant (empty level lists,
// nonpositive degeneracies, rotor dimension outside {1,2,3}, ...).
void validate(const InternalModel& model);

// Essential infimum of the energy over the model's states; sums over products.
double ground_energy(const InternalModel& model);

// Product composition; the ground energy is the sum of the children's.
InternalModel product(std::vector<InternalModel> children);

// Diatomic spectroscopic constants, all as wavenumbers (cm^-1).
struct SpectroscopicConstants {
  double nu_e = 0.0;         // vibrational constant
  double nu_e_x_e = 0.0;     // anharmonicity correction, < nu_e
  double B_over_hc = 0.0;    // rotational constant
  double alpha_over_hc = 0.0; // rotation-vibration coupling
  double D_over_hc = 0.0;    // centrifugal distortion

  void validate() const;
};

// Controls truncation of infinite ladders. Truncated tails carry Gibbs mass
// below tail_tolerance for every temperature up to certified_tmax.
struct TruncationPolicy {
  double certified_tmax = 2.0e4; // K
  double tail_tolerance = 1e-14;
  int j_cap = 200;   // scan cap for rotational ladders
  int n_cap = 4000;  // scan cap for vibrational ladders
};

// The four diatomic-molecule variants:
//   1 harmonic semi-classical: classical 2D rotor x harmonic oscillator
//   2 anharmonic semi-classical: classical 2D rotor x Morse levels
//   3 simplified quantum: rigid-rotor ladder x harmonic oscillator
//   4 improved quantum: coupled rotation-vibration levels on the bound set
// inertia (kg m^2) feeds the classical rotor of variants 1-2; it does not
// affect degrees of freedom, only the reduced measure's density scale.
InternalModel build_hf_model(int variant, const SpectroscopicConstants& sc, double inertia,
                             const TruncationPolicy& policy = {});

// Bound states of the coupled rotation-vibration energy: pairs (J,n) whose
// energy is nondecreasing in J and nonincreasing in n relative to their
// neighbors. The conditions are skipped at J = 0 / n = 0, so (0,0) is always
// a member. Throws if the scan caps clip the set.
std::vector<std::pair<int, int>> bound_states(const SpectroscopicConstants& sc, int j_cap,
                                              int n_cap);

// Coupled rotation-vibration energy (J, absolute scale) used by variant 4.
double rovib_energy(const SpectroscopicConstants& sc, int J, int n);

} // namespace kin
