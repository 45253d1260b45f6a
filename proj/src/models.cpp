#include "kin/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kin/constants.hpp"

namespace kin {

namespace {

struct Validator {
  void operator()(const Monoatomic& m) const {
    if (!std::isfinite(m.epsilon0)) throw std::invalid_argument("Monoatomic: epsilon0 not finite");
  }
  void operator()(const ContinuousPower& m) const {
    if (!(m.coeff > 0.0)) throw std::invalid_argument("ContinuousPower: coefficient must be > 0");
    if (!(m.alpha > -1.0)) throw std::invalid_argument("ContinuousPower: alpha must be > -1");
    if (!std::isfinite(m.epsilon0))
      throw std::invalid_argument("ContinuousPower: epsilon0 not finite");
  }
  void operator()(const DiscreteLevels& m) const {
    if (m.levels.empty()) throw std::invalid_argument("DiscreteLevels: empty level list");
    for (const auto& l : m.levels) {
      if (!std::isfinite(l.energy)) throw std::invalid_argument("DiscreteLevels: energy not finite");
      if (!(l.degeneracy > 0.0))
        throw std::invalid_argument("DiscreteLevels: degeneracy must be > 0");
    }
  }
  void operator()(const QuadraticClassical& m) const {
    if (m.inertias.empty() || m.inertias.size() > 3)
      throw std::invalid_argument("QuadraticClassical: dimension must be 1, 2 or 3");
    for (double i : m.inertias)
      if (!(i > 0.0)) throw std::invalid_argument("QuadraticClassical: inertias must be > 0");
    if (!std::isfinite(m.epsilon0))
      throw std::invalid_argument("QuadraticClassical: epsilon0 not finite");
  }
  void operator()(const Product& m) const {
    if (m.children.empty()) throw std::invalid_argument("Product: empty child list");
    for (const auto& c : m.children) validate(c);
  }
};

struct GroundEnergy {
  double operator()(const Monoatomic& m) const { return m.epsilon0; }
  double operator()(const ContinuousPower& m) const { return m.epsilon0; }
  double operator()(const DiscreteLevels& m) const {
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& l : m.levels) lo = std::min(lo, l.energy);
    return lo;
  }
  double operator()(const QuadraticClassical& m) const { return m.epsilon0; }
  double operator()(const Product& m) const {
    double sum = 0.0;
    for (const auto& c : m.children) sum += ground_energy(c);
    return sum;
  }
};

// Smallest N with tail Gibbs mass below tol at the certification temperature,
// for a ladder with spacing gap starting at the ground level. The geometric
// tail sum_{n>N} e^{-n x} = e^{-(N+1)x}/(1-e^{-x}) is compared against the
// retained ground term 1/(1-e^{-x}).
int harmonic_truncation_count(double gap, const TruncationPolicy& policy) {
  const double x = gap / (codata::k_boltzmann * policy.certified_tmax);
  const int n = static_cast<int>(std::ceil(-std::log(policy.tail_tolerance) / x));
  if (n + 1 > policy.n_cap)
    throw std::invalid_argument("harmonic ladder: truncation exceeds the n scan cap");
  return std::max(n, 1);
}

DiscreteLevels harmonic_levels(double nu_e, const TruncationPolicy& policy) {
  const double gap = wavenumber_to_joule(nu_e);
  const int n_max = harmonic_truncation_count(gap, policy);
  DiscreteLevels d;
  d.levels.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) d.levels.push_back({gap * (n + 0.5), 1.0});
  return d;
}

DiscreteLevels morse_levels(const SpectroscopicConstants& sc) {
  const double x_e = sc.nu_e_x_e / sc.nu_e;
  if (x_e >= 0.5)
    throw std::invalid_argument("morse levels: nu_e_x_e >= nu_e/2 leaves no bound state");
  const int n_max = static_cast<int>(std::floor(1.0 / (2.0 * x_e))) - 1;
  DiscreteLevels d;
  d.levels.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double q = n + 0.5;
    d.levels.push_back({wavenumber_to_joule(sc.nu_e * q - sc.nu_e_x_e * q * q), 1.0});
  }
  return d;
}

DiscreteLevels rigid_rotor_levels(double B_over_hc, const TruncationPolicy& policy) {
  const double B = wavenumber_to_joule(B_over_hc);
  const double beta = 1.0 / (codata::k_boltzmann * policy.certified_tmax);
  DiscreteLevels d;
  double z_run = 0.0;
  for (int J = 0; J <= policy.j_cap; ++J) {
    const double e = B * J * (J + 1);
    const double g = 2.0 * J + 1.0;
    const double w = g * std::exp(-beta * e);
    if (J > 0 && w < policy.tail_tolerance * z_run) return d;
    z_run += w;
    d.levels.push_back({e, g});
  }
  throw std::invalid_argument("rigid rotor ladder: truncation exceeds the J scan cap");
}

} // namespace

void validate(const InternalModel& model) { std::visit(Validator{}, model); }

double ground_energy(const InternalModel& model) { return std::visit(GroundEnergy{}, model); }

InternalModel product(std::vector<InternalModel> children) {
  Product p{std::move(children)};
  validate(InternalModel{p});
  return p;
}

void SpectroscopicConstants::validate() const {
  if (!(nu_e > 0.0) || !(nu_e_x_e > 0.0) || !(B_over_hc > 0.0) || !(alpha_over_hc > 0.0) ||
      !(D_over_hc > 0.0))
    throw std::invalid_argument("SpectroscopicConstants: all constants must be positive");
  if (!(nu_e_x_e < nu_e))
    throw std::invalid_argument("SpectroscopicConstants: nu_e_x_e must be smaller than nu_e");
}

double rovib_energy(const SpectroscopicConstants& sc, int J, int n) {
  const double q = n + 0.5;
  const double jj = static_cast<double>(J) * (J + 1);
  const double rot = (sc.B_over_hc - sc.alpha_over_hc * q) * jj - sc.D_over_hc * jj * jj;
  const double vib = sc.nu_e * q - sc.nu_e_x_e * q * q;
  return wavenumber_to_joule(rot + vib);
}

std::vector<std::pair<int, int>> bound_states(const SpectroscopicConstants& sc, int j_cap,
                                              int n_cap) {
  sc.validate();
  if (j_cap <= 0 || n_cap <= 0) throw std::invalid_argument("bound_states: caps must be positive");
  std::vector<std::pair<int, int>> out;
  bool j_boundary_hit = false, n_boundary_hit = false;
  for (int J = 0; J <= j_cap; ++J) {
    for (int n = 0; n <= n_cap; ++n) {
      const double e = rovib_energy(sc, J, n);
      // Rising-energy criteria: backward difference in J (skipped at J = 0),
      // forward difference in n. The forward form is what makes the Morse
      // ladder cut off at n = floor(1/(2 x_e)) - 1, matching the standalone
      // anharmonic-ladder truncation.
      const bool rot_ok = (J == 0) || e >= rovib_energy(sc, J - 1, n);
      const bool vib_ok = rovib_energy(sc, J, n + 1) >= e;
      if (rot_ok && vib_ok) {
        out.emplace_back(J, n);
        if (J == j_cap) j_boundary_hit = true;
        if (n == n_cap) n_boundary_hit = true;
      }
    }
  }
  if (j_boundary_hit || n_boundary_hit)
    throw std::invalid_argument("bound_states: scan caps too small to close the bound set");
  return out;
}

InternalModel build_hf_model(int variant, const SpectroscopicConstants& sc, double inertia,
                             const TruncationPolicy& policy) {
  sc.validate();
  if (!(inertia > 0.0)) throw std::invalid_argument("build_hf_model: inertia must be positive");
  switch (variant) {
    case 1: {
      QuadraticClassical rotor{{inertia, inertia}, 0.0};
      return product({rotor, harmonic_levels(sc.nu_e, policy)});
    }
    case 2: {
      QuadraticClassical rotor{{inertia, inertia}, 0.0};
      return product({rotor, morse_levels(sc)});
    }
    case 3:
      return product({rigid_rotor_levels(sc.B_over_hc, policy), harmonic_levels(sc.nu_e, policy)});
    case 4: {
      const double x_e = sc.nu_e_x_e / sc.nu_e;
      if (x_e >= 0.5)
        throw std::invalid_argument("build_hf_model: nu_e_x_e >= nu_e/2 leaves no bound state");
      const int n_scan = static_cast<int>(std::floor(1.0 / (2.0 * x_e))) + 1;
      const auto states = bound_states(sc, policy.j_cap, n_scan);
      DiscreteLevels d;
      d.levels.reserve(states.size());
      for (const auto& [J, n] : states)
        d.levels.push_back({rovib_energy(sc, J, n), 2.0 * J + 1.0});
      return d;
    }
    default:
      throw std::invalid_argument("build_hf_model: variant must be 1, 2, 3 or 4");
  }
}

} // namespace kin
