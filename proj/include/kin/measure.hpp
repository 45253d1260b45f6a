#pragma once

#include <vector>

namespace kin {

// Dirac mass on the grounded energy axis.
struct Atom {
  double location = 0.0; // J, >= 0
  double mass = 0.0;     // dimensionless degeneracy weight, > 0
};

// Density coeff * (I - shift)^exponent on I >= shift. An exponent of -1 or
// below would make the partition function diverge at the shift and is
// rejected at construction.
struct PowerTerm {
  double coeff = 0.0;    // > 0
  double shift = 0.0;    // J, >= 0
  double exponent = 0.0; // > -1
};

// Measure on the nonnegative energy half-line: finitely many atoms plus
// shifted-power density terms. This class is closed under convolution and
// has closed-form exponential moments, which is what makes the reduced
// one-variable representation usable without quadrature.
//
// Grounded: the infimum of the support is exactly zero, i.e. the measure
// lives on the ebar = eps - eps0 scale; ground_offset carries eps0.
// Immutable after construction, safe to share across threads.
class EnergyMeasure {
public:
  EnergyMeasure(double ground_offset, std::vector<Atom> atoms, std::vector<PowerTerm> terms);

  double ground_offset() const { return ground_offset_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<PowerTerm>& terms() const { return terms_; }
  bool purely_atomic() const { return terms_.empty(); }

  // integral of ebar^k exp(-beta ebar) dmu, in closed form. beta > 0, k >= 0.
  // k = 0 is the partition function Z(beta).
  double laplace_moment(int k, double beta) const;

  // Absolutely continuous part at I >= 0 (atoms carry no density).
  double density_at(double I) const;

  // mu([lo,hi)) and integral of I dmu over [lo,hi); hi may be +infinity
  // (infinite for any measure with density terms).
  double mass_between(double lo, double hi) const;
  double first_moment_between(double lo, double hi) const;

  // integral of exp(-beta I) dmu over [0,x]; building block for Gibbs CDFs.
  double weighted_mass_below(double x, double beta) const;

private:
  double ground_offset_;
  std::vector<Atom> atoms_;
  std::vector<PowerTerm> terms_;
};

// Shift a raw description so the support infimum is exactly zero, moving the
// shift into the ground offset. Idempotent. Throws std::invalid_argument on
// an empty measure (mu(E) != 0 is required of an internal-state space).
EnergyMeasure ground(double offset, std::vector<Atom> atoms, std::vector<PowerTerm> terms);

// Convolution of measures; ground offsets add. Closed in this representation:
//   atom * atom -> atom at summed locations, masses multiplied
//   atom * term -> term shifted by the atom location, scaled by its mass
//   term * term -> term with exponents a1 + a2 + 1 and coefficient
//                  c1 c2 B(a1 + 1, a2 + 1)
// Result atoms closer than 1e-12 of the largest location are merged.
EnergyMeasure convolve(const EnergyMeasure& a, const EnergyMeasure& b);

} // namespace kin
