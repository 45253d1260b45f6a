#include "kin/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kin/special_functions.hpp"

namespace kin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Gamma(a) / beta^a without overflow; log-space because beta can be ~1e20
// (1/k_B T in SI) and a can be a few tens.
double gamma_over_pow(double a, double beta) {
  return std::exp(std::lgamma(a) - a * std::log(beta));
}

double support_min(const std::vector<Atom>& atoms, const std::vector<PowerTerm>& terms) {
  double lo = kInf;
  for (const auto& a : atoms) lo = std::min(lo, a.location);
  for (const auto& t : terms) lo = std::min(lo, t.shift);
  return lo;
}

void validate_entries(const std::vector<Atom>& atoms, const std::vector<PowerTerm>& terms,
                      bool require_grounded) {
  if (atoms.empty() && terms.empty())
    throw std::invalid_argument("EnergyMeasure: empty measure (mu(E) != 0 required)");
  for (const auto& a : atoms) {
    if (!std::isfinite(a.location) || a.location < 0.0)
      throw std::invalid_argument("Atom: location must be finite and >= 0");
    if (!(a.mass > 0.0) || !std::isfinite(a.mass))
      throw std::invalid_argument("Atom: mass must be positive");
  }
  for (const auto& t : terms) {
    if (!(t.coeff > 0.0) || !std::isfinite(t.coeff))
      throw std::invalid_argument("PowerTerm: coefficient must be positive");
    if (!std::isfinite(t.shift) || t.shift < 0.0)
      throw std::invalid_argument("PowerTerm: shift must be finite and >= 0");
    if (!(t.exponent > -1.0) || !std::isfinite(t.exponent))
      throw std::invalid_argument("PowerTerm: exponent must be > -1 (Z diverges otherwise)");
  }
  if (require_grounded && support_min(atoms, terms) != 0.0)
    throw std::invalid_argument("EnergyMeasure: not grounded (support infimum must be 0)");
}

// Merge atoms closer than 1e-12 of the largest location; keeps the ground
// atom pinned at exactly zero so the grounded invariant survives merging.
std::vector<Atom> merge_close_atoms(std::vector<Atom> atoms) {
  if (atoms.size() < 2) return atoms;
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  double scale = atoms.back().location;
  const double tol = 1e-12 * scale;
  std::vector<Atom> out;
  out.reserve(atoms.size());
  std::size_t i = 0;
  while (i < atoms.size()) {
    double mass = atoms[i].mass;
    double moment = atoms[i].mass * atoms[i].location;
    const double anchor = atoms[i].location;
    std::size_t j = i + 1;
    while (j < atoms.size() && atoms[j].location - anchor <= tol) {
      mass += atoms[j].mass;
      moment += atoms[j].mass * atoms[j].location;
      ++j;
    }
    double loc = moment / mass;
    if (anchor == 0.0) loc = 0.0;
    out.push_back({loc, mass});
    i = j;
  }
  return out;
}

} // namespace

EnergyMeasure::EnergyMeasure(double ground_offset, std::vector<Atom> atoms,
                             std::vector<PowerTerm> terms)
    : ground_offset_(ground_offset), atoms_(std::move(atoms)), terms_(std::move(terms)) {
  if (!std::isfinite(ground_offset_))
    throw std::invalid_argument("EnergyMeasure: ground offset must be finite");
  validate_entries(atoms_, terms_, /*require_grounded=*/true);
}

double EnergyMeasure::laplace_moment(int k, double beta) const {
  if (!(beta > 0.0)) throw std::domain_error("laplace_moment: beta must be positive");
  if (k < 0) throw std::domain_error("laplace_moment: k must be nonnegative");
  double sum = 0.0;
  for (const auto& a : atoms_) {
    double p = 1.0;
    for (int j = 0; j < k; ++j) p *= a.location;
    sum += a.mass * p * std::exp(-beta * a.location);
  }
  // Term (c,s,alpha): integral of (s+x)^k x^alpha e^{-beta(s+x)} dx expanded
  // binomially, each piece a Gamma integral in closed form.
  for (const auto& t : terms_) {
    const double damp = std::exp(-beta * t.shift);
    double binom = 1.0; // C(k, j)
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) {
      acc += binom * std::pow(t.shift, k - j) * gamma_over_pow(t.exponent + 1.0 + j, beta);
      binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
    }
    sum += t.coeff * damp * acc;
  }
  return sum;
}

double EnergyMeasure::density_at(double I) const {
  if (I < 0.0) throw std::domain_error("density_at: energy must be nonnegative");
  double d = 0.0;
  for (const auto& t : terms_)
    if (I >= t.shift) d += t.coeff * std::pow(I - t.shift, t.exponent);
  return d;
}

double EnergyMeasure::mass_between(double lo, double hi) const {
  if (hi < lo) throw std::domain_error("mass_between: hi < lo");
  double m = 0.0;
  for (const auto& a : atoms_)
    if (a.location >= lo && a.location < hi) m += a.mass;
  for (const auto& t : terms_) {
    const double a1 = t.exponent + 1.0;
    const double u_lo = std::max(lo, t.shift) - t.shift;
    if (hi == kInf) return kInf;
    const double u_hi = hi - t.shift;
    if (u_hi <= 0.0 || u_hi <= u_lo) continue;
    m += t.coeff / a1 * (std::pow(u_hi, a1) - std::pow(u_lo, a1));
  }
  return m;
}

double EnergyMeasure::first_moment_between(double lo, double hi) const {
  if (hi < lo) throw std::domain_error("first_moment_between: hi < lo");
  double m = 0.0;
  for (const auto& a : atoms_)
    if (a.location >= lo && a.location < hi) m += a.mass * a.location;
  for (const auto& t : terms_) {
    // integral of (u+s) c u^alpha du = c [u^(a+2)/(a+2) + s u^(a+1)/(a+1)]
    const double a1 = t.exponent + 1.0;
    const double a2 = t.exponent + 2.0;
    const double u_lo = std::max(lo, t.shift) - t.shift;
    if (hi == kInf) return kInf;
    const double u_hi = hi - t.shift;
    if (u_hi <= 0.0 || u_hi <= u_lo) continue;
    m += t.coeff * ((std::pow(u_hi, a2) - std::pow(u_lo, a2)) / a2 +
                    t.shift * (std::pow(u_hi, a1) - std::pow(u_lo, a1)) / a1);
  }
  return m;
}

double EnergyMeasure::weighted_mass_below(double x, double beta) const {
  if (!(beta > 0.0)) throw std::domain_error("weighted_mass_below: beta must be positive");
  if (x < 0.0) return 0.0;
  double m = 0.0;
  for (const auto& a : atoms_)
    if (a.location <= x) m += a.mass * std::exp(-beta * a.location);
  for (const auto& t : terms_) {
    if (x <= t.shift) continue;
    const double a1 = t.exponent + 1.0;
    m += t.coeff * std::exp(-beta * t.shift) * gamma_over_pow(a1, beta) *
         gamma_p(a1, beta * (x - t.shift));
  }
  return m;
}

EnergyMeasure ground(double offset, std::vector<Atom> atoms, std::vector<PowerTerm> terms) {
  validate_entries(atoms, terms, /*require_grounded=*/false);
  const double lo = support_min(atoms, terms);
  if (!std::isfinite(lo)) throw std::invalid_argument("ground: support infimum must be finite");
  if (lo != 0.0) {
    // The attaining element becomes exactly 0 (IEEE x - x == 0); the others
    // stay nonnegative, so the grounded invariant holds exactly.
    for (auto& a : atoms) a.location -= lo;
    for (auto& t : terms) t.shift -= lo;
  }
  return EnergyMeasure(offset + lo, std::move(atoms), std::move(terms));
}

EnergyMeasure convolve(const EnergyMeasure& a, const EnergyMeasure& b) {
  std::vector<Atom> atoms;
  std::vector<PowerTerm> terms;
  atoms.reserve(a.atoms().size() * b.atoms().size());

  for (const auto& pa : a.atoms())
    for (const auto& pb : b.atoms())
      atoms.push_back({pa.location + pb.location, pa.mass * pb.mass});

  for (const auto& pa : a.atoms())
    for (const auto& tb : b.terms())
      terms.push_back({pa.mass * tb.coeff, tb.shift + pa.location, tb.exponent});
  for (const auto& ta : a.terms())
    for (const auto& pb : b.atoms())
      terms.push_back({pb.mass * ta.coeff, ta.shift + pb.location, ta.exponent});

  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      const double c = ta.coeff * tb.coeff *
                       std::exp(log_beta(ta.exponent + 1.0, tb.exponent + 1.0));
      terms.push_back({c, ta.shift + tb.shift, ta.exponent + tb.exponent + 1.0});
    }

  atoms = merge_close_atoms(std::move(atoms));
  // Grounded inputs have support minima exactly 0, so the result's minimum
  // pair sum is exactly 0 and the constructor invariant holds by construction.
  return EnergyMeasure(a.ground_offset() + b.ground_offset(), std::move(atoms), std::move(terms));
}

} // namespace kin
