#pragma once

#include <vector>

#include "kin/measure.hpp"
#include "kin/models.hpp"

namespace kin {

// Reduce a state-based model to its energy measure: the image of the state
// measure under the grounded energy map. Every thermodynamic and kinetic
// quantity downstream depends on the model only through this measure.
//   Monoatomic          -> unit atom at 0
//   ContinuousPower     -> power term (coeff, 0, alpha)
//   DiscreteLevels      -> atoms at eps_q - eps0 with the degeneracies
//   QuadraticClassical  -> power term C_d * I^(d/2 - 1); equal inertias for
//                          d = 3 (the triaxial case is not representable),
//                          d = 2 admits distinct inertias via their geometric
//                          mean, d = 1 is a single inertia
//   Product             -> convolution of the children's reductions
// Ground offsets accumulate so the absolute energy scale survives reduction.
EnergyMeasure reduce(const InternalModel& model);

// Density of the absolutely continuous part of a reduced measure at I >= 0.
double density_at(const EnergyMeasure& measure, double I);

// Energy bins on the grounded axis. Edges start at 0 and increase strictly;
// with open_tail the last bin extends to infinity (only meaningful for purely
// atomic measures - density terms carry infinite mass there).
struct BinningSpec {
  std::vector<double> edges;
  bool open_tail = false;

  void validate() const;
};

// Uniform edges over [0, e_max] with n bins.
BinningSpec uniform_bins(int n, double e_max);

// Greedy 1D heuristic: edges at equal Gibbs-mass quantiles at temperature T.
// Not an optimal-transport solution, just a sensible adaptive placement.
BinningSpec gibbs_quantile_bins(const EnergyMeasure& measure, int n, double temperature,
                                double k_B);

// Collapse a measure into one discrete level per nonempty bin: level mass is
// the bin's measure, level energy the bin's mass-averaged energy plus the
// ground offset. Conserves total mass and first moment over the binned range
// exactly (closed-form integrals on both sides). Bins with zero mass are
// dropped. Throws invalid_argument when every bin is empty, when a closed
// binning leaves more than 1e-12 of the mass beyond the last edge, or when an
// open tail would have infinite mass.
DiscreteLevels bin(const EnergyMeasure& measure, const BinningSpec& spec);

} // namespace kin
