#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "kin/constants.hpp"
#include "kin/models.hpp"

using namespace kin;

namespace {

// CRC spectroscopy constants for 1H19F, all cm^-1.
SpectroscopicConstants hf_constants() { return {4138.39, 89.94, 20.95, 0.793, 0.00215}; }
constexpr double kHFInertia = 1.336e-47; // kg m^2, from B = h/(8 pi^2 c B~)

const DiscreteLevels& vib_child(const InternalModel& m) {
  return std::get<DiscreteLevels>(std::get<Product>(m).children.at(1));
}

} // namespace

TEST_CASE("anharmonic ladder cuts off at N_max = 22 for the CRC constants") {
  const auto m = build_hf_model(2, hf_constants(), kHFInertia);
  const auto& vib = vib_child(m);
  CHECK(vib.levels.size() == 23); // n = 0..22
  // Monotonically increasing energies over the retained range.
  for (std::size_t n = 1; n < vib.levels.size(); ++n)
    CHECK(vib.levels[n].energy > vib.levels[n - 1].energy);
}

TEST_CASE("harmonic ladder has uniform spacing h c nu_e") {
  const auto m = build_hf_model(1, hf_constants(), kHFInertia);
  const auto& vib = vib_child(m);
  const double gap = wavenumber_to_joule(hf_constants().nu_e);
  REQUIRE(vib.levels.size() >= 20);
  for (std::size_t n = 1; n < vib.levels.size(); ++n)
    CHECK(vib.levels[n].energy - vib.levels[n - 1].energy ==
          doctest::Approx(gap).epsilon(1e-12));
  // Truncated tail Gibbs mass is certified below 1e-14 of Z at the policy
  // temperature (geometric series on the grounded ladder).
  const TruncationPolicy policy;
  const double x = gap / (codata::k_boltzmann * policy.certified_tmax);
  const double tail_over_z = std::exp(-x * static_cast<double>(vib.levels.size()));
  CHECK(tail_over_z < 1e-14);
}

TEST_CASE("simplified quantum model: state (J=1, n=0)") {
  const auto m = build_hf_model(3, hf_constants(), kHFInertia);
  const auto& rot = std::get<DiscreteLevels>(std::get<Product>(m).children.at(0));
  const auto& vib = vib_child(m);
  const double B = wavenumber_to_joule(hf_constants().B_over_hc);
  const double half_vib = 0.5 * wavenumber_to_joule(hf_constants().nu_e);
  REQUIRE(rot.levels.size() >= 2);
  CHECK(rot.levels[1].degeneracy == 3.0);
  CHECK(rot.levels[1].energy == doctest::Approx(2.0 * B).epsilon(1e-14));
  // Combined (J=1, n=0) energy is 2B + (1/2) h c nu_e.
  CHECK(rot.levels[1].energy + vib.levels[0].energy ==
        doctest::Approx(2.0 * B + half_vib).epsilon(1e-14));
}

TEST_CASE("bound state set") {
  const auto sc = hf_constants();
  const auto states = bound_states(sc, 200, 30);

  SUBCASE("(0,0) is always a member") {
    CHECK(std::find(states.begin(), states.end(), std::make_pair(0, 0)) != states.end());
  }

  SUBCASE("vibrational quantum number never exceeds N_max = 22") {
    for (const auto& [J, n] : states) {
      CHECK(n <= 22);
      CHECK(J <= 200);
    }
  }

  SUBCASE("membership matches direct energy comparisons on a 5x5 grid") {
    for (int J = 0; J < 5; ++J)
      for (int n = 0; n < 5; ++n) {
        const bool member =
            std::find(states.begin(), states.end(), std::make_pair(J, n)) != states.end();
        const bool rot_ok = (J == 0) || rovib_energy(sc, J, n) >= rovib_energy(sc, J - 1, n);
        const bool vib_ok = rovib_energy(sc, J, n + 1) >= rovib_energy(sc, J, n);
        CHECK(member == (rot_ok && vib_ok));
      }
  }

  SUBCASE("set is finite and closed well before the caps") {
    const int j_max = std::max_element(states.begin(), states.end())->first;
    CHECK(j_max < 150);
  }

  SUBCASE("too-small caps are reported") {
    CHECK_THROWS_AS(bound_states(sc, 5, 30), std::invalid_argument);
    CHECK_THROWS_AS(bound_states(sc, 200, 3), std::invalid_argument);
  }
}

TEST_CASE("variants 2 and 4 have bounded energies") {
  for (int variant : {2, 4}) {
    const auto m = build_hf_model(variant, hf_constants(), kHFInertia);
    const DiscreteLevels& d =
        (variant == 2) ? vib_child(m) : std::get<DiscreteLevels>(m);
    double top = 0.0;
    for (const auto& l : d.levels) top = std::max(top, l.energy);
    CHECK(std::isfinite(top));
    // Below the Morse dissociation scale h c nu_e / (4 x_e).
    const double d_e = wavenumber_to_joule(hf_constants().nu_e * hf_constants().nu_e /
                                           (4.0 * hf_constants().nu_e_x_e));
    CHECK(top < d_e);
  }
}

TEST_CASE("product composition") {
  const Monoatomic a{3.0e-21};
  const ContinuousPower b{1.0, 0.5, 1.0e-21};
  const auto p = product({a, b});
  CHECK(ground_energy(p) == doctest::Approx(4.0e-21));
  CHECK_THROWS_AS(product({}), std::invalid_argument);

  // Ground energy of the harmonic semi-classical model is the vibrational
  // zero point (the rotor ground is zero).
  const auto hf1 = build_hf_model(1, hf_constants(), kHFInertia);
  CHECK(ground_energy(hf1) ==
        doctest::Approx(0.5 * wavenumber_to_joule(hf_constants().nu_e)).epsilon(1e-14));
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(validate(InternalModel(DiscreteLevels{})), std::invalid_argument);
  CHECK_THROWS_AS(validate(InternalModel(DiscreteLevels{{{1.0, 0.0}}})), std::invalid_argument);
  CHECK_THROWS_AS(validate(InternalModel(QuadraticClassical{{1.0, 1.0, 1.0, 1.0}, 0.0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(InternalModel(ContinuousPower{1.0, -1.5, 0.0})),
                  std::invalid_argument);

  SpectroscopicConstants bad = hf_constants();
  bad.nu_e_x_e = bad.nu_e; // not anharmonic enough to bind anything
  CHECK_THROWS_AS(build_hf_model(2, bad, kHFInertia), std::invalid_argument);

  SpectroscopicConstants no_bound = hf_constants();
  no_bound.nu_e_x_e = 0.6 * no_bound.nu_e; // x_e > 1/2: no bound state
  CHECK_THROWS_AS(build_hf_model(2, no_bound, kHFInertia), std::invalid_argument);
  CHECK_THROWS_AS(build_hf_model(4, no_bound, kHFInertia), std::invalid_argument);

  CHECK_THROWS_AS(build_hf_model(5, hf_constants(), kHFInertia), std::invalid_argument);
  CHECK_THROWS_AS(build_hf_model(1, hf_constants(), -1.0), std::invalid_argument);
}
