#pragma once

#include <utility>

#include "kin/vec3.hpp"

namespace kin {

// A choice of pre- and post-collision internal energies (absolute scale).
// Whether the collision can happen depends on the velocities through the
// energy gap below; the channel itself carries no admissibility state.
struct CollisionChannel {
  double eps_in1 = 0.0;
  double eps_in2 = 0.0;
  double eps_out1 = 0.0;
  double eps_out2 = 0.0;
};

// Maxwell-type kernel in the post-collision relative speed:
//   b = C sqrt(Delta) 1{Delta >= 0} = (C/2) |v' - v'_*|,
// independent of omega. Micro-reversibility |g| b(pre->post) =
// |g'| b(post->pre) holds identically (both sides C/2 |g||g'|), as does the
// pre/post pair-swap symmetry (Delta is symmetric in each pair). The exact
// per-channel majorant sqrt(Delta) <= sqrt(Delta_max) with ground-state post
// energies is what makes acceptance sampling in the simulator exact.
struct KernelSpec {
  double rate_constant = 1.0; // C > 0
};

// Energy gap Delta = |v - v_*|^2 / 4 + (eps + eps_* - eps' - eps'_*) / m.
// The collision is admissible exactly when Delta >= 0.
double delta_energy(const Vec3& v, const Vec3& v_star, const CollisionChannel& channel,
                    double mass);

inline bool admissible(const Vec3& v, const Vec3& v_star, const CollisionChannel& channel,
                       double mass) {
  return delta_energy(v, v_star, channel, mass) >= 0.0;
}

// Post-collision velocities:
//   v'      = (v + v_*)/2 + sqrt(Delta) T_w[(v - v_*)/|v - v_*|]
//   v'_*    = (v + v_*)/2 - sqrt(Delta) T_w[(v - v_*)/|v - v_*|]
// with T_w[V] = V - 2 (w.V) w the reflection across the plane normal to w.
// Momentum and total energy are conserved to rounding; applying the map again
// with the reversed channel and the same w restores the inputs.
// Throws std::invalid_argument when Delta < 0 or v == v_*.
std::pair<Vec3, Vec3> scatter(const Vec3& v, const Vec3& v_star, const CollisionChannel& channel,
                              const Vec3& omega, double mass);

// Jacobian of the velocity transform, |v' - v'_*| / |v - v_*| = 2 sqrt(Delta)/|g|.
// Requires Delta > 0 and v != v_*.
double jacobian(const Vec3& v, const Vec3& v_star, const CollisionChannel& channel, double mass);

// C sqrt(Delta) for admissible channels, 0 otherwise; omega enters the
// signature for kernel generality but this kind is isotropic.
double kernel_value(const KernelSpec& spec, const Vec3& v, const Vec3& v_star,
                    const CollisionChannel& channel, const Vec3& omega, double mass);

} // namespace kin
