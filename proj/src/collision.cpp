#include "kin/collision.hpp"

#include <cmath>
#include <stdexcept>

namespace kin {

double delta_energy(const Vec3& v, const Vec3& v_star, const CollisionChannel& channel,
                    double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("delta_energy: mass must be positive");
  const double g2 = norm2(v - v_star);
  return 0.25 * g2 +
         (channel.eps_in1 + channel.eps_in2 - channel.eps_out1 - channel.eps_out2) / mass;
}

std::pair<Vec3, Vec3> scatter(const Vec3& v, const Vec3& v_star, const CollisionChannel& channel,
                              const Vec3& omega, double mass) {
  const Vec3 g = v - v_star;
  const double g_norm = norm(g);
  if (g_norm == 0.0) throw std::invalid_argument("scatter: degenerate pair (v == v_star)");
  const double d = delta_energy(v, v_star, channel, mass);
  if (d < 0.0) throw std::invalid_argument("scatter: inadmissible collision (Delta < 0)");
  const Vec3 n = (1.0 / g_norm) * g;
  const Vec3 t = n - 2.0 * dot(omega, n) * omega;
  const Vec3 center = 0.5 * (v + v_star);
  const Vec3 half = std::sqrt(d) * t;
  return {center + half, center - half};
}

double jacobian(const Vec3& v, const Vec3& v_star, const CollisionChannel& channel, double mass) {
  const double g_norm = norm(v - v_star);
  if (g_norm == 0.0) throw std::domain_error("jacobian: degenerate pair (v == v_star)");
  const double d = delta_energy(v, v_star, channel, mass);
  if (!(d > 0.0)) throw std::domain_error("jacobian: requires Delta > 0");
  return 2.0 * std::sqrt(d) / g_norm;
}

double kernel_value(const KernelSpec& spec, const Vec3& v, const Vec3& v_star,
                    const CollisionChannel& channel, const Vec3& /*omega*/, double mass) {
  const double d = delta_energy(v, v_star, channel, mass);
  if (d < 0.0) return 0.0;
  return spec.rate_constant * std::sqrt(d);
}

} // namespace kin
