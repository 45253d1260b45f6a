#pragma once

// Test-only numerical integration, kept independent of the library's
// closed forms so it can serve as an oracle for them.

#include <cmath>
#include <functional>

namespace testsupport {

// Tanh-sinh rule on (a,b) with a fixed fine step; robust to integrable
// endpoint singularities such as (x-a)^alpha with alpha > -1.
inline double integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const double pi_half = 1.5707963267948966;
  const double h = 1.0 / 64.0;
  const int kmax = static_cast<int>(4.5 / h);

  double sum = pi_half * f(mid); // k = 0 node: x = 0, w = pi/2
  for (int k = 1; k <= kmax; ++k) {
    const double u = h * k;
    const double sh = pi_half * std::sinh(u);
    const double x = std::tanh(sh);
    const double c = std::cosh(sh);
    const double w = pi_half * std::cosh(u) / (c * c);
    if (w < 1e-300) break;
    const double dp = half * (1.0 - x); // distance of the + node from b
    const double dm = half * (1.0 - x); // distance of the - node from a
    if (dp > 0.0) sum += w * f(b - dp);
    if (dm > 0.0) sum += w * f(a + dm);
  }
  return sum * h * half;
}

} // namespace testsupport
