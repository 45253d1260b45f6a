#pragma once

namespace kin {

// ln B(a,b); a, b > 0.
double log_beta(double a, double b);

// Regularized lower incomplete gamma P(a,x) = gamma(a,x)/Gamma(a); a > 0, x >= 0.
double gamma_p(double a, double x);

} // namespace kin
