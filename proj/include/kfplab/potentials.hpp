#pragma once

#include <functional>
#include <string>

namespace kfplab {

// Convex confining potential, normalized to min U = 0, together with the
// certified data of its Gibbs marginal mu_x ~ exp(-U(x)) dx / z_x.
struct Potential {
  std::string name;
  std::function<double(double)> u;   // U(x) >= 0
  std::function<double(double)> du;  // U'(x)
  double ddu_lower = 0.0;            // uniform lower bound on U''
  double rho = 0.0;                  // log-Sobolev constant of mu_x
  double z_x = 0.0;                  // int exp(-U) dx
  double truncation_radius = 0.0;    // [-L, L] window used for quadrature

  // r(x) = exp(-U(x)) / z_x
  double marginal_density(double x) const;
};

// U(x) = rho x^2 / 2; mu_x = N(0, 1/rho), z_x = sqrt(2 pi / rho).
Potential make_quadratic(double rho);

// U(x) = kappa x^2 / 2 + c4 x^4 (min already 0); LSI constant certified by
// uniform convexity: rho = inf U'' = kappa.
Potential make_quartic(double kappa, double c4);

// Smallest L with exp(-U(L)) <= tail; used to size truncated grids.
double decay_radius(const Potential& pot, double tail = 1e-16);

}  // namespace kfplab
