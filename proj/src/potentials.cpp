#include "kfplab/potentials.hpp"

#include <cmath>
#include <stdexcept>

#include "kfplab/quadrature.hpp"

namespace kfplab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double Potential::marginal_density(double x) const {
  return std::exp(-u(x)) / z_x;
}

double decay_radius(const Potential& pot, double tail) {
  const double target = -std::log(tail);
  double lo = 0.0, hi = 1.0;
  while (pot.u(hi) < target) {
    hi *= 2.0;
    if (hi > 1e8) throw std::runtime_error("decay_radius: potential does not confine");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (pot.u(mid) < target ? lo : hi) = mid;
  }
  return hi;
}

Potential make_quadratic(double rho) {
  if (!(rho > 0)) throw std::invalid_argument("make_quadratic: rho must be positive");
  Potential p;
  p.name = "quadratic";
  p.u = [rho](double x) { return 0.5 * rho * x * x; };
  p.du = [rho](double x) { return rho * x; };
  p.ddu_lower = rho;
  p.rho = rho;
  p.z_x = std::sqrt(kTwoPi / rho);
  p.truncation_radius = decay_radius(p);
  return p;
}

Potential make_quartic(double kappa, double c4) {
  if (!(kappa > 0)) throw std::invalid_argument("make_quartic: kappa must be positive");
  if (c4 < 0) throw std::invalid_argument("make_quartic: negative c4 breaks convexity");
  Potential p;
  p.name = "quartic";
  const double u0 = 0.0;  // min of kappa x^2/2 + c4 x^4 sits at x = 0
  p.u = [kappa, c4, u0](double x) {
    const double x2 = x * x;
    return 0.5 * kappa * x2 + c4 * x2 * x2 - u0;
  };
  p.du = [kappa, c4](double x) { return kappa * x + 4.0 * c4 * x * x * x; };
  p.ddu_lower = kappa;
  p.rho = kappa;
  p.truncation_radius = decay_radius(p);
  const double L = p.truncation_radius;
  p.z_x = integrate_adaptive([&p](double x) { return std::exp(-p.u(x)); }, -L, L);
  return p;
}

}  // namespace kfplab
