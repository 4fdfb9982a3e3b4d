#include "kfplab/functionals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace kfplab {

double entropy_integrand(double z) {
  if (z <= 0.0) return z == 0.0 ? 1.0 : std::numeric_limits<double>::quiet_NaN();
  const double w = z - 1.0;
  if (std::abs(w) < 1e-4) {
    // z log z - z + 1 = w^2/2 - w^3/6 + w^4/12 - ...
    return w * w * (0.5 + w * (-1.0 / 6.0 + w * (1.0 / 12.0 - w / 20.0)));
  }
  return z * std::log(z) - w;
}

EntropySplit entropy(const Grid& grid, const PhaseDensity& d) {
  const int nx = grid.nx(), nv = grid.nv();
  EntropySplit s;
  const std::vector<double> fiber = conditional_entropy_profile(grid, d);
  for (int i = 0; i < nx; ++i) {
    const double* gi = d.g.data() + grid.idx(i, 0);
    double q = 0.0, row = 0.0;
    for (int k = 0; k < nv; ++k) {
      q += grid.wv[k] * gi[k];
      row += grid.wv[k] * entropy_integrand(gi[k]);
    }
    s.ent += grid.wx[i] * row;
    s.ent_x += grid.wx[i] * entropy_integrand(q);
    s.ent_v += grid.wx[i] * q * fiber[i];
  }
  return s;
}

double fisher_v(const Grid& grid, const PhaseDensity& d) {
  const int nx = grid.nx(), nv = grid.nv();
  const double inv2dv = 1.0 / (2.0 * grid.dv());
  double total = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double* gi = d.g.data() + grid.idx(i, 0);
    double row = 0.0;
    for (int k = 0; k < nv; ++k) {
      const double g = gi[k];
      if (g <= 1e-14) continue;
      double dg;
      if (k == 0) dg = (gi[1] - gi[0]) / grid.dv();
      else if (k == nv - 1) dg = (gi[nv - 1] - gi[nv - 2]) / grid.dv();
      else dg = (gi[k + 1] - gi[k - 1]) * inv2dv;
      row += grid.wv[k] * dg * dg / std::max(g, 1e-300);
    }
    total += grid.wx[i] * row;
  }
  return total;
}

double current_energy(const Grid& grid, const SpatialFields& f) {
  double total = 0.0;
  for (int i = 0; i < grid.nx(); ++i) {
    if (f.q[i] < kQFloor) continue;
    total += grid.wx[i] * f.j[i] * f.j[i] / f.q[i];
  }
  return total;
}

FunctionalReport functional_report(const Grid& grid, const PhaseDensity& d) {
  FunctionalReport r;
  r.t = d.t;
  const EntropySplit s = entropy(grid, d);
  r.ent = s.ent;
  r.ent_x = s.ent_x;
  r.ent_v = s.ent_v;
  r.i_v = fisher_v(grid, d);
  r.j_energy = current_energy(grid, project_moments(grid, d));
  return r;
}

double entropy_variational_margin(const Grid& grid, const PhaseDensity& d,
                                  const std::vector<double>& phi_on_v) {
  const int nx = grid.nx(), nv = grid.nv();
  if (static_cast<int>(phi_on_v.size()) != nv)
    throw std::invalid_argument("entropy_variational_margin: phi size mismatch");
  double log_mgf;
  {
    double vmax = phi_on_v[0];
    for (double p : phi_on_v) vmax = std::max(vmax, p);
    if (vmax > 700.0)
      throw std::overflow_error("entropy_variational_margin: exp(phi) overflows");
    double acc = 0.0;
    for (int k = 0; k < nv; ++k) acc += grid.wv[k] * std::exp(phi_on_v[k] - vmax);
    log_mgf = vmax + std::log(acc);
  }
  const std::vector<double> fiber = conditional_entropy_profile(grid, d);
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < nx; ++i) {
    const double* gi = d.g.data() + grid.idx(i, 0);
    double q = 0.0, pairing = 0.0;
    for (int k = 0; k < nv; ++k) {
      q += grid.wv[k] * gi[k];
      pairing += grid.wv[k] * phi_on_v[k] * gi[k];
    }
    double m;
    if (q < kQFloor) {
      // vacuum convention h = 1
      double phi_mean = 0.0;
      for (int k = 0; k < nv; ++k) phi_mean += grid.wv[k] * phi_on_v[k];
      m = log_mgf - phi_mean;
    } else {
      m = fiber[i] + log_mgf - pairing / q;
    }
    margin = std::min(margin, m);
  }
  return margin;
}

}  // namespace kfplab
