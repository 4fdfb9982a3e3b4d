#include "kfplab/phase_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace kfplab {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;

double gauss_density(double v) { return kInvSqrt2Pi * std::exp(-0.5 * v * v); }

// Uniform nodes on [-cap, cap] with trapezoid-corrected weights against the
// given density, normalized to a probability quadrature.
void build_axis(int n, double cap, const std::function<double(double)>& dens,
                std::vector<double>& nodes, std::vector<double>& w, double& raw_sum) {
  if (n < 8) throw std::invalid_argument("grid axis needs at least 8 nodes");
  nodes.resize(n);
  w.resize(n);
  const double h = 2.0 * cap / (n - 1);
  for (int i = 0; i < n; ++i) {
    nodes[i] = -cap + h * i;
    w[i] = dens(nodes[i]) * h;
  }
  w.front() *= 0.5;
  w.back() *= 0.5;
  raw_sum = 0.0;
  for (double wi : w) raw_sum += wi;
  for (double& wi : w) wi /= raw_sum;
}

}  // namespace

Grid make_grid(const Potential& pot, int nx, int nv, double x_max, double v_max) {
  if (!(x_max > 0) || !(v_max > 0))
    throw std::invalid_argument("make_grid: truncation radii must be positive");
  Grid g;
  g.x_max = x_max;
  g.v_max = v_max;
  build_axis(nx, x_max, [&pot](double x) { return pot.marginal_density(x); },
             g.x_nodes, g.wx, g.raw_wx_sum);
  build_axis(nv, v_max, gauss_density, g.v_nodes, g.wv, g.raw_wv_sum);
  g.r.resize(nx);
  for (int i = 0; i < nx; ++i) g.r[i] = pot.marginal_density(g.x_nodes[i]);
  return g;
}

double mass(const Grid& grid, const PhaseDensity& d) {
  const int nx = grid.nx(), nv = grid.nv();
  double total = 0.0;
  for (int i = 0; i < nx; ++i) {
    double row = 0.0;
    const double* gi = d.g.data() + grid.idx(i, 0);
    for (int k = 0; k < nv; ++k) row += grid.wv[k] * gi[k];
    total += grid.wx[i] * row;
  }
  return total;
}

SpatialFields project_moments(const Grid& grid, const PhaseDensity& d) {
  const int nx = grid.nx(), nv = grid.nv();
  SpatialFields f;
  f.q.resize(nx);
  f.j.resize(nx);
  f.m2.resize(nx);
  f.theta.resize(nx);
  f.m.resize(nx);
  for (int i = 0; i < nx; ++i) {
    const double* gi = d.g.data() + grid.idx(i, 0);
    double q = 0.0, j = 0.0, m2 = 0.0;
    for (int k = 0; k < nv; ++k) {
      const double wgv = grid.wv[k] * gi[k];
      q += wgv;
      j += wgv * grid.v_nodes[k];
      m2 += wgv * grid.v_nodes[k] * grid.v_nodes[k];
    }
    f.q[i] = q;
    f.j[i] = j;
    f.m2[i] = m2;
    if (q >= kQFloor) {
      f.theta[i] = m2 - j * j / q - q;
      f.m[i] = j / q;
    } else {
      f.theta[i] = m2 - q;  // j^2/q := 0 on vacuum
      f.m[i] = 0.0;
    }
  }
  return f;
}

std::vector<double> conditional_entropy_profile(const Grid& grid, const PhaseDensity& d) {
  const int nx = grid.nx(), nv = grid.nv();
  std::vector<double> ent(nx, 0.0);
  for (int i = 0; i < nx; ++i) {
    const double* gi = d.g.data() + grid.idx(i, 0);
    double q = 0.0;
    for (int k = 0; k < nv; ++k) q += grid.wv[k] * gi[k];
    if (q < kQFloor) continue;
    // sum wv (h log h - h + 1): nonnegative integrand, no cancellation
    double acc = 0.0;
    for (int k = 0; k < nv; ++k) {
      const double h = gi[k] / q;
      if (h > 0) acc += grid.wv[k] * (h * std::log(h) - h + 1.0);
      else acc += grid.wv[k];
    }
    ent[i] = acc;
  }
  return ent;
}

PhaseDensity equilibrium_state(const Grid& grid) {
  PhaseDensity d;
  d.g.assign(static_cast<std::size_t>(grid.nx()) * grid.nv(), 1.0);
  d.t = 0.0;
  return d;
}

PhaseDensity gaussian_product_state(const Grid& grid, const Potential& pot,
                                    double mean_x, double var_x, double mean_v,
                                    double var_v) {
  if (!(var_x > 0) || !(var_v > 0))
    throw std::invalid_argument("gaussian_product_state: variances must be positive");
  const int nx = grid.nx(), nv = grid.nv();
  PhaseDensity d;
  d.g.resize(static_cast<std::size_t>(nx) * nv);
  d.t = 0.0;
  const double cx = 1.0 / std::sqrt(2.0 * M_PI * var_x);
  const double cv = 1.0 / std::sqrt(2.0 * M_PI * var_v);
  std::vector<double> ratio_v(nv);
  for (int k = 0; k < nv; ++k) {
    const double v = grid.v_nodes[k];
    const double pv = cv * std::exp(-0.5 * (v - mean_v) * (v - mean_v) / var_v);
    ratio_v[k] = pv / (kInvSqrt2Pi * std::exp(-0.5 * v * v));
  }
  for (int i = 0; i < nx; ++i) {
    const double x = grid.x_nodes[i];
    const double px = cx * std::exp(-0.5 * (x - mean_x) * (x - mean_x) / var_x);
    const double ratio_x = px / pot.marginal_density(x);
    for (int k = 0; k < nv; ++k) d.g[grid.idx(i, k)] = ratio_x * ratio_v[k];
  }
  const double m = mass(grid, d);
  if (!(m > 0)) throw std::runtime_error("gaussian_product_state: zero mass on grid");
  for (double& gi : d.g) gi /= m;
  return d;
}

}  // namespace kfplab
