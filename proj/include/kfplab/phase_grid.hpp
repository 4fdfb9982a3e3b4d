#pragma once

#include <cstddef>
#include <vector>

#include "kfplab/potentials.hpp"

namespace kfplab {

// Below this marginal density the conditional fields use the vacuum
// conventions h = 1, j = 0, m = 0.
inline constexpr double kQFloor = 1e-12;

// Tensor-product phase-space grid with probability quadrature weights for
// mu_x (positions) and the standard Gaussian kappa (velocities).
struct Grid {
  std::vector<double> x_nodes, v_nodes;
  std::vector<double> wx, wv;  // normalized to sum exactly 1
  std::vector<double> r;       // marginal density r(x) at the x-nodes
  double x_max = 0.0, v_max = 0.0;
  double raw_wx_sum = 0.0, raw_wv_sum = 0.0;  // trapezoid sums before normalization

  int nx() const { return static_cast<int>(x_nodes.size()); }
  int nv() const { return static_cast<int>(v_nodes.size()); }
  double dx() const { return x_nodes[1] - x_nodes[0]; }
  double dv() const { return v_nodes[1] - v_nodes[0]; }
  std::size_t idx(int i, int k) const {
    return static_cast<std::size_t>(i) * v_nodes.size() + static_cast<std::size_t>(k);
  }
};

Grid make_grid(const Potential& pot, int nx, int nv, double x_max, double v_max);

// Density ratio g = p / rho_inf on the grid, x-major layout.
struct PhaseDensity {
  std::vector<double> g;
  double t = 0.0;
};

// Velocity moments of g: marginal q, current j, second moment m2,
// centered stress theta = m2 - j^2/q - q, and bulk velocity m = j/q.
struct SpatialFields {
  std::vector<double> q, j, m2, theta, m;
};

double mass(const Grid& grid, const PhaseDensity& d);

SpatialFields project_moments(const Grid& grid, const PhaseDensity& d);

// Fiberwise Ent_kappa(h_x); zero on vacuum nodes.
std::vector<double> conditional_entropy_profile(const Grid& grid, const PhaseDensity& d);

PhaseDensity equilibrium_state(const Grid& grid);

// Ratio of the product law N(mean_x, var_x) x N(mean_v, var_v) to the
// invariant density, renormalized to unit mass on the grid.
PhaseDensity gaussian_product_state(const Grid& grid, const Potential& pot,
                                    double mean_x, double var_x, double mean_v,
                                    double var_v);

}  // namespace kfplab
