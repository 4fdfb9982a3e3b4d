#pragma once

#include <limits>
#include <vector>

#include "kfplab/phase_grid.hpp"

namespace kfplab {

// Brenier transport data from q mu_x to mu_x.  In one dimension the optimal
// map is the monotone rearrangement T = F_{mu_x}^{-1} o F_{q mu_x}.
struct TransportReport {
  std::vector<double> t_map;  // T(x_i)
  std::vector<double> xi;     // displacement x_i - T(x_i)
  double w2 = 0.0;            // Wasserstein-2 distance
  double c_ot = 0.0;          // current corrector int j xi dmu_x (filled by corrector)
  double h_eps = 0.0;         // modified entropy (filled by modified_entropy)
  double excluded_mass = 0.0; // q-mass on nodes below the vacuum floor
};

// Monotone cubic (Fritsch-Butland) interpolant through strictly increasing
// knots; used for quantile inversion.  Evaluation clamps outside the range.
struct MonotoneCubic {
  std::vector<double> u, x, slope;
  static MonotoneCubic fit(const std::vector<double>& u, const std::vector<double>& x);
  double operator()(double ui) const;
};

TransportReport brenier_map(const Grid& grid, const std::vector<double>& q);

// C_OT = int j xi dmu_x
double corrector(const Grid& grid, const std::vector<double>& j,
                 const TransportReport& tr);

// H_eps = ent + eps * C_OT
double modified_entropy(double ent, double c_ot, double eps);

// max interior-node residual of the 1-D Monge-Ampere identity
// q(x) r(x) = r(T(x)) T'(x), with T' by centered differences of t_map.
double monge_ampere_residual(const Grid& grid, const Potential& pot,
                             const std::vector<double>& q, const TransportReport& tr,
                             double window_radius = std::numeric_limits<double>::infinity());

// Spatial pairings frak_a = int (d_x q) xi dmu_x and
// frak_s = int xi (-d_x theta + U' theta) dmu_x, summed on {q >= floor}.
struct SpatialPairings {
  double a = 0.0;
  double s = 0.0;
  double excluded_mass = 0.0;
};

SpatialPairings spatial_pairings(const Grid& grid, const Potential& pot,
                                 const std::vector<double>& q,
                                 const std::vector<double>& theta,
                                 const TransportReport& tr);

}  // namespace kfplab
