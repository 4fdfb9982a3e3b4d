#pragma once

#include <vector>

#include "kfplab/phase_grid.hpp"

namespace kfplab {

// Scalar functionals of one snapshot.  Invariants (up to quadrature):
// ent = ent_x + ent_v, ent_v <= i_v/2, j_energy <= 2 ent_v, j_energy <= i_v.
struct FunctionalReport {
  double t = 0.0;
  double ent = 0.0;
  double ent_x = 0.0;
  double ent_v = 0.0;
  double i_v = 0.0;
  double j_energy = 0.0;
};

struct EntropySplit {
  double ent = 0.0, ent_x = 0.0, ent_v = 0.0;
};

// phi(z) = z log z - z + 1 >= 0; the entropy integrand for unit-mass
// densities, stable against cancellation near z = 1.
double entropy_integrand(double z);

// Total, marginal and conditional relative entropies, each computed
// independently (the split identity is checked by callers, not enforced).
EntropySplit entropy(const Grid& grid, const PhaseDensity& d);

// Velocity Fisher information with centered differences in v.  The integrand
// is set to zero where g <= 1e-14; the quotient carries a 1e-300 floor.
double fisher_v(const Grid& grid, const PhaseDensity& d);

// J = int j^2/q dmu_x with the vacuum convention j = 0 on {q < floor}.
double current_energy(const Grid& grid, const SpatialFields& f);

FunctionalReport functional_report(const Grid& grid, const PhaseDensity& d);

// min over x of Ent_kappa(h_x) + log int e^phi dkappa - int phi h_x dkappa,
// for a test function phi given by its values on the v-nodes.  Nonnegative by
// the Donsker-Varadhan variational formula.
double entropy_variational_margin(const Grid& grid, const PhaseDensity& d,
                                  const std::vector<double>& phi_on_v);

}  // namespace kfplab
