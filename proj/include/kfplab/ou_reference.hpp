#pragma once

#include <vector>

namespace kfplab {

// Gaussian law of (X_t, V_t) for the quadratic potential; the exact oracle
// the grid solver is validated against.
struct GaussianState {
  double mean_x = 0.0, mean_v = 0.0;
  double cov_xx = 1.0, cov_xv = 0.0, cov_vv = 1.0;
  double t = 0.0;
};

GaussianState stationary_state(double rho);

// Integrates m' = A m and S' = A S + S A^T + D with A = [[0,1],[-rho,-gamma]],
// D = diag(0, 2 gamma), by adaptive embedded Runge-Kutta to the given
// relative tolerance.
GaussianState ou_evolve(const GaussianState& s0, double rho, double gamma, double t,
                        double rel_tol = 1e-10);

// Relative entropy of the Gaussian state against mu (Sigma_inf = diag(1/rho, 1)).
double ou_entropy(const GaussianState& s, double rho);

// Closed-form functionals of the Gaussian law relative to mu.
double ou_entropy_x(const GaussianState& s, double rho);
double ou_fisher_v(const GaussianState& s);
double ou_current_energy(const GaussianState& s);
double ou_w2(const GaussianState& s, double rho);
double ou_corrector(const GaussianState& s, double rho);

struct RateFit {
  double rate = 0.0;      // decay rate of the fitted exp(-rate t)
  double residual = 0.0;  // rms residual of the log-linear fit
};

// Least-squares slope of log(ent) over t in [t0, t1].
RateFit ou_rate_fit(const std::vector<double>& t, const std::vector<double>& ent,
                    double t0, double t1);

}  // namespace kfplab
