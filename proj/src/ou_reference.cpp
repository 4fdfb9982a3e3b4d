#include "kfplab/ou_reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace kfplab {

namespace {

using State5 = std::array<double, 5>;  // mx, mv, cxx, cxv, cvv

State5 moment_rhs(const State5& y, double rho, double gamma) {
  return State5{
      y[1],
      -rho * y[0] - gamma * y[1],
      2.0 * y[3],
      y[4] - rho * y[2] - gamma * y[3],
      -2.0 * rho * y[3] - 2.0 * gamma * y[4] + 2.0 * gamma,
  };
}

// Dormand-Prince 5(4) with standard step control.
State5 integrate(State5 y, double rho, double gamma, double t_end, double rtol) {
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double atol = 1e-14;
  double t = 0.0;
  double h = std::min(1e-3, t_end > 0 ? t_end : 1e-3);
  if (t_end <= 0) return y;

  int guard = 0;
  while (t < t_end) {
    if (++guard > 10'000'000) throw std::runtime_error("ou_evolve: step control stalled");
    h = std::min(h, t_end - t);
    const State5 k1 = moment_rhs(y, rho, gamma);
    State5 tmp;
    for (int i = 0; i < 5; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    const State5 k2 = moment_rhs(tmp, rho, gamma);
    for (int i = 0; i < 5; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    const State5 k3 = moment_rhs(tmp, rho, gamma);
    for (int i = 0; i < 5; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    const State5 k4 = moment_rhs(tmp, rho, gamma);
    for (int i = 0; i < 5; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    const State5 k5 = moment_rhs(tmp, rho, gamma);
    for (int i = 0; i < 5; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                           a65 * k5[i]);
    const State5 k6 = moment_rhs(tmp, rho, gamma);
    State5 y5;
    for (int i = 0; i < 5; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    const State5 k7 = moment_rhs(y5, rho, gamma);

    double err = 0.0;
    for (int i = 0; i < 5; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
      const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / 5.0);

    if (err <= 1.0) {
      t += h;
      y = y5;
      (void)axpy;
    }
    const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
    h *= fac;
  }
  return y;
}

}  // namespace

GaussianState stationary_state(double rho) {
  if (!(rho > 0)) throw std::invalid_argument("stationary_state: rho must be positive");
  GaussianState s;
  s.cov_xx = 1.0 / rho;
  s.cov_xv = 0.0;
  s.cov_vv = 1.0;
  return s;
}

GaussianState ou_evolve(const GaussianState& s0, double rho, double gamma, double t,
                        double rel_tol) {
  if (t < 0) throw std::invalid_argument("ou_evolve: negative time");
  const State5 y0{s0.mean_x, s0.mean_v, s0.cov_xx, s0.cov_xv, s0.cov_vv};
  const State5 y = integrate(y0, rho, gamma, t, rel_tol);
  GaussianState s;
  s.mean_x = y[0];
  s.mean_v = y[1];
  s.cov_xx = y[2];
  s.cov_xv = y[3];
  s.cov_vv = y[4];
  s.t = s0.t + t;
  return s;
}

double ou_entropy(const GaussianState& s, double rho) {
  const double det = s.cov_xx * s.cov_vv - s.cov_xv * s.cov_xv;
  if (!(s.cov_xx > 1e-14) || !(det > 1e-14 * s.cov_xx * s.cov_vv + 1e-300))
    throw std::invalid_argument("ou_entropy: covariance not positive definite");
  const double tr_term = rho * s.cov_xx + s.cov_vv - 2.0;
  const double mean_term = rho * s.mean_x * s.mean_x + s.mean_v * s.mean_v;
  const double log_term = -std::log(rho) - std::log(det);
  return 0.5 * (tr_term + mean_term + log_term);
}

double ou_entropy_x(const GaussianState& s, double rho) {
  const double v = rho * s.cov_xx;
  return 0.5 * (v - 1.0 - std::log(v) + rho * s.mean_x * s.mean_x);
}

double ou_fisher_v(const GaussianState& s) {
  const double det = s.cov_xx * s.cov_vv - s.cov_xv * s.cov_xv;
  // Sigma^{-1} = [[cvv, -cxv], [-cxv, cxx]] / det
  const double s21 = -s.cov_xv / det;
  const double s22 = s.cov_xx / det;
  const double a1 = -s21, a2 = 1.0 - s22;
  const double quad = a1 * a1 * s.cov_xx + 2.0 * a1 * a2 * s.cov_xv + a2 * a2 * s.cov_vv;
  return quad + s.mean_v * s.mean_v;
}

double ou_current_energy(const GaussianState& s) {
  return s.mean_v * s.mean_v + s.cov_xv * s.cov_xv / s.cov_xx;
}

double ou_w2(const GaussianState& s, double rho) {
  const double dsig = std::sqrt(s.cov_xx) - std::sqrt(1.0 / rho);
  return std::sqrt(s.mean_x * s.mean_x + dsig * dsig);
}

double ou_corrector(const GaussianState& s, double rho) {
  const double shrink = 1.0 - 1.0 / (std::sqrt(rho) * std::sqrt(s.cov_xx));
  return s.mean_x * s.mean_v + s.cov_xv * shrink;
}

RateFit ou_rate_fit(const std::vector<double>& t, const std::vector<double>& ent,
                    double t0, double t1) {
  if (t.size() != ent.size()) throw std::invalid_argument("ou_rate_fit: size mismatch");
  std::vector<double> ts, ys;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t0 || t[i] > t1) continue;
    if (!(ent[i] > 0))
      throw std::invalid_argument("ou_rate_fit: non-positive entropy in window");
    ts.push_back(t[i]);
    ys.push_back(std::log(ent[i]));
  }
  if (ts.size() < 20)
    throw std::invalid_argument("ou_rate_fit: need at least 20 samples in window");
  const double n = static_cast<double>(ts.size());
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    st += ts[i];
    sy += ys[i];
    stt += ts[i] * ts[i];
    sty += ts[i] * ys[i];
  }
  const double denom = n * stt - st * st;
  const double slope = (n * sty - st * sy) / denom;
  const double icept = (sy - slope * st) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double r = ys[i] - (icept + slope * ts[i]);
    ss += r * r;
  }
  return RateFit{-slope, std::sqrt(ss / n)};
}

}  // namespace kfplab
