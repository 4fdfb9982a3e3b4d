#include "kfplab/transport1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kfplab {

MonotoneCubic MonotoneCubic::fit(const std::vector<double>& u,
                                 const std::vector<double>& x) {
  const std::size_t n = u.size();
  if (n != x.size() || n < 2)
    throw std::invalid_argument("MonotoneCubic: bad knot arrays");
  MonotoneCubic mc;
  mc.u = u;
  mc.x = x;
  mc.slope.assign(n, 0.0);
  std::vector<double> h(n - 1), del(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    h[j] = u[j + 1] - u[j];
    if (!(h[j] > 0)) throw std::invalid_argument("MonotoneCubic: knots not increasing");
    del[j] = (x[j + 1] - x[j]) / h[j];
  }
  mc.slope[0] = del[0];
  mc.slope[n - 1] = del[n - 2];
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (del[j - 1] * del[j] <= 0.0) {
      mc.slope[j] = 0.0;  // local extremum of the data: flat tangent
    } else {
      // Fritsch-Butland harmonic weighting keeps the interpolant monotone
      const double w1 = 2.0 * h[j] + h[j - 1];
      const double w2 = h[j] + 2.0 * h[j - 1];
      mc.slope[j] = (w1 + w2) / (w1 / del[j - 1] + w2 / del[j]);
    }
  }
  return mc;
}

double MonotoneCubic::operator()(double ui) const {
  if (ui <= u.front()) return x.front();
  if (ui >= u.back()) return x.back();
  const auto it = std::upper_bound(u.begin(), u.end(), ui);
  const std::size_t j = static_cast<std::size_t>(it - u.begin()) - 1;
  const double hj = u[j + 1] - u[j];
  const double t = (ui - u[j]) / hj;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * x[j] + h10 * hj * slope[j] + h01 * x[j + 1] + h11 * hj * slope[j + 1];
}

namespace {

// Node-anchored trapezoid CDF of the Lebesgue density f, normalized to end at 1.
std::vector<double> cumulative(const Grid& grid, const std::vector<double>& f) {
  const int nx = grid.nx();
  std::vector<double> F(nx);
  F[0] = 0.0;
  for (int i = 1; i < nx; ++i)
    F[i] = F[i - 1] + 0.5 * grid.dx() * (f[i - 1] + f[i]);
  const double total = F[nx - 1];
  if (!(total > 0)) throw std::runtime_error("cumulative: zero total mass");
  for (double& Fi : F) Fi /= total;
  return F;
}

}  // namespace

TransportReport brenier_map(const Grid& grid, const std::vector<double>& q) {
  const int nx = grid.nx();
  if (static_cast<int>(q.size()) != nx)
    throw std::invalid_argument("brenier_map: q size mismatch");
  double qmass = 0.0;
  for (int i = 0; i < nx; ++i) {
    if (q[i] < 0) throw std::invalid_argument("brenier_map: negative q");
    qmass += grid.wx[i] * q[i];
  }
  if (std::abs(qmass - 1.0) > 1e-8)
    throw std::invalid_argument("brenier_map: q is not normalized");

  std::vector<double> f_src(nx), f_tgt(nx);
  for (int i = 0; i < nx; ++i) {
    f_src[i] = q[i] * grid.r[i];
    f_tgt[i] = grid.r[i];
  }
  const std::vector<double> F_src = cumulative(grid, f_src);
  const std::vector<double> F_tgt = cumulative(grid, f_tgt);

  // strictly increasing knots for the target quantile function; exact ties in
  // flat (zero-density) stretches are dropped, linear clamping covers them
  std::vector<double> ku, kx;
  ku.reserve(nx);
  kx.reserve(nx);
  for (int i = 0; i < nx; ++i) {
    if (ku.empty() || F_tgt[i] > ku.back()) {
      ku.push_back(F_tgt[i]);
      kx.push_back(grid.x_nodes[i]);
    }
  }
  const MonotoneCubic quantile = MonotoneCubic::fit(ku, kx);

  TransportReport tr;
  tr.t_map.resize(nx);
  tr.xi.resize(nx);
  double w2sq = 0.0;
  for (int i = 0; i < nx; ++i) {
    tr.t_map[i] = quantile(F_src[i]);
    tr.xi[i] = grid.x_nodes[i] - tr.t_map[i];
    w2sq += grid.wx[i] * q[i] * tr.xi[i] * tr.xi[i];
    if (q[i] < kQFloor) tr.excluded_mass += grid.wx[i] * q[i];
  }
  tr.w2 = std::sqrt(std::max(0.0, w2sq));
  return tr;
}

double corrector(const Grid& grid, const std::vector<double>& j,
                 const TransportReport& tr) {
  double c = 0.0;
  for (int i = 0; i < grid.nx(); ++i) c += grid.wx[i] * j[i] * tr.xi[i];
  return c;
}

double modified_entropy(double ent, double c_ot, double eps) {
  if (eps < 0) throw std::invalid_argument("modified_entropy: eps must be >= 0");
  return ent + eps * c_ot;
}

double monge_ampere_residual(const Grid& grid, const Potential& pot,
                             const std::vector<double>& q, const TransportReport& tr,
                             double window_radius) {
  const int nx = grid.nx();
  const double inv2dx = 1.0 / (2.0 * grid.dx());
  double worst = 0.0;
  for (int i = 1; i + 1 < nx; ++i) {
    if (q[i] < kQFloor) continue;
    if (std::abs(grid.x_nodes[i]) > window_radius) continue;
    const double tp = (tr.t_map[i + 1] - tr.t_map[i - 1]) * inv2dx;
    const double resid = q[i] * grid.r[i] - pot.marginal_density(tr.t_map[i]) * tp;
    worst = std::max(worst, std::abs(resid));
  }
  return worst;
}

SpatialPairings spatial_pairings(const Grid& grid, const Potential& pot,
                                 const std::vector<double>& q,
                                 const std::vector<double>& theta,
                                 const TransportReport& tr) {
  const int nx = grid.nx();
  const double inv2dx = 1.0 / (2.0 * grid.dx());
  auto d_x = [&](const std::vector<double>& f, int i) {
    if (i == 0) return (f[1] - f[0]) / grid.dx();
    if (i == nx - 1) return (f[nx - 1] - f[nx - 2]) / grid.dx();
    return (f[i + 1] - f[i - 1]) * inv2dx;
  };
  SpatialPairings p;
  for (int i = 0; i < nx; ++i) {
    if (q[i] < kQFloor) {
      p.excluded_mass += grid.wx[i] * q[i];
      continue;
    }
    const double adj_theta = -d_x(theta, i) + pot.du(grid.x_nodes[i]) * theta[i];
    p.a += grid.wx[i] * d_x(q, i) * tr.xi[i];
    p.s += grid.wx[i] * tr.xi[i] * adj_theta;
  }
  return p;
}

}  // namespace kfplab
