#include "kfplab/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace kfplab {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1] (positive half; rule is symmetric).
constexpr std::array<double, 8> kNodes = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kWeights = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      int panels) {
  if (panels < 1) throw std::invalid_argument("gauss_legendre: panels < 1");
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    double acc = 0.0;
    for (std::size_t j = 0; j < kNodes.size(); ++j) {
      acc += kWeights[j] * (f(mid + half * kNodes[j]) + f(mid - half * kNodes[j]));
    }
    total += half * acc;
  }
  return total;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_panels) {
  double prev = gauss_legendre(f, a, b, 1);
  for (int panels = 2; panels <= max_panels; panels *= 2) {
    const double cur = gauss_legendre(f, a, b, panels);
    if (std::abs(cur - prev) <= rel_tol * std::abs(cur) + 1e-300) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace kfplab
