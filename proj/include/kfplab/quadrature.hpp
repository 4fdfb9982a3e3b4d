#pragma once

#include <functional>

namespace kfplab {

// Composite Gauss-Legendre quadrature of f on [a, b] with the given number of
// equal panels (16 nodes per panel).
double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      int panels);

// Doubles the panel count until two successive composite values agree to
// rel_tol (relative to the last value, with a small absolute floor).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-13, int max_panels = 1 << 14);

}  // namespace kfplab
