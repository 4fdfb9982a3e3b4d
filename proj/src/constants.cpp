#include "kfplab/constants.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kfplab {

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : n;
  den = g ? d / g : d;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}
Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw std::invalid_argument("Rational: division by zero");
  return Rational(num * o.den, den * o.num);
}
bool Rational::operator<=(const Rational& o) const {
  return num * o.den <= o.num * den;
}
bool Rational::operator<(const Rational& o) const {
  return num * o.den < o.num * den;
}

Rational theta_rational(const Rational& Gamma) {
  if (Gamma.num <= 0) throw std::invalid_argument("theta: Gamma must be positive");
  const Rational a = Gamma / Rational(12, 1);
  const Rational b = Rational(1, 1) / (Rational(4, 1) * Gamma);
  return a <= b ? a : b;
}

Rational lambda_rational(const Rational& theta) {
  return theta / (Rational(2, 1) * (Rational(1, 1) + theta));
}

Rational prefactor_rational(const Rational& theta) {
  return (Rational(1, 1) + theta) / (Rational(1, 1) - theta);
}

double theta_of(double Gamma) {
  if (!(Gamma > 0)) throw std::invalid_argument("theta: Gamma must be positive");
  return std::min(Gamma / 12.0, 1.0 / (4.0 * Gamma));
}

double lambda_of(double Gamma) {
  const double th = theta_of(Gamma);
  return th / (2.0 * (1.0 + th));
}

double prefactor_of(double Gamma) {
  const double th = theta_of(Gamma);
  return (1.0 + th) / (1.0 - th);
}

double epsilon_of(double Gamma, double rho) {
  if (!(rho > 0)) throw std::invalid_argument("epsilon: rho must be positive");
  return theta_of(Gamma) * std::sqrt(rho);
}

}  // namespace kfplab
