#pragma once

namespace kfplab {

// Exact rational arithmetic for the decay-rate constants.  The fractions
// involved are tiny, so int64 never overflows here.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<=(const Rational& o) const;
  bool operator<(const Rational& o) const;

  double value() const { return double(num) / double(den); }
};

// theta = min{Gamma/12, 1/(4 Gamma)}; the largest admissible coupling.
Rational theta_rational(const Rational& Gamma);
// lambda_Gamma = theta / (2 (1 + theta)); decay rate is lambda_Gamma * sqrt(rho).
Rational lambda_rational(const Rational& theta);
// (1 + theta) / (1 - theta), the entropy-decay prefactor.
Rational prefactor_rational(const Rational& theta);

double theta_of(double Gamma);
double lambda_of(double Gamma);
double prefactor_of(double Gamma);
// epsilon = theta * sqrt(rho), the corrector coupling in the modified entropy.
double epsilon_of(double Gamma, double rho);

}  // namespace kfplab
