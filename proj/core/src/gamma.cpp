#include "lspace/gamma.hpp"

#include <algorithm>
#include <cmath>

namespace lspace {

namespace {

// Radius beyond which the truncated Stirling series reaches ~digits10
// accuracy. The optimally truncated series has error ~ exp(-2 pi |z|), so
// |z| >= digits10 * ln(10) / (2 pi) is the bare minimum; the factor below
// keeps the truncation comfortably sub-ulp without many extra shifts.
double stirling_radius(unsigned digits10) {
  return 0.42 * static_cast<double>(digits10) * 2.302585092994046;
}

bool is_nonpositive_integer(const Complex& z) {
  if (z.im != 0) return false;
  if (z.re > 0) return false;
  return z.re == floor(z.re);
}

// Stirling series, valid once |z| >= stirling_radius(digits):
//   (z - 1/2) log z - z + log(2 pi)/2 + sum_n B_{2n} / (2n(2n-1) z^{2n-1}).
Complex log_gamma_stirling(const Complex& z, const Real& tol) {
  Complex result = (z - Complex(Real(1) / 2)) * log(z) - z;
  result.re += const_log_2pi() / 2;
  Complex zinv = Complex(Real(1)) / z;
  Complex zinv2 = zinv * zinv;
  Complex zpow = zinv;  // z^{-(2n-1)}
  for (unsigned n = 1; n < 600; ++n) {
    Real coeff = bernoulli_2n_real(n) / Real(2 * n * (2 * n - 1));
    Complex term = coeff * zpow;
    result += term;
    if (abs(term) < tol) return result;
    zpow *= zinv2;
  }
  throw std::runtime_error("log_gamma: Stirling series failed to converge");
}

// psi asymptotic: log z - 1/(2z) - sum_n B_{2n} / (2n z^{2n}).
Complex digamma_stirling(const Complex& z, const Real& tol) {
  Complex zinv = Complex(Real(1)) / z;
  Complex result = log(z) - Complex(Real(1) / 2) * zinv;
  Complex zinv2 = zinv * zinv;
  Complex zpow = zinv2;
  for (unsigned n = 1; n < 600; ++n) {
    Complex term = (bernoulli_2n_real(n) / Real(2 * n)) * zpow;
    result -= term;
    if (abs(term) < tol) return result;
    zpow *= zinv2;
  }
  throw std::runtime_error("digamma: asymptotic series failed to converge");
}

long shifts_needed(const Complex& z, double radius) {
  double im = std::abs(static_cast<double>(z.im));
  if (im >= radius) return 0;
  double need = std::sqrt(radius * radius - im * im);
  double cur = static_cast<double>(z.re);
  return static_cast<long>(std::ceil(std::max(0.0, need - cur)));
}

}  // namespace

// Branch note: for Re z > 0 (every internal caller) the result is the
// standard log Gamma branch, real on the positive axis. For Re z <= 0 the
// reflection below returns a value correct modulo 2 pi i, which is enough
// for gamma() = exp(log_gamma()).
Complex log_gamma(const Complex& z) {
  if (is_nonpositive_integer(z)) throw GammaPoleError(z);
  unsigned digits = Real::default_precision();
  Real tol = pow(Real(10), -static_cast<int>(digits + 5));
  double radius = stirling_radius(digits);

  if (z.re < 0 && mp::abs(z.im) < radius) {
    // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)  (mod 2 pi i)
    Complex pi_z = const_pi() * z;
    Complex sin_piz{sin(pi_z.re) * cosh(pi_z.im), cos(pi_z.re) * sinh(pi_z.im)};
    return Complex(const_log_pi()) - log(sin_piz) - log_gamma(Complex(Real(1)) - z);
  }

  Complex w = z;
  Complex log_shift{Real(0), Real(0)};
  for (long j = shifts_needed(w, radius); j > 0; --j) {
    log_shift += log(w);  // path stays in Re > 0: principal logs compose
    w.re += 1;
  }
  return log_gamma_stirling(w, tol) - log_shift;
}

Complex gamma(const Complex& z) { return exp(log_gamma(z)); }

Complex digamma(const Complex& z) {
  if (is_nonpositive_integer(z)) throw GammaPoleError(z);
  unsigned digits = Real::default_precision();
  Real tol = pow(Real(10), -static_cast<int>(digits + 5));
  double radius = stirling_radius(digits);

  if (z.re < 0 && mp::abs(z.im) < radius) {
    // psi(z) = psi(1 - z) - pi cot(pi z)
    Complex pi_z = const_pi() * z;
    Complex sin_piz{sin(pi_z.re) * cosh(pi_z.im), cos(pi_z.re) * sinh(pi_z.im)};
    Complex cos_piz{cos(pi_z.re) * cosh(pi_z.im), -sin(pi_z.re) * sinh(pi_z.im)};
    return digamma(Complex(Real(1)) - z) - const_pi() * (cos_piz / sin_piz);
  }

  Complex w = z;
  Complex shift{Real(0), Real(0)};
  for (long j = shifts_needed(w, radius); j > 0; --j) {
    shift += Complex(Real(1)) / w;  // psi(z) = psi(z+1) - 1/z
    w.re += 1;
  }
  return digamma_stirling(w, tol) - shift;
}

Complex log_gamma_R(const Complex& s) {
  Complex half_s{s.re / 2, s.im / 2};
  return log_gamma(half_s) - half_s * Complex(const_log_pi());
}

Complex log_gamma_C(const Complex& s) {
  return log_gamma(s) - s * Complex(const_log_2pi());
}

Complex gamma_R(const Complex& s) { return exp(log_gamma_R(s)); }
Complex gamma_C(const Complex& s) { return exp(log_gamma_C(s)); }

}  // namespace lspace
