#include "lspace/coeffmap.hpp"

#include <algorithm>

namespace lspace {

namespace {

// Multiply the polynomial (coefficients low-to-high in `poly`) by
// x^2 + b x + c in place.
void mul_quadratic(std::vector<Real>& poly, const Real& b, const Real& c) {
  size_t n = poly.size();
  poly.resize(n + 2, Real(0));
  for (size_t i = n; i-- > 0;) {
    Real v = poly[i];
    poly[i + 2] += v;
    poly[i + 1] += b * v;
    poly[i] = c * v;
  }
}

void mul_linear(std::vector<Real>& poly, const Real& a) {  // times (x + a)
  size_t n = poly.size();
  poly.resize(n + 1, Real(0));
  for (size_t i = n; i-- > 0;) {
    Real v = poly[i];
    poly[i + 1] += v;
    poly[i] = a * v;
  }
}

Real det_lu(std::vector<std::vector<Real>> m) {
  size_t n = m.size();
  Real det(1);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    for (size_t i = k + 1; i < n; ++i)
      if (mp::abs(m[i][k]) > mp::abs(m[piv][k])) piv = i;
    if (m[piv][k] == 0) return Real(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      Real f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

}  // namespace

CoefficientPoint to_coefficients(const DotDiagram& d, const Real& tol) {
  std::vector<Real> poly{Real(1)};  // low-to-high; starts as the constant 1
  for (const auto& z : d.z_plus) mul_linear(poly, -z);
  for (const auto& z : d.z_minus) mul_linear(poly, -z);
  for (const auto& z : d.z_two)
    mul_quadratic(poly, -2 * z.re, z.re * z.re + z.im * z.im);

  int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) throw std::invalid_argument("empty dot diagram");
  // poly is monic; c_1 is the coefficient of x^{d-1}.
  Real c1 = poly[deg - 1];
  if (mp::abs(c1) > tol)
    throw std::invalid_argument("dot diagram is imbalanced (nonzero c_1)");

  CoefficientPoint out;
  out.degree = deg;
  for (int j = 2; j <= deg; ++j) out.c.push_back(poly[deg - j]);
  return out;
}

Real discriminant3(const CoefficientPoint& p) {
  if (p.degree != 3) throw std::invalid_argument("discriminant3 needs degree 3");
  return -27 * p.c3() * p.c3() - 4 * p.c2() * p.c2() * p.c2();
}

Real discriminant(const CoefficientPoint& p) {
  int d = p.degree;
  if (d < 2) throw std::invalid_argument("discriminant needs degree >= 2");
  // Build f and f' coefficient lists, high-to-low.
  std::vector<Real> f(d + 1, Real(0)), df(d, Real(0));
  f[0] = 1;
  for (int j = 2; j <= d; ++j) f[j] = p.c[j - 2];
  for (int j = 0; j < d; ++j) df[j] = (d - j) * f[j];
  // Sylvester matrix of f (degree d) and f' (degree d-1): (2d-1) x (2d-1).
  size_t n = 2 * d - 1;
  std::vector<std::vector<Real>> m(n, std::vector<Real>(n, Real(0)));
  for (int row = 0; row < d - 1; ++row)
    for (int j = 0; j <= d; ++j) m[row][row + j] = f[j];
  for (int row = 0; row < d; ++row)
    for (int j = 0; j <= d - 1; ++j) m[d - 1 + row][row + j] = df[j];
  Real res = det_lu(std::move(m));
  int sign_exp = (d * (d - 1) / 2) % 2;
  return sign_exp ? -res : res;
}

CoefficientPoint dual_coefficients(CoefficientPoint p) {
  for (size_t i = 0; i < p.c.size(); ++i)
    if ((i + 2) % 2 == 1) p.c[i] = -p.c[i];
  return p;
}

long cover_degree(const RefinedSignature& sig) {
  long n = sig.d1();
  long k = sig.d_plus;
  long num = 1, den = 1;
  for (long j = 1; j <= k; ++j) {
    num *= n - k + j;
    den *= j;
  }
  return num / den;
}

std::pair<Real, Real> ckappa_point(const Real& kappa, const Real& lambda) {
  Real c2 = kappa * kappa - 3 * lambda * lambda / 4;
  Real c3 = -lambda * (lambda * lambda / 4 + kappa * kappa);
  return {c2, c3};
}

}  // namespace lspace
