#pragma once

// The algebraic map from dot diagrams to coefficient space R^{d-1}:
// symmetric-function coefficients of f(x) = prod (x - z), discriminants,
// the duality action c_j -> (-1)^j c_j, covering degrees, and the C_kappa
// image curves of the d_2 = 1 landscapes in degree 3.

#include <vector>

#include "lspace/spectra.hpp"

namespace lspace {

// A point (c_2, ..., c_d) of coefficient space. The monic polynomial is
// x^d + c_2 x^{d-2} + ... + c_d (no c_1 term: the roots sum to zero).
struct CoefficientPoint {
  int degree = 0;
  std::vector<Real> c;  // c[j] = c_{j+2}

  const Real& c2() const { return c.at(0); }
  const Real& c3() const { return c.at(1); }
};

// Expand prod (x - z) over the diagram. Real points contribute linear
// factors, conjugate pairs contribute (x - beta)^2 + kappa^2; the expansion
// is carried out in real arithmetic, so coefficients are exactly real. A
// residual c_1 above tol (imbalance) is an error.
CoefficientPoint to_coefficients(const DotDiagram& d, const Real& tol);
inline CoefficientPoint to_coefficients(const SpectralPoint& p, const Real& tol) {
  return to_coefficients(to_dot_diagram(p), tol);
}

// D = -27 c_3^2 - 4 c_2^3. Nonnegative exactly when the diagram is totally
// real (d_2 = 0).
Real discriminant3(const CoefficientPoint& p);

// Generic resultant-based discriminant of x^d + c_2 x^{d-2} + ... + c_d,
// disc(f) = (-1)^{d(d-1)/2} Res(f, f'). Agrees with discriminant3 at d = 3.
Real discriminant(const CoefficientPoint& p);

// Coefficient-space image of the dual diagram: c_j -> (-1)^j c_j.
CoefficientPoint dual_coefficients(CoefficientPoint p);

// Degree of the branched cover X_{d+,d-,d2} -> Y_{d1,d2}: d_1! / (d_+! d_-!).
long cover_degree(const RefinedSignature& sig);

// Image of the kappa-line of X_{tau c} (degree 3, one conjugate pair at
// height kappa, real point at lambda): c_2 = kappa^2 - 3 lambda^2 / 4,
// c_3 = -lambda (lambda^2 / 4 + kappa^2). At lambda = 0 this meets
// D = -4 kappa^6; along the line D = -4 kappa^2 (kappa^2 + 9 lambda^2/4)^2.
std::pair<Real, Real> ckappa_point(const Real& kappa, const Real& lambda);

}  // namespace lspace
