#pragma once

// Quadrature utilities shared by the analytic modules: Gauss-Legendre rules
// at working precision, panel integration over finite intervals, and
// asymptotic tails of oscillatory integrals with (A + B log u) u^{-k}
// amplitudes (the shape the explicit-formula archimedean term produces).

#include <functional>
#include <vector>

#include "lspace/prec.hpp"

namespace lspace {

struct GLRule {
  std::vector<Real> nodes;    // on (-1, 1)
  std::vector<Real> weights;
};

// n-point Gauss-Legendre rule at the current working precision (cached).
const GLRule& gauss_legendre(unsigned n);

// Integrate f over [a, b] with a single n-point rule.
Real integrate_gl(const std::function<Real(const Real&)>& f, const Real& a,
                  const Real& b, unsigned n);

// Integrate f over [a, b] split into `panels` equal panels, n points each.
Real integrate_panels(const std::function<Real(const Real&)>& f, const Real& a,
                      const Real& b, unsigned panels, unsigned n);

// Exact tail  integral_x^inf (A + B log u) u^{-k} du,  k >= 2, x > 0.
Real log_power_tail(const Real& A, const Real& B, unsigned k, const Real& x);

// Asymptotic tail  integral_x^inf cos(omega u + phase) (A + B log u) u^{-k} du
// by repeated integration by parts; requires omega * x >> k. Accuracy is
// limited by the smallest term of the divergent series; with omega * x >~ 80
// it reaches ~1e-30, far below our quadrature targets.
Real oscillatory_log_tail(const Real& omega, const Real& phase, const Real& A,
                          const Real& B, unsigned k, const Real& x);

}  // namespace lspace
