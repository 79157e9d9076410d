#pragma once

// Complex log-Gamma, digamma, and the normalized archimedean factors
//   Gamma_R(s) = pi^{-s/2} Gamma(s/2),   Gamma_C(s) = (2 pi)^{-s} Gamma(s).
//
// log_gamma uses the Stirling series after shifting the argument far enough
// right that the truncated series is below the working precision; the number
// of shifts and series terms adapt to the current precision. The branch of
// log_gamma is the standard one, continuous on C minus the negative real
// axis, with log_gamma(x) real for x > 0.

#include "lspace/prec.hpp"

namespace lspace {

struct GammaPoleError : std::runtime_error {
  Complex pole;
  explicit GammaPoleError(const Complex& where)
      : std::runtime_error("Gamma pole at z = (" + to_decimal_string(where.re, 8) +
                           ", " + to_decimal_string(where.im, 8) + ")"),
        pole(where) {}
};

// log Gamma(z); throws GammaPoleError at non-positive integers.
Complex log_gamma(const Complex& z);
// Gamma(z) = exp(log_gamma(z)).
Complex gamma(const Complex& z);
// psi(z) = Gamma'(z) / Gamma(z).
Complex digamma(const Complex& z);

Complex log_gamma_R(const Complex& s);
Complex log_gamma_C(const Complex& s);
Complex gamma_R(const Complex& s);
Complex gamma_C(const Complex& s);

}  // namespace lspace
