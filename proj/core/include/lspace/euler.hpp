#pragma once

// Dirichlet coefficients from the degree-3 Euler product with trivial
// central character. The local factor is
//   1 - a_p x + conj(a_p) x^2 - x^3,
// giving the prime-power recursion
//   a_{p^k} = a_p a_{p^{k-1}} - conj(a_p) a_{p^{k-2}} + a_{p^{k-3}}
// (a_1 = 1, negative indices 0) and multiplicativity across primes.
//
// The solver needs d a_n / d(a_p^r), d a_n / d(a_p^i) as well, so the
// extension is implemented generically over a scalar with +, *, conj; the
// Jet scalar below carries first derivatives with respect to a chosen list
// of real unknowns through the same code path.

#include <map>
#include <vector>

#include "lspace/prec.hpp"

namespace lspace {

// Complex value with partial derivatives with respect to n_params real
// parameters. Parameters are real, so conj() conjugates the partials too.
struct JetC {
  Complex v;
  std::vector<Complex> d;

  JetC() = default;
  explicit JetC(Complex value, size_t n_params = 0)
      : v(std::move(value)), d(n_params) {}

  JetC& operator+=(const JetC& o) {
    v += o.v;
    for (size_t i = 0; i < d.size(); ++i) d[i] += o.d[i];
    return *this;
  }
  JetC& operator-=(const JetC& o) {
    v -= o.v;
    for (size_t i = 0; i < d.size(); ++i) d[i] -= o.d[i];
    return *this;
  }
};

inline JetC operator+(JetC a, const JetC& b) { return a += b; }
inline JetC operator-(JetC a, const JetC& b) { return a -= b; }
inline JetC operator*(const JetC& a, const JetC& b) {
  JetC out(a.v * b.v, a.d.size());
  for (size_t i = 0; i < a.d.size(); ++i) out.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return out;
}
inline JetC conj(JetC a) {
  a.v = conj(a.v);
  for (auto& p : a.d) p = conj(p);
  return a;
}

// a_n for n <= n_max from prime coefficients. Throws if a prime <= n_max is
// missing from the map. Index 0 of the result is unused; a_1 = 1.
std::vector<Complex> euler_extend(const std::map<unsigned long, Complex>& a_p,
                                  unsigned long n_max);

// Same, carrying derivatives. a_p values are jets seeded by the caller.
std::vector<JetC> euler_extend_jets(const std::map<unsigned long, JetC>& a_p,
                                    unsigned long n_max, size_t n_params);

// Power-series inversion of the local factor to order x^k_max: independent
// route to a_{p^k}, used as an oracle against the recursion.
std::vector<Complex> local_series(const Complex& ap, unsigned k_max);

// d_3(n): number of ordered factorizations into three parts; the Dirichlet
// tail majorant uses |a_n| <= d_3(n).
unsigned long divisor3(unsigned long n);

}  // namespace lspace
