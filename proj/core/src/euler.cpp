#include "lspace/euler.hpp"

#include <stdexcept>

namespace lspace {

namespace {

template <typename Scalar>
std::vector<Scalar> extend(const std::map<unsigned long, Scalar>& a_p,
                           unsigned long n_max, const Scalar& one,
                           const Scalar& zero) {
  std::vector<Scalar> a(n_max + 1, zero);
  if (n_max >= 1) a[1] = one;
  // Prime powers by the cubic recursion, then multiplicativity via the
  // smallest-prime-factor split.
  std::vector<unsigned long> spf(n_max + 1, 0);
  for (unsigned long p = 2; p <= n_max; ++p)
    if (spf[p] == 0)
      for (unsigned long m = p; m <= n_max; m += p)
        if (spf[m] == 0) spf[m] = p;

  for (unsigned long p = 2; p <= n_max; ++p) {
    if (spf[p] != p) continue;  // not prime
    auto it = a_p.find(p);
    if (it == a_p.end())
      throw std::invalid_argument("euler_extend: missing a_p for p = " +
                                  std::to_string(p));
    Scalar ap = it->second;
    Scalar ap_bar = conj(it->second);
    Scalar pk_minus[3] = {one, zero, zero};  // a_{p^{k-1}}, a_{p^{k-2}}, a_{p^{k-3}}
    unsigned long pk = p;
    while (pk <= n_max) {
      Scalar next = ap * pk_minus[0] - ap_bar * pk_minus[1] + pk_minus[2];
      a[pk] = next;
      pk_minus[2] = pk_minus[1];
      pk_minus[1] = pk_minus[0];
      pk_minus[0] = next;
      if (pk > n_max / p) break;
      pk *= p;
    }
  }

  for (unsigned long n = 2; n <= n_max; ++n) {
    unsigned long p = spf[n], q = 1, m = n;
    while (m % p == 0) {
      m /= p;
      q *= p;
    }
    if (m > 1) a[n] = a[q] * a[m];  // gcd(q, m) = 1, a[m] already filled
  }
  return a;
}

}  // namespace

std::vector<Complex> euler_extend(const std::map<unsigned long, Complex>& a_p,
                                  unsigned long n_max) {
  return extend<Complex>(a_p, n_max, Complex(Real(1)), Complex(Real(0)));
}

std::vector<JetC> euler_extend_jets(const std::map<unsigned long, JetC>& a_p,
                                    unsigned long n_max, size_t n_params) {
  return extend<JetC>(a_p, n_max, JetC(Complex(Real(1)), n_params),
                      JetC(Complex(Real(0)), n_params));
}

std::vector<Complex> local_series(const Complex& ap, unsigned k_max) {
  // 1 / (1 - a x + conj(a) x^2 - x^3) as a power series.
  std::vector<Complex> c(k_max + 1, Complex(Real(0)));
  Complex abar = conj(ap);
  c[0] = Complex(Real(1));
  for (unsigned k = 1; k <= k_max; ++k) {
    Complex acc = ap * c[k - 1];
    if (k >= 2) acc -= abar * c[k - 2];
    if (k >= 3) acc += c[k - 3];
    c[k] = acc;
  }
  return c;
}

unsigned long divisor3(unsigned long n) {
  unsigned long count = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= (e + 1) * (e + 2) / 2;  // compositions of e into 3 parts
  }
  if (n > 1) count *= 3;
  return count;
}

}  // namespace lspace
