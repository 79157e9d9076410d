#include "lspace/prec.hpp"

#include <mpfr.h>

#include <cctype>
#include <mutex>
#include <sstream>

namespace lspace {

Real abs(const Complex& z) {
  if (z.im == 0) return mp::abs(z.re);
  if (z.re == 0) return mp::abs(z.im);
  return sqrt(z.re * z.re + z.im * z.im);
}

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) {
  Real m = mp::exp(z.re);
  if (z.im == 0) return {m, Real(0)};
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) {
  return {mp::log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
  Real r = abs(z);
  if (r == 0) return {Real(0), Real(0)};
  // Principal branch via half-angle.
  Real u = mp::sqrt((r + mp::abs(z.re)) / 2);
  Real v = z.im / (2 * u);
  if (z.re >= 0) return {u, v};
  if (z.im >= 0) return {v, u};
  return {-v, -u};
}

Complex pow(const Complex& z, const Complex& w) {
  if (w.im == 0 && w.re == 0) return {Real(1), Real(0)};
  return exp(w * log(z));
}

Complex pow(const Complex& z, long n) {
  if (n == 0) return {Real(1), Real(0)};
  if (n < 0) return Complex(Real(1)) / pow(z, -n);
  Complex base = z, acc{Real(1), Real(0)};
  long e = n;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Complex npow(const Real& n, const Complex& minus_s) {
  Real ln = mp::log(n);
  return exp(Complex(minus_s.re * ln, minus_s.im * ln));
}

// --- constants -------------------------------------------------------------

Real const_pi() {
  Real r(0);
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real const_euler() {
  Real r(0);
  mpfr_const_euler(r.backend().data(), MPFR_RNDN);
  return r;
}

Real const_log2() {
  Real r(0);
  mpfr_const_log2(r.backend().data(), MPFR_RNDN);
  return r;
}

Real const_log_pi() { return mp::log(const_pi()); }

Real const_log_2pi() { return mp::log(2 * const_pi()); }

Real zeta(const Real& s) {
  Real r(0);
  mpfr_zeta(r.backend().data(), s.backend().data(), MPFR_RNDN);
  return r;
}

// --- Bernoulli numbers -----------------------------------------------------
//
// Exact B_{2n} via the Akiyama-Tanigawa style recurrence on rationals:
//   B_m = -sum_{j=0}^{m-1} C(m+1, j) B_j / (m+1).
// Cached; extended on demand under a mutex.

namespace {
std::vector<Rational>& bernoulli_cache() {
  static std::vector<Rational> cache;  // cache[m] = B_m for all m (odd ones too)
  return cache;
}
std::mutex bernoulli_mutex;

void extend_bernoulli(unsigned m_needed) {
  auto& c = bernoulli_cache();
  if (c.empty()) {
    c.push_back(Rational(1));                 // B_0
    c.push_back(Rational(-1) / 2);            // B_1
  }
  while (c.size() <= m_needed) {
    unsigned m = static_cast<unsigned>(c.size());
    if (m % 2 == 1) {
      c.push_back(Rational(0));
      continue;
    }
    Rational acc(0);
    Integer binom(1);  // C(m+1, j), built incrementally
    for (unsigned j = 0; j < m; ++j) {
      if (j > 0) binom = binom * (m + 2 - j) / j;
      acc += Rational(binom) * c[j];
    }
    c.push_back(-acc / (m + 1));
  }
}
}  // namespace

const Rational& bernoulli_2n(unsigned n) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  extend_bernoulli(2 * n);
  return bernoulli_cache()[2 * n];
}

Real bernoulli_2n_real(unsigned n) {
  // Rounded values are requested once per Stirling term; cache per precision.
  thread_local std::vector<Real> cache;
  thread_local unsigned cache_precision = 0;
  unsigned prec = Real::default_precision();
  if (prec != cache_precision) {
    cache.clear();
    cache_precision = prec;
  }
  if (n < cache.size()) return cache[n];
  while (cache.size() <= n) {
    Rational b = bernoulli_2n(static_cast<unsigned>(cache.size()));
    cache.push_back(Real(numerator(b)) / Real(denominator(b)));
  }
  return cache[n];
}

// --- decimal strings ---------------------------------------------------------

int decimal_digit_count(const std::string& text) {
  int digits = 0;
  bool seen_nonzero = false;
  for (char ch : text) {
    if (ch == 'e' || ch == 'E') break;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (ch != '0') seen_nonzero = true;
      if (seen_nonzero) ++digits;
    }
  }
  return digits == 0 ? 1 : digits;
}

Real parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  int digits = decimal_digit_count(text);
  unsigned prec = std::max<unsigned>(Real::default_precision(),
                                     static_cast<unsigned>(digits) + 5);
  Real r(0, prec);
  if (mpfr_set_str(r.backend().data(), text.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("malformed decimal string: " + text);
  return r;
}

std::string to_decimal_string(const Real& x, int digits) {
  if (digits < 1) digits = 1;
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

}  // namespace lspace
