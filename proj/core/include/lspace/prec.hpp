#pragma once

// Arbitrary-precision scalar layer: real numbers on MPFR, a complex type
// built on top of them, working-precision management, and the handful of
// special values (pi, Euler gamma, zeta, Bernoulli numbers) the analytic
// modules keep reaching for.
//
// All precision is decimal-digit based. Internally every public entry point
// runs at ctx.working_digits + kGuardDigits; results are meaningful to
// roughly working_digits.

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lspace {

namespace mp = boost::multiprecision;

using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Integer = mp::number<mp::gmp_int, mp::et_off>;

// Digits of slack between the user-visible precision and the precision
// arithmetic actually runs at.
inline constexpr unsigned kGuardDigits = 15;

// RAII guard that sets the thread-local default mpfr precision (in decimal
// digits) and restores the previous value on scope exit.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10)
      : previous_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~ScopedPrecision() { Real::default_precision(previous_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned previous_;
};

// Working-precision contract for the analytic engine.
//
// working_digits: decimal digits carried through the computation (>= 30).
// cutoff:         largest Dirichlet index n kept in truncated sums
//                 (0 = choose automatically from tail_target).
// tail_target:    certified bound the dropped Dirichlet tail must satisfy.
struct PrecisionContext {
  unsigned working_digits = 60;
  unsigned cutoff = 0;
  double tail_target_log10 = -30.0;  // tail bound requested: 10^this

  PrecisionContext() = default;
  explicit PrecisionContext(unsigned digits, unsigned cut = 0,
                            double tail_log10 = 0.0)
      : working_digits(digits), cutoff(cut) {
    if (digits < 30) throw std::invalid_argument("working_digits must be >= 30");
    tail_target_log10 =
        (tail_log10 == 0.0) ? -(static_cast<double>(digits) / 2.0) : tail_log10;
  }
  unsigned effective_digits() const { return working_digits + kGuardDigits; }
};

// ---------------------------------------------------------------------------
// Complex arithmetic on Real. Minimal but complete for our needs.
// ---------------------------------------------------------------------------

struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r) : re(r), im(0) {}
  Complex(double r, double i) : re(r), im(i) {}

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Complex& operator/=(const Complex& o);
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator*(const Real& a, Complex b) { b.re *= a; b.im *= a; return b; }
inline Complex operator*(Complex b, const Real& a) { return a * b; }
inline Complex operator/(Complex b, const Real& a) { b.re /= a; b.im /= a; return b; }
inline Complex conj(Complex z) { z.im = -z.im; return z; }

Real abs(const Complex& z);
Real norm(const Complex& z);   // |z|^2
Real arg(const Complex& z);    // atan2(im, re)
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z); // principal branch
Complex pow(const Complex& z, const Complex& w);
Complex pow(const Complex& z, long n);
// n^{-s} for positive real n, complex s; exact-ish via exp(-s log n).
Complex npow(const Real& n, const Complex& minus_s);

inline Complex& Complex::operator/=(const Complex& o) {
  Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = r;
  return *this;
}

// ---------------------------------------------------------------------------
// Constants and scalar special functions at the current working precision.
// ---------------------------------------------------------------------------

Real const_pi();
Real const_euler();      // Euler-Mascheroni gamma
Real const_log2();
Real const_log_pi();
Real const_log_2pi();

// Riemann zeta for real s (s != 1), at current precision.
Real zeta(const Real& s);
inline Real zeta_int(unsigned j) { return zeta(Real(j)); }

// Exact Bernoulli number B_{2n} (B_0 = 1, B_2 = 1/6, ...).
const Rational& bernoulli_2n(unsigned n);
// B_{2n} rounded to the current working precision.
Real bernoulli_2n_real(unsigned n);

// ---------------------------------------------------------------------------
// Decimal-string helpers. The store keeps coefficients as decimal strings to
// preserve the precision they were computed to, so parsing/printing must not
// silently lose digits.
// ---------------------------------------------------------------------------

// Parse a decimal string at a precision wide enough for all its digits.
Real parse_decimal(const std::string& text);
// Number of significant decimal digits in a decimal string.
int decimal_digit_count(const std::string& text);
// Fixed-notation string with `digits` significant digits.
std::string to_decimal_string(const Real& x, int digits);

// ---------------------------------------------------------------------------
// SplitMix64: tiny splittable generator for reproducible Monte-Carlo shards.
// Each shard derives its own stream from (seed, shard_index).
// ---------------------------------------------------------------------------

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static SplitMix64 for_shard(std::uint64_t seed, std::uint64_t shard) {
    SplitMix64 root(seed);
    std::uint64_t a = root.next(), b = root.next();
    return SplitMix64(a + shard * (b | 1));
  }
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0,1).
  double next_double() { return (next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace lspace
