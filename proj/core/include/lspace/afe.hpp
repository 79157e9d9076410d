#pragma once

// Approximate-functional-equation engine.
//
// For a Gamma-factor gamma(s) = prod Gamma_R(s + mu_j) prod Gamma_C(s + nu_k)
// at conductor 1 and a test function g(s) = e^{i a s}, the smoothed
// functional equation reads
//
//   Lambda(s) g(s) = sum_n a_n n^{-s} f1(s, n)
//                  + eps sum_n conj(a_n) n^{-(1-s)} f2(1-s, n),
//
//   f1(s, n) = (1/2 pi i) int_{Re w = nu0} gamma(s+w) g(s+w) n^{-w} dw / w,
//   f2(1-s, n) = the mirror integral with the conjugated spectral parameters
//                and g(s - w).
//
// Shifting the f1 contour across w = 0 picks up gamma(s) g(s), which is how
// the identity above arises; the value is independent of nu0 > 0 because the
// integrand's other poles all lie left of Re w = -1/2.
//
// On the critical line s = 1/2 + i t the second sum is the conjugate mirror
// of the first (f2(1-s, n) = e^{i a} conj(f1(s, n))), and the whole equation
// collapses to one real linear form in the unknowns a_n^r, a_n^i on the
// Z-scale:
//
//   Z(t) e^{-a t} = sum_n 2 Re[ b e^{-i a / 2} n^{-s} f1(s, n) a_n ] / |gamma(s)|,
//
// where b is a fixed square root of 1/eps. Rows of that form are what the
// solver consumes; the printed constant is the n = 1 term.
//
// Cancellation note: |gamma(1/2 + i t)| decays like
// exp(-(pi/4) sum |t + lambda|), while the contour integrand peaks at O(1)
// scale, so roughly (pi/4) sum |t + lambda| / ln 10 digits cancel in every
// row. Row assembly raises the working precision by that amount internally;
// the requested PrecisionContext governs the accuracy of the results.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "lspace/gamma.hpp"
#include "lspace/spectra.hpp"

namespace lspace {

// g(s) = e^{i a s}. Pairing with the Gamma-decay keeps vertical-line
// integrals convergent for |a| < pi d / 4; we restrict to |a| <= 1.2.
struct TestFunction {
  Real a;
  static constexpr double kMaxA = 1.2;
};

// Continuous Gamma-factor data at working precision.
struct GammaData {
  std::vector<Complex> mu;  // delta_j + i lambda_j
  std::vector<Complex> nu;  // kappa_k + i beta_k

  static GammaData from_point(const SpectralPoint& p);
  int degree() const { return static_cast<int>(mu.size() + 2 * nu.size()); }
  // sum log Gamma_R(s + mu_j) + sum log Gamma_C(s + nu_k)
  Complex log_product(const Complex& s) const;
  // Conjugated spectral parameters (the dual's Gamma-data).
  GammaData conjugate_dual() const;
  // Decimal digits expected to cancel in a Z-scale row at height t.
  double cancellation_digits(double t) const;
};

// One assembled Z-scale row at s = 1/2 + i t.
//
//   Z(t) = constant() + sum_{n>=2} weight_re(n) a_n^r + weight_im(n) a_n^i
//
// up to `tail_bound` (a certified bound on everything dropped past the
// cutoff, assuming |a_n| <= d_3(n)). `c[n]` holds the complex row
// coefficient; weight_re = 2 Re c_n, weight_im = -2 Im c_n.
struct AfeRow {
  Real t;
  Real a;                   // test-function parameter
  std::vector<Complex> c;   // 1-based; c[0] unused
  std::vector<Complex> w1;  // raw first-sum weights n^{-s} f1(s,n), 1-based
  Real tail_bound;
  Complex branch;           // the square root of 1/eps used

  unsigned cutoff() const { return static_cast<unsigned>(c.size()) - 1; }
  Real constant() const { return 2 * c[1].re; }
  Real weight_re(unsigned n) const { return 2 * c[n].re; }
  Real weight_im(unsigned n) const { return -2 * c[n].im; }
};

// A located L-function: Gamma data, sign, prime coefficients with their
// stated digit counts, and provenance.
struct LPoint {
  SpectralPoint point;
  unsigned conductor = 1;
  Complex sign;                             // eps (unit modulus)
  std::map<unsigned long, Complex> a_p;
  std::map<unsigned long, int> digits;      // stated digits per prime
  std::string provenance = "search";
  // +1 / -1: factor aligning the canonical branch with the positive-at-0+
  // convention; 0 = not yet determined.
  int z_sign = 0;
};

// Square root of 1/eps with the canonical (principal-argument) branch.
Complex canonical_branch(const Complex& eps);

// Assemble the Z-scale row at t for one test function. N = 1 only.
AfeRow afe_row(const GammaData& gd, const Complex& eps, const Real& t,
               const TestFunction& g, const PrecisionContext& ctx);

// Assemble rows for several test functions at the same t, sharing the
// Gamma-product contour evaluations.
std::vector<AfeRow> afe_rows(const GammaData& gd, const Complex& eps,
                             const Real& t, const std::vector<TestFunction>& gs,
                             const PrecisionContext& ctx);

struct ZValue {
  Real z;              // LMFDB-normalized when sign_hint != 0 or computable
  Real imag_residual;  // |Im| of the assembled complex value (two-sum route)
  Real tail_bound;
  int z_sign;          // the sign convention factor actually applied
};

// Z(t) via the two independent Dirichlet sums (f1 with gamma, f2 with the
// conjugate-dual gamma). Throws if the coefficient supply cannot certify the
// tail at this height. sign_hint: pass a known z_sign to skip the t -> 0+
// convention probe.
ZValue z_value(const LPoint& L, const Real& t, const PrecisionContext& ctx,
               int sign_hint = 0);

// Single-contour Z(t) through the critical-line row (the second sum folded
// in by conjugate symmetry). Half the cost of z_value; no independent
// imaginary-part check. Used by scans.
ZValue z_value_fast(const LPoint& L, const Real& t, const PrecisionContext& ctx,
                    int sign_hint = 0);

// Largest cutoff the L-point's primes can serve exactly: every n whose prime
// factors are all known. Missing-n contributions are charged to the tail.
unsigned usable_cutoff(const LPoint& L, unsigned requested);

struct TrivialZero {
  Complex s;        // zero of Lambda in the s-plane
  Real projection;  // Im s: height of the projection onto the critical line
  int order_index;  // m >= 0: which pole of the factor produced it
};

// Zeros forced by the Gamma-factor poles, restricted to |Im s| within the
// window [height_min, height_max].
std::vector<TrivialZero> trivial_zeros(const GammaData& gd,
                                       const Real& height_min,
                                       const Real& height_max);

struct ScanZero {
  Real t;          // refined location on the critical line
  Real bracket;    // final bracket half-width (<= requested tolerance)
};

struct ZeroScan {
  std::vector<ScanZero> zeros;
  unsigned sign_changes = 0;
  std::vector<std::pair<Real, Real>> samples;  // (t, Z(t)) on the scan grid
};

// Scan Z on [t0, t1] with the given step, bracket sign changes, refine by
// bisection to `tol` (default 1e-8).
ZeroScan zero_scan(const LPoint& L, const Real& t0, const Real& t1,
                   const Real& step, const PrecisionContext& ctx,
                   double tol = 1e-8);

}  // namespace lspace
