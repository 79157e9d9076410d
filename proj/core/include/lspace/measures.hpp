#pragma once

// Archimedean Plancherel analytics: the modified absolute values |t|_eps,
// Plancherel densities mu_d (modified distances) and mu'_d (plain Euclidean
// distances), the constants P_d by the closed form and independently by the
// volume-ratio route, masses of rectangles, the degree-2 calibration suite
// (cusp-form dimensions, exact counting identities, secondary densities),
// and the conductor count nu_1.

#include <functional>

#include "lspace/spectra.hpp"

namespace lspace {

enum class ModAbsKind { plus, minus, zero };

// |t|_+ = t tanh(pi t / 2), |t|_- = t coth(pi t / 2), |t|_0 = |t|.
// All even; |t|_+ <= |t| <= |t|_-; |0|_- = 2/pi.
Real mod_abs(const Real& t, ModAbsKind kind);

// P_d = d^{3/2} / 2^{(d+3)(d-1)/2} * prod_{j=2}^d zeta(j)/pi^j.
Real plancherel_constant(int d);

// The same constant assembled from the Laplacian-eigenvalue counting
// asymptotic, the arithmetic-quotient volume, and the Selberg-integral
// volume of the coefficient-space ball, evaluated literally and divided
// out. Agreement with plancherel_constant is a cross-check of all three.
Real plancherel_constant_via_volumes(int d);

// Pairing rule for mu_d: a pair of real points with equal delta pairs with
// subscript +, a real pair with opposite delta pairs with -, and any pair
// involving a complex (Z_2) point takes the plain modulus. This is the
// Harish-Chandra parity rule; it reproduces the closed degree-3 forms
//   X_+++ : (P/8) |l1-l2|_+ |2l1+l2|_+ |l1+2l2|_+
//   X_+-- : (P/8) |l1-l2|_- |2l1+l2|_- |l1+2l2|_+   (the +: the two delta=1)
//   X_tc  : (P/8) kappa (4 kappa^2 + 9 lambda^2).
Real mu_density(const SpectralPoint& p);

// mu'_d: plain Euclidean distances, P_d / 2^{d_1} normalization; kappa is a
// free coordinate (generalized points allowed). Pushes forward to the
// Euclidean measure P_d dc_2 ... dc_d on coefficient space.
Real mu_prime_density(const SpectralPoint& p);

// --- region masses -----------------------------------------------------------

struct Rectangle {
  Real x0, x1, y0, y1;
  Real area() const { return (x1 - x0) * (y1 - y0); }
};

enum class RegionCoords { parameter, coefficient };
enum class MassMethod { quadrature, monte_carlo };

// What to integrate: a degree-3 landscape density in its figure coordinates,
// or the Euclidean pushforward on coefficient space.
struct MeasureDensity {
  int degree = 3;
  RefinedSignature signature;       // used in parameter coordinates
  bool euclidean = false;           // mu' (true) vs mu (false)
  RegionCoords coords = RegionCoords::parameter;
  // parameter coords per landscape: (l1, l2) for d_2 = 0, (kappa, lambda)
  // for d_2 = 1 signatures.
};

struct MassResult {
  Real value;
  Real error;          // half the difference of two refinement levels / MC sigma
  bool budget_exhausted = false;
  unsigned long evaluations = 0;
};

// Mass of `rect` under the density. Quadrature: tensor Gauss-Legendre with
// one refinement for the error estimate. Monte-Carlo: stratified, splittable
// seeded shards. `budget` caps density evaluations. On X_{tau c} with mu
// (non-Euclidean), mass is the sum over half-integral kappa lines crossing
// the rectangle of 1-D line masses.
MassResult region_mass(const MeasureDensity& density, const Rectangle& rect,
                       MassMethod method, unsigned long budget,
                       std::uint64_t seed = 1);

// --- degree-2 calibration ------------------------------------------------------

// dim S_k(1), the space of level-one cusp forms of weight k.
long dim_Sk(long k);

struct D2Counts {
  Rational mu_prime_mass;  // (K - 1/2)^2 / 48
  Rational mu_mass;        // K (K - 1) / 48
  Rational actual_count;   // sum_{k=2}^K dim S_k(1)  (= K^2/48 - K/4 + 1)
};
// Masses of [0, C] with cutoff C = ((K - 1/2)/2)^2, for K a multiple of 12.
D2Counts d2_counts(long K);

enum class SecondaryKind { c, pp, mm };
// Secondary-corrected densities on the degree-2 coefficient line:
//   f_c(c2)  = (1/12)(1 - 3.25 / sqrt(c2)),            c2 > 10,
//   f_pp(b)  = (1/24)(1 - 3 log(2 b^3 / pi^4) / (pi sqrt b)),
//   f_mm(b)  = (1/24)(1 - 3 log(8 b) / (pi sqrt b)),   b = |c2| > 0.
Real secondary_density(SecondaryKind kind, const Real& arg);

// Number of primitive Dirichlet characters of conductor N (multiplicative;
// nu_1(p) = p - 2, nu_1(2) = 0, nu_1(1) = 1).
long nu1(unsigned long N);

}  // namespace lspace
