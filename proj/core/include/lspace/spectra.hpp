#pragma once

// Domain model for (generalized) archimedean Gamma-factors of L-functions:
// discrete Gamma-types, spectral points carrying the continuous parameters,
// the equivalent dot-diagram view, refined signatures, parity/sign
// invariants, conductor-1 admissibility, duality, and the component count of
// the parameter space in each degree.
//
// Conventions. A Gamma-factor is
//   prod_j Gamma_R(s + delta_j + i lambda_j) * prod_k Gamma_C(s + kappa_k + i beta_k)
// with delta in {0,1}, kappa > 0 (half-integral for actual L-functions), and
// the balance condition sum lambda_j + 2 sum beta_k = 0. Canonical internal
// order sorts the R-factors by (delta, lambda) and the C-factors by
// (kappa, beta); the per-landscape figure conventions are applied only by
// the presentation helpers at the bottom of this header.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lspace/prec.hpp"

namespace lspace {

// Discrete part of a Gamma-factor: the delta list and the 2*kappa list.
// kappa is stored exactly as an integer numerator over 2.
struct GammaType {
  std::vector<int> deltas;       // each 0 or 1, sorted ascending
  std::vector<int> two_kappas;   // each >= 1, sorted ascending

  int degree() const {
    return static_cast<int>(deltas.size() + 2 * two_kappas.size());
  }
  bool operator==(const GammaType&) const = default;
};

struct RefinedSignature {
  int d_plus = 0, d_minus = 0, d_two = 0;
  int degree() const { return d_plus + d_minus + 2 * d_two; }
  int d1() const { return d_plus + d_minus; }
  bool operator==(const RefinedSignature&) const = default;
};

// Exact fourth root of unity, the value group of epsilon_infinity at N = 1.
struct UnitFourth {
  int power = 0;  // i^power, power mod 4
  int re() const { return power % 4 == 0 ? 1 : (power % 4 == 2 ? -1 : 0); }
  int im() const { return power % 4 == 1 ? 1 : (power % 4 == 3 ? -1 : 0); }
  UnitFourth conj() const { return {(4 - power % 4) % 4}; }
  bool operator==(const UnitFourth&) const = default;
};

// LMFDB-style parsing/printing: "r0r0r1c5" etc.
GammaType parse_gamma_type(const std::string& text);
std::string print_gamma_type(const GammaType& g);
// RefinedSignature as "+--", "+c", ... (one '+'/'-' per R-factor, 'c' per pair).
std::string print_signature(const RefinedSignature& sig);

RefinedSignature refined_signature(const GammaType& g);

// chi(-1) = (-1)^{sum delta_j + sum (2 kappa_k + 1)}; returns +1 or -1.
int central_character_parity(const GammaType& g);

// epsilon_infinity: multiplicative over factors, r0 -> 1, r1 -> i,
// cK -> i^{K+1}.
UnitFourth epsilon_infinity(const GammaType& g);

struct Admissibility {
  bool admissible = false;
  bool warning = false;  // true when N >= 3: only parity realizability checked
};
// N = 1 (and 2) force chi(-1) = +1; for N >= 3 both parities occur, so the
// check degenerates to `true` with a warning flag.
Admissibility is_admissible(const GammaType& g, unsigned N);

// A point of a (possibly generalized) parameter space: continuous spectral
// parameters attached to a discrete shape. kappa is a positive real here;
// points of actual L-functions have half-integral kappa.
struct SpectralPoint {
  struct RFactor {
    int delta = 0;
    Real lambda;
  };
  struct CFactor {
    Real kappa;   // > 0
    Real beta;    // imaginary part; the pair contributes beta +- i kappa to Z_2
  };
  std::vector<RFactor> r;
  std::vector<CFactor> c;

  int degree() const { return static_cast<int>(r.size() + 2 * c.size()); }
  RefinedSignature signature() const;
  Real balance() const;  // sum lambda + 2 sum beta (should be ~0)

  // Discrete shape, when every kappa is half-integral to within tol.
  std::optional<GammaType> gamma_type(const Real& tol) const;
};

// Sorts factors into canonical order and checks invariants (delta in {0,1},
// kappa > 0, |balance| <= tol). Throws std::invalid_argument on violation.
SpectralPoint canonicalize(SpectralPoint p, const Real& tol);

// Dual: negate every lambda and beta (kappa unchanged), re-canonicalized.
SpectralPoint dual(const SpectralPoint& p, const Real& tol);

// Dot diagram (Z_+, Z_-, Z_2): the three multisets of points encoding the
// same data. Z_2 stores one representative beta + i kappa per conjugate pair.
struct DotDiagram {
  std::vector<Real> z_plus;
  std::vector<Real> z_minus;
  std::vector<Complex> z_two;  // im > 0 representative of each pair

  Real point_sum() const;  // counts each pair twice; 0 iff balanced
};

DotDiagram to_dot_diagram(const SpectralPoint& p);
SpectralPoint from_dot_diagram(const DotDiagram& d, const Real& tol);

// Number of connected components of the generalized parameter space X'_d:
// the quarter square floor((d+2)^2 / 4).
long component_count(int d);
// Independent enumeration: all refined signatures with d_+ + d_- + 2 d_2 = d.
std::vector<RefinedSignature> enumerate_signatures(int d);

// --- presentation helpers ---------------------------------------------------
// Figure conventions for the three populated (3,1) landscapes. These only
// affect how coordinates are reported, never the stored canonical form.

// r0r0r0 landscape: order lambda_3 <= lambda_2 <= lambda_1, report
// (lambda_1, lambda_2), dual-reduced to lambda_2 >= 0.
std::array<Real, 2> coords_r0r0r0(const SpectralPoint& p);
// r0r1r1 landscape: lambda_1 on the delta=0 factor, lambda_2 >= lambda_3 on
// the delta=1 factors, dual-reduced to lambda_1 >= 0.
std::array<Real, 2> coords_r0r1r1(const SpectralPoint& p);
// r-delta c-2kappa landscape: (kappa, lambda) with lambda the R-factor
// parameter, dual-reduced to lambda >= 0.
std::array<Real, 2> coords_rc(const SpectralPoint& p);

// Builders from landscape coordinates (balance filled in automatically).
SpectralPoint point_r0r0r0(const Real& lambda1, const Real& lambda2);
SpectralPoint point_r0r1r1(const Real& lambda1, const Real& lambda2);
SpectralPoint point_rc(int delta, const Real& kappa, const Real& lambda);

}  // namespace lspace
