#include "lspace/measures.hpp"

#include <cmath>

#include "lspace/quadrature.hpp"

namespace lspace {

Real mod_abs(const Real& t, ModAbsKind kind) {
  if (kind == ModAbsKind::zero) return mp::abs(t);
  Real half_pi_t = const_pi() * t / 2;
  // Series near 0 where tanh/coth lose accuracy or blow up:
  //   t tanh(pi t/2) = (pi/2) t^2 - (pi/2)^3 t^4 / 3 + ...
  //   t coth(pi t/2) = 2/pi + (pi/6) t^2 - ...
  Real small = pow(Real(10), -static_cast<int>(Real::default_precision()) / 3);
  if (mp::abs(t) < small) {
    Real t2 = t * t;
    if (kind == ModAbsKind::plus)
      return const_pi() / 2 * t2 - pow(const_pi() / 2, 3) * t2 * t2 / 3;
    return 2 / const_pi() + const_pi() * t2 / 6;
  }
  if (kind == ModAbsKind::plus) return t * tanh(half_pi_t);
  return t / tanh(half_pi_t);
}

Real plancherel_constant(int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  Real num = pow(Real(d), Real(3) / 2);
  Real den = pow(Real(2), Real((d + 3) * (d - 1)) / 2);
  Real prod(1);
  for (int j = 2; j <= d; ++j) prod *= zeta_int(j) / pow(const_pi(), j);
  return num / den * prod;
}

Real plancherel_constant_via_volumes(int d) {
  if (d < 2) throw std::invalid_argument("volume route needs d >= 2");
  Real m = Real((d + 2) * (d - 1)) / 2;
  Real pi = const_pi();

  // Volume of the arithmetic quotient.
  Real vol_M = Real(d) / pow(pi, m / 2);
  for (int j = 2; j <= d; ++j) vol_M *= zeta_int(j) * tgamma(Real(j) / 2);

  // Coefficient of T^{m/2} in the eigenvalue-count asymptotic.
  Real count_coeff = vol_M / (tgamma(m / 2 + 1) * pow(4 * pi, m / 2));

  // Euclidean volume of the radius-r coefficient ball (Selberg integral).
  Real r = sqrt(Real(2));  // so the eigenvalue cutoff T = r^2 / 2 equals 1
  Real vol_Y = pow(Real(2), -Real(d * (d - 1)) / 4) / sqrt(Real(d)) /
               tgamma(m / 2 + 1) * pow(r, m);
  for (int j = 2; j <= d; ++j) vol_Y *= tgamma(Real(j) / 2);

  Real T = r * r / 2;
  return count_coeff * pow(T, m / 2) / vol_Y;
}

namespace {

struct TaggedPoint {
  int tag;  // 0: Z_+, 1: Z_-, 2: Z_2
  Complex z;
};

std::vector<TaggedPoint> tagged_points(const SpectralPoint& p) {
  std::vector<TaggedPoint> pts;
  for (const auto& f : p.r) pts.push_back({f.delta, {f.lambda, Real(0)}});
  for (const auto& f : p.c) {
    pts.push_back({2, {f.beta, f.kappa}});
    pts.push_back({2, {f.beta, -f.kappa}});
  }
  return pts;
}

}  // namespace

Real mu_density(const SpectralPoint& p) {
  auto pts = tagged_points(p);
  RefinedSignature sig = p.signature();
  Real prod = plancherel_constant(p.degree()) /
              pow(Real(2), sig.d1() + sig.d_two);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].tag == 2 || pts[j].tag == 2) {
        prod *= abs(pts[i].z - pts[j].z);
      } else if (pts[i].tag == pts[j].tag) {
        prod *= mod_abs(pts[i].z.re - pts[j].z.re, ModAbsKind::plus);
      } else {
        prod *= mod_abs(pts[i].z.re - pts[j].z.re, ModAbsKind::minus);
      }
    }
  return prod;
}

Real mu_prime_density(const SpectralPoint& p) {
  auto pts = tagged_points(p);
  Real prod = plancherel_constant(p.degree()) / pow(Real(2), p.signature().d1());
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      prod *= abs(pts[i].z - pts[j].z);
  return prod;
}

namespace {

// Landscape coordinates -> spectral point, for the degree-3 signatures.
SpectralPoint landscape_point(const RefinedSignature& sig, const Real& x,
                              const Real& y) {
  if (sig.degree() != 3)
    throw std::invalid_argument("parameter rectangles implemented for d = 3");
  if (sig.d_two == 0) {
    SpectralPoint p;
    // (l1, l2) with l3 = -l1 - l2; deltas in canonical multiset order.
    std::vector<int> deltas;
    for (int i = 0; i < sig.d_plus; ++i) deltas.push_back(0);
    for (int i = 0; i < sig.d_minus; ++i) deltas.push_back(1);
    p.r = {{deltas[0], x}, {deltas[1], y}, {deltas[2], -x - y}};
    int digits = static_cast<int>(Real::default_precision());
    return canonicalize(std::move(p), pow(Real(10), -(digits - 8)));
  }
  // (kappa, lambda)
  return point_rc(sig.d_minus == 1 ? 1 : 0, x, y);
}

MassResult quad_mass(const std::function<Real(const Real&, const Real&)>& f,
                     const Rectangle& rect, unsigned long budget) {
  // Two tensor levels; error = half the difference.
  unsigned n = 12;
  unsigned panels = 4;
  auto level = [&](unsigned pn) {
    Real acc(0);
    Real wx = (rect.x1 - rect.x0) / pn, wy = (rect.y1 - rect.y0) / pn;
    const GLRule& rule = gauss_legendre(n);
    for (unsigned i = 0; i < pn; ++i)
      for (unsigned j = 0; j < pn; ++j) {
        Real x0 = rect.x0 + i * wx, y0 = rect.y0 + j * wy;
        Real midx = x0 + wx / 2, midy = y0 + wy / 2;
        for (unsigned a = 0; a < n; ++a)
          for (unsigned b = 0; b < n; ++b)
            acc += rule.weights[a] * rule.weights[b] *
                   f(midx + wx / 2 * rule.nodes[a], midy + wy / 2 * rule.nodes[b]);
      }
    return acc * (rect.x1 - rect.x0) * (rect.y1 - rect.y0) / (4 * pn * pn);
  };
  MassResult res;
  unsigned long need = static_cast<unsigned long>(n) * n * panels * panels * 5;
  res.budget_exhausted = budget < need;
  if (res.budget_exhausted && budget < 4 * n * n) {
    panels = 1;
  }
  Real coarse = level(panels);
  Real fine = level(2 * panels);
  res.value = fine;
  res.error = mp::abs(fine - coarse) / 2;
  res.evaluations = static_cast<unsigned long>(n) * n * (panels * panels + 4 * panels * panels);
  return res;
}

MassResult mc_mass(const std::function<Real(const Real&, const Real&)>& f,
                   const Rectangle& rect, unsigned long budget,
                   std::uint64_t seed) {
  // Stratified Monte-Carlo: G x G strata, equal samples per stratum,
  // one splittable shard per stratum row.
  unsigned G = 16;
  unsigned long per_stratum = std::max<unsigned long>(4, budget / (G * G));
  Real area = rect.area();
  Real sum(0), sum2(0);
  unsigned long total = 0;
  Real wx = (rect.x1 - rect.x0) / G, wy = (rect.y1 - rect.y0) / G;
  for (unsigned i = 0; i < G; ++i) {
    SplitMix64 rng = SplitMix64::for_shard(seed, i);
    for (unsigned j = 0; j < G; ++j)
      for (unsigned long k = 0; k < per_stratum; ++k) {
        Real x = rect.x0 + wx * (i + Real(rng.next_double()));
        Real y = rect.y0 + wy * (j + Real(rng.next_double()));
        Real v = f(x, y);
        sum += v;
        sum2 += v * v;
        ++total;
      }
  }
  MassResult res;
  Real mean = sum / total;
  res.value = mean * area;
  Real var = sum2 / total - mean * mean;
  if (var < 0) var = 0;
  res.error = area * sqrt(var / Real(total));
  res.evaluations = total;
  res.budget_exhausted = total >= budget;
  return res;
}

}  // namespace

MassResult region_mass(const MeasureDensity& density, const Rectangle& rect,
                       MassMethod method, unsigned long budget,
                       std::uint64_t seed) {
  if (rect.x1 <= rect.x0 || rect.y1 <= rect.y0)
    return {Real(0), Real(0), false, 0};

  if (density.coords == RegionCoords::coefficient) {
    if (!density.euclidean)
      throw std::invalid_argument(
          "coefficient-coordinate masses are defined for the Euclidean mu'");
    // Pushforward of mu'_d is exactly P_d dc_2 ... dc_d.
    MassResult res;
    res.value = plancherel_constant(density.degree) * rect.area();
    res.error = Real(0);
    return res;
  }

  RefinedSignature sig = density.signature;
  if (!density.euclidean && sig.d_two > 0) {
    // mu on X_{tau c}: mass concentrates on half-integral kappa lines.
    MassResult res;
    res.value = Real(0);
    res.error = Real(0);
    long k2_lo = static_cast<long>(ceil(2 * rect.x0));
    long k2_hi = static_cast<long>(floor(2 * rect.x1));
    for (long k2 = std::max(1L, k2_lo); k2 <= k2_hi; ++k2) {
      Real kappa = Real(k2) / 2;
      auto line = [&](const Real& lam) {
        return mu_density(landscape_point(sig, kappa, lam));
      };
      Real coarse = integrate_panels(line, rect.y0, rect.y1, 4, 12);
      Real fine = integrate_panels(line, rect.y0, rect.y1, 8, 12);
      res.value += fine;
      res.error += mp::abs(fine - coarse) / 2;
      res.evaluations += 12 * 12;
    }
    res.budget_exhausted = res.evaluations > budget;
    return res;
  }

  auto f = [&](const Real& x, const Real& y) {
    SpectralPoint p = landscape_point(sig, x, y);
    return density.euclidean ? mu_prime_density(p) : mu_density(p);
  };
  return method == MassMethod::quadrature ? quad_mass(f, rect, budget)
                                          : mc_mass(f, rect, budget, seed);
}

long dim_Sk(long k) {
  if (k < 12 || k % 2 == 1) return 0;
  long base = k / 12;
  return (k % 12 == 2) ? base - 1 : base;
}

D2Counts d2_counts(long K) {
  if (K <= 0 || K % 12 != 0)
    throw std::invalid_argument("d2_counts needs K a positive multiple of 12");
  Rational Kq(K);
  D2Counts out;
  out.mu_prime_mass = (2 * Kq - 1) * (2 * Kq - 1) / 192;
  out.mu_mass = Kq * (Kq - 1) / 48;
  out.actual_count = (Kq * Kq - 12 * Kq + 48) / 48;
  return out;
}

Real secondary_density(SecondaryKind kind, const Real& arg) {
  if (arg <= 0) throw std::invalid_argument("secondary density needs arg > 0");
  Real pi = const_pi();
  switch (kind) {
    case SecondaryKind::c: {
      if (arg <= 10)
        throw std::invalid_argument("f_c is calibrated for c2 > 10");
      return (1 - Real("3.25") / sqrt(arg)) / 12;
    }
    case SecondaryKind::pp: {
      // 3 log(2 b^3 / pi^4) = 9 log b - 3 log(pi^4 / 2)
      Real corr = 3 * log(2 * pow(arg, 3) / pow(pi, 4)) / (pi * sqrt(arg));
      return (1 - corr) / 24;
    }
    case SecondaryKind::mm: {
      Real corr = 3 * log(8 * arg) / (pi * sqrt(arg));
      return (1 - corr) / 24;
    }
  }
  throw std::logic_error("unreachable");
}

long nu1(unsigned long N) {
  if (N == 0) throw std::invalid_argument("conductor must be >= 1");
  long count = 1;
  unsigned long n = N;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned long pj = 1, phi_prev = 1, phi = 1;
    while (n % p == 0) {
      n /= p;
      phi_prev = (pj == 1) ? 1 : phi;
      pj *= p;
      phi = pj / p * (p - 1);
    }
    count *= static_cast<long>(phi) - static_cast<long>(phi_prev);
  }
  if (n > 1) count *= static_cast<long>(n) - 2;  // a single prime remains
  return count;
}

}  // namespace lspace
