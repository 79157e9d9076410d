#include "lspace/afe.hpp"

#include <algorithm>
#include <cmath>

#include "lspace/euler.hpp"

namespace lspace {

namespace {
constexpr double kLn10 = 2.302585092994046;
constexpr double kPi = 3.141592653589793;

// log |Gamma(x + i y)| in double, Stirling with shifts. Planning only.
double ln_abs_gamma_d(double x, double y) {
  double shift = 0;
  while (x * x + y * y < 100.0) {
    shift -= 0.5 * std::log(x * x + y * y);
    x += 1.0;
  }
  double r2 = x * x + y * y;
  return shift + (x - 0.5) * 0.5 * std::log(r2) - y * std::atan2(y, x) - x +
         0.918938533204673 + x / (12.0 * r2);
}
}  // namespace

GammaData GammaData::from_point(const SpectralPoint& p) {
  GammaData gd;
  for (const auto& f : p.r) gd.mu.push_back({Real(f.delta), f.lambda});
  for (const auto& f : p.c) gd.nu.push_back({f.kappa, f.beta});
  return gd;
}

Complex GammaData::log_product(const Complex& s) const {
  Complex acc{Real(0), Real(0)};
  for (const auto& m : mu) acc += log_gamma_R(s + m);
  for (const auto& n : nu) acc += log_gamma_C(s + n);
  return acc;
}

GammaData GammaData::conjugate_dual() const {
  GammaData gd;
  for (const auto& m : mu) gd.mu.push_back(conj(m));
  for (const auto& n : nu) gd.nu.push_back(conj(n));
  return gd;
}

double GammaData::cancellation_digits(double t) const {
  double e = 0;
  for (const auto& m : mu)
    e += (kPi / 4) * std::abs(t + static_cast<double>(m.im));
  for (const auto& n : nu)
    e += (kPi / 2) * std::abs(t + static_cast<double>(n.im));
  return e / kLn10;
}

Complex canonical_branch(const Complex& eps) {
  Real phi = arg(eps);
  return {cos(phi / 2), -sin(phi / 2)};  // e^{-i Arg(eps) / 2}
}

namespace {

// double-precision magnitude model of the contour integrand (test function
// omitted): log10 | gamma(1/2 + i t + nu0 + i v) | - [include_w] log10 |w|.
struct MagModel {
  std::vector<std::pair<double, double>> r_factors;  // (delta, lambda)
  std::vector<std::pair<double, double>> c_factors;  // (kappa, beta)
  double t = 0;
  double nu0 = 0;
  bool include_w = true;

  double log10_at(double v) const {
    double ln = 0;
    for (auto [delta, lambda] : r_factors) {
      double x = (0.5 + nu0 + delta) / 2, y = (t + v + lambda) / 2;
      ln += ln_abs_gamma_d(x, y) - (0.5 + nu0) / 2 * std::log(kPi);
    }
    for (auto [kappa, beta] : c_factors) {
      double x = 0.5 + nu0 + kappa, y = t + v + beta;
      ln += ln_abs_gamma_d(x, y) - (0.5 + nu0) * std::log(2 * kPi);
    }
    if (include_w) ln -= 0.5 * std::log(nu0 * nu0 + v * v);
    return ln / kLn10;
  }
};

MagModel magnitude_model(const GammaData& gd, double t, double nu0) {
  MagModel m;
  m.t = t;
  m.nu0 = nu0;
  for (const auto& mu : gd.mu)
    m.r_factors.push_back(
        {static_cast<double>(mu.re), static_cast<double>(mu.im)});
  for (const auto& nu : gd.nu)
    m.c_factors.push_back(
        {static_cast<double>(nu.re), static_cast<double>(nu.im)});
  return m;
}

double log10_abs_gamma_center(const GammaData& gd, double t) {
  MagModel m = magnitude_model(gd, t, 0.0);
  m.include_w = false;
  return m.log10_at(0.0);
}

struct ContourPlan {
  double v_lo = 0, v_hi = 0;
  double h = 0.1;
  double log10_peak = 0;
};

// Truncation points: where the magnitude, inflated by the worst-case
// |g| = e^{a_max |t+v|}, drops `drop_digits` below the peak.
ContourPlan plan_contour(const MagModel& m, double a_max, double drop_digits,
                         double strip, double extra_digits) {
  ContourPlan plan;
  double peak = -1e9, peak_v = 0;
  for (double v = -m.t - 90; v <= -m.t + 90; v += 0.5) {
    double lg = m.log10_at(v);
    if (lg > peak) {
      peak = lg;
      peak_v = v;
    }
  }
  plan.log10_peak = peak;
  double target = peak - drop_digits;
  auto inflated = [&](double v) {
    return m.log10_at(v) + a_max * std::abs(m.t + v) / kLn10;
  };
  double v = peak_v;
  for (int guard = 0; inflated(v) > target && guard < 4000; ++guard) v -= 0.5;
  plan.v_lo = v - 1;
  v = peak_v;
  for (int guard = 0; inflated(v) > target && guard < 4000; ++guard) v += 0.5;
  plan.v_hi = v + 1;
  plan.h = 2 * kPi * strip / ((drop_digits + extra_digits) * kLn10);
  return plan;
}

// Shared contour: nodes v_k, kernel gamma(s + w_k) / w_k * (h / 2 pi), and
// majorant sums for tail certification.
struct Contour {
  Real nu0;
  Real h;
  Real v0;
  unsigned count = 0;
  std::vector<Complex> kernel;
  Real abs_sum;          // sum |kernel_k|
  Real abs_sum_boosted;  // sum |kernel_k| e^{a_max |t + v_k|}
};

Contour build_contour(const GammaData& gd, const Real& t, double nu0_d,
                      const ContourPlan& plan, double a_max) {
  Contour c;
  c.nu0 = Real(nu0_d);
  c.h = Real(plan.h);
  c.v0 = Real(plan.v_lo);
  c.count = static_cast<unsigned>((plan.v_hi - plan.v_lo) / plan.h) + 1;
  c.kernel.reserve(c.count);
  c.abs_sum = Real(0);
  c.abs_sum_boosted = Real(0);
  Complex s{Real(1) / 2, t};
  Real scale = c.h / (2 * const_pi());
  for (unsigned k = 0; k < c.count; ++k) {
    Real v = c.v0 + k * c.h;
    Complex w{c.nu0, v};
    Complex val = exp(gd.log_product(s + w)) / w * scale;
    Real mag = abs(val);
    c.abs_sum += mag;
    if (a_max > 0)
      c.abs_sum_boosted += mag * exp(Real(a_max) * mp::abs(t + v));
    c.kernel.push_back(val);
  }
  if (a_max <= 0) c.abs_sum_boosted = c.abs_sum;
  return c;
}

// f(n) = n^{-nu0} sum_k kernel_k gfac_k e^{-i v_k ln n}, n = 1..n_max.
std::vector<Complex> contour_sums(const Contour& c,
                                  const std::vector<Complex>& gfac,
                                  unsigned n_max) {
  std::vector<Complex> out(n_max + 1, Complex(Real(0)));
  std::vector<Complex> weighted(c.count);
  for (unsigned k = 0; k < c.count; ++k) weighted[k] = c.kernel[k] * gfac[k];
  for (unsigned k = 0; k < c.count; ++k) out[1] += weighted[k];
  for (unsigned n = 2; n <= n_max; ++n) {
    Real ln_n = log(Real(n));
    Complex step = exp(Complex(Real(0), -c.h * ln_n));
    Complex acc{Real(0), Real(0)};
    Complex phase = exp(Complex(Real(0), -c.v0 * ln_n));
    for (unsigned k = 0; k < c.count; ++k) {
      if (k && k % 256 == 0)  // re-anchor the stepped phase against drift
        phase = exp(Complex(Real(0), -(c.v0 + k * c.h) * ln_n));
      acc += weighted[k] * phase;
      phase *= step;
    }
    out[n] = npow(Real(n), Complex(-c.nu0, Real(0))) * acc;
  }
  return out;
}

// Lambda-scale Dirichlet tail past n0 for one of the two sums:
//   sum_{n > n0} d_3(n) n^{-1/2} |f(n)| <= M sum_{n > n0} n^{1/2 - nu}
//                                       <= M n0^{3/2 - nu} / (nu - 3/2),
// with |f(n)| <= n^{-nu} M and d_3(n) <= n.
Real tail_majorant(const Real& M, double nu, unsigned long n0) {
  return M * pow(Real(n0), Real(1.5) - Real(nu)) / (Real(nu) - Real(1.5));
}

struct RowPlan {
  unsigned cutoff = 0;
  double nu_tail = 8;
  ContourPlan work;
  ContourPlan tail;
  double boost_digits = 0;
};

RowPlan plan_row(const GammaData& gd, double t, double a_max,
                 const PrecisionContext& ctx) {
  RowPlan rp;
  rp.boost_digits = gd.cancellation_digits(t);
  double digits = ctx.effective_digits() + rp.boost_digits;

  double log10_gamma_s = log10_abs_gamma_center(gd, t);
  // Tail target on the Z scale, converted to the Lambda scale.
  double target_log10 =
      ctx.tail_target_log10 + log10_gamma_s - a_max * std::abs(t) / kLn10 - 1.0;

  auto tail_estimate = [&](unsigned n0, double nu) {
    MagModel tm = magnitude_model(gd, t, nu);
    double peak = -1e9;
    for (double v = -t - 60; v <= -t + 60; v += 1.0)
      peak = std::max(peak, tm.log10_at(v));
    double log10_M = peak + 1.6;  // peak x effective width, in log10
    return log10_M + (1.5 - nu) * std::log10(static_cast<double>(n0)) -
           std::log10(nu - 1.5);
  };
  auto best_nu = [&](unsigned n0) {
    double best = 1e9, best_nu_v = 4;
    for (double nu = 4; nu <= 72; nu += 2) {
      double e = tail_estimate(n0, nu);
      if (e < best) {
        best = e;
        best_nu_v = nu;
      }
    }
    return std::make_pair(best_nu_v, best);
  };

  unsigned cutoff = ctx.cutoff;
  if (cutoff == 0) {
    for (unsigned n0 : {12u, 16u, 24u, 32u, 48u, 64u, 96u, 128u, 192u, 256u}) {
      auto [nu, est] = best_nu(n0);
      if (est <= target_log10) {
        cutoff = n0;
        rp.nu_tail = nu;
        break;
      }
    }
    if (cutoff == 0) {
      cutoff = 384;
      rp.nu_tail = best_nu(cutoff).first;
    }
  } else {
    rp.nu_tail = best_nu(cutoff).first;
  }
  rp.cutoff = cutoff;

  double strip = 2.2;
  double extra = 12 + strip * std::log10(static_cast<double>(cutoff));
  MagModel work_model = magnitude_model(gd, t, 2.5);
  rp.work = plan_contour(work_model, a_max, digits + 10, strip, extra);
  MagModel tail_model = magnitude_model(gd, t, rp.nu_tail);
  rp.tail = plan_contour(tail_model, a_max, 24, 1.5, 10);
  rp.tail.h = 0.25;
  return rp;
}

}  // namespace

std::vector<AfeRow> afe_rows(const GammaData& gd, const Complex& eps,
                             const Real& t, const std::vector<TestFunction>& gs,
                             const PrecisionContext& ctx) {
  if (gs.empty()) throw std::invalid_argument("afe_rows: no test functions");
  double a_max = 0;
  for (const auto& g : gs)
    a_max = std::max(a_max, std::abs(static_cast<double>(g.a)));
  if (a_max > TestFunction::kMaxA)
    throw std::invalid_argument("test-function parameter outside |a| <= 1.2");

  RowPlan rp = plan_row(gd, static_cast<double>(t), a_max, ctx);
  ScopedPrecision guard(static_cast<unsigned>(
      ctx.effective_digits() + std::ceil(rp.boost_digits) + 10));

  Real tt = t;
  Complex s{Real(1) / 2, tt};
  Complex branch = canonical_branch(eps);
  Real abs_gamma_s = exp(gd.log_product(s).re);

  Contour work = build_contour(gd, tt, 2.5, rp.work, a_max);
  Contour cert = build_contour(gd, tt, rp.nu_tail, rp.tail, a_max);
  Real tail_lambda = tail_majorant(cert.abs_sum_boosted, rp.nu_tail, rp.cutoff);

  std::vector<AfeRow> rows;
  for (const auto& g : gs) {
    // e^{i a (s + w)} = e^{i a (1/2 + nu0)} e^{-a (t + v)} at each node.
    std::vector<Complex> gfac(work.count);
    Complex const_phase = exp(Complex(Real(0), g.a * (Real(1) / 2 + work.nu0)));
    for (unsigned k = 0; k < work.count; ++k) {
      Real v = work.v0 + k * work.h;
      gfac[k] = const_phase * exp(-g.a * (tt + v));
    }
    std::vector<Complex> f1 = contour_sums(work, gfac, rp.cutoff);

    AfeRow row;
    row.t = tt;
    row.a = g.a;
    row.branch = branch;
    row.c.assign(rp.cutoff + 1, Complex(Real(0)));
    row.w1.assign(rp.cutoff + 1, Complex(Real(0)));
    Complex zfactor = branch * exp(Complex(Real(0), -g.a / 2)) *
                      (exp(g.a * tt) / abs_gamma_s);
    for (unsigned n = 1; n <= rp.cutoff; ++n) {
      row.w1[n] = npow(Real(n), Complex(-s.re, -s.im)) * f1[n];
      row.c[n] = zfactor * row.w1[n];
    }
    // Z-scale tail: both Dirichlet sums, and |a_n| <= d_3(n).
    row.tail_bound = 2 * tail_lambda * exp(g.a * tt) / abs_gamma_s;
    rows.push_back(std::move(row));
  }
  return rows;
}

AfeRow afe_row(const GammaData& gd, const Complex& eps, const Real& t,
               const TestFunction& g, const PrecisionContext& ctx) {
  return afe_rows(gd, eps, t, {g}, ctx)[0];
}

unsigned usable_cutoff(const LPoint& L, unsigned requested) {
  unsigned best = 1;
  for (unsigned n = 2; n <= requested; ++n) {
    unsigned long m = n;
    bool ok = true;
    for (unsigned long p = 2; p * p <= m; ++p)
      while (m % p == 0) {
        if (!L.a_p.count(p)) ok = false;
        m /= p;
      }
    if (m > 1 && !L.a_p.count(m)) ok = false;
    if (!ok) break;  // keep the contiguous usable prefix
    best = n;
  }
  return best;
}

ZValue z_value(const LPoint& L, const Real& t, const PrecisionContext& ctx,
               int sign_hint) {
  if (L.conductor != 1)
    throw std::invalid_argument("z_value implemented for conductor 1");
  GammaData gd = GammaData::from_point(L.point);
  GammaData gdual = gd.conjugate_dual();

  RowPlan rp = plan_row(gd, static_cast<double>(t), 0.0, ctx);
  ScopedPrecision guard(static_cast<unsigned>(
      ctx.effective_digits() + std::ceil(rp.boost_digits) + 10));

  Real tt = t;
  Complex s{Real(1) / 2, tt};
  Complex one_minus_s{Real(1) / 2, -tt};

  unsigned usable = usable_cutoff(L, rp.cutoff);
  std::vector<Complex> a_n = euler_extend(L.a_p, usable);

  Contour work1 = build_contour(gd, tt, 2.5, rp.work, 0.0);
  Contour cert = build_contour(gd, tt, rp.nu_tail, rp.tail, 0.0);
  // Mirror sum: conjugate-dual data at 1 - s; its magnitude profile is the
  // v -> -v reflection, so plan on the dual data at height -t.
  RowPlan rp2 = plan_row(gdual, -static_cast<double>(t), 0.0, ctx);
  Contour work2 = build_contour(gdual, -tt, 2.5, rp2.work, 0.0);

  std::vector<Complex> ones1(work1.count, Complex(Real(1)));
  std::vector<Complex> ones2(work2.count, Complex(Real(1)));
  std::vector<Complex> f1 = contour_sums(work1, ones1, rp.cutoff);
  std::vector<Complex> f2 = contour_sums(work2, ones2, rp.cutoff);

  Complex sum1{Real(0), Real(0)}, sum2{Real(0), Real(0)};
  Real unknown_mass(0);
  for (unsigned n = 1; n <= rp.cutoff; ++n) {
    Complex w1 = npow(Real(n), Complex(-s.re, -s.im)) * f1[n];
    Complex w2 =
        npow(Real(n), Complex(-one_minus_s.re, -one_minus_s.im)) * f2[n];
    if (n <= usable) {
      sum1 += a_n[n] * w1;
      sum2 += conj(a_n[n]) * w2;
    } else {
      unknown_mass += Real(divisor3(n)) * (abs(w1) + abs(w2));
    }
  }
  Complex lambda_val = sum1 + L.sign * sum2;

  Real abs_gamma_s = exp(gd.log_product(s).re);
  Complex branch = canonical_branch(L.sign);
  Complex zc = branch * lambda_val / abs_gamma_s;

  ZValue out;
  out.tail_bound =
      (2 * tail_majorant(cert.abs_sum, rp.nu_tail, rp.cutoff) + unknown_mass) /
      abs_gamma_s;
  if (out.tail_bound > Real(1) / 100)
    throw std::runtime_error(
        "z_value: insufficient coefficients for height t = " +
        to_decimal_string(tt, 6));

  int zs = sign_hint ? sign_hint : L.z_sign;
  if (zs == 0) {
    // LMFDB convention: Z positive just above t = 0.
    ZValue probe = z_value(L, Real(1) / 1000, ctx, +1);
    zs = probe.z >= 0 ? +1 : -1;
  }
  out.z = zs * zc.re;
  out.imag_residual = mp::abs(zc.im);
  out.z_sign = zs;
  return out;
}

std::vector<TrivialZero> trivial_zeros(const GammaData& gd,
                                       const Real& height_min,
                                       const Real& height_max) {
  std::vector<TrivialZero> out;
  const int m_cap = 6;  // poles with Re s down to ~-12: plenty for plots
  for (const auto& mu : gd.mu) {
    Real height = -mu.im;
    if (height < height_min || height > height_max) continue;
    for (int m = 0; m < m_cap; ++m)
      out.push_back({{-mu.re - 2 * m, height}, height, m});
  }
  for (const auto& nu : gd.nu) {
    Real height = -nu.im;
    if (height < height_min || height > height_max) continue;
    for (int m = 0; m < 2 * m_cap; ++m)
      out.push_back({{-nu.re - m, height}, height, m});
  }
  return out;
}

ZeroScan zero_scan(const LPoint& L, const Real& t0, const Real& t1,
                   const Real& step, const PrecisionContext& ctx, double tol) {
  if (step <= 0 || t1 <= t0) throw std::invalid_argument("bad scan range");
  ZeroScan scan;
  int zs = L.z_sign;
  Real prev_t = t0;
  Real prev_z(0);
  bool first = true;
  for (Real t = t0; t <= t1 + step / 2; t += step) {
    ZValue zv = z_value(L, t, ctx, zs);
    zs = zv.z_sign;
    scan.samples.push_back({t, zv.z});
    if (!first && prev_z * zv.z < 0) {
      ++scan.sign_changes;
      Real lo = prev_t, hi = t, flo = prev_z;
      while (hi - lo > tol) {
        Real mid = (lo + hi) / 2;
        Real fm = z_value(L, mid, ctx, zs).z;
        if (flo * fm <= 0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      scan.zeros.push_back({(lo + hi) / 2, (hi - lo) / 2});
    }
    prev_t = t;
    prev_z = zv.z;
    first = false;
  }
  return scan;
}

}  // namespace lspace
