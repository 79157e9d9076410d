#include "lspace/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace lspace {

namespace {

// Legendre P_n and P_n' by forward recurrence.
void legendre(unsigned n, const Real& x, Real& p, Real& dp) {
  Real p0(1), p1 = x;
  for (unsigned k = 2; k <= n; ++k) {
    Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1);
}

GLRule build_rule(unsigned n) {
  GLRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  unsigned digits = Real::default_precision();
  Real tol = pow(Real(10), -static_cast<int>(digits));
  double pi_d = 3.14159265358979323846;
  for (unsigned i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-style initial guess, then Newton.
    Real x(std::cos(pi_d * (i + 0.75) / (n + 0.5)));
    Real p, dp;
    for (int it = 0; it < 200; ++it) {
      legendre(n, x, p, dp);
      Real dx = p / dp;
      x -= dx;
      if (mp::abs(dx) < tol) break;
    }
    legendre(n, x, p, dp);
    Real w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0;
  return rule;
}

std::mutex rule_mutex;

}  // namespace

const GLRule& gauss_legendre(unsigned n) {
  static std::map<std::pair<unsigned, unsigned>, GLRule> cache;
  std::lock_guard<std::mutex> lock(rule_mutex);
  auto key = std::make_pair(n, Real::default_precision());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_rule(n)).first;
  return it->second;
}

Real integrate_gl(const std::function<Real(const Real&)>& f, const Real& a,
                  const Real& b, unsigned n) {
  const GLRule& rule = gauss_legendre(n);
  Real mid = (a + b) / 2, half = (b - a) / 2;
  Real acc(0);
  for (unsigned i = 0; i < n; ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

Real integrate_panels(const std::function<Real(const Real&)>& f, const Real& a,
                      const Real& b, unsigned panels, unsigned n) {
  Real acc(0), width = (b - a) / panels;
  for (unsigned k = 0; k < panels; ++k)
    acc += integrate_gl(f, a + k * width, a + (k + 1) * width, n);
  return acc;
}

Real log_power_tail(const Real& A, const Real& B, unsigned k, const Real& x) {
  if (k < 2) throw std::invalid_argument("log_power_tail needs k >= 2");
  Real km1(k - 1);
  return pow(x, -(km1)) * ((A + B * log(x)) / km1 + B / (km1 * km1));
}

Real oscillatory_log_tail(const Real& omega, const Real& phase, const Real& A,
                          const Real& B, unsigned k, const Real& x) {
  // Repeated integration by parts on I = integral_x^inf e^{i omega u} g(u) du
  // gives, with g_0 = g and g_{j+1} = g_j',
  //   I = sum_j (-1)^{j+1} e^{i theta} g_j(x) (i omega)^{-(j+1)},
  //   theta = omega x + phase.
  // Taking real parts, the j-th term is
  //   {-sin, -cos, +sin, +cos}[j mod 4](theta) * g_j(x) / omega^{j+1}.
  // The derivative family g = (a + b log u) u^{-kk} is closed:
  //   (a, b, kk) -> (b - kk a, -kk b, kk + 1).
  Real a = A, b = B;
  long kk = k;
  Real lx = log(x);
  Real inv_omega = 1 / omega;
  Real xpow = pow(x, -static_cast<int>(k));
  Real theta = omega * x + phase;
  Real c = cos(theta), s = sin(theta);
  Real acc(0);
  Real scale = inv_omega;
  Real prev_mag(0);
  Real tol = pow(Real(10), -static_cast<int>(Real::default_precision()));
  for (unsigned j = 0; j < 80; ++j) {
    Real gj = (a + b * lx) * xpow;
    Real trig = (j % 4 == 0) ? -s : (j % 4 == 1) ? -c : (j % 4 == 2) ? s : c;
    acc += gj * scale * trig;
    Real mag = mp::abs(gj) * scale;
    if (j > 2 && mag > prev_mag) break;  // asymptotic series: stop at smallest
    prev_mag = mag;
    if (mag < tol) break;
    Real a2 = b - kk * a;
    b = -kk * b;
    a = a2;
    kk += 1;
    xpow /= x;
    scale *= inv_omega;
  }
  return acc;
}

}  // namespace lspace
