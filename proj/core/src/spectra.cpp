#include "lspace/spectra.hpp"

#include <algorithm>
#include <cctype>

namespace lspace {

GammaType parse_gamma_type(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty Gamma-type string");
  GammaType g;
  size_t i = 0;
  while (i < text.size()) {
    char tag = text[i++];
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i)
      throw std::invalid_argument("malformed Gamma-type token in: " + text);
    int value = std::stoi(text.substr(start, i - start));
    if (tag == 'r') {
      if (value != 0 && value != 1)
        throw std::invalid_argument("r-token must be r0 or r1 in: " + text);
      g.deltas.push_back(value);
    } else if (tag == 'c') {
      if (value < 1)
        throw std::invalid_argument("c0 is disallowed (kappa = 0) in: " + text);
      g.two_kappas.push_back(value);
    } else {
      throw std::invalid_argument("unknown Gamma-type token in: " + text);
    }
  }
  std::sort(g.deltas.begin(), g.deltas.end());
  std::sort(g.two_kappas.begin(), g.two_kappas.end());
  return g;
}

std::string print_gamma_type(const GammaType& g) {
  std::string out;
  for (int d : g.deltas) out += "r" + std::to_string(d);
  for (int k : g.two_kappas) out += "c" + std::to_string(k);
  return out;
}

std::string print_signature(const RefinedSignature& sig) {
  std::string out;
  out.append(sig.d_plus, '+');
  out.append(sig.d_minus, '-');
  out.append(sig.d_two, 'c');
  return out;
}

RefinedSignature refined_signature(const GammaType& g) {
  RefinedSignature sig;
  for (int d : g.deltas) (d == 0 ? sig.d_plus : sig.d_minus)++;
  sig.d_two = static_cast<int>(g.two_kappas.size());
  return sig;
}

int central_character_parity(const GammaType& g) {
  long e = 0;
  for (int d : g.deltas) e += d;
  for (int k : g.two_kappas) e += k + 1;  // 2 kappa + 1
  return (e % 2 == 0) ? 1 : -1;
}

UnitFourth epsilon_infinity(const GammaType& g) {
  int p = 0;
  for (int d : g.deltas) p += d;           // r0 -> i^0, r1 -> i^1
  for (int k : g.two_kappas) p += k + 1;   // cK -> i^{K+1}
  return {((p % 4) + 4) % 4};
}

Admissibility is_admissible(const GammaType& g, unsigned N) {
  if (N == 0) throw std::invalid_argument("conductor must be >= 1");
  if (N <= 2) return {central_character_parity(g) == 1, false};
  return {true, true};
}

RefinedSignature SpectralPoint::signature() const {
  RefinedSignature sig;
  for (const auto& f : r) (f.delta == 0 ? sig.d_plus : sig.d_minus)++;
  sig.d_two = static_cast<int>(c.size());
  return sig;
}

Real SpectralPoint::balance() const {
  Real acc(0);
  for (const auto& f : r) acc += f.lambda;
  for (const auto& f : c) acc += 2 * f.beta;
  return acc;
}

std::optional<GammaType> SpectralPoint::gamma_type(const Real& tol) const {
  GammaType g;
  for (const auto& f : r) g.deltas.push_back(f.delta);
  for (const auto& f : c) {
    Real two_k = 2 * f.kappa;
    Real rounded = round(two_k);
    if (mp::abs(two_k - rounded) > tol || rounded < 1) return std::nullopt;
    g.two_kappas.push_back(static_cast<int>(rounded));
  }
  std::sort(g.deltas.begin(), g.deltas.end());
  std::sort(g.two_kappas.begin(), g.two_kappas.end());
  return g;
}

SpectralPoint canonicalize(SpectralPoint p, const Real& tol) {
  for (const auto& f : p.r)
    if (f.delta != 0 && f.delta != 1)
      throw std::invalid_argument("delta must be 0 or 1");
  for (const auto& f : p.c)
    if (f.kappa <= 0) throw std::invalid_argument("kappa must be positive");
  if (mp::abs(p.balance()) > tol)
    throw std::invalid_argument("spectral point violates the balance condition");
  std::sort(p.r.begin(), p.r.end(),
            [](const SpectralPoint::RFactor& a, const SpectralPoint::RFactor& b) {
              if (a.delta != b.delta) return a.delta < b.delta;
              return a.lambda < b.lambda;
            });
  std::sort(p.c.begin(), p.c.end(),
            [](const SpectralPoint::CFactor& a, const SpectralPoint::CFactor& b) {
              if (a.kappa != b.kappa) return a.kappa < b.kappa;
              return a.beta < b.beta;
            });
  return p;
}

SpectralPoint dual(const SpectralPoint& p, const Real& tol) {
  SpectralPoint q = p;
  for (auto& f : q.r) f.lambda = -f.lambda;
  for (auto& f : q.c) f.beta = -f.beta;
  return canonicalize(std::move(q), tol);
}

Real DotDiagram::point_sum() const {
  Real acc(0);
  for (const auto& z : z_plus) acc += z;
  for (const auto& z : z_minus) acc += z;
  for (const auto& z : z_two) acc += 2 * z.re;
  return acc;
}

DotDiagram to_dot_diagram(const SpectralPoint& p) {
  DotDiagram d;
  for (const auto& f : p.r)
    (f.delta == 0 ? d.z_plus : d.z_minus).push_back(f.lambda);
  for (const auto& f : p.c) d.z_two.push_back({f.beta, f.kappa});
  return d;
}

SpectralPoint from_dot_diagram(const DotDiagram& d, const Real& tol) {
  SpectralPoint p;
  for (const auto& z : d.z_plus) p.r.push_back({0, z});
  for (const auto& z : d.z_minus) p.r.push_back({1, z});
  for (const auto& z : d.z_two) {
    if (z.im <= 0)
      throw std::invalid_argument("Z_2 representative must have positive height");
    p.c.push_back({z.im, z.re});
  }
  return canonicalize(std::move(p), tol);
}

long component_count(int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  return static_cast<long>(d + 2) * (d + 2) / 4;
}

std::vector<RefinedSignature> enumerate_signatures(int d) {
  std::vector<RefinedSignature> out;
  for (int d2 = 0; 2 * d2 <= d; ++d2) {
    int d1 = d - 2 * d2;
    for (int dp = 0; dp <= d1; ++dp) out.push_back({dp, d1 - dp, d2});
  }
  return out;
}

// --- presentation helpers ----------------------------------------------------

std::array<Real, 2> coords_r0r0r0(const SpectralPoint& p) {
  if (p.r.size() != 3 || !p.c.empty())
    throw std::invalid_argument("not an r0r0r0 point");
  std::array<Real, 3> ls{p.r[0].lambda, p.r[1].lambda, p.r[2].lambda};
  std::sort(ls.begin(), ls.end(), std::greater<Real>());  // l3 <= l2 <= l1
  if (ls[1] < 0)  // dual reduction: reflect so lambda_2 >= 0
    return {-ls[2], -ls[1]};
  return {ls[0], ls[1]};
}

std::array<Real, 2> coords_r0r1r1(const SpectralPoint& p) {
  RefinedSignature sig = p.signature();
  if (!(sig.d_plus == 1 && sig.d_minus == 2 && sig.d_two == 0))
    throw std::invalid_argument("not an r0r1r1 point");
  Real l1 = p.r[0].lambda;  // canonical order puts the delta=0 factor first
  Real a = p.r[1].lambda, b = p.r[2].lambda;
  Real l2 = (a < b ? b : a);
  if (l1 < 0) {  // dual reduction: lambda_1 >= 0
    l1 = -l1;
    l2 = (-a < -b ? -b : -a);
  }
  return {l1, l2};
}

std::array<Real, 2> coords_rc(const SpectralPoint& p) {
  if (p.r.size() != 1 || p.c.size() != 1)
    throw std::invalid_argument("not an r-c point");
  Real lambda = p.r[0].lambda;
  if (lambda < 0) lambda = -lambda;  // dual reduction
  return {p.c[0].kappa, lambda};
}

namespace {
Real builder_tol() {
  int digits = static_cast<int>(Real::default_precision());
  return pow(Real(10), -std::max(5, digits - 8));
}
}  // namespace

SpectralPoint point_r0r0r0(const Real& lambda1, const Real& lambda2) {
  SpectralPoint p;
  p.r = {{0, lambda1}, {0, lambda2}, {0, -lambda1 - lambda2}};
  return canonicalize(std::move(p), builder_tol());
}

SpectralPoint point_r0r1r1(const Real& lambda1, const Real& lambda2) {
  SpectralPoint p;
  p.r = {{0, lambda1}, {1, lambda2}, {1, -lambda1 - lambda2}};
  return canonicalize(std::move(p), builder_tol());
}

SpectralPoint point_rc(int delta, const Real& kappa, const Real& lambda) {
  SpectralPoint p;
  p.r = {{delta, lambda}};
  p.c = {{kappa, -lambda / 2}};
  return canonicalize(std::move(p), builder_tol());
}

}  // namespace lspace
