#include "lspace/modular.hpp"

#include <stdexcept>

namespace lspace {

std::vector<std::int64_t> delta_tau(unsigned n_max) {
  if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
  if (n_max > 300) throw std::invalid_argument("tau overflows int64 past ~300");
  // Coefficients of prod (1 - q^n)^24 up to q^{n_max - 1}; Delta shifts by q.
  std::vector<std::int64_t> poly(n_max, 0);
  poly[0] = 1;
  for (unsigned n = 1; n < n_max; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (unsigned j = n_max - 1; j >= n; --j) poly[j] -= poly[j - n];
  std::vector<std::int64_t> tau(n_max + 1, 0);
  for (unsigned j = 0; j < n_max; ++j) tau[j + 1] = poly[j];
  return tau;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long k = 2; k <= n; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

}  // namespace lspace
