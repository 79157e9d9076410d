#pragma once

// Small classical-modular-forms toolbox: Ramanujan tau by multiplying out
// the Delta product, primality and prime lists. Used by the symmetric-square
// ingestion path and as an independent oracle in tests.

#include <cstdint>
#include <vector>

namespace lspace {

// tau(1..n_max) from q prod_{n>=1} (1 - q^n)^24. Exact in int64 for
// n_max <= ~300 (tau(n) ~ n^{11/2}).
std::vector<std::int64_t> delta_tau(unsigned n_max);

bool is_prime(unsigned long n);
std::vector<unsigned long> primes_up_to(unsigned long n);

}  // namespace lspace
