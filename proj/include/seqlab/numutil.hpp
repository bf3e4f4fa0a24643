#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace seqlab {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// Extends `primes` (ascending, from primes_up_to) so trial division by its
// entries is complete for values up to limit*limit.
void ensure_primes(std::vector<std::uint32_t>& primes, std::uint32_t limit);

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t v,
                                                  std::vector<std::uint32_t>& primes);

bool is_prime(std::uint64_t v);

// Exact count of decimal digits of |z|; 0 counts as one digit.
std::size_t decimal_digits(const mpz_class& z);

}  // namespace seqlab
