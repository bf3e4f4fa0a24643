#include "seqlab/numutil.hpp"

#include <cstddef>

namespace seqlab {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

void ensure_primes(std::vector<std::uint32_t>& primes, std::uint32_t limit) {
    if (!primes.empty() && primes.back() >= limit) return;
    std::uint32_t target = limit < 64 ? 64 : limit;
    primes = primes_up_to(target + target / 2);
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t v,
                                                  std::vector<std::uint32_t>& primes) {
    std::vector<std::uint64_t> out;
    if (v < 2) return out;
    std::uint32_t root = 2;
    while (static_cast<std::uint64_t>(root) * root < v) ++root;
    ensure_primes(primes, root);
    for (std::uint32_t p : primes) {
        if (static_cast<std::uint64_t>(p) * p > v) break;
        if (v % p == 0) {
            out.push_back(p);
            do v /= p; while (v % p == 0);
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

std::size_t decimal_digits(const mpz_class& z) {
    if (z == 0) return 1;
    mpz_class a = abs(z);
    std::size_t n = mpz_sizeinbase(a.get_mpz_t(), 10);  // exact or one too large
    if (n == 1) return 1;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, n - 1);
    return a < p ? n - 1 : n;
}

}  // namespace seqlab
