#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace seqlab::series {

// Truncated formal power series with exact integer coefficients;
// coefficient of x^i is c[i], truncation order is c.size()-1.
struct IntPowerSeries {
    std::vector<mpz_class> c;

    IntPowerSeries() : c(1) {}
    explicit IntPowerSeries(std::size_t order) : c(order + 1) {}
    IntPowerSeries(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c.emplace_back(v);
        if (c.empty()) c.emplace_back(0);
    }

    std::size_t order() const { return c.size() - 1; }
    IntPowerSeries truncated(std::size_t order) const;

    bool operator==(const IntPowerSeries&) const = default;
};

IntPowerSeries one_series(std::size_t order);

// Cauchy product truncated to the smaller order. ps_mul dispatches to an
// OpenMP kernel for large orders; ps_mul_serial is the reference kernel.
IntPowerSeries ps_mul(const IntPowerSeries& a, const IntPowerSeries& b);
IntPowerSeries ps_mul_serial(const IntPowerSeries& a, const IntPowerSeries& b);

// a^k by repeated squaring at a's truncation order; a^0 is the constant 1.
IntPowerSeries ps_pow(const IntPowerSeries& a, unsigned k);

struct RootResult {
    std::optional<IntPowerSeries> root;
    std::size_t failure_index = 0;  // first index where divisibility by k fails

    bool ok() const { return root.has_value(); }
};

// The unique g with g(0)=1 and g^k = f up to f's truncation order, obtained
// coefficient by coefficient from k*g_n = f_n - (terms in g_1..g_{n-1}).
// Requires f(0)=1 and k >= 1.
RootResult kth_root(const IntPowerSeries& f, unsigned k);

// k times the product of the distinct primes dividing k.
std::uint64_t mu(std::uint64_t k);

enum class PowerMod { yes, no, inconclusive };

inline constexpr std::size_t default_node_limit = 1'000'000;

// Decides whether some series g over Z/mu_k with g(0)=1 satisfies
// g^k = f mod mu_k up to f's truncation order, by depth-first search over the
// residue choices for each coefficient. Returns inconclusive when the search
// exceeds node_limit.
PowerMod is_kth_power_mod(const IntPowerSeries& f, unsigned k,
                          std::size_t node_limit = default_node_limit);

// Coefficient file: one integer per line, index 0 first, '#' comments skipped.
IntPowerSeries read_coeff_file(const std::string& path);

}  // namespace seqlab::series
