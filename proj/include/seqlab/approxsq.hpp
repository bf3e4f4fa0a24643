#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace seqlab::approxsq {

// Exact rational in lowest terms with positive denominator (mpq_class
// canonical form maintains both invariants).
using BigRational = mpq_class;

inline constexpr std::size_t default_max_steps = 30;
inline constexpr std::size_t default_digit_budget = 1'000'000;

// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
BigRational parse_rational(const std::string& text);

mpz_class ceil_rational(const BigRational& x);

// One application of x -> x*ceil(x); requires x > 1.
BigRational approx_square_step(const BigRational& x);

struct Trajectory {
    BigRational start;
    std::vector<BigRational> steps;  // value after each application
    bool terminated = false;
    bool budget_exceeded = false;
    std::size_t final_integer_digits = 0;  // set when terminated

    const BigRational& final_value() const { return steps.empty() ? start : steps.back(); }
};

// Iterates until the value is an integer or max_steps is reached. Integer
// starts (denominator 1 after reduction) terminate in 0 steps. Numerators are
// capped at digit_budget decimal digits; exceeding it stops the run with
// terminated=false. Requires x0 >= 1.
Trajectory trajectory(const BigRational& x0,
                      std::size_t max_steps = default_max_steps,
                      std::size_t digit_budget = default_digit_budget);

// Steps needed from (2l+1)/2: m+1 where 2^m is the highest power of 2 in l.
std::size_t den2_predicted_steps(std::uint64_t l);

}  // namespace seqlab::approxsq
