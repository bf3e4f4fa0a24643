#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqlab/powerseries.hpp"

namespace seqlab::theta {

// Integral lattice given by its Gram matrix (symmetric positive-definite).
struct Lattice {
    std::string name;
    std::size_t dim = 0;
    std::vector<long long> gram;  // row-major dim x dim

    long long at(std::size_t i, std::size_t j) const { return gram[i * dim + j]; }
};

// Validates symmetry and positive-definiteness (all pivots of the exact
// rational LDL^T decomposition positive). Throws std::invalid_argument.
Lattice make_lattice(std::string name, std::size_t dim, std::vector<long long> gram);

struct ThetaSeries {
    series::IntPowerSeries series;  // coefficient of x^d = number of vectors of norm d
    std::size_t max_norm = 0;
};

enum class Exec { serial, parallel };

inline constexpr std::uint64_t default_enum_budget = 100'000'000;

// Counts all integer coordinate vectors with v^T G v <= max_norm, binned by
// norm. Enumeration bounds come from the exact rational LDL^T decomposition;
// floating point is used only to pre-size search intervals, every interval
// endpoint is fixed up with exact comparisons. The parallel kernel splits the
// outermost coordinate range across OpenMP threads and sums per-thread bins,
// so its output is identical to the serial kernel's.
ThetaSeries theta_series(const Lattice& lat, std::size_t max_norm,
                         Exec exec = Exec::parallel,
                         std::uint64_t budget = default_enum_budget);

// First nonzero coefficient after index 0: (tau, u) with theta = 1 + tau*x^u + ...
std::pair<std::uint64_t, std::size_t> kissing_number(const ThetaSeries& t);

// Z1..Z16, A2, D4, E8 (D4 as the even-sum sublattice of Z^4, E8 by its
// standard even unimodular Gram matrix).
Lattice builtin_lattice(std::string_view name);

// Bundled theta coefficients for lattices out of enumeration range:
// "Leech", "Nebe24". Loaded from <data_dir>/fixtures/theta/.
ThetaSeries fixture_theta(std::string_view name, const std::string& data_dir);

// Gram file: one row of integers per line, '#' comments skipped.
Lattice read_gram_file(const std::string& path);

}  // namespace seqlab::theta
