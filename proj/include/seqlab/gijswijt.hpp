#pragma once

#include <cstdint>
#include <vector>

namespace seqlab::gijswijt {

inline constexpr std::size_t default_cap = 1'000'000;

// Witness for seq = X Y^k with k maximal; among maximal-k witnesses the one
// with the smallest y_len is returned.
struct CurlingDecomposition {
    std::size_t x_len = 0;
    std::size_t y_len = 0;
    std::size_t k = 0;
};

CurlingDecomposition curling_number(const std::vector<int>& seq);

// Generates the order-`floor` sequence: starts with the single term `floor`,
// each next term is max(curling number, floor). floor=1 is Gijswijt's
// sequence itself. Keeps per-period match-run counters so an append costs one
// pass over the period range instead of block comparisons.
class Generator {
public:
    explicit Generator(int floor = 1);

    int next();
    const std::vector<int>& terms() const { return seq_; }
    std::size_t size() const { return seq_.size(); }

private:
    int floor_;
    std::vector<int> seq_;
    std::vector<std::int32_t> runs_;  // runs_[y] = trailing positions i with seq[i]==seq[i-y]
};

std::vector<int> generate(std::size_t n, int floor = 1, std::size_t cap = default_cap);

struct BlockGlue {
    int order = 0;                // m
    std::vector<int> block;       // B_m
    std::vector<int> glue;        // S_m
};

// First `count` (block, glue) pairs of the order-`floor` sequence, verifying
// B_{m+1} = B_m^{floor+1} S_m against the generated terms as it goes.
std::vector<BlockGlue> block_decomposition(std::size_t count, int floor = 1,
                                           std::size_t cap = default_cap);

// Concatenation S_1 S_2 S_3 ... of order-`floor` glue strings, first n_terms.
std::vector<int> glue_concatenation(int floor, std::size_t n_terms,
                                    std::size_t cap = default_cap);

struct FinitenessOutcome {
    bool found_one = false;
    std::size_t steps = 0;  // appended terms when the first 1 appeared; 0 if already present
};

// Extends `initial` by the plain "next term is k" rule until a 1 appears or
// max_steps extensions have been made.
FinitenessOutcome finiteness_experiment(const std::vector<int>& initial, std::size_t max_steps);

}  // namespace seqlab::gijswijt
