#pragma once

#include <cstdint>
#include <vector>

namespace seqlab::selfref {

// A079000: c(1)=1, c(2)=4, then c(n) = c(n-1) + eps where eps is read off the
// parity of c(n-1) and the membership of n in the sequence so far.
std::vector<std::int64_t> a079000(std::size_t n);

// Closed form c(9*2^k - 3 + j) = 12*2^k - 3 + (3/2)j + (1/2)|j|.
std::int64_t a079000_closed(std::uint64_t n);

// (n in sequence) <=> c(n) odd, over the generated prefix.
bool membership_consistent(const std::vector<std::int64_t>& c);

struct DiffRun {
    std::int64_t value = 0;
    std::size_t length = 0;
};

// Run-length encoding of first differences; requires at least two terms.
std::vector<DiffRun> difference_runs(const std::vector<std::int64_t>& seq);

// Golomb's sequence g(1)=1, g(n) = 1 + g(n - g(g(n-1))).
std::vector<std::int64_t> golomb(std::size_t n);

// round(phi^(2-phi) * n^(phi-1)) in double precision.
std::int64_t golomb_formula(std::uint64_t n);

}  // namespace seqlab::selfref
