#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace seqlab::ekg {

inline constexpr std::uint64_t default_cap = 10'000'000;

// Incremental generator for the EKG sequence: a(1)=1, a(2)=2, and a(n+1) is
// the smallest unused positive integer sharing a nontrivial factor with a(n).
// Candidates come from per-prime cursors (smallest multiple of p not yet
// confirmed used) advanced lazily past the used-value bitmap.
class Generator {
public:
    Generator();

    std::uint64_t next();
    const std::vector<std::uint64_t>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

private:
    std::uint64_t advance_cursor(std::uint64_t p);
    void mark_used(std::uint64_t v);
    bool used(std::uint64_t v) const;

    std::vector<std::uint64_t> terms_;
    std::vector<bool> used_;  // index = value
    std::unordered_map<std::uint64_t, std::uint64_t> cursors_;
    std::vector<std::uint32_t> primes_;
};

// First n terms; throws resource_limit_error when n exceeds cap.
std::vector<std::uint64_t> generate(std::size_t n, std::uint64_t cap = default_cap);

// Quadratic-scan reference: smallest unused m >= 2 with gcd(m, last) > 1.
std::vector<std::uint64_t> generate_naive(std::size_t n);

struct NeighborViolation {
    std::size_t position;  // 1-based position of the odd prime
    std::uint64_t p;
    std::uint64_t predecessor;
    std::uint64_t successor;
};

// Checks "every odd prime is preceded by 2p and followed by 3p" over all
// interior positions of the prefix; returns the violations (expected empty).
std::vector<NeighborViolation> prime_neighbor_violations(const std::vector<std::uint64_t>& prefix);

enum class Line { lower, upper, central };

// lower: a(n) prime; upper: a(n) = 3p immediately after the prime p; else central.
std::vector<Line> classify(const std::vector<std::uint64_t>& prefix);

const char* line_name(Line l);

}  // namespace seqlab::ekg
