#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace seqlab::oeis {

// An OEIS-style sequence: contiguous terms starting at `offset`.
struct Sequence {
    std::string id;  // e.g. "A064413"; empty for computed data
    long long offset = 1;
    std::vector<mpz_class> terms;

    const mpz_class& at(long long n) const;  // by sequence index, not vector index
    long long last_index() const { return offset + static_cast<long long>(terms.size()) - 1; }
};

// Parses b-file text: lines "index value", '#' comments and blank lines
// skipped, indices must be contiguous. Throws parse_error.
Sequence parse_bfile(std::string_view text);

// Canonical b-file rendering: "index value\n" per term, no comments.
std::string serialize_bfile(const Sequence& s);

struct CompareReport {
    bool match = false;
    std::size_t overlap = 0;
    long long mismatch_index = 0;  // valid when !match
    mpz_class lhs, rhs;            // values at the first mismatch
};

// Compares over the overlapping index range; throws std::invalid_argument
// when the ranges do not overlap.
CompareReport compare(const Sequence& computed, const Sequence& reference);

// Bundled fixture lookup: <data_dir>/fixtures/bfiles/<id>.txt.
Sequence load_fixture(const std::string& id, const std::string& data_dir);

struct FetchOptions {
    bool online = false;      // may touch the network only when true
    std::string cache_dir;    // required; fetched files are cached here
    std::string data_dir;     // bundled fixtures, consulted before the network
};

// Resolution order: cache, bundled fixture, then (online only) oeis.org.
Sequence fetch_bfile(const std::string& id, const FetchOptions& opts);

template <typename Int>
Sequence from_terms(const std::vector<Int>& values, long long offset = 1,
                    std::string id = {}) {
    Sequence s;
    s.id = std::move(id);
    s.offset = offset;
    s.terms.reserve(values.size());
    for (const auto& v : values) s.terms.emplace_back(static_cast<long>(v));
    return s;
}

}  // namespace seqlab::oeis
