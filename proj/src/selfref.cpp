#include "seqlab/selfref.hpp"

#include <cmath>
#include <stdexcept>

namespace seqlab::selfref {

std::vector<std::int64_t> a079000(std::size_t n) {
    if (n < 1) throw std::invalid_argument("term count must be >= 1");
    std::vector<std::int64_t> c{1, 4};
    std::vector<bool> member(8, false);
    member[1] = member[4] = true;

    for (std::size_t i = 3; i <= n; ++i) {
        std::int64_t prev = c.back();
        // c(i-1) > i, so membership of i is already decided by earlier terms
        bool in_seq = static_cast<std::size_t>(i) < member.size() && member[i];
        bool even = prev % 2 == 0;
        std::int64_t eps = in_seq == even ? 1 : 2;
        std::int64_t v = prev + eps;
        c.push_back(v);
        if (static_cast<std::size_t>(v) >= member.size())
            member.resize(static_cast<std::size_t>(v) * 2, false);
        member[static_cast<std::size_t>(v)] = true;
    }
    c.resize(n);
    return c;
}

std::int64_t a079000_closed(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("index must be >= 1");
    if (n == 1) return 1;
    if (n == 2) return 4;
    // locate k with 6*2^k - 3 <= n < 12*2^k - 3
    std::uint64_t pow = 1;  // 2^k
    while (n >= 12 * pow - 3) pow *= 2;
    std::int64_t j = static_cast<std::int64_t>(n) - (9 * static_cast<std::int64_t>(pow) - 3);
    return 12 * static_cast<std::int64_t>(pow) - 3 + (3 * j + std::abs(j)) / 2;
}

bool membership_consistent(const std::vector<std::int64_t>& c) {
    std::vector<bool> member;
    for (std::int64_t v : c) {
        if (v < 1) return false;
        if (static_cast<std::size_t>(v) >= member.size())
            member.resize(static_cast<std::size_t>(v) + 1, false);
        member[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t i = 1; i <= c.size(); ++i) {
        if (i > static_cast<std::size_t>(c.back())) break;  // membership of i not yet decided
        bool in_seq = i < member.size() && member[i];
        if (in_seq != (c[i - 1] % 2 != 0)) return false;
    }
    return true;
}

std::vector<DiffRun> difference_runs(const std::vector<std::int64_t>& seq) {
    if (seq.size() < 2) throw std::invalid_argument("difference_runs: need at least two terms");
    std::vector<DiffRun> out;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        std::int64_t d = seq[i] - seq[i - 1];
        if (!out.empty() && out.back().value == d)
            ++out.back().length;
        else
            out.push_back({d, 1});
    }
    return out;
}

std::vector<std::int64_t> golomb(std::size_t n) {
    if (n < 1) throw std::invalid_argument("term count must be >= 1");
    std::vector<std::int64_t> g(n + 1);
    g[1] = 1;
    for (std::size_t i = 2; i <= n; ++i)
        g[i] = 1 + g[i - static_cast<std::size_t>(g[static_cast<std::size_t>(g[i - 1])])];
    return {g.begin() + 1, g.end()};
}

std::int64_t golomb_formula(std::uint64_t n) {
    static const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return std::llround(std::pow(phi, 2.0 - phi) * std::pow(static_cast<double>(n), phi - 1.0));
}

}  // namespace seqlab::selfref
