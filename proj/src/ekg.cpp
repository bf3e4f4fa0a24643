#include "seqlab/ekg.hpp"

#include <numeric>
#include <stdexcept>

#include "seqlab/errors.hpp"
#include "seqlab/numutil.hpp"

namespace seqlab::ekg {

Generator::Generator() : terms_{1, 2}, used_(3, false) {
    used_[1] = true;
    used_[2] = true;
}

bool Generator::used(std::uint64_t v) const {
    return v < used_.size() && used_[v];
}

void Generator::mark_used(std::uint64_t v) {
    if (v >= used_.size()) used_.resize(std::max<std::size_t>(v + 1, used_.size() * 2), false);
    used_[v] = true;
}

std::uint64_t Generator::advance_cursor(std::uint64_t p) {
    auto [it, inserted] = cursors_.try_emplace(p, p);
    std::uint64_t c = it->second;
    while (used(c)) c += p;
    it->second = c;
    return c;
}

std::uint64_t Generator::next() {
    std::uint64_t last = terms_.back();
    std::uint64_t best = 0;
    for (std::uint64_t p : distinct_prime_factors(last, primes_)) {
        std::uint64_t c = advance_cursor(p);
        if (best == 0 || c < best) best = c;
    }
    terms_.push_back(best);
    mark_used(best);
    return best;
}

std::vector<std::uint64_t> generate(std::size_t n, std::uint64_t cap) {
    if (n < 1) throw std::invalid_argument("term count must be >= 1");
    if (n > cap)
        throw resource_limit_error("ekg: requested " + std::to_string(n) +
                                   " terms exceeds cap " + std::to_string(cap));
    Generator g;
    while (g.size() < n) g.next();
    auto out = g.terms();
    out.resize(n);
    return out;
}

std::vector<std::uint64_t> generate_naive(std::size_t n) {
    std::vector<std::uint64_t> terms{1, 2};
    std::vector<bool> used(3, false);
    used[1] = used[2] = true;
    while (terms.size() < n) {
        std::uint64_t last = terms.back();
        std::uint64_t m = 2;
        while ((m < used.size() && used[m]) || std::gcd(m, last) == 1) ++m;
        terms.push_back(m);
        if (m >= used.size()) used.resize(2 * m, false);
        used[m] = true;
    }
    terms.resize(n);
    return terms;
}

std::vector<NeighborViolation> prime_neighbor_violations(const std::vector<std::uint64_t>& prefix) {
    std::vector<NeighborViolation> out;
    for (std::size_t i = 1; i + 1 < prefix.size(); ++i) {
        std::uint64_t p = prefix[i];
        if (p == 2 || !is_prime(p)) continue;
        if (prefix[i - 1] != 2 * p || prefix[i + 1] != 3 * p)
            out.push_back({i + 1, p, prefix[i - 1], prefix[i + 1]});
    }
    return out;
}

std::vector<Line> classify(const std::vector<std::uint64_t>& prefix) {
    std::vector<Line> labels(prefix.size(), Line::central);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        std::uint64_t a = prefix[i];
        if (is_prime(a)) {
            labels[i] = Line::lower;
        } else if (a % 3 == 0 && i > 0 && prefix[i - 1] * 3 == a && is_prime(prefix[i - 1])) {
            labels[i] = Line::upper;
        }
    }
    return labels;
}

const char* line_name(Line l) {
    switch (l) {
        case Line::lower: return "lower_line";
        case Line::upper: return "upper_line";
        default: return "central";
    }
}

}  // namespace seqlab::ekg
