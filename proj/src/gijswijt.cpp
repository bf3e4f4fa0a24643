#include "seqlab/gijswijt.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqlab/errors.hpp"

namespace seqlab::gijswijt {

CurlingDecomposition curling_number(const std::vector<int>& seq) {
    if (seq.empty()) throw std::invalid_argument("curling_number: empty sequence");
    std::size_t n = seq.size();
    CurlingDecomposition best{n - 1, 1, 1};
    for (std::size_t y = 1; 2 * y <= n; ++y) {
        std::size_t k = 1;
        while ((k + 1) * y <= n &&
               std::equal(seq.end() - static_cast<long>((k + 1) * y),
                          seq.end() - static_cast<long>(k * y),
                          seq.end() - static_cast<long>(y)))
            ++k;
        if (k > best.k) best = {n - k * y, y, k};
    }
    return best;
}

Generator::Generator(int floor) : floor_(floor), seq_{floor} {
    if (floor < 1) throw std::invalid_argument("floor must be >= 1");
}

int Generator::next() {
    std::size_t n = seq_.size();
    int k = 1;
    for (std::size_t y = 1; 2 * y <= n; ++y) {
        int ky = 1 + static_cast<int>(runs_[y] / y);
        if (ky > k) k = ky;
    }
    int value = std::max(k, floor_);
    seq_.push_back(value);
    runs_.resize(seq_.size(), 0);
    for (std::size_t y = 1; y < seq_.size(); ++y)
        runs_[y] = (seq_[n] == seq_[n - y]) ? runs_[y] + 1 : 0;
    return value;
}

std::vector<int> generate(std::size_t n, int floor, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("term count must be >= 1");
    if (n > cap)
        throw resource_limit_error("gijswijt: requested " + std::to_string(n) +
                                   " terms exceeds cap " + std::to_string(cap));
    Generator g(floor);
    while (g.size() < n) g.next();
    auto out = g.terms();
    out.resize(n);
    return out;
}

namespace {

// Streams successive (B_m, S_m) pairs off a growing order-`floor` sequence.
class BlockExtractor {
public:
    BlockExtractor(int floor, std::size_t cap) : floor_(floor), cap_(cap), gen_(floor) {
        block_ = {floor};
    }

    BlockGlue next() {
        std::size_t reps = static_cast<std::size_t>(floor_) + 1;
        std::size_t body = block_.size() * reps;

        // find the glue terminator: first value <= floor at or past `body`
        std::size_t end = body;
        while (true) {
            while (gen_.size() <= end) {
                if (gen_.size() >= cap_)
                    throw resource_limit_error("gijswijt: block decomposition needs more than " +
                                               std::to_string(cap_) + " terms");
                gen_.next();
            }
            if (gen_.terms()[end] <= floor_) break;
            ++end;
        }

        const auto& seq = gen_.terms();
        for (std::size_t r = 0; r < reps; ++r)
            for (std::size_t i = 0; i < block_.size(); ++i)
                if (seq[r * block_.size() + i] != block_[i])
                    throw structure_error("gijswijt: B_" + std::to_string(order_ + 2) +
                                          " does not start with B_" + std::to_string(order_ + 1) +
                                          " repeated " + std::to_string(reps) + " times");

        BlockGlue out;
        out.order = ++order_;
        out.block = block_;
        out.glue.assign(seq.begin() + static_cast<long>(body), seq.begin() + static_cast<long>(end));
        block_.assign(seq.begin(), seq.begin() + static_cast<long>(end));  // B_{m+1}
        return out;
    }

private:
    int floor_;
    std::size_t cap_;
    Generator gen_;
    std::vector<int> block_;  // B_{order_+1}
    int order_ = 0;
};

}  // namespace

std::vector<BlockGlue> block_decomposition(std::size_t count, int floor, std::size_t cap) {
    BlockExtractor ex(floor, cap);
    std::vector<BlockGlue> out;
    out.reserve(count);
    for (std::size_t m = 0; m < count; ++m) out.push_back(ex.next());
    return out;
}

std::vector<int> glue_concatenation(int floor, std::size_t n_terms, std::size_t cap) {
    BlockExtractor ex(floor, cap);
    std::vector<int> out;
    while (out.size() < n_terms) {
        BlockGlue bg = ex.next();
        out.insert(out.end(), bg.glue.begin(), bg.glue.end());
    }
    out.resize(n_terms);
    return out;
}

FinitenessOutcome finiteness_experiment(const std::vector<int>& initial, std::size_t max_steps) {
    if (initial.empty()) throw std::invalid_argument("finiteness_experiment: empty initial string");
    for (int v : initial)
        if (v < 1) throw std::invalid_argument("finiteness_experiment: entries must be >= 1");
    if (std::find(initial.begin(), initial.end(), 1) != initial.end())
        return {true, 0};  // a pre-existing 1 counts

    std::vector<int> seq = initial;
    std::vector<std::int32_t> runs(seq.size(), 0);
    for (std::size_t i = 1; i < seq.size(); ++i)
        for (std::size_t y = 1; y <= i; ++y)
            if (y < runs.size()) runs[y] = (seq[i] == seq[i - y]) ? runs[y] + 1 : 0;

    for (std::size_t step = 1; step <= max_steps; ++step) {
        std::size_t n = seq.size();
        int k = 1;
        for (std::size_t y = 1; 2 * y <= n; ++y) {
            int ky = 1 + static_cast<int>(runs[y] / y);
            if (ky > k) k = ky;
        }
        if (k == 1) return {true, step};
        seq.push_back(k);
        runs.resize(seq.size(), 0);
        for (std::size_t y = 1; y < seq.size(); ++y)
            runs[y] = (seq[n] == seq[n - y]) ? runs[y] + 1 : 0;
    }
    return {false, max_steps};
}

}  // namespace seqlab::gijswijt
