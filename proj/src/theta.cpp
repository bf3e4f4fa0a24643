#include "seqlab/theta.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

#include "seqlab/errors.hpp"

namespace seqlab::theta {

namespace {

struct Ldl {
    std::size_t n = 0;
    std::vector<mpq_class> d;               // pivots, all > 0
    std::vector<std::vector<mpq_class>> u;  // unit upper-triangular, u[i][j] for j > i
};

Ldl decompose(const Lattice& lat) {
    Ldl out;
    out.n = lat.dim;
    out.d.assign(lat.dim, 0);
    out.u.assign(lat.dim, std::vector<mpq_class>(lat.dim, 0));
    for (std::size_t i = 0; i < lat.dim; ++i) {
        mpq_class di = static_cast<long>(lat.at(i, i));
        for (std::size_t k = 0; k < i; ++k) di -= out.d[k] * out.u[k][i] * out.u[k][i];
        if (di <= 0)
            throw std::invalid_argument("gram matrix is not positive definite (pivot " +
                                        std::to_string(i + 1) + ")");
        out.d[i] = di;
        for (std::size_t j = i + 1; j < lat.dim; ++j) {
            mpq_class v = static_cast<long>(lat.at(i, j));
            for (std::size_t k = 0; k < i; ++k) v -= out.d[k] * out.u[k][i] * out.u[k][j];
            out.u[i][j] = v / di;
        }
    }
    return out;
}

// One enumeration subtree. Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2;
// coordinates are fixed from the last down to the first.
class Enumerator {
public:
    Enumerator(const Ldl& ldl, std::size_t max_norm, std::uint64_t node_budget,
               std::atomic<bool>* abort_flag)
        : ldl_(ldl),
          max_norm_(max_norm),
          budget_(node_budget),
          abort_(abort_flag),
          center_(ldl.n, 0),
          counts_(max_norm + 1, 0) {}

    // enumerate everything below level `level` with x_level = value fixed
    void run_subtree(int level, long long value, const mpq_class& rem) {
        descend(level, value, rem);
    }

    void run_all() {
        mpq_class rem = static_cast<long>(max_norm_);
        auto [lo, hi] = bounds(static_cast<int>(ldl_.n) - 1, rem);
        for (long long x = lo; x <= hi; ++x) descend(static_cast<int>(ldl_.n) - 1, x, rem);
    }

    std::pair<long long, long long> bounds(int level, const mpq_class& rem) const {
        const mpq_class& c = center_[static_cast<std::size_t>(level)];
        const mpq_class& d = ldl_.d[static_cast<std::size_t>(level)];
        double r = std::sqrt(std::max(0.0, rem.get_d() / d.get_d()));
        double cd = c.get_d();
        long long lo = static_cast<long long>(std::floor(-cd - r)) - 1;
        long long hi = static_cast<long long>(std::ceil(-cd + r)) + 1;
        auto ok = [&](long long x) {
            mpq_class t = c + static_cast<long>(x);
            return t * t * d <= rem;
        };
        while (lo <= hi && !ok(lo)) ++lo;
        while (ok(lo - 1)) --lo;
        while (lo <= hi && !ok(hi)) --hi;
        while (ok(hi + 1)) ++hi;
        return {lo, hi};
    }

    const std::vector<std::uint64_t>& counts() const { return counts_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void descend(int level, long long value, const mpq_class& rem) {
        if (abort_ && abort_->load(std::memory_order_relaxed)) return;
        if (++nodes_ > budget_) {
            if (abort_) abort_->store(true, std::memory_order_relaxed);
            return;
        }
        std::size_t lv = static_cast<std::size_t>(level);
        mpq_class t = center_[lv] + static_cast<long>(value);
        mpq_class next_rem = rem - t * t * ldl_.d[lv];

        if (level == 0) {
            mpq_class used = static_cast<long>(max_norm_) - next_rem;
            // v^T G v is an integer for integer vectors
            if (used.get_den() != 1)
                throw std::logic_error("theta enumeration produced a non-integer norm");
            counts_[used.get_num().get_ui()] += 1;
            return;
        }

        for (std::size_t j = 0; j < lv; ++j)
            center_[j] += ldl_.u[j][lv] * static_cast<long>(value);

        auto [lo, hi] = bounds(level - 1, next_rem);
        for (long long x = lo; x <= hi; ++x) descend(level - 1, x, next_rem);

        for (std::size_t j = 0; j < lv; ++j)
            center_[j] -= ldl_.u[j][lv] * static_cast<long>(value);
    }

    const Ldl& ldl_;
    std::size_t max_norm_;
    std::uint64_t budget_;
    std::atomic<bool>* abort_;
    std::vector<mpq_class> center_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t nodes_ = 0;
};

double estimated_point_count(const Ldl& ldl, std::size_t max_norm) {
    double det = 1.0;
    for (const auto& d : ldl.d) det *= d.get_d();
    double n = static_cast<double>(ldl.n);
    double r = std::sqrt(static_cast<double>(max_norm));
    double vol = std::pow(M_PI, n / 2.0) * std::pow(r, n) / std::tgamma(n / 2.0 + 1.0);
    return vol / std::sqrt(det);
}

}  // namespace

Lattice make_lattice(std::string name, std::size_t dim, std::vector<long long> gram) {
    if (dim == 0) throw std::invalid_argument("lattice dimension must be >= 1");
    if (gram.size() != dim * dim) throw std::invalid_argument("gram matrix size mismatch");
    Lattice lat{std::move(name), dim, std::move(gram)};
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (lat.at(i, j) != lat.at(j, i))
                throw std::invalid_argument("gram matrix is not symmetric");
    decompose(lat);  // throws unless positive definite
    return lat;
}

ThetaSeries theta_series(const Lattice& lat, std::size_t max_norm, Exec exec,
                         std::uint64_t budget) {
    Ldl ldl = decompose(lat);

    double est = estimated_point_count(ldl, max_norm);
    if (est > 2.0 * static_cast<double>(budget))
        throw resource_limit_error("theta: estimated " + std::to_string(est) +
                                   " lattice points exceeds budget " + std::to_string(budget));

    ThetaSeries out;
    out.max_norm = max_norm;
    out.series = series::IntPowerSeries(max_norm);

    std::atomic<bool> abort{false};

    if (exec == Exec::serial || lat.dim == 1) {
        Enumerator e(ldl, max_norm, budget, &abort);
        e.run_all();
        if (abort.load())
            throw resource_limit_error("theta: enumeration exceeded node budget");
        for (std::size_t i = 0; i <= max_norm; ++i)
            out.series.c[i] = static_cast<unsigned long>(e.counts()[i]);
        return out;
    }

    // parallel: split the outermost coordinate's range
    mpq_class rem = static_cast<long>(max_norm);
    Enumerator probe(ldl, max_norm, budget, &abort);
    auto [lo, hi] = probe.bounds(static_cast<int>(lat.dim) - 1, rem);

    std::vector<std::uint64_t> total(max_norm + 1, 0);
#pragma omp parallel
    {
        Enumerator e(ldl, max_norm, budget, &abort);
#pragma omp for schedule(dynamic)
        for (long long x = lo; x <= hi; ++x)
            e.run_subtree(static_cast<int>(lat.dim) - 1, x, rem);
#pragma omp critical
        {
            for (std::size_t i = 0; i <= max_norm; ++i) total[i] += e.counts()[i];
        }
    }
    if (abort.load())
        throw resource_limit_error("theta: enumeration exceeded node budget");

    for (std::size_t i = 0; i <= max_norm; ++i)
        out.series.c[i] = static_cast<unsigned long>(total[i]);
    return out;
}

std::pair<std::uint64_t, std::size_t> kissing_number(const ThetaSeries& t) {
    for (std::size_t i = 1; i < t.series.c.size(); ++i)
        if (t.series.c[i] != 0)
            return {static_cast<std::uint64_t>(t.series.c[i].get_ui()), i};
    throw std::runtime_error("theta series has no nonzero coefficient beyond index 0");
}

Lattice builtin_lattice(std::string_view name) {
    std::string up;
    for (char c : name)
        if (c != '^') up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));

    if (up == "A2") return make_lattice("A2", 2, {2, 1, 1, 2});
    if (up == "D4")
        return make_lattice("D4", 4,
                            {2, -1, 0, 0,
                             -1, 2, -1, -1,
                             0, -1, 2, 0,
                             0, -1, 0, 2});
    if (up == "E8") {
        std::vector<long long> g(64, 0);
        for (int i = 0; i < 8; ++i) g[static_cast<std::size_t>(i * 8 + i)] = 2;
        auto link = [&](int a, int b) {
            g[static_cast<std::size_t>(a * 8 + b)] = -1;
            g[static_cast<std::size_t>(b * 8 + a)] = -1;
        };
        // Dynkin diagram: chain 1-3-4-5-6-7-8 with node 2 attached to node 4
        link(0, 2);
        link(1, 3);
        link(2, 3);
        link(3, 4);
        link(4, 5);
        link(5, 6);
        link(6, 7);
        return make_lattice("E8", 8, std::move(g));
    }
    if (up.size() >= 2 && up[0] == 'Z') {
        int n = 0;
        for (std::size_t i = 1; i < up.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(up[i]))) { n = 0; break; }
            n = n * 10 + (up[i] - '0');
        }
        if (n >= 1 && n <= 16) {
            std::vector<long long> g(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i * n + i)] = 1;
            return make_lattice("Z" + std::to_string(n), static_cast<std::size_t>(n), std::move(g));
        }
    }
    throw std::invalid_argument("unknown lattice '" + std::string(name) +
                                "' (expected Z1..Z16, A2, D4, E8)");
}

ThetaSeries fixture_theta(std::string_view name, const std::string& data_dir) {
    std::string low;
    for (char c : name) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (low != "leech" && low != "nebe24")
        throw std::invalid_argument("unknown theta fixture '" + std::string(name) + "'");

    auto path = std::filesystem::path(data_dir) / "fixtures" / "theta" / (low + ".txt");
    if (!std::filesystem::exists(path))
        throw std::runtime_error("missing theta fixture " + path.string());

    ThetaSeries out;
    out.series = series::read_coeff_file(path.string());
    out.max_norm = out.series.order();
    return out;
}

Lattice read_gram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gram file " + path);
    std::vector<std::vector<long long>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        std::istringstream iss(line);
        std::vector<long long> row;
        long long v;
        while (iss >> v) row.push_back(v);
        if (!iss.eof()) throw parse_error("bad gram row", lineno);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("gram file has no rows");
    std::size_t n = rows.size();
    std::vector<long long> g;
    g.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw std::runtime_error("gram file is not square");
        g.insert(g.end(), r.begin(), r.end());
    }
    return make_lattice(std::filesystem::path(path).stem().string(), n, std::move(g));
}

}  // namespace seqlab::theta
