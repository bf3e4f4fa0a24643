#include "seqlab/powerseries.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "seqlab/errors.hpp"

namespace seqlab::series {

IntPowerSeries IntPowerSeries::truncated(std::size_t order) const {
    IntPowerSeries out(order);
    for (std::size_t i = 0; i <= order && i < c.size(); ++i) out.c[i] = c[i];
    return out;
}

IntPowerSeries one_series(std::size_t order) {
    IntPowerSeries s(order);
    s.c[0] = 1;
    return s;
}

IntPowerSeries ps_mul_serial(const IntPowerSeries& a, const IntPowerSeries& b) {
    std::size_t order = std::min(a.order(), b.order());
    IntPowerSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (b.c[j] == 0) continue;
            out.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return out;
}

IntPowerSeries ps_mul(const IntPowerSeries& a, const IntPowerSeries& b) {
    std::size_t order = std::min(a.order(), b.order());
    if (order < 512) return ps_mul_serial(a, b);

    IntPowerSeries out(order);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t n = 0; n <= static_cast<std::ptrdiff_t>(order); ++n) {
        mpz_class acc;
        for (std::ptrdiff_t i = 0; i <= n; ++i) {
            if (a.c[i] == 0 || b.c[n - i] == 0) continue;
            acc += a.c[i] * b.c[n - i];
        }
        out.c[n] = std::move(acc);
    }
    return out;
}

IntPowerSeries ps_pow(const IntPowerSeries& a, unsigned k) {
    IntPowerSeries result = one_series(a.order());
    IntPowerSeries base = a;
    while (k) {
        if (k & 1) result = ps_mul(result, base);
        k >>= 1;
        if (k) base = ps_mul(base, base);
    }
    return result;
}

RootResult kth_root(const IntPowerSeries& f, unsigned k) {
    if (k < 1) throw std::invalid_argument("kth_root: k must be >= 1");
    if (f.c[0] != 1) throw std::domain_error("kth_root: constant term must be 1");

    std::size_t order = f.order();
    IntPowerSeries g = one_series(order);
    mpz_class sum, term, c_n, r;
    for (std::size_t n = 1; n <= order; ++n) {
        // J.C.P. Miller: n*f_n = sum_{i=1}^{n} (i*(k+1) - n) * g_i * f_{n-i};
        // the i=n term is n*k*g_n, everything else involves only g_1..g_{n-1}.
        sum = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (g.c[i] == 0 || f.c[n - i] == 0) continue;
            term = g.c[i] * f.c[n - i];
            term *= static_cast<long>(i * (k + 1)) - static_cast<long>(n);
            sum += term;
        }
        // sum is n * [x^n]((1 + g_1 x + ... + g_{n-1} x^{n-1})^k), so the
        // division is exact whether or not f is a k-th power.
        if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(n)))
            throw std::logic_error("kth_root: internal recurrence not divisible by n");
        mpz_divexact_ui(c_n.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n));
        r = f.c[n] - c_n;
        if (!mpz_divisible_ui_p(r.get_mpz_t(), k)) return {std::nullopt, n};
        mpz_divexact_ui(g.c[n].get_mpz_t(), r.get_mpz_t(), k);
    }
    return {std::move(g), 0};
}

std::uint64_t mu(std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("mu: k must be >= 1");
    std::uint64_t m = k, rest = k;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            m *= p;
            do rest /= p; while (rest % p == 0);
        }
    }
    if (rest > 1) m *= rest;
    return m;
}

namespace {

// DFS state for the mod-mu_k k-th power test. Maintains all powers
// g^1..g^k mod mu of the partial candidate so the next unmet coefficient of
// g^k is available in O(1) and updates stay polynomial in the order.
class ModPowerSearch {
public:
    ModPowerSearch(std::vector<std::uint32_t> f, unsigned k, std::uint64_t m,
                   std::size_t node_limit)
        : f_(std::move(f)), k_(k), m_(m), order_(f_.size() - 1), limit_(node_limit) {
        // binomials mod m up to row k
        binom_.assign(k_ + 1, std::vector<std::uint64_t>(k_ + 1, 0));
        for (unsigned i = 0; i <= k_; ++i) {
            binom_[i][0] = 1 % m_;
            for (unsigned j = 1; j <= i; ++j)
                binom_[i][j] = (binom_[i - 1][j - 1] + (j <= i - 1 ? binom_[i - 1][j] : 0)) % m_;
        }
        pow_.assign(k_ + 1, std::vector<std::uint32_t>(order_ + 1, 0));
        for (unsigned j = 0; j <= k_; ++j) pow_[j][0] = 1 % m_;
        gcd_km_ = std::gcd(static_cast<std::uint64_t>(k_), m_);
    }

    PowerMod run() {
        PowerMod r = dfs(1);
        if (r == PowerMod::yes) return r;
        return nodes_ > limit_ ? PowerMod::inconclusive : r;
    }

private:
    // solutions g of k*g = c (mod m), ascending
    std::vector<std::uint32_t> solve_linear(std::uint64_t c) const {
        std::vector<std::uint32_t> out;
        if (c % gcd_km_ != 0) return out;
        std::uint64_t k2 = k_ / gcd_km_, m2 = m_ / gcd_km_, c2 = (c / gcd_km_) % m2;
        // inverse of k2 mod m2 by extended Euclid
        long long t = 0, newt = 1, r = static_cast<long long>(m2), newr = static_cast<long long>(k2 % m2);
        while (newr != 0) {
            long long q = r / newr;
            t = std::exchange(newt, t - q * newt);
            r = std::exchange(newr, r - q * newr);
        }
        if (m2 == 1) t = 0;
        std::uint64_t inv = static_cast<std::uint64_t>((t % static_cast<long long>(m2) +
                                                        static_cast<long long>(m2)) %
                                                       static_cast<long long>(m2));
        std::uint64_t base = (c2 * inv) % m2;
        for (std::uint64_t i = 0; i < gcd_km_; ++i)
            out.push_back(static_cast<std::uint32_t>(base + i * m2));
        std::sort(out.begin(), out.end());
        return out;
    }

    // appends t*x^n to the candidate, updating pow_[j] for all j (descending
    // j keeps the lower powers at their previous values during the update)
    void push_term(std::size_t n, std::uint32_t t, std::vector<std::vector<std::uint32_t>>& saved) {
        saved = pow_;
        if (t == 0) return;
        std::vector<std::uint64_t> tp(k_ + 1);  // t^mm mod m
        tp[0] = 1 % m_;
        for (unsigned mm = 1; mm <= k_; ++mm) tp[mm] = (tp[mm - 1] * t) % m_;
        for (unsigned j = k_; j >= 1; --j) {
            for (unsigned mm = 1; mm <= j && n * mm <= order_; ++mm) {
                std::uint64_t coef = (binom_[j][mm] * tp[mm]) % m_;
                if (coef == 0) continue;
                const auto& lower = saved[j - mm];
                for (std::size_t i = n * mm; i <= order_; ++i) {
                    std::uint64_t add = (coef * lower[i - n * mm]) % m_;
                    pow_[j][i] = static_cast<std::uint32_t>((pow_[j][i] + add) % m_);
                }
            }
        }
    }

    PowerMod dfs(std::size_t n) {
        if (n > order_) return PowerMod::yes;
        if (++nodes_ > limit_) return PowerMod::no;  // run() reports inconclusive
        std::uint64_t have = pow_[k_][n] % m_;
        std::uint64_t want = f_[n] % m_;
        std::uint64_t c = (want + m_ - have) % m_;
        for (std::uint32_t t : solve_linear(c)) {
            std::vector<std::vector<std::uint32_t>> saved;
            push_term(n, t, saved);
            PowerMod r = dfs(n + 1);
            pow_ = std::move(saved);
            if (r == PowerMod::yes) return r;
            if (nodes_ > limit_) return PowerMod::no;
        }
        return PowerMod::no;
    }

    std::vector<std::uint32_t> f_;
    unsigned k_;
    std::uint64_t m_;
    std::size_t order_;
    std::size_t limit_;
    std::size_t nodes_ = 0;
    std::uint64_t gcd_km_ = 1;
    std::vector<std::vector<std::uint64_t>> binom_;
    std::vector<std::vector<std::uint32_t>> pow_;  // pow_[j] = g^j mod m
};

}  // namespace

PowerMod is_kth_power_mod(const IntPowerSeries& f, unsigned k, std::size_t node_limit) {
    if (k < 1) throw std::invalid_argument("is_kth_power_mod: k must be >= 1");
    if (f.c[0] != 1) throw std::domain_error("is_kth_power_mod: constant term must be 1");
    if (k == 1) return PowerMod::yes;

    std::uint64_t m = mu(k);
    std::vector<std::uint32_t> reduced(f.order() + 1);
    bool all_zero = true;
    for (std::size_t i = 0; i <= f.order(); ++i) {
        mpz_class r = f.c[i] % static_cast<unsigned long>(m);
        if (r < 0) r += static_cast<unsigned long>(m);
        reduced[i] = static_cast<std::uint32_t>(r.get_ui());
        if (i > 0 && reduced[i] != 0) all_zero = false;
    }
    if (all_zero) return PowerMod::yes;  // reduces to the constant 1

    ModPowerSearch search(std::move(reduced), k, m, node_limit);
    return search.run();
}

IntPowerSeries read_coeff_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file " + path);
    IntPowerSeries s(0);
    s.c.clear();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        std::string tok = line.substr(b);
        while (!tok.empty() && (tok.back() == '\r' || tok.back() == ' ' || tok.back() == '\t'))
            tok.pop_back();
        mpz_class v;
        if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
            throw parse_error("bad coefficient '" + tok + "'", lineno);
        s.c.push_back(std::move(v));
    }
    if (s.c.empty()) throw parse_error("no coefficients found", lineno);
    return s;
}

}  // namespace seqlab::series
