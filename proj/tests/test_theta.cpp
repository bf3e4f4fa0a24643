#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <vector>

#include "seqlab/errors.hpp"
#include "seqlab/powerseries.hpp"
#include "seqlab/theta.hpp"

using namespace seqlab;
using series::IntPowerSeries;

static const std::string kDataDir = SEQLAB_DEFAULT_DATA_DIR;

static IntPowerSeries theta3(std::size_t order) {
    IntPowerSeries t(order);
    t.c[0] = 1;
    for (std::size_t i = 1; i * i <= order; ++i) t.c[i * i] = 2;
    return t;
}

// Box-scan oracle for small dimensions: every coordinate vector in a cube
// whose side is justified by lambda_min >= det / (max row sum)^(n-1).
static std::vector<std::uint64_t> box_scan(const theta::Lattice& lat, std::size_t max_norm) {
    std::size_t n = lat.dim;
    REQUIRE(n <= 3);
    long long det;
    if (n == 1) {
        det = lat.at(0, 0);
    } else if (n == 2) {
        det = lat.at(0, 0) * lat.at(1, 1) - lat.at(0, 1) * lat.at(1, 0);
    } else {
        det = lat.at(0, 0) * (lat.at(1, 1) * lat.at(2, 2) - lat.at(1, 2) * lat.at(2, 1)) -
              lat.at(0, 1) * (lat.at(1, 0) * lat.at(2, 2) - lat.at(1, 2) * lat.at(2, 0)) +
              lat.at(0, 2) * (lat.at(1, 0) * lat.at(2, 1) - lat.at(1, 1) * lat.at(2, 0));
    }
    long long rowsum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < n; ++j) s += std::abs(lat.at(i, j));
        rowsum = std::max(rowsum, s);
    }
    double lambda_min_lb = static_cast<double>(det);
    for (std::size_t i = 0; i + 1 < n; ++i) lambda_min_lb /= static_cast<double>(rowsum);
    long long b = static_cast<long long>(std::sqrt(static_cast<double>(max_norm) / lambda_min_lb)) + 2;

    std::vector<std::uint64_t> counts(max_norm + 1, 0);
    std::vector<long long> x(n, -b);
    while (true) {
        long long norm = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) norm += lat.at(i, j) * x[i] * x[j];
        if (norm >= 0 && static_cast<std::size_t>(norm) <= max_norm)
            counts[static_cast<std::size_t>(norm)] += 1;
        std::size_t i = 0;
        while (i < n && ++x[i] > b) x[i++] = -b;
        if (i == n) break;
    }
    return counts;
}

TEST_CASE("theta of Z^1 is the Jacobi series theta3") {
    auto t = theta::theta_series(theta::builtin_lattice("Z1"), 25);
    auto ref = theta3(25);
    CHECK(t.series == ref);
}

TEST_CASE("theta of D4 matches the published series") {
    auto t = theta::theta_series(theta::builtin_lattice("D4"), 10);
    CHECK(t.series == IntPowerSeries{1, 0, 24, 0, 24, 0, 96, 0, 24, 0, 144});
}

TEST_CASE("theta of the hexagonal lattice: six pennies") {
    auto t = theta::theta_series(theta::builtin_lattice("A2"), 2);
    CHECK(t.series == IntPowerSeries{1, 0, 6});
    auto [tau, u] = theta::kissing_number(t);
    CHECK(tau == 6);
    CHECK(u == 2);
}

TEST_CASE("kissing numbers read off the theta series") {
    auto z1 = theta::theta_series(theta::builtin_lattice("Z1"), 4);
    CHECK(theta::kissing_number(z1) == std::pair<std::uint64_t, std::size_t>{2, 1});

    auto d4 = theta::theta_series(theta::builtin_lattice("D4"), 4);
    CHECK(theta::kissing_number(d4) == std::pair<std::uint64_t, std::size_t>{24, 2});

    auto e8 = theta::theta_series(theta::builtin_lattice("E8"), 4);
    CHECK(theta::kissing_number(e8) == std::pair<std::uint64_t, std::size_t>{240, 2});

    theta::ThetaSeries flat;
    flat.series = IntPowerSeries{1, 0, 0};
    flat.max_norm = 2;
    CHECK_THROWS(theta::kissing_number(flat));
}

TEST_CASE("enumeration equals the box-scan oracle in low dimensions") {
    for (const char* name : {"Z1", "Z2", "Z3", "A2"}) {
        auto lat = theta::builtin_lattice(name);
        auto t = theta::theta_series(lat, 12);
        auto ref = box_scan(lat, 12);
        for (std::size_t d = 0; d <= 12; ++d) {
            INFO(name, " at norm ", d);
            CHECK(t.series.c[d] == static_cast<unsigned long>(ref[d]));
        }
    }
    // a lopsided 3x3 form
    auto lat = theta::make_lattice("custom", 3, {2, 1, 0, 1, 3, 1, 0, 1, 4});
    auto t = theta::theta_series(lat, 15);
    auto ref = box_scan(lat, 15);
    for (std::size_t d = 0; d <= 15; ++d) CHECK(t.series.c[d] == static_cast<unsigned long>(ref[d]));
}

TEST_CASE("serial and parallel kernels agree") {
    for (const char* name : {"D4", "E8"}) {
        auto lat = theta::builtin_lattice(name);
        auto a = theta::theta_series(lat, 14, theta::Exec::serial);
        auto b = theta::theta_series(lat, 14, theta::Exec::parallel);
        CHECK(a.series == b.series);
    }
}

TEST_CASE("theta(D4) is the even part of theta3^4") {
    auto d4 = theta::theta_series(theta::builtin_lattice("D4"), 20);
    auto z4 = theta::theta_series(theta::builtin_lattice("Z4"), 20);
    auto r4 = series::ps_pow(theta3(20), 4);
    CHECK(z4.series == r4);

    bool some_odd_nonzero = false;
    for (std::size_t d = 0; d <= 20; ++d) {
        if (d % 2 == 0) {
            CHECK(d4.series.c[d] == r4.c[d]);
        } else {
            CHECK(d4.series.c[d] == 0);
            if (r4.c[d] != 0) some_odd_nonzero = true;
        }
    }
    CHECK(some_odd_nonzero);  // Z^4 has odd-norm vectors, D4 does not
}

TEST_CASE("even lattices have no odd-norm vectors") {
    for (const char* name : {"A2", "D4", "E8"}) {
        auto t = theta::theta_series(theta::builtin_lattice(name), 11);
        for (std::size_t d = 1; d <= 11; d += 2) CHECK(t.series.c[d] == 0);
    }
}

TEST_CASE("theta is invariant under unimodular base change") {
    auto d4 = theta::builtin_lattice("D4");
    // U = elementary row operation matrix; G' = U^T G U
    const long long u[4][4] = {{1, 0, 0, 0}, {2, 1, 0, 0}, {0, -1, 1, 0}, {1, 0, 3, 1}};
    std::vector<long long> g2(16, 0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            long long s = 0;
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 4; ++b) s += u[a][i] * d4.at(a, b) * u[b][j];
            g2[i * 4 + j] = s;
        }
    auto lat2 = theta::make_lattice("D4-transformed", 4, g2);
    auto t1 = theta::theta_series(d4, 12);
    auto t2 = theta::theta_series(lat2, 12);
    CHECK(t1.series == t2.series);
}

TEST_CASE("E8: classical coefficients and an integral 8th root") {
    auto t = theta::theta_series(theta::builtin_lattice("E8"), 20);
    // coefficient of x^(2m) is 240*sigma_3(m)
    const long expect[10] = {240, 2160, 6720, 17520, 30240, 60480, 82560, 140400, 181680, 272160};
    CHECK(t.series.c[0] == 1);
    for (int m = 1; m <= 10; ++m) {
        CHECK(t.series.c[static_cast<std::size_t>(2 * m)] == expect[m - 1]);
        CHECK(t.series.c[static_cast<std::size_t>(2 * m - 1)] == 0);
    }
    auto root = series::kth_root(t.series, 8);
    REQUIRE(root.ok());
    CHECK(series::ps_pow(*root.root, 8) == t.series);
}

TEST_CASE("bundled Leech theta: kissing number and 24th root") {
    auto t = theta::fixture_theta("Leech", kDataDir);
    auto [tau, u] = theta::kissing_number(t);
    CHECK(tau == 196560);
    CHECK(u == 4);
    auto root = series::kth_root(t.series, 24);
    REQUIRE(root.ok());
}

TEST_CASE("bundled Nebe24 stand-in theta: 12th root is integral") {
    auto t = theta::fixture_theta("Nebe24", kDataDir);
    CHECK(t.series.c[0] == 1);
    auto root = series::kth_root(t.series, 12);
    REQUIRE(root.ok());
    CHECK_THROWS(theta::fixture_theta("nosuch", kDataDir));
}

TEST_CASE("lattice construction rejects bad input") {
    CHECK_THROWS_AS(theta::make_lattice("bad", 2, {1, 2, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(theta::make_lattice("bad", 2, {1, 2, 2, 1}), std::invalid_argument);  // indefinite
    CHECK_THROWS_AS(theta::make_lattice("bad", 2, {1, 0, 0}), std::invalid_argument);     // size
    CHECK_THROWS_AS(theta::builtin_lattice("Q7"), std::invalid_argument);
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(theta::theta_series(theta::builtin_lattice("Z8"), 400,
                                        theta::Exec::parallel, 1000),
                    resource_limit_error);
}

TEST_CASE("gram files") {
    namespace fs = std::filesystem;
    auto p = fs::temp_directory_path() / "seqlab-gram-test.txt";
    {
        std::ofstream out(p);
        out << "# hexagonal\n2 1\n1 2\n";
    }
    auto lat = theta::read_gram_file(p.string());
    CHECK(lat.dim == 2);
    auto t = theta::theta_series(lat, 2);
    CHECK(theta::kissing_number(t).first == 6);
    fs::remove(p);
}
