#include <doctest.h>

#include <numeric>
#include <set>

#include "seqlab/ekg.hpp"
#include "seqlab/errors.hpp"

using namespace seqlab;

TEST_CASE("opening terms follow the published listing") {
    const std::uint64_t expect[18] = {1, 2, 4, 6, 3, 9, 12, 8, 10, 5, 15, 18, 14, 7, 21, 24, 16, 20};
    auto t = ekg::generate(18);
    REQUIRE(t.size() == 18);
    for (int i = 0; i < 18; ++i) CHECK(t[i] == expect[i]);

    CHECK(ekg::generate(2) == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("single steps from seeded states") {
    ekg::Generator g;           // holds 1, 2
    CHECK(g.next() == 4);       // a(3)
    CHECK(g.next() == 6);       // a(4)
    while (g.size() < 17) g.next();
    CHECK(g.next() == 20);      // listing ends ..., 16, 20
}

TEST_CASE("fast generator equals the quadratic-scan reference") {
    auto fast = ekg::generate(1000);
    auto naive = ekg::generate_naive(1000);
    CHECK(fast == naive);
}

TEST_CASE("minimality: nothing smaller was admissible") {
    auto t = ekg::generate(2000);
    std::set<std::uint64_t> used;
    used.insert(t[0]);
    used.insert(t[1]);
    for (std::size_t n = 2; n < t.size(); ++n) {
        for (std::uint64_t m = 2; m < t[n]; ++m)
            if (!used.count(m) && std::gcd(m, t[n - 1]) > 1)
                FAIL("smaller candidate ", m, " at step ", n + 1);
        used.insert(t[n]);
    }
}

TEST_CASE("consecutive terms share a factor and no duplicates appear") {
    auto t = ekg::generate(5000);
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(seen.insert(t[i]).second);
        if (i >= 1 && i + 1 < t.size()) CHECK(std::gcd(t[i], t[i + 1]) > 1);
    }
}

TEST_CASE("prime neighbor pattern 2p, p, 3p") {
    auto t = ekg::generate(18);
    CHECK(ekg::prime_neighbor_violations(t).empty());
    CHECK(t[9] == 5);            // p=5 at position 10
    CHECK(t[8] == 10);
    CHECK(t[10] == 15);
    CHECK(t[4] == 3);            // p=3 at position 5: 6 before, 9 after
    CHECK(t[3] == 6);
    CHECK(t[5] == 9);

    auto big = ekg::generate(20000);
    CHECK(ekg::prime_neighbor_violations(big).empty());
}

TEST_CASE("three-line classification") {
    auto t = ekg::generate(18);
    auto labels = ekg::classify(t);
    CHECK(labels[13] == ekg::Line::lower);    // a(14) = 7
    CHECK(labels[14] == ekg::Line::upper);    // a(15) = 21 follows 7
    CHECK(labels[2] == ekg::Line::central);   // a(3) = 4
    // 3p not preceded by p stays central: a(6) = 9 follows 3 -> upper,
    // but a(12) = 18 = 3*6 is central
    CHECK(t[11] == 18);
    CHECK(labels[11] == ekg::Line::central);
}

TEST_CASE("permutation prefix: small values all appear early") {
    auto t = ekg::generate(1000);
    std::set<std::uint64_t> seen(t.begin(), t.end());
    for (std::uint64_t m = 1; m <= 1000 / 3; ++m) CHECK(seen.count(m));
}

TEST_CASE("growth envelope on a 10^5 prefix") {
    auto t = ekg::generate(100000);
    for (std::size_t n = 100; n <= t.size(); ++n) {
        double ratio = static_cast<double>(t[n - 1]) / static_cast<double>(n);
        CHECK(ratio > 0.25);
        CHECK(ratio < 3.25);
    }
}

TEST_CASE("term cap is enforced") {
    CHECK_THROWS_AS(ekg::generate(100, 10), resource_limit_error);
}
