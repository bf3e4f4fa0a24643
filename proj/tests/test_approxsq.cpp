#include <doctest.h>

#include "seqlab/approxsq.hpp"
#include "seqlab/numutil.hpp"

using namespace seqlab;
using approxsq::BigRational;
using approxsq::parse_rational;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("6/5") == BigRational(6, 5));
    CHECK(parse_rational("48") == 48);
    CHECK(parse_rational("10/4") == BigRational(5, 2));  // reduced
    CHECK_THROWS_AS(parse_rational("x/y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("single approximate-squaring steps") {
    CHECK(approxsq::approx_square_step(BigRational(8, 7)) == BigRational(16, 7));
    CHECK(approxsq::approx_square_step(BigRational(48, 7)) == 48);
    CHECK(approxsq::approx_square_step(BigRational(5, 2)) == BigRational(15, 2));
    CHECK_THROWS_AS(approxsq::approx_square_step(BigRational(1)), std::domain_error);
    CHECK_THROWS_AS(approxsq::approx_square_step(BigRational(2, 3)), std::domain_error);
}

TEST_CASE("trajectory of 8/7 takes three steps to 48") {
    auto t = approxsq::trajectory(BigRational(8, 7));
    CHECK(t.terminated);
    CHECK(t.steps.size() == 3);
    CHECK(t.final_value() == 48);
    CHECK(t.final_integer_digits == 2);
}

TEST_CASE("trajectory of 17/2 reaches 1204154941925628 in four steps") {
    auto t = approxsq::trajectory(BigRational(17, 2));
    CHECK(t.terminated);
    CHECK(t.steps.size() == 4);
    CHECK(t.final_value() == BigRational("1204154941925628"));
}

TEST_CASE("integer starts terminate immediately") {
    auto t = approxsq::trajectory(BigRational(7));
    CHECK(t.terminated);
    CHECK(t.steps.empty());
    CHECK(t.final_value() == 7);

    auto one = approxsq::trajectory(BigRational(3, 3));
    CHECK(one.terminated);
    CHECK(one.steps.empty());
    CHECK(one.final_value() == 1);

    CHECK_THROWS_AS(approxsq::trajectory(BigRational(1, 2)), std::domain_error);
}

TEST_CASE("exactness along a trajectory: reduced, divisor-chain, increasing") {
    auto t = approxsq::trajectory(BigRational(6, 5), 10);
    BigRational prev(6, 5);
    for (const auto& x : t.steps) {
        CHECK(gcd(mpz_class(abs(x.get_num())), x.get_den()) == 1);
        CHECK(x.get_den() > 0);
        CHECK(prev.get_den() % x.get_den() == 0);  // denominators never grow
        CHECK(x > prev);
        CHECK(x == prev * approxsq::ceil_rational(prev));
        prev = x;
    }
}

TEST_CASE("denominator-3 table rows") {
    const int steps[9] = {0, 2, 6, 0, 1, 1, 0, 5, 2};
    const char* finals[9] = {"1", "8", "1484710602474311520", "2", "7",
                             "8", "3", "1484710602474311520", "220"};
    for (int n = 3; n <= 11; ++n) {
        auto t = approxsq::trajectory(BigRational(n, 3));
        CHECK(t.terminated);
        CHECK(t.steps.size() == static_cast<std::size_t>(steps[n - 3]));
        CHECK(t.final_value() == BigRational(finals[n - 3]));
    }
}

TEST_CASE("denominator-2 step-count theorem") {
    CHECK(approxsq::den2_predicted_steps(8) == 4);   // 17/2, l = 2^3
    CHECK(approxsq::den2_predicted_steps(1) == 1);   // 3/2 -> 3
    for (std::uint64_t l = 1; l <= 50; ++l) {
        auto t = approxsq::trajectory(BigRational(2 * static_cast<long>(l) + 1, 2), 64);
        CHECK(t.terminated);
        CHECK(t.steps.size() == approxsq::den2_predicted_steps(l));
    }
}

TEST_CASE("digit budget stops runaway trajectories") {
    auto t = approxsq::trajectory(BigRational(6, 5), 30, 100);
    CHECK(!t.terminated);
    CHECK(t.budget_exceeded);

    auto t2 = approxsq::trajectory(BigRational(6, 5), 5);
    CHECK(!t2.terminated);  // max-steps timeout is a recorded outcome
    CHECK(!t2.budget_exceeded);
    CHECK(t2.steps.size() == 5);
}

TEST_CASE("decimal digit counting is exact at powers of ten") {
    CHECK(decimal_digits(mpz_class(0)) == 1);
    CHECK(decimal_digits(mpz_class(9)) == 1);
    CHECK(decimal_digits(mpz_class(10)) == 2);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, 1000);
    CHECK(decimal_digits(p) == 1001);
    CHECK(decimal_digits(p - 1) == 1000);
}
