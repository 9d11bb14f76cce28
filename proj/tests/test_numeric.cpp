#include "bpa/numeric.hpp"

#include <doctest.h>

#include <random>

using namespace bpa;

TEST_CASE("binomial basics") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial symmetry") {
    for (unsigned n = 0; n <= 30; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n, n - k));
        }
    }
}

TEST_CASE("multinomial") {
    CHECK(multinomial({1, 1}) == 2);
    CHECK(multinomial({2, 0, 1}) == 3);
    CHECK(multinomial({2, 2}) == 6);
    CHECK(multinomial({}) == 1);
}

TEST_CASE("gen_factorial") {
    CHECK(gen_factorial(5, 2, 3) == 15);  // 5*3*1
    CHECK(gen_factorial(3, 0, 4) == 81);
    CHECK(gen_factorial(2, 1, 4) == 0);
    CHECK(gen_factorial(7, 3, 0) == 1);
    // negative factors appear
    CHECK(gen_factorial(1, 2, 3) == 3);  // 1*(-1)*(-3)
}

TEST_CASE("gen_factorial at alpha=0 is a power") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        const Int x = static_cast<int>(rng() % 19) - 9;
        const unsigned n = rng() % 51;
        CHECK(gen_factorial(x, 0, n) == pow_int(x, n));
    }
}

TEST_CASE("forward_difference") {
    auto square = [](unsigned s) { return Rat(Int(s) * s); };
    CHECK(forward_difference(square, 2) == 2);
    CHECK(forward_difference(square, 0) == 0);
    auto constant = [](unsigned) { return Rat(1); };
    CHECK(forward_difference(constant, 1) == 0);
}

TEST_CASE("forward_difference annihilates low-degree polynomials") {
    // degree d <= 6, order i > d gives 0
    for (unsigned d = 0; d <= 6; ++d) {
        auto poly = [d](unsigned s) {
            Rat acc = 0;
            Rat p = 1;
            for (unsigned j = 0; j <= d; ++j) {
                acc += Rat(j + 1) * p;
                p *= Int(s);
            }
            return acc;
        };
        for (unsigned i = d + 1; i <= 10; ++i) {
            CAPTURE(d);
            CAPTURE(i);
            CHECK(forward_difference(poly, i) == 0);
        }
    }
}

TEST_CASE("rounding helpers") {
    CHECK(round_nearest(Rat(5, 2)) == 3);   // ties up
    CHECK(round_nearest(Rat(7, 3)) == 2);
    CHECK(round_nearest(Rat(-7, 3)) == -2);
    CHECK(round_nearest(Rat(-5, 2)) == -2);
    CHECK(to_integer_exact(Rat(42)) == 42);
    CHECK_THROWS_AS((void)to_integer_exact(Rat(1, 2)), std::logic_error);
    CHECK(is_integer(Rat(6, 3)));
    CHECK(!is_integer(Rat(6, 4)));
}

TEST_CASE("factorial growth stays exact") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(25) == Int("15511210043330985984000000"));
}
