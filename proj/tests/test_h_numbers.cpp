#include "bpa/h_numbers.hpp"

#include <doctest.h>

#include <vector>

using namespace bpa;

namespace {

const std::vector<Int> kFubini{1, 1, 3, 13, 75, 541};

}

TEST_CASE("params validity") {
    CHECK_THROWS_AS(validate(Params{0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Params{1, 0, 2}), std::invalid_argument);
    CHECK_NOTHROW(validate(Params{0, 0, 3}));
    CHECK_NOTHROW(validate(Params{2, 3, 0}));
}

TEST_CASE("h_egf known prefixes") {
    const HTable fub = h_egf(Params{1, 1, 0}, 5);
    for (unsigned n = 0; n <= 5; ++n) CHECK(fub.at(n) == kFubini[n]);

    const HTable pow3 = h_egf(Params{0, 1, 3}, 2);
    CHECK(pow3.values == std::vector<Int>{1, 3, 9});

    const HTable two_bars = h_egf(Params{2, 1, 0}, 2);
    CHECK(two_bars.values == std::vector<Int>{1, 2, 8});
}

TEST_CASE("h_conv known prefixes") {
    CHECK(h_conv(Params{1, 1, 2}, 4).values == std::vector<Int>{1, 3, 11, 51, 299});
    CHECK(h_conv(Params{1, 2, 0}, 3).values == std::vector<Int>{1, 2, 12, 104});
    CHECK(h_conv(Params{2, 1, 0}, 2).values == std::vector<Int>{1, 2, 8});
}

TEST_CASE("one-bar recurrence") {
    CHECK(h_rec_one_bar(1, 2, 2).at(2) == 11);
    CHECK(h_rec_one_bar(1, 0, 3).at(3) == 13);
    CHECK(h_rec_one_bar(2, 0, 1).at(1) == 2);
}

TEST_CASE("block-split recurrence") {
    CHECK(h_rec_block_split(1, 0, 3).at(3) == 13);
    CHECK(h_rec_block_split(1, 1, 1).at(1) == 2);
    CHECK(h_rec_block_split(3, 2, 0).at(0) == 1);
}

TEST_CASE("alternating sum recovers the Bell sequence") {
    CHECK(b_from_alternating(1, 1, 2)[2] == 3);
    CHECK(b_from_alternating(1, 0, 2)[2] == 3);
    CHECK(b_from_alternating(2, 1, 1)[1] == 2);
    // gamma-independence
    for (unsigned gamma = 0; gamma <= 3; ++gamma) {
        CHECK(b_from_alternating(2, gamma, 8) == b_from_alternating(2, 0, 8));
    }
}

TEST_CASE("marked-bar recurrence") {
    CHECK(h_rec_marked_bar(2, 1, 1).at(0) == 1);
    CHECK(h_rec_marked_bar(2, 1, 1).at(1) == 3);
    CHECK(h_rec_marked_bar(2, 2, 1).at(1) == 6);
    CHECK_THROWS_AS(h_rec_marked_bar(1, 1, 3), std::invalid_argument);
}

TEST_CASE("insertion recurrence") {
    CHECK(h_rec_insert(Params{1, 1, 0}, 3).at(3) == 13);
    CHECK(h_rec_insert(Params{2, 1, 0}, 2).at(2) == 8);
    CHECK(h_rec_insert(Params{3, 2, 1}, 0).at(0) == 1);
}

TEST_CASE("bar-merge checked evaluator") {
    CHECK(h_rec_merge_rhs(Params{1, 1, 0}, 1) == 3);
    CHECK(h_rec_merge_rhs(Params{1, 1, 2}, 0) == 3);
    // lambda = 0 degenerates to gamma^{n+1}
    for (unsigned n = 0; n <= 5; ++n) {
        CHECK(h_rec_merge_rhs(Params{0, 1, 3}, n) == pow_int(Int(3), n + 1));
    }
}

TEST_CASE("gamma-shift ladder") {
    CHECK(h_egf(Params{1, 1, 2}, 2).at(2) == 2 * h_egf(Params{1, 1, 1}, 2).at(2) - 1);
    CHECK(h_egf(Params{1, 1, 1}, 2).at(2) == 2 * h_egf(Params{1, 1, 0}, 2).at(2) - 0);
    CHECK(h_shift(Params{1, 1, 2}, 4).values == std::vector<Int>{1, 3, 11, 51, 299});
    CHECK(h_shift(Params{2, 3, 5}, 0).at(0) == 1);
}

TEST_CASE("empty-special recurrence") {
    CHECK(h_rec_empty_special(2, 1, 2).values == std::vector<Int>{1, 2, 8});
    CHECK(h_rec_empty_special(2, 2, 1).at(1) == 4);
    CHECK_THROWS_AS(h_rec_empty_special(1, 1, 2), std::invalid_argument);
}

TEST_CASE("all engines agree across a parameter grid") {
    const unsigned N = 12;
    for (unsigned lambda = 0; lambda <= 3; ++lambda) {
        for (unsigned beta = 1; beta <= 3; ++beta) {
            for (unsigned gamma = 0; gamma <= 3; ++gamma) {
                if (lambda == 0 && gamma == 0) continue;
                const Params p{lambda, beta, gamma};
                CAPTURE(lambda);
                CAPTURE(beta);
                CAPTURE(gamma);
                const HTable ref = h_egf(p, N);
                REQUIRE(h_conv(p, N).values == ref.values);
                REQUIRE(h_dobinski(p, N).values == ref.values);
                REQUIRE(h_rec_insert(p, N).values == ref.values);
                REQUIRE(h_shift(p, N).values == ref.values);
                if (lambda == 1) {
                    REQUIRE(h_rec_one_bar(beta, gamma, N).values == ref.values);
                    REQUIRE(h_rec_block_split(beta, gamma, N).values == ref.values);
                }
                if (lambda >= 2 && gamma == beta) {
                    REQUIRE(h_rec_marked_bar(lambda, beta, N).values == ref.values);
                }
                if (lambda >= 2 && gamma == 0) {
                    REQUIRE(h_rec_empty_special(lambda, beta, N).values == ref.values);
                }
                for (unsigned n = 0; n + 1 <= N; ++n) {
                    REQUIRE(h_rec_merge_rhs(p, n) == ref.at(n + 1));
                }
            }
        }
    }
}

TEST_CASE("monotonicity of the gamma shift") {
    // H_n(l,b,g+b) - H_n(l,b,g) = H_n(l,b,g) - H_n(l-1,b,g) >= 0
    const unsigned N = 15;
    for (unsigned lambda = 1; lambda <= 3; ++lambda) {
        for (unsigned beta = 1; beta <= 3; ++beta) {
            for (unsigned gamma = 0; gamma <= 3; ++gamma) {
                const HTable up = h_egf(Params{lambda, beta, gamma + beta}, N);
                const HTable mid = h_egf(Params{lambda, beta, gamma}, N);
                for (unsigned n = 0; n <= N; ++n) {
                    const Int low = h_value_degenerate_ok(lambda - 1, beta, gamma, n);
                    CHECK(up.at(n) - mid.at(n) == mid.at(n) - low);
                    CHECK(up.at(n) >= mid.at(n));
                }
            }
        }
    }
}

TEST_CASE("table invariants") {
    for (unsigned lambda = 0; lambda <= 3; ++lambda) {
        for (unsigned gamma = lambda == 0 ? 1 : 0; gamma <= 3; ++gamma) {
            const HTable t = h_egf(Params{lambda, 2, gamma}, 10);
            CHECK(t.at(0) == 1);
            for (const Int& v : t.values) CHECK(v >= 0);
        }
    }
}
