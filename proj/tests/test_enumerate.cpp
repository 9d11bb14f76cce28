#include "bpa/enumerate.hpp"

#include <doctest.h>

#include <unordered_set>

using namespace bpa;

namespace {

const EnumerationBudget kBudget{};

}

TEST_CASE("count small points") {
    CHECK(count(0, Params{1, 1, 0}, kBudget) == 1);
    CHECK(count(2, Params{2, 1, 0}, kBudget) == 8);
    CHECK(count(2, Params{1, 2, 0}, kBudget) == 12);
    CHECK(count(3, Params{1, 1, 0}, kBudget) == 13);
    CHECK(count(2, Params{1, 1, 2}, kBudget) == 11);
    CHECK(count(1, Params{0, 1, 3}, kBudget) == 3);
}

TEST_CASE("budget refusal") {
    CHECK_THROWS_AS((void)count(8, Params{1, 1, 0}, EnumerationBudget{Int(100)}),
                    std::invalid_argument);
}

TEST_CASE("count matches h_egf on the oracle grid") {
    for (unsigned lambda = 0; lambda <= 2; ++lambda) {
        for (unsigned beta = 1; beta <= 3; ++beta) {
            for (unsigned gamma = 0; gamma <= 3; ++gamma) {
                if (lambda == 0 && gamma == 0) continue;
                const Params p{lambda, beta, gamma};
                for (unsigned n = 0; n <= 4; ++n) {
                    CAPTURE(lambda);
                    CAPTURE(beta);
                    CAPTURE(gamma);
                    CAPTURE(n);
                    REQUIRE(count(n, p, kBudget) == h_egf(p, n).at(n));
                }
            }
        }
    }
}

TEST_CASE("enumerate yields distinct structures, count-many of them") {
    for (const Params p : {Params{1, 2, 1}, Params{2, 1, 0}, Params{1, 1, 2}}) {
        for (unsigned n = 0; n <= 4; ++n) {
            std::unordered_set<std::string> seen;
            unsigned long long total = 0;
            enumerate(n, p, kBudget, [&](const BpaStructure& s) {
                ++total;
                seen.insert(format(s));
            });
            CAPTURE(n);
            REQUIRE(Int(total) == count(n, p, kBudget));
            REQUIRE(seen.size() == total);
        }
    }
}

TEST_CASE("restricted band count equals H") {
    CHECK(count_restricted_thm28(2, 1, 1, 0, kBudget) == 3);
    CHECK(count_restricted_thm28(1, 1, 1, 1, kBudget) == 2);
    CHECK(count_restricted_thm28(0, 1, 2, 3, kBudget) == 1);
    for (unsigned lambda = 1; lambda <= 2; ++lambda) {
        for (unsigned beta = 1; beta <= 2; ++beta) {
            for (unsigned gamma = 0; gamma <= 2; ++gamma) {
                for (unsigned n = 0; n <= 4; ++n) {
                    CAPTURE(lambda);
                    CAPTURE(beta);
                    CAPTURE(gamma);
                    CAPTURE(n);
                    REQUIRE(count_restricted_thm28(n, lambda, beta, gamma, kBudget) ==
                            h_egf(Params{lambda, beta, gamma}, n).at(n));
                }
            }
        }
    }
}

TEST_CASE("format canonical strings") {
    BpaStructure empty;
    empty.n = 0;
    empty.params = Params{1, 1, 0};
    empty.sections.assign(1, {});
    CHECK(format(empty) == "[] |");

    // the n=6 example: empty special, sections ({3,5},{2}) / () / ({1},{4},{6})
    BpaStructure s;
    s.n = 6;
    s.params = Params{3, 1, 0};
    s.sections = {{{{3, 1}, {5, 1}}, {{2, 1}}}, {}, {{{1, 1}}, {{4, 1}}, {{6, 1}}}};
    CHECK(format(s) == "[] | {3:1,5:1} {2:1} | | {1:1} {4:1} {6:1}");

    BpaStructure sp;
    sp.n = 2;
    sp.params = Params{1, 1, 2};
    sp.special = {{1, 2}, {2, 1}};
    sp.sections.assign(1, {});
    CHECK(format(sp) == "[1:2,2:1] |");
}

TEST_CASE("parse round-trips the format examples") {
    BpaStructure s;
    s.n = 6;
    s.params = Params{3, 1, 0};
    s.sections = {{{{3, 1}, {5, 1}}, {{2, 1}}}, {}, {{{1, 1}}, {{4, 1}}, {{6, 1}}}};
    CHECK(parse(format(s), s.params, s.n) == s);

    BpaStructure empty;
    empty.n = 0;
    empty.params = Params{1, 1, 0};
    empty.sections.assign(1, {});
    CHECK(parse("[] |", empty.params, 0) == empty);

    BpaStructure sp;
    sp.n = 2;
    sp.params = Params{1, 1, 2};
    sp.special = {{1, 2}, {2, 1}};
    sp.sections.assign(1, {});
    CHECK(parse("  [ 2:1 , 1:2 ]   | ", sp.params, 2) == sp);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS((void)parse("{1:1} |", Params{1, 1, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)parse("[] | {1:3}", Params{1, 2, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)parse("[] | |", Params{1, 1, 0}, 0), std::invalid_argument);       // too many bars
    CHECK_THROWS_AS((void)parse("[]", Params{1, 1, 0}, 0), std::invalid_argument);           // too few bars
    CHECK_THROWS_AS((void)parse("[] | {}", Params{1, 1, 0}, 0), std::invalid_argument);      // empty block
    CHECK_THROWS_AS((void)parse("[] | {1:1,1:1}", Params{1, 1, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)parse("[] | {1:1}", Params{1, 1, 0}, 2), std::invalid_argument);   // 2 missing
    CHECK_THROWS_AS((void)parse("[1:1] |", Params{1, 1, 0}, 1), std::invalid_argument);      // gamma=0
}

TEST_CASE("parse-format identity over an enumerated grid") {
    for (const Params p : {Params{2, 2, 1}, Params{1, 3, 2}}) {
        for (unsigned n = 0; n <= 3; ++n) {
            enumerate(n, p, kBudget, [&](const BpaStructure& s) {
                const std::string text = format(s);
                REQUIRE(parse(text, p, n) == s);
            });
        }
    }
}
