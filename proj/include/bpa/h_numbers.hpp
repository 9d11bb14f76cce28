#pragma once

#include "bpa/numeric.hpp"

#include <string>
#include <vector>

namespace bpa {

// Parameter triple for H_n(lambda, beta, gamma):
//   lambda  number of bars = number of ordered-block sections,
//   beta    compartments per ordinary block (>= 1 whenever lambda >= 1),
//   gamma   compartments in the special section.
// lambda = 0 is legal and means H_n = gamma^n (EGF e^{gamma x}); beta is
// ignored in that case. (lambda, gamma) = (0, 0) is rejected.
struct Params {
    unsigned lambda = 1;
    unsigned beta = 1;
    unsigned gamma = 0;

    bool operator==(const Params&) const = default;
};

// Throws std::invalid_argument on an invalid triple.
void validate(const Params& params);

// Prefix table H_0..H_N for one parameter point, tagged with the engine
// that produced it.
struct HTable {
    Params params;
    std::vector<Int> values;
    std::string method;

    const Int& at(unsigned n) const { return values.at(n); }
    unsigned n_max() const { return static_cast<unsigned>(values.size()) - 1; }
};

// Coefficient extraction from e^{gamma x} / (2 - e^{beta x})^lambda.
HTable h_egf(const Params& params, unsigned N);

// Iterated binomial convolution of gamma^n with lambda copies of B_n(0,beta,0).
HTable h_conv(const Params& params, unsigned N);

// One-bar recurrence H_n = gamma^n + sum_{i<n} C(n,i) H_i beta^{n-i}.
HTable h_rec_one_bar(unsigned beta, unsigned gamma, unsigned N);

// One-bar block-split recurrence
// H_{n+1} = gamma H_n + beta sum_i C(n,i) H_i(beta,gamma) H_{n-i}(beta,beta).
HTable h_rec_block_split(unsigned beta, unsigned gamma, unsigned N);

// Inclusion-exclusion back to the Bell numbers:
// B_n(0,beta,0) = sum_i C(n,i) H_i(1,beta,gamma) (-1)^{n-i} gamma^{n-i}.
// Independent of gamma.
std::vector<Int> b_from_alternating(unsigned beta, unsigned gamma, unsigned N);

// Marked-bar recurrence for gamma = beta, lambda >= 2:
// H_n(l,b,b) = H_n(l-1,b,b)/2
//            + sum_i C(n,i) H_{i+1}(l-1,b,0) b^{n-i} / (2 b (l-1)).
// Intermediate divisions are exact; a remainder aborts via std::logic_error.
HTable h_rec_marked_bar(unsigned lambda, unsigned beta, unsigned N);

// Element-insertion recurrence (any lambda >= 0):
// H_{n+1} = gamma H_n + lambda beta sum_i C(n,i) H_i(1,beta,beta) H_{n-i}.
HTable h_rec_insert(const Params& params, unsigned N);

// Bar-merge identity, exposed as a checked evaluator: returns
// gamma H_n(l,b,g) + l b H_n(l+1,b,g+b), which must equal H_{n+1}(l,b,g).
Int h_rec_merge_rhs(const Params& params, unsigned n);

// gamma-shift ladder H_n(l,b,g+b) = 2 H_n(l,b,g) - H_n(l-1,b,g), climbed
// from base tables at gamma mod beta.
HTable h_shift(const Params& params, unsigned N);

// Empty-special-section recurrence for gamma = 0, lambda >= 2:
// H_n(l,b,0) = H_{n+1}(l-1,b,0) / (2 b (l-1)) + H_n(l-1,b,0)/2.
HTable h_rec_empty_special(unsigned lambda, unsigned beta, unsigned N);

// Certified infinite-series route (stacked geometric series over lambda):
// H_n(l,b,g) = sum_{s>=0} H_n(l-1,b,g+bs)/2^{s+1}, truncated with a tail
// bound and rounded exactly.
HTable h_dobinski(const Params& params, unsigned N);

// H_n for a single point, tolerating the degenerate (lambda,gamma) = (0,0)
// that appears inside the alternating/series summations (0^n = [n==0]).
Int h_value_degenerate_ok(unsigned lambda, unsigned beta, unsigned gamma, unsigned n);

}  // namespace bpa
