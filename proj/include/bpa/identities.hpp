#pragma once

#include "bpa/numeric.hpp"

#include <string>
#include <vector>

namespace bpa {

// One identity instance at one parameter point. pass <=> lhs == rhs exactly.
struct IdentityReport {
    std::string identity;
    unsigned n = 0;
    unsigned lambda = 0;
    unsigned beta = 0;
    unsigned gamma = 0;
    Rat lhs;
    Rat rhs;
    bool pass = false;
};

IdentityReport make_report(std::string identity, unsigned n, unsigned lambda,
                           unsigned beta, unsigned gamma, Rat lhs, Rat rhs);

// One JSON object per line: {identity, n, lambda, beta, gamma, lhs, rhs, pass}.
std::string to_jsonl(const IdentityReport& r);

// Nelsen's identity: the finite double sum
//   sum_{k=0..n} sum_{s=0..k} C(k,s)(-1)^{k-s}(gamma+s)^n
// against the certified evaluation of (1/2) sum_{s>=0} (gamma+s)^n / 2^s.
// Both sides equal H_n(1,1,gamma).
IdentityReport check_nelsen(unsigned gamma, unsigned n);

// The generalized form: finite double sum over H_n(lambda-1,beta,gamma+beta*s)
// against the certified series sum_{s>=0} H_n(lambda-1,beta,gamma+beta*s)/2^{s+1}.
// Both sides equal H_n(lambda,beta,gamma).
IdentityReport check_nelsen_generalized(unsigned lambda, unsigned beta,
                                        unsigned gamma, unsigned n);

struct GridSpec {
    unsigned n_max = 25;
    unsigned lambda_max = 3;
    unsigned beta_max = 3;
    unsigned gamma_max = 3;
    // Caps for the sub-checks that are quadratic in n or build lambda+1
    // tables; kept <= n_max.
    unsigned nelsen_n_max = 15;
};

// Every named identity of the suite over the grid; deterministic order.
std::vector<IdentityReport> run_suite(const GridSpec& grid);

}  // namespace bpa
