#pragma once

#include "bpa/numeric.hpp"

namespace bpa {

// Parameter point for the generalized Stirling numbers S(n,i,alpha,beta,gamma).
// beta >= 1 keeps (alpha,beta,gamma) away from (0,0,0) and the beta^i division
// well defined.
struct GsnKey {
    unsigned n = 0;
    unsigned i = 0;
    unsigned alpha = 0;
    unsigned beta = 1;
    unsigned gamma = 0;
};

// Throws std::invalid_argument when beta = 0.
void validate(const GsnKey& key);

// beta^i * i! * S(n,i,alpha,beta,gamma)
//   = sum_{s=0..i} (-1)^{i-s} C(i,s) (beta*s+gamma | alpha)_n.
// Always an integer; non-negative when alpha = 0, may be negative otherwise.
Int stirling_scaled(const GsnKey& key);

// S itself, as an exact rational.
Rat stirling(const GsnKey& key);

// Generalized Bell number: sum_{i=0..n} beta^i * i! * S(n,i,alpha,beta,gamma).
Int bell(unsigned n, unsigned alpha, unsigned beta, unsigned gamma);

// Same value through the Dobinski-type series
//   (1/2) * sum_{k>=0} (beta*k+gamma | alpha)_n / 2^k,
// truncated with a certified geometric tail bound and rounded to the
// nearest integer (exact because the tail stays below 1/2).
Int bell_dobinski(unsigned n, unsigned alpha, unsigned beta, unsigned gamma);

// Brute-force oracle for the alpha = 0 cell model: counts assignments of n
// labelled elements to i blocks of beta compartments plus one block of gamma
// compartments, with all i beta-blocks non-empty. Throws std::invalid_argument
// when n exceeds the cap.
Int cell_count_oracle(unsigned n, unsigned i, unsigned beta, unsigned gamma,
                      unsigned cap = 8);

}  // namespace bpa
