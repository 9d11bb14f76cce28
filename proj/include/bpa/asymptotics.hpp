#pragma once

#include "bpa/h_numbers.hpp"

#include <iosfwd>
#include <vector>

namespace bpa {

// Rational bracket 0.6931 < log 2 < 0.6932, the only analytic constant the
// growth diagnostics need.
inline const Rat kLog2Lo{6931, 10000};
inline const Rat kLog2Hi{6932, 10000};

struct GrowthDiagnostic {
    unsigned n = 0;
    Int h;                   // H_n
    Rat ratio;               // H_{n+1} / ((n+1) H_n)
    Rat normalized_lo;       // ratio * log2 / beta, bracketed
    Rat normalized_hi;
};

// Verifies H_n <= n! q^n for q = beta/0.6931 + epsilon (>= beta/log2 + epsilon)
// over n in [n_lo, n_hi]. Returns true when no n violates the bound; the first
// violating n (if any) is written to first_violation.
bool bound_check(const HTable& table, const Rat& epsilon, unsigned n_lo,
                 unsigned n_hi, unsigned* first_violation = nullptr);

// Ratio diagnostics for n = 1 .. n_max-1 (needs H_{n+1} in the table).
std::vector<GrowthDiagnostic> ratio_table(const HTable& table, unsigned n_max);

// CSV: n, H_n, ratio_num, ratio_den, normalized_lo, normalized_hi.
void write_csv(std::ostream& os, const std::vector<GrowthDiagnostic>& rows);

}  // namespace bpa
