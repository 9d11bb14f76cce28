#pragma once

#include "bpa/h_numbers.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bpa {

// (element, color) pairs, ascending by element. Colors are 1-based.
using ColoredElems = std::vector<std::pair<unsigned, unsigned>>;

// A concrete colored barred preferential arrangement of {1..n}: a special
// section (colors 1..gamma) plus lambda sections of ordered non-empty blocks
// (colors 1..beta). The domains of special and all blocks partition {1..n}.
struct BpaStructure {
    unsigned n = 0;
    Params params;
    ColoredElems special;
    std::vector<std::vector<ColoredElems>> sections;

    bool operator==(const BpaStructure&) const = default;
};

struct EnumerationBudget {
    Int max_count = Int(100000000);  // 10^8
};

// Visits every valid structure exactly once; the reference passed to the
// callback is reused between calls (copy it to keep it). Throws
// std::invalid_argument when the h_egf-predicted count exceeds the budget.
void enumerate(unsigned n, const Params& params, const EnumerationBudget& budget,
               const std::function<void(const BpaStructure&)>& visit);

// Streaming count of the same walk, no structures materialized.
Int count(unsigned n, const Params& params, const EnumerationBudget& budget);

// Theorem-28 restricted count: sum over k = 0..n of structures with lambda-1
// ordinary sections and a special section of gamma + k*beta compartments in
// which each of the k beta-bands is hit at least once. Equals H_n(lambda,
// beta, gamma).
Int count_restricted_thm28(unsigned n, unsigned lambda, unsigned beta, unsigned gamma,
                           const EnumerationBudget& budget);

// Canonical text form:
//   bpa := special ("|" section)^lambda
//   special := "[" assigns "]" ; section := block* ; block := "{" assigns "}"
//   assigns := (elem ":" color) ("," elem ":" color)* | epsilon
// Elements ascending inside braces; deterministic output.
std::string format(const BpaStructure& s);

// Inverse of format; whitespace-insensitive between tokens. Throws
// std::invalid_argument on syntax errors, repeated/missing elements,
// colors out of range, wrong bar count, or empty blocks.
BpaStructure parse(const std::string& text, const Params& params, unsigned n);

}  // namespace bpa
