#pragma once

#include "bpa/numeric.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bpa {

// OEIS b-file: "n a(n)" per line, '#' comments ignored, indices strictly
// increasing.
struct BFile {
    std::vector<std::pair<long long, Int>> entries;
    std::string source;
};

// Throws std::invalid_argument on malformed lines or non-increasing indices.
BFile parse_bfile(std::istream& in, std::string source);

void write_bfile(std::ostream& os, const std::vector<Int>& values,
                 long long first_index = 0);

struct BFileCompare {
    bool match = false;
    long long first_mismatch = -1;  // index of the first differing entry
    size_t compared = 0;            // entries actually compared
};

// Compares the overlap of the b-file with values[offset + i] at index i.
// Entries outside 0..values.size()-1 (after offset shift) are ignored.
BFileCompare compare_bfile(const BFile& bfile, const std::vector<Int>& values,
                           long long offset = 0);

}  // namespace bpa
