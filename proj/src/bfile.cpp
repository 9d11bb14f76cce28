#include "bpa/bfile.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bpa {

BFile parse_bfile(std::istream& in, std::string source) {
    BFile bf;
    bf.source = std::move(source);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        long long index;
        std::string value;
        if (!(ls >> index >> value)) {
            throw std::invalid_argument(bf.source + ":" + std::to_string(lineno) +
                                        ": malformed b-file line");
        }
        Int v;
        try {
            v = Int(value);
        } catch (const std::exception&) {
            throw std::invalid_argument(bf.source + ":" + std::to_string(lineno) +
                                        ": bad integer '" + value + "'");
        }
        if (!bf.entries.empty() && index <= bf.entries.back().first) {
            throw std::invalid_argument(bf.source + ":" + std::to_string(lineno) +
                                        ": indices not strictly increasing");
        }
        bf.entries.emplace_back(index, std::move(v));
    }
    return bf;
}

void write_bfile(std::ostream& os, const std::vector<Int>& values, long long first_index) {
    for (size_t i = 0; i < values.size(); ++i) {
        os << (first_index + static_cast<long long>(i)) << ' ' << values[i] << '\n';
    }
}

BFileCompare compare_bfile(const BFile& bfile, const std::vector<Int>& values,
                           long long offset) {
    BFileCompare result;
    result.match = true;
    for (const auto& [index, value] : bfile.entries) {
        const long long i = index - offset;
        if (i < 0 || i >= static_cast<long long>(values.size())) continue;
        ++result.compared;
        if (values[static_cast<size_t>(i)] != value) {
            result.match = false;
            result.first_mismatch = index;
            break;
        }
    }
    return result;
}

}  // namespace bpa
