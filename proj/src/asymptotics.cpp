#include "bpa/asymptotics.hpp"

#include <ostream>
#include <stdexcept>

namespace bpa {

namespace {

// About nine decimal digits, computed with integer division only.
std::string decimal_string(const Rat& r) {
    const Int scale = 1000000000;
    const Int scaled = numerator(r) * scale / denominator(r);
    const Int whole = scaled / scale;
    std::string frac = Int(scaled % scale).str();
    frac.insert(0, 9 - frac.size(), '0');
    return whole.str() + "." + frac;
}

}  // namespace

bool bound_check(const HTable& table, const Rat& epsilon, unsigned n_lo,
                 unsigned n_hi, unsigned* first_violation) {
    if (epsilon <= 0) throw std::invalid_argument("bound_check: epsilon must be > 0");
    if (n_hi > table.n_max()) throw std::invalid_argument("bound_check: table too short");
    const Rat q = Rat(table.params.beta) / kLog2Lo + epsilon;
    Rat qpow = 1;
    for (unsigned j = 0; j < n_lo; ++j) qpow *= q;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        if (Rat(table.at(n)) > Rat(factorial(n)) * qpow) {
            if (first_violation) *first_violation = n;
            return false;
        }
        qpow *= q;
    }
    return true;
}

std::vector<GrowthDiagnostic> ratio_table(const HTable& table, unsigned n_max) {
    if (n_max > table.n_max()) throw std::invalid_argument("ratio_table: table too short");
    std::vector<GrowthDiagnostic> rows;
    for (unsigned n = 1; n < n_max; ++n) {
        if (table.at(n) == 0) continue;
        GrowthDiagnostic d;
        d.n = n;
        d.h = table.at(n);
        d.ratio = Rat(table.at(n + 1)) / (Rat(n + 1) * Rat(table.at(n)));
        const Rat beta = table.params.lambda == 0 ? Rat(1) : Rat(table.params.beta);
        d.normalized_lo = d.ratio * kLog2Lo / beta;
        d.normalized_hi = d.ratio * kLog2Hi / beta;
        rows.push_back(std::move(d));
    }
    return rows;
}

void write_csv(std::ostream& os, const std::vector<GrowthDiagnostic>& rows) {
    os << "n,H_n,ratio_num,ratio_den,normalized_lo,normalized_hi\n";
    for (const auto& d : rows) {
        os << d.n << ',' << d.h << ',' << numerator(d.ratio) << ','
           << denominator(d.ratio) << ',' << decimal_string(d.normalized_lo) << ','
           << decimal_string(d.normalized_hi) << '\n';
    }
}

}  // namespace bpa
