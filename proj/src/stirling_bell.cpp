#include "bpa/stirling_bell.hpp"

#include <stdexcept>
#include <vector>

namespace bpa {

void validate(const GsnKey& key) {
    if (key.beta == 0) {
        throw std::invalid_argument("GsnKey: beta must be >= 1");
    }
}

Int stirling_scaled(const GsnKey& key) {
    validate(key);
    Int acc = 0;
    for (unsigned s = 0; s <= key.i; ++s) {
        Int term = binomial(key.i, s) *
                   gen_factorial(Int(key.beta) * s + key.gamma, key.alpha, key.n);
        if ((key.i - s) % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

Rat stirling(const GsnKey& key) {
    return Rat(stirling_scaled(key)) / Rat(pow_int(Int(key.beta), key.i) * factorial(key.i));
}

Int bell(unsigned n, unsigned alpha, unsigned beta, unsigned gamma) {
    Int acc = 0;
    for (unsigned i = 0; i <= n; ++i) {
        acc += stirling_scaled({n, i, alpha, beta, gamma});
    }
    return acc;
}

Int bell_dobinski(unsigned n, unsigned alpha, unsigned beta, unsigned gamma) {
    if (beta == 0) throw std::invalid_argument("bell_dobinski: beta must be >= 1");
    Rat partial = 0;
    Rat pow2 = 1;  // 2^k
    for (unsigned k = 0;; ++k) {
        const Int head = Int(beta) * k + gamma;
        const Rat term = Rat(gen_factorial(head, alpha, n)) / pow2;
        partial += term;
        pow2 *= 2;

        // Tail certification: once every factor of (beta*k+gamma|alpha)_n is
        // positive, the term ratio is bounded by
        //   r = (1 + beta/(beta*k+gamma-(n-1)*alpha))^n / 2
        // (worst factor is the smallest one), so tail <= term*r/(1-r).
        const Int smallest_factor =
            n == 0 ? head : head - Int(alpha) * (n - 1);
        if (n > 0 && smallest_factor <= 0) continue;
        const Rat r = n == 0
                          ? Rat(1, 2)
                          : [&]() -> Rat {
                                Rat base = 1 + Rat(beta) / Rat(smallest_factor);
                                Rat p = 1;
                                for (unsigned j = 0; j < n; ++j) p *= base;
                                return Rat(p / 2);
                            }();
        if (r > Rat(3, 4)) continue;
        const Rat tail_bound = term * r / (1 - r);
        if (tail_bound < 1) {
            return round_nearest(partial / 2);
        }
    }
}

Int cell_count_oracle(unsigned n, unsigned i, unsigned beta, unsigned gamma,
                      unsigned cap) {
    if (n > cap) {
        throw std::invalid_argument("cell_count_oracle: n exceeds enumeration cap");
    }
    const unsigned slots = i * beta + gamma;
    if (i > 0 && beta == 0) return 0;  // the i required-non-empty blocks have no slots
    if (pow_int(Int(slots == 0 ? 1 : slots), n) > (Int(1) << 62)) {
        throw std::invalid_argument("cell_count_oracle: state space too large");
    }
    if (slots == 0) return n == 0 ? 1 : 0;

    // Walk all slots^n assignments, tracking how many of the first i blocks
    // are still empty.
    std::vector<unsigned> fill(i, 0);
    unsigned long long hits = 0;
    auto recurse = [&](auto&& self, unsigned depth, unsigned empties) -> void {
        if (depth == n) {
            hits += (empties == 0);
            return;
        }
        for (unsigned slot = 0; slot < slots; ++slot) {
            if (slot < i * beta) {
                const unsigned block = slot / beta;
                if (fill[block]++ == 0) --empties;
                self(self, depth + 1, empties);
                if (--fill[block] == 0) ++empties;
            } else {
                self(self, depth + 1, empties);
            }
        }
    };
    recurse(recurse, 0, i);
    return Int(hits);
}

}  // namespace bpa
