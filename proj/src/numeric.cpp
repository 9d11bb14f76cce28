#include "bpa/numeric.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace bpa {

namespace {

// deque keeps references stable while the cache grows.
std::deque<Int> g_factorials{1};
std::shared_mutex g_factorial_mutex;

}  // namespace

Int factorial(unsigned n) {
    {
        std::shared_lock lock(g_factorial_mutex);
        if (n < g_factorials.size()) return g_factorials[n];
    }
    std::unique_lock lock(g_factorial_mutex);
    while (g_factorials.size() <= n) {
        g_factorials.push_back(g_factorials.back() * Int(g_factorials.size()));
    }
    return g_factorials[n];
}

Int binomial(unsigned n, long long k) {
    if (k < 0 || static_cast<unsigned long long>(k) > n) return 0;
    const auto uk = static_cast<unsigned>(k);
    return factorial(n) / (factorial(uk) * factorial(n - uk));
}

Int multinomial(const std::vector<unsigned>& parts) {
    unsigned total = 0;
    for (unsigned p : parts) total += p;
    Int result = factorial(total);
    for (unsigned p : parts) result /= factorial(p);
    return result;
}

Int gen_factorial(const Int& x, unsigned alpha, unsigned n) {
    Int result = 1;
    for (unsigned j = 0; j < n; ++j) {
        result *= x - Int(alpha) * j;
    }
    return result;
}

Rat forward_difference(const std::function<Rat(unsigned)>& f, unsigned i) {
    Rat acc = 0;
    for (unsigned s = 0; s <= i; ++s) {
        Rat term = Rat(binomial(i, s)) * f(s);
        if ((i - s) % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

Int pow_int(const Int& base, unsigned e) {
    Int result = 1;
    Int b = base;
    for (unsigned bit = e; bit != 0; bit >>= 1) {
        if (bit & 1u) result *= b;
        if (bit > 1) b *= b;
    }
    return result;
}

bool is_integer(const Rat& r) { return denominator(r) == 1; }

Int to_integer_exact(const Rat& r) {
    if (!is_integer(r)) {
        throw std::logic_error("expected an integral value, got a proper fraction");
    }
    return numerator(r);
}

Int round_nearest(const Rat& r) {
    // floor(r + 1/2)
    const Rat shifted = r + Rat(1, 2);
    Int q = numerator(shifted) / denominator(shifted);
    if (shifted < 0 && Rat(q) != shifted) --q;  // floor for negatives
    return q;
}

}  // namespace bpa
