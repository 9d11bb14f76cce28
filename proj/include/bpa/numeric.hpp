#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <vector>

namespace bpa {

// Exact unbounded integer / rational. All counting arithmetic in this
// project runs on these; there is no floating-point path anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// n!, memoized per process. Concurrent readers are fine; growth is
// internally synchronized.
Int factorial(unsigned n);

// C(n,k); 0 when k < 0 or k > n.
Int binomial(unsigned n, long long k);

// (sum parts)! / prod(parts_i!)
Int multinomial(const std::vector<unsigned>& parts);

// Generalized falling factorial (x|a)_n = x(x-a)(x-2a)...(x-(n-1)a).
// Empty product (n = 0) is 1. Result may be negative.
Int gen_factorial(const Int& x, unsigned alpha, unsigned n);

// i-th forward difference of f at 0: sum_{s=0..i} (-1)^{i-s} C(i,s) f(s).
Rat forward_difference(const std::function<Rat(unsigned)>& f, unsigned i);

// base^e for e >= 0.
Int pow_int(const Int& base, unsigned e);

// Conversion helpers for rationals that are known (or required) to be whole.
bool is_integer(const Rat& r);
// Throws std::logic_error if r has a nontrivial denominator.
Int to_integer_exact(const Rat& r);
// Nearest integer (ties round up); exact rational comparison, no floats.
Int round_nearest(const Rat& r);

}  // namespace bpa
