#pragma once

#include "bpa/numeric.hpp"

#include <vector>

namespace bpa {

// Truncated exponential generating function with exact coefficients.
// coeff(n) stores n!*[x^n], i.e. the counting value itself, so integer
// sequences read off the series without a factorial unscaling step.
class EgfSeries {
  public:
    // Zero series of the given truncation order.
    explicit EgfSeries(unsigned order) : coeffs_(order + 1, Rat(0)) {}

    // e^{cx}: coefficient n is c^n.
    static EgfSeries exponential(const Int& c, unsigned order);
    // The constant series c0.
    static EgfSeries constant(const Rat& c0, unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    // Throws std::out_of_range beyond the truncation order.
    const Rat& coeff(unsigned n) const;
    void set_coeff(unsigned n, Rat value);

    EgfSeries& operator+=(const EgfSeries& other);
    EgfSeries& operator-=(const EgfSeries& other);
    EgfSeries& operator*=(const Rat& scalar);

    friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
    friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }
    friend EgfSeries operator*(EgfSeries a, const Rat& s) { return a *= s; }

    // Binomial convolution: (a*b)_n = sum_r C(n,r) a_r b_{n-r}.
    friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b);

    bool operator==(const EgfSeries&) const = default;

  private:
    std::vector<Rat> coeffs_;
};

// Multiplicative inverse up to the truncation order; requires coeff(0) != 0.
// Computed by the triangular recurrence from a*r = 1 (division only by c_0).
EgfSeries reciprocal(const EgfSeries& a);

// a^lambda; lambda = 0 gives the series 1.
EgfSeries power(const EgfSeries& a, unsigned lambda);

}  // namespace bpa
