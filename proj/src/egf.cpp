#include "bpa/egf.hpp"

#include <stdexcept>

namespace bpa {

namespace {

void require_same_order(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("EgfSeries order mismatch");
    }
}

}  // namespace

EgfSeries EgfSeries::exponential(const Int& c, unsigned order) {
    EgfSeries s(order);
    Int p = 1;
    for (unsigned n = 0; n <= order; ++n) {
        s.coeffs_[n] = Rat(p);
        p *= c;
    }
    return s;
}

EgfSeries EgfSeries::constant(const Rat& c0, unsigned order) {
    EgfSeries s(order);
    s.coeffs_[0] = c0;
    return s;
}

const Rat& EgfSeries::coeff(unsigned n) const {
    if (n >= coeffs_.size()) {
        throw std::out_of_range("EgfSeries coefficient index beyond truncation order");
    }
    return coeffs_[n];
}

void EgfSeries::set_coeff(unsigned n, Rat value) {
    if (n >= coeffs_.size()) {
        throw std::out_of_range("EgfSeries coefficient index beyond truncation order");
    }
    coeffs_[n] = std::move(value);
}

EgfSeries& EgfSeries::operator+=(const EgfSeries& other) {
    require_same_order(*this, other);
    for (size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
    return *this;
}

EgfSeries& EgfSeries::operator-=(const EgfSeries& other) {
    require_same_order(*this, other);
    for (size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
    return *this;
}

EgfSeries& EgfSeries::operator*=(const Rat& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
    require_same_order(a, b);
    const unsigned N = a.order();
    EgfSeries out(N);
    for (unsigned n = 0; n <= N; ++n) {
        Rat acc = 0;
        for (unsigned r = 0; r <= n; ++r) {
            acc += Rat(binomial(n, r)) * a.coeffs_[r] * b.coeffs_[n - r];
        }
        out.coeffs_[n] = std::move(acc);
    }
    return out;
}

EgfSeries reciprocal(const EgfSeries& a) {
    if (a.coeff(0) == 0) {
        throw std::invalid_argument("EgfSeries reciprocal: zero constant term");
    }
    const unsigned N = a.order();
    EgfSeries r(N);
    r.set_coeff(0, Rat(1) / a.coeff(0));
    for (unsigned n = 1; n <= N; ++n) {
        // 0 = sum_{k=0..n} C(n,k) a_k r_{n-k}  =>  solve for r_n
        Rat acc = 0;
        for (unsigned k = 1; k <= n; ++k) {
            acc += Rat(binomial(n, k)) * a.coeff(k) * r.coeff(n - k);
        }
        r.set_coeff(n, -acc / a.coeff(0));
    }
    return r;
}

EgfSeries power(const EgfSeries& a, unsigned lambda) {
    EgfSeries result = EgfSeries::constant(Rat(1), a.order());
    for (unsigned i = 0; i < lambda; ++i) result = result * a;
    return result;
}

}  // namespace bpa
