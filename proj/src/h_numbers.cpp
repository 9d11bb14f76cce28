#include "bpa/h_numbers.hpp"

#include "bpa/egf.hpp"
#include "bpa/stirling_bell.hpp"

#include <stdexcept>
#include <utility>

namespace bpa {

namespace {

std::vector<Int> power_sequence(unsigned base, unsigned N) {
    std::vector<Int> seq(N + 1);
    seq[0] = 1;
    for (unsigned n = 1; n <= N; ++n) seq[n] = seq[n - 1] * base;
    return seq;
}

std::vector<Int> binomial_convolve(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(a.size());
    for (unsigned n = 0; n < a.size(); ++n) {
        Int acc = 0;
        for (unsigned r = 0; r <= n; ++r) {
            acc += binomial(n, r) * a[r] * b[n - r];
        }
        c[n] = std::move(acc);
    }
    return c;
}

Int exact_div(const Int& num, const Int& den) {
    if (num % den != 0) {
        throw std::logic_error("recurrence produced a non-exact division");
    }
    return num / den;
}

// gamma = 0 prefix tables built purely within the recurrence family:
// lambda = 1 from the one-bar recurrence, higher lambda by the
// empty-special-section step (which consumes one extra index per level).
std::vector<Int> gamma0_values(unsigned lambda, unsigned beta, unsigned N) {
    if (lambda == 1) return h_rec_one_bar(beta, 0, N).values;
    std::vector<Int> prev = gamma0_values(lambda - 1, beta, N + 1);
    std::vector<Int> out(N + 1);
    const Int den = Int(2) * beta * (lambda - 1);
    for (unsigned n = 0; n <= N; ++n) {
        // Only the sum is guaranteed divisible, not each term on its own.
        out[n] = exact_div(prev[n + 1] + prev[n] * beta * (lambda - 1), den);
    }
    return out;
}

}  // namespace

void validate(const Params& params) {
    if (params.lambda == 0 && params.gamma == 0) {
        throw std::invalid_argument("Params: (lambda, gamma) must not be (0, 0)");
    }
    if (params.lambda >= 1 && params.beta == 0) {
        throw std::invalid_argument("Params: beta must be >= 1 when lambda >= 1");
    }
}

HTable h_egf(const Params& params, unsigned N) {
    validate(params);
    EgfSeries series = EgfSeries::exponential(Int(params.gamma), N);
    if (params.lambda >= 1) {
        EgfSeries denom = EgfSeries::constant(Rat(2), N);
        denom -= EgfSeries::exponential(Int(params.beta), N);
        series = series * power(reciprocal(denom), params.lambda);
    }
    HTable table{params, {}, "egf"};
    table.values.reserve(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        Int v = to_integer_exact(series.coeff(n));
        if (v < 0) throw std::logic_error("h_egf: negative coefficient");
        table.values.push_back(std::move(v));
    }
    return table;
}

HTable h_conv(const Params& params, unsigned N) {
    validate(params);
    std::vector<Int> values = power_sequence(params.gamma, N);
    if (params.lambda >= 1) {
        std::vector<Int> b(N + 1);
        for (unsigned n = 0; n <= N; ++n) b[n] = bell(n, 0, params.beta, 0);
        for (unsigned i = 0; i < params.lambda; ++i) {
            values = binomial_convolve(values, b);
        }
    }
    return {params, std::move(values), "conv"};
}

HTable h_rec_one_bar(unsigned beta, unsigned gamma, unsigned N) {
    if (beta == 0 && gamma == 0) {
        throw std::invalid_argument("h_rec_one_bar: (beta, gamma) must not be (0, 0)");
    }
    std::vector<Int> h(N + 1);
    const std::vector<Int> gpow = power_sequence(gamma, N);
    h[0] = 1;
    for (unsigned n = 1; n <= N; ++n) {
        Int acc = gpow[n];
        Int bpow = beta;  // beta^{n-i}
        for (unsigned i = n; i-- > 0;) {
            acc += binomial(n, i) * h[i] * bpow;
            bpow *= beta;
        }
        h[n] = std::move(acc);
    }
    return {Params{1, beta, gamma}, std::move(h), "rec-one-bar"};
}

HTable h_rec_block_split(unsigned beta, unsigned gamma, unsigned N) {
    const std::vector<Int> aux = h_rec_one_bar(beta, beta, N).values;  // H(1,b,b)
    std::vector<Int> h(N + 1);
    h[0] = 1;
    for (unsigned n = 0; n < N; ++n) {
        Int acc = Int(gamma) * h[n];
        for (unsigned i = 0; i <= n; ++i) {
            acc += Int(beta) * binomial(n, i) * h[i] * aux[n - i];
        }
        h[n + 1] = std::move(acc);
    }
    return {Params{1, beta, gamma}, std::move(h), "rec-block-split"};
}

std::vector<Int> b_from_alternating(unsigned beta, unsigned gamma, unsigned N) {
    const std::vector<Int> h = h_rec_one_bar(beta, gamma, N).values;
    const std::vector<Int> gpow = power_sequence(gamma, N);
    std::vector<Int> b(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        Int acc = 0;
        for (unsigned i = 0; i <= n; ++i) {
            Int term = binomial(n, i) * h[i] * gpow[n - i];
            if ((n - i) % 2 == 0) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        b[n] = std::move(acc);
    }
    return b;
}

HTable h_rec_marked_bar(unsigned lambda, unsigned beta, unsigned N) {
    if (lambda < 2 || beta == 0) {
        throw std::invalid_argument("h_rec_marked_bar: requires lambda >= 2, beta >= 1");
    }
    const std::vector<Int> prev_bb =
        lambda == 2 ? h_rec_one_bar(beta, beta, N).values
                    : h_rec_marked_bar(lambda - 1, beta, N).values;
    const std::vector<Int> prev_b0 = gamma0_values(lambda - 1, beta, N + 1);

    std::vector<Int> h(N + 1);
    const Int den = Int(2) * beta * (lambda - 1);
    for (unsigned n = 0; n <= N; ++n) {
        Int sum = 0;
        Int bpow = 1;  // beta^{n-i}, built from i = n downwards
        for (unsigned i = n + 1; i-- > 0;) {
            sum += binomial(n, i) * prev_b0[i + 1] * bpow;
            bpow *= beta;
        }
        h[n] = exact_div(prev_bb[n] * beta * (lambda - 1) + sum, den);
    }
    return {Params{lambda, beta, beta}, std::move(h), "rec-marked-bar"};
}

HTable h_rec_insert(const Params& params, unsigned N) {
    validate(params);
    std::vector<Int> h(N + 1);
    h[0] = 1;
    if (params.lambda == 0) {
        h = power_sequence(params.gamma, N);
    } else {
        const std::vector<Int> aux = h_rec_one_bar(params.beta, params.beta, N).values;
        for (unsigned n = 0; n < N; ++n) {
            Int acc = Int(params.gamma) * h[n];
            for (unsigned i = 0; i <= n; ++i) {
                acc += Int(params.lambda) * params.beta * binomial(n, i) * aux[i] * h[n - i];
            }
            h[n + 1] = std::move(acc);
        }
    }
    return {params, std::move(h), "rec-insert"};
}

Int h_rec_merge_rhs(const Params& params, unsigned n) {
    validate(params);
    Int rhs = Int(params.gamma) * h_egf(params, n).at(n);
    if (params.lambda >= 1) {
        const Params up{params.lambda + 1, params.beta, params.gamma + params.beta};
        rhs += Int(params.lambda) * params.beta * h_egf(up, n).at(n);
    }
    return rhs;
}

HTable h_shift(const Params& params, unsigned N) {
    validate(params);
    if (params.lambda == 0) {
        return {params, power_sequence(params.gamma, N), "shift"};
    }
    const unsigned gamma0 = params.gamma % params.beta;
    const unsigned steps = params.gamma / params.beta;

    // levels[j] holds H(j, beta, current gamma); bases come from the
    // insertion recurrence, independent of the EGF route.
    std::vector<std::vector<Int>> levels(params.lambda + 1);
    levels[0] = power_sequence(gamma0, N);
    for (unsigned j = 1; j <= params.lambda; ++j) {
        levels[j] = h_rec_insert(Params{j, params.beta, gamma0}, N).values;
    }
    for (unsigned step = 0; step < steps; ++step) {
        std::vector<std::vector<Int>> next(params.lambda + 1);
        next[0] = power_sequence(gamma0 + (step + 1) * params.beta, N);
        for (unsigned j = 1; j <= params.lambda; ++j) {
            next[j].resize(N + 1);
            for (unsigned n = 0; n <= N; ++n) {
                next[j][n] = 2 * levels[j][n] - levels[j - 1][n];
            }
        }
        levels = std::move(next);
    }
    return {params, std::move(levels[params.lambda]), "shift"};
}

HTable h_rec_empty_special(unsigned lambda, unsigned beta, unsigned N) {
    if (lambda < 2 || beta == 0) {
        throw std::invalid_argument("h_rec_empty_special: requires lambda >= 2, beta >= 1");
    }
    return {Params{lambda, beta, 0}, gamma0_values(lambda, beta, N), "rec-empty-special"};
}

HTable h_dobinski(const Params& params, unsigned N) {
    validate(params);
    std::vector<Int> values = power_sequence(params.gamma, N);
    if (params.lambda >= 1) {
        std::vector<Int> b(N + 1);
        for (unsigned n = 0; n <= N; ++n) b[n] = bell_dobinski(n, 0, params.beta, 0);
        for (unsigned i = 0; i < params.lambda; ++i) {
            values = binomial_convolve(values, b);
        }
    }
    return {params, std::move(values), "dobinski"};
}

Int h_value_degenerate_ok(unsigned lambda, unsigned beta, unsigned gamma, unsigned n) {
    if (lambda == 0) return pow_int(Int(gamma), n);
    return h_egf(Params{lambda, beta, gamma}, n).at(n);
}

}  // namespace bpa
