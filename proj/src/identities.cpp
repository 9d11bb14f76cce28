#include "bpa/identities.hpp"

#include "bpa/h_numbers.hpp"
#include "bpa/stirling_bell.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace bpa {

namespace {

// Certified evaluation of sum_{s>=0} H_n(lambda-1, beta, gamma+beta*s) / 2^{s+1}.
// H_n(l, beta, g) is a polynomial in g with non-negative coefficients, so once
// g >= 1 the term ratio is bounded by ((g+beta)/g)^n / 2; the tail is summed
// against that geometric and the result rounded exactly once the bound drops
// below 1/2.
Int h_series_certified(unsigned lambda, unsigned beta, unsigned gamma, unsigned n) {
    Rat partial = 0;
    Rat pow2 = 2;  // 2^{s+1}
    for (unsigned s = 0;; ++s) {
        const unsigned g = gamma + beta * s;
        const Rat term = Rat(h_value_degenerate_ok(lambda - 1, beta, g, n)) / pow2;
        partial += term;
        pow2 *= 2;
        if (g >= 1) {
            Rat r;
            if (n == 0) {
                r = Rat(1, 2);
            } else {
                Rat base = Rat(g + beta) / g;
                r = 1;
                for (unsigned j = 0; j < n; ++j) r *= base;
                r /= 2;
            }
            if (r <= Rat(3, 4) && term * r / (1 - r) < Rat(1, 2)) {
                return round_nearest(partial);
            }
        }
    }
}

// sum_{k=0..n} sum_{s=0..k} C(k,s) (-1)^{k-s} f(s)
Int alternating_double_sum(unsigned n, const std::function<Int(unsigned)>& f) {
    std::vector<Int> fs(n + 1);
    for (unsigned s = 0; s <= n; ++s) fs[s] = f(s);
    Int total = 0;
    for (unsigned k = 0; k <= n; ++k) {
        for (unsigned s = 0; s <= k; ++s) {
            Int term = binomial(k, s) * fs[s];
            if ((k - s) % 2 == 0) {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    return total;
}

}  // namespace

IdentityReport make_report(std::string identity, unsigned n, unsigned lambda,
                           unsigned beta, unsigned gamma, Rat lhs, Rat rhs) {
    IdentityReport r{std::move(identity), n, lambda, beta, gamma,
                     std::move(lhs), std::move(rhs), false};
    r.pass = (r.lhs == r.rhs);
    return r;
}

std::string to_jsonl(const IdentityReport& r) {
    auto rat_str = [](const Rat& v) {
        std::string s = numerator(v).str();
        if (denominator(v) != 1) s += "/" + denominator(v).str();
        return s;
    };
    std::string out = "{\"identity\":\"" + r.identity + "\"";
    out += ",\"n\":" + std::to_string(r.n);
    out += ",\"lambda\":" + std::to_string(r.lambda);
    out += ",\"beta\":" + std::to_string(r.beta);
    out += ",\"gamma\":" + std::to_string(r.gamma);
    out += ",\"lhs\":\"" + rat_str(r.lhs) + "\"";
    out += ",\"rhs\":\"" + rat_str(r.rhs) + "\"";
    out += std::string(",\"pass\":") + (r.pass ? "true" : "false") + "}";
    return out;
}

IdentityReport check_nelsen(unsigned gamma, unsigned n) {
    const Int lhs = alternating_double_sum(
        n, [&](unsigned s) { return pow_int(Int(gamma) + s, n); });
    const Int rhs = bell_dobinski(n, 0, 1, gamma);  // (1/2) sum (gamma+s)^n / 2^s
    const Int h = h_egf(Params{1, 1, gamma}, n).at(n);
    IdentityReport r = make_report("nelsen", n, 1, 1, gamma, Rat(lhs), Rat(rhs));
    r.pass = r.pass && lhs == h;
    return r;
}

IdentityReport check_nelsen_generalized(unsigned lambda, unsigned beta,
                                        unsigned gamma, unsigned n) {
    const Int lhs = alternating_double_sum(n, [&](unsigned s) {
        return h_value_degenerate_ok(lambda - 1, beta, gamma + beta * s, n);
    });
    const Int rhs = h_series_certified(lambda, beta, gamma, n);
    const Int h = h_egf(Params{lambda, beta, gamma}, n).at(n);
    IdentityReport r =
        make_report("nelsen-generalized", n, lambda, beta, gamma, Rat(lhs), Rat(rhs));
    r.pass = r.pass && lhs == h;
    return r;
}

std::vector<IdentityReport> run_suite(const GridSpec& grid) {
    std::vector<IdentityReport> out;
    const unsigned N = grid.n_max;
    const unsigned ncap = std::min(grid.nelsen_n_max, grid.n_max);

    auto table_check = [&](const char* name, const HTable& got, const HTable& want) {
        for (unsigned n = 0; n <= std::min(got.n_max(), want.n_max()); ++n) {
            out.push_back(make_report(name, n, want.params.lambda, want.params.beta,
                                      want.params.gamma, Rat(got.at(n)), Rat(want.at(n))));
        }
    };

    for (unsigned gamma = 0; gamma <= grid.gamma_max; ++gamma) {
        for (unsigned n = 0; n <= ncap; ++n) out.push_back(check_nelsen(gamma, n));
    }

    for (unsigned lambda = 1; lambda <= grid.lambda_max; ++lambda) {
        for (unsigned beta = 1; beta <= grid.beta_max; ++beta) {
            for (unsigned gamma = 0; gamma <= grid.gamma_max; ++gamma) {
                for (unsigned n = 0; n <= ncap; ++n) {
                    out.push_back(check_nelsen_generalized(lambda, beta, gamma, n));
                }
            }
        }
    }

    // Band inclusion-exclusion (the finite double sum collapses to H itself).
    for (unsigned lambda = 1; lambda <= grid.lambda_max; ++lambda) {
        for (unsigned beta = 1; beta <= grid.beta_max; ++beta) {
            for (unsigned gamma = 0; gamma <= grid.gamma_max; ++gamma) {
                const HTable h = h_egf(Params{lambda, beta, gamma}, ncap);
                for (unsigned n = 0; n <= ncap; ++n) {
                    const Int lhs = alternating_double_sum(n, [&](unsigned s) {
                        return h_value_degenerate_ok(lambda - 1, beta, gamma + beta * s, n);
                    });
                    out.push_back(make_report("band-inclusion-exclusion", n, lambda, beta,
                                              gamma, Rat(lhs), Rat(h.at(n))));
                }
            }
        }
    }

    // Gould-Mays: chains in the power set.
    for (unsigned n = 0; n <= ncap; ++n) {
        const Int lhs = alternating_double_sum(
            n, [&](unsigned s) { return pow_int(Int(2) + s, n); });
        out.push_back(make_report("gould-mays-chains", n, 1, 1, 2, Rat(lhs),
                                  Rat(h_egf(Params{1, 1, 2}, n).at(n))));
    }

    for (unsigned beta = 1; beta <= grid.beta_max; ++beta) {
        for (unsigned gamma = 0; gamma <= grid.gamma_max; ++gamma) {
            const HTable ref = h_egf(Params{1, beta, gamma}, N);

            table_check("one-bar-recurrence", h_rec_one_bar(beta, gamma, N), ref);
            table_check("block-split-recurrence", h_rec_block_split(beta, gamma, N), ref);

            // Inclusion-exclusion back to B_n(0,beta,0); gamma-independent.
            const std::vector<Int> b = b_from_alternating(beta, gamma, N);
            for (unsigned n = 0; n <= N; ++n) {
                out.push_back(make_report("bell-alternating", n, 1, beta, gamma, Rat(b[n]),
                                          Rat(bell(n, 0, beta, 0))));
            }

            // Eq (9) route: H_n(1,b,g) as convolution of B(0,b,0) with gamma^n.
            for (unsigned n = 0; n <= N; ++n) {
                Int conv = 0;
                Int gpow = 1;
                for (unsigned r = n + 1; r-- > 0;) {
                    conv += binomial(n, r) * bell(r, 0, beta, 0) * gpow;
                    gpow *= gamma;
                }
                out.push_back(
                    make_report("one-bar-bell-convolution", n, 1, beta, gamma, Rat(conv), Rat(ref.at(n))));
            }
        }
    }

    for (unsigned lambda = 0; lambda <= grid.lambda_max; ++lambda) {
        for (unsigned beta = 1; beta <= grid.beta_max; ++beta) {
            for (unsigned gamma = 0; gamma <= grid.gamma_max; ++gamma) {
                if (lambda == 0 && gamma == 0) continue;
                const Params p{lambda, beta, gamma};
                const HTable ref = h_egf(p, N);

                table_check("cross-method-conv", h_conv(p, N), ref);
                table_check("cross-method-dobinski", h_dobinski(p, N), ref);
                table_check("element-insert-recurrence", h_rec_insert(p, N), ref);
                table_check("gamma-shift-ladder", h_shift(p, N), ref);

                // Bar merge: H_{n+1} = gamma H_n + lambda beta H_n(l+1,b,g+b).
                for (unsigned n = 0; n < std::min(N, ncap); ++n) {
                    out.push_back(make_report("bar-merge", n, lambda, beta, gamma,
                                              Rat(ref.at(n + 1)),
                                              Rat(h_rec_merge_rhs(p, n))));
                }

                // Gamma shift, one step: H_n(l,b,g+b) = 2 H_n(l,b,g) - H_n(l-1,b,g).
                if (lambda >= 1) {
                    const HTable up = h_egf(Params{lambda, beta, gamma + beta}, N);
                    const char* name = gamma >= 1 ? "gamma-shift" : "gamma-shift-zero-base";
                    for (unsigned n = 0; n <= N; ++n) {
                        const Int rhs = 2 * ref.at(n) -
                                        h_value_degenerate_ok(lambda - 1, beta, gamma, n);
                        out.push_back(
                            make_report(name, n, lambda, beta, gamma, Rat(up.at(n)), Rat(rhs)));
                    }
                }

                // Scaling: H_n(l,b,c*b) = b^n H_n(l,1,c) with c = gamma here.
                if (lambda >= 1) {
                    const HTable scaled = h_egf(Params{lambda, beta, gamma * beta}, N);
                    const HTable unit = h_egf(Params{lambda, 1, gamma}, N);
                    for (unsigned n = 0; n <= N; ++n) {
                        out.push_back(make_report("scaling-law", n, lambda, beta, gamma,
                                                  Rat(scaled.at(n)),
                                                  Rat(pow_int(Int(beta), n) * unit.at(n))));
                    }
                }
            }
        }
    }

    for (unsigned lambda = 2; lambda <= grid.lambda_max; ++lambda) {
        for (unsigned beta = 1; beta <= grid.beta_max; ++beta) {
            table_check("marked-bar-recurrence", h_rec_marked_bar(lambda, beta, N),
                        h_egf(Params{lambda, beta, beta}, N));
            table_check("empty-special-recurrence", h_rec_empty_special(lambda, beta, N),
                        h_egf(Params{lambda, beta, 0}, N));
        }
    }

    return out;
}

}  // namespace bpa
