// bpa: compute generalized barred-preferential-arrangement sequences, verify
// the identity suite, and cross-check prefixes against OEIS b-files.
//
// Exit codes: 0 success, 1 verification/comparison failure, 2 usage error.

#include "bpa/asymptotics.hpp"
#include "bpa/bfile.hpp"
#include "bpa/enumerate.hpp"
#include "bpa/h_numbers.hpp"
#include "bpa/identities.hpp"
#include "bpa/stirling_bell.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace bpa;

struct ComputeOpts {
    unsigned lambda = 1;
    unsigned beta = 1;
    unsigned gamma = 0;
    unsigned nmax = 10;
    std::string method = "egf";
    std::string format = "plain";
};

HTable run_method(const ComputeOpts& o) {
    const Params p{o.lambda, o.beta, o.gamma};
    if (o.method == "egf") return h_egf(p, o.nmax);
    if (o.method == "conv") return h_conv(p, o.nmax);
    if (o.method == "insert") return h_rec_insert(p, o.nmax);
    if (o.method == "shift") return h_shift(p, o.nmax);
    if (o.method == "dobinski-backed") return h_dobinski(p, o.nmax);
    if (o.method == "rec3") {
        if (o.lambda != 1) throw CLI::ValidationError("method rec3 requires --lambda 1");
        return h_rec_one_bar(o.beta, o.gamma, o.nmax);
    }
    if (o.method == "rec4") {
        if (o.lambda != 1) throw CLI::ValidationError("method rec4 requires --lambda 1");
        return h_rec_block_split(o.beta, o.gamma, o.nmax);
    }
    if (o.method == "marked") {
        if (o.lambda < 2 || o.gamma != o.beta) {
            throw CLI::ValidationError("method marked requires --lambda >= 2 and --gamma == --beta");
        }
        return h_rec_marked_bar(o.lambda, o.beta, o.nmax);
    }
    if (o.method == "empty-special") {
        if (o.lambda < 2 || o.gamma != 0) {
            throw CLI::ValidationError("method empty-special requires --lambda >= 2 and --gamma 0");
        }
        return h_rec_empty_special(o.lambda, o.beta, o.nmax);
    }
    throw CLI::ValidationError("unknown method '" + o.method + "'");
}

void emit_sequence(const std::vector<Int>& values, const std::string& format) {
    if (format == "plain") {
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << values[i];
        }
        std::cout << '\n';
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (size_t i = 0; i < values.size(); ++i) std::cout << i << ',' << values[i] << '\n';
    } else if (format == "bfile") {
        write_bfile(std::cout, values);
    } else {
        throw CLI::ValidationError("unknown format '" + format + "'");
    }
}

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

int cmd_verify(const GridSpec& grid, unsigned enum_nmax, const Int& budget) {
    bool all_pass = true;
    for (const auto& report : run_suite(grid)) {
        std::cout << to_jsonl(report) << '\n';
        all_pass = all_pass && report.pass;
    }
    // Enumeration oracle on a small grid: streamed count vs h_egf.
    EnumerationBudget eb{budget};
    for (unsigned lambda = 0; lambda <= std::min(grid.lambda_max, 2u); ++lambda) {
        for (unsigned beta = 1; beta <= grid.beta_max; ++beta) {
            for (unsigned gamma = 0; gamma <= grid.gamma_max; ++gamma) {
                if (lambda == 0 && gamma == 0) continue;
                const Params p{lambda, beta, gamma};
                for (unsigned n = 0; n <= enum_nmax; ++n) {
                    IdentityReport r =
                        make_report("enumeration-oracle", n, lambda, beta, gamma,
                                    Rat(count(n, p, eb)), Rat(h_egf(p, n).at(n)));
                    std::cout << to_jsonl(r) << '\n';
                    all_pass = all_pass && r.pass;
                }
            }
        }
    }
    return all_pass ? 0 : 1;
}

std::string fetch_bfile_text(const std::string& sequence_id) {
    const char* base = std::getenv("BPA_OEIS_BASE_URL");
    if (!base || !*base) {
        throw std::runtime_error("--fetch requires the BPA_OEIS_BASE_URL environment variable");
    }
    std::string url(base);
    if (url.rfind("http://", 0) != 0) {
        throw std::runtime_error("only http:// base URLs are supported");
    }
    std::string rest = url.substr(7);
    const auto slash = rest.find('/');
    const std::string host = slash == std::string::npos ? rest : rest.substr(0, slash);
    std::string prefix = slash == std::string::npos ? "" : rest.substr(slash);
    if (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    const std::string path =
        prefix + "/" + sequence_id + "/b" + sequence_id.substr(1) + ".txt";

    httplib::Client client(host);
    client.set_connection_timeout(10);
    auto res = client.Get(path);
    if (!res || res->status != 200) {
        throw std::runtime_error("fetch of " + path + " from " + host + " failed");
    }
    return res->body;
}

int cmd_bfile(const ComputeOpts& o, const std::string& check_path,
              const std::string& fetch_id) {
    const HTable table = h_egf(Params{o.lambda, o.beta, o.gamma}, o.nmax);
    if (check_path.empty() && fetch_id.empty()) {
        write_bfile(std::cout, table.values);
        return 0;
    }
    BFile bf;
    if (!fetch_id.empty()) {
        std::istringstream in(fetch_bfile_text(fetch_id));
        bf = parse_bfile(in, fetch_id);
    } else {
        std::ifstream in(check_path);
        if (!in) throw std::runtime_error("cannot open " + check_path);
        bf = parse_bfile(in, check_path);
    }
    const BFileCompare result = compare_bfile(bf, table.values);
    if (result.compared == 0) {
        std::cout << "no overlapping indices with " << bf.source << '\n';
        return 1;
    }
    if (!result.match) {
        std::cout << "mismatch at n=" << result.first_mismatch << " against " << bf.source
                  << '\n';
        return 1;
    }
    std::cout << "match: " << result.compared << " terms against " << bf.source << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized barred preferential arrangement toolkit"};
    app.require_subcommand(1);

    ComputeOpts opts;
    GridSpec grid;
    unsigned enum_nmax = 4;
    std::string check_path, fetch_id, epsilon_text = "1/10", format_flag;
    Int budget_default(100000000);
    long long budget_flag = -1;
    unsigned alpha = 0;
    std::string bell_method = "sum";

    auto add_params = [&](CLI::App* cmd, bool need_lambda) {
        if (need_lambda) cmd->add_option("--lambda", opts.lambda, "number of bars");
        cmd->add_option("--beta", opts.beta, "compartments per ordinary block");
        cmd->add_option("--gamma", opts.gamma, "compartments in the special section");
        cmd->add_option("--n,--nmax", opts.nmax, "largest index computed");
    };

    auto* compute = app.add_subcommand("compute", "print H_0..H_n by a chosen engine");
    add_params(compute, true);
    compute->add_option("--method", opts.method,
                        "egf|conv|rec3|rec4|insert|shift|marked|empty-special|dobinski-backed");
    compute->add_option("--format", opts.format, "plain|csv|bfile");

    auto* verify = app.add_subcommand("verify", "run the identity suite (JSON lines)");
    verify->add_option("--nmax", grid.n_max, "identity grid n bound");
    verify->add_option("--lambda-max", grid.lambda_max, "identity grid lambda bound");
    verify->add_option("--beta-max", grid.beta_max, "identity grid beta bound");
    verify->add_option("--gamma-max", grid.gamma_max, "identity grid gamma bound");
    verify->add_option("--enum-nmax", enum_nmax, "enumeration oracle n bound");
    verify->add_option("--budget", budget_flag, "enumeration budget cap");

    auto* bfile = app.add_subcommand("bfile", "emit or cross-check an OEIS b-file");
    add_params(bfile, true);
    bfile->add_option("--check", check_path, "b-file to compare against");
    bfile->add_option("--fetch", fetch_id,
                      "sequence id (Axxxxxx); uses BPA_OEIS_BASE_URL");

    auto* ratios = app.add_subcommand("ratios", "growth diagnostics as CSV");
    add_params(ratios, true);
    ratios->add_option("--epsilon", epsilon_text, "rational epsilon for the bound check");
    auto* do_bound = ratios->add_flag("--bound-check", "also verify H_n <= n! q^n");

    auto* bellcmd = app.add_subcommand("bell", "print generalized Bell numbers B_0..B_n");
    bellcmd->add_option("--alpha", alpha, "falling-factorial step");
    add_params(bellcmd, false);
    bellcmd->add_option("--method", bell_method, "sum|dobinski");

    try {
        app.parse(argc, argv);

        if (compute->parsed()) {
            emit_sequence(run_method(opts).values, opts.format);
            return 0;
        }
        if (verify->parsed()) {
            grid.nelsen_n_max = std::min(grid.nelsen_n_max, grid.n_max);
            return cmd_verify(grid, std::min(enum_nmax, grid.n_max),
                              budget_flag >= 0 ? Int(budget_flag) : budget_default);
        }
        if (bfile->parsed()) {
            return cmd_bfile(opts, check_path, fetch_id);
        }
        if (ratios->parsed()) {
            const HTable table = h_egf(Params{opts.lambda, opts.beta, opts.gamma}, opts.nmax);
            write_csv(std::cout, ratio_table(table, opts.nmax));
            if (*do_bound) {
                unsigned bad = 0;
                if (!bound_check(table, parse_rational(epsilon_text), 1, opts.nmax, &bad)) {
                    std::cerr << "bound violated at n=" << bad << '\n';
                    return 1;
                }
            }
            return 0;
        }
        if (bellcmd->parsed()) {
            std::vector<Int> values;
            for (unsigned n = 0; n <= opts.nmax; ++n) {
                values.push_back(bell_method == "dobinski"
                                     ? bell_dobinski(n, alpha, opts.beta, opts.gamma)
                                     : bell(n, alpha, opts.beta, opts.gamma));
            }
            emit_sequence(values, opts.format);
            return 0;
        }
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
