#include "bpa/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace bpa {

namespace {

class Enumerator {
  public:
    Enumerator(unsigned n, const Params& params,
               const std::function<void(const BpaStructure&)>* visit)
        : n_(n), params_(params), visit_(visit) {
        work_.n = n;
        work_.params = params;
        work_.sections.assign(params.lambda, {});
        routed_.assign(params.lambda, {});
        work_.special.reserve(n);
    }

    unsigned long long run() {
        tag_element(1);
        return count_;
    }

  private:
    // Phase 1: route every element to the special section (with a gamma
    // color) or to one ordinary section (with a beta color). This mirrors
    // the multinomial factorization of the counting formula, so no invalid
    // states are ever generated.
    void tag_element(unsigned e) {
        if (e > n_) {
            partition_section(0);
            return;
        }
        for (unsigned c = 1; c <= params_.gamma; ++c) {
            work_.special.emplace_back(e, c);
            tag_element(e + 1);
            work_.special.pop_back();
        }
        for (unsigned s = 0; s < params_.lambda; ++s) {
            for (unsigned c = 1; c <= params_.beta; ++c) {
                routed_[s].emplace_back(e, c);
                tag_element(e + 1);
                routed_[s].pop_back();
            }
        }
    }

    // Phase 2: an ordered set partition of each section's routed elements.
    void partition_section(unsigned s) {
        if (s == params_.lambda) {
            ++count_;
            if (visit_) (*visit_)(work_);
            return;
        }
        const auto m = static_cast<unsigned>(routed_[s].size());
        partition_blocks(s, m == 0 ? 0u : (1u << m) - 1u);
    }

    void partition_blocks(unsigned s, unsigned remaining) {
        if (remaining == 0) {
            partition_section(s + 1);
            return;
        }
        for (unsigned sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
            if (visit_) {
                ColoredElems block;
                for (unsigned b = 0; b < 32; ++b) {
                    if (sub & (1u << b)) block.push_back(routed_[s][b]);
                }
                work_.sections[s].push_back(std::move(block));
            }
            partition_blocks(s, remaining & ~sub);
            if (visit_) work_.sections[s].pop_back();
        }
    }

    unsigned n_;
    Params params_;
    const std::function<void(const BpaStructure&)>* visit_;
    unsigned long long count_ = 0;
    BpaStructure work_;
    std::vector<ColoredElems> routed_;
};

void check_budget(unsigned n, const Params& params, const EnumerationBudget& budget) {
    validate(params);
    const Int predicted = h_egf(params, n).at(n);
    if (predicted > budget.max_count ||
        predicted > Int(std::numeric_limits<unsigned long long>::max() / 2)) {
        throw std::invalid_argument("enumeration budget exceeded (predicted " +
                                    predicted.str() + " structures)");
    }
}

}  // namespace

void enumerate(unsigned n, const Params& params, const EnumerationBudget& budget,
               const std::function<void(const BpaStructure&)>& visit) {
    check_budget(n, params, budget);
    Enumerator(n, params, &visit).run();
}

Int count(unsigned n, const Params& params, const EnumerationBudget& budget) {
    check_budget(n, params, budget);
    return Int(Enumerator(n, params, nullptr).run());
}

Int count_restricted_thm28(unsigned n, unsigned lambda, unsigned beta, unsigned gamma,
                           const EnumerationBudget& budget) {
    if (lambda < 1) {
        throw std::invalid_argument("count_restricted_thm28: lambda must be >= 1");
    }
    Int total = 0;
    for (unsigned k = 0; k <= n; ++k) {
        const unsigned cols = gamma + k * beta;
        if (lambda == 1 && cols == 0) {
            // k = 0, gamma = 0: the degenerate all-in-special count 0^n.
            if (n == 0) total += 1;
            continue;
        }
        const Params pk{lambda - 1, beta, cols};
        unsigned long long hits = 0;
        enumerate(n, pk, budget, [&](const BpaStructure& s) {
            unsigned covered = 0;  // bitmask over the k beta-bands
            for (const auto& [elem, color] : s.special) {
                if (color > gamma) covered |= 1u << ((color - gamma - 1) / beta);
            }
            if (covered == (k == 0 ? 0u : (1u << k) - 1u)) ++hits;
        });
        total += hits;
    }
    return total;
}

namespace {

void append_assigns(std::string& out, const ColoredElems& entries) {
    bool first = true;
    for (const auto& [elem, color] : entries) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(elem);
        out += ':';
        out += std::to_string(color);
    }
}

class Parser {
  public:
    Parser(const std::string& text, const Params& params, unsigned n)
        : text_(text), params_(params), n_(n) {}

    BpaStructure run() {
        BpaStructure s;
        s.n = n_;
        s.params = params_;
        seen_.assign(n_ + 1, false);

        expect('[');
        s.special = assigns(']', params_.gamma, "special");
        expect(']');
        for (unsigned sec = 0; sec < params_.lambda; ++sec) {
            if (!accept('|')) fail("wrong number of bars");
            s.sections.emplace_back();
            while (accept('{')) {
                ColoredElems block = assigns('}', params_.beta, "block");
                expect('}');
                if (block.empty()) fail("empty block");
                s.sections.back().push_back(std::move(block));
            }
        }
        skip_ws();
        if (pos_ != text_.size()) {
            fail(peek() == '|' ? "wrong number of bars" : "trailing input");
        }
        for (unsigned e = 1; e <= n_; ++e) {
            if (!seen_[e]) fail("element " + std::to_string(e) + " missing");
        }
        return s;
    }

  private:
    ColoredElems assigns(char closer, unsigned color_max, const char* where) {
        ColoredElems entries;
        skip_ws();
        if (peek() == closer) return entries;
        while (true) {
            const unsigned elem = number();
            if (elem < 1 || elem > n_) fail("element out of range");
            if (seen_[elem]) fail("element " + std::to_string(elem) + " repeated");
            seen_[elem] = true;
            expect(':');
            const unsigned color = number();
            if (color < 1 || color > color_max) {
                fail(std::string("color out of range in ") + where);
            }
            entries.emplace_back(elem, color);
            if (!accept(',')) break;
        }
        std::sort(entries.begin(), entries.end());
        return entries;
    }

    unsigned number() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected a number");
        }
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_++] - '0');
            if (v > 1000000) fail("number too large");
        }
        return static_cast<unsigned>(v);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    const std::string& text_;
    Params params_;
    unsigned n_;
    size_t pos_ = 0;
    std::vector<bool> seen_;
};

}  // namespace

std::string format(const BpaStructure& s) {
    std::string out;
    out.reserve(8 + 8 * s.n);
    out += '[';
    append_assigns(out, s.special);
    out += ']';
    for (const auto& section : s.sections) {
        out += " |";
        for (const auto& block : section) {
            out += " {";
            append_assigns(out, block);
            out += '}';
        }
    }
    return out;
}

BpaStructure parse(const std::string& text, const Params& params, unsigned n) {
    validate(params);
    return Parser(text, params, n).run();
}

}  // namespace bpa
