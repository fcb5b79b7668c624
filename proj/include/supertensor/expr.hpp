#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "supertensor/catalog.hpp"
#include "supertensor/formulas.hpp"

namespace supertensor {

/// Parsed catalog expression: a named family or a direct sum of them.
/// Grammar: A(m|n), H(m,n), Hodd(m), F2(p,q;r|s;seed=k), infix '+'
/// (left-associative), whitespace insignificant.
struct CatalogExpr {
    enum class Kind { abelian, heis_even, heis_odd, f2, sum };
    Kind kind = Kind::abelian;
    long a = 0, b = 0;                // family parameters
    GradedDim kept;                   // f2: surviving central dimensions
    long seed = 1;                    // f2
    std::vector<CatalogExpr> summands;

    static CatalogExpr make_abelian(long m, long n) { return {Kind::abelian, m, n, {}, 1, {}}; }
    static CatalogExpr make_heis_even(long m, long n) {
        return {Kind::heis_even, m, n, {}, 1, {}};
    }
    static CatalogExpr make_heis_odd(long m) { return {Kind::heis_odd, m, 0, {}, 1, {}}; }
    static CatalogExpr make_f2(long p, long q, GradedDim kept, long seed) {
        return {Kind::f2, p, q, kept, seed, {}};
    }
    static CatalogExpr make_sum(std::vector<CatalogExpr> parts) {
        CatalogExpr e;
        e.kind = Kind::sum;
        e.summands = std::move(parts);
        return e;
    }

    std::string text() const {
        switch (kind) {
            case Kind::abelian:
                return "A(" + std::to_string(a) + "|" + std::to_string(b) + ")";
            case Kind::heis_even:
                return "H(" + std::to_string(a) + "," + std::to_string(b) + ")";
            case Kind::heis_odd:
                return "Hodd(" + std::to_string(a) + ")";
            case Kind::f2:
                return "F2(" + std::to_string(a) + "," + std::to_string(b) + ";" +
                       std::to_string(kept.even) + "|" + std::to_string(kept.odd) +
                       ";seed=" + std::to_string(seed) + ")";
            case Kind::sum: {
                std::string out;
                for (std::size_t i = 0; i < summands.size(); ++i) {
                    if (i > 0) out += "+";
                    out += summands[i].text();
                }
                return out;
            }
        }
        return {};
    }

    LieSuperAlgebra build() const {
        switch (kind) {
            case Kind::abelian:
                return abelian(a, b);
            case Kind::heis_even:
                return heisenberg_even(a, b);
            case Kind::heis_odd:
                return heisenberg_odd(a);
            case Kind::f2:
                return free_nilpotent2_quotient(a, b, kept, seed);
            case Kind::sum: {
                LieSuperAlgebra acc = summands.front().build();
                for (std::size_t i = 1; i < summands.size(); ++i)
                    acc = direct_sum(acc, summands[i].build());
                return acc;
            }
        }
        throw InvalidParams("unreachable");
    }

    GradedDim dim() const {
        switch (kind) {
            case Kind::abelian:
                return {a, b};
            case Kind::heis_even:
                return {2 * a + 1, b};
            case Kind::heis_odd:
                return {a, a + 1};
            case Kind::f2:
                return GradedDim{a, b} + kept;
            case Kind::sum: {
                GradedDim acc;
                for (const auto& s : summands) acc = acc + s.dim();
                return acc;
            }
        }
        return {};
    }

    GradedDim derived_dim() const {
        switch (kind) {
            case Kind::abelian:
                return {0, 0};
            case Kind::heis_even:
                return {1, 0};
            case Kind::heis_odd:
                return {0, 1};
            case Kind::f2:
                return kept;
            case Kind::sum: {
                GradedDim acc;
                for (const auto& s : summands) acc = acc + s.derived_dim();
                return acc;
            }
        }
        return {};
    }

    GradedDim ab_dim() const { return dim() - derived_dim(); }

    /// Schur multiplier from the closed-form tables; direct sums compose the
    /// summands' multipliers with the abelianization cross terms.
    std::optional<GradedDim> closed_multiplier() const {
        switch (kind) {
            case Kind::abelian:
                return formulas::multiplier_abelian(a, b);
            case Kind::heis_even:
                return formulas::multiplier_heisenberg_even(a, b);
            case Kind::heis_odd:
                return formulas::multiplier_heisenberg_odd(a);
            case Kind::f2:
                return std::nullopt;
            case Kind::sum: {
                auto acc = summands.front().closed_multiplier();
                if (!acc) return std::nullopt;
                GradedDim acc_ab = summands.front().ab_dim();
                for (std::size_t i = 1; i < summands.size(); ++i) {
                    auto mi = summands[i].closed_multiplier();
                    if (!mi) return std::nullopt;
                    acc = formulas::multiplier_direct_sum(*acc, *mi, acc_ab, summands[i].ab_dim());
                    acc_ab = acc_ab + summands[i].ab_dim();
                }
                return acc;
            }
        }
        return std::nullopt;
    }

    /// Exterior square: tabulated directly for the leaf families, and as
    /// multiplier + derived for class-two sums.
    std::optional<GradedDim> closed_ext2() const {
        switch (kind) {
            case Kind::abelian:
                return formulas::multiplier_abelian(a, b);
            case Kind::heis_even:
                return formulas::ext2_heisenberg_even(a, b);
            case Kind::heis_odd:
                return formulas::ext2_heisenberg_odd(a);
            case Kind::f2:
                return std::nullopt;
            case Kind::sum: {
                auto m = closed_multiplier();
                if (!m) return std::nullopt;
                return *m + derived_dim();
            }
        }
        return std::nullopt;
    }

    std::optional<GradedDim> closed_tensor2() const {
        switch (kind) {
            case Kind::abelian:
                return formulas::tensor2_abelian(a, b);
            case Kind::heis_even:
                return formulas::tensor2_heisenberg_even(a, b);
            case Kind::heis_odd:
                return formulas::tensor2_heisenberg_odd(a);
            case Kind::f2:
                return std::nullopt;
            case Kind::sum: {
                auto e = closed_ext2();
                if (!e) return std::nullopt;
                GradedDim ab = ab_dim();
                return *e + formulas::gamma_closed(ab.even, ab.odd);
            }
        }
        return std::nullopt;
    }

    std::optional<GradedDim> closed_tensor3() const {
        switch (kind) {
            case Kind::abelian:
                return tensor_dims(formulas::tensor2_abelian(a, b), {a, b});
            case Kind::heis_even:
                return formulas::triple_tensor_heisenberg_even(a, b);
            case Kind::heis_odd:
                return formulas::triple_tensor_heisenberg_odd(a);
            case Kind::f2:
                return std::nullopt;
            case Kind::sum: {
                auto t = closed_tensor2();
                if (!t) return std::nullopt;
                return tensor_dims(*t, ab_dim());
            }
        }
        return std::nullopt;
    }

    /// Triple exterior product, tabulated for the rank-1 Heisenberg leaves only.
    std::optional<GradedDim> closed_ext3() const {
        switch (kind) {
            case Kind::heis_even:
                return formulas::triple_ext_heisenberg_even(a, b);
            case Kind::heis_odd:
                return formulas::triple_ext_heisenberg_odd(a);
            default:
                return std::nullopt;
        }
    }
};

namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& text, long default_seed)
        : text_(text), default_seed_(default_seed) {}

    CatalogExpr parse() {
        auto expr = parse_term();
        std::vector<CatalogExpr> parts{std::move(expr)};
        skip_ws();
        while (peek() == '+') {
            ++pos_;
            parts.push_back(parse_term());
            skip_ws();
        }
        if (pos_ != text_.size()) fail("trailing input");
        if (parts.size() == 1) return parts.front();
        return CatalogExpr::make_sum(std::move(parts));
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("bad algebra expression '" + text_ + "' at offset " +
                         std::to_string(pos_) + ": " + why);
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    long number() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return std::stol(text_.substr(start, pos_ - start));
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a family name");
        return text_.substr(start, pos_ - start);
    }

    CatalogExpr parse_term() {
        std::string name = word();
        if (name == "A") {
            expect('(');
            long m = number();
            expect('|');
            long n = number();
            expect(')');
            return CatalogExpr::make_abelian(m, n);
        }
        if (name == "H") {
            expect('(');
            long m = number();
            expect(',');
            long n = number();
            expect(')');
            return CatalogExpr::make_heis_even(m, n);
        }
        if (name == "Hodd") {
            expect('(');
            long m = number();
            expect(')');
            return CatalogExpr::make_heis_odd(m);
        }
        if (name == "F2") {
            expect('(');
            long p = number();
            expect(',');
            long q = number();
            expect(';');
            long r = number();
            expect('|');
            long s = number();
            long seed = default_seed_;
            if (peek() == ';') {
                ++pos_;
                std::string kw = word();
                if (kw != "seed") fail("expected seed=");
                expect('=');
                seed = number();
            }
            expect(')');
            return CatalogExpr::make_f2(p, q, {r, s}, seed);
        }
        fail("unknown family '" + name + "'");
    }

    const std::string& text_;
    long default_seed_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline CatalogExpr parse_algebra_expr(const std::string& text, long default_seed = 1) {
    return detail::ExprParser(text, default_seed).parse();
}

}  // namespace supertensor
