// Acceptance suite: runs every acceptance criterion at full strength and
// prints one PASS/FAIL line per criterion. Exact integer equality
// throughout; no tolerances anywhere.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "supertensor/algebra_io.hpp"
#include "supertensor/expr.hpp"
#include "supertensor/tensor.hpp"
#include "supertensor/verify.hpp"

using namespace supertensor;

namespace {

struct Criterion {
    int failures = 0;
    int checks = 0;
    std::ostringstream log;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            log << "    FAILED: " << what << "\n";
        }
    }
    void expect_eq(const GradedDim& got, const GradedDim& want, const std::string& what) {
        expect(got == want, what + ": got " + to_string(got) + ", want " + to_string(want));
    }
};

int run(int number, const std::string& title, const std::function<void(Criterion&)>& body) {
    Criterion c;
    body(c);
    std::cout << "criterion " << number << " [" << title << "]: "
              << (c.failures == 0 ? "PASS" : "FAIL") << " (" << (c.checks - c.failures) << "/"
              << c.checks << " checks)\n";
    if (c.failures > 0) std::cout << c.log.str();
    return c.failures == 0 ? 0 : 1;
}

GradedDim tensor2_of(const char* expr) {
    return tensor_square(parse_algebra_expr(expr).build()).quotient_dim();
}
GradedDim ext2_of(const char* expr) {
    return exterior_square(parse_algebra_expr(expr).build()).quotient_dim();
}

}  // namespace

int main() {
    int failed = 0;

    failed += run(1, "tensor squares", [](Criterion& c) {
        c.expect_eq(tensor2_of("H(1,0)"), {6, 0}, "tensor2 H(1,0)");
        c.expect_eq(tensor2_of("H(0,1)"), {1, 0}, "tensor2 H(0,1)");
        c.expect_eq(tensor2_of("Hodd(1)"), {2, 3}, "tensor2 Hodd(1)");
    });

    failed += run(2, "exterior squares", [](Criterion& c) {
        c.expect_eq(ext2_of("H(1,0)"), {3, 0}, "ext2 H(1,0)");
        c.expect_eq(ext2_of("H(0,1)"), {1, 0}, "ext2 H(0,1)");
        c.expect_eq(ext2_of("Hodd(1)"), {1, 2}, "ext2 Hodd(1)");
        for (long m = 2; m <= 3; ++m) {
            auto got = exterior_square(heisenberg_odd(m)).quotient_dim();
            c.expect_eq(got, {m * m, m * m}, "ext2 Hodd(" + std::to_string(m) + ")");
        }
        for (long m = 0; m <= 3; ++m)
            for (long n = 0; n <= 3 - m; ++n) {
                if (m + n < 2) continue;
                auto got = exterior_square(heisenberg_even(m, n)).quotient_dim();
                GradedDim want{2 * m * m - m + n * (n + 1) / 2, 2 * m * n};
                c.expect_eq(got, want,
                            "ext2 H(" + std::to_string(m) + "," + std::to_string(n) + ")");
            }
    });

    failed += run(3, "abelian sweep", [](Criterion& c) {
        for (long p = 0; p + 0 <= 6; ++p)
            for (long q = 0; p + q <= 6; ++q) {
                auto L = abelian(p, q);
                auto an = analyze_tensor(L);
                std::string tag = "A(" + std::to_string(p) + "|" + std::to_string(q) + ") ";
                c.expect_eq(an.tensor.quotient_dim(), {p * p + q * q, 2 * p * q},
                            tag + "tensor2");
                c.expect_eq(an.exterior.quotient_dim(),
                            {(p * p + q * q + q - p) / 2, p * q}, tag + "ext2");
                c.expect_eq(an.square.dim, gamma_dim(p, q), tag + "square");
                c.expect(decomposition_check(L), tag + "decomposition");
            }
    });

    failed += run(4, "Schur multipliers", [](Criterion& c) {
        auto mult = [](const char* expr) {
            return schur_multiplier_class2(parse_algebra_expr(expr).build());
        };
        c.expect_eq(mult("H(1,0)"), {2, 0}, "M(H(1,0))");
        c.expect_eq(mult("H(0,1)"), {0, 0}, "M(H(0,1))");
        c.expect_eq(mult("H(2,0)"), {5, 0}, "M(H(2,0))");
        c.expect_eq(mult("Hodd(1)"), {1, 1}, "M(Hodd(1))");
        c.expect_eq(mult("Hodd(2)"), {4, 3}, "M(Hodd(2))");
        auto sum_expr = parse_algebra_expr("H(1,0)+H(1,0)");
        auto constructive = schur_multiplier_class2(sum_expr.build());
        c.expect_eq(constructive, {8, 0}, "M(H(1,0)+H(1,0)) constructive");
        auto closed = sum_expr.closed_multiplier();
        c.expect(closed.has_value() && *closed == constructive,
                 "M(H(1,0)+H(1,0)) equals the direct-sum formula");
    });

    failed += run(5, "triple tensor products", [](Criterion& c) {
        auto t3 = [](const char* expr) {
            return triple_tensor_class2(parse_algebra_expr(expr).build());
        };
        c.expect_eq(t3("H(1,0)"), {12, 0}, "tensor3 H(1,0)");
        c.expect_eq(t3("H(0,1)"), {0, 1}, "tensor3 H(0,1)");
        c.expect_eq(t3("Hodd(1)"), {5, 5}, "tensor3 Hodd(1)");
        for (long m = 0; m <= 3; ++m)
            for (long n = 0; n <= 3 - m; ++n) {
                if (m + n < 2) continue;
                c.expect_eq(t3(("H(" + std::to_string(m) + "," + std::to_string(n) + ")").c_str()),
                            {8 * m * m * m + 6 * m * n * n, 12 * m * m * n + n * n * n},
                            "tensor3 H(" + std::to_string(m) + "," + std::to_string(n) + ")");
            }
        c.expect_eq(t3("Hodd(2)"), formulas::triple_tensor_heisenberg_odd(2),
                    "tensor3 Hodd(2) equals the tabulated odd-center value (16|16)");
    });

    failed += run(6, "triple tensor bound", [](Criterion& c) {
        for (const auto& spec : standard_specimens(8, 1)) {
            if (spec.expr.derived_dim().total() == 0) continue;
            auto L = spec.expr.build();
            auto rep = bound_check(L);
            c.expect(rep.holds, spec.key + ": bound violated, lhs=" + std::to_string(rep.lhs) +
                                    " rhs=" + std::to_string(rep.rhs));
            if (rep.derived_dim == GradedDim{1, 0}) {
                bool is_h10 = spec.key == "H(1,0)";
                c.expect(rep.equality == is_h10,
                         spec.key + ": equality flag " + (rep.equality ? "set" : "clear") +
                             " but specimen " + (is_h10 ? "is" : "is not") + " H(1,0)");
            }
        }
    });

    failed += run(7, "capability", [](Criterion& c) {
        c.expect(is_capable(parse_algebra_expr("H(1,0)").build()), "H(1,0) capable");
        c.expect(is_capable(parse_algebra_expr("Hodd(1)").build()), "Hodd(1) capable");
        for (long k = 0; k <= 3; ++k)
            for (long l = 0; k + l <= 3; ++l) {
                if (k + l < 1) continue;
                std::string tail = "A(" + std::to_string(k) + "|" + std::to_string(l) + ")";
                c.expect(is_capable(parse_algebra_expr("H(1,0)+" + tail).build()),
                         "H(1,0)+" + tail + " capable");
                c.expect(is_capable(parse_algebra_expr("Hodd(1)+" + tail).build()),
                         "Hodd(1)+" + tail + " capable");
            }
        for (const char* expr : {"H(2,0)", "H(1,1)", "H(0,2)", "Hodd(2)"})
            c.expect(!is_capable(parse_algebra_expr(expr).build()),
                     std::string(expr) + " non-capable");
    });

    failed += run(8, "rank-2 formula consistency", [](Criterion& c) {
        using formulas::Rank2Case;
        for (auto r2case : {Rank2Case::center_equals_derived, Rank2Case::witness_even,
                            Rank2Case::witness_odd})
            for (GradedDim h2 : {GradedDim{2, 0}, GradedDim{1, 1}, GradedDim{0, 2}})
                for (long long m = h2.even; m + h2.odd <= 20; ++m)
                    for (long long n = h2.odd; m + n <= 20; ++n) {
                        auto t2 = formulas::tensor2_gh_rank2(r2case, h2, m, n);
                        auto e2 = formulas::ext2_gh_rank2(r2case, h2, m, n);
                        auto mu = formulas::multiplier_gh_rank2(r2case, h2, m, n);
                        auto gamma = formulas::gamma_closed(m - h2.even, n - h2.odd);
                        std::string tag = "case=" + std::to_string(static_cast<int>(r2case)) +
                                          " H2=" + to_string(h2) + " m=" + std::to_string(m) +
                                          " n=" + std::to_string(n);
                        if (t2 && e2)
                            c.expect(*t2 == *e2 + gamma, tag + ": tensor2 != ext2 + Gamma, got " +
                                                             to_string(*t2) + " vs " +
                                                             to_string(*e2 + gamma));
                        if (e2 && mu)
                            c.expect(*e2 == *mu + h2, tag + ": ext2 != multiplier + H2, got " +
                                                          to_string(*e2) + " vs " +
                                                          to_string(*mu + h2));
                    }
    });

    failed += run(9, "rank-2 constructive dispatch", [](Criterion& c) {
        auto records = verify_catalog(8, 1, true);
        for (const auto& r : records) {
            if (r.quantity.rfind("rank2:", 0) != 0) continue;
            if (r.status == RecordStatus::untested_case) continue;
            if (r.status == RecordStatus::formula_only) continue;
            c.expect(r.status == RecordStatus::match, to_line(r));
        }
    });

    failed += run(10, "property suites", [](Criterion& c) {
        for (const auto& spec : standard_specimens(8, 1)) {
            auto L = spec.expr.build();
            c.expect(check_axioms(L).ok(), spec.key + ": axiom check");
        }
        std::mt19937_64 rng(424242);
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
            Matrix m(rows, cols);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t col = 0; col < cols; ++col)
                    m.at(r, col) = rat(static_cast<long>(rng() % 9) - 4);
            auto [red, pivots] = rref(m);
            c.expect(pivots.size() + kernel(m).rank() == cols,
                     "rank-nullity on random matrix trial " + std::to_string(trial));
        }
        for (const auto& L : {heisenberg_even(1, 1), heisenberg_odd(1)}) {
            auto baseline = tensor_square(L).quotient_dim();
            auto rows = tensor_relation_rows(L);
            std::mt19937_64 shuffler(7);
            for (int trial = 0; trial < 5; ++trial) {
                std::shuffle(rows.begin(), rows.end(), shuffler);
                Echelon e(L.dim_total() * L.dim_total());
                for (const auto& row : rows) e.insert(row);
                PresentedSpace shuffled(tensor_square(L).symbols(), std::move(e));
                c.expect(shuffled.quotient_dim() == baseline,
                         "relation order invariance trial " + std::to_string(trial));
            }
        }
        for (long p = 0; p <= 6; ++p)
            for (long q = 0; p + q <= 6; ++q)
                c.expect(gamma_dim(p, q) == formulas::gamma_closed(p, q),
                         "gamma(" + std::to_string(p) + "," + std::to_string(q) + ")");
    });

    std::cout << (failed == 0 ? "all criteria passed"
                              : std::to_string(failed) + " criterion/criteria failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
