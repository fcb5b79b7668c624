#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "supertensor/catalog.hpp"
#include "supertensor/tensor.hpp"

using namespace supertensor;

TEST_CASE("tensor square of the named small algebras") {
    CHECK(tensor_square(heisenberg_even(1, 0)).quotient_dim() == GradedDim{6, 0});
    CHECK(tensor_square(heisenberg_even(0, 1)).quotient_dim() == GradedDim{1, 0});
    CHECK(tensor_square(heisenberg_odd(1)).quotient_dim() == GradedDim{2, 3});
}

TEST_CASE("tensor square of abelian algebras counts symbols by parity") {
    for (long p = 0; p <= 3; ++p)
        for (long q = 0; q <= 3 - p; ++q) {
            auto t = tensor_square(abelian(p, q));
            CHECK(t.quotient_dim() == GradedDim{p * p + q * q, 2 * p * q});
            CHECK(t.relations().rank() == 0);
        }
}

TEST_CASE("tensor square collapses to the abelianization square for larger Heisenbergs") {
    CHECK(tensor_square(heisenberg_even(2, 0)).quotient_dim() == GradedDim{16, 0});
    CHECK(tensor_square(heisenberg_even(1, 1)).quotient_dim() == GradedDim{5, 4});
    CHECK(tensor_square(heisenberg_odd(2)).quotient_dim() == GradedDim{8, 8});
}

TEST_CASE("signs pinned on H(0,1)") {
    // [y,y] = z forces z(x)z = 0, z(x)y = 2 y(x)z and y(x)z = 2 z(x)y,
    // so both mixed symbols die (characteristic != 3) and y(x)y survives.
    auto L = heisenberg_even(0, 1);
    auto t = tensor_square(L);
    std::size_t zz = 0, zy = 1, yz = 2, yy = 3;
    Vec unit(4, Rational(0));
    unit[zz] = 1;
    CHECK(is_zero(t.reduce(unit)));
    unit = Vec(4, Rational(0));
    unit[zy] = 1;
    CHECK(is_zero(t.reduce(unit)));
    unit = Vec(4, Rational(0));
    unit[yz] = 1;
    CHECK(is_zero(t.reduce(unit)));
    unit = Vec(4, Rational(0));
    unit[yy] = 1;
    CHECK_FALSE(is_zero(t.reduce(unit)));
    // the raw relation rows contain z(x)y - 2 y(x)z and y(x)z - 2 z(x)y
    auto rows = tensor_relation_rows(L);
    auto has_row = [&](long a_zy, long a_yz) {
        for (const auto& r : rows)
            if (r[zz] == 0 && r[yy] == 0 && r[zy] == a_zy && r[yz] == a_yz) return true;
        return false;
    };
    CHECK(has_row(1, -2));
    CHECK(has_row(-2, 1));
}

TEST_CASE("relation rows are parity homogeneous by construction") {
    for (const auto& L : {heisenberg_even(1, 1), heisenberg_odd(2),
                          direct_sum(heisenberg_even(1, 0), heisenberg_odd(1))})
        CHECK_NOTHROW(tensor_relation_rows(L));
}

TEST_CASE("relation order never changes quotient dimensions") {
    std::mt19937_64 rng(123);
    for (const auto& L : {heisenberg_even(1, 1), heisenberg_odd(1)}) {
        auto baseline = tensor_square(L).quotient_dim();
        auto rows = tensor_relation_rows(L);
        for (int trial = 0; trial < 6; ++trial) {
            std::shuffle(rows.begin(), rows.end(), rng);
            auto s = span(rows, L.dim_total() * L.dim_total());
            Echelon e(L.dim_total() * L.dim_total());
            for (std::size_t r = 0; r < s.basis.rows(); ++r) e.insert(s.basis.row(r));
            PresentedSpace shuffled(tensor_square(L).symbols(), std::move(e));
            CHECK(shuffled.quotient_dim() == baseline);
        }
    }
}

TEST_CASE("square submodule") {
    auto subdim = [](const LieSuperAlgebra& L) { return square_submodule(L).dim; };
    CHECK(subdim(abelian(2, 0)) == GradedDim{3, 0});
    CHECK(subdim(heisenberg_even(1, 0)) == GradedDim{3, 0});
    CHECK(subdim(abelian(0, 2)) == GradedDim{1, 0});
}

TEST_CASE("exterior square") {
    CHECK(exterior_square(heisenberg_even(1, 0)).quotient_dim() == GradedDim{3, 0});
    CHECK(exterior_square(heisenberg_odd(1)).quotient_dim() == GradedDim{1, 2});
    for (long m = 0; m <= 3; ++m)
        for (long n = 0; n <= 3 - m; ++n) {
            auto e = exterior_square(abelian(m, n)).quotient_dim();
            CHECK(e == GradedDim{(m * m + n * n + n - m) / 2, m * n});
        }
    CHECK(exterior_square(heisenberg_odd(2)).quotient_dim() == GradedDim{4, 4});
    CHECK(exterior_square(heisenberg_odd(3)).quotient_dim() == GradedDim{9, 9});
}

TEST_CASE("gamma spaces") {
    CHECK(gamma_dim(2, 0) == GradedDim{3, 0});
    CHECK(gamma_dim(0, 2) == GradedDim{1, 0});
    CHECK(gamma_dim(1, 1) == GradedDim{1, 1});
    for (long p = 0; p <= 4; ++p)
        for (long q = 0; q <= 4 - p; ++q)
            CHECK(gamma_dim(p, q) ==
                  GradedDim{p * (p + 1) / 2 + q * (q - 1) / 2, p * q});
}

TEST_CASE("decomposition of the tensor square") {
    for (const auto& L : {heisenberg_even(1, 0), abelian(1, 1), heisenberg_odd(1),
                          heisenberg_even(1, 1), heisenberg_even(0, 2)}) {
        CHECK(decomposition_check(L));
        auto an = analyze_tensor(L);
        CHECK(an.tensor.quotient_dim() == an.exterior.quotient_dim() + an.square.dim);
    }
    // H(1,0): 6 = 3 + 3; A(1|1): (2|2) = (1|1) + (1|1); H_1: (2|3) = (1|2) + (1|1)
    auto h1 = analyze_tensor(heisenberg_odd(1));
    CHECK(h1.square.dim == GradedDim{1, 1});
}

TEST_CASE("square submodule matches the quadratic functor of the abelianization") {
    for (const auto& L : {heisenberg_even(1, 0), heisenberg_even(2, 0), heisenberg_odd(1),
                          heisenberg_odd(2), direct_sum(heisenberg_even(0, 1), abelian(1, 1))}) {
        auto an = analyze_tensor(L);
        GradedDim ab = L.dim() - derived_subalgebra(L).dim;
        CHECK(an.square.dim == gamma_dim(ab.even, ab.odd));
    }
}

TEST_CASE("exterior center and capability") {
    SECTION("H(1,0) is capable") {
        CHECK(exterior_center(heisenberg_even(1, 0)).space.rank() == 0);
        CHECK(is_capable(heisenberg_even(1, 0)));
    }
    SECTION("H(2,0) has exterior center equal to the derived subalgebra") {
        auto L = heisenberg_even(2, 0);
        auto z = exterior_center(L);
        CHECK(z.space == derived_subalgebra(L).space);
        CHECK_FALSE(is_capable(L));
    }
    SECTION("one-dimensional abelian is its own exterior center") {
        auto L = abelian(1, 0);
        CHECK(exterior_center(L).dim == GradedDim{1, 0});
    }
    SECTION("exterior center is always inside the center") {
        for (const auto& L :
             {heisenberg_even(1, 1), heisenberg_odd(2), abelian(2, 1),
              direct_sum(heisenberg_even(1, 0), abelian(1, 0)),
              free_nilpotent2_quotient(3, 0, {2, 0}, 1)}) {
            auto zw = exterior_center(L);
            CHECK(center(L).space.contains(zw.space));
        }
    }
    SECTION("capability of the small catalog") {
        CHECK(is_capable(heisenberg_odd(1)));
        CHECK_FALSE(is_capable(heisenberg_even(1, 1)));
        CHECK_FALSE(is_capable(heisenberg_even(0, 2)));
        CHECK_FALSE(is_capable(heisenberg_odd(2)));
        CHECK(is_capable(direct_sum(heisenberg_even(1, 0), abelian(2, 1))));
        CHECK(is_capable(direct_sum(heisenberg_odd(1), abelian(1, 1))));
    }
}

TEST_CASE("Schur multiplier for class two") {
    CHECK(schur_multiplier_class2(heisenberg_even(1, 0)) == GradedDim{2, 0});
    CHECK(schur_multiplier_class2(heisenberg_odd(1)) == GradedDim{1, 1});
    CHECK(schur_multiplier_class2(heisenberg_even(2, 0)) == GradedDim{5, 0});
    CHECK(schur_multiplier_class2(abelian(2, 2)) == GradedDim{4, 4});
}

TEST_CASE("triple tensor product for class two") {
    CHECK(triple_tensor_class2(heisenberg_even(1, 0)) == GradedDim{12, 0});
    CHECK(triple_tensor_class2(heisenberg_odd(1)) == GradedDim{5, 5});
    CHECK(triple_tensor_class2(heisenberg_even(0, 1)) == GradedDim{0, 1});
}

TEST_CASE("bound report") {
    SECTION("equality for H(1,0)") {
        auto rep = bound_check(heisenberg_even(1, 0));
        CHECK(rep.lhs == 12);
        CHECK(rep.rhs == 12);
        CHECK(rep.holds);
        CHECK(rep.equality);
    }
    SECTION("strict for H_1") {
        auto rep = bound_check(heisenberg_odd(1));
        CHECK(rep.lhs == 10);
        CHECK(rep.rhs == 12);
        CHECK(rep.holds);
        CHECK_FALSE(rep.equality);
    }
    SECTION("strict for H(1,0) + A(1|0)") {
        auto rep = bound_check(direct_sum(heisenberg_even(1, 0), abelian(1, 0)));
        CHECK(rep.rhs == 36);
        CHECK(rep.lhs == 33);
        CHECK(rep.holds);
        CHECK_FALSE(rep.equality);
    }
    SECTION("abelian input is rejected") {
        CHECK_THROWS_AS(bound_check(abelian(2, 0)), AbelianInput);
    }
}

TEST_CASE("class three inputs are rejected") {
    // free-ish class 3 on two generators: [e1,e2]=e3, [e1,e3]=e4
    LieSuperAlgebra L(
        {{"e1", Parity::even}, {"e2", Parity::even}, {"e3", Parity::even}, {"e4", Parity::even}},
        {{{0, 1}, {{2, rat(1)}}}, {{0, 2}, {{3, rat(1)}}}});
    REQUIRE(check_axioms(L).ok());
    REQUIRE(nilpotency_class(L) == 3);
    CHECK_THROWS_AS(tensor_square(L), ClassTooHigh);
    CHECK_THROWS_AS(exterior_square(L), ClassTooHigh);
    CHECK_THROWS_AS(schur_multiplier_class2(L), ClassTooHigh);
    CHECK_THROWS_AS(triple_tensor_class2(L), ClassTooHigh);
    CHECK_THROWS_AS(bound_check(L), ClassTooHigh);
}

TEST_CASE("zero-dimensional algebra degenerates gracefully") {
    auto L = abelian(0, 0);
    CHECK(tensor_square(L).quotient_dim() == GradedDim{0, 0});
    CHECK(exterior_square(L).quotient_dim() == GradedDim{0, 0});
    CHECK(schur_multiplier_class2(L) == GradedDim{0, 0});
    CHECK(triple_tensor_class2(L) == GradedDim{0, 0});
}
