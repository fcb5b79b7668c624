#include <catch2/catch_amalgamated.hpp>

#include "supertensor/catalog.hpp"

using namespace supertensor;

TEST_CASE("abelian family") {
    CHECK(abelian(0, 0).dim() == GradedDim{0, 0});
    auto a = abelian(2, 0);
    CHECK(nilpotency_class(a) == 1);
    CHECK(center(a).dim == GradedDim{2, 0});
    CHECK(derived_subalgebra(abelian(1, 1)).space.rank() == 0);
}

TEST_CASE("even-center Heisenberg family") {
    CHECK_THROWS_AS(heisenberg_even(0, 0), EmptyHeisenberg);
    auto h10 = heisenberg_even(1, 0);
    CHECK(h10.dim() == GradedDim{3, 0});
    CHECK(h10.bracket(0, 1)[2] == 1);
    auto h01 = heisenberg_even(0, 1);
    CHECK(h01.dim() == GradedDim{1, 1});
    CHECK(h01.bracket(1, 1)[0] == 1);
    CHECK(heisenberg_even(1, 1).dim() == GradedDim{3, 1});
    for (long m = 0; m <= 2; ++m)
        for (long n = 0; n <= 2; ++n) {
            if (m + n == 0) continue;
            auto h = heisenberg_even(m, n);
            CHECK(h.dim() == GradedDim{2 * m + 1, n});
            CHECK(check_axioms(h).ok());
            CHECK(nilpotency_class(h) == 2);
            CHECK(generalized_heisenberg_rank(h) == GradedDim{1, 0});
        }
}

TEST_CASE("odd-center Heisenberg family") {
    CHECK_THROWS_AS(heisenberg_odd(0), InvalidParams);
    CHECK(heisenberg_odd(1).dim() == GradedDim{1, 2});
    CHECK(heisenberg_odd(2).dim() == GradedDim{2, 3});
    for (long m = 1; m <= 3; ++m) {
        auto h = heisenberg_odd(m);
        CHECK(h.dim() == GradedDim{m, m + 1});
        CHECK(check_axioms(h).ok());
        CHECK(derived_subalgebra(h).dim == GradedDim{0, 1});
        CHECK(center(h).dim == GradedDim{0, 1});
        CHECK(generalized_heisenberg_rank(h) == GradedDim{0, 1});
    }
}

TEST_CASE("rank-2 constructors") {
    auto even = gh_rank2(GhRank2Kind::even, {1, 0, 1, 0});
    CHECK(even.dim() == GradedDim{6, 0});
    CHECK(generalized_heisenberg_rank(even) == GradedDim{2, 0});

    auto mixed = gh_rank2(GhRank2Kind::mixed, {1, 0, 1});
    CHECK(mixed.dim() == GradedDim{4, 2});
    CHECK(generalized_heisenberg_rank(mixed) == GradedDim{1, 1});

    auto odd = gh_rank2(GhRank2Kind::odd, {1, 1});
    CHECK(odd.dim() == GradedDim{2, 4});
    CHECK(generalized_heisenberg_rank(odd) == GradedDim{0, 2});

    CHECK_THROWS_AS(gh_rank2(GhRank2Kind::even, {1, 0}), InvalidParams);
}

TEST_CASE("free class-2 quotients") {
    SECTION("keeping two of three central directions on three even generators") {
        auto L = free_nilpotent2_quotient(3, 0, {2, 0}, 1);
        CHECK(L.dim() == GradedDim{5, 0});
        CHECK(check_axioms(L).ok());
        CHECK(nilpotency_class(L) == 2);
        CHECK(derived_subalgebra(L).dim == GradedDim{2, 0});
    }
    SECTION("free class-2 on two even generators is H(1,0)") {
        auto L = free_nilpotent2_quotient(2, 0, {1, 0}, 5);
        CHECK(L.dim() == GradedDim{3, 0});
        CHECK(generalized_heisenberg_rank(L) == GradedDim{1, 0});
    }
    SECTION("two odd generators with one kept direction") {
        auto L = free_nilpotent2_quotient(0, 2, {1, 0}, 3);
        CHECK(L.dim() == GradedDim{1, 2});
        CHECK(check_axioms(L).ok());
        CHECK(nilpotency_class(L).value() <= 2);
    }
    SECTION("deterministic in the seed") {
        auto a = free_nilpotent2_quotient(2, 2, {1, 1}, 9);
        auto b = free_nilpotent2_quotient(2, 2, {1, 1}, 9);
        CHECK(a.same_structure(b));
    }
    SECTION("mixed generators, odd kept center") {
        auto L = free_nilpotent2_quotient(2, 1, {0, 2}, 1);
        CHECK(L.dim() == GradedDim{2, 3});
        CHECK(check_axioms(L).ok());
        CHECK(derived_subalgebra(L).dim == GradedDim{0, 2});
    }
    SECTION("kept dimensions are validated") {
        CHECK_THROWS_AS(free_nilpotent2_quotient(2, 0, {2, 0}, 1), InvalidParams);
        CHECK_THROWS_AS(free_nilpotent2_quotient(1, 1, {0, 2}, 1), InvalidParams);
    }
}
