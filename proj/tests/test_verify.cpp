#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "supertensor/verify.hpp"

using namespace supertensor;

namespace {

std::map<std::pair<std::string, std::string>, VerificationRecord> indexed(
    const std::vector<VerificationRecord>& records) {
    std::map<std::pair<std::string, std::string>, VerificationRecord> out;
    for (const auto& r : records) out[{r.algebra, r.quantity}] = r;
    return out;
}

}  // namespace

TEST_CASE("catalog expressions round-trip through text") {
    for (const char* text : {"A(2|3)", "H(1,0)", "Hodd(2)", "F2(3,0;2|0;seed=7)",
                             "H(1,0)+Hodd(1)", "H(1,0)+H(1,0)+A(0|1)"}) {
        auto e = parse_algebra_expr(text);
        CHECK(e.text() == text);
        CHECK(e.build().dim() == e.dim());
    }
    CHECK(parse_algebra_expr(" H( 1 , 0 ) + A(1|1) ").text() == "H(1,0)+A(1|1)");
    CHECK(parse_algebra_expr("F2(3,0;2|0)", 9).seed == 9);
    CHECK_THROWS_AS(parse_algebra_expr("B(1,0)"), ParseError);
    CHECK_THROWS_AS(parse_algebra_expr("H(1,0)+"), ParseError);
    CHECK_THROWS_AS(parse_algebra_expr("H(1;0)"), ParseError);
}

TEST_CASE("expression-level dimensions agree with the built algebras") {
    for (const char* text :
         {"A(3|2)", "H(2,1)", "Hodd(2)", "F2(2,1;1|1;seed=1)", "H(1,1)+Hodd(1)+A(1|0)"}) {
        auto e = parse_algebra_expr(text);
        auto L = e.build();
        CHECK(e.dim() == L.dim());
        CHECK(e.derived_dim() == derived_subalgebra(L).dim);
    }
}

TEST_CASE("specimen sweep is deterministic and bounded") {
    auto a = standard_specimens(6, 1);
    auto b = standard_specimens(6, 1);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].key == b[i].key);
    for (const auto& s : a) CHECK(s.expr.dim().total() <= 6);
    std::set<std::string> keys;
    for (const auto& s : a) CHECK(keys.insert(s.key).second);
    CHECK_THROWS_AS(standard_specimens(1, 1), InvalidParams);
}

TEST_CASE("verification sweep at dimension four is clean") {
    auto records = verify_catalog(4, 1, true);
    CHECK(mismatch_count(records) == 0);
    auto idx = indexed(records);
    REQUIRE(idx.count({"H(1,0)", "tensor2"}) == 1);
    auto r = idx[{"H(1,0)", "tensor2"}];
    CHECK(r.constructive == GradedDim{6, 0});
    CHECK(r.closed_form == GradedDim{6, 0});
    CHECK(r.status == RecordStatus::match);
    CHECK(idx[{"H(1,0)", "multiplier"}].constructive == GradedDim{2, 0});
    CHECK(idx[{"Hodd(1)", "tensor3"}].constructive == GradedDim{5, 5});
    CHECK(idx[{"Hodd(1)", "tensor3"}].status == RecordStatus::match);
    CHECK(idx[{"H(1,0)", "bound"}].note == "lhs=12 rhs=12 equality");
}

TEST_CASE("verification records are sorted by algebra and quantity") {
    auto records = verify_catalog(3, 1, false);
    for (std::size_t i = 1; i < records.size(); ++i) {
        auto key_prev = std::pair{records[i - 1].algebra, records[i - 1].quantity};
        auto key_cur = std::pair{records[i].algebra, records[i].quantity};
        CHECK(key_prev < key_cur);
    }
}

TEST_CASE("direct-sum multiplier matches the composed closed form at dimension six") {
    auto records = verify_catalog(6, 1, true);
    auto idx = indexed(records);
    REQUIRE(idx.count({"H(1,0)+H(1,0)", "multiplier"}) == 1);
    auto r = idx[{"H(1,0)+H(1,0)", "multiplier"}];
    CHECK(r.constructive == GradedDim{8, 0});
    CHECK(r.closed_form == GradedDim{8, 0});
    CHECK(r.status == RecordStatus::match);
    // H(1,0)+H(1,0) is capable, so the rank-2 theorem does not apply to it
    REQUIRE(idx.count({"H(1,0)+H(1,0)", "rank2:multiplier"}) == 1);
    CHECK(idx[{"H(1,0)+H(1,0)", "rank2:multiplier"}].status == RecordStatus::untested_case);
    CHECK(idx[{"H(1,0)+H(1,0)", "extcenter"}].note == "capable");
}

TEST_CASE("serial and parallel sweeps agree") {
    auto serial = verify_catalog(5, 1, false);
    auto parallel = verify_catalog(5, 1, true);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(to_line(serial[i]) == to_line(parallel[i]));
    }
}

TEST_CASE("record rendering") {
    VerificationRecord r{"H(1,0)", "tensor2", GradedDim{6, 0}, GradedDim{6, 0},
                         RecordStatus::match, ""};
    CHECK(to_line(r) ==
          "record algebra=\"H(1,0)\" quantity=tensor2 constructive=(6|0) closed_form=(6|0) "
          "status=match");
    VerificationRecord u{"X", "ext3", std::nullopt, std::nullopt, RecordStatus::untested_case,
                         "capable"};
    CHECK(to_line(u) ==
          "record algebra=\"X\" quantity=ext3 constructive=n/a closed_form=untested "
          "status=untested_case note=\"capable\"");
}
