#include <stdexcept>
#include <doctest.h>

#include <random>

#include "munits/unitvec.hpp"

using namespace munits;

namespace {

ExponentVector vec(const Level& lv, std::vector<RawEntry> raws) {
    return ExponentVector::from_entries(lv, raws);
}

}  // namespace

TEST_CASE("from_entries canonicalizes and merges") {
    Level l5 = Level::make(5, 1);

    ExponentVector v0 = vec(l5, {{1, 0, 60}});
    CHECK(v0.size() == 1);
    CHECK(v0.entries().begin()->first == make_point(l5, 1, 0));
    CHECK(v0.entries().begin()->second == 60);

    // (4, 0) is the sign flip of (1, 0); the exponent does not change sign
    ExponentVector merged = vec(l5, {{1, 0, 30}, {4, 0, 30}});
    CHECK(merged == v0);

    // (1, 3) flips to (4, ...)? no: r = 1 is already canonical
    ExponentVector v13 = vec(l5, {{-4, 3, 12}});
    CHECK(v13.entries().begin()->first == make_point(l5, 1, 3));

    std::vector<std::string> warnings;
    ExponentVector cancel =
        ExponentVector::from_entries(l5, {{1, 0, 60}, {4, 0, -60}}, &warnings);
    CHECK(cancel.is_empty());
    CHECK(warnings.size() == 1);

    warnings.clear();
    ExponentVector zero_entry = ExponentVector::from_entries(l5, {{1, 2, 0}}, &warnings);
    CHECK(zero_entry.is_empty());
    CHECK(warnings.size() == 1);

    CHECK_THROWS_AS(vec(l5, {{0, 0, 12}}), std::invalid_argument);
    Level l25 = Level::make(5, 2);
    CHECK_THROWS_AS(vec(l25, {{5, 10, 12}}), std::invalid_argument);  // order 5 point
}

TEST_CASE("validate congruences") {
    Level l5 = Level::make(5, 1);

    ValidityReport r0 = validate(vec(l5, {{1, 0, 60}}));
    CHECK(r0.valid);
    CHECK(r0.sum_r2 == 0);
    CHECK(r0.sum_s2 == 0);
    CHECK(r0.sum_rs == 0);
    CHECK(r0.sum_m == 0);

    ValidityReport bad_quad = validate(vec(l5, {{1, 0, 12}}));
    CHECK(!bad_quad.valid);
    CHECK(bad_quad.sum_r2 == 2);  // 12 mod 5
    CHECK(bad_quad.sum_m == 0);

    ValidityReport bad_weight = validate(vec(l5, {{1, 0, 5}}));
    CHECK(!bad_weight.valid);
    CHECK(bad_weight.sum_r2 == 0);  // 5 mod 5
    CHECK(bad_weight.sum_m == 5);

    CHECK(validate(vec(l5, {{1, 1, 60}})).valid);
    CHECK(validate(vec(l5, {{0, 1, 60}})).valid);
    CHECK(validate(vec(l5, {{1, 0, 60}, {2, 0, -60}})).valid);
    CHECK(validate(ExponentVector::empty(l5)).valid);

    Level l25 = Level::make(5, 2);
    CHECK(validate(vec(l25, {{5, 1, 300}})).valid);
    ValidityReport r25 = validate(vec(l25, {{5, 1, 12}}));
    CHECK(!r25.valid);
    CHECK(r25.sum_r2 == 12 * 25 % 25);
    CHECK(r25.sum_s2 == 12);
}

TEST_CASE("validity is additive") {
    Level l5 = Level::make(5, 1);
    auto pool_a = search_valid(l5, {make_point(l5, 1, 0)}, 120);
    auto pool_b = search_valid(l5, {make_point(l5, 1, 1)}, 120);
    REQUIRE(!pool_a.empty());
    REQUIRE(!pool_b.empty());
    std::mt19937 rng(5150);
    std::uniform_int_distribution<size_t> da(0, pool_a.size() - 1);
    std::uniform_int_distribution<size_t> db(0, pool_b.size() - 1);
    for (int i = 0; i < 20; ++i) {
        ExponentVector sum = pool_a[da(rng)] + pool_b[db(rng)];
        CHECK(validate(sum).valid);
    }
}

TEST_CASE("lookup by residue class") {
    Level l5 = Level::make(5, 1);
    ExponentVector v0 = vec(l5, {{1, 0, 60}});
    CHECK(v0.lookup(ResidueClass{ResidueKind::Coprime, 1}, 0) == 60);
    CHECK(v0.lookup(ResidueClass{ResidueKind::Coprime, 1}, 5) == 60);   // s reduced mod ell
    CHECK(v0.lookup(ResidueClass{ResidueKind::Coprime, 1}, -5) == 60);
    CHECK(v0.lookup(ResidueClass{ResidueKind::Coprime, 2}, 0) == 0);
    CHECK(v0.lookup(ResidueClass{ResidueKind::Coprime, 1}, 1) == 0);

    ExponentVector w = vec(l5, {{0, 1, 60}});
    CHECK(w.lookup(ResidueClass{ResidueKind::EllDivides, 0}, 1) == 60);
    CHECK(w.lookup(ResidueClass{ResidueKind::EllDivides, 0}, 2) == 0);
    CHECK_THROWS_AS(w.lookup(ResidueClass{ResidueKind::EllDivides, 0}, 4),
                    std::invalid_argument);  // 4 is not a canonical residue
    CHECK_THROWS_AS(w.lookup(ResidueClass{ResidueKind::EllDivides, 0}, 0),
                    std::invalid_argument);

    Level l25 = Level::make(5, 2);
    ExponentVector x = vec(l25, {{5, 1, 300}});
    CHECK(x.lookup(ResidueClass{ResidueKind::PDividesNotEll, 5}, 1) == 300);
    CHECK(x.lookup(ResidueClass{ResidueKind::PDividesNotEll, 5}, 26) == 300);
    CHECK_THROWS_AS(x.lookup(ResidueClass{ResidueKind::PDividesNotEll, 5}, 10),
                    std::invalid_argument);  // s must be invertible mod 25
}

TEST_CASE("max_abs and addition") {
    Level l5 = Level::make(5, 1);
    ExponentVector v4 = vec(l5, {{1, 0, 60}, {2, 0, -60}});
    CHECK(v4.max_abs() == 60);
    CHECK(vec(l5, {{1, 0, 12}, {1, 1, -36}}).max_abs() == 36);
    CHECK_THROWS_AS(ExponentVector::empty(l5).max_abs(), std::invalid_argument);

    ExponentVector v0 = vec(l5, {{1, 0, 60}});
    ExponentVector sum = v0 + v4;
    CHECK(sum.size() == 2);
    CHECK(sum.entries().at(make_point(l5, 1, 0)) == 120);
    ExponentVector neg = vec(l5, {{1, 0, -60}});
    CHECK((v0 + neg).is_empty());

    Level l7 = Level::make(7, 1);
    CHECK_THROWS_AS(v0 + ExponentVector::empty(l7), std::invalid_argument);
}

TEST_CASE("search over multiples of twelve") {
    Level l5 = Level::make(5, 1);

    auto single = search_valid(l5, {make_point(l5, 1, 0)}, 60);
    REQUIRE(single.size() == 2);
    CHECK(single[0].entries().at(make_point(l5, 1, 0)) == -60);
    CHECK(single[1].entries().at(make_point(l5, 1, 0)) == 60);

    // two supports: m1 * 1 + m2 * 4 = 0 mod 5 forces m1 = m2 mod 5
    auto pairs = search_valid(l5, {make_point(l5, 1, 0), make_point(l5, 2, 0)}, 24);
    REQUIRE(pairs.size() == 4);
    for (const auto& v : pairs) {
        CHECK(validate(v).valid);
        CHECK(v.entries().at(make_point(l5, 1, 0)) == v.entries().at(make_point(l5, 2, 0)));
    }

    // every result is valid; zero vector excluded
    for (const auto& v : search_valid(l5, {make_point(l5, 1, 1)}, 120)) {
        CHECK(!v.is_empty());
        CHECK(validate(v).valid);
    }

    Level l7 = Level::make(7, 1);
    auto pair7 = search_valid(l7, {make_point(l7, 1, 0), make_point(l7, 1, 1)}, 84);
    REQUIRE(pair7.size() == 8);
    CHECK(pair7[0].entries().at(make_point(l7, 1, 0)) == -84);
    CHECK(pair7[0].entries().at(make_point(l7, 1, 1)) == -84);

    CHECK_THROWS_AS(search_valid(l5, std::vector<TorsionPoint>(7), 12),
                    std::invalid_argument);
    CHECK_THROWS_AS(search_valid(l5, {make_point(l5, 1, 0)}, 132), std::invalid_argument);
    CHECK_THROWS_AS(
        search_valid(l5, {make_point(l5, 1, 0), make_point(l5, 4, 0)}, 12),
        std::invalid_argument);  // same orbit twice
}
