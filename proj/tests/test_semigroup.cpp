#include "doctest.h"
#include "sgp/errors.hpp"
#include "sgp/semigroup.hpp"

using namespace sgp;

TEST_CASE("base table relations") {
    Semigroup s = build_named("AC2");
    REQUIRE(s.n == 6);
    // order a, b, ab, ba, 0, c
    CHECK(s.at(0, 0) == 0);  // aa = a
    CHECK(s.at(1, 1) == 4);  // bb = 0
    CHECK(s.at(0, 1) == 2);
    CHECK(s.at(1, 0) == 3);
    CHECK(s.at(2, 3) == 4);  // ab ba = 0
    CHECK(s.at(3, 2) == 1);  // ba ab = b
    CHECK(s.at(5, 5) == 4);  // cc = 0
    // 0 is not a zero here: it commutes with c to give c
    CHECK(s.at(4, 5) == 5);
    CHECK(s.at(5, 4) == 5);
    for (int x = 0; x < 5; ++x) {
        CHECK(s.at(x, 5) == 5);
        CHECK(s.at(5, x) == 5);
    }
    CHECK(idempotents(s).indices() == std::vector<int>{0, 2, 3, 4});
    CHECK(s.labels == std::vector<std::string>{"a", "b", "ab", "ba", "0", "c"});
    CHECK(!zero_element(s).has_value());
    CHECK(s.power(5, 2) == 4);
    CHECK(s.power(5, 3) == 5);
}

TEST_CASE("five element subtable") {
    Semigroup a2 = build_named("A2");
    Semigroup ac2 = build_named("AC2");
    REQUIRE(a2.n == 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(a2.at(i, j) == ac2.at(i, j));
    CHECK(zero_element(a2) == 4);
    CHECK(idempotents(a2).count() == 4);
}

TEST_CASE("matrix unit monoid") {
    Semigroup s = build_named("B21");
    REQUIRE(s.n == 6);
    // order 0, 1, e11, e12, e21, e22
    for (int x = 0; x < 6; ++x) {
        CHECK(s.at(1, x) == x);
        CHECK(s.at(x, 1) == x);
    }
    CHECK(s.at(3, 4) == 2);  // e12 e21 = e11
    CHECK(s.at(4, 3) == 5);  // e21 e12 = e22
    CHECK(s.at(3, 3) == 0);  // e12 e12 = 0
    CHECK(zero_element(s) == 0);
    CHECK(idempotents(s).count() == 4);
}

TEST_CASE("small named families") {
    Semigroup z3 = build_named("cyclic:3");
    CHECK(z3.n == 3);
    CHECK(z3.at(1, 2) == 0);
    CHECK(z3.at(1, 1) == 2);
    Semigroup lz = build_named("leftzero:3");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(lz.at(i, j) == i);
    Semigroup nil = build_named("null:2");
    CHECK(nil.at(1, 1) == 0);
    CHECK(zero_element(nil) == 0);
    CHECK(build_named("E").n == 1);
    CHECK(build_named("C2").n == 2);
    CHECK(build_named("A0").n == 4);
    CHECK_THROWS_AS(build_named("nosuch"), UnknownName);
    CHECK_THROWS_AS(build_named("cyclic:0"), UnknownName);
}

TEST_CASE("table validation") {
    CHECK_THROWS_AS(from_table({{1, 1}, {1, 0}}), NonAssociative);
    CHECK_THROWS_AS(from_table({{5}}), IndexOutOfRange);
    CHECK_THROWS_AS(from_table({}), IoError);
    CHECK_THROWS_AS(from_table({{0, 0}, {0, 0}}, {"a", "a"}), IoError);
    CHECK_THROWS_AS(from_table({{0, 0}, {0, 0}}, {"a"}), IoError);
    try {
        from_table({{1, 1}, {1, 0}});
        CHECK(false);
    } catch (const NonAssociative& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 0);
        CHECK(e.k == 1);
    }
}

TEST_CASE("products and closures") {
    Semigroup a2 = build_named("A2");
    Semigroup c2 = build_named("C2");
    Semigroup p = direct_product(a2, c2);
    REQUIRE(p.n == 10);
    // (s, t) lives at s*|T| + t and multiplies componentwise
    for (int s1 = 0; s1 < 5; ++s1)
        for (int t1 = 0; t1 < 2; ++t1)
            for (int s2 = 0; s2 < 5; ++s2)
                for (int t2 = 0; t2 < 2; ++t2)
                    CHECK(p.at(s1 * 2 + t1, s2 * 2 + t2) ==
                          a2.at(s1, s2) * 2 + c2.at(t1, t2));
    CHECK(p.display(3) == "(b,c)");

    ElementSet seed(5);
    seed.add(1);
    ElementSet closed = subsemigroup_closure(a2, seed);
    CHECK(closed.indices() == std::vector<int>{1, 4});
    CHECK_THROWS_AS(subsemigroup_closure(a2, ElementSet(5)), EmptySeed);
}

TEST_CASE("regularity witnesses") {
    Semigroup a2 = build_named("A2");
    for (int x = 0; x < a2.n; ++x) {
        auto w = is_regular_element(a2, x);
        REQUIRE(w.has_value());
        CHECK(a2.at(a2.at(x, *w), x) == x);
    }
    Semigroup nil = build_named("null:2");
    CHECK(!is_regular_element(nil, 1).has_value());
}

TEST_CASE("embeddings") {
    Semigroup a2 = build_named("A2");
    Semigroup ac2 = build_named("AC2");
    Semigroup c2 = build_named("C2");
    auto m = find_embedding(a2, ac2);
    REQUIRE(m.has_value());
    CHECK(m->is_injective());
    CHECK(m->is_multiplicative(a2, ac2));
    CHECK(!find_embedding(c2, a2).has_value());
    CHECK_THROWS_AS(find_embedding(build_named("B21"), build_named("B21"), 3),
                    SizeBoundExceeded);
}

TEST_CASE("restriction") {
    Semigroup ac2 = build_named("AC2");
    ElementSet members(6);
    for (int i = 0; i < 5; ++i) members.add(i);
    SubSemigroup sub = restrict_to(ac2, members);
    Semigroup a2 = build_named("A2");
    REQUIRE(sub.sub.n == 5);
    CHECK(sub.sub.table == a2.table);
    CHECK(sub.sub.labels == a2.labels);
    CHECK(sub.to_parent == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(sub.from_parent == std::vector<int>{0, 1, 2, 3, 4, -1});

    ElementSet open(6);
    open.add(1);  // bb = 0 escapes
    CHECK_THROWS_AS(restrict_to(ac2, open), InternalInvariantViolation);
}
