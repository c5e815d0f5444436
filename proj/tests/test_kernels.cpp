#include <optional>

#include "doctest.h"
#include "sgp/kernels.hpp"
#include "sgp/semigroup.hpp"

using namespace sgp;

TEST_CASE("associativity kernels agree") {
    Semigroup ac2 = build_named("AC2");
    CHECK(!associativity_violation_serial(ac2.table, 6).has_value());
    CHECK(!associativity_violation_parallel(ac2.table, 6).has_value());

    // Damage one entry; both variants must report the same first triple.
    std::vector<int> bad = ac2.table;
    bad[1 * 6 + 1] = 0;  // bb := a
    auto s = associativity_violation_serial(bad, 6);
    auto p = associativity_violation_parallel(bad, 6);
    auto d = associativity_violation(bad, 6);
    REQUIRE(s.has_value());
    CHECK(s == p);
    CHECK(s == d);
    const auto& [i, j, k] = *s;
    int lhs = bad[bad[i * 6 + j] * 6 + k];
    int rhs = bad[i * 6 + bad[j * 6 + k]];
    CHECK(lhs != rhs);
}

TEST_CASE("identity kernels agree") {
    Semigroup b21 = build_named("B21");
    std::vector<int> lhs = {0, 1, 0, 2, 0};  // xyxzx
    std::vector<int> rhs = {0, 2, 0, 1, 0};  // xzxyx
    auto s = identity_violation_serial(b21, lhs, rhs, 3);
    auto p = identity_violation_parallel(b21, lhs, rhs, 3);
    auto d = identity_violation(b21, lhs, rhs, 3);
    REQUIRE(s.has_value());
    CHECK(s->assignment == std::vector<int>{1, 2, 3});
    CHECK(s->lhs_value == 3);
    CHECK(s->rhs_value == 0);
    REQUIRE(p.has_value());
    CHECK(p->assignment == s->assignment);
    CHECK(p->lhs_value == s->lhs_value);
    CHECK(p->rhs_value == s->rhs_value);
    REQUIRE(d.has_value());
    CHECK(d->assignment == s->assignment);

    Semigroup ac2 = build_named("AC2");
    CHECK(!identity_violation_serial(ac2, lhs, rhs, 3).has_value());
    CHECK(!identity_violation_parallel(ac2, lhs, rhs, 3).has_value());

    Semigroup z3 = build_named("cyclic:3");
    auto v = identity_violation_serial(z3, {0, 0}, {0, 0, 0, 0}, 1);
    auto w = identity_violation_parallel(z3, {0, 0}, {0, 0, 0, 0}, 1);
    REQUIRE(v.has_value());
    CHECK(v->assignment == std::vector<int>{1});
    CHECK(v->lhs_value == 2);
    CHECK(v->rhs_value == 1);
    REQUIRE(w.has_value());
    CHECK(w->assignment == v->assignment);
}
