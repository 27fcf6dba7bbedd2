#include <doctest.h>

#include <unordered_set>

#include "ddae/model.hpp"
#include "support.hpp"

using namespace ddae;
using testing::make_system;

TEST_CASE("occurrences reject invalid fields") {
    CHECK_THROWS_AS(VarOcc(0, 0, 0), ModelError);
    CHECK_THROWS_AS(VarOcc(1, -1, 0), ModelError);
    CHECK_THROWS_AS(VarOcc(1, 0, -2), ModelError);
    CHECK_NOTHROW(VarOcc(1, 0, -1));
}

TEST_CASE("occurrences compare and hash by value") {
    std::unordered_set<VarOcc> set{VarOcc(1, 1, 0), VarOcc(1, 1, 0), VarOcc(1, 0, 1)};
    CHECK(set.size() == 2);
    CHECK(VarOcc(1, 2, 0) < VarOcc(1, 2, 1));
    CHECK(VarOcc(1, 2, 0) != VarOcc(1, 2, 1));
}

TEST_CASE("system construction validates and normalizes") {
    SUBCASE("duplicates removed and occurrences sorted") {
        System s = make_system({{VarOcc(2), VarOcc(1, 1), VarOcc(2)}});
        REQUIRE(s[0].occs.size() == 2);
        CHECK(s[0].occs[0] == VarOcc(1, 1));
        CHECK(s[0].ref.index == 1);
    }
    SUBCASE("duplicate names") {
        std::vector<Equation> eqs{{{"A"}, {VarOcc(1)}}, {{"A"}, {VarOcc(1)}}};
        CHECK_THROWS_AS(System(eqs, 1), ModelError);
    }
    SUBCASE("base beyond variable count") {
        std::vector<Equation> eqs{{{"A"}, {VarOcc(3)}}};
        CHECK_THROWS_AS(System(eqs, 2), ModelError);
    }
}

TEST_CASE("class_of groups by the relation's fields") {
    auto shift_a = class_of(RelationKind::ShiftSimilar, VarOcc(1, 1, 0));
    auto shift_b = class_of(RelationKind::ShiftSimilar, VarOcc(1, 0, 0));
    REQUIRE(shift_a);
    CHECK(*shift_a == *shift_b);
    CHECK(shift_a->base == 1);
    CHECK(shift_a->shift == 0);
    CHECK_FALSE(shift_a->deriv);

    auto triv = class_of(RelationKind::Trivial, VarOcc(3));
    REQUIRE(triv);
    CHECK(triv->deriv == 0);
    CHECK(triv->shift == 0);
    CHECK(*triv != *class_of(RelationKind::Trivial, VarOcc(3, 1)));

    CHECK_FALSE(class_of(RelationKind::DiffSimilar, VarOcc(2, 0, -1)));
    CHECK(class_of(RelationKind::DiffSimilar, VarOcc(2, 3, 4)) == class_of(RelationKind::DiffSimilar, VarOcc(2, 3, 0)));

    CHECK(class_of(RelationKind::EqualDDAE, VarOcc(2, 0, -1)) == class_of(RelationKind::EqualDDAE, VarOcc(2, 3, 5)));
    CHECK(class_of(RelationKind::EqualDAE, VarOcc(2, 0)) == class_of(RelationKind::EqualDAE, VarOcc(2, 2)));

    CHECK(class_of(RelationKind::EqualRestricted, VarOcc(1, 1, 0)));
    CHECK_FALSE(class_of(RelationKind::EqualRestricted, VarOcc(1, 2, 0)));
    CHECK_FALSE(class_of(RelationKind::EqualRestricted, VarOcc(1, 0, -1)));
    CHECK_FALSE(class_of(RelationKind::EqualRestricted, VarOcc(1, 0, 1)));
}

TEST_CASE("apply_shift moves every occurrence of one equation") {
    System s = make_system({{VarOcc(1, 0, -1)}, {VarOcc(1, 1, 0), VarOcc(2, 0, -1)}});
    System a = apply_shift(s, 0, 1);
    CHECK(a[0].occs == std::vector<VarOcc>{VarOcc(1, 0, 0)});
    CHECK(a[0].ref.shift_count == 1);
    CHECK(a[1] == s[1]);

    System b = apply_shift(s, 1, 1);
    CHECK(b[1].occs == std::vector<VarOcc>{VarOcc(1, 1, 1), VarOcc(2, 0, 0)});

    CHECK(apply_shift(s, 1, 0) == s);
    CHECK_THROWS_AS(apply_shift(s, 2, 1), ModelError);
    CHECK_THROWS_AS(apply_shift(s, 0, -1), ModelError);
}

TEST_CASE("apply_diff adds the chain-rule closure") {
    System s = make_system({{VarOcc(1)}, {VarOcc(1, 1), VarOcc(2)}});
    System a = apply_diff(s, 0, 1);
    CHECK(a[0].occs == std::vector<VarOcc>{VarOcc(1, 0), VarOcc(1, 1)});
    CHECK(a[0].ref.diff_count == 1);

    System b = apply_diff(s, 1, 1);
    CHECK(b[1].occs == std::vector<VarOcc>{VarOcc(1, 1), VarOcc(1, 2), VarOcc(2, 0), VarOcc(2, 1)});

    System c = apply_diff(s, 0, 3);
    CHECK(c[0].occs.size() == 4);
    CHECK(c[0].ref.diff_count == 3);
    CHECK(apply_diff(s, 1, 0) == s);
}

TEST_CASE("term and class labels") {
    CHECK(term_string(VarOcc(1)) == "x1");
    CHECK(term_string(VarOcc(1, 1, -1)) == "x1'@-1");
    CHECK(term_string(VarOcc(2, 2, 3)) == "x2''@3");
    CHECK(term_string(VarOcc(2, 4)) == "x2^(4)");
    CHECK(class_label(*class_of(RelationKind::ShiftSimilar, VarOcc(1, 1, 0))) == "x1@0");
    CHECK(class_label(*class_of(RelationKind::DiffSimilar, VarOcc(3, 2, 1))) == "x3''");
    CHECK(class_label(*class_of(RelationKind::EqualDDAE, VarOcc(3, 2, 1))) == "x3");
    CHECK(class_label(*class_of(RelationKind::Trivial, VarOcc(3, 1, -1))) == "x3'@-1");
}

TEST_CASE("shift and diff updates commute") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        System s = testing::random_system(rng);
        std::uniform_int_distribution<std::size_t> eq(0, s.size() - 1);
        std::uniform_int_distribution<int> q(0, 2);
        std::size_t i = eq(rng), j = eq(rng);
        int qs = q(rng), qd = q(rng);
        System a = apply_diff(apply_shift(s, i, qs), j, qd);
        System b = apply_shift(apply_diff(s, j, qd), i, qs);
        CHECK(a == b);

        // Differentiation only adds, shifting is a bijection.
        System d = apply_diff(s, j, qd);
        for (const VarOcc& v : s[j].occs)
            CHECK(std::binary_search(d[j].occs.begin(), d[j].occs.end(), v));
        CHECK(apply_shift(s, i, qs)[i].occs.size() == s[i].occs.size());
    }
}
