#include "ivs/errors.hpp"
#include "ivs/predicate_indexing.hpp"
#include "ivs/predicate_profile.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <memory>
#include <vector>

using ivs::FiniteIndexedSystem;
using ivs::PredicateExtension;
using ivs::PredicateTable;
using ivs::Rational;

namespace {

std::shared_ptr<const FiniteIndexedSystem> arithmetic_base() {
    const Rational one(1), third(1, 3), two_thirds(2, 3), zero(0);
    return std::make_shared<const FiniteIndexedSystem>(
        FiniteIndexedSystem::create({"2", "3", "8"}, {{one, third, two_thirds},
                                                      {third, one, zero},
                                                      {two_thirds, zero, one}}));
}

} // namespace

TEST_SUITE("predicate_indexing") {

TEST_CASE("distance to a set is the closest member") {
    const PredicateExtension evens = PredicateExtension::create(arithmetic_base(), {"2", "8"});
    CHECK(ivs::distinction_to_set(evens, "3").value() == Rational(2, 3));
    CHECK(ivs::index_to_set(evens, "3").value() == Rational(1, 3));
    CHECK(ivs::distinction_to_set(evens, "2").value() == Rational(0));
    CHECK(ivs::index_to_set(evens, "2").value() == Rational(1));
}

TEST_CASE("a singleton set reduces to pairwise distinction") {
    const PredicateExtension s = PredicateExtension::create(arithmetic_base(), {"3"});
    CHECK(ivs::distinction_to_set(s, "8").value() == Rational(1));
    CHECK(ivs::index_to_set(s, "8").value() == Rational(0));
    CHECK(ivs::distinction_to_set(s, "2").value() == Rational(2, 3));
}

TEST_CASE("members are stored deduplicated in base order") {
    const PredicateExtension e =
        PredicateExtension::create(arithmetic_base(), {"8", "2", "8", "2"});
    CHECK(e.members() == std::vector<std::string>{"2", "8"});
    CHECK(e.member_positions() == std::vector<std::size_t>{0, 2});
    CHECK(e.contains("2"));
    CHECK_FALSE(e.contains("3"));
}

TEST_CASE("empty or foreign member lists are rejected") {
    CHECK_THROWS_WITH_AS(PredicateExtension::create(arithmetic_base(), {}),
                         doctest::Contains("undefined"), ivs::validation_error);
    CHECK_THROWS_AS(PredicateExtension::create(arithmetic_base(), {"2", "9"}),
                    ivs::unknown_label_error);
    CHECK_THROWS_AS(PredicateExtension::create(nullptr, {"2"}), ivs::validation_error);
    const PredicateExtension e = PredicateExtension::create(arithmetic_base(), {"2"});
    CHECK_THROWS_AS(ivs::distinction_to_set(e, "9"), ivs::unknown_label_error);
}

TEST_CASE("extensions can be separated from a table column") {
    const PredicateTable t = PredicateTable::create(
        {"2", "3", "8"}, {"even", "odd", "prime"},
        {{true, false, true}, {false, true, true}, {true, false, false}});
    auto base = std::make_shared<const FiniteIndexedSystem>(ivs::build_system(t));

    const PredicateExtension evens = PredicateExtension::from_table(base, t, "even");
    CHECK(evens.members() == std::vector<std::string>{"2", "8"});

    const PredicateExtension odds = PredicateExtension::from_table(base, t, "odd");
    CHECK(odds.members() == std::vector<std::string>{"3"});

    CHECK_THROWS_AS(PredicateExtension::from_table(base, t, "negative"),
                    ivs::unknown_label_error);

    const PredicateTable never = PredicateTable::create(
        {"a", "b"}, {"p", "q"}, {{false, true}, {false, false}});
    auto never_base = std::make_shared<const FiniteIndexedSystem>(ivs::build_system(never));
    CHECK_THROWS_WITH_AS(PredicateExtension::from_table(never_base, never, "p"),
                         doctest::Contains("empty"), ivs::validation_error);

    CHECK_THROWS_AS(PredicateExtension::from_table(arithmetic_base(), never, "q"),
                    ivs::mismatch_error);
}

TEST_CASE("graded extensions reproduce the worked values") {
    const PredicateExtension evens = PredicateExtension::create(arithmetic_base(), {"2", "8"});
    const ivs::IndexedExtension ge = ivs::indexed_extension(evens);
    CHECK(ge.grades == std::vector<Rational>{Rational(1), Rational(1, 3), Rational(1)});
    CHECK(ge.membership_constraint_holds);
    REQUIRE(ge.as_ifuzzy.has_value());
    CHECK(ge.as_ifuzzy->grade("3") == Rational(1, 3));

    const PredicateExtension three = PredicateExtension::create(arithmetic_base(), {"3"});
    const ivs::IndexedExtension g3 = ivs::indexed_extension(three);
    CHECK(g3.grades == std::vector<Rational>{Rational(1, 3), Rational(1), Rational(0)});

    const PredicateExtension all =
        PredicateExtension::create(arithmetic_base(), {"2", "3", "8"});
    for (const auto& grade : ivs::indexed_extension(all).grades) {
        CHECK(grade == Rational(1));
    }
}

TEST_CASE("members always score full satisfaction") {
    gen::Rng rng(61);
    for (int i = 0; i < 100; ++i) {
        auto base = gen::shared_system(rng, gen::pick_size(rng, 2, 9));
        std::vector<std::string> members;
        for (const auto& label : base->elements()) {
            if (gen::coin(rng)) {
                members.push_back(label);
            }
        }
        if (members.empty()) {
            members.push_back(base->elements().front());
        }
        const PredicateExtension e = PredicateExtension::create(base, members);
        for (const auto& m : e.members()) {
            CHECK(ivs::index_to_set(e, m).value() == Rational(1));
        }
    }
}

TEST_CASE("growing the set can only shrink distances") {
    gen::Rng rng(62);
    for (int i = 0; i < 100; ++i) {
        auto base = gen::shared_system(rng, gen::pick_size(rng, 2, 9));
        std::vector<std::string> small, large;
        for (const auto& label : base->elements()) {
            const long roll = gen::pick(rng, 0, 2);
            if (roll == 2) {
                small.push_back(label);
            }
            if (roll >= 1) {
                large.push_back(label);
            }
        }
        if (small.empty()) {
            small.push_back(base->elements().front());
        }
        if (large.size() < small.size()) {
            large = small;
        }
        for (const auto& l : small) {
            if (std::find(large.begin(), large.end(), l) == large.end()) {
                large.push_back(l);
            }
        }
        const PredicateExtension se = PredicateExtension::create(base, small);
        const PredicateExtension le = PredicateExtension::create(base, large);
        for (const auto& x : base->elements()) {
            CHECK(ivs::distinction_to_set(le, x).value() <=
                  ivs::distinction_to_set(se, x).value());
        }
    }
}

TEST_CASE("set distance is 1-Lipschitz in its element") {
    gen::Rng rng(63);
    for (int i = 0; i < 100; ++i) {
        auto base = gen::shared_system(rng, gen::pick_size(rng, 2, 9));
        std::vector<std::string> members{base->elements().front()};
        for (const auto& label : base->elements()) {
            if (gen::coin(rng)) {
                members.push_back(label);
            }
        }
        const PredicateExtension e = PredicateExtension::create(base, members);
        for (const auto& x : base->elements()) {
            for (const auto& y : base->elements()) {
                const Rational dx = ivs::distinction_to_set(e, x).value();
                const Rational dy = ivs::distinction_to_set(e, y).value();
                const Rational gap = dx < dy ? dy - dx : dx - dy;
                CHECK(gap <= base->distinction_of(x, y).value());
            }
        }
    }
}

TEST_CASE("set distances match the scan-everything oracle") {
    gen::Rng rng(64);
    for (int i = 0; i < 200; ++i) {
        auto base = gen::shared_system(rng, gen::pick_size(rng, 1, 9));
        std::vector<std::string> members;
        for (const auto& label : base->elements()) {
            if (gen::coin(rng)) {
                members.push_back(label);
            }
        }
        if (members.empty()) {
            members.push_back(base->elements().back());
        }
        const PredicateExtension e = PredicateExtension::create(base, members);
        for (const auto& x : base->elements()) {
            CHECK(ivs::distinction_to_set(e, x).value() == oracle::min_distinction(e, x));
        }
    }
}

TEST_CASE("graded extensions of finite systems stay i-fuzzy") {
    gen::Rng rng(65);
    for (int i = 0; i < 100; ++i) {
        auto base = gen::shared_system(rng, gen::pick_size(rng, 1, 9));
        std::vector<std::string> members{base->elements().front()};
        for (const auto& label : base->elements()) {
            if (gen::coin(rng)) {
                members.push_back(label);
            }
        }
        const ivs::IndexedExtension ge =
            ivs::indexed_extension(PredicateExtension::create(base, members));
        CHECK(ge.membership_constraint_holds);
        CHECK(ge.as_ifuzzy.has_value());
    }
}

} // TEST_SUITE
