#include "ivs/core_system.hpp"
#include "ivs/errors.hpp"
#include "ivs/rational.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <set>
#include <string>
#include <vector>

using ivs::Distinction;
using ivs::FiniteIndexedSystem;
using ivs::Index;
using ivs::Rational;

namespace {

// The even/odd/prime system over {2, 3, 8}.
FiniteIndexedSystem arithmetic_system() {
    const Rational one(1), third(1, 3), two_thirds(2, 3), zero(0);
    return FiniteIndexedSystem::create({"2", "3", "8"}, {{one, third, two_thirds},
                                                         {third, one, zero},
                                                         {two_thirds, zero, one}});
}

} // namespace

TEST_SUITE("core_system") {

TEST_CASE("index and distinction stay inside the unit interval") {
    CHECK(Index(Rational(1, 2)).value() == Rational(1, 2));
    CHECK(Index::one().value() == Rational(1));
    CHECK(Index::zero().value() == Rational(0));
    CHECK_THROWS_AS(Index(Rational(-1, 3)), ivs::validation_error);
    CHECK_THROWS_AS(Index(Rational(4, 3)), ivs::validation_error);
    CHECK_THROWS_AS(Distinction(Rational(3, 2)), ivs::validation_error);
}

TEST_CASE("index and distinction are exact complements") {
    const Index r(Rational(2, 7));
    CHECK(r.complement().value() == Rational(5, 7));
    CHECK(r.complement().complement() == r);
    CHECK(Distinction(Rational(0)).complement() == Index::one());
}

TEST_CASE("a valid matrix is accepted and queryable") {
    const FiniteIndexedSystem s = arithmetic_system();
    CHECK(s.size() == 3);
    CHECK(s.elements() == std::vector<std::string>{"2", "3", "8"});
    CHECK(s.position("8") == 2);
    CHECK(s.index_of("2", "3").value() == Rational(1, 3));
    CHECK(s.index_of("3", "2").value() == Rational(1, 3));
    CHECK(s.index_of("8", "8").value() == Rational(1));
    CHECK(s.distinction_of("2", "3").value() == Rational(2, 3));
    CHECK(s.distinction_of("3", "8").value() == Rational(1));
    CHECK(s.distinction_of("2", "8").value() == Rational(1, 3));
    CHECK(s.index_at(0, 2).value() == Rational(2, 3));
    CHECK(s.distinction_at(1, 1).value() == Rational(0));
}

TEST_CASE("unknown labels are named in the error") {
    const FiniteIndexedSystem s = arithmetic_system();
    CHECK_THROWS_WITH_AS(s.position("9"), doctest::Contains("9"), ivs::unknown_label_error);
    CHECK_THROWS_AS(s.index_of("2", "9"), ivs::unknown_label_error);
}

TEST_CASE("the achieved index set is collected") {
    const std::set<Rational> expected{Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)};
    CHECK(arithmetic_system().index_set() == expected);
}

TEST_CASE("empty element lists are rejected") {
    CHECK_THROWS_AS(FiniteIndexedSystem::create({}, {}), ivs::validation_error);
}

TEST_CASE("duplicate labels are rejected") {
    const Rational one(1), half(1, 2);
    CHECK_THROWS_WITH_AS(
        FiniteIndexedSystem::create({"a", "a"}, {{one, half}, {half, one}}),
        doctest::Contains("duplicate"), ivs::validation_error);
}

TEST_CASE("shape mismatches are rejected") {
    const Rational one(1), half(1, 2);
    CHECK_THROWS_AS(FiniteIndexedSystem::create({"a", "b"}, {{one, half}}),
                    ivs::validation_error);
    CHECK_THROWS_AS(FiniteIndexedSystem::create({"a", "b"}, {{one, half}, {half}}),
                    ivs::validation_error);
}

TEST_CASE("entries outside the unit interval are rejected") {
    const Rational one(1);
    CHECK_THROWS_AS(
        FiniteIndexedSystem::create({"a", "b"}, {{one, Rational(3, 2)}, {Rational(3, 2), one}}),
        ivs::validation_error);
    CHECK_THROWS_AS(
        FiniteIndexedSystem::create({"a", "b"},
                                    {{one, Rational(-1, 2)}, {Rational(-1, 2), one}}),
        ivs::validation_error);
}

TEST_CASE("asymmetry is rejected with the offending pair") {
    const Rational one(1);
    CHECK_THROWS_WITH_AS(
        FiniteIndexedSystem::create({"a", "b"}, {{one, Rational(1, 2)}, {Rational(1, 3), one}}),
        doctest::Contains("a"), ivs::validation_error);
}

TEST_CASE("diagonal entries must be exactly 1") {
    CHECK_THROWS_AS(FiniteIndexedSystem::create({"a"}, {{Rational(9, 10)}}),
                    ivs::validation_error);
}

TEST_CASE("distinct labels with index 1 are rejected") {
    const Rational one(1);
    CHECK_THROWS_WITH_AS(FiniteIndexedSystem::create({"a", "b"}, {{one, one}, {one, one}}),
                         doctest::Contains("merge"), ivs::validation_error);
}

TEST_CASE("triangle violations are rejected with the witness triple") {
    // Distinctions 1/10, 1/10, 9/10: two near-identities cannot bridge a
    // large gap.
    const Rational one(1), close(9, 10), far(1, 10);
    CHECK_THROWS_WITH_AS(
        FiniteIndexedSystem::create(
            {"x", "y", "z"},
            {{one, close, far}, {close, one, close}, {far, close, one}}),
        doctest::Contains("x"), ivs::validation_error);
}

TEST_CASE("value equality compares labels and entries") {
    CHECK(arithmetic_system() == arithmetic_system());
    const Rational one(1), half(1, 2);
    const FiniteIndexedSystem a =
        FiniteIndexedSystem::create({"a", "b"}, {{one, half}, {half, one}});
    const FiniteIndexedSystem b =
        FiniteIndexedSystem::create({"b", "a"}, {{one, half}, {half, one}});
    CHECK_FALSE(a == b);
}

TEST_CASE("generated systems always satisfy the construction checks") {
    gen::Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        const FiniteIndexedSystem s = gen::system(rng, gen::pick_size(rng, 1, 9));
        for (std::size_t a = 0; a < s.size(); ++a) {
            CHECK(s.index_at(a, a).value() == Rational(1));
            for (std::size_t b = 0; b < s.size(); ++b) {
                CHECK(s.index_at(a, b) == s.index_at(b, a));
            }
        }
    }
}

} // TEST_SUITE
