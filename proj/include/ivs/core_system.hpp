#pragma once

#include "ivs/rational.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ivs {

class Distinction;

/// Degree of identity between two objects: an exact rational in [0,1].
/// 1 means "the same object"; values near 0 mean "almost nothing in common".
class Index {
public:
    explicit Index(Rational value);

    const Rational& value() const { return value_; }

    /// 1 - value. The two views are exact complements of each other.
    Distinction complement() const;

    static Index one() { return Index(Rational(1)); }
    static Index zero() { return Index(Rational(0)); }

    bool operator==(const Index& o) const { return value_ == o.value_; }
    bool operator!=(const Index& o) const { return value_ != o.value_; }
    bool operator<(const Index& o) const { return value_ < o.value_; }

private:
    Rational value_;
};

/// Degree of distinction between two objects: 1 - Index, also in [0,1].
class Distinction {
public:
    explicit Distinction(Rational value);

    const Rational& value() const { return value_; }

    /// 1 - value, back to the identity view.
    Index complement() const;

    bool operator==(const Distinction& o) const { return value_ == o.value_; }
    bool operator!=(const Distinction& o) const { return value_ != o.value_; }
    bool operator<(const Distinction& o) const { return value_ < o.value_; }

private:
    Rational value_;
};

/// A finite set of labelled elements together with a pairwise identity
/// index for every ordered pair. Construction validates every structural
/// requirement, so an instance can never exist in a broken state:
///
///   - the element list is non-empty and free of duplicates
///   - every entry lies in [0,1]
///   - the matrix is symmetric
///   - the diagonal is all 1, and distinct labels never have index 1
///   - (1-r(a,b)) + (1-r(b,c)) >= (1-r(a,c)) for every triple
///
/// Instances are immutable; all operations are pure and safe to call
/// concurrently.
class FiniteIndexedSystem {
public:
    /// Validating constructor. Throws validation_error with a witness
    /// in the message on the first violated requirement.
    static FiniteIndexedSystem create(std::vector<std::string> elements,
                                      const std::vector<std::vector<Rational>>& matrix);

    const std::vector<std::string>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    /// Row/column position of a label. Throws unknown_label_error.
    std::size_t position(std::string_view label) const;

    /// The unique r with a =r= b. Symmetric; index_of(a,a) is 1.
    Index index_of(std::string_view a, std::string_view b) const;

    /// 1 - index_of(a,b).
    Distinction distinction_of(std::string_view a, std::string_view b) const;

    Index index_at(std::size_t i, std::size_t j) const;
    Distinction distinction_at(std::size_t i, std::size_t j) const;

    /// The set R of distinct index values achieved by the matrix.
    /// Always contains 1 (the diagonal).
    std::set<Rational> index_set() const;

    bool operator==(const FiniteIndexedSystem& o) const {
        return elements_ == o.elements_ && entries_ == o.entries_;
    }

private:
    FiniteIndexedSystem(std::vector<std::string> elements, std::vector<Rational> entries);

    const Rational& at(std::size_t i, std::size_t j) const {
        return entries_[i * elements_.size() + j];
    }

    std::vector<std::string> elements_;
    std::vector<Rational> entries_; // row-major, size() x size()
    std::unordered_map<std::string, std::size_t> positions_;
};

} // namespace ivs
