#pragma once

#include "ivs/core_system.hpp"
#include "ivs/rational.hpp"

#include <string>
#include <vector>

namespace ivs {

/// A finite table of objects described by boolean predicates. Row i records,
/// for each predicate, whether it holds of object i. The table is the raw
/// material for building an indexed system: two objects are as alike as the
/// fraction of predicates they agree on.
class PredicateTable {
public:
    /// Validates and builds a table. Requirements:
    ///  - at least one object and at least one predicate
    ///  - object labels distinct, predicate labels distinct
    ///  - truth has one row per object and one column per predicate
    /// Throws validation_error otherwise.
    static PredicateTable create(std::vector<std::string> objects,
                                 std::vector<std::string> predicates,
                                 std::vector<std::vector<bool>> truth);

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& predicates() const { return predicates_; }
    std::size_t object_count() const { return objects_.size(); }
    std::size_t predicate_count() const { return predicates_.size(); }

    /// Position of an object label; throws unknown_label_error if absent.
    std::size_t object_position(const std::string& label) const;
    /// Position of a predicate label; throws unknown_label_error if absent.
    std::size_t predicate_position(const std::string& label) const;

    /// Whether predicate p holds of object i.
    bool holds(std::size_t i, std::size_t p) const {
        return truth_[i * predicates_.size() + p];
    }

    /// Whether objects i and j agree on predicate p (both satisfy it or both
    /// fail it).
    bool shares(std::size_t i, std::size_t j, std::size_t p) const {
        return holds(i, p) == holds(j, p);
    }

    /// The full truth row of object i, in predicate order.
    std::vector<bool> profile(std::size_t i) const;

    bool operator==(const PredicateTable&) const = default;

private:
    PredicateTable(std::vector<std::string> objects, std::vector<std::string> predicates,
                   std::vector<bool> truth)
        : objects_(std::move(objects)), predicates_(std::move(predicates)),
          truth_(std::move(truth)) {}

    std::vector<std::string> objects_;
    std::vector<std::string> predicates_;
    std::vector<bool> truth_; // row-major, objects x predicates
};

/// The identity index of objects i and j in the table: the number of
/// predicates they agree on divided by the total number of predicates.
Index compute_index(const PredicateTable& table, std::size_t i, std::size_t j);

/// Builds the indexed system whose elements are the table's objects and whose
/// matrix is compute_index over all pairs. Two objects with identical truth
/// rows would get index 1 while carrying distinct labels, which no system
/// admits, so duplicate profiles are rejected up front with a mismatch_error
/// naming both objects.
FiniteIndexedSystem build_system(const PredicateTable& table);

} // namespace ivs
