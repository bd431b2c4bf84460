#pragma once

#include "ivs/core_system.hpp"
#include "ivs/ifuzzy.hpp"
#include "ivs/predicate_profile.hpp"
#include "ivs/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ivs {

/// The extension S of a predicate P over a system's elements: the subset of
/// elements that satisfy P. P itself is carried extensionally, as this
/// member list.
class PredicateExtension {
public:
    /// Validates and builds an extension. Requirements:
    ///  - base is non-null
    ///  - members non-empty (a smallest-distance query over nothing has no
    ///    defined answer, so we refuse rather than pick a convention)
    ///  - every member is a base element
    /// Repeated members are collapsed; the stored list follows base element
    /// order. Throws validation_error or unknown_label_error.
    static PredicateExtension create(std::shared_ptr<const FiniteIndexedSystem> base,
                                     const std::vector<std::string>& members);

    /// Reads the extension of one predicate off a table: the objects whose
    /// row is true in that column. The base system must share the table's
    /// object labels; throws mismatch_error otherwise, unknown_label_error
    /// for an unknown predicate, and validation_error when no object
    /// satisfies the predicate.
    static PredicateExtension from_table(std::shared_ptr<const FiniteIndexedSystem> base,
                                         const PredicateTable& table,
                                         const std::string& predicate);

    const FiniteIndexedSystem& base() const { return *base_; }
    const std::shared_ptr<const FiniteIndexedSystem>& base_ptr() const { return base_; }
    /// Member labels in base element order.
    const std::vector<std::string>& members() const { return members_; }
    /// Member positions within the base, ascending.
    const std::vector<std::size_t>& member_positions() const { return positions_; }

    bool contains(const std::string& label) const;

    bool operator==(const PredicateExtension& other) const;

private:
    PredicateExtension(std::shared_ptr<const FiniteIndexedSystem> base,
                       std::vector<std::string> members, std::vector<std::size_t> positions)
        : base_(std::move(base)), members_(std::move(members)), positions_(std::move(positions)) {}

    std::shared_ptr<const FiniteIndexedSystem> base_;
    std::vector<std::string> members_;
    std::vector<std::size_t> positions_;
};

/// Distance from an element to the extension: the smallest distinction
/// between x and any member. On a finite system the infimum is attained, so
/// this is an honest minimum. Throws unknown_label_error for a foreign x.
Distinction distinction_to_set(const PredicateExtension& ext, const std::string& x);

/// The degree to which x satisfies the predicate: 1 - distinction_to_set.
/// Members score exactly 1.
Index index_to_set(const PredicateExtension& ext, const std::string& x);

/// The graded extension of a predicate: every element's satisfaction degree,
/// plus whether those degrees qualify as an i-fuzzy set over the base (each
/// grade must be pairwise-achieved). The minimum defining each grade is
/// attained at some member, so the flag is expected to hold on every finite
/// system; it is computed rather than assumed.
struct IndexedExtension {
    /// Satisfaction degrees in base element order.
    std::vector<Rational> grades;
    /// True when every grade is achieved pairwise against its element.
    bool membership_constraint_holds = false;
    /// Engaged exactly when the constraint holds.
    std::optional<IFuzzySet> as_ifuzzy;

    bool operator==(const IndexedExtension&) const = default;
};

IndexedExtension indexed_extension(const PredicateExtension& ext);

} // namespace ivs
