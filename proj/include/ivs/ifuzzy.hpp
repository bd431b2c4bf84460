#pragma once

#include "ivs/core_system.hpp"
#include "ivs/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ivs {

/// A fuzzy set whose membership grades are themselves identity indices of the
/// base system: the grade at x must be achieved as index(y,x) for some
/// element y. Grades are stored in the base system's element order.
class IFuzzySet {
public:
    /// Validates and builds a set over a shared base system. Requirements:
    ///  - base is non-null
    ///  - one grade per base element
    ///  - every grade appears in its element's column of the base matrix
    /// Throws validation_error for the first two, mismatch_error for the
    /// third (naming the element and the stray grade).
    static IFuzzySet create(std::shared_ptr<const FiniteIndexedSystem> base,
                            std::vector<Rational> grades);

    const FiniteIndexedSystem& base() const { return *base_; }
    const std::shared_ptr<const FiniteIndexedSystem>& base_ptr() const { return base_; }
    const std::vector<Rational>& grades() const { return grades_; }

    const Rational& grade_at(std::size_t i) const { return grades_[i]; }
    /// Grade of a labelled element; throws unknown_label_error if absent.
    const Rational& grade(const std::string& label) const;

    /// Value equality: equal grade vectors over value-equal bases.
    bool operator==(const IFuzzySet& other) const;
    bool operator!=(const IFuzzySet& other) const { return !(*this == other); }

private:
    IFuzzySet(std::shared_ptr<const FiniteIndexedSystem> base, std::vector<Rational> grades)
        : base_(std::move(base)), grades_(std::move(grades)) {}

    std::shared_ptr<const FiniteIndexedSystem> base_;
    std::vector<Rational> grades_;
};

/// Pointwise maximum of grades. Both sets must live over the same base
/// system (same object or value-equal); throws mismatch_error otherwise.
IFuzzySet set_union(const IFuzzySet& f, const IFuzzySet& g);

/// Pointwise minimum of grades, with the same shared-base requirement.
IFuzzySet set_intersection(const IFuzzySet& f, const IFuzzySet& g);

/// Distance between sets: the largest pointwise grade gap,
/// max over x of |F(x) - G(x)|. Same shared-base requirement.
Distinction set_distinction(const IFuzzySet& f, const IFuzzySet& g);

/// Identity index between sets, 1 - set_distinction.
Index set_index(const IFuzzySet& f, const IFuzzySet& g);

/// Builds the indexed system whose elements are the given sets themselves,
/// with set_index as the matrix. Labels default to "S0", "S1", ... or may be
/// supplied (one per set). All sets must share one base; value-equal sets are
/// rejected up front with a mismatch_error naming the pair, since they would
/// claim index 1 under distinct labels.
FiniteIndexedSystem system_of_sets(const std::vector<IFuzzySet>& sets,
                                   std::vector<std::string> labels = {});

} // namespace ivs
