#pragma once

#include "ivs/core_system.hpp"
#include "ivs/rational.hpp"

#include <string>
#include <vector>

namespace ivs {

/// A finite metric space given by its distance matrix. Construction checks
/// the metric axioms exhaustively:
///  - d(x,x) = 0
///  - d(x,y) > 0 for x != y
///  - d(x,y) = d(y,x)
///  - d(x,y) + d(y,z) >= d(x,z)
/// plus distinct, non-empty labels and a square shape. Violations raise
/// validation_error naming the offending pair or triple.
class DistanceMatrix {
public:
    static DistanceMatrix create(std::vector<std::string> elements,
                                 const std::vector<std::vector<Rational>>& matrix);

    const std::vector<std::string>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    /// Position of a label; throws unknown_label_error if absent.
    std::size_t position(const std::string& label) const;

    const Rational& at(std::size_t i, std::size_t j) const {
        return entries_[i * elements_.size() + j];
    }
    const Rational& distance(const std::string& a, const std::string& b) const {
        return at(position(a), position(b));
    }

    bool operator==(const DistanceMatrix&) const = default;

private:
    DistanceMatrix(std::vector<std::string> elements, std::vector<Rational> entries)
        : elements_(std::move(elements)), entries_(std::move(entries)) {}

    std::vector<std::string> elements_;
    std::vector<Rational> entries_; // row-major
};

/// Maps a distance into [0,1) by x -> x/(1+x). Monotone, subadditive, and
/// zero exactly at zero, so triangle inequalities survive the rescaling.
/// Requires x >= 0; throws domain_error otherwise.
Rational squash(const Rational& x);

/// Turns a metric space into an indexed system over the same elements with
/// index(x,y) = 1 - d(x,y)/(1 + d(x,y)). Distinct elements keep a strictly
/// positive distinction, so every index lands in (0,1].
FiniteIndexedSystem system_from_metric(const DistanceMatrix& m);

/// Reads a system's distinction D(x,y) = 1 - index(x,y) as a distance. The
/// construction axioms make D a metric outright, so this cannot fail.
DistanceMatrix metric_from_system(const FiniteIndexedSystem& s);

} // namespace ivs
