#include "ivs/predicate_indexing.hpp"

#include "ivs/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace ivs {

PredicateExtension PredicateExtension::create(std::shared_ptr<const FiniteIndexedSystem> base,
                                              const std::vector<std::string>& members) {
    if (!base) {
        throw validation_error("an extension needs a base system");
    }
    if (members.empty()) {
        throw validation_error("an extension needs at least one member; the distance to an "
                               "empty set is undefined");
    }
    std::set<std::size_t> positions;
    for (const auto& label : members) {
        positions.insert(base->position(label));
    }
    std::vector<std::size_t> ordered(positions.begin(), positions.end());
    std::vector<std::string> labels;
    labels.reserve(ordered.size());
    for (std::size_t p : ordered) {
        labels.push_back(base->elements()[p]);
    }
    return PredicateExtension(std::move(base), std::move(labels), std::move(ordered));
}

PredicateExtension PredicateExtension::from_table(std::shared_ptr<const FiniteIndexedSystem> base,
                                                  const PredicateTable& table,
                                                  const std::string& predicate) {
    if (!base) {
        throw validation_error("an extension needs a base system");
    }
    if (base->elements() != table.objects()) {
        throw mismatch_error("the base system's elements do not match the table's objects");
    }
    const std::size_t p = table.predicate_position(predicate);
    std::vector<std::string> members;
    for (std::size_t i = 0; i < table.object_count(); ++i) {
        if (table.holds(i, p)) {
            members.push_back(table.objects()[i]);
        }
    }
    if (members.empty()) {
        throw validation_error("no object satisfies \"" + predicate +
                               "\"; the extension would be empty");
    }
    return create(std::move(base), members);
}

bool PredicateExtension::contains(const std::string& label) const {
    return std::find(members_.begin(), members_.end(), label) != members_.end();
}

bool PredicateExtension::operator==(const PredicateExtension& other) const {
    return members_ == other.members_ &&
           (base_ == other.base_ || *base_ == *other.base_);
}

Distinction distinction_to_set(const PredicateExtension& ext, const std::string& x) {
    const std::size_t xi = ext.base().position(x);
    Rational best = ext.base().distinction_at(xi, ext.member_positions().front()).value();
    for (std::size_t p : ext.member_positions()) {
        best = std::min(best, ext.base().distinction_at(xi, p).value());
    }
    return Distinction(best);
}

Index index_to_set(const PredicateExtension& ext, const std::string& x) {
    return distinction_to_set(ext, x).complement();
}

IndexedExtension indexed_extension(const PredicateExtension& ext) {
    const FiniteIndexedSystem& base = ext.base();
    const std::size_t n = base.size();
    std::vector<Rational> grades;
    grades.reserve(n);
    for (const auto& label : base.elements()) {
        grades.push_back(index_to_set(ext, label).value());
    }

    bool achieved_everywhere = true;
    for (std::size_t x = 0; x < n && achieved_everywhere; ++x) {
        bool achieved = false;
        for (std::size_t y = 0; y < n && !achieved; ++y) {
            achieved = base.index_at(y, x).value() == grades[x];
        }
        achieved_everywhere = achieved;
    }

    IndexedExtension result;
    result.grades = grades;
    result.membership_constraint_holds = achieved_everywhere;
    if (achieved_everywhere) {
        result.as_ifuzzy = IFuzzySet::create(ext.base_ptr(), std::move(grades));
    }
    return result;
}

} // namespace ivs
