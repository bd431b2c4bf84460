#include "ivs/ifuzzy.hpp"

#include "ivs/errors.hpp"

#include <algorithm>
#include <utility>

namespace ivs {

namespace {

const Rational kOne(1);

void require_same_base(const IFuzzySet& f, const IFuzzySet& g, const char* op) {
    if (f.base_ptr() == g.base_ptr()) return;
    if (f.base() == g.base()) return;
    throw mismatch_error(std::string(op) + " needs both sets over the same base system");
}

} // namespace

IFuzzySet IFuzzySet::create(std::shared_ptr<const FiniteIndexedSystem> base,
                            std::vector<Rational> grades) {
    if (!base) {
        throw validation_error("an i-fuzzy set needs a base system");
    }
    const std::size_t n = base->size();
    if (grades.size() != n) {
        throw validation_error("got " + std::to_string(grades.size()) + " grades for " +
                               std::to_string(n) + " base elements");
    }
    for (std::size_t x = 0; x < n; ++x) {
        bool achieved = false;
        for (std::size_t y = 0; y < n && !achieved; ++y) {
            achieved = base->index_at(y, x).value() == grades[x];
        }
        if (!achieved) {
            throw mismatch_error("grade " + grades[x].str() + " at \"" + base->elements()[x] +
                                 "\" is not an index any element attains against it");
        }
    }
    return IFuzzySet(std::move(base), std::move(grades));
}

const Rational& IFuzzySet::grade(const std::string& label) const {
    return grades_[base_->position(label)];
}

bool IFuzzySet::operator==(const IFuzzySet& other) const {
    return grades_ == other.grades_ && (base_ == other.base_ || *base_ == *other.base_);
}

IFuzzySet set_union(const IFuzzySet& f, const IFuzzySet& g) {
    require_same_base(f, g, "union");
    std::vector<Rational> grades(f.grades().size());
    for (std::size_t x = 0; x < grades.size(); ++x) {
        grades[x] = std::max(f.grade_at(x), g.grade_at(x));
    }
    return IFuzzySet::create(f.base_ptr(), std::move(grades));
}

IFuzzySet set_intersection(const IFuzzySet& f, const IFuzzySet& g) {
    require_same_base(f, g, "intersection");
    std::vector<Rational> grades(f.grades().size());
    for (std::size_t x = 0; x < grades.size(); ++x) {
        grades[x] = std::min(f.grade_at(x), g.grade_at(x));
    }
    return IFuzzySet::create(f.base_ptr(), std::move(grades));
}

Distinction set_distinction(const IFuzzySet& f, const IFuzzySet& g) {
    require_same_base(f, g, "distance");
    Rational best(0);
    for (std::size_t x = 0; x < f.grades().size(); ++x) {
        best = std::max(best, abs(f.grade_at(x) - g.grade_at(x)));
    }
    return Distinction(best);
}

Index set_index(const IFuzzySet& f, const IFuzzySet& g) {
    return set_distinction(f, g).complement();
}

FiniteIndexedSystem system_of_sets(const std::vector<IFuzzySet>& sets,
                                   std::vector<std::string> labels) {
    if (sets.empty()) {
        throw validation_error("a system of sets needs at least one set");
    }
    if (labels.empty()) {
        labels.reserve(sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) {
            labels.push_back("S" + std::to_string(i));
        }
    } else if (labels.size() != sets.size()) {
        throw validation_error("got " + std::to_string(labels.size()) + " labels for " +
                               std::to_string(sets.size()) + " sets");
    }
    for (std::size_t i = 1; i < sets.size(); ++i) {
        require_same_base(sets[0], sets[i], "a system of sets");
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (sets[i] == sets[j]) {
                throw mismatch_error("sets \"" + labels[i] + "\" and \"" + labels[j] +
                                     "\" have identical grades; merge them into a single set");
            }
        }
    }
    const std::size_t n = sets.size();
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        matrix[i][i] = kOne;
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational r = set_index(sets[i], sets[j]).value();
            matrix[i][j] = r;
            matrix[j][i] = r;
        }
    }
    return FiniteIndexedSystem::create(std::move(labels), matrix);
}

} // namespace ivs
