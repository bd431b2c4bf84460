#include "ivs/predicate_profile.hpp"

#include "ivs/errors.hpp"

#include <unordered_set>
#include <utility>

namespace ivs {

namespace {

void check_distinct(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) {
            throw validation_error(std::string("duplicate ") + what + " label \"" + label + "\"");
        }
    }
}

} // namespace

PredicateTable PredicateTable::create(std::vector<std::string> objects,
                                      std::vector<std::string> predicates,
                                      std::vector<std::vector<bool>> truth) {
    if (objects.empty()) {
        throw validation_error("a predicate table needs at least one object");
    }
    if (predicates.empty()) {
        throw validation_error("a predicate table needs at least one predicate");
    }
    check_distinct(objects, "object");
    check_distinct(predicates, "predicate");
    if (truth.size() != objects.size()) {
        throw validation_error("truth table has " + std::to_string(truth.size()) +
                               " rows for " + std::to_string(objects.size()) + " objects");
    }
    std::vector<bool> flat;
    flat.reserve(objects.size() * predicates.size());
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i].size() != predicates.size()) {
            throw validation_error("truth row for object \"" + objects[i] + "\" has " +
                                   std::to_string(truth[i].size()) + " entries for " +
                                   std::to_string(predicates.size()) + " predicates");
        }
        flat.insert(flat.end(), truth[i].begin(), truth[i].end());
    }
    return PredicateTable(std::move(objects), std::move(predicates), std::move(flat));
}

std::size_t PredicateTable::object_position(const std::string& label) const {
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        if (objects_[i] == label) return i;
    }
    throw unknown_label_error("unknown object \"" + label + "\"");
}

std::size_t PredicateTable::predicate_position(const std::string& label) const {
    for (std::size_t p = 0; p < predicates_.size(); ++p) {
        if (predicates_[p] == label) return p;
    }
    throw unknown_label_error("unknown predicate \"" + label + "\"");
}

std::vector<bool> PredicateTable::profile(std::size_t i) const {
    std::vector<bool> row(predicates_.size());
    for (std::size_t p = 0; p < predicates_.size(); ++p) {
        row[p] = holds(i, p);
    }
    return row;
}

Index compute_index(const PredicateTable& table, std::size_t i, std::size_t j) {
    long shared = 0;
    const std::size_t total = table.predicate_count();
    for (std::size_t p = 0; p < total; ++p) {
        if (table.shares(i, j, p)) ++shared;
    }
    return Index(Rational(shared, static_cast<long>(total)));
}

FiniteIndexedSystem build_system(const PredicateTable& table) {
    const std::size_t n = table.object_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (table.profile(i) == table.profile(j)) {
                throw mismatch_error("objects \"" + table.objects()[i] + "\" and \"" +
                                     table.objects()[j] +
                                     "\" have identical predicate profiles; the table cannot "
                                     "tell them apart");
            }
        }
    }
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        matrix[i][i] = Rational(1);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational r = compute_index(table, i, j).value();
            matrix[i][j] = r;
            matrix[j][i] = r;
        }
    }
    return FiniteIndexedSystem::create(table.objects(), matrix);
}

} // namespace ivs
