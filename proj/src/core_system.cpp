#include "ivs/core_system.hpp"

#include "ivs/errors.hpp"

#include <utility>

namespace ivs {

namespace {

const Rational kZero(0);
const Rational kOne(1);

void check_unit_interval(const Rational& r, const std::string& what) {
    if (r < kZero || r > kOne) {
        throw validation_error(what + " is " + r.str() + ", outside [0,1]");
    }
}

} // namespace

Index::Index(Rational value) : value_(std::move(value)) {
    check_unit_interval(value_, "index");
}

Distinction Index::complement() const {
    return Distinction(kOne - value_);
}

Distinction::Distinction(Rational value) : value_(std::move(value)) {
    check_unit_interval(value_, "distinction");
}

Index Distinction::complement() const {
    return Index(kOne - value_);
}

FiniteIndexedSystem::FiniteIndexedSystem(std::vector<std::string> elements,
                                         std::vector<Rational> entries)
    : elements_(std::move(elements)), entries_(std::move(entries)) {
    positions_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        positions_.emplace(elements_[i], i);
    }
}

FiniteIndexedSystem FiniteIndexedSystem::create(std::vector<std::string> elements,
                                                const std::vector<std::vector<Rational>>& matrix) {
    const std::size_t n = elements.size();
    if (n == 0) {
        throw validation_error("element list is empty");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (elements[i] == elements[j]) {
                throw validation_error("duplicate element label \"" + elements[i] + "\"");
            }
        }
    }
    if (matrix.size() != n) {
        throw validation_error("matrix has " + std::to_string(matrix.size()) +
                               " rows for " + std::to_string(n) + " elements");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) {
            throw validation_error("matrix row " + std::to_string(i) + " has " +
                                   std::to_string(matrix[i].size()) + " entries, expected " +
                                   std::to_string(n));
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            check_unit_interval(matrix[i][j],
                                "index of (" + elements[i] + ", " + elements[j] + ")");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (matrix[i][j] != matrix[j][i]) {
                throw validation_error("matrix is not symmetric at (" + elements[i] + ", " +
                                       elements[j] + "): " + matrix[i][j].str() + " vs " +
                                       matrix[j][i].str());
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i][i] != kOne) {
            throw validation_error("diagonal index of " + elements[i] + " is " +
                                   matrix[i][i].str() + ", must be 1");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (matrix[i][j] == kOne) {
                throw validation_error("distinct labels " + elements[i] + " and " + elements[j] +
                                       " have index 1; merge them into a single label");
            }
        }
    }

    // Triangle requirement on distinctions, exhaustive over triples.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Rational lhs = (kOne - matrix[i][j]) + (kOne - matrix[j][k]);
                const Rational rhs = kOne - matrix[i][k];
                if (lhs < rhs) {
                    throw validation_error(
                        "triangle violation on (" + elements[i] + ", " + elements[j] + ", " +
                        elements[k] + "): " + (kOne - matrix[i][j]).str() + " + " +
                        (kOne - matrix[j][k]).str() + " < " + rhs.str());
                }
            }
        }
    }

    std::vector<Rational> flat;
    flat.reserve(n * n);
    for (const auto& row : matrix) {
        for (const auto& r : row) flat.push_back(r);
    }
    return FiniteIndexedSystem(std::move(elements), std::move(flat));
}

std::size_t FiniteIndexedSystem::position(std::string_view label) const {
    auto it = positions_.find(std::string(label));
    if (it == positions_.end()) {
        throw unknown_label_error("unknown element label \"" + std::string(label) + "\"");
    }
    return it->second;
}

Index FiniteIndexedSystem::index_of(std::string_view a, std::string_view b) const {
    return Index(at(position(a), position(b)));
}

Distinction FiniteIndexedSystem::distinction_of(std::string_view a, std::string_view b) const {
    return index_of(a, b).complement();
}

Index FiniteIndexedSystem::index_at(std::size_t i, std::size_t j) const {
    return Index(at(i, j));
}

Distinction FiniteIndexedSystem::distinction_at(std::size_t i, std::size_t j) const {
    return Distinction(kOne - at(i, j));
}

std::set<Rational> FiniteIndexedSystem::index_set() const {
    return std::set<Rational>(entries_.begin(), entries_.end());
}

} // namespace ivs
