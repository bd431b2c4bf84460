#include "ivs/metric_bridge.hpp"

#include "ivs/errors.hpp"

#include <unordered_set>
#include <utility>

namespace ivs {

namespace {

const Rational kZero(0);
const Rational kOne(1);

} // namespace

DistanceMatrix DistanceMatrix::create(std::vector<std::string> elements,
                                      const std::vector<std::vector<Rational>>& matrix) {
    if (elements.empty()) {
        throw validation_error("a metric space needs at least one element");
    }
    {
        std::unordered_set<std::string> seen;
        for (const auto& label : elements) {
            if (!seen.insert(label).second) {
                throw validation_error("duplicate element label \"" + label + "\"");
            }
        }
    }
    const std::size_t n = elements.size();
    if (matrix.size() != n) {
        throw validation_error("distance matrix has " + std::to_string(matrix.size()) +
                               " rows for " + std::to_string(n) + " elements");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) {
            throw validation_error("distance matrix row for \"" + elements[i] + "\" has " +
                                   std::to_string(matrix[i].size()) + " entries, expected " +
                                   std::to_string(n));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i][i] != kZero) {
            throw validation_error("d(" + elements[i] + "," + elements[i] + ") = " +
                                   matrix[i][i].str() + ", must be 0");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (matrix[i][j] <= kZero) {
                throw validation_error("d(" + elements[i] + "," + elements[j] + ") = " +
                                       matrix[i][j].str() + ", must be > 0 for distinct elements");
            }
            if (matrix[j][i] <= kZero) {
                throw validation_error("d(" + elements[j] + "," + elements[i] + ") = " +
                                       matrix[j][i].str() + ", must be > 0 for distinct elements");
            }
            if (matrix[i][j] != matrix[j][i]) {
                throw validation_error("d(" + elements[i] + "," + elements[j] + ") = " +
                                       matrix[i][j].str() + " but d(" + elements[j] + "," +
                                       elements[i] + ") = " + matrix[j][i].str() +
                                       "; a metric is symmetric");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (matrix[i][j] + matrix[j][k] < matrix[i][k]) {
                    throw validation_error(
                        "triangle inequality fails: d(" + elements[i] + "," + elements[j] +
                        ") + d(" + elements[j] + "," + elements[k] + ") = " +
                        (matrix[i][j] + matrix[j][k]).str() + " < d(" + elements[i] + "," +
                        elements[k] + ") = " + matrix[i][k].str());
                }
            }
        }
    }
    std::vector<Rational> flat;
    flat.reserve(n * n);
    for (const auto& row : matrix) {
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return DistanceMatrix(std::move(elements), std::move(flat));
}

std::size_t DistanceMatrix::position(const std::string& label) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] == label) return i;
    }
    throw unknown_label_error("unknown element \"" + label + "\"");
}

Rational squash(const Rational& x) {
    if (x < kZero) {
        throw domain_error("squash needs a non-negative input, got " + x.str());
    }
    return x / (kOne + x);
}

FiniteIndexedSystem system_from_metric(const DistanceMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            matrix[i][j] = kOne - squash(m.at(i, j));
        }
    }
    return FiniteIndexedSystem::create(m.elements(), matrix);
}

DistanceMatrix metric_from_system(const FiniteIndexedSystem& s) {
    const std::size_t n = s.size();
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            matrix[i][j] = s.distinction_at(i, j).value();
        }
    }
    return DistanceMatrix::create(s.elements(), matrix);
}

} // namespace ivs
