#pragma once

#include <stdexcept>
#include <string>

namespace ivs {

/// Base class for every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Semantic violations: unknown labels, broken invariants, mismatched domains.
/// The CLI maps these to exit code 1.
class domain_error : public error {
public:
    using error::error;
};

/// A label (element, object, predicate) that is not part of the structure
/// it was looked up in. The message names the missing label.
class unknown_label_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// A structure failed construction-time validation (axiom violation,
/// duplicate label, shape mismatch, metric violation, ...).
class validation_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// Two i-fuzzy sets do not share the same base system.
class mismatch_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// Malformed document text: syntax, schema, or range problems.
/// The CLI maps these to exit code 2.
class parse_error : public error {
public:
    using error::error;
};

} // namespace ivs
