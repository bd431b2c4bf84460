#pragma once

#include "ivs/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ivs {

/// Untrusted staging type: a labelled square matrix of rationals with no
/// semantic requirements at all. The only structural requirement is that
/// the matrix is square and matches the number of labels.
class CandidateMatrix {
public:
    CandidateMatrix(std::vector<std::string> elements,
                    std::vector<std::vector<Rational>> entries);

    const std::vector<std::string>& elements() const { return elements_; }
    const std::vector<std::vector<Rational>>& entries() const { return entries_; }
    std::size_t size() const { return elements_.size(); }
    const Rational& entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }

    bool operator==(const CandidateMatrix& o) const {
        return elements_ == o.elements_ && entries_ == o.entries_;
    }

private:
    std::vector<std::string> elements_;
    std::vector<std::vector<Rational>> entries_;
};

/// The offending labels and entries behind a failed check. Replaying the
/// labels/values against the matrix reproduces the violation arithmetically.
struct Witness {
    std::vector<std::string> labels;
    std::vector<Rational> values;
    std::string detail;

    bool operator==(const Witness& o) const {
        return labels == o.labels && values == o.values && detail == o.detail;
    }
};

struct Verdict {
    std::string axiom;
    bool passed = false;
    std::string note; // e.g. "holds structurally" for checks that cannot fail
    std::vector<Witness> witnesses;

    bool operator==(const Verdict& o) const {
        return axiom == o.axiom && passed == o.passed && note == o.note &&
               witnesses == o.witnesses;
    }
};

/// Per-axiom verdicts for one audited matrix. Every failed verdict carries
/// at least one witness; passed verdicts carry none.
struct AxiomReport {
    std::vector<Verdict> verdicts;

    bool all_passed() const;

    /// Lookup by axiom id ("F3", "M2", ...). Throws domain_error if absent.
    const Verdict& verdict(std::string_view axiom) const;

    bool operator==(const AxiomReport& o) const { return verdicts == o.verdicts; }
};

/// Audits a candidate against the seven structural requirements of an
/// indexed variables system (F1..F7). All checks are exhaustive; failure
/// witnesses are the lexicographically first violation found.
AxiomReport audit(const CandidateMatrix& c);

/// Audits a candidate against the four metric axioms (M1 zero diagonal,
/// M2 positivity, M3 symmetry, M4 triangle inequality).
AxiomReport audit_metric(const CandidateMatrix& c);

} // namespace ivs
