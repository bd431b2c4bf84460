#include "ivs/axiom_verifier.hpp"

#include "ivs/errors.hpp"

#include <utility>

namespace ivs {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool in_unit_interval(const Rational& r) {
    return r >= kZero && r <= kOne;
}

} // namespace

CandidateMatrix::CandidateMatrix(std::vector<std::string> elements,
                                 std::vector<std::vector<Rational>> entries)
    : elements_(std::move(elements)), entries_(std::move(entries)) {
    if (entries_.size() != elements_.size()) {
        throw validation_error("candidate matrix has " + std::to_string(entries_.size()) +
                               " rows for " + std::to_string(elements_.size()) + " labels");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].size() != elements_.size()) {
            throw validation_error("candidate matrix row " + std::to_string(i) + " has " +
                                   std::to_string(entries_[i].size()) + " entries, expected " +
                                   std::to_string(elements_.size()));
        }
    }
}

bool AxiomReport::all_passed() const {
    for (const auto& v : verdicts) {
        if (!v.passed) return false;
    }
    return true;
}

const Verdict& AxiomReport::verdict(std::string_view axiom) const {
    for (const auto& v : verdicts) {
        if (v.axiom == axiom) return v;
    }
    throw domain_error("no verdict for axiom \"" + std::string(axiom) + "\" in report");
}

AxiomReport audit(const CandidateMatrix& c) {
    const auto& labels = c.elements();
    const std::size_t n = c.size();
    AxiomReport report;

    // F1: non-empty element set.
    {
        Verdict v;
        v.axiom = "F1";
        v.passed = n > 0;
        if (!v.passed) {
            v.witnesses.push_back({{}, {}, "the element list is empty"});
        }
        report.verdicts.push_back(std::move(v));
    }

    // F2: every entry in [0,1], and the index 1 is achieved on the diagonal.
    {
        Verdict v;
        v.axiom = "F2";
        v.passed = true;
        for (std::size_t i = 0; i < n && v.passed; ++i) {
            for (std::size_t j = 0; j < n && v.passed; ++j) {
                if (!in_unit_interval(c.entry(i, j))) {
                    v.passed = false;
                    v.witnesses.push_back({{labels[i], labels[j]},
                                           {c.entry(i, j)},
                                           "entry " + c.entry(i, j).str() + " lies outside [0,1]"});
                }
            }
        }
        if (v.passed) {
            bool has_one = false;
            for (std::size_t i = 0; i < n && !has_one; ++i) {
                has_one = c.entry(i, i) == kOne;
            }
            if (!has_one) {
                v.passed = false;
                v.witnesses.push_back({{}, {}, "no diagonal entry equals 1, so 1 is not achieved"});
            }
        }
        report.verdicts.push_back(std::move(v));
    }

    // F3: symmetry.
    {
        Verdict v;
        v.axiom = "F3";
        v.passed = true;
        for (std::size_t i = 0; i < n && v.passed; ++i) {
            for (std::size_t j = i + 1; j < n && v.passed; ++j) {
                if (c.entry(i, j) != c.entry(j, i)) {
                    v.passed = false;
                    v.witnesses.push_back({{labels[i], labels[j]},
                                           {c.entry(i, j), c.entry(j, i)},
                                           "index(" + labels[i] + "," + labels[j] + ") = " +
                                               c.entry(i, j).str() + " but index(" + labels[j] +
                                               "," + labels[i] + ") = " + c.entry(j, i).str()});
                }
            }
        }
        report.verdicts.push_back(std::move(v));
    }

    // F4: index 1 exactly characterizes identity. Diagonal entries must be 1;
    // positions carrying distinct labels must stay strictly below 1; two
    // positions sharing one label denote one object and are rejected outright.
    {
        Verdict v;
        v.axiom = "F4";
        v.passed = true;
        for (std::size_t i = 0; i < n && v.passed; ++i) {
            if (c.entry(i, i) != kOne) {
                v.passed = false;
                v.witnesses.push_back({{labels[i]},
                                       {c.entry(i, i)},
                                       "index(" + labels[i] + "," + labels[i] + ") = " +
                                           c.entry(i, i).str() + ", must be 1"});
            }
        }
        for (std::size_t i = 0; i < n && v.passed; ++i) {
            for (std::size_t j = i + 1; j < n && v.passed; ++j) {
                if (labels[i] == labels[j]) {
                    v.passed = false;
                    v.witnesses.push_back({{labels[i], labels[j]},
                                           {},
                                           "label \"" + labels[i] +
                                               "\" appears at two positions; one object may not "
                                               "occupy two rows"});
                } else if (c.entry(i, j) == kOne) {
                    v.passed = false;
                    v.witnesses.push_back({{labels[i], labels[j]},
                                           {c.entry(i, j)},
                                           "distinct labels " + labels[i] + " and " + labels[j] +
                                               " have index 1"});
                }
            }
        }
        report.verdicts.push_back(std::move(v));
    }

    // F5/F6: a single-valued total matrix assigns exactly one index to every
    // ordered pair, so uniqueness and totality cannot fail.
    for (const char* axiom : {"F5", "F6"}) {
        Verdict v;
        v.axiom = axiom;
        v.passed = true;
        v.note = "holds structurally";
        report.verdicts.push_back(std::move(v));
    }

    // F7: triangle requirement on distinctions, exhaustive over ordered
    // triples; the lexicographically first violation is reported.
    {
        Verdict v;
        v.axiom = "F7";
        v.passed = true;
        for (std::size_t i = 0; i < n && v.passed; ++i) {
            for (std::size_t j = 0; j < n && v.passed; ++j) {
                for (std::size_t k = 0; k < n && v.passed; ++k) {
                    const Rational dij = kOne - c.entry(i, j);
                    const Rational djk = kOne - c.entry(j, k);
                    const Rational dik = kOne - c.entry(i, k);
                    if (dij + djk < dik) {
                        v.passed = false;
                        v.witnesses.push_back(
                            {{labels[i], labels[j], labels[k]},
                             {c.entry(i, j), c.entry(j, k), c.entry(i, k)},
                             "D(" + labels[i] + "," + labels[j] + ") + D(" + labels[j] + "," +
                                 labels[k] + ") = " + (dij + djk).str() + " < D(" + labels[i] +
                                 "," + labels[k] + ") = " + dik.str()});
                    }
                }
            }
        }
        report.verdicts.push_back(std::move(v));
    }

    return report;
}

AxiomReport audit_metric(const CandidateMatrix& c) {
    const auto& labels = c.elements();
    const std::size_t n = c.size();
    AxiomReport report;

    // M1: zero diagonal.
    {
        Verdict v;
        v.axiom = "M1";
        v.passed = true;
        for (std::size_t i = 0; i < n && v.passed; ++i) {
            if (c.entry(i, i) != kZero) {
                v.passed = false;
                v.witnesses.push_back({{labels[i]},
                                       {c.entry(i, i)},
                                       "d(" + labels[i] + "," + labels[i] + ") = " +
                                           c.entry(i, i).str() + ", must be 0"});
            }
        }
        report.verdicts.push_back(std::move(v));
    }

    // M2: strictly positive off the diagonal.
    {
        Verdict v;
        v.axiom = "M2";
        v.passed = true;
        for (std::size_t i = 0; i < n && v.passed; ++i) {
            for (std::size_t j = 0; j < n && v.passed; ++j) {
                if (i != j && c.entry(i, j) <= kZero) {
                    v.passed = false;
                    v.witnesses.push_back({{labels[i], labels[j]},
                                           {c.entry(i, j)},
                                           "d(" + labels[i] + "," + labels[j] + ") = " +
                                               c.entry(i, j).str() + ", must be > 0"});
                }
            }
        }
        report.verdicts.push_back(std::move(v));
    }

    // M3: symmetry.
    {
        Verdict v;
        v.axiom = "M3";
        v.passed = true;
        for (std::size_t i = 0; i < n && v.passed; ++i) {
            for (std::size_t j = i + 1; j < n && v.passed; ++j) {
                if (c.entry(i, j) != c.entry(j, i)) {
                    v.passed = false;
                    v.witnesses.push_back({{labels[i], labels[j]},
                                           {c.entry(i, j), c.entry(j, i)},
                                           "d(" + labels[i] + "," + labels[j] + ") = " +
                                               c.entry(i, j).str() + " but d(" + labels[j] + "," +
                                               labels[i] + ") = " + c.entry(j, i).str()});
                }
            }
        }
        report.verdicts.push_back(std::move(v));
    }

    // M4: triangle inequality, exhaustive over ordered triples.
    {
        Verdict v;
        v.axiom = "M4";
        v.passed = true;
        for (std::size_t i = 0; i < n && v.passed; ++i) {
            for (std::size_t j = 0; j < n && v.passed; ++j) {
                for (std::size_t k = 0; k < n && v.passed; ++k) {
                    if (c.entry(i, j) + c.entry(j, k) < c.entry(i, k)) {
                        v.passed = false;
                        v.witnesses.push_back(
                            {{labels[i], labels[j], labels[k]},
                             {c.entry(i, j), c.entry(j, k), c.entry(i, k)},
                             "d(" + labels[i] + "," + labels[j] + ") + d(" + labels[j] + "," +
                                 labels[k] + ") = " + (c.entry(i, j) + c.entry(j, k)).str() +
                                 " < d(" + labels[i] + "," + labels[k] + ") = " +
                                 c.entry(i, k).str()});
                    }
                }
            }
        }
        report.verdicts.push_back(std::move(v));
    }

    return report;
}

} // namespace ivs
