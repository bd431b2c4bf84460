#pragma once

#include "ivs/axiom_verifier.hpp"
#include "ivs/core_system.hpp"
#include "ivs/ifuzzy.hpp"
#include "ivs/metric_bridge.hpp"
#include "ivs/predicate_indexing.hpp"
#include "ivs/predicate_profile.hpp"
#include "ivs/rational.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace ivs::io {

/// Documents are JSON objects {"kind": ..., "payload": ..., "version": "1"},
/// UTF-8, newline-terminated. Rationals travel as strings ("2/3", "1",
/// "0.25") so no host float ever touches a value. The staging payloads below
/// mirror that grammar one to one; matrix-bearing payloads keep their entries
/// unconstrained so axiom-violating candidates can still be read and audited.
/// Semantic validation happens when a payload is converted to a domain type.

struct PredicateTablePayload {
    std::vector<std::string> objects;
    std::vector<std::string> predicates;
    std::vector<std::vector<bool>> truth;

    bool operator==(const PredicateTablePayload&) const = default;
};

struct IndexSystemPayload {
    std::vector<std::string> elements;
    std::vector<std::vector<Rational>> matrix;

    bool operator==(const IndexSystemPayload&) const = default;
};

struct DistanceMatrixPayload {
    std::vector<std::string> elements;
    std::vector<std::vector<Rational>> d;

    bool operator==(const DistanceMatrixPayload&) const = default;
};

/// A base system given inline or as a path to an index-system document,
/// resolved relative to the referring document's location.
using SystemRef = std::variant<std::string, IndexSystemPayload>;

/// A predicate table given inline or as a path to a predicate-table document.
using TableRef = std::variant<std::string, PredicateTablePayload>;

struct IFuzzySetPayload {
    SystemRef system;
    std::map<std::string, Rational> grades;

    bool operator==(const IFuzzySetPayload&) const = default;
};

/// An extension either lists its members over a system directly, or
/// separates them from one column of a predicate table.
struct MembersExtensionPayload {
    SystemRef system;
    std::vector<std::string> members;

    bool operator==(const MembersExtensionPayload&) const = default;
};

struct TableExtensionPayload {
    TableRef table;
    std::string predicate;

    bool operator==(const TableExtensionPayload&) const = default;
};

using ExtensionPayload = std::variant<MembersExtensionPayload, TableExtensionPayload>;

using ReportPayload = AxiomReport;

using Payload = std::variant<PredicateTablePayload, IndexSystemPayload, DistanceMatrixPayload,
                             IFuzzySetPayload, ExtensionPayload, ReportPayload>;

struct Document {
    Payload payload;

    /// The kind tag matching the payload alternative: "predicate-table",
    /// "index-system", "distance-matrix", "ifuzzy-set", "extension",
    /// "report".
    std::string kind() const;

    bool operator==(const Document&) const = default;
};

/// Parses document text. Syntax errors carry the line/column from the
/// underlying reader; schema errors name the missing, extra, or mistyped
/// field; grade values outside [0,1] are rejected here. All failures throw
/// parse_error.
Document parse(const std::string& text);

/// Renders the canonical text: keys sorted, rationals in lowest terms,
/// two-space indentation, one trailing newline. Byte-identical across runs
/// for equal documents.
std::string serialize(const Document& doc);

/// Reads and parses a document file; errors mention the path.
Document load_file(const std::filesystem::path& file);

/// Writes serialize(doc) to a file.
void save_file(const Document& doc, const std::filesystem::path& file);

/// Payload -> domain type conversions. These run the domain constructors,
/// so every semantic violation surfaces as the constructor's domain_error.
PredicateTable to_table(const PredicateTablePayload& p);
CandidateMatrix to_candidate(const IndexSystemPayload& p);
FiniteIndexedSystem to_system(const IndexSystemPayload& p);
CandidateMatrix to_candidate(const DistanceMatrixPayload& p);
DistanceMatrix to_metric(const DistanceMatrixPayload& p);

/// Resolves a system reference, loading path references relative to
/// base_dir. The referenced file must hold an index-system document.
std::shared_ptr<const FiniteIndexedSystem> resolve_system(const SystemRef& ref,
                                                          const std::filesystem::path& base_dir);

/// Resolves a table reference the same way (predicate-table documents).
PredicateTable resolve_table(const TableRef& ref, const std::filesystem::path& base_dir);

IFuzzySet to_ifuzzy(const IFuzzySetPayload& p, const std::filesystem::path& base_dir);
PredicateExtension to_extension(const ExtensionPayload& p, const std::filesystem::path& base_dir);

/// Domain type -> document encoders. Sets and extensions embed their base
/// system inline, so encoded documents are self-contained.
Document document_from(const PredicateTable& t);
Document document_from(const FiniteIndexedSystem& s);
Document document_from(const CandidateMatrix& c);
Document document_from(const DistanceMatrix& m);
Document document_from(const IFuzzySet& f);
Document document_from(const PredicateExtension& e);
Document document_from(const AxiomReport& r);

} // namespace ivs::io
