#include "ivs/io.hpp"

#include "ivs/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>
#include <utility>

namespace ivs::io {

namespace {

using nlohmann::json;

const Rational kZero(0);
const Rational kOne(1);

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw parse_error(where + ": " + what);
}

void require_object(const json& v, const std::string& where,
                    std::initializer_list<std::string_view> keys) {
    if (!v.is_object()) {
        fail(where, "expected an object");
    }
    for (auto it = v.begin(); it != v.end(); ++it) {
        bool known = false;
        for (std::string_view k : keys) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail(where, "unexpected field \"" + it.key() + "\"");
        }
    }
}

const json& field(const json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where, std::string("missing field \"") + key + "\"");
    }
    return *it;
}

std::string read_string(const json& v, const std::string& where) {
    if (!v.is_string()) {
        fail(where, "expected a string");
    }
    return v.get<std::string>();
}

bool read_bool(const json& v, const std::string& where) {
    if (!v.is_boolean()) {
        fail(where, "expected true or false");
    }
    return v.get<bool>();
}

Rational read_rational(const json& v, const std::string& where) {
    if (!v.is_string()) {
        fail(where, "expected a rational carried as a string, e.g. \"2/3\"");
    }
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const parse_error& e) {
        fail(where, e.what());
    }
}

std::vector<std::string> read_strings(const json& v, const std::string& where) {
    if (!v.is_array()) {
        fail(where, "expected an array of strings");
    }
    std::vector<std::string> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(read_string(v[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<std::vector<Rational>> read_matrix(const json& v, const std::string& where,
                                               std::size_t rows, std::size_t cols) {
    if (!v.is_array()) {
        fail(where, "expected an array of rows");
    }
    if (v.size() != rows) {
        fail(where, "got " + std::to_string(v.size()) + " rows for " + std::to_string(rows) +
                        " labels");
    }
    std::vector<std::vector<Rational>> out;
    out.reserve(rows);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string rw = where + "[" + std::to_string(i) + "]";
        if (!v[i].is_array()) {
            fail(rw, "expected an array of rationals");
        }
        if (v[i].size() != cols) {
            fail(rw, "got " + std::to_string(v[i].size()) + " entries for " +
                         std::to_string(cols) + " labels");
        }
        std::vector<Rational> row;
        row.reserve(cols);
        for (std::size_t j = 0; j < v[i].size(); ++j) {
            row.push_back(read_rational(v[i][j], rw + "[" + std::to_string(j) + "]"));
        }
        out.push_back(std::move(row));
    }
    return out;
}

PredicateTablePayload read_table_payload(const json& v, const std::string& where) {
    require_object(v, where, {"objects", "predicates", "truth"});
    PredicateTablePayload p;
    p.objects = read_strings(field(v, where, "objects"), where + ".objects");
    p.predicates = read_strings(field(v, where, "predicates"), where + ".predicates");
    const json& truth = field(v, where, "truth");
    const std::string tw = where + ".truth";
    if (!truth.is_array()) {
        fail(tw, "expected an array of rows");
    }
    if (truth.size() != p.objects.size()) {
        fail(tw, "got " + std::to_string(truth.size()) + " rows for " +
                     std::to_string(p.objects.size()) + " objects");
    }
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const std::string rw = tw + "[" + std::to_string(i) + "]";
        if (!truth[i].is_array()) {
            fail(rw, "expected an array of booleans");
        }
        if (truth[i].size() != p.predicates.size()) {
            fail(rw, "got " + std::to_string(truth[i].size()) + " entries for " +
                         std::to_string(p.predicates.size()) + " predicates");
        }
        std::vector<bool> row;
        row.reserve(truth[i].size());
        for (std::size_t j = 0; j < truth[i].size(); ++j) {
            row.push_back(read_bool(truth[i][j], rw + "[" + std::to_string(j) + "]"));
        }
        p.truth.push_back(std::move(row));
    }
    return p;
}

IndexSystemPayload read_system_payload(const json& v, const std::string& where) {
    require_object(v, where, {"elements", "matrix"});
    IndexSystemPayload p;
    p.elements = read_strings(field(v, where, "elements"), where + ".elements");
    p.matrix = read_matrix(field(v, where, "matrix"), where + ".matrix", p.elements.size(),
                           p.elements.size());
    return p;
}

DistanceMatrixPayload read_metric_payload(const json& v, const std::string& where) {
    require_object(v, where, {"d", "elements"});
    DistanceMatrixPayload p;
    p.elements = read_strings(field(v, where, "elements"), where + ".elements");
    p.d = read_matrix(field(v, where, "d"), where + ".d", p.elements.size(), p.elements.size());
    return p;
}

SystemRef read_system_ref(const json& v, const std::string& where) {
    if (v.is_string()) {
        return SystemRef(v.get<std::string>());
    }
    if (v.is_object()) {
        return SystemRef(read_system_payload(v, where));
    }
    fail(where, "expected a file path or an inline {\"elements\", \"matrix\"} object");
}

TableRef read_table_ref(const json& v, const std::string& where) {
    if (v.is_string()) {
        return TableRef(v.get<std::string>());
    }
    if (v.is_object()) {
        return TableRef(read_table_payload(v, where));
    }
    fail(where, "expected a file path or an inline {\"objects\", \"predicates\", \"truth\"} "
                "object");
}

IFuzzySetPayload read_ifuzzy_payload(const json& v, const std::string& where) {
    require_object(v, where, {"grades", "system"});
    IFuzzySetPayload p;
    p.system = read_system_ref(field(v, where, "system"), where + ".system");
    const json& grades = field(v, where, "grades");
    const std::string gw = where + ".grades";
    if (!grades.is_object()) {
        fail(gw, "expected an object mapping element labels to grades");
    }
    for (auto it = grades.begin(); it != grades.end(); ++it) {
        const std::string ew = gw + "[\"" + it.key() + "\"]";
        Rational r = read_rational(it.value(), ew);
        if (r < kZero || r > kOne) {
            fail(ew, "grade " + r.str() + " lies outside [0,1]");
        }
        p.grades.emplace(it.key(), std::move(r));
    }
    return p;
}

ExtensionPayload read_extension_payload(const json& v, const std::string& where) {
    if (!v.is_object()) {
        fail(where, "expected an object");
    }
    if (v.contains("system") || v.contains("members")) {
        require_object(v, where, {"members", "system"});
        MembersExtensionPayload p;
        p.system = read_system_ref(field(v, where, "system"), where + ".system");
        p.members = read_strings(field(v, where, "members"), where + ".members");
        return ExtensionPayload(std::move(p));
    }
    if (v.contains("table") || v.contains("predicate")) {
        require_object(v, where, {"predicate", "table"});
        TableExtensionPayload p;
        p.table = read_table_ref(field(v, where, "table"), where + ".table");
        p.predicate = read_string(field(v, where, "predicate"), where + ".predicate");
        return ExtensionPayload(std::move(p));
    }
    fail(where, "expected {\"system\", \"members\"} or {\"table\", \"predicate\"}");
}

ReportPayload read_report_payload(const json& v, const std::string& where) {
    require_object(v, where, {"verdicts"});
    const json& verdicts = field(v, where, "verdicts");
    const std::string vw = where + ".verdicts";
    if (!verdicts.is_array()) {
        fail(vw, "expected an array of verdicts");
    }
    ReportPayload report;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const std::string w = vw + "[" + std::to_string(i) + "]";
        const json& jv = verdicts[i];
        require_object(jv, w, {"axiom", "note", "passed", "witnesses"});
        Verdict verdict;
        verdict.axiom = read_string(field(jv, w, "axiom"), w + ".axiom");
        verdict.note = read_string(field(jv, w, "note"), w + ".note");
        verdict.passed = read_bool(field(jv, w, "passed"), w + ".passed");
        const json& witnesses = field(jv, w, "witnesses");
        const std::string ww = w + ".witnesses";
        if (!witnesses.is_array()) {
            fail(ww, "expected an array of witnesses");
        }
        for (std::size_t k = 0; k < witnesses.size(); ++k) {
            const std::string kw = ww + "[" + std::to_string(k) + "]";
            const json& jwit = witnesses[k];
            require_object(jwit, kw, {"detail", "labels", "values"});
            Witness wit;
            wit.detail = read_string(field(jwit, kw, "detail"), kw + ".detail");
            wit.labels = read_strings(field(jwit, kw, "labels"), kw + ".labels");
            const json& values = field(jwit, kw, "values");
            const std::string lw = kw + ".values";
            if (!values.is_array()) {
                fail(lw, "expected an array of rationals");
            }
            for (std::size_t m = 0; m < values.size(); ++m) {
                wit.values.push_back(read_rational(values[m], lw + "[" + std::to_string(m) + "]"));
            }
            verdict.witnesses.push_back(std::move(wit));
        }
        if (!verdict.passed && verdict.witnesses.empty()) {
            fail(w, "a failed verdict needs at least one witness");
        }
        if (verdict.passed && !verdict.witnesses.empty()) {
            fail(w, "a passed verdict must not carry witnesses");
        }
        report.verdicts.push_back(std::move(verdict));
    }
    return report;
}

json rational_json(const Rational& r) {
    return json(r.str());
}

json strings_json(const std::vector<std::string>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

json matrix_json(const std::vector<std::vector<Rational>>& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(rational_json(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

json payload_json(const PredicateTablePayload& p) {
    json truth = json::array();
    for (const auto& row : p.truth) {
        json r = json::array();
        for (bool b : row) r.push_back(b);
        truth.push_back(std::move(r));
    }
    return json{{"objects", strings_json(p.objects)},
                {"predicates", strings_json(p.predicates)},
                {"truth", std::move(truth)}};
}

json payload_json(const IndexSystemPayload& p) {
    return json{{"elements", strings_json(p.elements)}, {"matrix", matrix_json(p.matrix)}};
}

json payload_json(const DistanceMatrixPayload& p) {
    return json{{"d", matrix_json(p.d)}, {"elements", strings_json(p.elements)}};
}

json ref_json(const SystemRef& ref) {
    if (const auto* path = std::get_if<std::string>(&ref)) {
        return json(*path);
    }
    return payload_json(std::get<IndexSystemPayload>(ref));
}

json ref_json(const TableRef& ref) {
    if (const auto* path = std::get_if<std::string>(&ref)) {
        return json(*path);
    }
    return payload_json(std::get<PredicateTablePayload>(ref));
}

json payload_json(const IFuzzySetPayload& p) {
    json grades = json::object();
    for (const auto& [label, grade] : p.grades) {
        grades[label] = rational_json(grade);
    }
    return json{{"grades", std::move(grades)}, {"system", ref_json(p.system)}};
}

json payload_json(const ExtensionPayload& p) {
    if (const auto* members = std::get_if<MembersExtensionPayload>(&p)) {
        return json{{"members", strings_json(members->members)},
                    {"system", ref_json(members->system)}};
    }
    const auto& table = std::get<TableExtensionPayload>(p);
    return json{{"predicate", table.predicate}, {"table", ref_json(table.table)}};
}

json payload_json(const ReportPayload& p) {
    json verdicts = json::array();
    for (const auto& v : p.verdicts) {
        json witnesses = json::array();
        for (const auto& w : v.witnesses) {
            json values = json::array();
            for (const auto& x : w.values) values.push_back(rational_json(x));
            witnesses.push_back(json{{"detail", w.detail},
                                     {"labels", strings_json(w.labels)},
                                     {"values", std::move(values)}});
        }
        verdicts.push_back(json{{"axiom", v.axiom},
                                {"note", v.note},
                                {"passed", v.passed},
                                {"witnesses", std::move(witnesses)}});
    }
    return json{{"verdicts", std::move(verdicts)}};
}

} // namespace

std::string Document::kind() const {
    struct Visitor {
        std::string operator()(const PredicateTablePayload&) const { return "predicate-table"; }
        std::string operator()(const IndexSystemPayload&) const { return "index-system"; }
        std::string operator()(const DistanceMatrixPayload&) const { return "distance-matrix"; }
        std::string operator()(const IFuzzySetPayload&) const { return "ifuzzy-set"; }
        std::string operator()(const ExtensionPayload&) const { return "extension"; }
        std::string operator()(const ReportPayload&) const { return "report"; }
    };
    return std::visit(Visitor{}, payload);
}

Document parse(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("document syntax: ") + e.what());
    }
    const std::string where = "document";
    require_object(root, where, {"kind", "payload", "version"});
    const std::string kind = read_string(field(root, where, "kind"), where + ".kind");
    const std::string version = read_string(field(root, where, "version"), where + ".version");
    if (version != "1") {
        fail(where + ".version", "unsupported version \"" + version + "\"; this reader "
                                 "understands version \"1\"");
    }
    const json& payload = field(root, where, "payload");
    const std::string pw = "payload";
    if (kind == "predicate-table") return Document{read_table_payload(payload, pw)};
    if (kind == "index-system") return Document{read_system_payload(payload, pw)};
    if (kind == "distance-matrix") return Document{read_metric_payload(payload, pw)};
    if (kind == "ifuzzy-set") return Document{read_ifuzzy_payload(payload, pw)};
    if (kind == "extension") return Document{read_extension_payload(payload, pw)};
    if (kind == "report") return Document{read_report_payload(payload, pw)};
    fail(where + ".kind", "unknown kind \"" + kind + "\"");
}

std::string serialize(const Document& doc) {
    json payload = std::visit([](const auto& p) { return payload_json(p); }, doc.payload);
    json root{{"kind", doc.kind()}, {"payload", std::move(payload)}, {"version", "1"}};
    return root.dump(2) + "\n";
}

Document load_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw parse_error("cannot read \"" + file.string() + "\"");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse(buf.str());
    } catch (const parse_error& e) {
        throw parse_error(file.string() + ": " + e.what());
    }
}

void save_file(const Document& doc, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw parse_error("cannot write \"" + file.string() + "\"");
    }
    out << serialize(doc);
    if (!out) {
        throw parse_error("cannot write \"" + file.string() + "\"");
    }
}

PredicateTable to_table(const PredicateTablePayload& p) {
    return PredicateTable::create(p.objects, p.predicates, p.truth);
}

CandidateMatrix to_candidate(const IndexSystemPayload& p) {
    return CandidateMatrix(p.elements, p.matrix);
}

FiniteIndexedSystem to_system(const IndexSystemPayload& p) {
    return FiniteIndexedSystem::create(p.elements, p.matrix);
}

CandidateMatrix to_candidate(const DistanceMatrixPayload& p) {
    return CandidateMatrix(p.elements, p.d);
}

DistanceMatrix to_metric(const DistanceMatrixPayload& p) {
    return DistanceMatrix::create(p.elements, p.d);
}

std::shared_ptr<const FiniteIndexedSystem> resolve_system(const SystemRef& ref,
                                                          const std::filesystem::path& base_dir) {
    if (const auto* inline_payload = std::get_if<IndexSystemPayload>(&ref)) {
        return std::make_shared<const FiniteIndexedSystem>(to_system(*inline_payload));
    }
    const auto& path = std::get<std::string>(ref);
    const Document doc = load_file(base_dir / path);
    const auto* payload = std::get_if<IndexSystemPayload>(&doc.payload);
    if (!payload) {
        throw mismatch_error("\"" + path + "\" holds a " + doc.kind() +
                             " document, expected index-system");
    }
    return std::make_shared<const FiniteIndexedSystem>(to_system(*payload));
}

PredicateTable resolve_table(const TableRef& ref, const std::filesystem::path& base_dir) {
    if (const auto* inline_payload = std::get_if<PredicateTablePayload>(&ref)) {
        return to_table(*inline_payload);
    }
    const auto& path = std::get<std::string>(ref);
    const Document doc = load_file(base_dir / path);
    const auto* payload = std::get_if<PredicateTablePayload>(&doc.payload);
    if (!payload) {
        throw mismatch_error("\"" + path + "\" holds a " + doc.kind() +
                             " document, expected predicate-table");
    }
    return to_table(*payload);
}

IFuzzySet to_ifuzzy(const IFuzzySetPayload& p, const std::filesystem::path& base_dir) {
    auto base = resolve_system(p.system, base_dir);
    for (const auto& [label, grade] : p.grades) {
        (void)grade;
        base->position(label); // throws unknown_label_error for foreign keys
    }
    std::vector<Rational> grades;
    grades.reserve(base->size());
    for (const auto& element : base->elements()) {
        auto it = p.grades.find(element);
        if (it == p.grades.end()) {
            throw mismatch_error("no grade for element \"" + element + "\"");
        }
        grades.push_back(it->second);
    }
    return IFuzzySet::create(std::move(base), std::move(grades));
}

PredicateExtension to_extension(const ExtensionPayload& p,
                                const std::filesystem::path& base_dir) {
    if (const auto* members = std::get_if<MembersExtensionPayload>(&p)) {
        return PredicateExtension::create(resolve_system(members->system, base_dir),
                                          members->members);
    }
    const auto& by_predicate = std::get<TableExtensionPayload>(p);
    PredicateTable table = resolve_table(by_predicate.table, base_dir);
    auto base = std::make_shared<const FiniteIndexedSystem>(build_system(table));
    return PredicateExtension::from_table(std::move(base), table, by_predicate.predicate);
}

namespace {

IndexSystemPayload system_payload(const FiniteIndexedSystem& s) {
    IndexSystemPayload p;
    p.elements = s.elements();
    p.matrix.resize(s.size(), std::vector<Rational>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            p.matrix[i][j] = s.index_at(i, j).value();
        }
    }
    return p;
}

} // namespace

Document document_from(const PredicateTable& t) {
    PredicateTablePayload p;
    p.objects = t.objects();
    p.predicates = t.predicates();
    for (std::size_t i = 0; i < t.object_count(); ++i) {
        p.truth.push_back(t.profile(i));
    }
    return Document{std::move(p)};
}

Document document_from(const FiniteIndexedSystem& s) {
    return Document{system_payload(s)};
}

Document document_from(const CandidateMatrix& c) {
    IndexSystemPayload p;
    p.elements = c.elements();
    p.matrix = c.entries();
    return Document{std::move(p)};
}

Document document_from(const DistanceMatrix& m) {
    DistanceMatrixPayload p;
    p.elements = m.elements();
    p.d.resize(m.size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            p.d[i][j] = m.at(i, j);
        }
    }
    return Document{std::move(p)};
}

Document document_from(const IFuzzySet& f) {
    IFuzzySetPayload p;
    p.system = system_payload(f.base());
    for (std::size_t i = 0; i < f.base().size(); ++i) {
        p.grades.emplace(f.base().elements()[i], f.grade_at(i));
    }
    return Document{std::move(p)};
}

Document document_from(const PredicateExtension& e) {
    MembersExtensionPayload p;
    p.system = system_payload(e.base());
    p.members = e.members();
    return Document{ExtensionPayload(std::move(p))};
}

Document document_from(const AxiomReport& r) {
    return Document{ReportPayload(r)};
}

} // namespace ivs::io
