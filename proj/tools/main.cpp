#include "ivs/axiom_verifier.hpp"
#include "ivs/core_system.hpp"
#include "ivs/errors.hpp"
#include "ivs/ifuzzy.hpp"
#include "ivs/io.hpp"
#include "ivs/metric_bridge.hpp"
#include "ivs/predicate_indexing.hpp"
#include "ivs/predicate_profile.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct LoadedDocument {
    ivs::io::Document doc;
    fs::path base_dir; // reference paths inside the document resolve against this
    std::string origin;
};

void require_files(const std::vector<std::string>& paths) {
    for (const auto& p : paths) {
        if (!p.empty() && p != "-" && !fs::exists(p)) {
            throw ivs::parse_error("no such file \"" + p + "\"");
        }
    }
}

LoadedDocument read_document(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        try {
            return {ivs::io::parse(buf.str()), fs::current_path(), "stdin"};
        } catch (const ivs::parse_error& e) {
            throw ivs::parse_error(std::string("stdin: ") + e.what());
        }
    }
    return {ivs::io::load_file(arg), fs::path(arg).parent_path(), arg};
}

[[noreturn]] void wrong_kind(const LoadedDocument& ld, const char* expected) {
    throw ivs::mismatch_error(ld.origin + " holds a " + ld.doc.kind() + " document, expected " +
                              expected);
}

const ivs::io::PredicateTablePayload& expect_table(const LoadedDocument& ld) {
    if (const auto* p = std::get_if<ivs::io::PredicateTablePayload>(&ld.doc.payload)) return *p;
    wrong_kind(ld, "predicate-table");
}

const ivs::io::IndexSystemPayload& expect_system(const LoadedDocument& ld) {
    if (const auto* p = std::get_if<ivs::io::IndexSystemPayload>(&ld.doc.payload)) return *p;
    wrong_kind(ld, "index-system");
}

const ivs::io::DistanceMatrixPayload& expect_metric(const LoadedDocument& ld) {
    if (const auto* p = std::get_if<ivs::io::DistanceMatrixPayload>(&ld.doc.payload)) return *p;
    wrong_kind(ld, "distance-matrix");
}

const ivs::io::IFuzzySetPayload& expect_ifuzzy(const LoadedDocument& ld) {
    if (const auto* p = std::get_if<ivs::io::IFuzzySetPayload>(&ld.doc.payload)) return *p;
    wrong_kind(ld, "ifuzzy-set");
}

const ivs::io::ExtensionPayload& expect_extension(const LoadedDocument& ld) {
    if (const auto* p = std::get_if<ivs::io::ExtensionPayload>(&ld.doc.payload)) return *p;
    wrong_kind(ld, "extension");
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        throw ivs::parse_error("cannot write \"" + out + "\"");
    }
    f << text;
    if (!f) {
        throw ivs::parse_error("cannot write \"" + out + "\"");
    }
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string pretty_report(const ivs::AxiomReport& report) {
    std::ostringstream out;
    for (const auto& v : report.verdicts) {
        out << v.axiom << "  " << (v.passed ? "pass" : "FAIL");
        if (!v.note.empty()) {
            out << "  (" << v.note << ")";
        }
        out << "\n";
        for (const auto& w : v.witnesses) {
            out << "      " << w.detail << "\n";
        }
    }
    out << (report.all_passed() ? "all axioms hold\n" : "violations found\n");
    return out.str();
}

ivs::IFuzzySet read_ifuzzy(const std::string& arg) {
    LoadedDocument ld = read_document(arg);
    return ivs::io::to_ifuzzy(expect_ifuzzy(ld), ld.base_dir);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Build, audit, and query graded-identity systems"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto* build = app.add_subcommand(
        "build", "Build an index system from a predicate table or a metric");
    std::string build_table, build_metric, build_out;
    auto* build_src = build->add_option_group("source");
    build_src->add_option("--table", build_table,
                          "predicate-table document (\"-\" reads stdin)");
    build_src->add_option("--metric", build_metric,
                          "distance-matrix document (\"-\" reads stdin)");
    build_src->require_option(1);
    build->add_option("--out", build_out, "write to this file instead of stdout");
    build->callback([&] {
        require_files({build_table, build_metric});
        if (!build_table.empty()) {
            LoadedDocument ld = read_document(build_table);
            const ivs::PredicateTable table = ivs::io::to_table(expect_table(ld));
            emit(ivs::io::serialize(ivs::io::document_from(ivs::build_system(table))), build_out);
        } else {
            LoadedDocument ld = read_document(build_metric);
            const ivs::DistanceMatrix metric = ivs::io::to_metric(expect_metric(ld));
            emit(ivs::io::serialize(ivs::io::document_from(ivs::system_from_metric(metric))),
                 build_out);
        }
    });

    auto* audit_cmd = app.add_subcommand(
        "audit", "Check an index-system document against the seven axioms, or a "
                 "distance-matrix document against the metric axioms");
    std::string audit_doc, audit_out;
    bool audit_pretty = false;
    audit_cmd->add_option("doc", audit_doc, "document to audit (\"-\" reads stdin)")->required();
    audit_cmd->add_flag("--pretty", audit_pretty, "human-readable table instead of a document");
    audit_cmd->add_option("--out", audit_out, "write to this file instead of stdout");
    audit_cmd->callback([&] {
        require_files({audit_doc});
        LoadedDocument ld = read_document(audit_doc);
        ivs::AxiomReport report;
        if (const auto* sys = std::get_if<ivs::io::IndexSystemPayload>(&ld.doc.payload)) {
            report = ivs::audit(ivs::io::to_candidate(*sys));
        } else if (const auto* met = std::get_if<ivs::io::DistanceMatrixPayload>(&ld.doc.payload)) {
            report = ivs::audit_metric(ivs::io::to_candidate(*met));
        } else {
            throw ivs::mismatch_error("cannot audit a " + ld.doc.kind() + " document");
        }
        emit(audit_pretty ? pretty_report(report)
                          : ivs::io::serialize(ivs::io::document_from(report)),
             audit_out);
        if (!report.all_passed()) {
            exit_code = 1;
        }
    });

    auto* dist_cmd =
        app.add_subcommand("dist", "Print the distinction D(a,b) between two elements");
    std::string dist_doc, dist_a, dist_b, dist_out;
    dist_cmd->add_option("doc", dist_doc, "index-system document (\"-\" reads stdin)")->required();
    dist_cmd->add_option("a", dist_a, "first element label")->required();
    dist_cmd->add_option("b", dist_b, "second element label")->required();
    dist_cmd->add_option("--out", dist_out, "write to this file instead of stdout");
    dist_cmd->callback([&] {
        require_files({dist_doc});
        LoadedDocument ld = read_document(dist_doc);
        const ivs::FiniteIndexedSystem system = ivs::io::to_system(expect_system(ld));
        emit(system.distinction_of(dist_a, dist_b).value().str() + "\n", dist_out);
    });

    auto* funion = app.add_subcommand("fuzzy-union", "Pointwise maximum of two i-fuzzy sets");
    std::string funion_f, funion_g, funion_out;
    funion->add_option("f", funion_f, "ifuzzy-set document")->required();
    funion->add_option("g", funion_g, "ifuzzy-set document")->required();
    funion->add_option("--out", funion_out, "write to this file instead of stdout");
    funion->callback([&] {
        require_files({funion_f, funion_g});
        const ivs::IFuzzySet result = ivs::set_union(read_ifuzzy(funion_f), read_ifuzzy(funion_g));
        emit(ivs::io::serialize(ivs::io::document_from(result)), funion_out);
    });

    auto* finter =
        app.add_subcommand("fuzzy-intersect", "Pointwise minimum of two i-fuzzy sets");
    std::string finter_f, finter_g, finter_out;
    finter->add_option("f", finter_f, "ifuzzy-set document")->required();
    finter->add_option("g", finter_g, "ifuzzy-set document")->required();
    finter->add_option("--out", finter_out, "write to this file instead of stdout");
    finter->callback([&] {
        require_files({finter_f, finter_g});
        const ivs::IFuzzySet result =
            ivs::set_intersection(read_ifuzzy(finter_f), read_ifuzzy(finter_g));
        emit(ivs::io::serialize(ivs::io::document_from(result)), finter_out);
    });

    auto* fdist = app.add_subcommand(
        "fuzzy-dist", "Print the largest pointwise grade gap between two i-fuzzy sets");
    std::string fdist_f, fdist_g, fdist_out;
    fdist->add_option("f", fdist_f, "ifuzzy-set document")->required();
    fdist->add_option("g", fdist_g, "ifuzzy-set document")->required();
    fdist->add_option("--out", fdist_out, "write to this file instead of stdout");
    fdist->callback([&] {
        require_files({fdist_f, fdist_g});
        const ivs::Distinction d =
            ivs::set_distinction(read_ifuzzy(fdist_f), read_ifuzzy(fdist_g));
        emit(d.value().str() + "\n", fdist_out);
    });

    auto* fsys = app.add_subcommand(
        "fuzzy-system", "Build the index system whose elements are i-fuzzy sets");
    std::vector<std::string> fsys_docs;
    std::string fsys_labels, fsys_out;
    fsys->add_option("docs", fsys_docs, "ifuzzy-set documents over one base system")->required();
    fsys->add_option("--labels", fsys_labels, "comma-separated labels, one per set");
    fsys->add_option("--out", fsys_out, "write to this file instead of stdout");
    fsys->callback([&] {
        require_files(fsys_docs);
        std::vector<ivs::IFuzzySet> sets;
        sets.reserve(fsys_docs.size());
        for (const auto& path : fsys_docs) {
            sets.push_back(read_ifuzzy(path));
        }
        std::vector<std::string> labels;
        if (!fsys_labels.empty()) {
            labels = split_csv(fsys_labels);
        }
        emit(ivs::io::serialize(
                 ivs::io::document_from(ivs::system_of_sets(sets, std::move(labels)))),
             fsys_out);
    });

    auto* idx = app.add_subcommand(
        "indexate", "Print how far an element sits from a predicate's extension, and the "
                    "degree to which it satisfies the predicate");
    std::string idx_system, idx_extension, idx_members, idx_x, idx_out;
    auto* idx_src = idx->add_option_group("source");
    auto* idx_sys_opt =
        idx_src->add_option("--system", idx_system, "index-system document (\"-\" reads stdin)");
    idx_src->add_option("--extension", idx_extension, "extension document");
    idx_src->require_option(1);
    auto* idx_members_opt =
        idx->add_option("--members", idx_members, "comma-separated member labels");
    idx_sys_opt->needs(idx_members_opt);
    idx_members_opt->needs(idx_sys_opt);
    idx->add_option("x", idx_x, "the element to score")->required();
    idx->add_option("--out", idx_out, "write to this file instead of stdout");
    idx->callback([&] {
        require_files({idx_system, idx_extension});
        std::shared_ptr<const ivs::PredicateExtension> ext;
        if (!idx_system.empty()) {
            LoadedDocument ld = read_document(idx_system);
            auto base =
                std::make_shared<const ivs::FiniteIndexedSystem>(ivs::io::to_system(expect_system(ld)));
            ext = std::make_shared<const ivs::PredicateExtension>(
                ivs::PredicateExtension::create(std::move(base), split_csv(idx_members)));
        } else {
            LoadedDocument ld = read_document(idx_extension);
            ext = std::make_shared<const ivs::PredicateExtension>(
                ivs::io::to_extension(expect_extension(ld), ld.base_dir));
        }
        const ivs::Distinction d = ivs::distinction_to_set(*ext, idx_x);
        emit("D(" + idx_x + ",S) = " + d.value().str() + "\n" +
                 "r(" + idx_x + ",S) = " + d.complement().value().str() + "\n",
             idx_out);
    });

    auto* conv = app.add_subcommand(
        "convert", "Turn an index-system document into its distance matrix, or a "
                   "distance-matrix document into an index system");
    std::string conv_doc, conv_out;
    conv->add_option("doc", conv_doc, "document to convert (\"-\" reads stdin)")->required();
    conv->add_option("--out", conv_out, "write to this file instead of stdout");
    conv->callback([&] {
        require_files({conv_doc});
        LoadedDocument ld = read_document(conv_doc);
        if (const auto* sys = std::get_if<ivs::io::IndexSystemPayload>(&ld.doc.payload)) {
            emit(ivs::io::serialize(
                     ivs::io::document_from(ivs::metric_from_system(ivs::io::to_system(*sys)))),
                 conv_out);
        } else if (const auto* met = std::get_if<ivs::io::DistanceMatrixPayload>(&ld.doc.payload)) {
            emit(ivs::io::serialize(
                     ivs::io::document_from(ivs::system_from_metric(ivs::io::to_metric(*met)))),
                 conv_out);
        } else {
            throw ivs::mismatch_error("cannot convert a " + ld.doc.kind() + " document");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ivs::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ivs::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
