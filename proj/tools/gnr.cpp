// gnr: command-line front end for finite graded near-rings.
//
// Exit codes: 0 success, 1 validation or theorem failure, 2 malformed input,
// 3 enumeration budget exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gnr/gnr.hpp"

namespace {

using namespace gnr;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_malformed = 2;
constexpr int exit_budget = 3;

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::MalformedTable:
        case ErrorKind::OrderCapExceeded:
        case ErrorKind::UnknownTheoremId: return exit_malformed;
        case ErrorKind::EnumerationBudgetExceeded: return exit_budget;
        default: return exit_failure;
    }
}

/// A path, or the name of a built-in corpus entry when no such file exists.
StructureDocument load(const std::string& source) {
    if (!std::filesystem::exists(source))
        if (const CorpusEntry* e = find_corpus_entry(source)) return document_for(*e);
    return load_document(source);
}

const GradedNearRing& graded_of(const StructureDocument& d) {
    if (!d.structure) throw Error(ErrorKind::ParseError, "a near-ring document is required, got a monoid");
    return *d.structure;
}

SubsetMask parse_elements(const std::string& text, unsigned order) {
    SubsetMask s;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw Error(ErrorKind::ParseError, "'" + item + "' is not an element index");
        if (v >= order) throw Error(ErrorKind::MalformedTable, "element " + item + " out of range", {static_cast<unsigned>(v)});
        s.insert(static_cast<Element>(v));
    }
    return s;
}

IdealScope parse_scope(const std::string& s) { return s == "graded" ? IdealScope::graded : IdealScope::all; }

std::string set_text(SubsetMask s, const std::vector<std::string>& labels) {
    std::string out = s.to_string();
    if (labels.empty()) return out;
    out += "  [";
    bool first = true;
    s.for_each([&](Element x) {
        out += (first ? "" : ", ") + labels[x];
        first = false;
    });
    return out + "]";
}

// --- commands ---------------------------------------------------------------

int cmd_validate(const std::string& file) {
    StructureDocument d;
    try {
        d = load(file);
    } catch (const Error& e) {
        std::cout << "invalid: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    std::cout << "valid " << to_string(d.kind) << " '" << d.name << "'\n";
    if (d.monoid) {
        std::cout << "  order " << d.monoid->order() << ", identity " << d.monoid->identity() << '\n';
        return exit_ok;
    }
    const GradedNearRing& gn = *d.structure;
    const FiniteNearRing& r = gn.ring();
    std::cout << "  order " << r.order() << ", zero " << r.zero();
    if (r.one()) std::cout << ", one " << *r.one();
    std::cout << "\n  additively abelian: " << (r.additively_abelian() ? "yes" : "no")
              << "\n  zero-symmetric: " << (r.zero_symmetric() ? "yes" : "no")
              << "\n  ring: " << (r.is_ring() ? "yes" : "no");
    if (auto v = r.left_distributivity_violation())
        std::cout << " (left distributivity fails at " << (*v)[0] << ", " << (*v)[1] << ", " << (*v)[2] << ")";
    std::cout << "\n  grades " << gn.grade_count() << ':';
    for (Grade g = 0; g < gn.grade_count(); ++g) std::cout << ' ' << gn.grade_component(g).to_string();
    std::cout << '\n';
    return exit_ok;
}

int cmd_ideals(const std::string& file, bool graded_only, bool normal, const std::string& format) {
    const StructureDocument d = load(file);
    const GradedNearRing& gn = graded_of(d);
    if (normal) {
        const auto subs = enumerate_normal_subgroups(gn.ring());
        if (format == "json") {
            json arr = json::array();
            for (SubsetMask s : subs) arr.push_back(to_json(s));
            std::cout << write_canonical(json{{"normal_subgroups", arr}});
        } else {
            std::cout << subs.size() << " normal subgroup(s)\n";
            for (SubsetMask s : subs) std::cout << "  " << set_text(s, d.labels) << '\n';
        }
        return exit_ok;
    }
    const IdealLattice lat(gn);
    const auto& list = graded_only ? lat.graded_ideals() : lat.ideals();
    if (format == "json") {
        json arr = json::array();
        for (SubsetMask s : list) arr.push_back(json{{"elements", to_json(s)}, {"graded", lat.is_graded(s)}});
        std::cout << write_canonical(json{{"ideals", arr}});
        return exit_ok;
    }
    std::cout << list.size() << (graded_only ? " graded" : "") << " ideal(s)\n";
    for (SubsetMask s : list)
        std::cout << "  " << set_text(s, d.labels) << (lat.is_graded(s) ? "  graded" : "") << '\n';
    return exit_ok;
}

int cmd_primes(const std::string& file, bool graded, const std::string& checker_name_arg, const std::string& scope_arg,
               const std::string& format) {
    const StructureDocument d = load(file);
    const IdealLattice lat(graded_of(d));
    const IdealScope scope = parse_scope(scope_arg);
    std::vector<Checker> checkers;
    if (checker_name_arg == "p29") {
        checkers = {Checker::p29c1, Checker::p29c2};
    } else if (auto c = checker_from_name(checker_name_arg)) {
        checkers = {*c};
    } else {
        throw Error(ErrorKind::ParseError, "unknown checker '" + checker_name_arg + "'");
    }

    json rows = json::array();
    std::ostringstream table;
    const auto candidates = [&] {
        std::vector<SubsetMask> out;
        for (SubsetMask i : graded ? lat.graded_ideals() : lat.ideals())
            if (lat.is_proper(i)) out.push_back(i);
        return out;
    }();
    for (SubsetMask p : candidates) {
        json reports = json::array();
        table << "  " << set_text(p, d.labels);
        if (graded) {
            for (Checker c : checkers) {
                const PrimalityReport rep = run_checker(c, lat, p, scope);
                reports.push_back(to_json(rep));
                table << "  " << checker_name(c) << '=' << (rep.verdict ? "true" : "false");
                if (rep.witness)
                    table << " (A=" << rep.witness->a.to_string() << " B=" << rep.witness->b.to_string()
                          << " g=" << rep.witness->g << " h=" << rep.witness->h << ')';
            }
        } else {
            const PrimalityReport rep = is_prime_ideal(lat, p);
            reports.push_back(to_json(rep));
            table << "  prime=" << (rep.verdict ? "true" : "false");
            if (rep.witness) table << " (A=" << rep.witness->a.to_string() << " B=" << rep.witness->b.to_string() << ')';
        }
        table << '\n';
        rows.push_back(json{{"ideal", to_json(p)}, {"reports", reports}});
    }
    if (format == "json") {
        std::cout << write_canonical(json{{"ideal_scope", to_string(scope)}, {"graded", graded}, {"ideals", rows}});
    } else {
        std::cout << candidates.size() << " proper " << (graded ? "graded " : "") << "ideal(s)\n" << table.str();
    }
    return exit_ok;
}

int cmd_generate(const std::string& file, const std::string& elements) {
    const StructureDocument d = load(file);
    const GradedNearRing& gn = graded_of(d);
    const SubsetMask s = parse_elements(elements, gn.order());
    const SubsetMask i = ideal_generated_by(gn.ring(), s);
    std::cout << set_text(i, d.labels) << (gn.is_graded_ideal(i) ? "  graded" : "") << '\n';
    return exit_ok;
}

int cmd_quotient(const std::string& file, const std::string& elements) {
    const StructureDocument d = load(file);
    const GradedNearRing& gn = graded_of(d);
    const SubsetMask q = parse_elements(elements, gn.order());
    const QuotientStructure qs = quotient(gn, q);
    std::string notes = "quotient of " + (d.name.empty() ? std::string("input") : d.name) + " by " + q.to_string() +
                        "; coset c is element c, ordered by least member:";
    for (std::size_t c = 0; c < qs.cosets.size(); ++c) notes += " " + std::to_string(c) + "=" + qs.cosets[c].to_string();
    StructureDocument out = document_for(d.name + "/" + q.to_string(), qs.quotient.structure(), notes);
    std::cout << emit(out);
    return exit_ok;
}

int cmd_product(const std::string& a, const std::string& b) {
    const StructureDocument da = load(a), db = load(b);
    StructureDocument out = document_for(da.name + "x" + db.name, direct_product(graded_of(da), graded_of(db)),
                                         "componentwise product; (a, b) is element a * |M| + b");
    if (!da.labels.empty() && !db.labels.empty())
        for (const auto& x : da.labels)
            for (const auto& y : db.labels) out.labels.push_back("(" + x + "," + y + ")");
    std::cout << emit(out);
    return exit_ok;
}

int cmd_corpus_list() {
    for (const auto& e : corpus()) {
        std::cout << e.name << "  order " << e.structure.order() << ", " << e.structure.grade_count()
                  << " grade(s)";
        if (e.factors) std::cout << ", product of " << e.factors->first << " and " << e.factors->second;
        std::cout << "\n    " << e.notes << '\n';
    }
    for (const auto& h : corpus_homs()) std::cout << h.name << "  homomorphism " << h.source << " -> " << h.target << '\n';
    return exit_ok;
}

int cmd_corpus_emit(const std::string& name, const std::string& dir) {
    if (name == "all") {
        if (dir.empty()) throw Error(ErrorKind::ParseError, "emitting all entries requires --dir");
        std::filesystem::create_directories(dir);
        for (const auto& e : corpus()) {
            std::ofstream out(std::filesystem::path(dir) / (e.name + ".json"), std::ios::binary);
            out << emit(document_for(e));
        }
        return exit_ok;
    }
    const CorpusEntry* e = find_corpus_entry(name);
    if (!e) throw Error(ErrorKind::ParseError, "no corpus entry named '" + name + "'");
    const std::string text = emit(document_for(*e));
    if (dir.empty()) {
        std::cout << text;
    } else {
        std::filesystem::create_directories(dir);
        std::ofstream(std::filesystem::path(dir) / (name + ".json"), std::ios::binary) << text;
    }
    return exit_ok;
}

int cmd_check(const std::string& target, const std::string& theorem, const std::string& format, unsigned threads,
              const std::string& scope, unsigned factor_bound) {
    HarnessOptions opt;
    opt.threads = threads;
    opt.ideal_scope = parse_scope(scope);
    opt.factor_bound = factor_bound;
    std::vector<std::string> ids;
    if (theorem != "all") {
        find_theorem(theorem);
        ids.push_back(theorem);
    }
    SubjectSet subjects;
    if (target == "corpus") {
        subjects = corpus_subjects(opt);
    } else if (!std::filesystem::exists(target) && find_corpus_entry(target)) {
        subjects = corpus_subjects(opt, {target});
        // Homomorphisms are reported only when the entry is their source.
        std::erase_if(subjects.homs, [&](const HomSubject& h) { return h.source->name != target; });
    } else {
        const StructureDocument d = load_document(target);
        subjects.structures.push_back(make_subject(d.name.empty() ? target : d.name, graded_of(d), opt));
    }
    const HarnessReport report = run_all(subjects, opt, ids);
    std::cout << (format == "json" ? report_json(report) : report_table(report));
    return report.has_unexpected() ? exit_failure : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite graded near-rings: ideals, graded primality and theorem checks"};
    app.require_subcommand(1);

    std::string file, file_b, elements, checker = "def", format = "table", scope = "all", theorem = "all", dir;
    std::string corpus_name;
    bool graded = false, normal = false;
    unsigned threads = 1, factor_bound = 4;

    auto* validate = app.add_subcommand("validate", "validate a structure document");
    validate->add_option("file", file, "document path or corpus name")->required();

    auto* ideals = app.add_subcommand("ideals", "list ideals in canonical order");
    ideals->add_option("file", file, "document path or corpus name")->required();
    ideals->add_flag("--graded", graded, "graded ideals only");
    ideals->add_flag("--normal-subgroups", normal, "list normal subgroups instead");
    ideals->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* primes = app.add_subcommand("primes", "primality verdicts with witnesses");
    primes->add_option("file", file, "document path or corpus name")->required();
    primes->add_flag("--graded", graded, "graded primality of proper graded ideals");
    primes->add_option("--checker", checker, "criterion used with --graded")
        ->check(CLI::IsMember({"def", "homog", "t28c2", "t28c3", "p29", "p29c1", "p29c2", "p213"}));
    primes->add_option("--ideal-scope", scope, "ideals A, B range over all or graded ideals")
        ->check(CLI::IsMember({"all", "graded"}));
    primes->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* generate = app.add_subcommand("generate", "ideal generated by a set of elements");
    generate->add_option("file", file, "document path or corpus name")->required();
    generate->add_option("--elements", elements, "comma-separated element indices")->required();

    auto* quot = app.add_subcommand("quotient", "quotient by a proper graded ideal, as a document");
    quot->add_option("file", file, "document path or corpus name")->required();
    quot->add_option("--ideal", elements, "comma-separated element indices")->required();

    auto* product = app.add_subcommand("product", "componentwise-graded direct product, as a document");
    product->add_option("left", file, "document path or corpus name")->required();
    product->add_option("right", file_b, "document path or corpus name")->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "built-in structures");
    corpus_cmd->require_subcommand(1);
    corpus_cmd->add_subcommand("list", "list corpus entries");
    auto* emit_cmd = corpus_cmd->add_subcommand("emit", "print an entry as a document ('all' with --dir)");
    emit_cmd->add_option("name", corpus_name)->required();
    emit_cmd->add_option("--dir", dir, "write <name>.json files into this directory");

    auto* check_cmd = app.add_subcommand("check", "run theorem checks");
    check_cmd->add_option("target", file, "document path, corpus name, or 'corpus'")->required();
    check_cmd->add_option("--theorem", theorem, "theorem id or 'all'");
    check_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
    check_cmd->add_option("--threads", threads)->check(CLI::Range(1u, 256u));
    check_cmd->add_option("--ideal-scope", scope)->check(CLI::IsMember({"all", "graded"}));
    check_cmd->add_option("--factor-bound", factor_bound, "longest product searched by 2.19")->check(CLI::Range(1u, 16u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_malformed;
    }

    try {
        if (*validate) return cmd_validate(file);
        if (*ideals) return cmd_ideals(file, graded, normal, format);
        if (*primes) return cmd_primes(file, graded, checker, scope, format);
        if (*generate) return cmd_generate(file, elements);
        if (*quot) return cmd_quotient(file, elements);
        if (*product) return cmd_product(file, file_b);
        if (*corpus_cmd) {
            if (*emit_cmd) return cmd_corpus_emit(corpus_name, dir);
            return cmd_corpus_list();
        }
        if (*check_cmd) return cmd_check(file, theorem, format, threads, scope, factor_bound);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return exit_ok;
}
