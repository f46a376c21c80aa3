#pragma once

/**
 * @file document.hpp
 * @brief Structure documents and harness reports as JSON text.
 *
 * A structure document is one JSON object:
 *
 *     {
 *       "add": [[0, 1], [1, 0]],
 *       "components": [[0, 1], [0]],
 *       "kind": "graded-near-ring",
 *       "labels": ["0", "1"],
 *       "monoid": {"identity": 0, "op": [[0, 1], [1, 1]], "order": 2},
 *       "mul": [[0, 0], [0, 1]],
 *       "name": "z2-or",
 *       "notes": "",
 *       "one": 1,
 *       "order": 2,
 *       "zero": 0
 *     }
 *
 * kind "near-ring" omits monoid and components; kind "monoid" carries
 * identity, op and order only. "zero" and "one" are annotations: when
 * present they must match what the tables imply. Writing always goes
 * through write_canonical, so emit -> parse -> emit is byte-identical.
 */

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gnr/corpus.hpp"
#include "gnr/grading.hpp"
#include "gnr/harness.hpp"

namespace gnr {

using json = nlohmann::json;

enum class DocumentKind { monoid, near_ring, graded_near_ring };

inline std::string_view to_string(DocumentKind k) {
    switch (k) {
        case DocumentKind::monoid: return "monoid";
        case DocumentKind::near_ring: return "near-ring";
        case DocumentKind::graded_near_ring: return "graded-near-ring";
    }
    return "?";
}

struct StructureDocument {
    DocumentKind kind = DocumentKind::graded_near_ring;
    std::string name;
    std::string notes;
    std::vector<std::string> labels;
    /// Set for kind monoid.
    std::optional<FiniteMonoid> monoid;
    /// Set for both near-ring kinds; a plain near-ring is trivially graded.
    std::optional<GradedNearRing> structure;
};

// ---------------------------------------------------------------------------
// Canonical text

namespace detail {

inline bool is_flat(const json& v) {
    return std::none_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); });
}

inline void write_value(std::ostream& os, const json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
    if (v.is_object()) {
        if (v.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) os << ",\n";
            first = false;
            os << pad << json(it.key()).dump() << ": ";
            write_value(os, it.value(), indent + 2);
        }
        os << '\n' << std::string(static_cast<std::size_t>(indent), ' ') << '}';
    } else if (v.is_array()) {
        if (is_flat(v)) {
            os << '[';
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].dump();
            os << ']';
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            os << pad;
            write_value(os, v[i], indent + 2);
            os << (i + 1 < v.size() ? ",\n" : "\n");
        }
        os << std::string(static_cast<std::size_t>(indent), ' ') << ']';
    } else {
        os << v.dump();
    }
}

}  // namespace detail

/// Sorted keys, two-space indent, arrays of scalars on one line, trailing newline.
inline std::string write_canonical(const json& v) {
    std::ostringstream os;
    detail::write_value(os, v, 0);
    os << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Structure documents

inline json to_json(SubsetMask s) { return json(s.elements()); }

inline json to_json(const FiniteMonoid& m) {
    return json{{"identity", m.identity()}, {"op", m.rows()}, {"order", m.order()}};
}

inline json to_json(const StructureDocument& d) {
    json j;
    j["kind"] = to_string(d.kind);
    j["name"] = d.name;
    j["notes"] = d.notes;
    j["labels"] = d.labels;
    if (d.kind == DocumentKind::monoid) {
        const json m = to_json(*d.monoid);
        for (auto it = m.begin(); it != m.end(); ++it) j[it.key()] = it.value();
        return j;
    }
    const GradedNearRing& gn = *d.structure;
    const FiniteNearRing& r = gn.ring();
    j["order"] = r.order();
    j["zero"] = r.zero();
    if (r.one()) j["one"] = *r.one();
    j["add"] = r.add_rows();
    j["mul"] = r.mul_rows();
    if (d.kind == DocumentKind::graded_near_ring) {
        j["monoid"] = to_json(gn.monoid());
        json comps = json::array();
        for (SubsetMask c : gn.components()) comps.push_back(to_json(c));
        j["components"] = comps;
    }
    return j;
}

inline std::string emit(const StructureDocument& d) { return write_canonical(to_json(d)); }

inline StructureDocument document_for(const CorpusEntry& e) {
    return StructureDocument{DocumentKind::graded_near_ring, e.name, e.notes, e.labels, std::nullopt, e.structure};
}

inline StructureDocument document_for(std::string name, GradedNearRing gn, std::string notes = {}) {
    return StructureDocument{DocumentKind::graded_near_ring, std::move(name), std::move(notes), {}, std::nullopt,
                             std::move(gn)};
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

inline const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) parse_fail(std::string("missing key '") + key + "'");
    return *it;
}

inline unsigned as_index(const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<long long>() < 0) parse_fail(std::string(what) + " must be a non-negative integer");
    const long long x = v.get<long long>();
    if (x > 1'000'000) parse_fail(std::string(what) + " is out of range");
    return static_cast<unsigned>(x);
}

inline TableRows as_rows(const json& v, const char* what) {
    if (!v.is_array()) parse_fail(std::string(what) + " must be an array of rows");
    TableRows rows;
    for (const json& row : v) {
        if (!row.is_array()) parse_fail(std::string(what) + " rows must be arrays");
        std::vector<Element> r;
        for (const json& x : row) r.push_back(as_index(x, what));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline std::string as_string(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) return {};
    if (!it->is_string()) parse_fail(std::string(key) + " must be a string");
    return it->get<std::string>();
}

inline FiniteMonoid monoid_from(const json& obj) {
    if (!obj.is_object()) parse_fail("monoid must be an object");
    const unsigned order = as_index(require(obj, "order"), "monoid order");
    return validate_monoid(order, as_rows(require(obj, "op"), "monoid op"),
                           as_index(require(obj, "identity"), "monoid identity"));
}

}  // namespace detail

/**
 * Parses and validates one document. Syntax and schema problems throw
 * ParseError; algebraic problems throw the validators' errors.
 */
inline StructureDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object()) detail::parse_fail("document must be an object");
    const json& kind = detail::require(j, "kind");
    if (!kind.is_string()) detail::parse_fail("kind must be a string");

    StructureDocument d;
    const std::string k = kind.get<std::string>();
    if (k == "monoid")
        d.kind = DocumentKind::monoid;
    else if (k == "near-ring")
        d.kind = DocumentKind::near_ring;
    else if (k == "graded-near-ring")
        d.kind = DocumentKind::graded_near_ring;
    else
        detail::parse_fail("unknown kind '" + k + "'");
    d.name = detail::as_string(j, "name");
    d.notes = detail::as_string(j, "notes");
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_array()) detail::parse_fail("labels must be an array of strings");
        for (const json& l : *it) {
            if (!l.is_string()) detail::parse_fail("labels must be an array of strings");
            d.labels.push_back(l.get<std::string>());
        }
    }

    if (d.kind == DocumentKind::monoid) {
        d.monoid = detail::monoid_from(j);
    } else {
        const unsigned order = detail::as_index(detail::require(j, "order"), "order");
        if (order > max_order)
            throw Error(ErrorKind::OrderCapExceeded,
                        "order " + std::to_string(order) + " exceeds " + std::to_string(max_order));
        FiniteNearRing r = validate_near_ring(order, detail::as_rows(detail::require(j, "add"), "add"),
                                              detail::as_rows(detail::require(j, "mul"), "mul"));
        if (auto it = j.find("zero"); it != j.end() && detail::as_index(*it, "zero") != r.zero())
            throw Error(ErrorKind::BadIdentity, "zero annotation differs from the additive identity",
                        {detail::as_index(*it, "zero"), r.zero()});
        if (auto it = j.find("one"); it != j.end()) {
            const unsigned one = detail::as_index(*it, "one");
            if (!r.one() || *r.one() != one)
                throw Error(ErrorKind::BadIdentity, "one annotation is not a multiplicative identity", {one});
        }
        if (d.kind == DocumentKind::near_ring) {
            d.structure = trivially_graded(std::move(r));
        } else {
            FiniteMonoid m = detail::monoid_from(detail::require(j, "monoid"));
            const json& comps = detail::require(j, "components");
            if (!comps.is_array()) detail::parse_fail("components must be an array of index lists");
            std::vector<SubsetMask> cs;
            for (const json& c : comps) {
                if (!c.is_array()) detail::parse_fail("components must be an array of index lists");
                SubsetMask s;
                for (const json& x : c) {
                    const unsigned e = detail::as_index(x, "component element");
                    if (e >= order) throw Error(ErrorKind::MalformedTable, "component element out of range", {e});
                    s.insert(e);
                }
                cs.push_back(s);
            }
            d.structure = make_graded(std::move(r), std::move(m), std::move(cs));
        }
    }
    if (!d.labels.empty()) {
        const unsigned n = d.monoid ? d.monoid->order() : d.structure->order();
        if (d.labels.size() != n) detail::parse_fail("labels must have one entry per element");
    }
    return d;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline StructureDocument load_document(const std::string& path) { return parse_document(read_file(path)); }

// ---------------------------------------------------------------------------
// Primality and harness reports

inline json to_json(const Witness& w) {
    json j{{"A", to_json(w.a)}, {"B", to_json(w.b)}, {"g", w.g}, {"h", w.h}};
    if (!w.elements.empty()) j["elements"] = w.elements;
    return j;
}

inline json to_json(const PrimalityReport& r) {
    json j{{"checker", r.checker_id}, {"verdict", r.verdict}};
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

inline std::string_view to_string(IdealScope s) { return s == IdealScope::all ? "all" : "graded"; }

inline json to_json(const TheoremCheck& c) {
    json findings = json::array();
    for (const auto& f : c.findings) {
        json fields = json::object();
        for (const auto& [k, v] : f.fields) fields[k] = v;
        findings.push_back(json{{"label", f.label}, {"fields", fields}});
    }
    return json{{"id", c.id},         {"subject", c.subject},     {"status", to_string(c.status)},
                {"summary", c.summary}, {"instances", c.instances}, {"findings", findings}};
}

inline json to_json(const HarnessReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return json{{"ideal_scope", to_string(r.ideal_scope)},
                {"factor_bound", r.factor_bound},
                {"totals", r.totals()},
                {"checks", checks}};
}

inline std::string report_json(const HarnessReport& r) { return write_canonical(to_json(r)); }

namespace detail {

inline bool is_scalar_field(std::string_view k) {
    for (std::string_view s : {"g", "h", "n", "verdict", "def", "bound", "J graded"})
        if (k == s) return true;
    return false;
}

}  // namespace detail

/// Human table: one line per check, then the totals.
inline std::string report_table(const HarnessReport& r) {
    std::size_t wid = 2, wsub = 7;
    for (const auto& c : r.checks) {
        wid = std::max(wid, c.id.size());
        wsub = std::max(wsub, c.subject.size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(wid)) << "id" << "  " << std::setw(static_cast<int>(wsub))
       << "subject" << "  " << std::setw(14) << "status" << "  " << std::right << std::setw(9) << "instances"
       << "  " << "summary\n";
    for (const auto& c : r.checks) {
        os << std::left << std::setw(static_cast<int>(wid)) << c.id << "  " << std::setw(static_cast<int>(wsub))
           << c.subject << "  " << std::setw(14) << to_string(c.status) << "  " << std::right << std::setw(9)
           << c.instances << "  " << c.summary << '\n';
        if (c.status != CheckStatus::fail) continue;
        for (const auto& f : c.findings) {
            os << "    " << f.label;
            for (const auto& [k, v] : f.fields) {
                os << "  " << k << "=";
                if (detail::is_scalar_field(k)) {
                    os << v.front();
                    continue;
                }
                os << '{';
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
                os << '}';
            }
            os << '\n';
        }
    }
    os << "totals:";
    for (const auto& [k, v] : r.totals()) os << ' ' << k << '=' << v;
    os << "  (ideal scope " << to_string(r.ideal_scope) << ", factor bound " << r.factor_bound << ")\n";
    return os.str();
}

}  // namespace gnr
