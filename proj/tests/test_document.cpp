#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "gnr/gnr.hpp"

using namespace gnr;

namespace {

std::string golden(const std::string& name) { return read_file(std::string(GNR_GOLDEN_DIR) + "/" + name + ".json"); }

const char* z2_near_ring = R"({"kind": "near-ring", "name": "z2", "order": 2,
  "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]]})";

std::string with(std::string base, const std::string& from, const std::string& to) {
    auto pos = base.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    return base.replace(pos, from.size(), to);
}

}  // namespace

TEST(Golden, CorpusDocumentsMatchCheckedInFiles) {
    for (const auto& e : corpus()) EXPECT_EQ(emit(document_for(e)), golden(e.name)) << e.name;
}

TEST(Golden, ParseThenEmitIsTheIdentity) {
    for (const auto& e : corpus()) {
        const std::string text = golden(e.name);
        StructureDocument d = parse_document(text);
        EXPECT_EQ(d.name, e.name);
        EXPECT_EQ(d.labels, e.labels);
        ASSERT_TRUE(d.structure);
        EXPECT_EQ(d.structure->ring(), e.structure.ring());
        EXPECT_EQ(d.structure->components(), e.structure.components());
        EXPECT_EQ(emit(d), text) << e.name;
    }
}

TEST(Canonical, Layout) {
    json j = {{"b", {1, 2}}, {"a", {{0, 1}, {1, 0}}}, {"c", "x"}};
    EXPECT_EQ(write_canonical(j), "{\n  \"a\": [\n    [0, 1],\n    [1, 0]\n  ],\n  \"b\": [1, 2],\n  \"c\": \"x\"\n}\n");
    EXPECT_EQ(write_canonical(json::array()), "[]\n");
}

TEST(Parse, PlainNearRingIsTriviallyGraded) {
    StructureDocument d = parse_document(z2_near_ring);
    EXPECT_EQ(d.kind, DocumentKind::near_ring);
    ASSERT_TRUE(d.structure);
    EXPECT_EQ(d.structure->grade_count(), 1u);
    EXPECT_EQ(d.structure->ring(), cyclic_ring(2));
    EXPECT_EQ(parse_document(emit(d)).structure->ring(), cyclic_ring(2));
}

TEST(Parse, Monoid) {
    StructureDocument d =
        parse_document(R"({"kind": "monoid", "name": "or", "order": 2, "identity": 0, "op": [[0,1],[1,1]]})");
    EXPECT_EQ(d.kind, DocumentKind::monoid);
    ASSERT_TRUE(d.monoid);
    EXPECT_EQ(*d.monoid, or_monoid());
    EXPECT_FALSE(d.structure);
}

TEST(Parse, SyntaxAndSchemaErrors) {
    expect_error(ErrorKind::ParseError, [] { parse_document("{"); });
    expect_error(ErrorKind::ParseError, [] { parse_document("[1, 2]"); });
    expect_error(ErrorKind::ParseError, [] { parse_document(R"({"kind": "lattice"})"); });
    expect_error(ErrorKind::ParseError, [] { parse_document(with(z2_near_ring, "\"order\": 2,", "")); });
    expect_error(ErrorKind::ParseError, [] { parse_document(with(z2_near_ring, "\"order\": 2", "\"order\": -2")); });
    expect_error(ErrorKind::ParseError,
                 [] { parse_document(with(z2_near_ring, "\"order\": 2", "\"order\": 2, \"labels\": [\"a\"]")); });
}

TEST(Parse, TableErrorsKeepTheirKinds) {
    expect_error(ErrorKind::MalformedTable, [] { parse_document(with(z2_near_ring, "[[0,1],[1,0]]", "[[0,1],[1]]")); });
    expect_error(ErrorKind::OrderCapExceeded, [] { parse_document(with(z2_near_ring, "\"order\": 2", "\"order\": 65")); });
    expect_error(ErrorKind::AddNotGroup, [] { parse_document(with(z2_near_ring, "[[0,1],[1,0]]", "[[0,1],[1,1]]")); });
    expect_error(ErrorKind::BadIdentity, [] { parse_document(with(z2_near_ring, "\"order\": 2", "\"order\": 2, \"zero\": 1")); });
    expect_error(ErrorKind::BadIdentity, [] { parse_document(with(z2_near_ring, "\"order\": 2", "\"order\": 2, \"one\": 0")); });
}

TEST(Parse, GradingErrors) {
    const std::string g = golden("z2-or");
    expect_error(ErrorKind::MalformedTable, [&] { parse_document(with(g, "[0]\n  ]", "[5]\n  ]")); });
    // both components Z2: 1 = 1 + 0 = 0 + 1
    expect_error(ErrorKind::DecompositionNotUnique, [&] { parse_document(with(g, "[0]\n  ]", "[0, 1]\n  ]")); });
}

TEST(Reports, JsonAndTable) {
    SubjectSet s = corpus_subjects(HarnessOptions{}, {"z6-or"});
    HarnessReport rep = run_all(s, {}, {"2.4-cex", "2.16"});
    json j = json::parse(report_json(rep));
    EXPECT_EQ(j["ideal_scope"], "all");
    EXPECT_EQ(j["factor_bound"], 4);
    ASSERT_EQ(j["checks"].size(), 2u);
    EXPECT_EQ(j["checks"][0]["id"], "2.4-cex");
    EXPECT_EQ(j["checks"][0]["status"], "expected-fail");
    EXPECT_EQ(j["checks"][0]["findings"][0]["fields"]["P"], json({0}));
    EXPECT_EQ(j["totals"]["expected-fail"], 1);
    EXPECT_EQ(j["totals"]["pass"], 1);
    const std::string table = report_table(rep);
    EXPECT_EQ(table.rfind("id", 0), 0u);
    EXPECT_NE(table.find("expected-fail"), std::string::npos);
    EXPECT_NE(table.find("scope"), std::string::npos);
}

TEST(Reports, PrimalityReportJson) {
    IdealLattice lat(find_corpus_entry("z6-or")->structure);
    json j = to_json(is_graded_prime_def(lat, {0}));
    EXPECT_EQ(j["checker"], "def");
    EXPECT_EQ(j["verdict"], false);
    EXPECT_EQ(j["witness"]["A"], json({0, 2, 4}));
    EXPECT_EQ(j["witness"]["B"], json({0, 3}));
}
