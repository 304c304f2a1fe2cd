#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "testutil.hpp"

#include "hgt/format.hpp"
#include "json.hpp"

using namespace hgt;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DocKind kind_from_prefix(const std::string& name) {
  if (name.rfind("cm__", 0) == 0) return DocKind::crossed_module;
  if (name.rfind("disc__", 0) == 0) return DocKind::discretization;
  if (name.rfind("conn__", 0) == 0) return DocKind::connection;
  if (name.rfind("gauge__", 0) == 0) return DocKind::gauge;
  if (name.rfind("script__", 0) == 0) return DocKind::change_script;
  if (name.rfind("scenario__", 0) == 0) return DocKind::scenario;
  FAIL("unclassified golden file: " << name);
  return DocKind::crossed_module;
}

bool documents_equal(const Document& a, const Document& b) {
  if (a.kind != b.kind) return false;
  if (a.cm.has_value() != b.cm.has_value() || (a.cm && !(*a.cm == *b.cm))) return false;
  if (a.disc.has_value() != b.disc.has_value() || (a.disc && !(*a.disc == *b.disc)))
    return false;
  if (a.conn.has_value() != b.conn.has_value() || (a.conn && !(*a.conn == *b.conn)))
    return false;
  if (a.gauge.has_value() != b.gauge.has_value() || (a.gauge && !(*a.gauge == *b.gauge)))
    return false;
  if (a.script.has_value() != b.script.has_value() || (a.script && !(*a.script == *b.script)))
    return false;
  return true;
}

std::vector<fs::path> golden_files() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(HGT_TEST_DATA_DIR "/golden"))
    if (entry.path().extension() == ".json") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("golden corpus: parse-serialize-parse is the identity") {
  std::vector<fs::path> files = golden_files();
  CHECK(files.size() >= 50);
  for (const fs::path& p : files) {
    CAPTURE(p.filename().string());
    DocKind kind = kind_from_prefix(p.filename().string());
    ParseResult first = parse(slurp(p), kind);
    REQUIRE_MESSAGE(first.ok(), p.filename().string() << ": "
                                                      << (first.diagnostics.empty()
                                                              ? std::string("?")
                                                              : first.diagnostics[0].to_string()));
    std::string canonical = serialize(*first.doc);
    ParseResult second = parse(canonical, kind);
    REQUIRE(second.ok());
    CHECK(documents_equal(*first.doc, *second.doc));
    // canonical form is a fixed point
    CHECK(serialize(*second.doc) == canonical);
  }
}

TEST_CASE("canonical form is whitespace-insensitive") {
  Discretization t2 = build_example("t2");
  std::string canonical = serialize_discretization(t2);
  std::string mangled;
  for (char c : canonical) {
    mangled += c;
    if (c == ',') mangled += "\n\t   ";
  }
  ParseResult r = parse(mangled, DocKind::discretization);
  REQUIRE(r.ok());
  CHECK(serialize(*r.doc) == canonical);
  CHECK(*r.doc->disc == t2);
}

TEST_CASE("malformed corpus: expected code, deterministic diagnostics") {
  std::string manifest_text = slurp(fs::path(HGT_TEST_DATA_DIR) / "malformed/manifest.json");
  nlohmann::json manifest = nlohmann::json::parse(manifest_text);
  REQUIRE(manifest["files"].size() >= 20);
  for (const auto& entry : manifest["files"]) {
    std::string name = entry["name"].get<std::string>();
    CAPTURE(name);
    std::string kind_name = entry["kind"].get<std::string>();
    DocKind kind = DocKind::crossed_module;
    for (DocKind k : {DocKind::crossed_module, DocKind::discretization, DocKind::connection,
                      DocKind::gauge, DocKind::change_script, DocKind::scenario})
      if (kind_name == doc_kind_name(k)) kind = k;

    std::string bytes = slurp(fs::path(HGT_TEST_DATA_DIR) / "malformed" / name);
    ParseResult r1 = parse(bytes, kind);
    REQUIRE_FALSE(r1.ok());
    CHECK_FALSE(r1.doc.has_value());
    CHECK(r1.diagnostics.front().code == entry["code"].get<std::string>());

    // byte-identical diagnostics on a second parse
    ParseResult r2 = parse(bytes, kind);
    REQUIRE(r1.diagnostics.size() == r2.diagnostics.size());
    for (size_t i = 0; i < r1.diagnostics.size(); ++i)
      CHECK(r1.diagnostics[i].to_string() == r2.diagnostics[i].to_string());
  }
}

TEST_CASE("syntax diagnostics carry byte and line positions") {
  ParseResult r = parse("", DocKind::connection);
  REQUIRE_FALSE(r.ok());
  CHECK(r.diagnostics.front().code == "syntax");
  CHECK(r.diagnostics.front().byte >= 1);
  CHECK(r.diagnostics.front().line == 1);

  ParseResult r2 = parse("{\n  \"g\": {},\n  \"h\": \n}", DocKind::connection);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.diagnostics.front().code == "syntax");
  CHECK(r2.diagnostics.front().line == 4);
}

TEST_CASE("structural diagnostics carry paths") {
  ParseResult r = parse(R"({"g": {}, "h": {}, "spooky": 1})", DocKind::connection);
  REQUIRE_FALSE(r.ok());
  CHECK(r.diagnostics.front().code == "unknown-key");
  CHECK(r.diagnostics.front().path == "/spooky");
}

TEST_CASE("schema fields are honoured on every document kind") {
  std::string good = R"({"schema": "connection", "g": {}, "h": {}})";
  CHECK(parse(good, DocKind::connection).ok());
  std::string bad = R"({"schema": "gauge", "g": {}, "h": {}})";
  ParseResult r = parse(bad, DocKind::connection);
  REQUIRE_FALSE(r.ok());
  CHECK(r.diagnostics.front().code == "bad-value");
}

TEST_CASE("binding resolves names and reports dangling references") {
  CrossedModule cm = hgtt::z2z4_mod2();
  Discretization s2 = build_example("s2");

  ParsedConnection good;
  good.g = {{"e", "1"}};
  good.h = {{"f", "2"}};
  std::vector<Diagnostic> diags;
  auto x = bind_object(s2, cm, good, diags);
  REQUIRE(x.has_value());
  CHECK(diags.empty());
  CHECK(x->g.at("e") == 1);
  CHECK(x->h.at("f") == 2);

  ParsedConnection bad_elem = good;
  bad_elem.g["e"] = "9";
  diags.clear();
  CHECK_FALSE(bind_object(s2, cm, bad_elem, diags).has_value());
  CHECK(diags.front().code == "dangling-reference");

  ParsedConnection bad_cell = good;
  bad_cell.g["zz"] = "0";
  diags.clear();
  CHECK_FALSE(bind_object(s2, cm, bad_cell, diags).has_value());

  ParsedConnection missing;
  missing.h = good.h;
  diags.clear();
  CHECK_FALSE(bind_object(s2, cm, missing, diags).has_value());
  CHECK(diags.front().code == "missing-entry");

  // morphisms need eta; gauge morphisms need chi
  diags.clear();
  CHECK_FALSE(bind_morphism(s2, cm, good, diags).has_value());
  ParsedGauge g;
  g.gamma = {{"v", "1"}, {"w", "0"}};
  diags.clear();
  CHECK(bind_gauge_object(s2, cm, g, diags).has_value());
  diags.clear();
  CHECK_FALSE(bind_gauge_morphism(s2, cm, g, diags).has_value());
}

TEST_CASE("unparse then bind is the identity") {
  CrossedModule cm = hgtt::s3_conjugation();
  Discretization t2 = build_example("t2");
  std::vector<ConnObject> objects = enumerate_objects(t2, cm);
  for (size_t i = 0; i < objects.size(); i += 7) {
    ConnMorphism m{objects[i], {{"e1", static_cast<Elem>(i % 6)}, {"e2", 2}}};
    std::vector<Diagnostic> diags;
    auto back = bind_morphism(t2, cm, unparse_connection(cm, m), diags);
    REQUIRE(back.has_value());
    CHECK(*back == m);
  }
}

TEST_CASE("scenario parsing cross-checks its sections at load time") {
  CrossedModule cm = hgtt::z2z4_mod2();
  Document doc;
  doc.kind = DocKind::scenario;
  doc.cm = cm;
  doc.disc = build_example("t2");
  ParsedConnection conn;
  conn.g = {{"e1", "0"}, {"e2", "1"}};
  conn.h = {{"f", "0"}};
  doc.conn = conn;
  std::string good = serialize(doc);
  CHECK(parse(good, DocKind::scenario).ok());

  // same document with the face entry renamed to an unknown cell
  doc.conn->h = {{"zz", "0"}};
  ParseResult r = parse(serialize(doc), DocKind::scenario);
  REQUIRE_FALSE(r.ok());
  bool dangling = false;
  for (const Diagnostic& d : r.diagnostics) dangling |= d.code == "dangling-reference";
  CHECK(dangling);
}

TEST_CASE("script round-trip keeps move words exactly") {
  ChangeScript script = {{ChangeKind::bigon_move,
                          "f1",
                          "p2",
                          "q1",
                          {{"a2", Dir::reverse}, {"a1", Dir::reverse}},
                          {{"b3", Dir::reverse}, {"b2", Dir::reverse}}}};
  std::string bytes = serialize_script(script);
  ParseResult r = parse(bytes, DocKind::change_script);
  REQUIRE(r.ok());
  CHECK(*r.doc->script == script);
}
