#ifndef HGT_FORMAT_HPP_
#define HGT_FORMAT_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hgt/crossed_module.hpp"
#include "hgt/gauge.hpp"
#include "hgt/rediscretize.hpp"

namespace hgt {

enum class DocKind {
  crossed_module,
  discretization,
  connection,
  gauge,
  change_script,
  scenario,
};

const char* doc_kind_name(DocKind k);

/// One parse problem. Syntax errors carry a byte/line/column position;
/// structural errors carry the JSON path of the offending value instead.
/// Diagnostics are emitted in deterministic document order.
struct Diagnostic {
  std::string code;     // machine-readable, e.g. "syntax", "unknown-key", "dangling-reference"
  std::string path;     // JSON pointer of the offending value ("" for whole document)
  std::string message;
  std::size_t byte = 0;  // 1-based byte offset; 0 when not applicable
  std::size_t line = 0;  // 1-based; 0 when not applicable

  std::string to_string() const;
};

/// Element names still unresolved against a group; produced by the parser,
/// bound to a complex and crossed module in a second step.
struct ParsedConnection {
  std::map<std::string, std::string> g;    // edge id -> G element name
  std::map<std::string, std::string> h;    // face id -> H element name
  std::map<std::string, std::string> eta;  // edge id -> H element name
  bool has_eta = false;

  bool operator==(const ParsedConnection& o) const {
    return g == o.g && h == o.h && eta == o.eta && has_eta == o.has_eta;
  }
};

struct ParsedGauge {
  std::map<std::string, std::string> gamma;  // vertex id -> G element name
  std::map<std::string, std::string> chi;    // vertex id -> H element name
  bool has_chi = false;

  bool operator==(const ParsedGauge& o) const {
    return gamma == o.gamma && chi == o.chi && has_chi == o.has_chi;
  }
};

/// A parsed document. Single-schema documents fill exactly one payload;
/// scenario documents fill cm and disc plus any optional sections.
struct Document {
  DocKind kind = DocKind::crossed_module;
  std::optional<CrossedModule> cm;
  std::optional<Discretization> disc;
  std::optional<ParsedConnection> conn;
  std::optional<ParsedGauge> gauge;
  std::optional<ChangeScript> script;
};

struct ParseResult {
  std::optional<Document> doc;  // set iff diagnostics is empty
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

/// Parses and structurally validates one document of the expected kind.
/// Unknown keys, duplicate ids, dangling intra-document references, and
/// malformed tables are all rejected with positioned diagnostics; the
/// mathematical axioms are left to the validate_* functions.
ParseResult parse(const std::string& bytes, DocKind expected);

/// Canonical serialization: object keys sorted, element and cell orders
/// preserved, two-space indentation, trailing newline. parse(serialize(d))
/// reproduces the document exactly.
std::string serialize(const Document& doc);

std::string serialize_crossed_module(const CrossedModule& cm);
std::string serialize_discretization(const Discretization& d);
std::string serialize_connection(const ParsedConnection& c);
std::string serialize_gauge(const ParsedGauge& g);
std::string serialize_script(const ChangeScript& s);

// Name-level views of bound values, for serialization.
ParsedConnection unparse_connection(const CrossedModule& cm, const ConnObject& x);
ParsedConnection unparse_connection(const CrossedModule& cm, const ConnMorphism& m);
ParsedGauge unparse_gauge(const CrossedModule& cm, const GaugeObject& g);
ParsedGauge unparse_gauge(const CrossedModule& cm, const GaugeMorphism& m);

/// Binds parsed name-level data to a complex and crossed module, resolving
/// cell ids and element names. Unknown ids/names produce diagnostics.
std::optional<ConnObject> bind_object(const Discretization& d, const CrossedModule& cm,
                                      const ParsedConnection& c,
                                      std::vector<Diagnostic>& diags);
std::optional<ConnMorphism> bind_morphism(const Discretization& d, const CrossedModule& cm,
                                          const ParsedConnection& c,
                                          std::vector<Diagnostic>& diags);
std::optional<GaugeObject> bind_gauge_object(const Discretization& d, const CrossedModule& cm,
                                             const ParsedGauge& g,
                                             std::vector<Diagnostic>& diags);
std::optional<GaugeMorphism> bind_gauge_morphism(const Discretization& d, const CrossedModule& cm,
                                                 const ParsedGauge& g,
                                                 std::vector<Diagnostic>& diags);

}  // namespace hgt

#endif
