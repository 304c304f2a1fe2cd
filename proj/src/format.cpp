#include "hgt/format.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace hgt {

using nlohmann::json;

const char* doc_kind_name(DocKind k) {
  switch (k) {
    case DocKind::crossed_module: return "crossed_module";
    case DocKind::discretization: return "discretization";
    case DocKind::connection: return "connection";
    case DocKind::gauge: return "gauge";
    case DocKind::change_script: return "change_script";
    case DocKind::scenario: return "scenario";
  }
  return "?";
}

std::string Diagnostic::to_string() const {
  std::string out = code;
  if (line != 0) out += " at line " + std::to_string(line) + " (byte " + std::to_string(byte) + ")";
  if (!path.empty()) out += " at " + path;
  return out + ": " + message;
}

namespace {

void diag(std::vector<Diagnostic>& diags, const std::string& code, const std::string& path,
          const std::string& message) {
  diags.push_back(Diagnostic{code, path, message, 0, 0});
}

bool expect_object(const json& j, const std::string& path, std::vector<Diagnostic>& diags) {
  if (j.is_object()) return true;
  diag(diags, "bad-type", path, "expected an object");
  return false;
}

bool expect_array(const json& j, const std::string& path, std::vector<Diagnostic>& diags) {
  if (j.is_array()) return true;
  diag(diags, "bad-type", path, "expected an array");
  return false;
}

bool expect_string(const json& j, const std::string& path, std::vector<Diagnostic>& diags) {
  if (j.is_string()) return true;
  diag(diags, "bad-type", path, "expected a string");
  return false;
}

// Rejects keys outside `allowed`; "schema" is always tolerated and, when a
// string, must match the expected kind.
void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& path,
                DocKind kind, std::vector<Diagnostic>& diags) {
  for (const auto& [key, value] : j.items()) {
    if (key == "schema") {
      if (!value.is_string() || value.get<std::string>() != doc_kind_name(kind))
        diag(diags, "bad-value", path + "/schema",
             std::string("schema must be \"") + doc_kind_name(kind) + "\"");
      continue;
    }
    if (allowed.find(key) == allowed.end())
      diag(diags, "unknown-key", path + "/" + key, "unknown key \"" + key + "\"");
  }
}

bool require_key(const json& j, const std::string& key, const std::string& path,
                 std::vector<Diagnostic>& diags) {
  if (j.contains(key)) return true;
  diag(diags, "missing-key", path, "missing required key \"" + key + "\"");
  return false;
}

// Identifiers label elements and cells; commas are reserved for composite
// table keys and the empty string is never a valid id.
bool check_identifier(const std::string& id, const std::string& path,
                      std::vector<Diagnostic>& diags) {
  if (id.empty()) {
    diag(diags, "bad-identifier", path, "empty identifier");
    return false;
  }
  if (id.find(',') != std::string::npos) {
    diag(diags, "bad-identifier", path, "identifier contains a comma: \"" + id + "\"");
    return false;
  }
  return true;
}

std::map<std::string, std::string> parse_string_map(const json& j, const std::string& path,
                                                    std::vector<Diagnostic>& diags) {
  std::map<std::string, std::string> out;
  if (!expect_object(j, path, diags)) return out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) {
      diag(diags, "bad-type", path + "/" + key, "expected a string value");
      continue;
    }
    out.emplace(key, value.get<std::string>());
  }
  return out;
}

struct RawGroup {
  std::vector<std::string> elements;
  std::string identity;
  std::map<std::string, std::string> mul;
  std::set<std::string> element_set;
};

std::optional<RawGroup> parse_group(const json& j, const std::string& path,
                                    std::vector<Diagnostic>& diags) {
  if (!expect_object(j, path, diags)) return std::nullopt;
  std::size_t before = diags.size();
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "elements" && key != "identity" && key != "mul")
      diag(diags, "unknown-key", path + "/" + key, "unknown key \"" + key + "\"");
  }
  if (!require_key(j, "elements", path, diags) || !require_key(j, "identity", path, diags) ||
      !require_key(j, "mul", path, diags))
    return std::nullopt;

  RawGroup g;
  if (expect_array(j["elements"], path + "/elements", diags)) {
    for (std::size_t i = 0; i < j["elements"].size(); ++i) {
      const json& e = j["elements"][i];
      std::string epath = path + "/elements/" + std::to_string(i);
      if (!expect_string(e, epath, diags)) continue;
      std::string name = e.get<std::string>();
      if (!check_identifier(name, epath, diags)) continue;
      if (!g.element_set.insert(name).second) {
        diag(diags, "duplicate-id", epath, "duplicate element \"" + name + "\"");
        continue;
      }
      g.elements.push_back(name);
    }
  }
  if (expect_string(j["identity"], path + "/identity", diags)) {
    g.identity = j["identity"].get<std::string>();
    if (g.element_set.find(g.identity) == g.element_set.end())
      diag(diags, "dangling-reference", path + "/identity",
           "identity \"" + g.identity + "\" is not a declared element");
  }
  g.mul = parse_string_map(j["mul"], path + "/mul", diags);
  for (const auto& [key, value] : g.mul) {
    std::string kpath = path + "/mul/" + key;
    auto comma = key.find(',');
    if (comma == std::string::npos) {
      diag(diags, "bad-value", kpath, "table key must be of the form \"a,b\"");
      continue;
    }
    std::string a = key.substr(0, comma), b = key.substr(comma + 1);
    if (g.element_set.find(a) == g.element_set.end())
      diag(diags, "dangling-reference", kpath, "unknown element \"" + a + "\"");
    if (g.element_set.find(b) == g.element_set.end())
      diag(diags, "dangling-reference", kpath, "unknown element \"" + b + "\"");
    if (g.element_set.find(value) == g.element_set.end())
      diag(diags, "dangling-reference", kpath, "unknown element \"" + value + "\"");
  }
  for (const std::string& a : g.elements)
    for (const std::string& b : g.elements)
      if (g.mul.find(a + "," + b) == g.mul.end())
        diag(diags, "missing-entry", path + "/mul", "missing entry \"" + a + "," + b + "\"");
  if (diags.size() != before) return std::nullopt;
  return g;
}

std::optional<CrossedModule> parse_crossed_module_json(const json& j, const std::string& path,
                                                       std::vector<Diagnostic>& diags) {
  if (!expect_object(j, path, diags)) return std::nullopt;
  check_keys(j, {"G", "H", "action", "boundary"}, path, DocKind::crossed_module, diags);
  if (!require_key(j, "G", path, diags) || !require_key(j, "H", path, diags) ||
      !require_key(j, "action", path, diags) || !require_key(j, "boundary", path, diags))
    return std::nullopt;

  auto G = parse_group(j["G"], path + "/G", diags);
  auto H = parse_group(j["H"], path + "/H", diags);
  if (!G || !H) return std::nullopt;

  std::size_t before = diags.size();
  auto action = parse_string_map(j["action"], path + "/action", diags);
  auto boundary = parse_string_map(j["boundary"], path + "/boundary", diags);

  for (const auto& [key, value] : action) {
    std::string kpath = path + "/action/" + key;
    auto comma = key.find(',');
    if (comma == std::string::npos) {
      diag(diags, "bad-value", kpath, "table key must be of the form \"g,h\"");
      continue;
    }
    std::string a = key.substr(0, comma), b = key.substr(comma + 1);
    if (G->element_set.find(a) == G->element_set.end())
      diag(diags, "dangling-reference", kpath, "unknown G element \"" + a + "\"");
    if (H->element_set.find(b) == H->element_set.end())
      diag(diags, "dangling-reference", kpath, "unknown H element \"" + b + "\"");
    if (H->element_set.find(value) == H->element_set.end())
      diag(diags, "dangling-reference", kpath, "unknown H element \"" + value + "\"");
  }
  for (const std::string& a : G->elements)
    for (const std::string& b : H->elements)
      if (action.find(a + "," + b) == action.end())
        diag(diags, "missing-entry", path + "/action", "missing entry \"" + a + "," + b + "\"");

  for (const auto& [key, value] : boundary) {
    std::string kpath = path + "/boundary/" + key;
    if (H->element_set.find(key) == H->element_set.end())
      diag(diags, "dangling-reference", kpath, "unknown H element \"" + key + "\"");
    if (G->element_set.find(value) == G->element_set.end())
      diag(diags, "dangling-reference", kpath, "unknown G element \"" + value + "\"");
  }
  for (const std::string& b : H->elements)
    if (boundary.find(b) == boundary.end())
      diag(diags, "missing-entry", path + "/boundary", "missing entry \"" + b + "\"");

  if (diags.size() != before) return std::nullopt;

  FiniteGroup fg = FiniteGroup::from_string_table(G->elements, G->identity, G->mul);
  FiniteGroup fh = FiniteGroup::from_string_table(H->elements, H->identity, H->mul);
  const int nh = fh.size();
  std::vector<Elem> act_tab(static_cast<std::size_t>(fg.size()) * nh);
  std::vector<Elem> bnd_tab(nh);
  for (Elem gi = 0; gi < fg.size(); ++gi)
    for (Elem hi = 0; hi < nh; ++hi)
      act_tab[static_cast<std::size_t>(gi) * nh + hi] =
          fh.index_of(action.at(fg.name(gi) + "," + fh.name(hi)));
  for (Elem hi = 0; hi < nh; ++hi) bnd_tab[hi] = fg.index_of(boundary.at(fh.name(hi)));
  return CrossedModule(
      std::move(fg), std::move(fh),
      [&act_tab, nh](Elem gi, Elem hi) { return act_tab[static_cast<std::size_t>(gi) * nh + hi]; },
      [&bnd_tab](Elem hi) { return bnd_tab[hi]; });
}

std::optional<EdgeWord> parse_word(const json& j, const std::string& path,
                                   std::vector<Diagnostic>& diags) {
  if (!expect_array(j, path, diags)) return std::nullopt;
  EdgeWord w;
  std::size_t before = diags.size();
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& s = j[i];
    std::string spath = path + "/" + std::to_string(i);
    if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_string()) {
      diag(diags, "bad-type", spath, "expected a [edge, direction] pair of strings");
      continue;
    }
    std::string dir = s[1].get<std::string>();
    if (dir != "+" && dir != "-") {
      diag(diags, "bad-value", spath, "direction must be \"+\" or \"-\"");
      continue;
    }
    w.push_back(Step{s[0].get<std::string>(), dir == "+" ? Dir::forward : Dir::reverse});
  }
  if (diags.size() != before) return std::nullopt;
  return w;
}

std::optional<Discretization> parse_discretization_json(const json& j, const std::string& path,
                                                        std::vector<Diagnostic>& diags) {
  if (!expect_object(j, path, diags)) return std::nullopt;
  check_keys(j, {"vertices", "edges", "faces"}, path, DocKind::discretization, diags);
  if (!require_key(j, "vertices", path, diags) || !require_key(j, "edges", path, diags) ||
      !require_key(j, "faces", path, diags))
    return std::nullopt;

  Discretization d;
  std::size_t before = diags.size();
  std::set<std::string> vset, eset, fset;

  if (expect_array(j["vertices"], path + "/vertices", diags))
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
      std::string vpath = path + "/vertices/" + std::to_string(i);
      if (!expect_string(j["vertices"][i], vpath, diags)) continue;
      std::string id = j["vertices"][i].get<std::string>();
      if (!check_identifier(id, vpath, diags)) continue;
      if (!vset.insert(id).second) {
        diag(diags, "duplicate-id", vpath, "duplicate vertex \"" + id + "\"");
        continue;
      }
      d.vertices.push_back(id);
    }

  if (expect_array(j["edges"], path + "/edges", diags))
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
      const json& e = j["edges"][i];
      std::string epath = path + "/edges/" + std::to_string(i);
      if (!expect_object(e, epath, diags)) continue;
      for (const auto& [key, value] : e.items()) {
        (void)value;
        if (key != "id" && key != "src" && key != "tgt")
          diag(diags, "unknown-key", epath + "/" + key, "unknown key \"" + key + "\"");
      }
      if (!require_key(e, "id", epath, diags) || !require_key(e, "src", epath, diags) ||
          !require_key(e, "tgt", epath, diags))
        continue;
      if (!expect_string(e["id"], epath + "/id", diags) ||
          !expect_string(e["src"], epath + "/src", diags) ||
          !expect_string(e["tgt"], epath + "/tgt", diags))
        continue;
      Edge edge{e["id"].get<std::string>(), e["src"].get<std::string>(),
                e["tgt"].get<std::string>()};
      if (!check_identifier(edge.id, epath + "/id", diags)) continue;
      if (!eset.insert(edge.id).second) {
        diag(diags, "duplicate-id", epath + "/id", "duplicate edge \"" + edge.id + "\"");
        continue;
      }
      if (vset.find(edge.src) == vset.end())
        diag(diags, "dangling-reference", epath + "/src",
             "unknown vertex \"" + edge.src + "\"");
      if (vset.find(edge.tgt) == vset.end())
        diag(diags, "dangling-reference", epath + "/tgt",
             "unknown vertex \"" + edge.tgt + "\"");
      d.edges.push_back(std::move(edge));
    }

  if (expect_array(j["faces"], path + "/faces", diags))
    for (std::size_t i = 0; i < j["faces"].size(); ++i) {
      const json& f = j["faces"][i];
      std::string fpath = path + "/faces/" + std::to_string(i);
      if (!expect_object(f, fpath, diags)) continue;
      for (const auto& [key, value] : f.items()) {
        (void)value;
        if (key != "id" && key != "v" && key != "w" && key != "top" && key != "bottom")
          diag(diags, "unknown-key", fpath + "/" + key, "unknown key \"" + key + "\"");
      }
      if (!require_key(f, "id", fpath, diags) || !require_key(f, "v", fpath, diags) ||
          !require_key(f, "w", fpath, diags) || !require_key(f, "top", fpath, diags) ||
          !require_key(f, "bottom", fpath, diags))
        continue;
      if (!expect_string(f["id"], fpath + "/id", diags) ||
          !expect_string(f["v"], fpath + "/v", diags) ||
          !expect_string(f["w"], fpath + "/w", diags))
        continue;
      Face face;
      face.id = f["id"].get<std::string>();
      face.zero_source = f["v"].get<std::string>();
      face.zero_target = f["w"].get<std::string>();
      if (!check_identifier(face.id, fpath + "/id", diags)) continue;
      if (!fset.insert(face.id).second) {
        diag(diags, "duplicate-id", fpath + "/id", "duplicate face \"" + face.id + "\"");
        continue;
      }
      if (vset.find(face.zero_source) == vset.end())
        diag(diags, "dangling-reference", fpath + "/v",
             "unknown vertex \"" + face.zero_source + "\"");
      if (vset.find(face.zero_target) == vset.end())
        diag(diags, "dangling-reference", fpath + "/w",
             "unknown vertex \"" + face.zero_target + "\"");
      auto top = parse_word(f["top"], fpath + "/top", diags);
      auto bottom = parse_word(f["bottom"], fpath + "/bottom", diags);
      if (!top || !bottom) continue;
      for (const auto& [word, wpath] :
           {std::pair<const EdgeWord&, std::string>{*top, fpath + "/top"},
            std::pair<const EdgeWord&, std::string>{*bottom, fpath + "/bottom"}})
        for (const Step& s : word)
          if (eset.find(s.edge) == eset.end())
            diag(diags, "dangling-reference", wpath, "unknown edge \"" + s.edge + "\"");
      face.one_source = std::move(*top);
      face.one_target = std::move(*bottom);
      d.faces.push_back(std::move(face));
    }

  if (diags.size() != before) return std::nullopt;
  return d;
}

std::optional<ParsedConnection> parse_connection_json(const json& j, const std::string& path,
                                                      std::vector<Diagnostic>& diags) {
  if (!expect_object(j, path, diags)) return std::nullopt;
  check_keys(j, {"g", "h", "eta"}, path, DocKind::connection, diags);
  if (!require_key(j, "g", path, diags) || !require_key(j, "h", path, diags))
    return std::nullopt;
  std::size_t before = diags.size();
  ParsedConnection c;
  c.g = parse_string_map(j["g"], path + "/g", diags);
  c.h = parse_string_map(j["h"], path + "/h", diags);
  if (j.contains("eta")) {
    c.has_eta = true;
    c.eta = parse_string_map(j["eta"], path + "/eta", diags);
  }
  if (diags.size() != before) return std::nullopt;
  return c;
}

std::optional<ParsedGauge> parse_gauge_json(const json& j, const std::string& path,
                                            std::vector<Diagnostic>& diags) {
  if (!expect_object(j, path, diags)) return std::nullopt;
  check_keys(j, {"gamma", "chi"}, path, DocKind::gauge, diags);
  if (!require_key(j, "gamma", path, diags)) return std::nullopt;
  std::size_t before = diags.size();
  ParsedGauge g;
  g.gamma = parse_string_map(j["gamma"], path + "/gamma", diags);
  if (j.contains("chi")) {
    g.has_chi = true;
    g.chi = parse_string_map(j["chi"], path + "/chi", diags);
  }
  if (diags.size() != before) return std::nullopt;
  return g;
}

std::optional<ChangeScript> parse_script_json(const json& j, const std::string& path,
                                              std::vector<Diagnostic>& diags) {
  if (!expect_array(j, path, diags)) return std::nullopt;
  ChangeScript script;
  std::size_t before = diags.size();
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& s = j[i];
    std::string spath = path + "/" + std::to_string(i);
    if (!expect_object(s, spath, diags)) continue;
    if (!require_key(s, "kind", spath, diags) || !require_key(s, "cell", spath, diags)) continue;
    if (!expect_string(s["kind"], spath + "/kind", diags) ||
        !expect_string(s["cell"], spath + "/cell", diags))
      continue;
    ChangeSpec spec;
    std::string kind = s["kind"].get<std::string>();
    spec.cell = s["cell"].get<std::string>();
    bool is_move = kind == "bigon_move";
    if (kind == "edge_flip")
      spec.kind = ChangeKind::edge_flip;
    else if (kind == "face_vflip")
      spec.kind = ChangeKind::face_vflip;
    else if (kind == "face_hflip")
      spec.kind = ChangeKind::face_hflip;
    else if (is_move)
      spec.kind = ChangeKind::bigon_move;
    else {
      diag(diags, "bad-value", spath + "/kind", "unknown change kind \"" + kind + "\"");
      continue;
    }
    for (const auto& [key, value] : s.items()) {
      (void)value;
      bool known = key == "kind" || key == "cell" ||
                   (is_move && (key == "v" || key == "w" || key == "nu" || key == "omega"));
      if (!known) diag(diags, "unknown-key", spath + "/" + key, "unknown key \"" + key + "\"");
    }
    if (is_move) {
      if (!require_key(s, "v", spath, diags) || !require_key(s, "w", spath, diags) ||
          !require_key(s, "nu", spath, diags) || !require_key(s, "omega", spath, diags))
        continue;
      if (!expect_string(s["v"], spath + "/v", diags) ||
          !expect_string(s["w"], spath + "/w", diags))
        continue;
      spec.new_zero_source = s["v"].get<std::string>();
      spec.new_zero_target = s["w"].get<std::string>();
      auto nu = parse_word(s["nu"], spath + "/nu", diags);
      auto omega = parse_word(s["omega"], spath + "/omega", diags);
      if (!nu || !omega) continue;
      spec.nu = std::move(*nu);
      spec.omega = std::move(*omega);
    }
    script.push_back(std::move(spec));
  }
  if (diags.size() != before) return std::nullopt;
  return script;
}

// Load-time cross-reference checks for bundled documents.
void check_scenario_refs(Document& doc, std::vector<Diagnostic>& diags) {
  if (!doc.cm || !doc.disc) return;
  if (doc.conn) {
    std::vector<Diagnostic> local;
    if (doc.conn->has_eta)
      bind_morphism(*doc.disc, *doc.cm, *doc.conn, local);
    else
      bind_object(*doc.disc, *doc.cm, *doc.conn, local);
    for (Diagnostic& dg : local) dg.path = "/conn" + dg.path;
    diags.insert(diags.end(), local.begin(), local.end());
  }
  if (doc.gauge) {
    std::vector<Diagnostic> local;
    if (doc.gauge->has_chi)
      bind_gauge_morphism(*doc.disc, *doc.cm, *doc.gauge, local);
    else
      bind_gauge_object(*doc.disc, *doc.cm, *doc.gauge, local);
    for (Diagnostic& dg : local) dg.path = "/gauge" + dg.path;
    diags.insert(diags.end(), local.begin(), local.end());
  }
  if (doc.script) {
    Discretization cur = *doc.disc;
    for (std::size_t i = 0; i < doc.script->size(); ++i) {
      Report r = validate_change(cur, (*doc.script)[i]);
      for (const Violation& v : r.violations)
        diag(diags, v.axiom == "change.dangling" ? "dangling-reference" : "bad-value",
             "/script/" + std::to_string(i), v.witness);
      if (!r.ok()) return;
      cur = apply_change(cur, (*doc.script)[i]);
    }
  }
}

std::optional<Document> parse_document(const json& j, DocKind expected, const std::string& path,
                                       std::vector<Diagnostic>& diags) {
  Document doc;
  doc.kind = expected;
  switch (expected) {
    case DocKind::crossed_module:
      doc.cm = parse_crossed_module_json(j, path, diags);
      if (!doc.cm) return std::nullopt;
      return doc;
    case DocKind::discretization:
      doc.disc = parse_discretization_json(j, path, diags);
      if (!doc.disc) return std::nullopt;
      return doc;
    case DocKind::connection:
      doc.conn = parse_connection_json(j, path, diags);
      if (!doc.conn) return std::nullopt;
      return doc;
    case DocKind::gauge:
      doc.gauge = parse_gauge_json(j, path, diags);
      if (!doc.gauge) return std::nullopt;
      return doc;
    case DocKind::change_script:
      doc.script = parse_script_json(j, path, diags);
      if (!doc.script) return std::nullopt;
      return doc;
    case DocKind::scenario: {
      if (!expect_object(j, path, diags)) return std::nullopt;
      check_keys(j, {"cm", "disc", "conn", "gauge", "script"}, path, DocKind::scenario, diags);
      if (!require_key(j, "cm", path, diags) || !require_key(j, "disc", path, diags))
        return std::nullopt;
      doc.cm = parse_crossed_module_json(j["cm"], path + "/cm", diags);
      doc.disc = parse_discretization_json(j["disc"], path + "/disc", diags);
      if (j.contains("conn")) doc.conn = parse_connection_json(j["conn"], path + "/conn", diags);
      if (j.contains("gauge")) doc.gauge = parse_gauge_json(j["gauge"], path + "/gauge", diags);
      if (j.contains("script"))
        doc.script = parse_script_json(j["script"], path + "/script", diags);
      if (!diags.empty()) return std::nullopt;
      check_scenario_refs(doc, diags);
      if (!diags.empty()) return std::nullopt;
      return doc;
    }
  }
  return std::nullopt;
}

}  // namespace

ParseResult parse(const std::string& bytes, DocKind expected) {
  ParseResult res;
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    Diagnostic d;
    d.code = "syntax";
    d.byte = e.byte;
    d.line = 1 + static_cast<std::size_t>(
                     std::count(bytes.begin(),
                                bytes.begin() + static_cast<std::ptrdiff_t>(
                                                    std::min(e.byte, bytes.size())),
                                '\n'));
    d.message = e.what();
    res.diagnostics.push_back(std::move(d));
    return res;
  }
  res.doc = parse_document(j, expected, "", res.diagnostics);
  if (!res.diagnostics.empty()) res.doc.reset();
  return res;
}

namespace {

json group_to_json(const FiniteGroup& g) {
  json out;
  out["elements"] = g.names();
  out["identity"] = g.name(g.identity());
  json mul = json::object();
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = 0; b < g.size(); ++b) mul[g.name(a) + "," + g.name(b)] = g.name(g.mul(a, b));
  out["mul"] = std::move(mul);
  return out;
}

json cm_to_json(const CrossedModule& cm) {
  json out;
  out["schema"] = doc_kind_name(DocKind::crossed_module);
  out["G"] = group_to_json(cm.g());
  out["H"] = group_to_json(cm.h());
  json action = json::object();
  for (Elem a = 0; a < cm.g().size(); ++a)
    for (Elem b = 0; b < cm.h().size(); ++b)
      action[cm.g().name(a) + "," + cm.h().name(b)] = cm.h().name(cm.act(a, b));
  out["action"] = std::move(action);
  json boundary = json::object();
  for (Elem b = 0; b < cm.h().size(); ++b) boundary[cm.h().name(b)] = cm.g().name(cm.bnd(b));
  out["boundary"] = std::move(boundary);
  return out;
}

json word_to_json(const EdgeWord& w) {
  json out = json::array();
  for (const Step& s : w)
    out.push_back(json::array({s.edge, s.dir == Dir::forward ? "+" : "-"}));
  return out;
}

json disc_to_json(const Discretization& d) {
  json out;
  out["schema"] = doc_kind_name(DocKind::discretization);
  out["vertices"] = d.vertices;
  json edges = json::array();
  for (const Edge& e : d.edges) edges.push_back({{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}});
  out["edges"] = std::move(edges);
  json faces = json::array();
  for (const Face& f : d.faces)
    faces.push_back({{"id", f.id},
                     {"v", f.zero_source},
                     {"w", f.zero_target},
                     {"top", word_to_json(f.one_source)},
                     {"bottom", word_to_json(f.one_target)}});
  out["faces"] = std::move(faces);
  return out;
}

json conn_to_json(const ParsedConnection& c) {
  json out;
  out["schema"] = doc_kind_name(DocKind::connection);
  out["g"] = c.g;
  out["h"] = c.h;
  if (c.has_eta) out["eta"] = c.eta;
  return out;
}

json gauge_to_json(const ParsedGauge& g) {
  json out;
  out["schema"] = doc_kind_name(DocKind::gauge);
  out["gamma"] = g.gamma;
  if (g.has_chi) out["chi"] = g.chi;
  return out;
}

json script_to_json(const ChangeScript& s) {
  json out = json::array();
  for (const ChangeSpec& spec : s) {
    json js;
    js["kind"] = change_kind_name(spec.kind);
    js["cell"] = spec.cell;
    if (spec.kind == ChangeKind::bigon_move) {
      js["v"] = spec.new_zero_source;
      js["w"] = spec.new_zero_target;
      js["nu"] = word_to_json(spec.nu);
      js["omega"] = word_to_json(spec.omega);
    }
    out.push_back(std::move(js));
  }
  return out;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize(const Document& doc) {
  switch (doc.kind) {
    case DocKind::crossed_module: return serialize_crossed_module(*doc.cm);
    case DocKind::discretization: return serialize_discretization(*doc.disc);
    case DocKind::connection: return serialize_connection(*doc.conn);
    case DocKind::gauge: return serialize_gauge(*doc.gauge);
    case DocKind::change_script: return serialize_script(*doc.script);
    case DocKind::scenario: {
      json out;
      out["schema"] = doc_kind_name(DocKind::scenario);
      json cm = cm_to_json(*doc.cm);
      cm.erase("schema");
      json disc = disc_to_json(*doc.disc);
      disc.erase("schema");
      out["cm"] = std::move(cm);
      out["disc"] = std::move(disc);
      if (doc.conn) {
        json c = conn_to_json(*doc.conn);
        c.erase("schema");
        out["conn"] = std::move(c);
      }
      if (doc.gauge) {
        json g = gauge_to_json(*doc.gauge);
        g.erase("schema");
        out["gauge"] = std::move(g);
      }
      if (doc.script) out["script"] = script_to_json(*doc.script);
      return dump_canonical(out);
    }
  }
  fail("cannot serialize document");
}

std::string serialize_crossed_module(const CrossedModule& cm) {
  return dump_canonical(cm_to_json(cm));
}
std::string serialize_discretization(const Discretization& d) {
  return dump_canonical(disc_to_json(d));
}
std::string serialize_connection(const ParsedConnection& c) {
  return dump_canonical(conn_to_json(c));
}
std::string serialize_gauge(const ParsedGauge& g) { return dump_canonical(gauge_to_json(g)); }
std::string serialize_script(const ChangeScript& s) { return dump_canonical(script_to_json(s)); }

ParsedConnection unparse_connection(const CrossedModule& cm, const ConnObject& x) {
  ParsedConnection out;
  for (const auto& [id, v] : x.g) out.g.emplace(id, cm.g().name(v));
  for (const auto& [id, v] : x.h) out.h.emplace(id, cm.h().name(v));
  return out;
}

ParsedConnection unparse_connection(const CrossedModule& cm, const ConnMorphism& m) {
  ParsedConnection out = unparse_connection(cm, m.source);
  out.has_eta = true;
  for (const auto& [id, v] : m.eta) out.eta.emplace(id, cm.h().name(v));
  return out;
}

ParsedGauge unparse_gauge(const CrossedModule& cm, const GaugeObject& g) {
  ParsedGauge out;
  for (const auto& [id, v] : g.gamma) out.gamma.emplace(id, cm.g().name(v));
  return out;
}

ParsedGauge unparse_gauge(const CrossedModule& cm, const GaugeMorphism& m) {
  ParsedGauge out;
  out.has_chi = true;
  for (const auto& [id, v] : m.gamma) out.gamma.emplace(id, cm.g().name(v));
  for (const auto& [id, v] : m.chi) out.chi.emplace(id, cm.h().name(v));
  return out;
}

namespace {

// Resolves a string-keyed assignment against a declared cell list and a group.
bool bind_cells(const std::vector<std::string>& cells, const FiniteGroup& grp,
                const std::map<std::string, std::string>& raw, const char* section,
                CellMap& out, std::vector<Diagnostic>& diags) {
  std::size_t before = diags.size();
  for (const std::string& id : cells) {
    auto it = raw.find(id);
    if (it == raw.end()) {
      diag(diags, "missing-entry", std::string("/") + section, "no entry for cell \"" + id + "\"");
      continue;
    }
    if (!grp.contains(it->second)) {
      diag(diags, "dangling-reference", std::string("/") + section + "/" + id,
           "unknown element \"" + it->second + "\"");
      continue;
    }
    out.emplace(id, grp.index_of(it->second));
  }
  for (const auto& [id, v] : raw) {
    (void)v;
    if (std::find(cells.begin(), cells.end(), id) == cells.end())
      diag(diags, "dangling-reference", std::string("/") + section + "/" + id,
           "unknown cell \"" + id + "\"");
  }
  return diags.size() == before;
}

}  // namespace

std::optional<ConnObject> bind_object(const Discretization& d, const CrossedModule& cm,
                                      const ParsedConnection& c,
                                      std::vector<Diagnostic>& diags) {
  std::vector<std::string> edge_ids, face_ids;
  for (const Edge& e : d.edges) edge_ids.push_back(e.id);
  for (const Face& f : d.faces) face_ids.push_back(f.id);
  ConnObject x;
  bool okay = bind_cells(edge_ids, cm.g(), c.g, "g", x.g, diags);
  okay &= bind_cells(face_ids, cm.h(), c.h, "h", x.h, diags);
  if (!okay) return std::nullopt;
  return x;
}

std::optional<ConnMorphism> bind_morphism(const Discretization& d, const CrossedModule& cm,
                                          const ParsedConnection& c,
                                          std::vector<Diagnostic>& diags) {
  auto x = bind_object(d, cm, c, diags);
  if (!x) return std::nullopt;
  if (!c.has_eta) {
    diag(diags, "missing-key", "", "connection morphism requires an \"eta\" section");
    return std::nullopt;
  }
  std::vector<std::string> edge_ids;
  for (const Edge& e : d.edges) edge_ids.push_back(e.id);
  ConnMorphism m;
  m.source = std::move(*x);
  if (!bind_cells(edge_ids, cm.h(), c.eta, "eta", m.eta, diags)) return std::nullopt;
  return m;
}

std::optional<GaugeObject> bind_gauge_object(const Discretization& d, const CrossedModule& cm,
                                             const ParsedGauge& g,
                                             std::vector<Diagnostic>& diags) {
  GaugeObject out;
  if (!bind_cells(d.vertices, cm.g(), g.gamma, "gamma", out.gamma, diags)) return std::nullopt;
  return out;
}

std::optional<GaugeMorphism> bind_gauge_morphism(const Discretization& d, const CrossedModule& cm,
                                                 const ParsedGauge& g,
                                                 std::vector<Diagnostic>& diags) {
  GaugeMorphism out;
  bool okay = bind_cells(d.vertices, cm.g(), g.gamma, "gamma", out.gamma, diags);
  if (!g.has_chi) {
    diag(diags, "missing-key", "", "gauge morphism requires a \"chi\" section");
    return std::nullopt;
  }
  okay &= bind_cells(d.vertices, cm.h(), g.chi, "chi", out.chi, diags);
  if (!okay) return std::nullopt;
  return out;
}

}  // namespace hgt
