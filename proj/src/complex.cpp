#include "hgt/complex.hpp"

#include <algorithm>

namespace hgt {

bool Discretization::has_vertex(const std::string& id) const {
  return std::find(vertices.begin(), vertices.end(), id) != vertices.end();
}

const Edge* Discretization::find_edge(const std::string& id) const {
  for (const Edge& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

const Face* Discretization::find_face(const std::string& id) const {
  for (const Face& f : faces)
    if (f.id == id) return &f;
  return nullptr;
}

std::vector<std::string> Discretization::edge_ids_sorted() const {
  std::vector<std::string> ids;
  ids.reserve(edges.size());
  for (const Edge& e : edges) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::string> Discretization::face_ids_sorted() const {
  std::vector<std::string> ids;
  ids.reserve(faces.size());
  for (const Face& f : faces) ids.push_back(f.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

static std::string step_source(const Discretization& d, const Step& s) {
  const Edge* e = d.find_edge(s.edge);
  if (e == nullptr) fail("word references undeclared edge: " + s.edge);
  return s.dir == Dir::forward ? e->src : e->tgt;
}

static std::string step_target(const Discretization& d, const Step& s) {
  const Edge* e = d.find_edge(s.edge);
  if (e == nullptr) fail("word references undeclared edge: " + s.edge);
  return s.dir == Dir::forward ? e->tgt : e->src;
}

std::string word_source(const Discretization& d, const EdgeWord& w) {
  if (w.empty()) fail("empty word has no source");
  return step_source(d, w.front());
}

std::string word_target(const Discretization& d, const EdgeWord& w) {
  if (w.empty()) fail("empty word has no target");
  return step_target(d, w.back());
}

bool word_is_path(const Discretization& d, const EdgeWord& w) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (d.find_edge(w[i].edge) == nullptr) return false;
    if (i + 1 < w.size() && step_target(d, w[i]) != step_source(d, w[i + 1])) return false;
  }
  return true;
}

Report validate_discretization(const Discretization& d) {
  Report r;
  {
    std::vector<std::string> seen;
    for (const std::string& v : d.vertices) {
      if (std::find(seen.begin(), seen.end(), v) != seen.end())
        r.add("cell.duplicate", "vertex " + v);
      seen.push_back(v);
    }
  }
  {
    std::vector<std::string> seen;
    for (const Edge& e : d.edges) {
      if (std::find(seen.begin(), seen.end(), e.id) != seen.end())
        r.add("cell.duplicate", "edge " + e.id);
      seen.push_back(e.id);
      if (!d.has_vertex(e.src)) r.add("edge.dangling", e.id + ": source vertex " + e.src);
      if (!d.has_vertex(e.tgt)) r.add("edge.dangling", e.id + ": target vertex " + e.tgt);
    }
  }
  std::vector<std::string> seen_faces;
  for (const Face& f : d.faces) {
    if (std::find(seen_faces.begin(), seen_faces.end(), f.id) != seen_faces.end())
      r.add("cell.duplicate", "face " + f.id);
    seen_faces.push_back(f.id);
    if (!d.has_vertex(f.zero_source)) r.add("face.dangling", f.id + ": 0-source " + f.zero_source);
    if (!d.has_vertex(f.zero_target)) r.add("face.dangling", f.id + ": 0-target " + f.zero_target);

    bool refs_ok = true;
    for (const auto& [name, word] :
         {std::pair<const char*, const EdgeWord&>{"1-source", f.one_source},
          std::pair<const char*, const EdgeWord&>{"1-target", f.one_target}}) {
      if (word.empty()) {
        r.add("face.word-empty", f.id + ": " + name);
        refs_ok = false;
        continue;
      }
      for (const Step& s : word)
        if (d.find_edge(s.edge) == nullptr) {
          r.add("face.dangling", f.id + ": " + name + " uses undeclared edge " + s.edge);
          refs_ok = false;
        }
    }
    if (!refs_ok) continue;  // path checks need resolvable references

    for (const auto& [name, word] :
         {std::pair<const char*, const EdgeWord&>{"1-source", f.one_source},
          std::pair<const char*, const EdgeWord&>{"1-target", f.one_target}}) {
      if (!word_is_path(d, word)) {
        r.add("face.word-disconnected", f.id + ": " + name + " is not a connected path");
        continue;
      }
      if (word_source(d, word) != f.zero_source || word_target(d, word) != f.zero_target)
        r.add("face.word-endpoints",
              f.id + ": " + name + " is not a path from the 0-source to the 0-target");
    }
  }
  return r;
}

Elem evaluate_word_G(const FiniteGroup& g, const CellMap& assignment, const EdgeWord& w) {
  Elem acc = g.identity();
  for (const Step& s : w) {
    auto it = assignment.find(s.edge);
    if (it == assignment.end()) fail("missing assignment for edge " + s.edge);
    Elem v = it->second;
    acc = g.mul(acc, s.dir == Dir::forward ? v : g.inv(v));
  }
  return acc;
}

Square evaluate_word_square(const CrossedModule& cm,
                            const std::map<std::string, Square>& per_edge, const EdgeWord& w) {
  Square acc = identity_square(cm, cm.g().identity());
  for (const Step& s : w) {
    auto it = per_edge.find(s.edge);
    if (it == per_edge.end()) fail("missing square for edge " + s.edge);
    acc = hcompose(acc, s.dir == Dir::forward ? it->second : hinverse(it->second));
  }
  return acc;
}

EdgeWord reverse_word(const EdgeWord& w) {
  EdgeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->edge, flip(it->dir)});
  return out;
}

EdgeWord reduce_word(const EdgeWord& w) {
  EdgeWord out;
  for (const Step& s : w) {
    if (!out.empty() && out.back().edge == s.edge && out.back().dir == flip(s.dir))
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

std::string word_to_string(const EdgeWord& w) {
  std::string out;
  for (const Step& s : w) {
    if (!out.empty()) out += ' ';
    out += s.edge;
    out += (s.dir == Dir::forward ? '+' : '-');
  }
  return out.empty() ? "(empty)" : out;
}

}  // namespace hgt
