#include "hgt/conn.hpp"

#include <cmath>

namespace hgt {

static Report check_totality(const Discretization& d, const CellMap& m, const char* what,
                             bool edges) {
  Report r;
  if (edges) {
    for (const Edge& e : d.edges)
      if (m.find(e.id) == m.end()) r.add("assignment.missing", std::string(what) + " on edge " + e.id);
  } else {
    for (const Face& f : d.faces)
      if (m.find(f.id) == m.end()) r.add("assignment.missing", std::string(what) + " on face " + f.id);
  }
  for (const auto& [id, v] : m) {
    (void)v;
    if (edges ? d.find_edge(id) == nullptr : d.find_face(id) == nullptr)
      r.add("assignment.stray", std::string(what) + " names undeclared cell " + id);
  }
  return r;
}

Report validate_object(const Discretization& d, const CrossedModule& cm, const ConnObject& x) {
  Report r = check_totality(d, x.g, "g", true);
  r.merge(check_totality(d, x.h, "h", false));
  if (!r.ok()) return r;

  const FiniteGroup& G = cm.g();
  for (const Face& f : d.faces) {
    Elem top = evaluate_word_G(G, x.g, f.one_source);
    Elem bottom = evaluate_word_G(G, x.g, f.one_target);
    Elem h = x.h.at(f.id);
    if (cm.bnd(h) != G.mul(bottom, G.inv(top)))
      r.add("face.condition", "face " + f.id + ": bnd(h)=" + G.name(cm.bnd(h)) +
                                  " but boundary words give " + G.name(G.mul(bottom, G.inv(top))));
  }
  return r;
}

Report validate_morphism(const Discretization& d, const CrossedModule& cm,
                         const ConnMorphism& m) {
  Report r = validate_object(d, cm, m.source);
  r.merge(check_totality(d, m.eta, "eta", true));
  return r;
}

Square edge_square(const CrossedModule& cm, const ConnMorphism& m, const std::string& edge_id) {
  auto g = m.source.g.find(edge_id);
  auto e = m.eta.find(edge_id);
  if (g == m.source.g.end() || e == m.eta.end()) fail("missing assignment for edge " + edge_id);
  return make_square(cm, g->second, e->second);
}

static std::map<std::string, Square> edge_squares(const Discretization& d,
                                                  const CrossedModule& cm,
                                                  const ConnMorphism& m) {
  std::map<std::string, Square> out;
  for (const Edge& e : d.edges) out.emplace(e.id, edge_square(cm, m, e.id));
  return out;
}

ConnObject morphism_target(const Discretization& d, const CrossedModule& cm,
                           const ConnMorphism& m) {
  Report r = validate_morphism(d, cm, m);
  if (!r.ok())
    fail("morphism is not valid: " + r.violations.front().axiom + " " +
         r.violations.front().witness);

  ConnObject out;
  for (const auto& [id, g] : m.source.g)
    out.g.emplace(id, cm.g().mul(cm.bnd(m.eta.at(id)), g));

  // Per face, the unknown square is isolated by stacking the vertical
  // inverse of the 1-source word square on top of the face square and the
  // 1-target word square below it.
  std::map<std::string, Square> squares = edge_squares(d, cm, m);
  const FiniteGroup& G = cm.g();
  for (const Face& f : d.faces) {
    Square face_sq{&cm, evaluate_word_G(G, m.source.g, f.one_source),
                   evaluate_word_G(G, m.source.g, f.one_target), m.source.h.at(f.id)};
    Square source_word = evaluate_word_square(cm, squares, f.one_source);
    Square target_word = evaluate_word_square(cm, squares, f.one_target);
    Square solved = vcompose(vcompose(vinverse(source_word), face_sq), target_word);
    out.h.emplace(f.id, solved.label);
  }
  return out;
}

ConnMorphism conn_identity(const CrossedModule& cm, const ConnObject& x) {
  ConnMorphism m;
  m.source = x;
  for (const auto& [id, g] : x.g) {
    (void)g;
    m.eta.emplace(id, cm.h().identity());
  }
  return m;
}

ConnMorphism conn_compose(const Discretization& d, const CrossedModule& cm,
                          const ConnMorphism& second, const ConnMorphism& first) {
  if (morphism_target(d, cm, first) != second.source)
    fail("morphism composition mismatch: source of the later morphism is not the target of the earlier one");
  ConnMorphism out;
  out.source = first.source;
  for (const auto& [id, e1] : first.eta)
    out.eta.emplace(id, cm.h().mul(second.eta.at(id), e1));
  return out;
}

ConnMorphism conn_inverse(const Discretization& d, const CrossedModule& cm,
                          const ConnMorphism& m) {
  ConnMorphism out;
  out.source = morphism_target(d, cm, m);
  for (const auto& [id, e] : m.eta) out.eta.emplace(id, cm.h().inv(e));
  return out;
}

double object_state_bound(const Discretization& d, const CrossedModule& cm) {
  return std::pow(static_cast<double>(cm.g().size()), static_cast<double>(d.edges.size())) *
         std::pow(static_cast<double>(cm.h().size()), static_cast<double>(d.faces.size()));
}

namespace {

// Fixed-radix odometer; increments the last position fastest. Returns false
// once every position has wrapped around.
bool advance(std::vector<Elem>& digits, const std::vector<int>& radix) {
  size_t j = digits.size();
  while (j > 0) {
    if (++digits[j - 1] < radix[j - 1]) return true;
    digits[j - 1] = 0;
    --j;
  }
  return false;
}

}  // namespace

std::vector<ConnObject> enumerate_objects(const Discretization& d, const CrossedModule& cm,
                                          std::uint64_t max_states) {
  double bound = object_state_bound(d, cm);
  if (bound > static_cast<double>(max_states))
    throw budget_error("enumeration refused: state bound " + std::to_string(bound) +
                           " exceeds budget " + std::to_string(max_states),
                       bound);

  const FiniteGroup& G = cm.g();
  const FiniteGroup& H = cm.h();
  std::vector<std::string> edge_ids = d.edge_ids_sorted();
  std::vector<std::string> face_ids = d.face_ids_sorted();

  // Fibers of the boundary map, element indices ascending.
  std::vector<std::vector<Elem>> fibers(G.size());
  for (Elem hi = 0; hi < H.size(); ++hi) fibers[cm.bnd(hi)].push_back(hi);

  std::vector<ConnObject> out;
  std::vector<Elem> gv(edge_ids.size(), 0);
  std::vector<int> gradix(edge_ids.size(), G.size());
  do {
    CellMap g;
    for (size_t i = 0; i < edge_ids.size(); ++i) g.emplace(edge_ids[i], gv[i]);

    // Each face needs h with bnd(h) equal to the boundary-word holonomy;
    // collect the fibers and walk their product.
    std::vector<const std::vector<Elem>*> face_fibers;
    std::vector<int> fradix;
    bool feasible = true;
    for (const std::string& fid : face_ids) {
      const Face& f = *d.find_face(fid);
      Elem top = evaluate_word_G(G, g, f.one_source);
      Elem bottom = evaluate_word_G(G, g, f.one_target);
      const std::vector<Elem>& fiber = fibers[G.mul(bottom, G.inv(top))];
      if (fiber.empty()) {
        feasible = false;
        break;
      }
      face_fibers.push_back(&fiber);
      fradix.push_back(static_cast<int>(fiber.size()));
    }
    if (!feasible) continue;

    std::vector<Elem> pick(face_ids.size(), 0);
    do {
      ConnObject x;
      x.g = g;
      for (size_t i = 0; i < face_ids.size(); ++i)
        x.h.emplace(face_ids[i], (*face_fibers[i])[pick[i]]);
      out.push_back(std::move(x));
    } while (advance(pick, fradix));
  } while (advance(gv, gradix));
  return out;
}

std::uint64_t count_morphisms(const Discretization& d, const CrossedModule& cm,
                              std::uint64_t max_states) {
  std::uint64_t objects = enumerate_objects(d, cm, max_states).size();
  std::uint64_t per_object = 1;
  const std::uint64_t h = static_cast<std::uint64_t>(cm.h().size());
  for (size_t i = 0; i < d.edges.size(); ++i) {
    if (per_object > UINT64_MAX / h) throw budget_error("morphism count overflows", 1e30);
    per_object *= h;
  }
  if (objects != 0 && per_object > UINT64_MAX / objects)
    throw budget_error("morphism count overflows", 1e30);
  return objects * per_object;
}

std::vector<ConnMorphism> enumerate_morphisms(const Discretization& d, const CrossedModule& cm,
                                              std::uint64_t max_states) {
  std::vector<ConnObject> objects = enumerate_objects(d, cm, max_states);
  double bound = static_cast<double>(objects.size()) *
                 std::pow(static_cast<double>(cm.h().size()), static_cast<double>(d.edges.size()));
  if (bound > static_cast<double>(max_states))
    throw budget_error("enumeration refused: state bound " + std::to_string(bound) +
                           " exceeds budget " + std::to_string(max_states),
                       bound);

  std::vector<std::string> edge_ids = d.edge_ids_sorted();
  std::vector<int> radix(edge_ids.size(), cm.h().size());
  std::vector<ConnMorphism> out;
  for (const ConnObject& x : objects) {
    std::vector<Elem> ev(edge_ids.size(), 0);
    do {
      ConnMorphism m;
      m.source = x;
      for (size_t i = 0; i < edge_ids.size(); ++i) m.eta.emplace(edge_ids[i], ev[i]);
      out.push_back(std::move(m));
    } while (advance(ev, radix));
  }
  return out;
}

}  // namespace hgt
