#include "hgt/gauge.hpp"

#include <algorithm>
#include <cmath>

namespace hgt {

static Report check_vertex_totality(const Discretization& d, const CellMap& m, const char* what) {
  Report r;
  for (const std::string& v : d.vertices)
    if (m.find(v) == m.end()) r.add("assignment.missing", std::string(what) + " on vertex " + v);
  for (const auto& [id, v] : m) {
    (void)v;
    if (!d.has_vertex(id)) r.add("assignment.stray", std::string(what) + " names undeclared vertex " + id);
  }
  return r;
}

Report validate_gauge_object(const Discretization& d, const CrossedModule& cm,
                             const GaugeObject& g) {
  (void)cm;
  return check_vertex_totality(d, g.gamma, "gamma");
}

Report validate_gauge_morphism(const Discretization& d, const CrossedModule& cm,
                               const GaugeMorphism& m) {
  (void)cm;
  Report r = check_vertex_totality(d, m.gamma, "gamma");
  r.merge(check_vertex_totality(d, m.chi, "chi"));
  return r;
}

Square vertex_square(const CrossedModule& cm, const GaugeMorphism& m, const std::string& v) {
  auto g = m.gamma.find(v);
  auto c = m.chi.find(v);
  if (g == m.gamma.end() || c == m.chi.end()) fail("missing assignment for vertex " + v);
  return make_square(cm, g->second, c->second);
}

GaugeObject gauge_target(const CrossedModule& cm, const GaugeMorphism& m) {
  GaugeObject out;
  for (const auto& [v, g] : m.gamma) out.gamma.emplace(v, cm.g().mul(cm.bnd(m.chi.at(v)), g));
  return out;
}

GaugeMorphism gauge_identity(const CrossedModule& cm, const GaugeObject& g) {
  GaugeMorphism m;
  m.gamma = g.gamma;
  for (const auto& [v, e] : g.gamma) {
    (void)e;
    m.chi.emplace(v, cm.h().identity());
  }
  return m;
}

GaugeMorphism gauge_compose(const CrossedModule& cm, const GaugeMorphism& second,
                            const GaugeMorphism& first) {
  if (gauge_target(cm, first).gamma != second.gamma)
    fail("gauge composition mismatch: source of the later morphism is not the target of the earlier one");
  GaugeMorphism out;
  out.gamma = first.gamma;
  for (const auto& [v, c1] : first.chi) out.chi.emplace(v, cm.h().mul(second.chi.at(v), c1));
  return out;
}

GaugeMorphism gauge_compose_inverse(const CrossedModule& cm, const GaugeMorphism& m) {
  GaugeMorphism out;
  out.gamma = gauge_target(cm, m).gamma;
  for (const auto& [v, c] : m.chi) out.chi.emplace(v, cm.h().inv(c));
  return out;
}

GaugeObject gauge_tensor(const CrossedModule& cm, const GaugeObject& left,
                         const GaugeObject& right) {
  GaugeObject out;
  for (const auto& [v, g] : left.gamma) {
    auto it = right.gamma.find(v);
    if (it == right.gamma.end()) fail("gauge tensor over mismatched vertex sets at " + v);
    out.gamma.emplace(v, cm.g().mul(g, it->second));
  }
  if (right.gamma.size() != left.gamma.size()) fail("gauge tensor over mismatched vertex sets");
  return out;
}

GaugeMorphism gauge_tensor(const CrossedModule& cm, const GaugeMorphism& left,
                           const GaugeMorphism& right) {
  GaugeMorphism out;
  for (const auto& [v, g] : left.gamma) {
    auto it = right.gamma.find(v);
    if (it == right.gamma.end()) fail("gauge tensor over mismatched vertex sets at " + v);
    Square s = hcompose(vertex_square(cm, left, v), vertex_square(cm, right, v));
    out.gamma.emplace(v, s.top);
    out.chi.emplace(v, s.label);
  }
  if (right.gamma.size() != left.gamma.size()) fail("gauge tensor over mismatched vertex sets");
  return out;
}

GaugeMorphism gauge_tensor_inverse(const CrossedModule& cm, const GaugeMorphism& m) {
  GaugeMorphism out;
  for (const auto& [v, g] : m.gamma) {
    (void)g;
    Square s = hinverse(vertex_square(cm, m, v));
    out.gamma.emplace(v, s.top);
    out.chi.emplace(v, s.label);
  }
  return out;
}

static ConnObject act_object_impl(const Discretization& d, const CrossedModule& cm,
                                  const GaugeObject& gm, const ConnObject& x) {
  const FiniteGroup& G = cm.g();
  ConnObject out;
  for (const Edge& e : d.edges) {
    Elem g = x.g.at(e.id);
    out.g.emplace(e.id, G.mul(G.mul(gm.gamma.at(e.src), g), G.inv(gm.gamma.at(e.tgt))));
  }
  for (const Face& f : d.faces)
    out.h.emplace(f.id, cm.act(gm.gamma.at(f.zero_source), x.h.at(f.id)));
  return out;
}

ConnObject act_object(const Discretization& d, const CrossedModule& cm, const GaugeObject& gm,
                      const ConnObject& x) {
  Report r = validate_gauge_object(d, cm, gm);
  if (!r.ok()) fail("gauge object is not valid: " + r.violations.front().witness);
  r = validate_object(d, cm, x);
  if (!r.ok())
    fail("connection object is not valid: " + r.violations.front().axiom + " " +
         r.violations.front().witness);
  return act_object_impl(d, cm, gm, x);
}

ConnMorphism act_morphism(const Discretization& d, const CrossedModule& cm,
                          const GaugeMorphism& gm, const ConnMorphism& m) {
  Report r = validate_gauge_morphism(d, cm, gm);
  if (!r.ok()) fail("gauge morphism is not valid: " + r.violations.front().witness);
  r = validate_morphism(d, cm, m);
  if (!r.ok())
    fail("connection morphism is not valid: " + r.violations.front().axiom + " " +
         r.violations.front().witness);

  ConnMorphism out;
  out.source = act_object_impl(d, cm, GaugeObject{gm.gamma}, m.source);
  for (const Edge& e : d.edges) {
    Square s = hcompose(vertex_square(cm, gm, e.src),
                        hcompose(edge_square(cm, m, e.id),
                                 hinverse(vertex_square(cm, gm, e.tgt))));
    out.eta.emplace(e.id, s.label);
  }
  return out;
}

std::vector<GaugeObject> enumerate_gauge_objects(const Discretization& d, const CrossedModule& cm,
                                                 std::uint64_t max_states) {
  double bound = std::pow(static_cast<double>(cm.g().size()),
                          static_cast<double>(d.vertices.size()));
  if (bound > static_cast<double>(max_states))
    throw budget_error("enumeration refused: state bound " + std::to_string(bound) +
                           " exceeds budget " + std::to_string(max_states),
                       bound);

  std::vector<std::string> vs = d.vertices;
  std::sort(vs.begin(), vs.end());
  std::vector<GaugeObject> out;
  std::vector<Elem> gv(vs.size(), 0);
  for (;;) {
    GaugeObject g;
    for (size_t i = 0; i < vs.size(); ++i) g.gamma.emplace(vs[i], gv[i]);
    out.push_back(std::move(g));
    size_t j = vs.size();
    while (j > 0) {
      if (++gv[j - 1] < cm.g().size()) break;
      gv[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
  }
  return out;
}

std::vector<GaugeMorphism> enumerate_gauge_morphisms(const Discretization& d,
                                                     const CrossedModule& cm,
                                                     std::uint64_t max_states) {
  double per = static_cast<double>(cm.g().size()) * cm.h().size();
  double bound = std::pow(per, static_cast<double>(d.vertices.size()));
  if (bound > static_cast<double>(max_states))
    throw budget_error("enumeration refused: state bound " + std::to_string(bound) +
                           " exceeds budget " + std::to_string(max_states),
                       bound);

  std::vector<std::string> vs = d.vertices;
  std::sort(vs.begin(), vs.end());
  std::vector<GaugeMorphism> out;
  const int n = cm.g().size() * cm.h().size();
  std::vector<int> code(vs.size(), 0);
  for (;;) {
    GaugeMorphism m;
    for (size_t i = 0; i < vs.size(); ++i) {
      m.gamma.emplace(vs[i], code[i] / cm.h().size());
      m.chi.emplace(vs[i], code[i] % cm.h().size());
    }
    out.push_back(std::move(m));
    size_t j = vs.size();
    while (j > 0) {
      if (++code[j - 1] < n) break;
      code[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
  }
  return out;
}

}  // namespace hgt
