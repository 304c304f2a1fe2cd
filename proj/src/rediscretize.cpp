#include "hgt/rediscretize.hpp"

namespace hgt {

const char* change_kind_name(ChangeKind k) {
  switch (k) {
    case ChangeKind::edge_flip: return "edge_flip";
    case ChangeKind::face_vflip: return "face_vflip";
    case ChangeKind::face_hflip: return "face_hflip";
    case ChangeKind::bigon_move: return "bigon_move";
  }
  return "?";
}

Report validate_change(const Discretization& d, const ChangeSpec& spec) {
  Report r;
  if (spec.kind == ChangeKind::edge_flip) {
    if (d.find_edge(spec.cell) == nullptr) r.add("change.dangling", "edge " + spec.cell);
    return r;
  }
  const Face* f = d.find_face(spec.cell);
  if (f == nullptr) {
    r.add("change.dangling", "face " + spec.cell);
    return r;
  }
  if (spec.kind != ChangeKind::bigon_move) return r;

  if (!d.has_vertex(spec.new_zero_source))
    r.add("change.dangling", "new 0-source vertex " + spec.new_zero_source);
  if (!d.has_vertex(spec.new_zero_target))
    r.add("change.dangling", "new 0-target vertex " + spec.new_zero_target);
  for (const Step& s : spec.nu)
    if (d.find_edge(s.edge) == nullptr) r.add("change.dangling", "nu uses undeclared edge " + s.edge);
  for (const Step& s : spec.omega)
    if (d.find_edge(s.edge) == nullptr)
      r.add("change.dangling", "omega uses undeclared edge " + s.edge);
  if (!r.ok()) return r;

  // nu must run from the new 0-source to the old one; empty nu means the
  // 0-source is unchanged. Symmetrically for omega on the target side.
  if (spec.nu.empty()) {
    if (spec.new_zero_source != f->zero_source)
      r.add("change.endpoints", "empty nu but 0-source changes");
  } else if (!word_is_path(d, spec.nu)) {
    r.add("change.disconnected", "nu is not a connected path");
  } else if (word_source(d, spec.nu) != spec.new_zero_source ||
             word_target(d, spec.nu) != f->zero_source) {
    r.add("change.endpoints", "nu is not a path from the new 0-source to the old one");
  }
  if (spec.omega.empty()) {
    if (spec.new_zero_target != f->zero_target)
      r.add("change.endpoints", "empty omega but 0-target changes");
  } else if (!word_is_path(d, spec.omega)) {
    r.add("change.disconnected", "omega is not a connected path");
  } else if (word_source(d, spec.omega) != f->zero_target ||
             word_target(d, spec.omega) != spec.new_zero_target) {
    r.add("change.endpoints", "omega is not a path from the old 0-target to the new one");
  }
  return r;
}

static void require_valid(const Discretization& d, const ChangeSpec& spec) {
  Report r = validate_change(d, spec);
  if (!r.ok())
    fail("invalid change spec: " + r.violations.front().axiom + " " +
         r.violations.front().witness);
}

static EdgeWord whisker(const EdgeWord& nu, const EdgeWord& word, const EdgeWord& omega) {
  EdgeWord out = nu;
  out.insert(out.end(), word.begin(), word.end());
  out.insert(out.end(), omega.begin(), omega.end());
  return reduce_word(out);
}

Discretization apply_change(const Discretization& d, const ChangeSpec& spec) {
  require_valid(d, spec);
  Discretization out = d;
  switch (spec.kind) {
    case ChangeKind::edge_flip: {
      for (Edge& e : out.edges)
        if (e.id == spec.cell) std::swap(e.src, e.tgt);
      // Words still traverse the same arcs; steps over the flipped edge
      // reverse their stated direction.
      for (Face& f : out.faces) {
        for (Step& s : f.one_source)
          if (s.edge == spec.cell) s.dir = flip(s.dir);
        for (Step& s : f.one_target)
          if (s.edge == spec.cell) s.dir = flip(s.dir);
      }
      break;
    }
    case ChangeKind::face_vflip: {
      for (Face& f : out.faces)
        if (f.id == spec.cell) std::swap(f.one_source, f.one_target);
      break;
    }
    case ChangeKind::face_hflip: {
      for (Face& f : out.faces)
        if (f.id == spec.cell) {
          std::swap(f.zero_source, f.zero_target);
          f.one_source = reverse_word(f.one_source);
          f.one_target = reverse_word(f.one_target);
        }
      break;
    }
    case ChangeKind::bigon_move: {
      for (Face& f : out.faces)
        if (f.id == spec.cell) {
          f.one_source = whisker(spec.nu, f.one_source, spec.omega);
          f.one_target = whisker(spec.nu, f.one_target, spec.omega);
          f.zero_source = spec.new_zero_source;
          f.zero_target = spec.new_zero_target;
        }
      break;
    }
  }
  return out;
}

ChangeSpec inverse_change(const Discretization& d, const ChangeSpec& spec) {
  require_valid(d, spec);
  if (spec.kind != ChangeKind::bigon_move) return spec;  // flips are involutions
  const Face& f = *d.find_face(spec.cell);
  ChangeSpec inv;
  inv.kind = ChangeKind::bigon_move;
  inv.cell = spec.cell;
  inv.new_zero_source = f.zero_source;
  inv.new_zero_target = f.zero_target;
  inv.nu = reverse_word(spec.nu);
  inv.omega = reverse_word(spec.omega);
  return inv;
}

ConnObject transport_object(const Discretization& d, const ChangeSpec& spec,
                            const CrossedModule& cm, const ConnObject& x) {
  require_valid(d, spec);
  Report r = validate_object(d, cm, x);
  if (!r.ok())
    fail("connection object is not valid: " + r.violations.front().axiom + " " +
         r.violations.front().witness);

  const FiniteGroup& G = cm.g();
  const FiniteGroup& H = cm.h();
  ConnObject out = x;
  switch (spec.kind) {
    case ChangeKind::edge_flip:
      out.g[spec.cell] = G.inv(x.g.at(spec.cell));
      break;
    case ChangeKind::face_vflip:
      out.h[spec.cell] = H.inv(x.h.at(spec.cell));
      break;
    case ChangeKind::face_hflip: {
      // The transported face square is the horizontal inverse of the old one.
      const Face& f = *d.find_face(spec.cell);
      Elem top = evaluate_word_G(G, x.g, f.one_source);
      out.h[spec.cell] = cm.act(G.inv(top), H.inv(x.h.at(spec.cell)));
      break;
    }
    case ChangeKind::bigon_move: {
      // Whiskering acts on the label through nu's holonomy.
      out.h[spec.cell] = cm.act(evaluate_word_G(G, x.g, spec.nu), x.h.at(spec.cell));
      break;
    }
  }
  return out;
}

ConnMorphism transport_morphism(const Discretization& d, const ChangeSpec& spec,
                                const CrossedModule& cm, const ConnMorphism& m) {
  require_valid(d, spec);
  Report r = validate_morphism(d, cm, m);
  if (!r.ok())
    fail("connection morphism is not valid: " + r.violations.front().axiom + " " +
         r.violations.front().witness);

  ConnMorphism out;
  out.source = transport_object(d, spec, cm, m.source);
  out.eta = m.eta;
  if (spec.kind == ChangeKind::edge_flip) {
    // The flipped edge carries the horizontal inverse of its old square.
    Square s = hinverse(edge_square(cm, m, spec.cell));
    out.eta[spec.cell] = s.label;
  }
  return out;
}

Discretization apply_script(const Discretization& d, const ChangeScript& script) {
  Discretization cur = d;
  for (const ChangeSpec& spec : script) cur = apply_change(cur, spec);
  return cur;
}

ConnObject transport_object_script(const Discretization& d, const ChangeScript& script,
                                   const CrossedModule& cm, const ConnObject& x) {
  Discretization cur = d;
  ConnObject obj = x;
  for (const ChangeSpec& spec : script) {
    obj = transport_object(cur, spec, cm, obj);
    cur = apply_change(cur, spec);
  }
  return obj;
}

ConnMorphism transport_morphism_script(const Discretization& d, const ChangeScript& script,
                                       const CrossedModule& cm, const ConnMorphism& m) {
  Discretization cur = d;
  ConnMorphism mor = m;
  for (const ChangeSpec& spec : script) {
    mor = transport_morphism(cur, spec, cm, mor);
    cur = apply_change(cur, spec);
  }
  return mor;
}

}  // namespace hgt
