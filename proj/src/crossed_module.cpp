#include "hgt/crossed_module.hpp"

namespace hgt {

CrossedModule::CrossedModule(FiniteGroup g, FiniteGroup h,
                             const std::function<Elem(Elem, Elem)>& action,
                             const std::function<Elem(Elem)>& boundary)
    : g_(std::move(g)), h_(std::move(h)) {
  act_.resize(static_cast<size_t>(g_.size()) * h_.size());
  for (Elem gi = 0; gi < g_.size(); ++gi)
    for (Elem hi = 0; hi < h_.size(); ++hi) {
      Elem hv = action(gi, hi);
      if (hv < 0 || hv >= h_.size())
        fail("action table not closed at (" + g_.name(gi) + "," + h_.name(hi) + ")");
      act_[static_cast<size_t>(gi) * h_.size() + hi] = hv;
    }
  bnd_.resize(h_.size());
  for (Elem hi = 0; hi < h_.size(); ++hi) {
    Elem gv = boundary(hi);
    if (gv < 0 || gv >= g_.size()) fail("boundary table not closed at " + h_.name(hi));
    bnd_[hi] = gv;
  }
}

Report validate_crossed_module(const CrossedModule& cm) {
  const FiniteGroup& G = cm.g();
  const FiniteGroup& H = cm.h();
  Report r = validate_group(G, "G");
  r.merge(validate_group(H, "H"));
  if (!r.ok()) return r;  // the remaining axioms presuppose group arithmetic

  // boundary is a homomorphism
  for (Elem a = 0; a < H.size(); ++a)
    for (Elem b = 0; b < H.size(); ++b)
      if (cm.bnd(H.mul(a, b)) != G.mul(cm.bnd(a), cm.bnd(b)))
        r.add("boundary.hom", "boundary not a homomorphism at (" + H.name(a) + "," + H.name(b) + ")");

  // action is a group action ...
  for (Elem hi = 0; hi < H.size(); ++hi)
    if (cm.act(G.identity(), hi) != hi)
      r.add("action.unit", "1 |> " + H.name(hi) + " = " + H.name(cm.act(G.identity(), hi)));
  for (Elem a = 0; a < G.size(); ++a)
    for (Elem b = 0; b < G.size(); ++b)
      for (Elem hi = 0; hi < H.size(); ++hi)
        if (cm.act(G.mul(a, b), hi) != cm.act(a, cm.act(b, hi))) {
          r.add("action.compat",
                "(" + G.name(a) + G.name(b) + ") |> " + H.name(hi) + " != nested action");
          if (r.violations.size() > 50) return r;
        }

  // ... by automorphisms
  for (Elem gi = 0; gi < G.size(); ++gi)
    for (Elem a = 0; a < H.size(); ++a)
      for (Elem b = 0; b < H.size(); ++b)
        if (cm.act(gi, H.mul(a, b)) != H.mul(cm.act(gi, a), cm.act(gi, b))) {
          r.add("action.automorphism",
                G.name(gi) + " |> (" + H.name(a) + H.name(b) + ") not multiplicative");
          if (r.violations.size() > 50) return r;
        }

  // equivariance: bnd(g |> h) = g bnd(h) g^-1
  for (Elem gi = 0; gi < G.size(); ++gi) {
    if (!G.has_inverse(gi)) continue;  // already reported by validate_group
    for (Elem hi = 0; hi < H.size(); ++hi)
      if (cm.bnd(cm.act(gi, hi)) != G.mul(G.mul(gi, cm.bnd(hi)), G.inv(gi)))
        r.add("equivariance", "(g=" + G.name(gi) + ", h=" + H.name(hi) + ")");
  }

  // Peiffer identity: bnd(h) |> k = h k h^-1
  for (Elem hi = 0; hi < H.size(); ++hi) {
    if (!H.has_inverse(hi)) continue;
    for (Elem ki = 0; ki < H.size(); ++ki)
      if (cm.act(cm.bnd(hi), ki) != H.mul(H.mul(hi, ki), H.inv(hi)))
        r.add("peiffer", "(h=" + H.name(hi) + ", k=" + H.name(ki) + ")");
  }
  return r;
}

static void require_same_module(const Square& a, const Square& b) {
  if (a.cm == nullptr || b.cm == nullptr) fail("square without a crossed module");
  if (a.cm != b.cm) fail("squares belong to different crossed modules");
}

Square make_square(const CrossedModule& cm, Elem top, Elem label) {
  return Square{&cm, top, cm.g().mul(cm.bnd(label), top), label};
}

Square identity_square(const CrossedModule& cm, Elem g) {
  return Square{&cm, g, g, cm.h().identity()};
}

bool square_valid(const Square& s) {
  if (s.cm == nullptr) return false;
  const FiniteGroup& G = s.cm->g();
  if (!G.has_inverse(s.top)) return false;
  return s.cm->bnd(s.label) == G.mul(s.bottom, G.inv(s.top));
}

Square hcompose(const Square& a, const Square& b) {
  require_same_module(a, b);
  const CrossedModule& cm = *a.cm;
  return Square{&cm, cm.g().mul(a.top, b.top), cm.g().mul(a.bottom, b.bottom),
                cm.h().mul(a.label, cm.act(a.top, b.label))};
}

Square vcompose(const Square& upper, const Square& lower) {
  require_same_module(upper, lower);
  if (upper.bottom != lower.top)
    fail("vertical composition boundary mismatch: " + square_to_string(upper) + " over " +
         square_to_string(lower));
  return Square{upper.cm, upper.top, lower.bottom, upper.cm->h().mul(lower.label, upper.label)};
}

Square hinverse(const Square& a) {
  if (a.cm == nullptr) fail("square without a crossed module");
  const CrossedModule& cm = *a.cm;
  Elem ti = cm.g().inv(a.top);
  return Square{&cm, ti, cm.g().inv(a.bottom), cm.act(ti, cm.h().inv(a.label))};
}

Square vinverse(const Square& a) {
  if (a.cm == nullptr) fail("square without a crossed module");
  return Square{a.cm, a.bottom, a.top, a.cm->h().inv(a.label)};
}

std::string square_to_string(const Square& s) {
  if (s.cm == nullptr) return "(null square)";
  return "(top=" + s.cm->g().name(s.top) + ", bottom=" + s.cm->g().name(s.bottom) +
         ", label=" + s.cm->h().name(s.label) + ")";
}

}  // namespace hgt
