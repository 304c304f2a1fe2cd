#include "hgt/laws.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hgt {

namespace {

std::uint64_t sample_count(const LawOptions& opt) {
  std::uint64_t n = opt.max_states / 50;
  return std::min<std::uint64_t>(std::max<std::uint64_t>(n, 10'000), 200'000);
}

// Runs one law either exhaustively over `bound` cases or, above the
// ceiling, as a fixed-seed uniform sample over the same tuple space.
struct CaseRunner {
  CaseRunner(const LawOptions& opt, double bound, std::uint64_t ordinal, LawResult& res)
      : res_(res), opt_(opt), rng_(opt.seed ^ (0x9E3779B97F4A7C15ULL * (ordinal + 1))) {
    exhaustive = bound <= static_cast<double>(opt.exhaustive_ceiling());
    iterations = exhaustive ? static_cast<std::uint64_t>(bound) : sample_count(opt);
    res_.sampled = !exhaustive;
    res_.cases = iterations;
  }

  std::uint64_t draw(std::uint64_t m) { return m < 2 ? 0 : rng_() % m; }

  void violation(const std::string& witness) {
    ++res_.violations;
    if (res_.witnesses.size() < opt_.max_witnesses) res_.witnesses.push_back(witness);
  }

  bool exhaustive = true;
  std::uint64_t iterations = 0;

 private:
  LawResult& res_;
  const LawOptions& opt_;
  std::mt19937_64 rng_;
};

// Splits a case index into mixed-radix components (or draws them uniformly
// in sampled mode). Components must be consumed in a fixed order and their
// radices must multiply to the law's case bound.
struct TupleDecoder {
  CaseRunner& run;
  std::uint64_t state;

  TupleDecoder(CaseRunner& r, std::uint64_t k) : run(r), state(k) {}

  std::uint64_t next(std::uint64_t radix) {
    if (run.exhaustive) {
      std::uint64_t c = state % radix;
      state /= radix;
      return c;
    }
    return run.draw(radix);
  }
};

// Lazily indexed morphism space: morphism i pairs object i / per_object with
// the eta assignment decoded from the remaining mixed-radix digits
// (edges in sorted-id order, last edge fastest).
struct MorphismSpace {
  const Discretization* d = nullptr;
  const CrossedModule* cm = nullptr;
  std::vector<ConnObject> objects;
  std::map<ConnObject, std::size_t> object_index;
  std::vector<std::string> edge_ids;
  std::uint64_t per_object = 1;

  static MorphismSpace build(const Discretization& d, const CrossedModule& cm,
                             std::uint64_t max_states) {
    MorphismSpace s;
    s.d = &d;
    s.cm = &cm;
    s.objects = enumerate_objects(d, cm, max_states);
    for (std::size_t i = 0; i < s.objects.size(); ++i) s.object_index.emplace(s.objects[i], i);
    s.edge_ids = d.edge_ids_sorted();
    for (std::size_t i = 0; i < s.edge_ids.size(); ++i) {
      if (s.per_object > 1'000'000'000'000ULL)
        throw budget_error("morphism space too large to index", 1e18);
      s.per_object *= static_cast<std::uint64_t>(cm.h().size());
    }
    return s;
  }

  std::uint64_t size() const { return objects.size() * per_object; }

  CellMap eta_at(std::uint64_t code) const {
    CellMap eta;
    for (std::size_t i = edge_ids.size(); i-- > 0;) {
      eta.emplace(edge_ids[i], static_cast<Elem>(code % cm->h().size()));
      code /= cm->h().size();
    }
    return eta;
  }

  ConnMorphism at(std::uint64_t i) const {
    return ConnMorphism{objects[i / per_object], eta_at(i % per_object)};
  }

  ConnMorphism with_source(const ConnObject& x, std::uint64_t eta_code) const {
    return ConnMorphism{x, eta_at(eta_code)};
  }
};

// Lazily indexed gauge spaces over the sorted vertex list.
struct GaugeSpace {
  const CrossedModule* cm = nullptr;
  std::vector<std::string> vertices;
  std::uint64_t objects = 1;    // |G|^V
  std::uint64_t morphisms = 1;  // (|G||H|)^V
  std::uint64_t chis = 1;       // |H|^V

  static GaugeSpace build(const Discretization& d, const CrossedModule& cm,
                          std::uint64_t max_states) {
    GaugeSpace s;
    s.cm = &cm;
    s.vertices = d.vertices;
    std::sort(s.vertices.begin(), s.vertices.end());
    double mbound = std::pow(static_cast<double>(cm.g().size()) * cm.h().size(),
                             static_cast<double>(s.vertices.size()));
    if (mbound > static_cast<double>(max_states))
      throw budget_error("enumeration refused: gauge morphism bound " + std::to_string(mbound) +
                             " exceeds budget " + std::to_string(max_states),
                         mbound);
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      s.objects *= static_cast<std::uint64_t>(cm.g().size());
      s.morphisms *= static_cast<std::uint64_t>(cm.g().size()) * cm.h().size();
      s.chis *= static_cast<std::uint64_t>(cm.h().size());
    }
    return s;
  }

  GaugeObject object_at(std::uint64_t code) const {
    GaugeObject g;
    for (std::size_t i = vertices.size(); i-- > 0;) {
      g.gamma.emplace(vertices[i], static_cast<Elem>(code % cm->g().size()));
      code /= cm->g().size();
    }
    return g;
  }

  GaugeMorphism morphism_at(std::uint64_t code) const {
    GaugeMorphism m;
    const std::uint64_t radix = static_cast<std::uint64_t>(cm->g().size()) * cm->h().size();
    for (std::size_t i = vertices.size(); i-- > 0;) {
      std::uint64_t digit = code % radix;
      m.gamma.emplace(vertices[i], static_cast<Elem>(digit / cm->h().size()));
      m.chi.emplace(vertices[i], static_cast<Elem>(digit % cm->h().size()));
      code /= radix;
    }
    return m;
  }

  // Morphism out of a given source object, chi decoded from `code`: the
  // generic composable continuation.
  GaugeMorphism morphism_from(const GaugeObject& src, std::uint64_t code) const {
    GaugeMorphism m;
    m.gamma = src.gamma;
    for (std::size_t i = vertices.size(); i-- > 0;) {
      m.chi.emplace(vertices[i], static_cast<Elem>(code % cm->h().size()));
      code /= cm->h().size();
    }
    return m;
  }

  GaugeObject unit() const {
    GaugeObject g;
    for (const std::string& v : vertices) g.gamma.emplace(v, cm->g().identity());
    return g;
  }
};

std::string cellmap_brief(const FiniteGroup& grp, const CellMap& m) {
  std::string s = "(";
  bool first = true;
  for (const auto& [id, v] : m) {
    if (!first) s += ",";
    s += id + ":" + grp.name(v);
    first = false;
  }
  return s + ")";
}

std::string obj_brief(const CrossedModule& cm, const ConnObject& x) {
  return "g=" + cellmap_brief(cm.g(), x.g) + " h=" + cellmap_brief(cm.h(), x.h);
}

std::string mor_brief(const CrossedModule& cm, const ConnMorphism& m) {
  return obj_brief(cm, m.source) + " eta=" + cellmap_brief(cm.h(), m.eta);
}

std::string gmor_brief(const CrossedModule& cm, const GaugeMorphism& m) {
  return "gamma=" + cellmap_brief(cm.g(), m.gamma) + " chi=" + cellmap_brief(cm.h(), m.chi);
}

}  // namespace

std::vector<LawResult> check_square_laws(const CrossedModule& cm) {
  std::vector<LawResult> out;
  const FiniteGroup& G = cm.g();
  const FiniteGroup& H = cm.h();

  std::vector<Square> sq;
  sq.reserve(static_cast<std::size_t>(G.size()) * H.size());
  for (Elem g = 0; g < G.size(); ++g)
    for (Elem h = 0; h < H.size(); ++h) sq.push_back(make_square(cm, g, h));
  const Square hunit = identity_square(cm, G.identity());

  auto law = [&out](const std::string& name) -> LawResult& {
    out.push_back(LawResult{"squares", name, 0, 0, false, {}});
    return out.back();
  };
  auto note = [](LawResult& r, bool okay, const std::string& witness) {
    ++r.cases;
    if (!okay) {
      ++r.violations;
      if (r.witnesses.size() < 5) r.witnesses.push_back(witness);
    }
  };

  {
    LawResult& r = law("hcompose validity");
    for (const Square& a : sq)
      for (const Square& b : sq)
        note(r, square_valid(hcompose(a, b)), square_to_string(a) + " * " + square_to_string(b));
  }
  {
    LawResult& r = law("vcompose validity");
    for (const Square& a : sq)
      for (Elem h = 0; h < H.size(); ++h) {
        Square b = make_square(cm, a.bottom, h);
        note(r, square_valid(vcompose(a, b)), square_to_string(a) + " over " + square_to_string(b));
      }
  }
  {
    LawResult& r = law("hinverse validity");
    for (const Square& a : sq) note(r, square_valid(hinverse(a)), square_to_string(a));
  }
  {
    LawResult& r = law("vinverse validity");
    for (const Square& a : sq) note(r, square_valid(vinverse(a)), square_to_string(a));
  }
  {
    LawResult& r = law("hcompose unit");
    for (const Square& a : sq)
      note(r, hcompose(hunit, a) == a && hcompose(a, hunit) == a, square_to_string(a));
  }
  {
    LawResult& r = law("vcompose unit");
    for (const Square& a : sq)
      note(r,
           vcompose(identity_square(cm, a.top), a) == a &&
               vcompose(a, identity_square(cm, a.bottom)) == a,
           square_to_string(a));
  }
  {
    LawResult& r = law("hinverse two-sided");
    for (const Square& a : sq)
      note(r, hcompose(a, hinverse(a)) == hunit && hcompose(hinverse(a), a) == hunit,
           square_to_string(a));
  }
  {
    LawResult& r = law("vinverse two-sided");
    for (const Square& a : sq)
      note(r,
           vcompose(a, vinverse(a)) == identity_square(cm, a.top) &&
               vcompose(vinverse(a), a) == identity_square(cm, a.bottom),
           square_to_string(a));
  }
  {
    LawResult& r = law("hinverse involution");
    for (const Square& a : sq) note(r, hinverse(hinverse(a)) == a, square_to_string(a));
  }
  {
    LawResult& r = law("vinverse involution");
    for (const Square& a : sq) note(r, vinverse(vinverse(a)) == a, square_to_string(a));
  }
  {
    LawResult& r = law("hcompose associativity");
    for (const Square& a : sq)
      for (const Square& b : sq)
        for (const Square& c : sq)
          note(r, hcompose(hcompose(a, b), c) == hcompose(a, hcompose(b, c)),
               square_to_string(a) + " " + square_to_string(b) + " " + square_to_string(c));
  }
  {
    LawResult& r = law("vcompose associativity");
    for (const Square& a : sq)
      for (Elem h1 = 0; h1 < H.size(); ++h1) {
        Square b = make_square(cm, a.bottom, h1);
        for (Elem h2 = 0; h2 < H.size(); ++h2) {
          Square c = make_square(cm, b.bottom, h2);
          note(r, vcompose(vcompose(a, b), c) == vcompose(a, vcompose(b, c)),
               square_to_string(a) + " " + square_to_string(b) + " " + square_to_string(c));
        }
      }
  }
  {
    LawResult& r = law("interchange");
    for (const Square& a : sq)
      for (const Square& b : sq)
        for (Elem h1 = 0; h1 < H.size(); ++h1)
          for (Elem h2 = 0; h2 < H.size(); ++h2) {
            Square c = make_square(cm, a.bottom, h1);
            Square d = make_square(cm, b.bottom, h2);
            note(r,
                 vcompose(hcompose(a, b), hcompose(c, d)) ==
                     hcompose(vcompose(a, c), vcompose(b, d)),
                 square_to_string(a) + " " + square_to_string(b) + " / " + square_to_string(c) +
                     " " + square_to_string(d));
          }
  }
  {
    LawResult& r = law("hinverse of horizontal composite");
    for (const Square& a : sq)
      for (const Square& b : sq)
        note(r, hinverse(hcompose(a, b)) == hcompose(hinverse(b), hinverse(a)),
             square_to_string(a) + " " + square_to_string(b));
  }
  {
    LawResult& r = law("hinverse of vertical composite");
    for (const Square& a : sq)
      for (Elem h = 0; h < H.size(); ++h) {
        Square b = make_square(cm, a.bottom, h);
        note(r, hinverse(vcompose(a, b)) == vcompose(hinverse(a), hinverse(b)),
             square_to_string(a) + " " + square_to_string(b));
      }
  }
  {
    LawResult& r = law("vinverse of vertical composite");
    for (const Square& a : sq)
      for (Elem h = 0; h < H.size(); ++h) {
        Square b = make_square(cm, a.bottom, h);
        note(r, vinverse(vcompose(a, b)) == vcompose(vinverse(b), vinverse(a)),
             square_to_string(a) + " " + square_to_string(b));
      }
  }
  return out;
}

std::vector<LawResult> check_conn_laws(const Discretization& d, const CrossedModule& cm,
                                       const LawOptions& opt) {
  std::vector<LawResult> out;
  MorphismSpace ms = MorphismSpace::build(d, cm, opt.max_states);
  const double M = static_cast<double>(ms.size());
  const double P = static_cast<double>(ms.per_object);
  std::uint64_t ordinal = 100;

  {
    out.push_back(LawResult{"conn", "morphism target is a valid enumerated object", 0, 0, false, {}});
    CaseRunner run(opt, M, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      ConnMorphism m = ms.at(t.next(ms.size()));
      ConnObject tgt = morphism_target(d, cm, m);
      if (!validate_object(d, cm, tgt).ok() ||
          ms.object_index.find(tgt) == ms.object_index.end())
        run.violation(mor_brief(cm, m));
    }
  }
  {
    out.push_back(LawResult{"conn", "composite target equals later target", 0, 0, false, {}});
    CaseRunner run(opt, M * P, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      std::uint64_t e2 = t.next(ms.per_object);
      ConnMorphism m1 = ms.at(t.next(ms.size()));
      ConnMorphism m2 = ms.with_source(morphism_target(d, cm, m1), e2);
      ConnMorphism c = conn_compose(d, cm, m2, m1);
      if (morphism_target(d, cm, c) != morphism_target(d, cm, m2))
        run.violation(mor_brief(cm, m1) + " then " + mor_brief(cm, m2));
    }
  }
  {
    out.push_back(LawResult{"conn", "composition associativity", 0, 0, false, {}});
    CaseRunner run(opt, M * P * P, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      std::uint64_t e3 = t.next(ms.per_object);
      std::uint64_t e2 = t.next(ms.per_object);
      ConnMorphism m1 = ms.at(t.next(ms.size()));
      ConnMorphism m2 = ms.with_source(morphism_target(d, cm, m1), e2);
      ConnMorphism m3 = ms.with_source(morphism_target(d, cm, m2), e3);
      if (conn_compose(d, cm, m3, conn_compose(d, cm, m2, m1)) !=
          conn_compose(d, cm, conn_compose(d, cm, m3, m2), m1))
        run.violation(mor_brief(cm, m1));
    }
  }
  {
    out.push_back(LawResult{"conn", "identity laws", 0, 0, false, {}});
    CaseRunner run(opt, M, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      ConnMorphism m = ms.at(t.next(ms.size()));
      ConnObject tgt = morphism_target(d, cm, m);
      bool okay = conn_compose(d, cm, m, conn_identity(cm, m.source)) == m &&
                  conn_compose(d, cm, conn_identity(cm, tgt), m) == m &&
                  morphism_target(d, cm, conn_identity(cm, m.source)) == m.source;
      if (!okay) run.violation(mor_brief(cm, m));
    }
  }
  {
    out.push_back(LawResult{"conn", "inverse laws", 0, 0, false, {}});
    CaseRunner run(opt, M, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      ConnMorphism m = ms.at(t.next(ms.size()));
      ConnMorphism inv = conn_inverse(d, cm, m);
      ConnObject tgt = morphism_target(d, cm, m);
      bool okay = inv.source == tgt &&
                  conn_compose(d, cm, inv, m) == conn_identity(cm, m.source) &&
                  conn_compose(d, cm, m, inv) == conn_identity(cm, tgt);
      if (!okay) run.violation(mor_brief(cm, m));
    }
  }
  return out;
}

std::vector<LawResult> check_action_laws(const Discretization& d, const CrossedModule& cm,
                                         const LawOptions& opt) {
  std::vector<LawResult> out;
  MorphismSpace ms = MorphismSpace::build(d, cm, opt.max_states);
  GaugeSpace gs = GaugeSpace::build(d, cm, opt.max_states);
  const double M = static_cast<double>(ms.size());
  const double O = static_cast<double>(ms.objects.size());
  const double P = static_cast<double>(ms.per_object);
  const double GM = static_cast<double>(gs.morphisms);
  const double GO = static_cast<double>(gs.objects);
  const double Q = static_cast<double>(gs.chis);
  std::uint64_t ordinal = 200;

  {
    out.push_back(LawResult{"action", "gauge interchange", 0, 0, false, {}});
    CaseRunner run(opt, GM * Q * GM * Q, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      std::uint64_t bc = t.next(gs.chis);
      std::uint64_t b = t.next(gs.morphisms);
      std::uint64_t ac = t.next(gs.chis);
      std::uint64_t a = t.next(gs.morphisms);
      GaugeMorphism f1 = gs.morphism_at(a);
      GaugeMorphism f2 = gs.morphism_from(gauge_target(cm, f1), ac);
      GaugeMorphism g1 = gs.morphism_at(b);
      GaugeMorphism g2 = gs.morphism_from(gauge_target(cm, g1), bc);
      GaugeMorphism lhs = gauge_tensor(cm, gauge_compose(cm, f2, f1), gauge_compose(cm, g2, g1));
      GaugeMorphism rhs = gauge_compose(cm, gauge_tensor(cm, f2, g2), gauge_tensor(cm, f1, g1));
      if (!(lhs == rhs)) run.violation(gmor_brief(cm, f1) + " | " + gmor_brief(cm, g1));
    }
  }
  {
    out.push_back(LawResult{"action", "gauge inverse laws", 0, 0, false, {}});
    CaseRunner run(opt, GM, ++ordinal, out.back());
    GaugeMorphism unit_id = gauge_identity(cm, gs.unit());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      GaugeMorphism m = gs.morphism_at(t.next(gs.morphisms));
      GaugeMorphism ci = gauge_compose_inverse(cm, m);
      GaugeMorphism ti = gauge_tensor_inverse(cm, m);
      bool okay = gauge_compose(cm, ci, m) == gauge_identity(cm, GaugeObject{m.gamma}) &&
                  gauge_compose(cm, m, ci) == gauge_identity(cm, gauge_target(cm, m)) &&
                  gauge_tensor(cm, m, ti) == unit_id && gauge_tensor(cm, ti, m) == unit_id;
      if (!okay) run.violation(gmor_brief(cm, m));
    }
  }
  {
    out.push_back(LawResult{"action", "action on objects yields valid objects", 0, 0, false, {}});
    CaseRunner run(opt, GO * O, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      GaugeObject go = gs.object_at(t.next(gs.objects));
      const ConnObject& x = ms.objects[t.next(ms.objects.size())];
      ConnObject y = act_object(d, cm, go, x);
      if (!validate_object(d, cm, y).ok() || ms.object_index.find(y) == ms.object_index.end())
        run.violation(obj_brief(cm, x));
    }
  }
  {
    out.push_back(LawResult{"action", "action on morphisms is well-defined", 0, 0, false, {}});
    CaseRunner run(opt, GM * M, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      GaugeMorphism gm = gs.morphism_at(t.next(gs.morphisms));
      ConnMorphism m = ms.at(t.next(ms.size()));
      ConnMorphism acted = act_morphism(d, cm, gm, m);
      bool okay = validate_morphism(d, cm, acted).ok() &&
                  acted.source == act_object(d, cm, GaugeObject{gm.gamma}, m.source) &&
                  morphism_target(d, cm, acted) ==
                      act_object(d, cm, gauge_target(cm, gm), morphism_target(d, cm, m));
      if (!okay) run.violation(gmor_brief(cm, gm) + " on " + mor_brief(cm, m));
    }
  }
  {
    out.push_back(LawResult{"action", "functoriality on compositions", 0, 0, false, {}});
    CaseRunner run(opt, GM * Q * M * P, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      std::uint64_t e2 = t.next(ms.per_object);
      std::uint64_t ac = t.next(gs.chis);
      GaugeMorphism gm1 = gs.morphism_at(t.next(gs.morphisms));
      GaugeMorphism gm2 = gs.morphism_from(gauge_target(cm, gm1), ac);
      ConnMorphism m1 = ms.at(t.next(ms.size()));
      ConnMorphism m2 = ms.with_source(morphism_target(d, cm, m1), e2);
      ConnMorphism lhs =
          act_morphism(d, cm, gauge_compose(cm, gm2, gm1), conn_compose(d, cm, m2, m1));
      ConnMorphism rhs =
          conn_compose(d, cm, act_morphism(d, cm, gm2, m2), act_morphism(d, cm, gm1, m1));
      if (lhs != rhs) run.violation(gmor_brief(cm, gm1) + " on " + mor_brief(cm, m1));
    }
  }
  {
    out.push_back(LawResult{"action", "functoriality on identities", 0, 0, false, {}});
    CaseRunner run(opt, GO * O, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      GaugeObject go = gs.object_at(t.next(gs.objects));
      const ConnObject& x = ms.objects[t.next(ms.objects.size())];
      if (act_morphism(d, cm, gauge_identity(cm, go), conn_identity(cm, x)) !=
          conn_identity(cm, act_object(d, cm, go, x)))
        run.violation(obj_brief(cm, x));
    }
  }
  {
    out.push_back(LawResult{"action", "action square on objects", 0, 0, false, {}});
    CaseRunner run(opt, GO * GO * O, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      GaugeObject g1 = gs.object_at(t.next(gs.objects));
      GaugeObject g2 = gs.object_at(t.next(gs.objects));
      const ConnObject& x = ms.objects[t.next(ms.objects.size())];
      if (act_object(d, cm, gauge_tensor(cm, g2, g1), x) !=
          act_object(d, cm, g2, act_object(d, cm, g1, x)))
        run.violation(obj_brief(cm, x));
    }
  }
  {
    out.push_back(LawResult{"action", "action square on morphisms", 0, 0, false, {}});
    CaseRunner run(opt, GM * GM * M, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      GaugeMorphism g1 = gs.morphism_at(t.next(gs.morphisms));
      GaugeMorphism g2 = gs.morphism_at(t.next(gs.morphisms));
      ConnMorphism m = ms.at(t.next(ms.size()));
      if (act_morphism(d, cm, gauge_tensor(cm, g2, g1), m) !=
          act_morphism(d, cm, g2, act_morphism(d, cm, g1, m)))
        run.violation(gmor_brief(cm, g2) + " (x) " + gmor_brief(cm, g1));
    }
  }
  {
    out.push_back(LawResult{"action", "unit conditions", 0, 0, false, {}});
    CaseRunner run(opt, M, ++ordinal, out.back());
    GaugeObject unit = gs.unit();
    GaugeMorphism unit_id = gauge_identity(cm, unit);
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      ConnMorphism m = ms.at(t.next(ms.size()));
      bool okay = act_object(d, cm, unit, m.source) == m.source &&
                  act_morphism(d, cm, unit_id, m) == m;
      if (!okay) run.violation(mor_brief(cm, m));
    }
  }
  return out;
}

std::vector<LawResult> check_double_laws(const Discretization& d, const CrossedModule& cm,
                                         const LawOptions& opt) {
  std::vector<LawResult> out;
  MorphismSpace ms = MorphismSpace::build(d, cm, opt.max_states);
  GaugeSpace gs = GaugeSpace::build(d, cm, opt.max_states);
  const double M = static_cast<double>(ms.size());
  const double P = static_cast<double>(ms.per_object);
  const double GM = static_cast<double>(gs.morphisms);
  const double Q = static_cast<double>(gs.chis);
  const double S = GM * M;
  std::uint64_t ordinal = 300;

  auto square_at = [&](TupleDecoder& t) -> DGSquare {
    GaugeMorphism gm = gs.morphism_at(t.next(gs.morphisms));
    return DGSquare{gm, ms.at(t.next(ms.size()))};
  };
  auto brief = [&](const DGSquare& s) {
    return gmor_brief(cm, s.gmor) + " ; " + mor_brief(cm, s.cmor);
  };
  // A square horizontally composable after `s`, decoded from chi/eta digits.
  auto next_right = [&](const DGSquare& s, std::uint64_t chi_code, std::uint64_t eta_code) {
    return DGSquare{gs.morphism_from(gauge_target(cm, s.gmor), chi_code),
                    ms.with_source(morphism_target(d, cm, s.cmor), eta_code)};
  };
  // A square vertically composable under `s`, with a free gauge morphism.
  auto next_below = [&](const DGSquare& s, std::uint64_t gm_code) {
    return DGSquare{gs.morphism_at(gm_code), act_morphism(d, cm, s.gmor, s.cmor)};
  };

  {
    out.push_back(LawResult{"double", "boundary consistency", 0, 0, false, {}});
    CaseRunner run(opt, S, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      DGSquare s = square_at(t);
      DGBoundaries b = square_boundaries(d, cm, s);
      bool okay = b.left.base == b.top.source &&
                  b.right.base == morphism_target(d, cm, b.top) &&
                  b.bottom.source == act_object(d, cm, b.left.gamma, b.left.base) &&
                  morphism_target(d, cm, b.bottom) ==
                      act_object(d, cm, b.right.gamma, b.right.base);
      if (!okay) run.violation(brief(s));
    }
  }
  {
    out.push_back(LawResult{"double", "horizontal identity laws", 0, 0, false, {}});
    CaseRunner run(opt, S, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      DGSquare s = square_at(t);
      DGBoundaries b = square_boundaries(d, cm, s);
      bool okay = dg_hcompose(d, cm, s, dg_hidentity(cm, b.left)) == s &&
                  dg_hcompose(d, cm, dg_hidentity(cm, b.right), s) == s;
      if (!okay) run.violation(brief(s));
    }
  }
  {
    out.push_back(LawResult{"double", "vertical identity laws", 0, 0, false, {}});
    CaseRunner run(opt, S, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      DGSquare s = square_at(t);
      DGBoundaries b = square_boundaries(d, cm, s);
      bool okay = dg_vcompose(d, cm, s, dg_videntity(d, cm, b.bottom)) == s &&
                  dg_vcompose(d, cm, dg_videntity(d, cm, b.top), s) == s;
      if (!okay) run.violation(brief(s));
    }
  }
  {
    out.push_back(LawResult{"double", "horizontal inverse laws", 0, 0, false, {}});
    CaseRunner run(opt, S, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      DGSquare s = square_at(t);
      DGBoundaries b = square_boundaries(d, cm, s);
      DGSquare inv = dg_hinverse(d, cm, s);
      bool okay = dg_hcompose(d, cm, inv, s) == dg_hidentity(cm, b.left) &&
                  dg_hcompose(d, cm, s, inv) == dg_hidentity(cm, b.right) &&
                  dg_hinverse(d, cm, inv) == s;
      if (!okay) run.violation(brief(s));
    }
  }
  {
    out.push_back(LawResult{"double", "vertical inverse laws", 0, 0, false, {}});
    CaseRunner run(opt, S, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      DGSquare s = square_at(t);
      DGBoundaries b = square_boundaries(d, cm, s);
      DGSquare inv = dg_vinverse(d, cm, s);
      bool okay = dg_vcompose(d, cm, s, inv) == dg_videntity(d, cm, b.top) &&
                  dg_vcompose(d, cm, inv, s) == dg_videntity(d, cm, b.bottom) &&
                  dg_vinverse(d, cm, inv) == s;
      if (!okay) run.violation(brief(s));
    }
  }
  {
    out.push_back(LawResult{"double", "horizontal associativity", 0, 0, false, {}});
    CaseRunner run(opt, S * (Q * P) * (Q * P), ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      std::uint64_t c3 = t.next(gs.chis);
      std::uint64_t e3 = t.next(ms.per_object);
      std::uint64_t c2 = t.next(gs.chis);
      std::uint64_t e2 = t.next(ms.per_object);
      DGSquare s1 = square_at(t);
      DGSquare s2 = next_right(s1, c2, e2);
      DGSquare s3 = next_right(s2, c3, e3);
      if (!(dg_hcompose(d, cm, s3, dg_hcompose(d, cm, s2, s1)) ==
            dg_hcompose(d, cm, dg_hcompose(d, cm, s3, s2), s1)))
        run.violation(brief(s1));
    }
  }
  {
    out.push_back(LawResult{"double", "vertical associativity", 0, 0, false, {}});
    CaseRunner run(opt, S * GM * GM, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      std::uint64_t g3 = t.next(gs.morphisms);
      std::uint64_t g2 = t.next(gs.morphisms);
      DGSquare s1 = square_at(t);
      DGSquare s2 = next_below(s1, g2);
      DGSquare s3 = next_below(s2, g3);
      if (!(dg_vcompose(d, cm, dg_vcompose(d, cm, s1, s2), s3) ==
            dg_vcompose(d, cm, s1, dg_vcompose(d, cm, s2, s3))))
        run.violation(brief(s1));
    }
  }
  {
    out.push_back(LawResult{"double", "interchange", 0, 0, false, {}});
    CaseRunner run(opt, S * (Q * P) * GM * Q, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      std::uint64_t c22 = t.next(gs.chis);
      std::uint64_t g21 = t.next(gs.morphisms);
      std::uint64_t c12 = t.next(gs.chis);
      std::uint64_t e12 = t.next(ms.per_object);
      DGSquare s11 = square_at(t);
      DGSquare s12 = next_right(s11, c12, e12);
      DGSquare s21 = next_below(s11, g21);
      DGSquare s22 = DGSquare{gs.morphism_from(gauge_target(cm, s21.gmor), c22),
                              act_morphism(d, cm, s12.gmor, s12.cmor)};
      DGSquare hv = dg_vcompose(d, cm, dg_hcompose(d, cm, s12, s11),
                                dg_hcompose(d, cm, s22, s21));
      DGSquare vh = dg_hcompose(d, cm, dg_vcompose(d, cm, s12, s22),
                                dg_vcompose(d, cm, s11, s21));
      if (!(hv == vh)) run.violation(brief(s11));
    }
  }
  return out;
}

std::vector<LawResult> check_change_laws(const Discretization& d, const CrossedModule& cm,
                                         const ChangeSpec& spec, const LawOptions& opt) {
  std::vector<LawResult> out;
  Discretization d2 = apply_change(d, spec);
  ChangeSpec inv = inverse_change(d, spec);
  std::uint64_t ordinal = 400;

  MorphismSpace ms = MorphismSpace::build(d, cm, opt.max_states);
  std::vector<ConnObject> objects2 = enumerate_objects(d2, cm, opt.max_states);
  const double M = static_cast<double>(ms.size());
  const double P = static_cast<double>(ms.per_object);

  {
    out.push_back(LawResult{"change", "inverse change restores the complex", 1, 0, false, {}});
    if (!(apply_change(d2, inv) == d)) {
      out.back().violations = 1;
      out.back().witnesses.push_back(change_kind_name(spec.kind) + std::string(" on ") + spec.cell);
    }
  }
  {
    out.push_back(LawResult{"change", "object transport is a bijection", 0, 0, false, {}});
    LawResult& r = out.back();
    std::map<ConnObject, std::size_t> seen;
    for (std::size_t i = 0; i < ms.objects.size(); ++i) {
      ++r.cases;
      ConnObject y = transport_object(d, spec, cm, ms.objects[i]);
      if (!validate_object(d2, cm, y).ok()) {
        ++r.violations;
        if (r.witnesses.size() < opt.max_witnesses)
          r.witnesses.push_back("invalid image: " + obj_brief(cm, ms.objects[i]));
        continue;
      }
      if (!seen.emplace(y, i).second) {
        ++r.violations;
        if (r.witnesses.size() < opt.max_witnesses)
          r.witnesses.push_back("collision: " + obj_brief(cm, ms.objects[i]));
      }
      if (transport_object(d2, inv, cm, y) != ms.objects[i]) {
        ++r.violations;
        if (r.witnesses.size() < opt.max_witnesses)
          r.witnesses.push_back("round trip: " + obj_brief(cm, ms.objects[i]));
      }
    }
    if (seen.size() != objects2.size()) {
      ++r.violations;
      r.witnesses.push_back("image size " + std::to_string(seen.size()) + " vs " +
                            std::to_string(objects2.size()) + " objects");
    }
  }
  {
    out.push_back(LawResult{"change", "counts invariant", 1, 0, false, {}});
    std::uint64_t m1 = count_morphisms(d, cm, opt.max_states);
    std::uint64_t m2 = count_morphisms(d2, cm, opt.max_states);
    if (ms.objects.size() != objects2.size() || m1 != m2) {
      out.back().violations = 1;
      out.back().witnesses.push_back(std::to_string(ms.objects.size()) + "/" +
                                     std::to_string(m1) + " vs " +
                                     std::to_string(objects2.size()) + "/" + std::to_string(m2));
    }
  }
  {
    out.push_back(LawResult{"change", "morphism transport round-trips", 0, 0, false, {}});
    CaseRunner run(opt, M, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      ConnMorphism m = ms.at(t.next(ms.size()));
      ConnMorphism img = transport_morphism(d, spec, cm, m);
      bool okay = validate_morphism(d2, cm, img).ok() &&
                  transport_morphism(d2, inv, cm, img) == m &&
                  transport_object(d, spec, cm, morphism_target(d, cm, m)) ==
                      morphism_target(d2, cm, img);
      if (!okay) run.violation(mor_brief(cm, m));
    }
  }
  {
    out.push_back(LawResult{"change", "transport preserves identities", 0, 0, false, {}});
    CaseRunner run(opt, static_cast<double>(ms.objects.size()), ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      const ConnObject& x = ms.objects[t.next(ms.objects.size())];
      if (transport_morphism(d, spec, cm, conn_identity(cm, x)) !=
          conn_identity(cm, transport_object(d, spec, cm, x)))
        run.violation(obj_brief(cm, x));
    }
  }
  {
    out.push_back(LawResult{"change", "transport preserves composition", 0, 0, false, {}});
    CaseRunner run(opt, M * P, ++ordinal, out.back());
    for (std::uint64_t k = 0; k < run.iterations; ++k) {
      TupleDecoder t(run, k);
      std::uint64_t e2 = t.next(ms.per_object);
      ConnMorphism m1 = ms.at(t.next(ms.size()));
      ConnMorphism m2 = ms.with_source(morphism_target(d, cm, m1), e2);
      ConnMorphism lhs = transport_morphism(d, spec, cm, conn_compose(d, cm, m2, m1));
      ConnMorphism rhs = conn_compose(d2, cm, transport_morphism(d, spec, cm, m2),
                                      transport_morphism(d, spec, cm, m1));
      if (lhs != rhs) run.violation(mor_brief(cm, m1));
    }
  }
  return out;
}

}  // namespace hgt
