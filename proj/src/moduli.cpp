#include "hgt/moduli.hpp"

#include <algorithm>
#include <numeric>

namespace hgt {

Discretization build_example(const std::string& name) {
  Discretization d;
  if (name == "s1") {
    d.vertices = {"v"};
    d.edges = {{"e", "v", "v"}};
    return d;
  }
  if (name == "s2") {
    d.vertices = {"v", "w"};
    d.edges = {{"e", "v", "w"}};
    d.faces = {{"f", "v", "w", {{"e", Dir::forward}}, {{"e", Dir::forward}}}};
    return d;
  }
  if (name == "t2") {
    // One vertex, two loops; the face's upper boundary reads e2 then e1 and
    // the lower one e1 then e2, so the face label's boundary is the
    // commutator of the two edge holonomies.
    d.vertices = {"v"};
    d.edges = {{"e1", "v", "v"}, {"e2", "v", "v"}};
    d.faces = {{"f", "v", "v",
                {{"e2", Dir::forward}, {"e1", Dir::forward}},
                {{"e1", Dir::forward}, {"e2", Dir::forward}}}};
    return d;
  }
  fail("unknown example complex: " + name + " (expected s1, s2 or t2)");
}

const char* equivalence_mode_name(EquivalenceMode m) {
  switch (m) {
    case EquivalenceMode::conn_morphisms: return "conn_morphisms";
    case EquivalenceMode::gauge_objects: return "gauge_objects";
    case EquivalenceMode::full: return "full";
  }
  return "?";
}

ConnCounts count_connections(const Discretization& d, const CrossedModule& cm,
                             std::uint64_t max_states) {
  ConnCounts c;
  c.objects = enumerate_objects(d, cm, max_states).size();
  c.morphisms = count_morphisms(d, cm, max_states);
  return c;
}

namespace {

struct UnionFind {
  std::vector<size_t> parent;

  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  size_t find(size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }

  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Keep the smaller index as root so representatives are
    // enumeration-first members.
    if (a < b)
      parent[b] = a;
    else
      parent[a] = b;
  }
};

}  // namespace

OrbitResult count_orbits(const Discretization& d, const CrossedModule& cm, EquivalenceMode mode,
                         std::uint64_t max_states) {
  std::vector<ConnObject> objects = enumerate_objects(d, cm, max_states);
  std::map<ConnObject, size_t> index;
  for (size_t i = 0; i < objects.size(); ++i) index.emplace(objects[i], i);

  UnionFind uf(objects.size());
  const bool use_morphisms =
      mode == EquivalenceMode::conn_morphisms || mode == EquivalenceMode::full;
  const bool use_gauge = mode == EquivalenceMode::gauge_objects || mode == EquivalenceMode::full;

  for (size_t i = 0; i < objects.size(); ++i) {
    const ConnObject& x = objects[i];

    if (use_morphisms) {
      // Morphisms supported on a single edge; pointwise products of these
      // reach every morphism, so they generate the same relation.
      for (const Edge& e : d.edges)
        for (Elem eta = 0; eta < cm.h().size(); ++eta) {
          if (eta == cm.h().identity()) continue;
          ConnMorphism m;
          m.source = x;
          for (const Edge& e2 : d.edges)
            m.eta.emplace(e2.id, e2.id == e.id ? eta : cm.h().identity());
          uf.unite(i, index.at(morphism_target(d, cm, m)));
        }
    }
    if (use_gauge) {
      // Gauge objects supported on a single vertex.
      for (const std::string& v : d.vertices)
        for (Elem g = 0; g < cm.g().size(); ++g) {
          if (g == cm.g().identity()) continue;
          GaugeObject go;
          for (const std::string& v2 : d.vertices)
            go.gamma.emplace(v2, v2 == v ? g : cm.g().identity());
          uf.unite(i, index.at(act_object(d, cm, go, x)));
        }
    }
  }

  OrbitResult out;
  std::vector<char> is_root(objects.size(), 0);
  for (size_t i = 0; i < objects.size(); ++i) is_root[uf.find(i)] = 1;
  for (size_t i = 0; i < objects.size(); ++i)
    if (is_root[i]) {
      ++out.orbit_count;
      out.representatives.push_back(objects[i]);
    }
  return out;
}

}  // namespace hgt
