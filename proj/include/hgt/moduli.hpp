#ifndef HGT_MODULI_HPP_
#define HGT_MODULI_HPP_

#include "hgt/gauge.hpp"

namespace hgt {

/// The bundled example complexes:
///   "s1": one vertex, one loop edge, no faces;
///   "s2": two vertices, one edge, one face whose boundary words coincide;
///   "t2": one vertex, two loop edges, one face with two-edge boundary words.
/// Throws on unknown names.
Discretization build_example(const std::string& name);

struct ConnCounts {
  std::uint64_t objects = 0;
  std::uint64_t morphisms = 0;
};

ConnCounts count_connections(const Discretization& d, const CrossedModule& cm,
                             std::uint64_t max_states = 10'000'000);

/// Which relation identifies connections when counting classes:
/// morphisms of the connection groupoid, the gauge-object action, or both.
enum class EquivalenceMode { conn_morphisms, gauge_objects, full };

const char* equivalence_mode_name(EquivalenceMode m);

struct OrbitResult {
  std::uint64_t orbit_count = 0;
  // Canonical representative per class: the enumeration-first member,
  // listed in enumeration order.
  std::vector<ConnObject> representatives;
};

/// Partition of the connection objects under the chosen relation, via
/// union-find over single-cell generator moves (morphisms supported on one
/// edge; gauge objects supported on one vertex); these generate the full
/// relations because labels multiply pointwise. Deterministic output.
OrbitResult count_orbits(const Discretization& d, const CrossedModule& cm, EquivalenceMode mode,
                         std::uint64_t max_states = 10'000'000);

}  // namespace hgt

#endif
