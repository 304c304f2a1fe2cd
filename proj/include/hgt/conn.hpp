#ifndef HGT_CONN_HPP_
#define HGT_CONN_HPP_

#include <cstdint>
#include <vector>

#include "hgt/complex.hpp"

namespace hgt {

/// A discretized connection: G-elements on edges, H-elements on faces,
/// subject per face to bnd(h(f)) = g(1-target) * g(1-source)^-1.
struct ConnObject {
  CellMap g;  // edge id -> G element
  CellMap h;  // face id -> H element

  bool operator==(const ConnObject& o) const { return g == o.g && h == o.h; }
  bool operator!=(const ConnObject& o) const { return !(*this == o); }
  bool operator<(const ConnObject& o) const { return g != o.g ? g < o.g : h < o.h; }
};

/// A morphism of connections: its source object plus an H-element per edge.
/// The target is derived, never stored.
struct ConnMorphism {
  ConnObject source;
  CellMap eta;  // edge id -> H element

  bool operator==(const ConnMorphism& o) const { return source == o.source && eta == o.eta; }
  bool operator!=(const ConnMorphism& o) const { return !(*this == o); }
};

/// Face-condition report; violations name the offending face. Missing or
/// stray assignments are reported distinctly from face-condition failures.
Report validate_object(const Discretization& d, const CrossedModule& cm, const ConnObject& x);

/// Structural check of a morphism: eta total on edges and source valid.
Report validate_morphism(const Discretization& d, const CrossedModule& cm, const ConnMorphism& m);

/// The square sitting over edge `e` for a morphism: top g(e), label eta(e),
/// bottom bnd(eta(e)) g(e).
Square edge_square(const CrossedModule& cm, const ConnMorphism& m, const std::string& edge_id);

/// Target object of a morphism. Edges map to bnd(eta(e)) g(e); the face
/// labels are solved from the face compatibility equation by isolating the
/// unknown square with vertical inverses and evaluating the square calculus.
ConnObject morphism_target(const Discretization& d, const CrossedModule& cm,
                           const ConnMorphism& m);

ConnMorphism conn_identity(const CrossedModule& cm, const ConnObject& x);

/// Composite second-after-first: requires source(second) == target(first);
/// labels multiply pointwise with the later morphism's label on the left.
ConnMorphism conn_compose(const Discretization& d, const CrossedModule& cm,
                          const ConnMorphism& second, const ConnMorphism& first);

/// Two-sided inverse: source is the target of `m`, labels invert pointwise.
ConnMorphism conn_inverse(const Discretization& d, const CrossedModule& cm,
                          const ConnMorphism& m);

/// Number of naive assignment states |G|^|E| * |H|^|F|, as a double (the
/// value is only used for budget refusals and may be astronomically large).
double object_state_bound(const Discretization& d, const CrossedModule& cm);

/// All connection objects, in a deterministic order: edges and faces in
/// sorted-id order, element indices ascending, earlier cells most
/// significant. Iterates g-assignments and solves each face's H-fiber
/// instead of filtering over H^F. Throws budget_error when
/// object_state_bound exceeds `max_states`.
std::vector<ConnObject> enumerate_objects(const Discretization& d, const CrossedModule& cm,
                                          std::uint64_t max_states = 10'000'000);

/// |objects| * |H|^|E|. Throws budget_error on overflow past the budget.
std::uint64_t count_morphisms(const Discretization& d, const CrossedModule& cm,
                              std::uint64_t max_states = 10'000'000);

/// All morphisms (each object paired with every eta), deterministic order.
std::vector<ConnMorphism> enumerate_morphisms(const Discretization& d, const CrossedModule& cm,
                                              std::uint64_t max_states = 10'000'000);

}  // namespace hgt

#endif
