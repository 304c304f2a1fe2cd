#ifndef HGT_GAUGE_HPP_
#define HGT_GAUGE_HPP_

#include "hgt/conn.hpp"

namespace hgt {

/// An object of the gauge 2-group: a G-element per vertex.
struct GaugeObject {
  CellMap gamma;  // vertex id -> G element

  bool operator==(const GaugeObject& o) const { return gamma == o.gamma; }
  bool operator!=(const GaugeObject& o) const { return !(*this == o); }
};

/// A morphism of the gauge 2-group: source object plus an H-element per
/// vertex. Target is derived: gamma'(v) = bnd(chi(v)) gamma(v).
struct GaugeMorphism {
  CellMap gamma;  // source object
  CellMap chi;

  bool operator==(const GaugeMorphism& o) const { return gamma == o.gamma && chi == o.chi; }
  bool operator!=(const GaugeMorphism& o) const { return !(*this == o); }
};

Report validate_gauge_object(const Discretization& d, const CrossedModule& cm,
                             const GaugeObject& g);
Report validate_gauge_morphism(const Discretization& d, const CrossedModule& cm,
                               const GaugeMorphism& m);

/// The square sitting over vertex `v`: top gamma(v), label chi(v).
Square vertex_square(const CrossedModule& cm, const GaugeMorphism& m, const std::string& v);

GaugeObject gauge_target(const CrossedModule& cm, const GaugeMorphism& m);
GaugeMorphism gauge_identity(const CrossedModule& cm, const GaugeObject& g);

/// Categorical composition, pointwise vertical pasting of vertex squares;
/// requires target(first) == source(second).
GaugeMorphism gauge_compose(const CrossedModule& cm, const GaugeMorphism& second,
                            const GaugeMorphism& first);

/// Composition inverse: source is the target, labels invert pointwise.
GaugeMorphism gauge_compose_inverse(const CrossedModule& cm, const GaugeMorphism& m);

/// Monoidal product on objects: pointwise multiplication, `left` first.
GaugeObject gauge_tensor(const CrossedModule& cm, const GaugeObject& left,
                         const GaugeObject& right);

/// Monoidal product on morphisms: pointwise horizontal pasting, `left` on
/// the left; the composite label is chi_left (gamma_left |> chi_right).
GaugeMorphism gauge_tensor(const CrossedModule& cm, const GaugeMorphism& left,
                           const GaugeMorphism& right);

/// Monoidal inverse: pointwise horizontal inverse of the vertex squares.
GaugeMorphism gauge_tensor_inverse(const CrossedModule& cm, const GaugeMorphism& m);

/// Action on connection objects: edges conjugate by the endpoint values,
/// faces transform by the 0-source value acting on the label:
/// (gamma.g)(e) = gamma(src) g(e) gamma(tgt)^-1, (gamma.h)(f) = gamma(v_f) |> h(f).
ConnObject act_object(const Discretization& d, const CrossedModule& cm, const GaugeObject& gm,
                      const ConnObject& x);

/// Action on connection morphisms. Per edge e: v -> w the transformed edge
/// square is the horizontal paste
///   [chi(v) square] * [eta(e) square] * hinverse([chi(w) square]),
/// evaluated literally in the square calculus; the resulting morphism has
/// source act_object(source gamma, source of m).
ConnMorphism act_morphism(const Discretization& d, const CrossedModule& cm,
                          const GaugeMorphism& gm, const ConnMorphism& m);

/// All gauge objects / morphisms in deterministic order (vertices sorted,
/// element indices ascending). Throws budget_error above `max_states`.
std::vector<GaugeObject> enumerate_gauge_objects(const Discretization& d, const CrossedModule& cm,
                                                 std::uint64_t max_states = 10'000'000);
std::vector<GaugeMorphism> enumerate_gauge_morphisms(const Discretization& d,
                                                     const CrossedModule& cm,
                                                     std::uint64_t max_states = 10'000'000);

}  // namespace hgt

#endif
