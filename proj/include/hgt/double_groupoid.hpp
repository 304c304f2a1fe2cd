#ifndef HGT_DOUBLE_GROUPOID_HPP_
#define HGT_DOUBLE_GROUPOID_HPP_

#include "hgt/gauge.hpp"

namespace hgt {

/// A vertical morphism of the transformation double groupoid: a gauge
/// object applied to a base connection. Source is `base`, target is
/// act_object(gamma, base).
struct VertMorphism {
  GaugeObject gamma;
  ConnObject base;

  bool operator==(const VertMorphism& o) const { return gamma == o.gamma && base == o.base; }
  bool operator!=(const VertMorphism& o) const { return !(*this == o); }
};

/// A square of the transformation double groupoid: a gauge morphism paired
/// with a connection morphism. All four boundaries are derived, never
/// stored, so they cannot drift out of consistency.
struct DGSquare {
  GaugeMorphism gmor;
  ConnMorphism cmor;

  bool operator==(const DGSquare& o) const { return gmor == o.gmor && cmor == o.cmor; }
  bool operator!=(const DGSquare& o) const { return !(*this == o); }
};

struct DGBoundaries {
  ConnMorphism top;     // cmor itself
  ConnMorphism bottom;  // act_morphism(gmor, cmor)
  VertMorphism left;    // (source gamma, source of cmor)
  VertMorphism right;   // (target gamma, target of cmor)
};

/// Derives the four boundary morphisms. Throws on ill-formed pairs (parts
/// not valid over the given complex and crossed module).
DGBoundaries square_boundaries(const Discretization& d, const CrossedModule& cm,
                               const DGSquare& s);

DGSquare dg_hidentity(const CrossedModule& cm, const VertMorphism& v);  // ((gamma, 1), (base, 1))
DGSquare dg_videntity(const Discretization& d, const CrossedModule& cm,
                      const ConnMorphism& m);  // ((1, 1), m)

/// Horizontal composite second-after-first: requires right boundary of
/// `first` to equal left boundary of `second`. Gauge parts compose
/// categorically, connection parts compose in Conn.
DGSquare dg_hcompose(const Discretization& d, const CrossedModule& cm, const DGSquare& second,
                     const DGSquare& first);

/// Vertical composite, `upper` first: requires lower.cmor to equal the
/// bottom boundary of `upper`. Gauge parts combine by the monoidal product
/// (lower on the left); the connection part is upper.cmor.
DGSquare dg_vcompose(const Discretization& d, const CrossedModule& cm, const DGSquare& upper,
                     const DGSquare& lower);

/// Two-sided inverse for horizontal composition: both parts invert.
DGSquare dg_hinverse(const Discretization& d, const CrossedModule& cm, const DGSquare& s);

/// Two-sided inverse for vertical composition: the gauge part inverts
/// monoidally and the connection part is the acted morphism.
DGSquare dg_vinverse(const Discretization& d, const CrossedModule& cm, const DGSquare& s);

VertMorphism vert_compose(const Discretization& d, const CrossedModule& cm,
                          const VertMorphism& second, const VertMorphism& first);
VertMorphism vert_inverse(const Discretization& d, const CrossedModule& cm,
                          const VertMorphism& v);

}  // namespace hgt

#endif
