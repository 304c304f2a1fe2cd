#ifndef HGT_CROSSED_MODULE_HPP_
#define HGT_CROSSED_MODULE_HPP_

#include <string>

#include "hgt/group.hpp"
#include "hgt/report.hpp"

namespace hgt {

/// A crossed module: groups G and H, an action of G on H and a boundary
/// map H -> G, stored as dense tables over element indices.
///
/// Construction enforces table totality and closedness only; the crossed
/// module axioms (boundary homomorphism, action by automorphisms, the two
/// compatibility identities) are checked by validate_crossed_module.
class CrossedModule {
 public:
  CrossedModule(FiniteGroup g, FiniteGroup h,
                const std::function<Elem(Elem, Elem)>& action,   // (g, h) -> h'
                const std::function<Elem(Elem)>& boundary);      // h -> g

  const FiniteGroup& g() const { return g_; }
  const FiniteGroup& h() const { return h_; }

  Elem act(Elem gi, Elem hi) const { return act_[static_cast<size_t>(gi) * h_.size() + hi]; }
  Elem bnd(Elem hi) const { return bnd_[hi]; }

  bool operator==(const CrossedModule& o) const {
    return g_ == o.g_ && h_ == o.h_ && act_ == o.act_ && bnd_ == o.bnd_;
  }

 private:
  FiniteGroup g_;
  FiniteGroup h_;
  std::vector<Elem> act_;
  std::vector<Elem> bnd_;
};

/// Axiom report for a crossed module. Covers the group axioms of both G
/// and H, boundary being a homomorphism, the action being a group action
/// by automorphisms, equivariance of the boundary, and the Peiffer
/// identity. Each violation names the axiom and a witness tuple.
Report validate_crossed_module(const CrossedModule& cm);

/// A labelled square of the 2D calculus: G-elements on top and bottom, an
/// H-element in the centre, side edges implicitly labelled by the group
/// identity. Valid iff bnd(label) = bottom * top^-1.
///
/// Squares keep a pointer to their crossed module; the module must outlive
/// every square built over it, and operations mixing squares from different
/// modules are rejected.
struct Square {
  const CrossedModule* cm = nullptr;
  Elem top = 0;
  Elem bottom = 0;
  Elem label = 0;

  bool operator==(const Square& o) const {
    return cm == o.cm && top == o.top && bottom == o.bottom && label == o.label;
  }
  bool operator!=(const Square& o) const { return !(*this == o); }
};

/// Builds the square with the given top and label; the bottom is forced
/// by validity: bottom = bnd(label) * top.
Square make_square(const CrossedModule& cm, Elem top, Elem label);

/// The square (g, g, 1): vertical unit at g; at g = 1 also the horizontal unit.
Square identity_square(const CrossedModule& cm, Elem g);

bool square_valid(const Square& s);

/// Side-by-side pasting, `a` on the left:
/// (a.top b.top, a.bottom b.bottom, a.label (a.top |> b.label)).
Square hcompose(const Square& a, const Square& b);

/// Top-to-bottom pasting, `upper` first; requires upper.bottom == lower.top.
/// The later (lower) label multiplies on the left:
/// (upper.top, lower.bottom, lower.label * upper.label).
Square vcompose(const Square& upper, const Square& lower);

/// (top^-1, bottom^-1, top^-1 |> label^-1); two-sided for hcompose.
Square hinverse(const Square& a);

/// (bottom, top, label^-1); two-sided for vcompose.
Square vinverse(const Square& a);

std::string square_to_string(const Square& s);

}  // namespace hgt

#endif
