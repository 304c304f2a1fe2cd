#ifndef HGT_REDISCRETIZE_HPP_
#define HGT_REDISCRETIZE_HPP_

#include "hgt/conn.hpp"

namespace hgt {

enum class ChangeKind {
  edge_flip,   // reverse an edge's orientation
  face_vflip,  // swap a face's 1-source and 1-target
  face_hflip,  // swap a face's 0-source/0-target and reverse both words
  bigon_move,  // move a face's 0-source/0-target along connecting words
};

const char* change_kind_name(ChangeKind k);

/// One discretization change. For bigon_move, `nu` is a path from the new
/// 0-source to the old one and `omega` a path from the old 0-target to the
/// new one; either may be empty when the corresponding vertex is unchanged.
struct ChangeSpec {
  ChangeKind kind = ChangeKind::edge_flip;
  std::string cell;  // edge id for edge_flip, face id otherwise

  // bigon_move only:
  std::string new_zero_source;
  std::string new_zero_target;
  EdgeWord nu;
  EdgeWord omega;

  bool operator==(const ChangeSpec& o) const {
    return kind == o.kind && cell == o.cell && new_zero_source == o.new_zero_source &&
           new_zero_target == o.new_zero_target && nu == o.nu && omega == o.omega;
  }
};

using ChangeScript = std::vector<ChangeSpec>;

/// Checks the spec against the complex: referenced cells exist; for
/// bigon_move the connecting words are paths with the stated endpoints.
Report validate_change(const Discretization& d, const ChangeSpec& spec);

/// The modified discretization. Cell ids are preserved; for bigon_move the
/// new boundary words are nu ++ word ++ omega with backtracking cancelled.
/// Throws on invalid specs.
Discretization apply_change(const Discretization& d, const ChangeSpec& spec);

/// The change that undoes `spec` on `d` (`spec` must be valid for `d`).
/// Flips are involutions; for bigon_move the connecting words reverse.
ChangeSpec inverse_change(const Discretization& d, const ChangeSpec& spec);

/// Object transport along the change functor: edges invert under edge
/// flips, face labels transform by the vertical/horizontal inverse or by
/// the whiskering action of nu's holonomy.
ConnObject transport_object(const Discretization& d, const ChangeSpec& spec,
                            const CrossedModule& cm, const ConnObject& x);

/// Morphism transport: the flipped edge's label becomes the horizontal
/// inverse label; all other cases leave eta unchanged. The carried source
/// object transports alongside.
ConnMorphism transport_morphism(const Discretization& d, const ChangeSpec& spec,
                                const CrossedModule& cm, const ConnMorphism& m);

// Sequential application of a script (functor composition).
Discretization apply_script(const Discretization& d, const ChangeScript& script);
ConnObject transport_object_script(const Discretization& d, const ChangeScript& script,
                                   const CrossedModule& cm, const ConnObject& x);
ConnMorphism transport_morphism_script(const Discretization& d, const ChangeScript& script,
                                       const CrossedModule& cm, const ConnMorphism& m);

}  // namespace hgt

#endif
