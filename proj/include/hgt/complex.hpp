#ifndef HGT_COMPLEX_HPP_
#define HGT_COMPLEX_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgt/crossed_module.hpp"
#include "hgt/report.hpp"

namespace hgt {

enum class Dir { forward, reverse };

inline Dir flip(Dir d) { return d == Dir::forward ? Dir::reverse : Dir::forward; }

// One step of an edge-word: an oriented traversal of a declared edge.
struct Step {
  std::string edge;
  Dir dir = Dir::forward;

  bool operator==(const Step& o) const { return edge == o.edge && dir == o.dir; }
};

// A path written as a sequence of oriented edges.
using EdgeWord = std::vector<Step>;

struct Edge {
  std::string id;
  std::string src;
  std::string tgt;

  bool operator==(const Edge& o) const { return id == o.id && src == o.src && tgt == o.tgt; }
};

/// A 2-cell with its extra structure: a 0-source and 0-target vertex and
/// two boundary words (the 1-source and 1-target), each a path from the
/// 0-source to the 0-target. 0-source and 0-target may coincide.
struct Face {
  std::string id;
  std::string zero_source;
  std::string zero_target;
  EdgeWord one_source;  // upper boundary word
  EdgeWord one_target;  // lower boundary word

  bool operator==(const Face& o) const {
    return id == o.id && zero_source == o.zero_source && zero_target == o.zero_target &&
           one_source == o.one_source && one_target == o.one_target;
  }
};

/// A combinatorial oriented cell complex of dimension <= 2. Only the
/// combinatorial shadow of a cell structure is kept: the topological
/// attaching-map conditions are not representable here and are not checked.
struct Discretization {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  bool has_vertex(const std::string& id) const;
  const Edge* find_edge(const std::string& id) const;    // nullptr if absent
  const Face* find_face(const std::string& id) const;

  // Cell ids in sorted order; enumeration and serialization orders.
  std::vector<std::string> edge_ids_sorted() const;
  std::vector<std::string> face_ids_sorted() const;

  bool operator==(const Discretization& o) const {
    return vertices == o.vertices && edges == o.edges && faces == o.faces;
  }
};

/// Structural report: dangling references are reported distinctly from
/// path-connectivity and endpoint failures; witnesses carry cell ids.
Report validate_discretization(const Discretization& d);

// Endpoints of a word, honouring direction reversal. Empty words are
// rejected (their endpoints are indeterminate).
std::string word_source(const Discretization& d, const EdgeWord& w);
std::string word_target(const Discretization& d, const EdgeWord& w);

// True when `w` is a connected path in `d` (each consecutive pair of steps
// shares the appropriate endpoint). Fails on undeclared edges.
bool word_is_path(const Discretization& d, const EdgeWord& w);

/// Assignment of group elements to cells, keyed by cell id.
using CellMap = std::map<std::string, Elem>;

/// Ordered product of the assigned G-elements along the word, inverting
/// reversed steps. The empty word evaluates to the group identity.
Elem evaluate_word_G(const FiniteGroup& g, const CellMap& assignment, const EdgeWord& w);

/// Horizontal composite of per-edge squares in word order, substituting the
/// horizontal inverse for reversed steps. The empty word yields the unit
/// square on the group identity.
Square evaluate_word_square(const CrossedModule& cm,
                            const std::map<std::string, Square>& per_edge, const EdgeWord& w);

/// Reverses a word as a path: step order flipped, each direction toggled.
EdgeWord reverse_word(const EdgeWord& w);

/// Cancels backtracking pairs (e,+)(e,-) / (e,-)(e,+) until none remain.
/// Evaluation of words is invariant under this reduction.
EdgeWord reduce_word(const EdgeWord& w);

std::string word_to_string(const EdgeWord& w);

}  // namespace hgt

#endif
