#ifndef HGT_GROUP_HPP_
#define HGT_GROUP_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hgt/report.hpp"

namespace hgt {

// Index of an element inside its FiniteGroup's element list.
using Elem = int;

/// A finite group given by an explicit multiplication table.
///
/// Elements are opaque string identifiers; all arithmetic runs on dense
/// integer indices. Inverses are derived from the table, never stored in
/// input files. Construction enforces only structural soundness (unique
/// ids, total closed table, declared identity); the group axioms are
/// checked separately by validate_group so that corrupted tables can be
/// reported as violations instead of being unrepresentable.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> elements, const std::string& identity,
              const std::function<Elem(Elem, Elem)>& mul);

  // Table keys are "a,b" composite strings, as in the JSON schema.
  static FiniteGroup from_string_table(std::vector<std::string> elements,
                                       const std::string& identity,
                                       const std::map<std::string, std::string>& mul);

  int size() const { return static_cast<int>(names_.size()); }
  Elem identity() const { return identity_; }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<size_t>(a) * names_.size() + b]; }

  // Throws if `a` has no two-sided inverse (possible for corrupted tables).
  Elem inv(Elem a) const;
  bool has_inverse(Elem a) const { return inverse_[a] >= 0; }

  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  Elem index_of(const std::string& name) const;  // throws on unknown id
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  bool operator==(const FiniteGroup& o) const {
    return names_ == o.names_ && identity_ == o.identity_ && table_ == o.table_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Elem> index_;
  Elem identity_ = 0;
  std::vector<Elem> table_;    // size n*n, row-major: table_[a*n+b] = a*b
  std::vector<Elem> inverse_;  // derived; -1 where no two-sided inverse exists
};

/// Exhaustive group-axiom check: two-sided identity, associativity over
/// all triples, two-sided inverses. Feasible for the target scale (n <= ~24).
Report validate_group(const FiniteGroup& g, const std::string& label = "");

}  // namespace hgt

#endif
