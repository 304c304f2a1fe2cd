#ifndef HGT_REPORT_HPP_
#define HGT_REPORT_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgt {

// Thrown on contract breaches: mismatched boundaries, unknown ids,
// operations mixing values from different crossed modules.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an enumeration would exceed the configured state budget.
// `bound` is the rejected state-count estimate.
struct budget_error : error {
  budget_error(const std::string& msg, double bound_) : error(msg), bound(bound_) {}
  double bound;
};

// One violated axiom/invariant plus a witness tuple.
struct Violation {
  std::string axiom;    // stable machine-readable name, e.g. "peiffer"
  std::string witness;  // human-readable witness, e.g. "(g=a, h=x)"
};

// Result of a validation pass. Empty means valid.
struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::string witness) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }
  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

[[noreturn]] inline void fail(const std::string& msg) { throw error(msg); }

}  // namespace hgt

#endif
