#ifndef HGT_LAWS_HPP_
#define HGT_LAWS_HPP_

#include "hgt/double_groupoid.hpp"
#include "hgt/moduli.hpp"
#include "hgt/rediscretize.hpp"

namespace hgt {

struct LawOptions {
  std::uint64_t max_states = 10'000'000;
  std::uint64_t seed = 0;
  // Raise the exhaustive ceiling from max_states/10 to max_states. Laws
  // whose case count exceeds the ceiling run as a fixed-seed sample.
  bool prefer_exhaustive = false;
  std::size_t max_witnesses = 5;

  std::uint64_t exhaustive_ceiling() const {
    return prefer_exhaustive ? max_states : max_states / 10;
  }
};

struct LawResult {
  std::string suite;
  std::string law;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  bool sampled = false;                 // fixed-seed sample instead of exhaustive
  std::vector<std::string> witnesses;   // capped at LawOptions::max_witnesses

  bool ok() const { return violations == 0; }
};

/// Square-calculus laws, always exhaustive over all (composable) squares:
/// validity closure of the four operations, associativity of both
/// compositions, the interchange law on 2x2 arrays, two-sidedness of both
/// inverses, and the three inverse-of-composite identities.
std::vector<LawResult> check_square_laws(const CrossedModule& cm);

/// Connection-groupoid laws on a complex: composition well-definedness
/// (target of a composite equals target of the later morphism),
/// associativity, identity and inverse laws, validity of morphism targets,
/// and uniqueness of the solved face labels.
std::vector<LawResult> check_conn_laws(const Discretization& d, const CrossedModule& cm,
                                       const LawOptions& opt = {});

/// Gauge 2-group and action laws: categorical-group structure of the gauge
/// 2-group (interchange, tensor/composition inverses), well-definedness of
/// the action on morphisms, functoriality, the action-square identity on
/// objects and morphisms, and both unit conditions.
std::vector<LawResult> check_action_laws(const Discretization& d, const CrossedModule& cm,
                                         const LawOptions& opt = {});

/// Transformation double groupoid laws: boundary consistency, identity,
/// associativity and inverse laws for both compositions, and interchange.
std::vector<LawResult> check_double_laws(const Discretization& d, const CrossedModule& cm,
                                         const LawOptions& opt = {});

/// Rediscretization laws for one change: transports preserve validity,
/// identities and composition; inverse transport round-trips to the
/// identity on objects and morphisms; object/morphism counts invariant.
std::vector<LawResult> check_change_laws(const Discretization& d, const CrossedModule& cm,
                                         const ChangeSpec& spec, const LawOptions& opt = {});

}  // namespace hgt

#endif
