#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testutil.hpp"

#include "hgt/laws.hpp"

using namespace hgt;

namespace {

std::uint64_t total_violations(const std::vector<LawResult>& results) {
  std::uint64_t n = 0;
  for (const LawResult& r : results) n += r.violations;
  return n;
}

const LawResult* find_law(const std::vector<LawResult>& results, const std::string& name) {
  for (const LawResult& r : results)
    if (r.law == name) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("square laws hold for the three reference modules") {
  for (const CrossedModule& cm :
       {hgtt::z2z4_mod2(), hgtt::s3_conjugation(), hgtt::z2z3_inversion()}) {
    std::vector<LawResult> r = check_square_laws(cm);
    CHECK(total_violations(r) == 0);
    for (const LawResult& law : r) {
      CHECK_FALSE(law.sampled);  // the square suite is always exhaustive
      CHECK(law.cases > 0);
    }
  }
}

// A module where the Peiffer identity fails must break interchange:
// the law engine has to catch it.
TEST_CASE("the square suite detects a broken module through interchange") {
  CrossedModule bad(hgtt::cyclic(2), hgtt::symmetric3(), [](Elem, Elem h) { return h; },
                    [](Elem) { return 0; });
  REQUIRE_FALSE(validate_crossed_module(bad).ok());
  std::vector<LawResult> r = check_square_laws(bad);
  const LawResult* interchange = find_law(r, "interchange");
  REQUIRE(interchange != nullptr);
  CHECK(interchange->violations > 0);
  CHECK_FALSE(interchange->witnesses.empty());
}

TEST_CASE("connection-groupoid laws hold on all examples") {
  LawOptions opt;
  for (const CrossedModule& cm : {hgtt::z2z4_mod2(), hgtt::z2z3_inversion()}) {
    for (const char* name : {"s1", "s2", "t2"}) {
      std::vector<LawResult> r = check_conn_laws(build_example(name), cm, opt);
      CHECK(total_violations(r) == 0);
      CHECK(r.size() == 5);
    }
  }
}

TEST_CASE("action laws hold on all examples") {
  LawOptions opt;
  for (const char* name : {"s1", "s2", "t2"}) {
    std::vector<LawResult> r = check_action_laws(build_example(name), hgtt::z2z4_mod2(), opt);
    CHECK(total_violations(r) == 0);
  }
}

TEST_CASE("double-groupoid laws hold on the circle with the conjugation module") {
  LawOptions opt;
  opt.max_states = 2'000'000;  // keeps the big laws sampled but meaningful
  std::vector<LawResult> r = check_double_laws(build_example("s1"), hgtt::s3_conjugation(), opt);
  CHECK(total_violations(r) == 0);
  const LawResult* boundary = find_law(r, "boundary consistency");
  REQUIRE(boundary != nullptr);
  CHECK(boundary->cases == 1296);  // 36 gauge morphisms x 36 connection morphisms
  CHECK_FALSE(boundary->sampled);
}

TEST_CASE("change laws hold for every kind on the torus") {
  LawOptions opt;
  CrossedModule cm = hgtt::z2z4_mod2();
  Discretization t2 = build_example("t2");
  std::vector<ChangeSpec> specs;
  specs.push_back({ChangeKind::edge_flip, "e1", "", "", {}, {}});
  specs.push_back({ChangeKind::face_vflip, "f", "", "", {}, {}});
  specs.push_back({ChangeKind::face_hflip, "f", "", "", {}, {}});
  specs.push_back({ChangeKind::bigon_move, "f", "v", "v", {{"e1", Dir::reverse}}, {}});
  for (const ChangeSpec& s : specs) {
    std::vector<LawResult> r = check_change_laws(t2, cm, s, opt);
    CHECK(total_violations(r) == 0);
  }
}

TEST_CASE("sampled laws are deterministic for a fixed seed") {
  LawOptions opt;
  opt.max_states = 100'000;  // force sampling on the bigger laws
  opt.seed = 17;
  Discretization t2 = build_example("t2");
  CrossedModule cm = hgtt::z2z4_mod2();
  std::vector<LawResult> a = check_double_laws(t2, cm, opt);
  std::vector<LawResult> b = check_double_laws(t2, cm, opt);
  REQUIRE(a.size() == b.size());
  bool any_sampled = false;
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].law == b[i].law);
    CHECK(a[i].cases == b[i].cases);
    CHECK(a[i].violations == b[i].violations);
    CHECK(a[i].sampled == b[i].sampled);
    any_sampled |= a[i].sampled;
  }
  CHECK(any_sampled);
}

TEST_CASE("raising the ceiling turns sampled laws exhaustive") {
  LawOptions low;
  low.max_states = 400'000;  // ceiling 40k: vertical associativity (65536) samples
  Discretization t2 = build_example("t2");
  CrossedModule cm = hgtt::z2z4_mod2();
  const LawResult* sampled = find_law(check_double_laws(t2, cm, low), "vertical associativity");
  REQUIRE(sampled != nullptr);
  CHECK(sampled->sampled);

  LawOptions high = low;
  high.prefer_exhaustive = true;  // ceiling 400k: now exhaustive
  const LawResult* full = find_law(check_double_laws(t2, cm, high), "vertical associativity");
  REQUIRE(full != nullptr);
  CHECK_FALSE(full->sampled);
  CHECK(full->cases == 65536);
}

TEST_CASE("law suites refuse oversized enumerations") {
  LawOptions opt;
  opt.max_states = 10;
  CHECK_THROWS_AS(check_conn_laws(build_example("t2"), hgtt::z2z4_mod2(), opt), budget_error);
}
