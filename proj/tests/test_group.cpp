#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testutil.hpp"

using namespace hgt;

TEST_CASE("cyclic groups satisfy the axioms") {
  for (int n : {1, 2, 3, 4, 6}) {
    FiniteGroup g = hgtt::cyclic(n);
    Report r = validate_group(g);
    CHECK(r.ok());
    CHECK(g.size() == n);
    CHECK(g.identity() == 0);
  }
}

TEST_CASE("symmetric group table matches the permutation oracle") {
  FiniteGroup s3 = hgtt::symmetric3();
  CHECK(validate_group(s3).ok());
  // every product recomputed through raw permutation composition
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      hgtt::Perm expected = hgtt::pcompose(hgtt::s3_perm(a), hgtt::s3_perm(b));
      CHECK(s3.mul(a, b) == hgtt::s3_index(expected));
    }
  CHECK(s3.name(s3.mul(s3.index_of("(12)"), s3.index_of("(13)"))) == "(132)");
  CHECK(s3.inv(s3.index_of("(123)")) == s3.index_of("(132)"));
}

TEST_CASE("construction rejects structural defects") {
  CHECK_THROWS_AS(FiniteGroup({}, "e", [](Elem, Elem) { return 0; }), error);
  CHECK_THROWS_AS(FiniteGroup({"a", "a"}, "a", [](Elem, Elem) { return 0; }), error);
  CHECK_THROWS_AS(FiniteGroup({"a"}, "b", [](Elem, Elem) { return 0; }), error);
  CHECK_THROWS_AS(FiniteGroup({"a", "b"}, "a", [](Elem, Elem) { return 7; }), error);
  CHECK_THROWS_AS(FiniteGroup({"a", ""}, "a", [](Elem, Elem) { return 0; }), error);
}

TEST_CASE("from_string_table resolves and rejects") {
  std::map<std::string, std::string> mul{
      {"e,e", "e"}, {"e,a", "a"}, {"a,e", "a"}, {"a,a", "e"}};
  FiniteGroup g = FiniteGroup::from_string_table({"e", "a"}, "e", mul);
  CHECK(validate_group(g).ok());
  CHECK(g.mul(g.index_of("a"), g.index_of("a")) == g.identity());

  std::map<std::string, std::string> missing{{"e,e", "e"}, {"e,a", "a"}, {"a,e", "a"}};
  CHECK_THROWS_AS(FiniteGroup::from_string_table({"e", "a"}, "e", missing), error);

  std::map<std::string, std::string> unknown{
      {"e,e", "e"}, {"e,a", "a"}, {"a,e", "a"}, {"a,a", "z"}};
  CHECK_THROWS_AS(FiniteGroup::from_string_table({"e", "a"}, "e", unknown), error);
}

TEST_CASE("axiom violations are reported, not rejected") {
  // left-identity holds, right-identity broken at (a,e)
  FiniteGroup broken({"e", "a"}, "e", [](Elem x, Elem y) {
    if (x == 1 && y == 0) return 0;
    return (x + y) % 2;
  });
  Report r = validate_group(broken, "G");
  CHECK_FALSE(r.ok());
  bool found_identity = false;
  for (const Violation& v : r.violations) found_identity |= v.axiom == "G.identity";
  CHECK(found_identity);

  // a "multiplication" that is not associative
  FiniteGroup nonassoc({"0", "1", "2"}, "0", [](Elem x, Elem y) {
    if (x == 0) return y;
    if (y == 0) return x;
    return (x * y + 1) % 3;
  });
  Report r2 = validate_group(nonassoc);
  CHECK_FALSE(r2.ok());
  bool found_assoc = false;
  for (const Violation& v : r2.violations) found_assoc |= v.axiom == "associativity";
  CHECK(found_assoc);
}

TEST_CASE("missing inverses are flagged with a witness") {
  // total closed table where x*x = x, so x has no inverse
  FiniteGroup g({"e", "x"}, "e", [](Elem a, Elem b) {
    if (a == 1 && b == 1) return 1;
    return (a + b) % 2;
  });
  CHECK_FALSE(g.has_inverse(1));
  CHECK_THROWS_AS(g.inv(1), error);
  Report r = validate_group(g);
  bool found = false;
  for (const Violation& v : r.violations) found |= v.axiom == "inverse";
  CHECK(found);
}

TEST_CASE("unknown identifiers throw") {
  FiniteGroup g = hgtt::cyclic(3);
  CHECK_THROWS_AS(g.index_of("7"), error);
  CHECK(g.contains("2"));
  CHECK_FALSE(g.contains("3"));
}
