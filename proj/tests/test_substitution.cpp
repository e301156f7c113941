#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freelat/errors.hpp"
#include "freelat/substitution.hpp"
#include "support/generators.hpp"

using namespace freelat;

TEST_CASE("collapsing substitution merges duplicates") {
  auto m = parse_substitution("x1=x, x2=x");
  CHECK(apply_substitution(parse("x1 /\\ x2"), m) == var("x"));
  CHECK(apply_substitution(parse("x1 \\/ (x1 /\\ x2)"), m) == var("x"));
}

TEST_CASE("identity substitution") {
  Term t = parse("x1 \\/ (x2 /\\ x3)");
  auto id = VarSubstitution::identity({"x1", "x2", "x3"});
  CHECK(apply_substitution(t, id) == t);
  CHECK(id.is_surjective());
}

TEST_CASE("unifier step of the pattern terms") {
  auto sig = Signature::parse("s/4");
  auto m = parse_substitution("x=x, y=x, z=z");
  CHECK(apply_substitution(parse("s(x,y,z,z)", sig), m) == parse("s(x,x,z,z)", sig));
}

TEST_CASE("parse and format") {
  auto m = parse_substitution(" x1 = x ,x2=x, x3=y ");
  CHECK(m.domain() == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(m.image() == std::vector<std::string>{"x", "y"});
  CHECK(m.preimage("x") == std::vector<std::string>{"x1", "x2"});
  CHECK(m("x3") == "y");
  CHECK(format_substitution(m) == "x1=x, x2=x, x3=y");
  CHECK(parse_substitution(format_substitution(m)) == m);
  CHECK_THROWS_AS(parse_substitution("x1=x, x1=y"), SubstitutionError);
  CHECK_THROWS_AS(parse_substitution("x1"), ParseError);
}

TEST_CASE("surjectivity against a declared codomain") {
  VarSubstitution g({{"a", "w"}, {"b", "w"}}, {"w", "w2"});
  CHECK_FALSE(g.is_surjective());
  CHECK(g.preimage("w2").empty());
  VarSubstitution h({{"a", "w"}, {"b", "w2"}}, {"w", "w2"});
  CHECK(h.is_surjective());
  CHECK_THROWS_AS(VarSubstitution({{"a", "w"}}, {"u"}), SubstitutionError);
}

TEST_CASE("unmapped variable") {
  auto m = parse_substitution("x1=x");
  CHECK_THROWS_AS(apply_substitution(parse("x1 /\\ x2"), m), SubstitutionError);
  CHECK_THROWS_AS(m("x2"), SubstitutionError);
}

TEST_CASE("operator arguments are rewritten") {
  auto sig = Signature::parse("p/3");
  auto m = parse_substitution("z1=x, z2=x, z3=y, z4=y");
  CHECK(apply_substitution(parse("p(z1, z2, z3 /\\ z4)", sig), m) == parse("p(x, x, y)", sig));
}

TEST_CASE("functor property on random terms") {
  testgen::Rng rng(11);
  auto xs = testgen::names("x", 4);
  std::vector<testgen::OpSpec> ops{{"f", 2}};
  for (int i = 0; i < 300; ++i) {
    auto ys = testgen::names("y", testgen::uniform(rng, 1, 4));
    auto ws = testgen::names("w", testgen::uniform(rng, 1, ys.size()));
    auto m1 = testgen::random_surjection(rng, xs, ys);
    auto m2 = testgen::random_surjection(rng, ys, ws);
    Term t = testgen::random_term(rng, xs, 1 + i % 14, ops);
    auto composed = compose(m2, m1);
    CHECK(apply_substitution(apply_substitution(t, m1), m2) == apply_substitution(t, composed));
    CHECK(composed.codomain() == m2.codomain());
    CHECK(apply_substitution(t, VarSubstitution::identity(xs)) == t);
  }
}

TEST_CASE("term maps") {
  TermMap m{{"y", parse("x1 /\\ x2")}};
  CHECK(apply_term_map(parse("y \\/ y"), m) == parse("x1 /\\ x2"));
  CHECK_THROWS_AS(apply_term_map(parse("z"), m), SubstitutionError);
}
