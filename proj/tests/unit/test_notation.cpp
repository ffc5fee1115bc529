#include <doctest.h>

#include "contrapunctus/errors.hpp"
#include "contrapunctus/notation.hpp"

using namespace contrapunctus;

TEST_SUITE("notation") {

TEST_CASE("worlds") {
  for (const char* spec : {"affine:12", "symaffine:12", "finset:5", "powerset:3", "dual:affine:12",
                           "dual:powerset:2"}) {
    CHECK(to_string(parse_world(spec)) == spec);
  }
  for (const auto& entry : world_catalog()) CHECK(to_string(parse_world(entry.spec)) == entry.spec);
  CHECK_THROWS_AS(parse_world("affine"), ParseError);
  CHECK_THROWS_AS(parse_world("affine:0"), ParseError);
  CHECK_THROWS_AS(parse_world("torus:3"), ParseError);
  CHECK_THROWS_AS(parse_world("dual:finset:3"), ParseError);
  try {
    parse_world("torus:3");
  } catch (const ParseError& e) {
    CHECK(e.token() == "torus:3");
  }
}

TEST_CASE("affine morphisms") {
  const auto w = parse_world("affine:12");
  CHECK(parse_morphism(w, "e2.5") == Morphism(w, AffineParams{2, 5}));
  CHECK(parse_morphism(w, "e1.-1") == Morphism(w, AffineParams{1, 11}));
  CHECK(to_string(parse_morphism(w, "e1.-1")) == "e1.11");
  CHECK(to_string(parse_morphism(w, "e-3.7")) == "e9.7");
  CHECK_THROWS_AS(parse_morphism(w, "e2,5"), ParseError);
  CHECK_THROWS_AS(parse_morphism(parse_world("symaffine:12"), "e2.5"), ParseError);
}

TEST_CASE("finset and power-set morphisms") {
  const auto f = parse_world("finset:4");
  CHECK(to_string(parse_morphism(f, "perm:1,0,3,2")) == "perm:1,0,3,2");
  CHECK_THROWS_AS(parse_morphism(f, "perm:1,0,3"), ParseError);

  const auto ps = parse_world("powerset:3");
  const auto c = parse_morphism(ps, "eS.1");
  CHECK(c == Morphism(ps, AffineParams{7, 7}));
  CHECK(to_string(c) == "eS.S");
  CHECK(parse_morphism(ps, "ea-c.b") == Morphism(ps, AffineParams{5, 2}));
  CHECK(parse_morphism(ps, "e0.S") == identity(ps));
  CHECK_THROWS_AS(parse_morphism(ps, "ed.S"), ParseError);
}

TEST_CASE("dual morphisms and elements") {
  const auto d = parse_world("dual:affine:12");
  const auto g = parse_morphism(d, "e0+e2.(5+e0)");
  CHECK(g == Morphism(d, DualParams{0, 2, 5, 0}));
  CHECK(to_string(g) == "e0+e2.(5+e0)");
  CHECK(parse_element(d, "3+e7") == 3 * 12 + 7);
  CHECK(format_element(d, 3 * 12 + 7) == "3+e7");

  const auto pd = parse_world("dual:powerset:2");
  const auto h = parse_morphism(pd, "ea+eb.(S+ea-b)");
  CHECK(h == Morphism(pd, DualParams{1, 2, 3, 3}));
  CHECK(to_string(h) == "ea+eb.(S+eS)");
  CHECK(format_element(pd, parse_element(pd, "a+eb")) == "a+eb");
}

TEST_CASE("subsets") {
  const auto w = parse_world("affine:12");
  CHECK(parse_subset(w, "0,3,4,7,8,9") == SubSet::of(w.carrier(), {0, 3, 4, 7, 8, 9}));
  CHECK(parse_subset(w, "").is_empty());
  CHECK(format_subset(w, parse_subset(w, "9,0,3")) == "0,3,9");
  CHECK(parse_subset(w, "0,13,-1") == SubSet::of(w.carrier(), {0, 1, 11}));
  CHECK_THROWS_AS(parse_subset(parse_world("finset:4"), "4"), ParseError);
  CHECK_THROWS_AS(parse_subset(w, "0,x"), ParseError);

  const auto ps = parse_world("powerset:2");
  CHECK(parse_subset(ps, "0,a") == SubSet::of(ps.carrier(), {0, 1}));
  CHECK(format_subset(ps, SubSet::full(ps.carrier())) == "0,a,b,S");
}

}
