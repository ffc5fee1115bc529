#include <doctest.h>

#include <set>

#include "contrapunctus/errors.hpp"
#include "contrapunctus/notation.hpp"
#include "contrapunctus/worlds.hpp"
#include "oracles.hpp"

using namespace contrapunctus;

TEST_SUITE("worlds") {

TEST_CASE("realize") {
  const auto w = World::affine(12);
  const Morphism p(w, AffineParams{2, 5});
  const auto& t = realize(p);
  CHECK(t(0) == 2);
  CHECK(t(3) == 5);
  CHECK(t(7) == 1);

  const auto ps = World::power_set(3);
  const Morphism complement(ps, AffineParams{7, 7});
  const auto& c = realize(complement);
  for (std::uint32_t x = 0; x < 8; ++x) CHECK(c(x) == (7U ^ x));
  CHECK_THROWS_AS(make_iso(ps, AffineParams{7, 3}), AdmissibilityError);
  CHECK_FALSE(Morphism(ps, AffineParams{7, 3}).is_iso());

  const auto dual = dual_lift(w);
  const Morphism g(dual, DualParams{0, 2, 5, 0});
  CHECK(decode(dual.carrier(), realize(g)(encode(dual.carrier(), {0, 7}))) == DualElement{0, 1});
}

TEST_CASE("admissibility") {
  CHECK_THROWS_AS(Morphism(World::sym_affine(12), AffineParams{0, 5}), AdmissibilityError);
  CHECK_NOTHROW(Morphism(World::sym_affine(12), AffineParams{3, 11}));
  CHECK_THROWS_AS(Morphism(World::affine(12), AffineParams{12, 1}), AdmissibilityError);
  CHECK_THROWS_AS(Morphism(World::fin_set(3), TableParams{{0, 3, 1}}), AdmissibilityError);
  CHECK_THROWS_AS(Morphism(World::affine(12), TableParams{{0}}), AdmissibilityError);
  CHECK_THROWS_AS(make_iso(World::affine(12), AffineParams{0, 2}), AdmissibilityError);
}

TEST_CASE("compose") {
  const auto w = World::affine(12);
  const Morphism p(w, AffineParams{2, 5});
  CHECK(compose(p, p) == identity(w));
  const Morphism q(w, AffineParams{1, 11});
  CHECK(compose(q, q) == identity(w));
  CHECK(compose(identity(w), q) == q);
  CHECK(compose(Morphism(w, AffineParams{3, 5}), Morphism(w, AffineParams{4, 7})) ==
        Morphism(w, AffineParams{(5 * 4 + 3) % 12, 35 % 12}));
  CHECK_THROWS_AS(compose(p, identity(World::affine(6))), IncompatibleObjects);
}

TEST_CASE("iso counts") {
  CHECK(enumerate_isos(World::affine(12)).size() == 48);
  CHECK(enumerate_isos(World::fin_set(3)).size() == 6);
  CHECK(enumerate_isos(World::sym_affine(12)).size() == 24);
  CHECK(enumerate_isos(World::power_set(3)).size() == 8);
  const auto dual = dual_lift(World::affine(12));
  CHECK(IsoEnumerator(dual).size() == 6912);
  CHECK(dual.iso_group_size() == 6912);
  CHECK(IsoEnumerator(dual_lift(World::power_set(2))).size() == 64);
  CHECK(World::fin_set(5).iso_group_size() == 120);

  // Units of Z_12[eps] by brute force: a + eps b invertible iff some
  // c + eps d gives 1.
  std::uint64_t units = 0;
  for (std::uint32_t a = 0; a < 12; ++a) {
    for (std::uint32_t b = 0; b < 12; ++b) {
      bool inv = false;
      for (std::uint32_t c = 0; c < 12 && !inv; ++c) {
        for (std::uint32_t d = 0; d < 12 && !inv; ++d) {
          inv = (a * c) % 12 == 1 && (a * d + b * c) % 12 == 0;
        }
      }
      units += inv ? 1 : 0;
    }
  }
  CHECK(units * 144 == 6912);
}

TEST_CASE("enumeration is ascending and unique") {
  for (const auto& w : {World::affine(12), World::power_set(3), World::fin_set(4),
                        dual_lift(World::affine(6)), dual_lift(World::power_set(2))}) {
    const auto isos = enumerate_isos(w);
    CHECK(std::is_sorted(isos.begin(), isos.end()));
    CHECK(std::adjacent_find(isos.begin(), isos.end()) == isos.end());
    for (const auto& g : isos) REQUIRE(g.is_iso());
  }
}

TEST_CASE("functor laws on Z_12") {
  const auto w = World::affine(12);
  std::vector<Morphism> all;
  for (std::uint32_t u = 0; u < 12; ++u) {
    for (std::uint32_t a = 0; a < 12; ++a) all.emplace_back(w, AffineParams{u, a});
  }
  CHECK(realize(identity(w)).is_identity());
  for (const auto& g : all) {
    for (const auto& h : all) {
      REQUIRE(realize(compose(g, h)) == compose(realize(g), realize(h)));
    }
  }
  // Faithfulness: distinct params, distinct tables.
  std::set<std::vector<std::uint32_t>> tables;
  for (const auto& g : all) {
    tables.emplace(realize(g).table().begin(), realize(g).table().end());
  }
  CHECK(tables.size() == all.size());
}

TEST_CASE("faithfulness for n <= 12") {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    const auto w = World::affine(n);
    std::set<std::vector<std::uint32_t>> tables;
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t a = 0; a < n; ++a) {
        const Morphism g(w, AffineParams{u, a});
        tables.emplace(realize(g).table().begin(), realize(g).table().end());
      }
    }
    REQUIRE(tables.size() == std::size_t{n} * n);
  }
}

TEST_CASE("iso group closure") {
  for (const auto& w : {World::affine(12), dual_lift(World::affine(4)), World::power_set(3),
                        dual_lift(World::power_set(2)), World::sym_affine(10)}) {
    const auto isos = enumerate_isos(w);
    const std::set<Morphism> group(isos.begin(), isos.end());
    for (const auto& g : isos) {
      REQUIRE(group.contains(inverse(g)));
      REQUIRE(compose(g, inverse(g)) == identity(w));
      for (const auto& h : isos) REQUIRE(group.contains(compose(g, h)));
    }
  }
}

TEST_CASE("dual isos agree with the raw formula") {
  const auto dual = dual_lift(World::affine(12));
  const IsoEnumerator isos(dual);
  for (std::uint64_t i = 0; i < isos.size(); i += 37) {
    const auto g = isos.at(i);
    const auto p = std::get<DualParams>(g.params());
    for (std::uint32_t x = 0; x < 12; ++x) {
      for (std::uint32_t y = 0; y < 12; ++y) {
        const auto img = decode(dual.carrier(), realize(g)(encode(dual.carrier(), {x, y})));
        REQUIRE(img.cantus == (p.a * x + p.u) % 12);
        REQUIRE(img.interval == (p.b * x + p.a * y + p.v) % 12);
      }
    }
  }
}

TEST_CASE("dual lift") {
  CHECK(dual_lift(World::affine(12)).carrier().size() == 144);
  CHECK(dual_lift(World::power_set(2)).carrier().size() == 16);
  CHECK_THROWS_AS(dual_lift(World::fin_set(4)), UnsupportedWorld);
  CHECK_THROWS_AS(dual_lift(World::sym_affine(12)), UnsupportedWorld);
  CHECK_THROWS_AS(dual_lift(dual_lift(World::affine(3))), UnsupportedWorld);

  // eps^2 = 0: multiplication by eps is (x, y) -> (0, x); twice gives 0.
  const auto dual = dual_lift(World::affine(12));
  const Morphism eps(dual, DualParams{0, 0, 0, 1});
  const auto e = encode(dual.carrier(), {0, 1});
  CHECK(realize(eps)(e) == encode(dual.carrier(), {0, 0}));
  CHECK(realize(eps)(encode(dual.carrier(), {1, 0})) == e);

  // (1 + eps W)(x + eps y) = x + eps (y xor (W and x)) in 2^S[eps].
  const auto pd = dual_lift(World::power_set(3));
  for (std::uint32_t w = 0; w < 8; ++w) {
    const Morphism g(pd, DualParams{0, 0, 7, w});
    for (std::uint32_t x = 0; x < 8; ++x) {
      for (std::uint32_t y = 0; y < 8; ++y) {
        REQUIRE(realize(g)(encode(pd.carrier(), {x, y})) ==
                encode(pd.carrier(), {x, y ^ (w & x)}));
      }
    }
  }
}

TEST_CASE("cantus translation") {
  const auto dual = dual_lift(World::affine(12));
  const auto t = cantus_translation(dual, 5);
  CHECK(decode(dual.carrier(), realize(t)(encode(dual.carrier(), {8, 3}))) == DualElement{1, 3});
}

TEST_CASE("ring arithmetic") {
  const auto r = Ring::residues(12);
  CHECK(r.units() == oracle::units_mod(12));
  CHECK(r.inv(5) == 5);
  CHECK(r.inv(7) == 7);
  CHECK_THROWS(r.inv(4));
  const auto b = Ring::power_set(3);
  CHECK(b.one() == 7);
  CHECK(b.units() == std::vector<std::uint32_t>{7});
  CHECK(b.add(5, 3) == 6);
  CHECK(b.mul(5, 3) == 1);
}

TEST_CASE("finset unranking covers all permutations") {
  const auto isos = enumerate_isos(World::fin_set(5));
  std::set<std::vector<std::uint32_t>> tables;
  for (const auto& g : isos) tables.emplace(g.table().table().begin(), g.table().table().end());
  CHECK(tables.size() == 120);
  CHECK_THROWS_AS(IsoEnumerator(World::fin_set(21)), CapExceeded);
}

}
