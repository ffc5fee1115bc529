#include <doctest.h>

#include <numeric>

#include "contrapunctus/errors.hpp"
#include "contrapunctus/notation.hpp"
#include "contrapunctus/polarity.hpp"
#include "oracles.hpp"

using namespace contrapunctus;

namespace {

const World z12 = World::affine(12);
const SubSet classical = SubSet::of(z12.carrier(), {0, 3, 4, 7, 8, 9});
const SubSet second_kappa = SubSet::of(z12.carrier(), {0, 2, 3, 4, 7, 8});

Morphism q12() {
  return Morphism(World::fin_set(12), TableParams{{1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10}});
}

std::vector<std::string> names(const std::vector<Morphism>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

}  // namespace

TEST_SUITE("polarity") {

TEST_CASE("is_quasipolarity") {
  CHECK(is_quasipolarity(z12, parse_morphism(z12, "e2.5")));
  CHECK(is_quasipolarity(World::fin_set(12), q12()));
  CHECK_FALSE(is_quasipolarity(z12, identity(z12)));
  CHECK_FALSE(is_quasipolarity(z12, parse_morphism(z12, "e0.11")));  // fixes 0
  CHECK_FALSE(is_quasipolarity(z12, parse_morphism(z12, "e1.1")));   // not involutive
  CHECK_FALSE(is_quasipolarity(z12, parse_morphism(z12, "e1.2")));   // not an iso
}

TEST_CASE("enumerate_quasipolarities") {
  const auto two = enumerate_quasipolarities(World::fin_set(2));
  REQUIRE(two.size() == 1);
  CHECK(two[0].table().table()[0] == 1);
  CHECK(enumerate_quasipolarities(World::affine(3)).empty());
  const auto all = names(enumerate_quasipolarities(z12));
  CHECK(std::find(all.begin(), all.end(), "e2.5") != all.end());
  CHECK(std::find(all.begin(), all.end(), "e1.11") != all.end());

  // Against the raw oracle.
  std::size_t expected = 0;
  for (const auto& g : oracle::affine_isos(12)) expected += oracle::is_quasipolarity(g.t) ? 1 : 0;
  CHECK(all.size() == expected);

  // Fixed-point-free involutions of 2m points: (2m-1)!!.
  CHECK(enumerate_quasipolarities(World::fin_set(6)).size() == 15);
  CHECK(enumerate_quasipolarities(World::fin_set(8)).size() == 105);
  CHECK(enumerate_quasipolarities(World::power_set(3)).size() == 7);
}

TEST_CASE("is_dichotomy") {
  const auto p = parse_morphism(z12, "e2.5");
  CHECK(is_dichotomy(z12, p, classical));
  CHECK_FALSE(is_dichotomy(z12, p, SubSet::of(z12.carrier(), {0, 1, 2, 3, 4, 5})));
  CHECK(is_dichotomy(z12, parse_morphism(z12, "e1.11"), second_kappa));
  CHECK_THROWS_AS(is_dichotomy(z12, identity(z12), classical), PreconditionError);
}

TEST_CASE("quasipolarities_for and is_strong") {
  CHECK(names(quasipolarities_for(z12, second_kappa)) == std::vector<std::string>{"e1.11", "e9.7"});
  const auto sym = World::sym_affine(12);
  CHECK(names(quasipolarities_for(sym, SubSet::of(sym.carrier(), {0, 2, 3, 4, 7, 8}))) ==
        std::vector<std::string>{"e1.11"});
  CHECK(names(quasipolarities_for(z12, classical)) == std::vector<std::string>{"e2.5"});
  CHECK(is_strong(z12, classical));
  CHECK_FALSE(is_strong(z12, second_kappa));
  CHECK(is_strong(sym, SubSet::of(sym.carrier(), {0, 2, 3, 4, 7, 8})));

  const auto f12 = World::fin_set(12);
  const auto k = SubSet::of(f12.carrier(), {0, 3, 4, 7, 8, 9});
  CHECK_FALSE(is_strong(f12, k));
  CHECK(count_quasipolarities_for(f12, k, 1000000) == 720);

  CHECK_THROWS_AS(quasipolarities_for(World::affine(7), SubSet::of(World::affine(7).carrier(), {0})),
                  StructuralError);
  CHECK_THROWS_AS(quasipolarities_for(z12, SubSet::of(z12.carrier(), {0})), StructuralError);
}

TEST_CASE("finset witnesses are exactly the bijections K -> D") {
  const auto f6 = World::fin_set(6);
  const auto k = SubSet::of(f6.carrier(), {0, 2, 5});
  const auto ws = quasipolarities_for(f6, k);
  CHECK(ws.size() == 6);
  CHECK(std::is_sorted(ws.begin(), ws.end()));
  for (const auto& p : ws) CHECK(is_dichotomy(f6, p, k));
}

TEST_CASE("dichotomy invariants") {
  const auto d = make_dichotomy(z12, second_kappa);
  CHECK(meet(d.consonances, d.dissonances).is_empty());
  CHECK(join(d.consonances, d.dissonances) == SubSet::full(z12.carrier()));
  for (const auto& p : d.witnesses) {
    CHECK(is_quasipolarity(z12, p));
    CHECK(image(realize(p), d.consonances) == d.dissonances);
  }
}

TEST_CASE("classification of affine:12") {
  const auto classes = classify_dichotomies(z12);
  std::uint64_t total = 0, strong = 0;
  for (const auto& c : classes) {
    total += c.orbit_size;
    strong += c.is_strong ? 1 : 0;
    CHECK(c.representative.consonances == orbit_representative(z12, c.representative.consonances));
    CHECK(48 % c.orbit_size == 0);
    CHECK(c.has_quasipolarity == !c.representative.witnesses.empty());
    CHECK(c.is_strong == (c.representative.witnesses.size() == 1));
  }
  CHECK(total == 924);
  std::uint64_t naive_total = 0;
  CHECK(strong == oracle::naive_strong_classes(12, &naive_total));
  CHECK(naive_total == 924);

  const auto rep = orbit_representative(z12, classical);
  const auto it = std::find_if(classes.begin(), classes.end(), [&](const DichotomyClass& c) {
    return c.representative.consonances == rep;
  });
  REQUIRE(it != classes.end());
  CHECK(it->is_strong);
}

TEST_CASE("classification is independent of worker count") {
  const auto w = World::affine(10);
  const auto one = classify_dichotomies(w, 1);
  const auto four = classify_dichotomies(w, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].representative.consonances == four[i].representative.consonances);
    CHECK(one[i].orbit_size == four[i].orbit_size);
    CHECK(one[i].representative.witnesses == four[i].representative.witnesses);
  }
}

TEST_CASE("classification of other worlds") {
  std::uint64_t total = 0;
  for (const auto& c : classify_dichotomies(World::fin_set(8))) total += c.orbit_size;
  CHECK(total == 70);
  const auto fin = classify_dichotomies(World::fin_set(8));
  CHECK(fin.size() == 1);
  total = 0;
  for (const auto& c : classify_dichotomies(World::power_set(3))) total += c.orbit_size;
  CHECK(total == 70);
  CHECK_THROWS_AS(classify_dichotomies(World::affine(7)), StructuralError);
  CHECK_THROWS_AS(classify_dichotomies(World::affine(26)), CapExceeded);
}

TEST_CASE("strongness is an orbit invariant") {
  const auto isos = enumerate_isos(z12);
  for (std::uint64_t m = 0; m < 4096; ++m) {
    if (std::popcount(m) != 6) continue;
    const auto k = SubSet::from_mask(z12.carrier(), m);
    const bool s = is_strong(z12, k);
    for (std::size_t i = 0; i < isos.size(); i += 5) {
      REQUIRE(is_strong(z12, image(realize(isos[i]), k)) == s);
    }
  }
}

TEST_CASE("strong implies exactly one quasipolarity") {
  const auto qps = enumerate_quasipolarities(z12);
  for (std::uint64_t m = 0; m < 4096; ++m) {
    if (std::popcount(m) != 6) continue;
    const auto k = SubSet::from_mask(z12.carrier(), m);
    std::size_t count = 0;
    for (const auto& p : qps) count += is_dichotomy(z12, p, k) ? 1 : 0;
    REQUIRE(is_strong(z12, k) == (count == 1));
  }
}

TEST_CASE("open-question search") {
  CHECK_FALSE(search_nonpolar_quasipolarity(World::fin_set(4), OpenQuestion::Existence));
  CHECK_FALSE(search_nonpolar_quasipolarity(World::affine(3), OpenQuestion::Existence));
  CHECK_FALSE(search_nonpolar_quasipolarity(World::affine(3), OpenQuestion::Strongness));
  const auto found = search_nonpolar_quasipolarity(World::fin_set(12), OpenQuestion::Strongness);
  REQUIRE(found);
  CHECK(is_quasipolarity(World::fin_set(12), found->quasipolarity));
  CHECK_FALSE(found->evidence.empty());

  const auto survey = survey_quasipolarities(z12);
  CHECK(survey.size() == enumerate_quasipolarities(z12).size());
  for (const auto& f : survey) {
    CHECK(f.dichotomies == 64);  // 2^6 choices, one from each swapped pair
    if (f.first_strong) CHECK(is_strong(z12, *f.first_strong));
  }
}

}
