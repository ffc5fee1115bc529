#pragma once

// Quasipolarities, dichotomies and strong dichotomies of a world, plus the
// orbit classification of half-size subsets under the world's iso group.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contrapunctus/lattice.hpp"
#include "contrapunctus/parallel.hpp"
#include "contrapunctus/worlds.hpp"

namespace contrapunctus {

/// Largest carrier accepted by classify_dichotomies.
inline constexpr std::size_t kClassifyMaxCarrier = 24;

/// An involutive, fixed-point-free isomorphism of the world.
bool is_quasipolarity(const World& w, const Morphism& p);

/// All quasipolarities of `w`, ascending by params.
std::vector<Morphism> enumerate_quasipolarities(const World& w);

/// p maps K exactly onto its complement. Throws PreconditionError when p is
/// not a quasipolarity of w.
bool is_dichotomy(const World& w, const Morphism& p, const SubSet& k);

/// All quasipolarities mapping K onto its complement, ascending by params.
/// Throws StructuralError unless |K| is half of an even carrier.
std::vector<Morphism> quasipolarities_for(const World& w, const SubSet& k);

/// Same count as quasipolarities_for, but stops at `limit`.
std::uint64_t count_quasipolarities_for(const World& w, const SubSet& k, std::uint64_t limit);

/// K has exactly one quasipolarity, which is then a polarity.
bool is_strong(const World& w, const SubSet& k);

struct Dichotomy {
  World world;
  SubSet consonances;
  SubSet dissonances;
  std::vector<Morphism> witnesses;
};

/// The dichotomy (K / complement K) with all its certifying quasipolarities.
Dichotomy make_dichotomy(const World& w, const SubSet& k);

struct DichotomyClass {
  Dichotomy representative;  // numerically least mask in the orbit
  std::uint64_t orbit_size = 0;
  bool is_strong = false;
  bool has_quasipolarity = false;
};

/// Partitions all half-size subsets into iso-group orbits, ordered by
/// representative.
std::vector<DichotomyClass> classify_dichotomies(const World& w,
                                                 std::size_t workers = worker_count());

/// Least element of the orbit of K (for carriers of at most 64 elements).
SubSet orbit_representative(const World& w, const SubSet& k);

enum class OpenQuestion {
  Existence,   // does every quasipolarity have a dichotomy?
  Strongness,  // is every quasipolarity a polarity of some dichotomy?
};

struct QuasipolarityFinding {
  Morphism quasipolarity;
  std::uint64_t dichotomies = 0;         // number of K with p(K) = complement K
  std::uint64_t strong_dichotomies = 0;  // of those, how many are strong
  std::optional<SubSet> first_dichotomy;
  std::optional<SubSet> first_strong;
};

/// Per-quasipolarity findings for both questions on this finite instance.
std::vector<QuasipolarityFinding> survey_quasipolarities(const World& w);

struct NonpolarEvidence {
  Morphism quasipolarity;
  std::string evidence;
};

/// First quasipolarity lacking the property asked about, if any.
std::optional<NonpolarEvidence> search_nonpolar_quasipolarity(const World& w, OpenQuestion q);

}  // namespace contrapunctus
