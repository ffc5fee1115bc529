#pragma once

// Counterpoint symmetries on the dual-number lift of a ring world.
//
// A context fixes a dichotomy (K/D) of the base world with polarity
// p = e^u.a. On the dual world the consonant dyads are base x K, the
// dissonant ones base x D, and the polarity for cantus firmus 0 is
// p0 = e^{0+eps u}.(a+eps 0). For a consonance xi, a symmetry is an iso g
// that
//   (i)   makes xi a g-deformed dissonance: xi in g(D[eps]),
//   (ii)  commutes with the polarity,
//   (iii) maximizes |g(K[eps]) meet K[eps]| among isos satisfying (i), (ii).
// The union of the maximal meets is the set of admitted successors.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "contrapunctus/lattice.hpp"
#include "contrapunctus/parallel.hpp"
#include "contrapunctus/polarity.hpp"
#include "contrapunctus/worlds.hpp"

namespace contrapunctus {

struct ContrapuntalContext {
  World base;
  SubSet consonances;    // K in the base carrier
  SubSet dissonances;    // D in the base carrier
  Morphism polarity;     // p on the base
  World dual;
  SubSet consonances_eps;  // base x K
  SubSet dissonances_eps;  // base x D
  Morphism dual_polarity;  // p0, cantus firmus 0
};

/// Context for a strong dichotomy; the polarity is its unique quasipolarity.
/// Throws NonStrongDichotomy (with the witness list) otherwise.
ContrapuntalContext make_context(const World& base, const SubSet& k);

/// Context with an explicitly chosen quasipolarity of the dichotomy; needed
/// when the dichotomy is not strong in its world.
ContrapuntalContext make_context(const World& base, const SubSet& k, const Morphism& polarity);

/// Polarity used for cantus firmus x: p0 conjugated by the cantus
/// translation by x.
Morphism polarity_at(const ContrapuntalContext& ctx, std::uint32_t cantus);

/// A consonance: a single consonant dyad, or the image of a generalized
/// consonance (a nonempty set of consonant dyads over one cantus note).
struct Consonance {
  SubSet image;
  std::uint32_t cantus = 0;
  bool generalized = false;

  static Consonance point(const ContrapuntalContext& ctx, DualElement xi);
  static Consonance generalized_from(const ContrapuntalContext& ctx, const SubSet& image);
};

/// g(K[eps]).
SubSet deformed_consonances(const ContrapuntalContext& ctx, const Morphism& g);

/// Condition (i): the consonance lies in g(D[eps]).
bool is_deformed_dissonance(const ContrapuntalContext& ctx, const Morphism& g,
                            const Consonance& xi);

/// Condition (ii) against the polarity of the given cantus note.
bool commutes_with_polarity(const ContrapuntalContext& ctx, const Morphism& g,
                            std::uint32_t cantus = 0);

struct SymmetryOptions {
  /// Search only e^{0+eps v}.(1+eps b) instead of the full iso group.
  bool restricted_family = false;
  std::size_t workers = worker_count();
};

struct SymmetryReport {
  Consonance consonance;
  std::vector<Morphism> symmetries;  // ascending by params
  SubSet admitted;                   // union of g(K[eps]) meet K[eps]
  std::size_t max_meet_size = 0;
  std::uint64_t candidates = 0;  // isos satisfying (i) and (ii)
};

SymmetryReport counterpoint_symmetries(const ContrapuntalContext& ctx, const Consonance& xi,
                                       const SymmetryOptions& options = {});

/// One report per consonant interval k, for the consonance 0 + eps k.
std::map<std::uint32_t, SymmetryReport> successors_table(const ContrapuntalContext& ctx,
                                                         const SymmetryOptions& options = {});

/// { k in K : (next_cantus, k) is admitted }, as a subset of the base carrier.
SubSet admitted_next_intervals(const ContrapuntalContext& ctx, const SymmetryReport& report,
                               std::uint32_t next_cantus);

}  // namespace contrapunctus
