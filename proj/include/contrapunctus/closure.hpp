#pragma once

// Closure operators M -> M v f(M) induced by an endomap f, and a harness
// that checks the Kuratowski axioms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contrapunctus/lattice.hpp"
#include "contrapunctus/worlds.hpp"

namespace contrapunctus {

enum class ClosureMode {
  Involutive,  // f o f = id; one step is already idempotent
  SingleStep,  // M v f(M) for arbitrary f; need not be idempotent
  Iterated,    // join of all f^k(M)
};

class ClosureOperator {
 public:
  /// Throws PreconditionError for Involutive mode with f o f != id.
  ClosureOperator(MapTable f, ClosureMode mode);
  /// Uses the realization of a world morphism.
  ClosureOperator(const Morphism& m, ClosureMode mode) : ClosureOperator(m.table(), mode) {}

  const MapTable& map() const noexcept { return f_; }
  ClosureMode mode() const noexcept { return mode_; }

  SubSet operator()(const SubSet& m) const;

 private:
  MapTable f_;
  ClosureMode mode_;
};

/// M v f(M); f must be an involution.
SubSet close_involutive(const MapTable& f, const SubSet& m);
/// M v f(M).
SubSet close_single_step(const MapTable& f, const SubSet& m);
/// Least fixpoint of close_single_step above M.
SubSet close_iterated(const MapTable& f, const SubSet& m);

/// M v f(M) v ... v f^(n-1)(M), computed from powers of f.
SubSet power_join(const MapTable& f, const SubSet& m, std::size_t n);

/// Smallest n >= 1 with f^n = id; empty if f is not a permutation.
std::optional<std::size_t> permutation_order(const MapTable& f);

struct KuratowskiViolation {
  std::string axiom;  // extensive | idempotent | joins | bottom
  SubSet witness;
  std::optional<SubSet> second;  // the other operand for joins
};

struct KuratowskiReport {
  bool exhaustive = false;
  std::uint64_t subsets_checked = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<KuratowskiViolation> violations;  // at most one per axiom

  bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive over all subsets (and pairs) when the carrier has at most 12
/// elements, otherwise `trials` random subsets and pairs from `seed`.
KuratowskiReport verify_kuratowski(const ClosureOperator& op, std::uint64_t trials = 1000,
                                   std::uint64_t seed = 0x5eed);

}  // namespace contrapunctus
