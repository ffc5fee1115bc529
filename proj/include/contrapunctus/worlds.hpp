#pragma once

// Morphism worlds: a carrier with a distinguished family of endomorphisms,
// realized as function tables. Ring worlds (Z_n and 2^S) also carry their
// dual-number lift.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "contrapunctus/lattice.hpp"

namespace contrapunctus {

/// Arithmetic of a finite commutative ring whose elements are 0..size-1.
/// Either Z_n, or 2^S with symmetric difference as sum and intersection as
/// product (elements are bitmasks, the unit is S itself).
class Ring {
 public:
  static Ring residues(std::uint32_t n);
  static Ring power_set(unsigned bits);

  bool is_boolean() const noexcept { return boolean_; }
  std::uint32_t size() const noexcept { return size_; }
  unsigned bits() const noexcept { return bits_; }

  std::uint32_t zero() const noexcept { return 0; }
  std::uint32_t one() const noexcept { return boolean_ ? size_ - 1 : 1 % size_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept {
    return boolean_ ? (x ^ y) : static_cast<std::uint32_t>((std::uint64_t{x} + y) % size_);
  }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept {
    return boolean_ ? (x & y) : static_cast<std::uint32_t>((std::uint64_t{x} * y) % size_);
  }
  std::uint32_t neg(std::uint32_t x) const noexcept {
    return boolean_ ? x : (x == 0 ? 0 : size_ - x);
  }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept { return add(x, neg(y)); }

  bool is_unit(std::uint32_t x) const noexcept;
  /// Multiplicative inverse; throws PreconditionError for non-units.
  std::uint32_t inv(std::uint32_t x) const;
  /// Units in ascending order.
  std::vector<std::uint32_t> units() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(bool boolean, std::uint32_t size, unsigned bits)
      : boolean_(boolean), size_(size), bits_(bits) {}

  bool boolean_;
  std::uint32_t size_;
  unsigned bits_;
};

enum class WorldKind : std::uint8_t { Affine, SymAffine, FinSet, PowerSet, Dual };

class World {
 public:
  /// Z_n with all affine maps x -> a*x + u.
  static World affine(std::uint32_t n);
  /// Z_n with the maps x -> +-x + u only.
  static World sym_affine(std::uint32_t n);
  /// {0..n-1} with all total maps.
  static World fin_set(std::uint32_t n);
  /// 2^S, |S| = bits, with maps x -> U xor (W and x).
  static World power_set(unsigned bits);

  WorldKind kind() const noexcept { return kind_; }
  /// n for Z_n and finite sets, |S| for power sets; for dual worlds, the
  /// parameter of the base.
  std::uint32_t parameter() const noexcept { return parameter_; }
  /// For dual worlds, the kind of the base world; otherwise kind().
  WorldKind base_kind() const noexcept { return base_kind_; }
  std::optional<World> base() const;

  const Carrier& carrier() const noexcept { return carrier_; }
  /// Affine, sym-affine, power-set and dual worlds. Dual worlds expose their
  /// base ring.
  bool has_ring() const noexcept { return kind_ != WorldKind::FinSet; }
  Ring ring() const;

  /// Number of isomorphisms; empty when it does not fit in 64 bits.
  std::optional<std::uint64_t> iso_group_size() const;

  friend bool operator==(const World& a, const World& b) {
    return a.kind_ == b.kind_ && a.parameter_ == b.parameter_ && a.base_kind_ == b.base_kind_;
  }

 private:
  friend World dual_lift(const World& base);
  World(WorldKind kind, std::uint32_t parameter, WorldKind base_kind, Carrier carrier)
      : kind_(kind), parameter_(parameter), base_kind_(base_kind), carrier_(carrier) {}

  WorldKind kind_;
  std::uint32_t parameter_;
  WorldKind base_kind_;
  Carrier carrier_;
};

/// The dual-number world M[eps] over an affine or power-set world.
World dual_lift(const World& base);

/// e^u.a : x -> a*x + u. Used by affine, sym-affine and power-set worlds.
struct AffineParams {
  std::uint32_t u = 0;
  std::uint32_t a = 0;
  friend auto operator<=>(const AffineParams&, const AffineParams&) = default;
};

/// e^{u+eps v}.(a+eps b) : (x, y) -> (a*x + u, b*x + a*y + v).
struct DualParams {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend auto operator<=>(const DualParams&, const DualParams&) = default;
};

/// Plain function table (finite-set world).
struct TableParams {
  std::vector<std::uint32_t> table;
  friend auto operator<=>(const TableParams&, const TableParams&) = default;
};

using MorphismParams = std::variant<AffineParams, DualParams, TableParams>;

/// An element of a dual carrier: cantus firmus and interval.
struct DualElement {
  std::uint32_t cantus = 0;
  std::uint32_t interval = 0;
  friend auto operator<=>(const DualElement&, const DualElement&) = default;
};

std::uint32_t encode(const Carrier& dual_carrier, DualElement e);
DualElement decode(const Carrier& dual_carrier, std::uint32_t index);

/// A morphism of a world. Equality is parametric: same world, same params.
class Morphism {
 public:
  /// Throws AdmissibilityError if the params are not in the world's family.
  Morphism(const World& world, MorphismParams params);

  const World& world() const noexcept { return world_; }
  const MorphismParams& params() const noexcept { return params_; }
  const MapTable& table() const noexcept { return table_; }
  bool is_iso() const;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.world_ == b.world_ && a.params_ == b.params_;
  }
  /// Lexicographic on params; only meaningful within one world.
  friend std::strong_ordering operator<=>(const Morphism& a, const Morphism& b) {
    return a.params_ <=> b.params_;
  }

 private:
  World world_;
  MorphismParams params_;
  MapTable table_;
};

/// Builds a morphism that must be an isomorphism of its world.
Morphism make_iso(const World& world, MorphismParams params);

/// The function table of a morphism (the realization functor).
const MapTable& realize(const Morphism& m);

Morphism identity(const World& world);
/// g after h; params are composed symbolically.
Morphism compose(const Morphism& g, const Morphism& h);
Morphism inverse(const Morphism& g);

/// Cantus translation e^{x+eps 0}.(1+eps 0) of a dual world.
Morphism cantus_translation(const World& dual, std::uint32_t x);

/// Lazily indexed isomorphism group of a world, in ascending param order.
/// Index ranges can be split across workers.
class IsoEnumerator {
 public:
  /// Throws CapExceeded when the group is too large to index.
  explicit IsoEnumerator(const World& world);

  std::uint64_t size() const noexcept { return size_; }
  Morphism at(std::uint64_t index) const;

  /// Restricts a dual world to the family e^{0+eps v}.(1+eps b).
  static IsoEnumerator restricted_family(const World& dual);

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t i = 0; i < size_; ++i) fn(at(i));
  }

 private:
  World world_;
  std::vector<std::uint32_t> units_;  // multipliers admitted for isos
  std::uint64_t size_ = 0;
  bool restricted_ = false;
};

std::vector<Morphism> enumerate_isos(const World& world);

}  // namespace contrapunctus
