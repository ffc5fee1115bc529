#pragma once

// Finite carriers, subsets as bitmasks, and endomap tables.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace contrapunctus {

/// Largest carrier the engine accepts.
inline constexpr std::size_t kMaxCarrierSize = 65536;

/// How carrier indices map to semantic elements.
enum class Codec : std::uint8_t {
  Residue,   // index i is the residue class i mod n
  Point,     // plain finite set {0..n-1}
  Bitmask,   // index i is the subset of S with bit pattern i
  DualPair,  // index = x * base_size + y encodes x + eps*y
};

class Carrier {
 public:
  static Carrier residues(std::size_t n);
  static Carrier points(std::size_t n);
  /// Carrier 2^S for |S| = bits.
  static Carrier power_set(unsigned bits);
  /// Carrier base x base for the dual-number lift.
  static Carrier dual(const Carrier& base);

  std::size_t size() const noexcept { return size_; }
  Codec codec() const noexcept { return codec_; }
  /// For DualPair carriers: the codec and size of each component.
  Codec base_codec() const noexcept { return base_codec_; }
  std::size_t base_size() const noexcept { return base_size_; }
  /// For Bitmask carriers (or DualPair over one): |S|.
  unsigned set_bits() const noexcept { return set_bits_; }

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  Carrier(std::size_t size, Codec codec, Codec base_codec, std::size_t base_size,
          unsigned set_bits);

  std::size_t size_;
  Codec codec_;
  Codec base_codec_;
  std::size_t base_size_;
  unsigned set_bits_;
};

/// A subobject of a finite carrier.
class SubSet {
 public:
  explicit SubSet(const Carrier& carrier);

  static SubSet empty(const Carrier& carrier) { return SubSet(carrier); }
  static SubSet full(const Carrier& carrier);
  static SubSet of(const Carrier& carrier, std::span<const std::uint32_t> indices);
  static SubSet of(const Carrier& carrier, std::initializer_list<std::uint32_t> indices);
  /// Only for carriers of at most 64 elements.
  static SubSet from_mask(const Carrier& carrier, std::uint64_t mask);

  const Carrier& carrier() const noexcept { return carrier_; }
  bool contains(std::uint32_t index) const;
  void insert(std::uint32_t index);
  void erase(std::uint32_t index);

  std::size_t count() const noexcept;
  bool is_empty() const noexcept;
  std::vector<std::uint32_t> elements() const;
  /// Only for carriers of at most 64 elements.
  std::uint64_t to_mask() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const SubSet& a, const SubSet& b) {
    return a.carrier_ == b.carrier_ && a.words_ == b.words_;
  }
  /// Orders by the bitmask read as an unsigned integer (bit i = element i).
  friend std::strong_ordering operator<=>(const SubSet& a, const SubSet& b);

 private:
  friend SubSet meet(const SubSet&, const SubSet&);
  friend SubSet join(const SubSet&, const SubSet&);
  friend SubSet complement(const SubSet&);
  friend SubSet symmetric_difference(const SubSet&, const SubSet&);
  friend bool is_subset(const SubSet&, const SubSet&);

  Carrier carrier_;
  std::vector<std::uint64_t> words_;
};

/// A total function on a carrier, given by its value table.
class MapTable {
 public:
  MapTable(const Carrier& carrier, std::vector<std::uint32_t> table);
  static MapTable identity(const Carrier& carrier);

  const Carrier& carrier() const noexcept { return carrier_; }
  std::span<const std::uint32_t> table() const noexcept { return table_; }
  std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }

  bool is_identity() const noexcept;
  bool is_bijective() const;

  friend bool operator==(const MapTable&, const MapTable&) = default;

 private:
  Carrier carrier_;
  std::vector<std::uint32_t> table_;
};

SubSet meet(const SubSet& a, const SubSet& b);
SubSet join(const SubSet& a, const SubSet& b);
SubSet complement(const SubSet& a);
SubSet symmetric_difference(const SubSet& a, const SubSet& b);
/// a <= b in the subobject order.
bool is_subset(const SubSet& a, const SubSet& b);

/// { f(x) : x in m }.
SubSet image(const MapTable& f, const SubSet& m);
/// { x : f(x) in m }.
SubSet preimage(const MapTable& f, const SubSet& m);

/// f after g.
MapTable compose(const MapTable& f, const MapTable& g);
MapTable inverse(const MapTable& f);
/// f composed with itself k times (k = 0 gives the identity).
MapTable power(const MapTable& f, std::size_t k);

/// The fixed-point set of f is empty, i.e. the equalizer of (f, id) is the
/// initial object.
bool fixed_point_free(const MapTable& f);

/// Image of a <=64-element mask; the fast path used by exhaustive searches.
std::uint64_t image_mask(std::span<const std::uint32_t> table, std::uint64_t mask);

}  // namespace contrapunctus
