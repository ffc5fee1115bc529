#include "contrapunctus/lattice.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "contrapunctus/errors.hpp"

namespace contrapunctus {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

void require_same(const Carrier& a, const Carrier& b) {
  if (!(a == b)) {
    throw IncompatibleObjects("subobjects of different carriers (sizes " +
                              std::to_string(a.size()) + " and " +
                              std::to_string(b.size()) + ")");
  }
}

void check_size(std::size_t n) {
  if (n == 0) throw StructuralError("carrier must have at least one element");
  if (n > kMaxCarrierSize) {
    throw CapExceeded("carrier of " + std::to_string(n) + " elements exceeds cap " +
                      std::to_string(kMaxCarrierSize));
  }
}

}  // namespace

Carrier::Carrier(std::size_t size, Codec codec, Codec base_codec, std::size_t base_size,
                 unsigned set_bits)
    : size_(size),
      codec_(codec),
      base_codec_(base_codec),
      base_size_(base_size),
      set_bits_(set_bits) {
  check_size(size_);
}

Carrier Carrier::residues(std::size_t n) { return {n, Codec::Residue, Codec::Residue, n, 0}; }

Carrier Carrier::points(std::size_t n) { return {n, Codec::Point, Codec::Point, n, 0}; }

Carrier Carrier::power_set(unsigned bits) {
  if (bits > 16) throw CapExceeded("power set of more than 16 elements exceeds carrier cap");
  const std::size_t n = std::size_t{1} << bits;
  return {n, Codec::Bitmask, Codec::Bitmask, n, bits};
}

Carrier Carrier::dual(const Carrier& base) {
  if (base.codec() == Codec::DualPair) throw UnsupportedWorld("nested dual carriers");
  const std::size_t n = base.size() * base.size();
  check_size(n);
  return {n, Codec::DualPair, base.codec(), base.size(), base.set_bits()};
}

// ---------------------------------------------------------------------------

SubSet::SubSet(const Carrier& carrier)
    : carrier_(carrier), words_(word_count(carrier.size()), 0) {}

SubSet SubSet::full(const Carrier& carrier) {
  SubSet s(carrier);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (const auto tail = carrier.size() % kWordBits; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

SubSet SubSet::of(const Carrier& carrier, std::span<const std::uint32_t> indices) {
  SubSet s(carrier);
  for (auto i : indices) s.insert(i);
  return s;
}

SubSet SubSet::of(const Carrier& carrier, std::initializer_list<std::uint32_t> indices) {
  return of(carrier, std::span<const std::uint32_t>(indices.begin(), indices.size()));
}

SubSet SubSet::from_mask(const Carrier& carrier, std::uint64_t mask) {
  if (carrier.size() > kWordBits) throw StructuralError("mask form needs a carrier of <= 64");
  if (carrier.size() < kWordBits && (mask >> carrier.size()) != 0) {
    throw StructuralError("mask has bits outside the carrier");
  }
  SubSet s(carrier);
  s.words_[0] = mask;
  return s;
}

bool SubSet::contains(std::uint32_t index) const {
  if (index >= carrier_.size()) return false;
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
}

void SubSet::insert(std::uint32_t index) {
  if (index >= carrier_.size()) {
    throw StructuralError("element " + std::to_string(index) + " outside carrier of size " +
                          std::to_string(carrier_.size()));
  }
  words_[index / kWordBits] |= std::uint64_t{1} << (index % kWordBits);
}

void SubSet::erase(std::uint32_t index) {
  if (index >= carrier_.size()) return;
  words_[index / kWordBits] &= ~(std::uint64_t{1} << (index % kWordBits));
}

std::size_t SubSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool SubSet::is_empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<std::uint32_t> SubSet::elements() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    for (auto w = words_[wi]; w != 0; w &= w - 1) {
      out.push_back(static_cast<std::uint32_t>(wi * kWordBits +
                                               static_cast<std::size_t>(std::countr_zero(w))));
    }
  }
  return out;
}

std::uint64_t SubSet::to_mask() const {
  if (carrier_.size() > kWordBits) throw StructuralError("mask form needs a carrier of <= 64");
  return words_[0];
}

std::strong_ordering operator<=>(const SubSet& a, const SubSet& b) {
  require_same(a.carrier_, b.carrier_);
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

SubSet meet(const SubSet& a, const SubSet& b) {
  require_same(a.carrier_, b.carrier_);
  SubSet r = a;
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
  return r;
}

SubSet join(const SubSet& a, const SubSet& b) {
  require_same(a.carrier_, b.carrier_);
  SubSet r = a;
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] |= b.words_[i];
  return r;
}

SubSet symmetric_difference(const SubSet& a, const SubSet& b) {
  require_same(a.carrier_, b.carrier_);
  SubSet r = a;
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] ^= b.words_[i];
  return r;
}

SubSet complement(const SubSet& a) {
  SubSet r = SubSet::full(a.carrier_);
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= ~a.words_[i];
  return r;
}

bool is_subset(const SubSet& a, const SubSet& b) {
  require_same(a.carrier_, b.carrier_);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if ((a.words_[i] & ~b.words_[i]) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

MapTable::MapTable(const Carrier& carrier, std::vector<std::uint32_t> table)
    : carrier_(carrier), table_(std::move(table)) {
  if (table_.size() != carrier_.size()) {
    throw StructuralError("map table has " + std::to_string(table_.size()) +
                          " entries for a carrier of " + std::to_string(carrier_.size()));
  }
  for (auto v : table_) {
    if (v >= carrier_.size()) {
      throw StructuralError("map table entry " + std::to_string(v) + " out of range");
    }
  }
}

MapTable MapTable::identity(const Carrier& carrier) {
  std::vector<std::uint32_t> t(carrier.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint32_t>(i);
  return {carrier, std::move(t)};
}

bool MapTable::is_identity() const noexcept {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] != i) return false;
  }
  return true;
}

bool MapTable::is_bijective() const {
  std::vector<bool> hit(table_.size(), false);
  for (auto v : table_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

SubSet image(const MapTable& f, const SubSet& m) {
  require_same(f.carrier(), m.carrier());
  SubSet r(m.carrier());
  for (auto x : m.elements()) r.insert(f(x));
  return r;
}

SubSet preimage(const MapTable& f, const SubSet& m) {
  require_same(f.carrier(), m.carrier());
  SubSet r(m.carrier());
  const auto t = f.table();
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (m.contains(t[x])) r.insert(static_cast<std::uint32_t>(x));
  }
  return r;
}

MapTable compose(const MapTable& f, const MapTable& g) {
  require_same(f.carrier(), g.carrier());
  std::vector<std::uint32_t> t(g.table().begin(), g.table().end());
  for (auto& v : t) v = f(v);
  return {f.carrier(), std::move(t)};
}

MapTable inverse(const MapTable& f) {
  if (!f.is_bijective()) throw PreconditionError("inverse of a non-bijective map");
  std::vector<std::uint32_t> t(f.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[f(static_cast<std::uint32_t>(x))] = static_cast<std::uint32_t>(x);
  return {f.carrier(), std::move(t)};
}

MapTable power(const MapTable& f, std::size_t k) {
  MapTable r = MapTable::identity(f.carrier());
  for (std::size_t i = 0; i < k; ++i) r = compose(f, r);
  return r;
}

bool fixed_point_free(const MapTable& f) {
  const auto t = f.table();
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t[x] == x) return false;
  }
  return true;
}

std::uint64_t image_mask(std::span<const std::uint32_t> table, std::uint64_t mask) {
  std::uint64_t r = 0;
  for (; mask != 0; mask &= mask - 1) {
    r |= std::uint64_t{1} << table[static_cast<std::size_t>(std::countr_zero(mask))];
  }
  return r;
}

}  // namespace contrapunctus
