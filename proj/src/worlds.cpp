#include "contrapunctus/worlds.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "contrapunctus/errors.hpp"

namespace contrapunctus {

namespace {

constexpr std::uint32_t kMaxFactorialIndex = 20;  // 20! < 2^63

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<std::uint32_t> iso_multipliers(const World& w) {
  const Ring r = w.ring();
  if (w.kind() == WorldKind::SymAffine) {
    std::vector<std::uint32_t> m{r.one(), r.neg(r.one())};
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
  }
  return r.units();
}

MapTable build_table(const World& w, const MorphismParams& params) {
  const Carrier& c = w.carrier();
  std::vector<std::uint32_t> t(c.size());
  if (const auto* p = std::get_if<AffineParams>(&params)) {
    const Ring r = w.ring();
    for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = r.add(r.mul(p->a, x), p->u);
  } else if (const auto* d = std::get_if<DualParams>(&params)) {
    const Ring r = w.ring();
    const std::uint32_t n = r.size();
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t cantus = r.add(r.mul(d->a, x), d->u);
      const std::uint32_t shear = r.add(r.mul(d->b, x), d->v);
      for (std::uint32_t y = 0; y < n; ++y) {
        t[x * n + y] = cantus * n + r.add(r.mul(d->a, y), shear);
      }
    }
  } else {
    t = std::get<TableParams>(params).table;
  }
  return {c, std::move(t)};
}

void check_admissible(const World& w, const MorphismParams& params) {
  const auto fail = [](const std::string& why) { throw AdmissibilityError(why); };
  switch (w.kind()) {
    case WorldKind::Affine:
    case WorldKind::SymAffine:
    case WorldKind::PowerSet: {
      const auto* p = std::get_if<AffineParams>(&params);
      if (p == nullptr) fail("world expects affine parameters");
      const Ring r = w.ring();
      if (p->u >= r.size() || p->a >= r.size()) fail("affine parameter out of range");
      if (w.kind() == WorldKind::SymAffine && p->a != r.one() && p->a != r.neg(r.one())) {
        fail("multiplier " + std::to_string(p->a) + " is not +-1");
      }
      break;
    }
    case WorldKind::Dual: {
      const auto* d = std::get_if<DualParams>(&params);
      if (d == nullptr) fail("world expects dual parameters");
      const std::uint32_t n = w.ring().size();
      if (d->u >= n || d->v >= n || d->a >= n || d->b >= n) fail("dual parameter out of range");
      break;
    }
    case WorldKind::FinSet: {
      const auto* t = std::get_if<TableParams>(&params);
      if (t == nullptr) fail("world expects a function table");
      if (t->table.size() != w.carrier().size()) {
        fail("table has " + std::to_string(t->table.size()) + " entries, expected " +
             std::to_string(w.carrier().size()));
      }
      for (auto v : t->table) {
        if (v >= w.carrier().size()) fail("table entry " + std::to_string(v) + " out of range");
      }
      break;
    }
  }
}

void require_same_world(const Morphism& g, const Morphism& h) {
  if (!(g.world() == h.world())) throw IncompatibleObjects("morphisms of different worlds");
}

}  // namespace

// ---------------------------------------------------------------------------

Ring Ring::residues(std::uint32_t n) {
  if (n == 0 || n > kMaxCarrierSize) throw StructuralError("Z_n needs 1 <= n <= 65536");
  return {false, n, 0};
}

Ring Ring::power_set(unsigned bits) {
  if (bits > 16) throw CapExceeded("power set of more than 16 elements");
  return {true, std::uint32_t{1} << bits, bits};
}

bool Ring::is_unit(std::uint32_t x) const noexcept {
  if (boolean_) return x == one();
  return std::gcd(x, size_) == 1;
}

std::uint32_t Ring::inv(std::uint32_t x) const {
  if (!is_unit(x)) throw PreconditionError(std::to_string(x) + " is not a unit");
  if (boolean_) return x;
  // Extended Euclid on (x, n).
  std::int64_t r0 = size_, r1 = x, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  const std::int64_t n = size_;
  return static_cast<std::uint32_t>(((t0 % n) + n) % n);
}

std::vector<std::uint32_t> Ring::units() const {
  if (boolean_) return {one()};
  std::vector<std::uint32_t> u;
  for (std::uint32_t x = 0; x < size_; ++x) {
    if (is_unit(x)) u.push_back(x);
  }
  return u;
}

// ---------------------------------------------------------------------------

World World::affine(std::uint32_t n) {
  return {WorldKind::Affine, n, WorldKind::Affine, Carrier::residues(n)};
}

World World::sym_affine(std::uint32_t n) {
  return {WorldKind::SymAffine, n, WorldKind::SymAffine, Carrier::residues(n)};
}

World World::fin_set(std::uint32_t n) {
  return {WorldKind::FinSet, n, WorldKind::FinSet, Carrier::points(n)};
}

World World::power_set(unsigned bits) {
  return {WorldKind::PowerSet, bits, WorldKind::PowerSet, Carrier::power_set(bits)};
}

std::optional<World> World::base() const {
  if (kind_ != WorldKind::Dual) return std::nullopt;
  return base_kind_ == WorldKind::Affine ? affine(parameter_) : power_set(parameter_);
}

Ring World::ring() const {
  const WorldKind k = kind_ == WorldKind::Dual ? base_kind_ : kind_;
  switch (k) {
    case WorldKind::Affine:
    case WorldKind::SymAffine:
      return Ring::residues(parameter_);
    case WorldKind::PowerSet:
      return Ring::power_set(parameter_);
    default:
      throw UnsupportedWorld("finite-set world has no ring structure");
  }
}

std::optional<std::uint64_t> World::iso_group_size() const {
  switch (kind_) {
    case WorldKind::FinSet:
      if (parameter_ > kMaxFactorialIndex) return std::nullopt;
      return factorial(parameter_);
    case WorldKind::Dual: {
      const std::uint64_t n = ring().size();
      return n * n * n * ring().units().size();
    }
    default: {
      const std::uint64_t n = ring().size();
      return n * iso_multipliers(*this).size();
    }
  }
}

World dual_lift(const World& base) {
  if (base.kind() != WorldKind::Affine && base.kind() != WorldKind::PowerSet) {
    throw UnsupportedWorld("dual lift needs an affine or power-set base world");
  }
  return {WorldKind::Dual, base.parameter(), base.kind(), Carrier::dual(base.carrier())};
}

std::uint32_t encode(const Carrier& dual_carrier, DualElement e) {
  const auto n = static_cast<std::uint32_t>(dual_carrier.base_size());
  if (e.cantus >= n || e.interval >= n) throw StructuralError("dual element out of range");
  return e.cantus * n + e.interval;
}

DualElement decode(const Carrier& dual_carrier, std::uint32_t index) {
  const auto n = static_cast<std::uint32_t>(dual_carrier.base_size());
  return {index / n, index % n};
}

// ---------------------------------------------------------------------------

Morphism::Morphism(const World& world, MorphismParams params)
    : world_(world),
      params_((check_admissible(world, params), std::move(params))),
      table_(build_table(world_, params_)) {}

bool Morphism::is_iso() const {
  if (const auto* p = std::get_if<AffineParams>(&params_)) return world_.ring().is_unit(p->a);
  if (const auto* d = std::get_if<DualParams>(&params_)) return world_.ring().is_unit(d->a);
  return table_.is_bijective();
}

Morphism make_iso(const World& world, MorphismParams params) {
  Morphism m(world, std::move(params));
  if (!m.is_iso()) throw AdmissibilityError("morphism is not an isomorphism of its world");
  return m;
}

const MapTable& realize(const Morphism& m) { return m.table(); }

Morphism identity(const World& world) {
  switch (world.kind()) {
    case WorldKind::FinSet: {
      const MapTable id = MapTable::identity(world.carrier());
      return {world, TableParams{{id.table().begin(), id.table().end()}}};
    }
    case WorldKind::Dual:
      return {world, DualParams{0, 0, world.ring().one(), 0}};
    default:
      return {world, AffineParams{0, world.ring().one()}};
  }
}

Morphism compose(const Morphism& g, const Morphism& h) {
  require_same_world(g, h);
  const World& w = g.world();
  if (const auto* p = std::get_if<AffineParams>(&g.params())) {
    const auto& q = std::get<AffineParams>(h.params());
    const Ring r = w.ring();
    return {w, AffineParams{r.add(r.mul(p->a, q.u), p->u), r.mul(p->a, q.a)}};
  }
  if (const auto* p = std::get_if<DualParams>(&g.params())) {
    const auto& q = std::get<DualParams>(h.params());
    const Ring r = w.ring();
    return {w, DualParams{
                   r.add(r.mul(p->a, q.u), p->u),
                   r.add(r.add(r.mul(p->b, q.u), r.mul(p->a, q.v)), p->v),
                   r.mul(p->a, q.a),
                   r.add(r.mul(p->a, q.b), r.mul(p->b, q.a)),
               }};
  }
  const MapTable t = compose(g.table(), h.table());
  return {w, TableParams{{t.table().begin(), t.table().end()}}};
}

Morphism inverse(const Morphism& g) {
  if (!g.is_iso()) throw PreconditionError("inverse of a non-isomorphism");
  const World& w = g.world();
  if (const auto* p = std::get_if<AffineParams>(&g.params())) {
    const Ring r = w.ring();
    const std::uint32_t ai = r.inv(p->a);
    return {w, AffineParams{r.neg(r.mul(ai, p->u)), ai}};
  }
  if (const auto* p = std::get_if<DualParams>(&g.params())) {
    const Ring r = w.ring();
    const std::uint32_t ai = r.inv(p->a);
    const std::uint32_t bi = r.neg(r.mul(r.mul(ai, ai), p->b));
    const std::uint32_t ui = r.mul(ai, p->u);
    const std::uint32_t vi = r.add(r.mul(bi, p->u), r.mul(ai, p->v));
    return {w, DualParams{r.neg(ui), r.neg(vi), ai, bi}};
  }
  const MapTable t = inverse(g.table());
  return {w, TableParams{{t.table().begin(), t.table().end()}}};
}

Morphism cantus_translation(const World& dual, std::uint32_t x) {
  if (dual.kind() != WorldKind::Dual) throw UnsupportedWorld("cantus translation needs a dual world");
  return {dual, DualParams{x, 0, dual.ring().one(), 0}};
}

// ---------------------------------------------------------------------------

IsoEnumerator::IsoEnumerator(const World& world) : world_(world) {
  switch (world.kind()) {
    case WorldKind::FinSet:
      if (world.parameter() > kMaxFactorialIndex) {
        throw CapExceeded("permutation group of " + std::to_string(world.parameter()) +
                          " points is too large to enumerate");
      }
      size_ = factorial(world.parameter());
      break;
    case WorldKind::PowerSet:
      units_ = {world.ring().one()};
      size_ = world.ring().size();
      break;
    case WorldKind::Dual: {
      units_ = world.ring().units();
      const std::uint64_t n = world.ring().size();
      size_ = n * n * units_.size() * n;
      break;
    }
    default:
      units_ = iso_multipliers(world);
      size_ = std::uint64_t{world.ring().size()} * units_.size();
      break;
  }
}

IsoEnumerator IsoEnumerator::restricted_family(const World& dual) {
  if (dual.kind() != WorldKind::Dual) {
    throw UnsupportedWorld("the restricted symmetry family needs a dual world");
  }
  IsoEnumerator e(dual);
  e.restricted_ = true;
  const std::uint64_t n = dual.ring().size();
  e.size_ = n * n;
  return e;
}

Morphism IsoEnumerator::at(std::uint64_t index) const {
  if (index >= size_) throw PreconditionError("iso index out of range");
  switch (world_.kind()) {
    case WorldKind::FinSet: {
      // Lehmer-code unranking gives lexicographic order of tables.
      const std::uint32_t n = world_.parameter();
      std::vector<std::uint32_t> pool(n);
      std::iota(pool.begin(), pool.end(), 0U);
      std::vector<std::uint32_t> table;
      table.reserve(n);
      for (std::uint32_t i = n; i > 0; --i) {
        const std::uint64_t f = factorial(i - 1);
        const auto pick = static_cast<std::size_t>(index / f);
        index %= f;
        table.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
      }
      return {world_, TableParams{std::move(table)}};
    }
    case WorldKind::Dual: {
      const std::uint32_t n = world_.ring().size();
      if (restricted_) {
        return {world_, DualParams{0, static_cast<std::uint32_t>(index / n), world_.ring().one(),
                                   static_cast<std::uint32_t>(index % n)}};
      }
      const auto b = static_cast<std::uint32_t>(index % n);
      index /= n;
      const std::uint32_t a = units_[index % units_.size()];
      index /= units_.size();
      const auto v = static_cast<std::uint32_t>(index % n);
      const auto u = static_cast<std::uint32_t>(index / n);
      return {world_, DualParams{u, v, a, b}};
    }
    default: {
      const auto u = static_cast<std::uint32_t>(index / units_.size());
      return {world_, AffineParams{u, units_[index % units_.size()]}};
    }
  }
}

std::vector<Morphism> enumerate_isos(const World& world) {
  const IsoEnumerator isos(world);
  std::vector<Morphism> out;
  out.reserve(isos.size());
  isos.for_each([&](Morphism m) { out.push_back(std::move(m)); });
  return out;
}

}  // namespace contrapunctus
