#include "contrapunctus/closure.hpp"

#include <random>

#include "contrapunctus/errors.hpp"

namespace contrapunctus {

namespace {

constexpr std::size_t kExhaustiveCarrier = 12;

bool is_involution(const MapTable& f) { return compose(f, f).is_identity(); }

SubSet random_subset(const Carrier& c, std::mt19937_64& rng) {
  SubSet s(c);
  for (std::uint32_t x = 0; x < c.size(); ++x) {
    if (rng() & 1U) s.insert(x);
  }
  return s;
}

}  // namespace

ClosureOperator::ClosureOperator(MapTable f, ClosureMode mode) : f_(std::move(f)), mode_(mode) {
  if (mode_ == ClosureMode::Involutive && !is_involution(f_)) {
    throw PreconditionError("involutive closure needs f o f = id");
  }
}

SubSet ClosureOperator::operator()(const SubSet& m) const {
  switch (mode_) {
    case ClosureMode::Involutive:
    case ClosureMode::SingleStep:
      return close_single_step(f_, m);
    case ClosureMode::Iterated:
      break;
  }
  return close_iterated(f_, m);
}

SubSet close_involutive(const MapTable& f, const SubSet& m) {
  if (!is_involution(f)) throw PreconditionError("involutive closure needs f o f = id");
  return join(m, image(f, m));
}

SubSet close_single_step(const MapTable& f, const SubSet& m) { return join(m, image(f, m)); }

SubSet close_iterated(const MapTable& f, const SubSet& m) {
  // Strictly grows until it stabilizes, so at most |carrier| rounds.
  SubSet cur = m;
  while (true) {
    SubSet next = close_single_step(f, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

SubSet power_join(const MapTable& f, const SubSet& m, std::size_t n) {
  SubSet acc(m.carrier());
  MapTable fk = MapTable::identity(f.carrier());
  for (std::size_t k = 0; k < n; ++k) {
    acc = join(acc, image(fk, m));
    fk = compose(f, fk);
  }
  return acc;
}

std::optional<std::size_t> permutation_order(const MapTable& f) {
  if (!f.is_bijective()) return std::nullopt;
  MapTable fk = f;
  for (std::size_t n = 1;; ++n) {
    if (fk.is_identity()) return n;
    fk = compose(f, fk);
  }
}

KuratowskiReport verify_kuratowski(const ClosureOperator& op, std::uint64_t trials,
                                   std::uint64_t seed) {
  const Carrier& c = op.map().carrier();
  KuratowskiReport report;
  bool seen_extensive = false, seen_idempotent = false, seen_joins = false;

  const SubSet bottom(c);
  if (!op(bottom).is_empty()) report.violations.push_back({"bottom", bottom, std::nullopt});

  const auto check_single = [&](const SubSet& m, const SubSet& cl) {
    ++report.subsets_checked;
    if (!seen_extensive && !is_subset(m, cl)) {
      seen_extensive = true;
      report.violations.push_back({"extensive", m, std::nullopt});
    }
    if (!seen_idempotent && !(op(cl) == cl)) {
      seen_idempotent = true;
      report.violations.push_back({"idempotent", m, std::nullopt});
    }
  };

  if (c.size() <= kExhaustiveCarrier) {
    report.exhaustive = true;
    const std::uint64_t count = std::uint64_t{1} << c.size();
    std::vector<std::uint64_t> closed(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const SubSet m = SubSet::from_mask(c, mask);
      const SubSet cl = op(m);
      closed[mask] = cl.to_mask();
      check_single(m, cl);
    }
    for (std::uint64_t a = 0; a < count && !seen_joins; ++a) {
      for (std::uint64_t b = 0; b < count; ++b) {
        ++report.pairs_checked;
        if (closed[a | b] != (closed[a] | closed[b])) {
          seen_joins = true;
          report.violations.push_back(
              {"joins", SubSet::from_mask(c, a), SubSet::from_mask(c, b)});
          break;
        }
      }
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const SubSet m = random_subset(c, rng);
    const SubSet m2 = random_subset(c, rng);
    const SubSet cl = op(m);
    check_single(m, cl);
    ++report.pairs_checked;
    if (!seen_joins && !(op(join(m, m2)) == join(cl, op(m2)))) {
      seen_joins = true;
      report.violations.push_back({"joins", m, m2});
    }
  }
  return report;
}

}  // namespace contrapunctus
