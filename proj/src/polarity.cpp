#include "contrapunctus/polarity.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "contrapunctus/errors.hpp"
#include "contrapunctus/notation.hpp"

namespace contrapunctus {

namespace {

// Beyond this many isos the filtered quasipolarity search is refused.
constexpr std::uint64_t kMaxIsoScan = std::uint64_t{1} << 26;
// Finite-set witness lists are |K|! long; refuse past 8! entries.
constexpr std::uint64_t kMaxFinSetWitnesses = 40320;
// Finite-set quasipolarities are perfect matchings; (n-1)!! for n <= 16.
constexpr std::uint32_t kMaxFinSetMatchingPoints = 16;
// Dichotomies of one quasipolarity are 2^(n/2) choices.
constexpr std::size_t kMaxPairChoices = 20;

void require_world(const World& w, const Morphism& p) {
  if (!(p.world() == w)) throw IncompatibleObjects("morphism belongs to a different world");
}

void require_half(const World& w, const SubSet& k) {
  if (!(k.carrier() == w.carrier())) throw IncompatibleObjects("subset of a different carrier");
  const std::size_t n = w.carrier().size();
  if (n % 2 != 0) {
    throw StructuralError("carrier of odd size " + std::to_string(n) + " has no dichotomies");
  }
  if (k.count() != n / 2) {
    throw StructuralError("K has " + std::to_string(k.count()) + " elements, expected " +
                          std::to_string(n / 2));
  }
}

std::uint64_t saturating_factorial(std::uint64_t m, std::uint64_t limit) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= m && f < limit; ++i) f *= i;
  return std::min(f, limit);
}

void fin_set_matchings(std::uint32_t n, std::vector<std::uint32_t>& table,
                       std::vector<bool>& used, const World& w, std::vector<Morphism>& out) {
  std::uint32_t i = 0;
  while (i < n && used[i]) ++i;
  if (i == n) {
    out.emplace_back(w, TableParams{table});
    return;
  }
  used[i] = true;
  for (std::uint32_t j = i + 1; j < n; ++j) {
    if (used[j]) continue;
    used[j] = true;
    table[i] = j;
    table[j] = i;
    fin_set_matchings(n, table, used, w, out);
    used[j] = false;
  }
  used[i] = false;
}

std::vector<Morphism> fin_set_swaps(const World& w, const SubSet& k) {
  const auto ks = k.elements();
  auto ds = complement(k).elements();
  if (saturating_factorial(ks.size(), kMaxFinSetWitnesses + 1) > kMaxFinSetWitnesses) {
    throw CapExceeded("listing " + std::to_string(ks.size()) +
                      "! finite-set quasipolarities exceeds the witness cap");
  }
  std::vector<Morphism> out;
  std::vector<std::uint32_t> table(w.carrier().size());
  do {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      table[ks[i]] = ds[i];
      table[ds[i]] = ks[i];
    }
    out.emplace_back(w, TableParams{table});
  } while (std::next_permutation(ds.begin(), ds.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Quasipolarities of a world, precomputed once for repeated K queries.
class QuasipolarityIndex {
 public:
  explicit QuasipolarityIndex(const World& w) : world_(w) {
    if (w.kind() != WorldKind::FinSet) qps_ = enumerate_quasipolarities(w);
  }

  std::uint64_t count(const SubSet& k, std::uint64_t limit) const {
    if (world_.kind() == WorldKind::FinSet) return saturating_factorial(k.count(), limit);
    const SubSet d = complement(k);
    std::uint64_t c = 0;
    for (const auto& p : qps_) {
      if (c >= limit) break;
      if (image(p.table(), k) == d) ++c;
    }
    return c;
  }

  std::vector<Morphism> list(const SubSet& k) const {
    if (world_.kind() == WorldKind::FinSet) return fin_set_swaps(world_, k);
    const SubSet d = complement(k);
    std::vector<Morphism> out;
    for (const auto& p : qps_) {
      if (image(p.table(), k) == d) out.push_back(p);
    }
    return out;
  }

 private:
  World world_;
  std::vector<Morphism> qps_;
};

/// Pairs {x, p(x)} of a fixed-point-free involution, smaller element first.
std::vector<std::pair<std::uint32_t, std::uint32_t>> involution_pairs(const MapTable& p) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t x = 0; x < p.table().size(); ++x) {
    if (x < p(x)) pairs.emplace_back(x, p(x));
  }
  return pairs;
}

SubSet choose_from_pairs(const Carrier& c,
                         const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                         std::uint64_t choice) {
  SubSet k(c);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    k.insert(((choice >> i) & 1U) ? pairs[i].second : pairs[i].first);
  }
  return k;
}

std::vector<std::vector<std::uint32_t>> orbit_generators(const World& w) {
  std::vector<std::vector<std::uint32_t>> gens;
  if (w.kind() == WorldKind::FinSet) {
    const std::uint32_t n = w.parameter();
    std::vector<std::uint32_t> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0U);
    if (n >= 2) std::swap(swap[0], swap[1]);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.push_back(std::move(swap));
    gens.push_back(std::move(cycle));
    return gens;
  }
  const IsoEnumerator isos(w);
  isos.for_each([&](const Morphism& g) {
    gens.emplace_back(g.table().table().begin(), g.table().table().end());
  });
  return gens;
}

}  // namespace

bool is_quasipolarity(const World& w, const Morphism& p) {
  require_world(w, p);
  if (!p.is_iso()) return false;
  if (!compose(p.table(), p.table()).is_identity()) return false;
  return fixed_point_free(p.table());
}

std::vector<Morphism> enumerate_quasipolarities(const World& w) {
  if (w.kind() == WorldKind::FinSet) {
    const std::uint32_t n = w.parameter();
    std::vector<Morphism> out;
    if (n % 2 != 0) return out;
    if (n > kMaxFinSetMatchingPoints) {
      throw CapExceeded("enumerating fixed-point-free involutions of " + std::to_string(n) +
                        " points");
    }
    std::vector<std::uint32_t> table(n);
    std::vector<bool> used(n, false);
    fin_set_matchings(n, table, used, w, out);
    return out;
  }
  const IsoEnumerator isos(w);
  if (isos.size() > kMaxIsoScan) throw CapExceeded("iso group too large to scan");
  using Chunk = std::vector<Morphism>;
  return parallel_reduce<Chunk>(
      isos.size(), worker_count(),
      [&](std::uint64_t begin, std::uint64_t end) {
        Chunk found;
        for (std::uint64_t i = begin; i < end; ++i) {
          Morphism g = isos.at(i);
          if (is_quasipolarity(w, g)) found.push_back(std::move(g));
        }
        return found;
      },
      [](Chunk a, Chunk b) {
        a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
        return a;
      });
}

bool is_dichotomy(const World& w, const Morphism& p, const SubSet& k) {
  if (!is_quasipolarity(w, p)) {
    throw PreconditionError(to_string(p) + " is not a quasipolarity of " + to_string(w));
  }
  if (!(k.carrier() == w.carrier())) throw IncompatibleObjects("subset of a different carrier");
  return image(p.table(), k) == complement(k);
}

std::vector<Morphism> quasipolarities_for(const World& w, const SubSet& k) {
  require_half(w, k);
  return QuasipolarityIndex(w).list(k);
}

std::uint64_t count_quasipolarities_for(const World& w, const SubSet& k, std::uint64_t limit) {
  require_half(w, k);
  return QuasipolarityIndex(w).count(k, limit);
}

bool is_strong(const World& w, const SubSet& k) { return count_quasipolarities_for(w, k, 2) == 1; }

Dichotomy make_dichotomy(const World& w, const SubSet& k) {
  auto witnesses = quasipolarities_for(w, k);
  return {w, k, complement(k), std::move(witnesses)};
}

SubSet orbit_representative(const World& w, const SubSet& k) {
  if (!(k.carrier() == w.carrier())) throw IncompatibleObjects("subset of a different carrier");
  const auto gens = orbit_generators(w);
  std::vector<std::uint64_t> seen{k.to_mask()};
  std::deque<std::uint64_t> queue{k.to_mask()};
  std::uint64_t best = k.to_mask();
  while (!queue.empty()) {
    const std::uint64_t m = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const std::uint64_t img = image_mask(g, m);
      if (std::find(seen.begin(), seen.end(), img) == seen.end()) {
        seen.push_back(img);
        queue.push_back(img);
        best = std::min(best, img);
      }
    }
  }
  return SubSet::from_mask(w.carrier(), best);
}

std::vector<DichotomyClass> classify_dichotomies(const World& w, std::size_t workers) {
  const std::size_t n = w.carrier().size();
  if (n % 2 != 0) {
    throw StructuralError("carrier of odd size " + std::to_string(n) + " has no dichotomies");
  }
  if (n > kClassifyMaxCarrier) {
    throw CapExceeded("classification is capped at carriers of " +
                      std::to_string(kClassifyMaxCarrier) + " elements");
  }
  const auto gens = orbit_generators(w);

  // Orbit closure in ascending mask order: the first unseen mask of each
  // orbit is its least element.
  struct Orbit {
    std::uint64_t rep;
    std::uint64_t size;
  };
  std::vector<Orbit> orbits;
  std::vector<bool> seen(std::size_t{1} << n, false);
  const std::uint64_t half = n / 2;
  const std::uint64_t last = ((std::uint64_t{1} << half) - 1) << (n - half);
  std::deque<std::uint64_t> queue;
  for (std::uint64_t m = (std::uint64_t{1} << half) - 1;;) {
    if (!seen[m]) {
      seen[m] = true;
      queue.push_back(m);
      std::uint64_t size = 0;
      while (!queue.empty()) {
        const std::uint64_t cur = queue.front();
        queue.pop_front();
        ++size;
        for (const auto& g : gens) {
          const std::uint64_t img = image_mask(g, cur);
          if (!seen[img]) {
            seen[img] = true;
            queue.push_back(img);
          }
        }
      }
      orbits.push_back({m, size});
    }
    if (m == last || half == 0) break;
    // Next mask with the same popcount (Gosper).
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }

  const QuasipolarityIndex index(w);
  using Chunk = std::vector<DichotomyClass>;
  return parallel_reduce<Chunk>(
      orbits.size(), workers,
      [&](std::uint64_t begin, std::uint64_t end) {
        Chunk out;
        for (std::uint64_t i = begin; i < end; ++i) {
          const SubSet k = SubSet::from_mask(w.carrier(), orbits[i].rep);
          auto witnesses = index.list(k);
          DichotomyClass cls{{w, k, complement(k), {}}, orbits[i].size, witnesses.size() == 1,
                             !witnesses.empty()};
          cls.representative.witnesses = std::move(witnesses);
          out.push_back(std::move(cls));
        }
        return out;
      },
      [](Chunk a, Chunk b) {
        a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
        return a;
      });
}

std::vector<QuasipolarityFinding> survey_quasipolarities(const World& w) {
  const auto qps = enumerate_quasipolarities(w);
  const QuasipolarityIndex index(w);
  using Chunk = std::vector<QuasipolarityFinding>;
  return parallel_reduce<Chunk>(
      qps.size(), worker_count(),
      [&](std::uint64_t begin, std::uint64_t end) {
        Chunk out;
        for (std::uint64_t i = begin; i < end; ++i) {
          const auto pairs = involution_pairs(qps[i].table());
          if (pairs.size() > kMaxPairChoices) {
            throw CapExceeded("too many dichotomies per quasipolarity to survey");
          }
          QuasipolarityFinding f{qps[i], 0, 0, std::nullopt, std::nullopt};
          const std::uint64_t choices = std::uint64_t{1} << pairs.size();
          for (std::uint64_t c = 0; c < choices; ++c) {
            const SubSet k = choose_from_pairs(w.carrier(), pairs, c);
            if (!(image(qps[i].table(), k) == complement(k))) continue;
            ++f.dichotomies;
            if (!f.first_dichotomy || k < *f.first_dichotomy) f.first_dichotomy = k;
            if (index.count(k, 2) == 1) {
              ++f.strong_dichotomies;
              if (!f.first_strong || k < *f.first_strong) f.first_strong = k;
            }
          }
          out.push_back(std::move(f));
        }
        return out;
      },
      [](Chunk a, Chunk b) {
        a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
        return a;
      });
}

std::optional<NonpolarEvidence> search_nonpolar_quasipolarity(const World& w, OpenQuestion q) {
  const auto qps = enumerate_quasipolarities(w);
  const QuasipolarityIndex index(w);
  for (const auto& p : qps) {
    const auto pairs = involution_pairs(p.table());
    if (pairs.size() > kMaxPairChoices) throw CapExceeded("too many dichotomies to search");
    const std::uint64_t choices = std::uint64_t{1} << pairs.size();
    bool found = false;
    for (std::uint64_t c = 0; c < choices && !found; ++c) {
      const SubSet k = choose_from_pairs(w.carrier(), pairs, c);
      if (!(image(p.table(), k) == complement(k))) continue;
      if (q == OpenQuestion::Existence) {
        found = true;
      } else {
        found = index.count(k, 2) == 1;
      }
    }
    if (!found) {
      std::string evidence =
          q == OpenQuestion::Existence
              ? "no K among " + std::to_string(choices) + " candidates satisfies p(K) = complement K"
              : "each of the " + std::to_string(choices) +
                    " dichotomies of p admits at least two quasipolarities";
      return NonpolarEvidence{p, std::move(evidence)};
    }
  }
  return std::nullopt;
}

}  // namespace contrapunctus
