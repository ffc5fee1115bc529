#include "contrapunctus/counterpoint.hpp"

#include "contrapunctus/errors.hpp"
#include "contrapunctus/notation.hpp"

namespace contrapunctus {

namespace {

SubSet lift_fiberwise(const World& dual, const SubSet& base_set) {
  SubSet out(dual.carrier());
  const auto n = static_cast<std::uint32_t>(dual.carrier().base_size());
  for (std::uint32_t x = 0; x < n; ++x) {
    for (auto k : base_set.elements()) out.insert(encode(dual.carrier(), {x, k}));
  }
  return out;
}

void require_dual_iso(const ContrapuntalContext& ctx, const Morphism& g) {
  if (!(g.world() == ctx.dual)) throw IncompatibleObjects("morphism is not in the dual world");
  if (!g.is_iso()) throw PreconditionError(to_string(g) + " is not an isomorphism");
}

bool commutes(std::span<const std::uint32_t> g, std::span<const std::uint32_t> p) {
  for (std::size_t z = 0; z < g.size(); ++z) {
    if (g[p[z]] != p[g[z]]) return false;
  }
  return true;
}

}  // namespace

ContrapuntalContext make_context(const World& base, const SubSet& k) {
  const auto witnesses = quasipolarities_for(base, k);
  if (witnesses.size() != 1) {
    std::vector<std::string> names;
    for (const auto& w : witnesses) names.push_back(to_string(w));
    throw NonStrongDichotomy("dichotomy is not strong in " + to_string(base) + " (" +
                                 std::to_string(witnesses.size()) + " quasipolarities)",
                             std::move(names));
  }
  return make_context(base, k, witnesses.front());
}

ContrapuntalContext make_context(const World& base, const SubSet& k, const Morphism& polarity) {
  const World dual = dual_lift(base);
  if (!is_dichotomy(base, polarity, k)) {
    throw PreconditionError(to_string(polarity) + " does not map K onto its complement");
  }
  const auto& p = std::get<AffineParams>(polarity.params());
  const SubSet d = complement(k);
  return ContrapuntalContext{
      base,
      k,
      d,
      polarity,
      dual,
      lift_fiberwise(dual, k),
      lift_fiberwise(dual, d),
      Morphism(dual, DualParams{0, p.u, p.a, 0}),
  };
}

Morphism polarity_at(const ContrapuntalContext& ctx, std::uint32_t cantus) {
  if (cantus == 0) return ctx.dual_polarity;
  const Morphism t = cantus_translation(ctx.dual, cantus);
  return compose(compose(t, ctx.dual_polarity), inverse(t));
}

Consonance Consonance::point(const ContrapuntalContext& ctx, DualElement xi) {
  if (!ctx.consonances.contains(xi.interval)) {
    throw PreconditionError("interval " + format_element(ctx.base, xi.interval) +
                            " is not consonant");
  }
  return {SubSet::of(ctx.dual.carrier(), {encode(ctx.dual.carrier(), xi)}), xi.cantus, false};
}

Consonance Consonance::generalized_from(const ContrapuntalContext& ctx, const SubSet& image) {
  if (!(image.carrier() == ctx.dual.carrier())) {
    throw IncompatibleObjects("consonance image is not a subset of the dual carrier");
  }
  if (image.is_empty()) throw PreconditionError("generalized consonance must be nonempty");
  if (!is_subset(image, ctx.consonances_eps)) {
    throw PreconditionError("generalized consonance contains a dissonant dyad");
  }
  const auto elems = image.elements();
  const std::uint32_t cantus = decode(ctx.dual.carrier(), elems.front()).cantus;
  for (auto e : elems) {
    if (decode(ctx.dual.carrier(), e).cantus != cantus) {
      throw PreconditionError("generalized consonance must lie over a single cantus note");
    }
  }
  return {image, cantus, true};
}

SubSet deformed_consonances(const ContrapuntalContext& ctx, const Morphism& g) {
  require_dual_iso(ctx, g);
  return image(g.table(), ctx.consonances_eps);
}

bool is_deformed_dissonance(const ContrapuntalContext& ctx, const Morphism& g,
                            const Consonance& xi) {
  require_dual_iso(ctx, g);
  return is_subset(xi.image, image(g.table(), ctx.dissonances_eps));
}

bool commutes_with_polarity(const ContrapuntalContext& ctx, const Morphism& g,
                            std::uint32_t cantus) {
  require_dual_iso(ctx, g);
  return commutes(g.table().table(), polarity_at(ctx, cantus).table().table());
}

SymmetryReport counterpoint_symmetries(const ContrapuntalContext& ctx, const Consonance& xi,
                                       const SymmetryOptions& options) {
  const IsoEnumerator isos = options.restricted_family
                                 ? IsoEnumerator::restricted_family(ctx.dual)
                                 : IsoEnumerator(ctx.dual);
  const Morphism polarity = polarity_at(ctx, xi.cantus);
  const auto p = polarity.table().table();

  struct Best {
    std::size_t max_meet = 0;
    std::vector<std::uint64_t> indices;
    std::uint64_t candidates = 0;
  };
  const Best best = parallel_reduce<Best>(
      isos.size(), options.workers,
      [&](std::uint64_t begin, std::uint64_t end) {
        Best local;
        for (std::uint64_t i = begin; i < end; ++i) {
          const Morphism g = isos.at(i);
          if (!commutes(g.table().table(), p)) continue;
          if (!is_subset(xi.image, image(g.table(), ctx.dissonances_eps))) continue;
          ++local.candidates;
          const std::size_t m = meet(image(g.table(), ctx.consonances_eps), ctx.consonances_eps).count();
          if (local.indices.empty() || m > local.max_meet) {
            local.max_meet = m;
            local.indices.assign(1, i);
          } else if (m == local.max_meet) {
            local.indices.push_back(i);
          }
        }
        return local;
      },
      [](Best a, Best b) {
        Best r;
        r.candidates = a.candidates + b.candidates;
        if (b.indices.empty() || (!a.indices.empty() && a.max_meet > b.max_meet)) {
          r.max_meet = a.max_meet;
          r.indices = std::move(a.indices);
        } else if (a.indices.empty() || b.max_meet > a.max_meet) {
          r.max_meet = b.max_meet;
          r.indices = std::move(b.indices);
        } else {
          r.max_meet = a.max_meet;
          r.indices = std::move(a.indices);
          r.indices.insert(r.indices.end(), b.indices.begin(), b.indices.end());
        }
        return r;
      });

  SymmetryReport report{xi, {}, SubSet(ctx.dual.carrier()), best.max_meet, best.candidates};
  for (auto i : best.indices) {
    Morphism g = isos.at(i);
    report.admitted = join(report.admitted,
                           meet(image(g.table(), ctx.consonances_eps), ctx.consonances_eps));
    report.symmetries.push_back(std::move(g));
  }
  return report;
}

std::map<std::uint32_t, SymmetryReport> successors_table(const ContrapuntalContext& ctx,
                                                         const SymmetryOptions& options) {
  std::map<std::uint32_t, SymmetryReport> table;
  for (auto k : ctx.consonances.elements()) {
    table.emplace(k, counterpoint_symmetries(ctx, Consonance::point(ctx, {0, k}), options));
  }
  return table;
}

SubSet admitted_next_intervals(const ContrapuntalContext& ctx, const SymmetryReport& report,
                               std::uint32_t next_cantus) {
  SubSet out(ctx.base.carrier());
  for (auto k : ctx.consonances.elements()) {
    if (report.admitted.contains(encode(ctx.dual.carrier(), {next_cantus, k}))) out.insert(k);
  }
  return out;
}

}  // namespace contrapunctus
