#include "contrapunctus/report.hpp"

#include "contrapunctus/notation.hpp"

namespace contrapunctus {

Json subset_json(const SubSet& s) {
  Json out = Json::array();
  for (auto x : s.elements()) out.push_back(x);
  return out;
}

Json dyads_json(const SubSet& s) {
  Json out = Json::array();
  for (auto x : s.elements()) {
    const auto d = decode(s.carrier(), x);
    out.push_back(Json::array({d.cantus, d.interval}));
  }
  return out;
}

Json morphisms_json(const std::vector<Morphism>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

Json context_json(const ContrapuntalContext& ctx) {
  return {
      {"world", to_string(ctx.base)},
      {"K", subset_json(ctx.consonances)},
      {"D", subset_json(ctx.dissonances)},
      {"polarity", to_string(ctx.polarity)},
      {"dual_world", to_string(ctx.dual)},
      {"dual_polarity", to_string(ctx.dual_polarity)},
  };
}

Json report_json(const ContrapuntalContext& ctx, const SymmetryReport& report) {
  Json j = {
      {"consonance", dyads_json(report.consonance.image)},
      {"symmetries", morphisms_json(report.symmetries)},
      {"max_meet_size", report.max_meet_size},
      {"candidates", report.candidates},
      {"admitted", dyads_json(report.admitted)},
  };
  if (!report.consonance.generalized) {
    const auto e = decode(ctx.dual.carrier(), report.consonance.image.elements().front());
    j["interval"] = e.interval;
    j["cantus"] = e.cantus;
  }
  return j;
}

Json successors_json(const ContrapuntalContext& ctx,
                     const std::map<std::uint32_t, SymmetryReport>& table, bool restricted_family) {
  Json entries = Json::array();
  for (const auto& [k, report] : table) entries.push_back(report_json(ctx, report));
  Json j = context_json(ctx);
  j["restricted_family"] = restricted_family;
  j["entries"] = std::move(entries);
  return j;
}

Json class_json(const DichotomyClass& cls) {
  const auto& rep = cls.representative;
  Json j = {
      {"K", subset_json(rep.consonances)},
      {"K_text", format_subset(rep.world, rep.consonances)},
      {"orbit_size", cls.orbit_size},
      {"strong", cls.is_strong},
      {"has_quasipolarity", cls.has_quasipolarity},
      {"witness_count", rep.witnesses.size()},
  };
  if (cls.is_strong) j["polarity"] = to_string(rep.witnesses.front());
  return j;
}

Json finding_json(const QuasipolarityFinding& f) {
  const World& w = f.quasipolarity.world();
  Json j = {
      {"quasipolarity", to_string(f.quasipolarity)},
      {"dichotomies", f.dichotomies},
      {"strong_dichotomies", f.strong_dichotomies},
      {"is_polarity", f.strong_dichotomies > 0},
  };
  j["first_dichotomy"] = f.first_dichotomy ? Json(format_subset(w, *f.first_dichotomy)) : Json();
  j["first_strong"] = f.first_strong ? Json(format_subset(w, *f.first_strong)) : Json();
  return j;
}

Json kuratowski_json(const KuratowskiReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json item = {{"axiom", v.axiom}, {"witness", subset_json(v.witness)}};
    if (v.second) item["second"] = subset_json(*v.second);
    violations.push_back(std::move(item));
  }
  return {
      {"exhaustive", r.exhaustive},
      {"subsets_checked", r.subsets_checked},
      {"pairs_checked", r.pairs_checked},
      {"violations", std::move(violations)},
      {"ok", r.ok()},
  };
}

}  // namespace contrapunctus
