#pragma once

// Canonical JSON documents for engine results. Elements are written in their
// numeric encoding (residue, point index or bitmask); dual dyads as
// [cantus, interval] pairs. Arrays are ascending, object keys sorted.

#include <map>

#include <json.hpp>

#include "contrapunctus/closure.hpp"
#include "contrapunctus/counterpoint.hpp"
#include "contrapunctus/polarity.hpp"

namespace contrapunctus {

using Json = nlohmann::json;

Json subset_json(const SubSet& s);
Json dyads_json(const SubSet& s);
Json morphisms_json(const std::vector<Morphism>& ms);

Json context_json(const ContrapuntalContext& ctx);
Json report_json(const ContrapuntalContext& ctx, const SymmetryReport& report);
Json successors_json(const ContrapuntalContext& ctx,
                     const std::map<std::uint32_t, SymmetryReport>& table, bool restricted_family);

Json class_json(const DichotomyClass& cls);
Json finding_json(const QuasipolarityFinding& f);
Json kuratowski_json(const KuratowskiReport& r);

}  // namespace contrapunctus
