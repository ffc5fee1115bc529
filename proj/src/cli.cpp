#include "contrapunctus/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "contrapunctus/closure.hpp"
#include "contrapunctus/counterpoint.hpp"
#include "contrapunctus/errors.hpp"
#include "contrapunctus/fuzzy.hpp"
#include "contrapunctus/notation.hpp"
#include "contrapunctus/polarity.hpp"
#include "contrapunctus/report.hpp"
#include "contrapunctus/service.hpp"

namespace contrapunctus {

namespace {

enum class Format { Table, Json, Csv };

const char* kElementHelp =
    "Element lists are comma-separated. Z_n and finset elements are integers; "
    "power-set elements are sets written 0, S or hyphen-joined members (a-b); "
    "dual elements are <x>+e<y>.";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out << ',';
    out << csv_field(fields[i]);
  }
  out << '\n';
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string dyads_text(const World& dual, const SubSet& s) { return format_subset(dual, s); }

std::string or_none(const std::string& s) { return s.empty() ? "(none)" : s; }

/// Options shared by the counterpoint commands.
struct ContextArgs {
  std::string world;
  std::string kappa;
  std::string polarity;
  bool restricted = false;

  ContrapuntalContext build() const {
    const World w = parse_world(world);
    const SubSet k = parse_subset(w, kappa);
    if (polarity.empty()) return make_context(w, k);
    return make_context(w, k, parse_morphism(w, polarity));
  }
};

class Commands {
 public:
  Commands(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  Format format = Format::Table;

  void worlds_list() {
    const auto catalog = world_catalog();
    if (format == Format::Json) {
      Json j = Json::array();
      for (const auto& e : catalog) j.push_back({{"spec", e.spec}, {"description", e.description}});
      emit(Json{{"worlds", j}});
    } else if (format == Format::Csv) {
      csv_row(out_, {"spec", "description"});
      for (const auto& e : catalog) csv_row(out_, {e.spec, e.description});
    } else {
      for (const auto& e : catalog) out_ << std::left << std::setw(18) << e.spec << e.description << '\n';
    }
  }

  void quasipolarities(const std::string& world_text) {
    const World w = parse_world(world_text);
    const auto qps = enumerate_quasipolarities(w);
    if (format == Format::Json) {
      emit(Json{{"world", to_string(w)}, {"quasipolarities", morphisms_json(qps)}});
    } else if (format == Format::Csv) {
      csv_row(out_, {"quasipolarity"});
      for (const auto& p : qps) csv_row(out_, {to_string(p)});
    } else {
      out_ << "quasipolarities of " << to_string(w) << " (" << qps.size() << "):\n";
      for (const auto& p : qps) out_ << "  " << to_string(p) << '\n';
    }
  }

  void dichotomies(const std::string& world_text, const std::string& polarity, bool classify) {
    const World w = parse_world(world_text);
    if (classify) return classes(w);
    if (!polarity.empty()) return dichotomies_of(w, parse_morphism(w, polarity));
    all_dichotomies(w);
  }

  void strong(const std::string& world_text, const std::string& kappa) {
    const World w = parse_world(world_text);
    const SubSet k = parse_subset(w, kappa);
    const auto witnesses = quasipolarities_for(w, k);
    const bool is_strong = witnesses.size() == 1;
    if (format == Format::Json) {
      Json j{{"world", to_string(w)},
             {"K", subset_json(k)},
             {"strong", is_strong},
             {"witnesses", morphisms_json(witnesses)}};
      if (is_strong) j["polarity"] = to_string(witnesses.front());
      emit(j);
    } else if (format == Format::Csv) {
      csv_row(out_, {"world", "K", "strong", "witnesses"});
      csv_row(out_, {to_string(w), format_subset(w, k), bool_text(is_strong),
                     join_morphisms(witnesses, " ")});
    } else if (is_strong) {
      out_ << "strong: true; polarity: " << to_string(witnesses.front()) << '\n';
    } else {
      out_ << "strong: false; witnesses: " << or_none(join_morphisms(witnesses)) << '\n';
    }
  }

  void symmetries(const ContextArgs& args, const std::string& interval, const std::string& cantus) {
    const auto ctx = args.build();
    const DualElement xi{parse_element(ctx.base, cantus), parse_element(ctx.base, interval)};
    const auto report = counterpoint_symmetries(ctx, Consonance::point(ctx, xi),
                                                {args.restricted, worker_count()});
    if (format == Format::Json) {
      Json j = context_json(ctx);
      j["restricted_family"] = args.restricted;
      j["report"] = report_json(ctx, report);
      emit(j);
    } else if (format == Format::Csv) {
      csv_row(out_, {"symmetry", "max_meet_size"});
      for (const auto& g : report.symmetries) {
        csv_row(out_, {to_string(g), std::to_string(report.max_meet_size)});
      }
    } else {
      out_ << "consonance: " << format_element(ctx.dual, encode(ctx.dual.carrier(), xi)) << '\n'
           << "polarity: " << to_string(polarity_at(ctx, xi.cantus)) << '\n'
           << "candidates (i)+(ii): " << report.candidates << '\n'
           << "max_meet_size: " << report.max_meet_size << '\n'
           << "symmetries (" << report.symmetries.size()
           << "): " << or_none(join_morphisms(report.symmetries)) << '\n'
           << "admitted (" << report.admitted.count()
           << "): " << or_none(dyads_text(ctx.dual, report.admitted)) << '\n';
    }
  }

  void successors(const ContextArgs& args) {
    const auto ctx = args.build();
    const auto table = successors_table(ctx, {args.restricted, worker_count()});
    if (format == Format::Json) {
      emit(successors_json(ctx, table, args.restricted));
    } else if (format == Format::Csv) {
      csv_row(out_, {"interval", "symmetries", "max_meet_size", "admitted"});
      for (const auto& [k, r] : table) {
        csv_row(out_, {format_element(ctx.base, k), std::to_string(r.symmetries.size()),
                       std::to_string(r.max_meet_size), std::to_string(r.admitted.count())});
      }
    } else {
      out_ << "world: " << to_string(ctx.base) << "; K: " << format_subset(ctx.base, ctx.consonances)
           << "; polarity: " << to_string(ctx.polarity) << "; p0: " << to_string(ctx.dual_polarity)
           << '\n';
      for (const auto& [k, r] : table) {
        out_ << "interval " << format_element(ctx.base, k) << ": " << r.symmetries.size()
             << " symmetries, max meet " << r.max_meet_size << ", " << r.admitted.count()
             << " admitted; next intervals over cantus 0: "
             << or_none(format_subset(ctx.base, admitted_next_intervals(ctx, r, 0))) << '\n';
      }
    }
  }

  void closure(const std::string& world_text, const std::string& map_text,
               const std::string& set_text, const std::string& mode_text, bool verify) {
    const World w = parse_world(world_text);
    const Morphism f = parse_morphism(w, map_text);
    const SubSet m = parse_subset(w, set_text);
    const ClosureMode mode = mode_text == "involutive" ? ClosureMode::Involutive
                             : mode_text == "single"   ? ClosureMode::SingleStep
                                                       : ClosureMode::Iterated;
    const ClosureOperator op(f, mode);
    const SubSet closed = op(m);
    std::optional<KuratowskiReport> report;
    if (verify) report = verify_kuratowski(op);
    if (format == Format::Json) {
      Json j{{"world", to_string(w)},
             {"map", to_string(f)},
             {"mode", mode_text},
             {"set", subset_json(m)},
             {"closed", subset_json(closed)}};
      if (report) j["kuratowski"] = kuratowski_json(*report);
      emit(j);
    } else if (format == Format::Csv) {
      csv_row(out_, {"set", "closed"});
      csv_row(out_, {format_subset(w, m), format_subset(w, closed)});
    } else {
      out_ << "closure: {" << format_subset(w, closed) << "}\n";
      if (report) {
        out_ << "kuratowski: " << (report->ok() ? "ok" : "violations") << " ("
             << (report->exhaustive ? "exhaustive" : "sampled") << ", " << report->subsets_checked
             << " subsets, " << report->pairs_checked << " pairs)\n";
        for (const auto& v : report->violations) {
          out_ << "  " << v.axiom << " fails at {" << format_subset(w, v.witness) << "}";
          if (v.second) out_ << " with {" << format_subset(w, *v.second) << "}";
          out_ << '\n';
        }
      }
    }
  }

  void pseudocomplement_cmd(const std::string& grades_text) {
    const auto k = parse_grades(grades_text);
    const auto neg = pseudocomplement(k);
    std::vector<std::string> grades;
    for (const auto& g : neg.grades()) grades.push_back(format_grade(g));
    if (format == Format::Json) {
      emit(Json{{"pseudocomplement", grades}, {"crisp", is_crisp(neg)}});
    } else if (format == Format::Csv) {
      csv_row(out_, {"index", "grade"});
      for (std::size_t i = 0; i < grades.size(); ++i) csv_row(out_, {std::to_string(i), grades[i]});
    } else {
      std::string joined;
      for (const auto& g : grades) joined += (joined.empty() ? "" : ",") + g;
      out_ << "pseudocomplement: " << joined << "; crisp: " << bool_text(is_crisp(neg)) << '\n';
    }
  }

  void explore(const std::string& world_text) {
    const World w = parse_world(world_text);
    const auto survey = survey_quasipolarities(w);
    const auto existence = search_nonpolar_quasipolarity(w, OpenQuestion::Existence);
    const auto strongness = search_nonpolar_quasipolarity(w, OpenQuestion::Strongness);
    const auto verdict = [](const std::optional<NonpolarEvidence>& e) -> Json {
      if (!e) return nullptr;
      return {{"quasipolarity", to_string(e->quasipolarity)}, {"evidence", e->evidence}};
    };
    if (format == Format::Json) {
      Json findings = Json::array();
      for (const auto& f : survey) findings.push_back(finding_json(f));
      emit(Json{{"world", to_string(w)},
                {"findings", std::move(findings)},
                {"without_dichotomy", verdict(existence)},
                {"not_a_polarity", verdict(strongness)}});
      return;
    }
    if (format == Format::Csv) {
      csv_row(out_, {"quasipolarity", "dichotomies", "strong_dichotomies", "first_strong"});
      for (const auto& f : survey) {
        csv_row(out_, {to_string(f.quasipolarity), std::to_string(f.dichotomies),
                       std::to_string(f.strong_dichotomies),
                       f.first_strong ? format_subset(w, *f.first_strong) : ""});
      }
      return;
    }
    out_ << "world: " << to_string(w) << "; quasipolarities: " << survey.size() << '\n';
    for (const auto& f : survey) {
      out_ << "  " << to_string(f.quasipolarity) << ": " << f.dichotomies << " dichotomies, "
           << f.strong_dichotomies << " strong";
      if (f.first_strong) out_ << " (e.g. {" << format_subset(w, *f.first_strong) << "})";
      out_ << '\n';
    }
    out_ << "every quasipolarity has a dichotomy: "
         << (existence ? "no, " + to_string(existence->quasipolarity) + ": " + existence->evidence
                       : std::string("yes"))
         << '\n';
    out_ << "every quasipolarity is a polarity: "
         << (strongness ? "no, " + to_string(strongness->quasipolarity) + ": " + strongness->evidence
                        : std::string("yes"))
         << '\n';
  }

 private:
  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

  void classes(const World& w) {
    const auto cls = classify_dichotomies(w);
    std::uint64_t total = 0, strong_count = 0;
    for (const auto& c : cls) {
      total += c.orbit_size;
      strong_count += c.is_strong ? 1 : 0;
    }
    if (format == Format::Json) {
      Json arr = Json::array();
      for (const auto& c : cls) arr.push_back(class_json(c));
      emit(Json{{"world", to_string(w)},
                {"classes", std::move(arr)},
                {"subsets", total},
                {"strong_classes", strong_count}});
    } else if (format == Format::Csv) {
      csv_row(out_, {"representative", "orbit_size", "has_quasipolarity", "strong", "witnesses"});
      for (const auto& c : cls) {
        csv_row(out_, {format_subset(w, c.representative.consonances), std::to_string(c.orbit_size),
                       bool_text(c.has_quasipolarity), bool_text(c.is_strong),
                       std::to_string(c.representative.witnesses.size())});
      }
    } else {
      out_ << cls.size() << " classes over " << total << " half-size subsets; " << strong_count
           << " strong\n";
      for (const auto& c : cls) {
        out_ << "  {" << format_subset(w, c.representative.consonances) << "} orbit "
             << c.orbit_size << ", witnesses " << c.representative.witnesses.size();
        if (c.is_strong) out_ << ", polarity " << to_string(c.representative.witnesses.front());
        out_ << '\n';
      }
    }
  }

  void dichotomies_of(const World& w, const Morphism& p) {
    if (!is_quasipolarity(w, p)) {
      throw PreconditionError(to_string(p) + " is not a quasipolarity of " + to_string(w));
    }
    std::vector<SubSet> ks;
    for (const auto& f : survey_for(w, p)) ks.push_back(f);
    list_dichotomies(w, ks);
  }

  void all_dichotomies(const World& w) {
    const std::size_t n = w.carrier().size();
    if (n % 2 != 0) throw StructuralError("carrier of odd size has no dichotomies");
    if (n > kClassifyMaxCarrier) throw CapExceeded("listing dichotomies of a carrier this large");
    std::vector<SubSet> ks;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      if (static_cast<std::size_t>(__builtin_popcountll(m)) != n / 2) continue;
      SubSet k = SubSet::from_mask(w.carrier(), m);
      if (count_quasipolarities_for(w, k, 1) > 0) ks.push_back(std::move(k));
    }
    list_dichotomies(w, ks);
  }

  static std::vector<SubSet> survey_for(const World& w, const Morphism& p) {
    std::vector<SubSet> ks;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t x = 0; x < w.carrier().size(); ++x) {
      if (x < p.table()(x)) pairs.emplace_back(x, p.table()(x));
    }
    if (pairs.size() > 20) throw CapExceeded("too many dichotomies to list");
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << pairs.size()); ++c) {
      SubSet k(w.carrier());
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        k.insert(((c >> i) & 1U) ? pairs[i].second : pairs[i].first);
      }
      ks.push_back(std::move(k));
    }
    std::sort(ks.begin(), ks.end());
    return ks;
  }

  void list_dichotomies(const World& w, const std::vector<SubSet>& ks) {
    Json arr = Json::array();
    if (format == Format::Csv) csv_row(out_, {"K", "witnesses", "strong", "polarity"});
    for (const auto& k : ks) {
      const std::uint64_t count = count_quasipolarities_for(w, k, 2);
      const bool strong = count == 1;
      const std::string polarity = strong ? to_string(quasipolarities_for(w, k).front()) : "";
      const std::string witnesses = count >= 2 ? "2+" : std::to_string(count);
      if (format == Format::Json) {
        Json j{{"K", subset_json(k)}, {"K_text", format_subset(w, k)}, {"strong", strong}};
        if (strong) j["polarity"] = polarity;
        arr.push_back(std::move(j));
      } else if (format == Format::Csv) {
        csv_row(out_, {format_subset(w, k), witnesses, bool_text(strong), polarity});
      } else {
        out_ << "{" << format_subset(w, k) << "}" << (strong ? " strong, polarity " + polarity : "")
             << '\n';
      }
    }
    if (format == Format::Json) emit(Json{{"world", to_string(w)}, {"dichotomies", std::move(arr)}});
  }

  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"contrapunctus: quasipolarities, dichotomies, counterpoint symmetries and closure "
               "operators on finite carriers.\nWorld specs: affine:<n>, symaffine:<n>, finset:<n>, "
               "powerset:<n>, dual:<base>.\n" +
               std::string(kElementHelp)};
  app.require_subcommand(1);

  std::string format_text = "table";
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  Commands commands(out, err);
  std::function<void()> action;

  auto* worlds = app.add_subcommand("worlds", "Supported world kinds");
  worlds->require_subcommand(1);
  worlds->add_subcommand("list", "List world specs")->callback([&] {
    action = [&] { commands.worlds_list(); };
  });

  std::string world, kappa, polarity, interval, cantus = "0", map_text, set_text, mode = "iterated",
                                               grades;
  bool classify = false, restricted = false, verify = false;
  int port = 8080;
  std::string host = "127.0.0.1";

  auto* qp = app.add_subcommand("quasipolarities", "Enumerate quasipolarities of a world");
  qp->add_option("--world", world, "World spec")->required();
  qp->callback([&] { action = [&] { commands.quasipolarities(world); }; });

  auto* dich = app.add_subcommand("dichotomies", "List or classify dichotomies");
  dich->add_option("--world", world, "World spec")->required();
  dich->add_option("--polarity", polarity, "Only dichotomies of this quasipolarity");
  dich->add_flag("--classify", classify, "Classify half-size subsets into iso-group orbits");
  dich->callback([&] { action = [&] { commands.dichotomies(world, polarity, classify); }; });

  auto* strong = app.add_subcommand("strong", "Decide whether a dichotomy is strong");
  strong->add_option("--world", world, "World spec")->required();
  strong->add_option("--kappa", kappa, "Consonances K")->required();
  strong->callback([&] { action = [&] { commands.strong(world, kappa); }; });

  const auto add_context_options = [&](CLI::App* sub) {
    sub->add_option("--world", world, "Base ring world (affine:<n> or powerset:<n>)")->required();
    sub->add_option("--kappa", kappa, "Consonances K")->required();
    sub->add_option("--polarity", polarity,
                    "Quasipolarity to use when the dichotomy is not strong");
    sub->add_flag("--restricted-family", restricted,
                  "Search only e0+e<v>.(1+e<b>) instead of the full iso group");
  };

  auto* sym = app.add_subcommand("symmetries", "Counterpoint symmetries of one consonance");
  add_context_options(sym);
  sym->add_option("--interval", interval, "Consonant interval k")->required();
  sym->add_option("--cantus", cantus, "Cantus firmus note")->capture_default_str();
  sym->callback([&] {
    action = [&] {
      commands.symmetries({world, kappa, polarity, restricted}, interval, cantus);
    };
  });

  auto* succ = app.add_subcommand("successors", "Admitted successors for every consonant interval");
  add_context_options(succ);
  succ->callback([&] { action = [&] { commands.successors({world, kappa, polarity, restricted}); }; });

  auto* clo = app.add_subcommand("closure", "Closure of a subset under M v f(M)");
  clo->add_option("--world", world, "World spec")->required();
  clo->add_option("--map", map_text, "Morphism f")->required();
  clo->add_option("--set", set_text, "Subset M")->required();
  clo->add_option("--mode", mode, "Closure mode")
      ->check(CLI::IsMember({"involutive", "single", "iterated"}))
      ->capture_default_str();
  clo->add_flag("--verify", verify, "Also check the Kuratowski axioms");
  clo->callback([&] { action = [&] { commands.closure(world, map_text, set_text, mode, verify); }; });

  auto* pc = app.add_subcommand("pseudocomplement", "Heyting pseudocomplement of graded consonance");
  pc->add_option("--grades", grades, "Comma-separated grades in [0,1], e.g. 1/2,0,1")->required();
  pc->callback([&] { action = [&] { commands.pseudocomplement_cmd(grades); }; });

  auto* ex = app.add_subcommand("explore-open-questions",
                                "Search a finite world for quasipolarities without (strong) dichotomies");
  ex->add_option("--world", world, "World spec")->required();
  ex->callback([&] { action = [&] { commands.explore(world); }; });

  auto* serve = app.add_subcommand("serve", "Run the HTTP query service");
  serve->add_option("--port", port, "TCP port")->required();
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->callback([&] {
    action = [&] {
      Service service;
      err << "listening on " << host << ":" << port << std::endl;
      if (!service.listen(host, port)) throw Error("could not bind " + host + ":" + std::to_string(port));
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  commands.format = format_text == "json" ? Format::Json
                    : format_text == "csv" ? Format::Csv
                                           : Format::Table;
  try {
    if (action) action();
    return kExitOk;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonStrongDichotomy& e) {
    err << "error: " << e.what() << "; witnesses: " << or_none([&] {
      std::string s;
      for (const auto& w : e.witnesses()) s += (s.empty() ? "" : ", ") + w;
      return s;
    }()) << "\n(pass --polarity to choose one)\n";
    return kExitEngineError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitEngineError;
  }
}

}  // namespace contrapunctus
