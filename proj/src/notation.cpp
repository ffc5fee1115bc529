#include "contrapunctus/notation.hpp"

#include <charconv>
#include <regex>

#include "contrapunctus/errors.hpp"

namespace contrapunctus {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_integer(std::string_view text) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("expected an integer", std::string(text));
  }
  return v;
}

std::uint32_t normalize_mod(std::int64_t v, std::uint32_t n) {
  const std::int64_t m = n;
  return static_cast<std::uint32_t>(((v % m) + m) % m);
}

/// A subset of S written as 0, S, 1 or hyphen-joined member letters.
std::uint32_t parse_set_token(std::string_view text, unsigned bits) {
  const std::uint32_t full = (std::uint32_t{1} << bits) - 1;
  if (text == "0") return 0;
  if (text == "S" || text == "1") return full;
  std::uint32_t mask = 0;
  for (const auto& member : split(text, '-')) {
    if (member.size() != 1 || member[0] < 'a' || member[0] >= static_cast<char>('a' + bits)) {
      throw ParseError("expected a member letter a.." + std::string(1, static_cast<char>('a' + bits - 1)) +
                           " in set token",
                       std::string(text));
    }
    mask |= std::uint32_t{1} << (member[0] - 'a');
  }
  return mask;
}

std::string format_set_token(std::uint32_t mask, unsigned bits) {
  if (mask == 0) return "0";
  if (bits > 0 && mask == (std::uint32_t{1} << bits) - 1) return "S";
  std::string out;
  for (unsigned i = 0; i < bits; ++i) {
    if ((mask >> i) & 1U) {
      if (!out.empty()) out += '-';
      out += static_cast<char>('a' + i);
    }
  }
  return out;
}

std::uint32_t parse_ring_element(const Ring& r, std::string_view text) {
  if (r.is_boolean()) return parse_set_token(text, r.bits());
  return normalize_mod(parse_integer(text), r.size());
}

std::string format_ring_element(const Ring& r, std::uint32_t x) {
  return r.is_boolean() ? format_set_token(x, r.bits()) : std::to_string(x);
}

std::uint32_t parse_world_size(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  try {
    v = parse_integer(text);
  } catch (const ParseError&) {
    throw ParseError("bad world size", std::string(whole));
  }
  if (v < 1 || v > static_cast<std::int64_t>(kMaxCarrierSize)) {
    throw ParseError("world size out of range", std::string(whole));
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

World parse_world(std::string_view text) {
  const std::string whole = trim(text);
  const auto colon = whole.find(':');
  if (colon == std::string::npos) throw ParseError("expected <kind>:<size>", whole);
  const std::string kind = whole.substr(0, colon);
  const std::string rest = whole.substr(colon + 1);
  if (kind == "dual") {
    const World base = parse_world(rest);
    try {
      return dual_lift(base);
    } catch (const Error&) {
      throw ParseError("dual lift needs an affine or power-set base", whole);
    }
  }
  const std::uint32_t n = parse_world_size(rest, whole);
  try {
    if (kind == "affine") return World::affine(n);
    if (kind == "symaffine") return World::sym_affine(n);
    if (kind == "finset") return World::fin_set(n);
    if (kind == "powerset") return World::power_set(n);
  } catch (const Error&) {
    throw ParseError("world size out of range", whole);
  }
  throw ParseError("unknown world kind", whole);
}

std::string to_string(const World& world) {
  const std::string n = std::to_string(world.parameter());
  const auto name = [&](WorldKind k) -> std::string {
    switch (k) {
      case WorldKind::Affine:
        return "affine:" + n;
      case WorldKind::SymAffine:
        return "symaffine:" + n;
      case WorldKind::FinSet:
        return "finset:" + n;
      case WorldKind::PowerSet:
        return "powerset:" + n;
      case WorldKind::Dual:
        break;
    }
    return {};
  };
  if (world.kind() == WorldKind::Dual) return "dual:" + name(world.base_kind());
  return name(world.kind());
}

Morphism parse_morphism(const World& world, std::string_view text) {
  const std::string t = trim(text);
  MorphismParams params;
  switch (world.kind()) {
    case WorldKind::FinSet: {
      if (t.rfind("perm:", 0) != 0) throw ParseError("expected perm:<table>", t);
      std::vector<std::uint32_t> table;
      for (const auto& entry : split(std::string_view(t).substr(5), ',')) {
        const auto v = parse_integer(entry);
        if (v < 0 || v >= static_cast<std::int64_t>(world.parameter())) {
          throw ParseError("table entry out of range", entry);
        }
        table.push_back(static_cast<std::uint32_t>(v));
      }
      params = TableParams{std::move(table)};
      break;
    }
    case WorldKind::Dual: {
      static const std::regex re(R"(^e([^+.()]+)\+e([^+.()]+)\.\(([^+.()]+)\+e([^+.()]+)\)$)");
      std::smatch m;
      if (!std::regex_match(t, m, re)) throw ParseError("expected e<u>+e<v>.(<a>+e<b>)", t);
      const Ring r = world.ring();
      params = DualParams{parse_ring_element(r, m[1].str()), parse_ring_element(r, m[2].str()),
                          parse_ring_element(r, m[3].str()), parse_ring_element(r, m[4].str())};
      break;
    }
    default: {
      static const std::regex re(R"(^e([^.]+)\.([^.]+)$)");
      std::smatch m;
      if (!std::regex_match(t, m, re)) throw ParseError("expected e<u>.<a>", t);
      const Ring r = world.ring();
      params = AffineParams{parse_ring_element(r, m[1].str()), parse_ring_element(r, m[2].str())};
      break;
    }
  }
  try {
    return Morphism(world, std::move(params));
  } catch (const AdmissibilityError& e) {
    throw ParseError(std::string("morphism not in world (") + e.what() + ")", t);
  }
}

std::string to_string(const Morphism& m) {
  if (const auto* p = std::get_if<AffineParams>(&m.params())) {
    const Ring r = m.world().ring();
    return "e" + format_ring_element(r, p->u) + "." + format_ring_element(r, p->a);
  }
  if (const auto* d = std::get_if<DualParams>(&m.params())) {
    const Ring r = m.world().ring();
    return "e" + format_ring_element(r, d->u) + "+e" + format_ring_element(r, d->v) + ".(" +
           format_ring_element(r, d->a) + "+e" + format_ring_element(r, d->b) + ")";
  }
  std::string out = "perm:";
  const auto& table = std::get<TableParams>(m.params()).table;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(table[i]);
  }
  return out;
}

std::string join_morphisms(const std::vector<Morphism>& ms, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i != 0) out += sep;
    out += to_string(ms[i]);
  }
  return out;
}

std::uint32_t parse_element(const World& world, std::string_view text) {
  const std::string t = trim(text);
  switch (world.kind()) {
    case WorldKind::FinSet: {
      const auto v = parse_integer(t);
      if (v < 0 || v >= static_cast<std::int64_t>(world.parameter())) {
        throw ParseError("element out of range", t);
      }
      return static_cast<std::uint32_t>(v);
    }
    case WorldKind::Dual: {
      const auto plus = t.find("+e");
      if (plus == std::string::npos) throw ParseError("expected <x>+e<y>", t);
      const Ring r = world.ring();
      return encode(world.carrier(), {parse_ring_element(r, t.substr(0, plus)),
                                      parse_ring_element(r, t.substr(plus + 2))});
    }
    default:
      return parse_ring_element(world.ring(), t);
  }
}

std::string format_element(const World& world, std::uint32_t index) {
  switch (world.kind()) {
    case WorldKind::FinSet:
      return std::to_string(index);
    case WorldKind::Dual: {
      const Ring r = world.ring();
      const auto e = decode(world.carrier(), index);
      return format_ring_element(r, e.cantus) + "+e" + format_ring_element(r, e.interval);
    }
    default:
      return format_ring_element(world.ring(), index);
  }
}

SubSet parse_subset(const World& world, std::string_view text) {
  SubSet s(world.carrier());
  if (trim(text).empty()) return s;
  for (const auto& token : split(text, ',')) s.insert(parse_element(world, token));
  return s;
}

std::string format_subset(const World& world, const SubSet& s) {
  std::string out;
  for (auto x : s.elements()) {
    if (!out.empty()) out += ',';
    out += format_element(world, x);
  }
  return out;
}

std::vector<WorldCatalogEntry> world_catalog() {
  return {
      {"affine:12", "Z_n with affine maps e<u>.<a>: x -> a*x+u"},
      {"symaffine:12", "Z_n with the maps e<u>.1 and e<u>.-1 only"},
      {"finset:12", "{0..n-1} with all total maps; isomorphisms are permutations"},
      {"powerset:3", "2^S with |S| = n; maps e<U>.<W>: x -> U xor (W and x)"},
      {"dual:affine:12", "dual numbers over Z_n: (x, y) encodes cantus x and interval y"},
      {"dual:powerset:2", "dual numbers over 2^S: cantus and interval are sets"},
  };
}

}  // namespace contrapunctus
