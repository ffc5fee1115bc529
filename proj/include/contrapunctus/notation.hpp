#pragma once

// Text syntax for worlds, morphisms and elements. See docs/notation.md.
//
//   worlds     affine:<n> | symaffine:<n> | finset:<n> | powerset:<n> | dual:<base>
//   affine     e<u>.<a>                 e2.5, e1.-1 (normalized to e1.11)
//   finset     perm:<t0>,<t1>,...       the value table
//   powerset   e<U>.<W>                 U, W are sets: 0, S (or 1), or a-b-c
//   dual       e<u>+e<v>.(<a>+e<b>)     components are base-ring elements
//
// Elements: integers for Z_n and finite sets, set tokens for 2^S, and
// <x>+e<y> for dual carriers.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "contrapunctus/lattice.hpp"
#include "contrapunctus/worlds.hpp"

namespace contrapunctus {

World parse_world(std::string_view text);
std::string to_string(const World& world);

Morphism parse_morphism(const World& world, std::string_view text);
std::string to_string(const Morphism& m);
std::string join_morphisms(const std::vector<Morphism>& ms, std::string_view sep = ", ");

std::uint32_t parse_element(const World& world, std::string_view text);
std::string format_element(const World& world, std::uint32_t index);

/// Comma-separated element list; an empty string is the empty subset.
SubSet parse_subset(const World& world, std::string_view text);
std::string format_subset(const World& world, const SubSet& s);

struct WorldCatalogEntry {
  std::string spec;
  std::string description;
};

/// The world kinds the engine understands, each with a sample spec.
std::vector<WorldCatalogEntry> world_catalog();

}  // namespace contrapunctus
