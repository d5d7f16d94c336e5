#pragma once

#include <optional>
#include <string>

#include "anosov/character.hpp"
#include "anosov/factory.hpp"
#include "anosov/lab.hpp"
#include "anosov/presentation.hpp"
#include "anosov/representation.hpp"
#include "anosov/suspension.hpp"

namespace anosov {

// A scenario file fixes the group, the representation and the characters a
// command operates on; task parameters (radius, p, k, ...) stay on the
// command line. JSON schema, all keys validated (unknown keys are errors):
//
// {
//   "name": "label",
//   "presentation": {"kind": "free", "rank": 2}
//                 | {"kind": "surface", "genus": 2}
//                 | {"kind": "custom", "rank": n, "relators": ["abAB", ...]},
//   "representation":
//       {"builder": "schottky", "mu": 3.0, "tilt": 0.785...}   (free kind)
//     | {"builder": "genus2"}                                  (surface genus 2)
//     | {"builder": "sym_power", "q": 4, "base": {<representation>}}
//     | {"builder": "explicit", "images": [<matrix>, ...]},
//   "route": "fuchsian" | "generic",          (optional; fuchsian needs sym_power)
//   "characters": {"phi": [..], "psi1": [..], "psi2": [..]},   (each optional)
//   "suspension": {"p": 1, "xi": {...}, "kappa": {...}}        (optional)
// }
//
// Matrices are arrays of rows; an entry is a number or an [re, im] pair.
// xi: {"type": "identity"} | {"type": "signs", "params": [..]}
//   | {"type": "rotation", "params": [..]} | {"type": "explicit", "images": [..]}.
// kappa: {"type": "zero"} | {"type": "coboundary", "seed": <p x q matrix>}
//      | {"type": "explicit", "blocks": [<p x q matrix>, ...]}.
struct Scenario {
  std::string name;
  GroupPresentation presentation = GroupPresentation::free_group(1);
  Representation rep;
  std::optional<ComposedFuchsian> composed;  // set when built as a symmetric power
  bool force_generic = false;
  std::optional<RealCharacter> phi, psi1, psi2;
  std::optional<SuspensionSpec> suspension;

  bool fuchsian_route() const { return composed.has_value() && !force_generic; }
  DomainSource domain_source() const;
};

Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario(const std::string& path);

}  // namespace anosov
