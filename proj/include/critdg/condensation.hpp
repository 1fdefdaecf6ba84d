#pragma once

#include <cstddef>
#include <vector>

#include "critdg/digraph.hpp"

namespace critdg {

/// Strong-component ("bicomponent") decomposition together with the Hertz
/// graph, whose vertex i stands for components[i-1].
///
/// Components are listed in a topological order of the Hertz graph; among
/// components that are simultaneously available the one holding the smallest
/// vertex label comes first, so the order is fully deterministic.
struct Condensation {
  std::vector<std::vector<Vertex>> components;  // each sorted ascending
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> component_of;  // index v-1: 0-based component index
  Digraph hertz = Digraph::empty(1);

  std::size_t count() const { return components.size(); }
};

Condensation condensation(const Digraph& g);

/// Number of strong components only.
std::size_t bicomponent_count(const Digraph& g);

struct StructureFlags {
  bool is_acyclic = false;
  bool is_transitive = false;
  bool is_complete_symmetric = false;
  bool is_transitive_tournament = false;
  bool is_biconnected = false;

  bool operator==(const StructureFlags&) const = default;
};

/// Transitivity means: arcs (u,v),(v,w) with u != w force the arc (u,w).
StructureFlags structure_flags(const Digraph& g);

bool is_transitive(const Digraph& g);

}  // namespace critdg
