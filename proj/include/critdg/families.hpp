#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "critdg/digraph.hpp"

namespace critdg {

/// Transitive tournament: arcs (i,j) for i < j.
struct GammaK {
  std::size_t k = 0;
};

/// GammaK with the single arc (i, i+1) removed, 1 <= i <= k-1.
struct GammaKI {
  std::size_t k = 0;
  std::size_t i = 0;
};

/// Arcs (i,j) for i < j and i != 1; vertex 1 is isolated.
struct GammaK0 {
  std::size_t k = 0;
};

/// Arcs (1,3),(1,4),(2,3),(2,4).
struct D4 {};

/// Blocks Y_1..Y_s of the given sizes (each >= 2) in order; block Y_a induces
/// GammaK0 on its vertices, and every vertex of Y_a sends an arc to every
/// vertex of Y_b for a < b.
struct GammaPartition {
  std::size_t k = 0;
  std::vector<std::size_t> block_sizes;
};

/// Replaces Hertz vertex i by a complete symmetric block of sizes[i-1]
/// vertices and every Hertz arc by all block-to-block arcs.
struct BlowUp {
  Digraph hertz = Digraph::empty(1);
  std::vector<std::size_t> sizes;
};

/// Maximal digraph of radius k on n vertices. Blocks X_1..X_{k+1} are
/// singletons except X_p (a vertices) and, when b >= 1, X_{p+1} (b vertices).
/// With b >= 1: a + b = n-k+1 and 2 <= p <= k-1. With b = 0: a = n-k and
/// 2 <= p <= k.
struct MaximalRadius {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t position = 2;
  std::size_t a = 1;
  std::size_t b = 0;
};

/// MaximalRadius with every arc reversed.
struct ReversedMaximalRadius {
  MaximalRadius base;
};

/// Biconnected maximal digraph of quasi-diameter 3 on |X1|+..+|X4|+2
/// vertices: z = 1, then X1, X2, X3, X4, then v = n.
struct MaximalQD3 {
  std::array<std::size_t, 4> sizes{};
};

using FamilySpec = std::variant<GammaK, GammaKI, GammaK0, D4, GammaPartition, BlowUp,
                                MaximalRadius, ReversedMaximalRadius, MaximalQD3>;

/// Throws InvalidSpec (naming the violated constraint), or the blow_up errors.
Digraph build_family(const FamilySpec& spec);

/// Throws CyclicHertz, SizeMismatch or ZeroSize. Block i occupies the next
/// sizes[i-1] consecutive labels.
Digraph blow_up(const Digraph& hertz, const std::vector<std::size_t>& sizes);

/// Radius exactly k, arc count g(n,k). Throws InvalidSpec.
Digraph maximal_radius_digraph(const MaximalRadius& spec);

/// Accepts MaximalRadius, ReversedMaximalRadius or MaximalQD3 and checks the
/// quasi-diameter of the result. Throws InvalidSpec.
Digraph maximal_quasidiameter_digraph(const FamilySpec& spec);

/// Every valid MaximalRadius parameter set for (n, k).
std::vector<MaximalRadius> maximal_radius_specs(std::size_t n, std::size_t k);

/// Every valid MaximalQD3 size vector with the given total core size.
std::vector<MaximalQD3> maximal_qd3_specs(std::size_t core);

/// Which canonical Hertz-graph families a digraph is isomorphic to. Several
/// may hold at once: D4 is also the partition structure with blocks (2,2), and
/// GammaK0 is the partition structure with a single block.
struct HertzClassification {
  std::size_t k = 0;  // vertex count of the classified graph
  std::optional<std::size_t> transitive_tournament;  // k
  std::optional<std::size_t> gamma_ki;               // i, for k = n
  bool gamma_k0 = false;
  std::optional<std::vector<std::size_t>> partition_blocks;  // ordered block sizes
  bool d4 = false;

  bool none() const {
    return !transitive_tournament && !gamma_ki && !gamma_k0 && !partition_blocks && !d4;
  }

  /// Most specific name, e.g. "TransitiveTournament(4)", "Partition(2,2)"; "None".
  std::string label() const;
};

HertzClassification recognize_hertz_family(const Digraph& h);

/// Block sizes of the partition structure, when h has it.
std::optional<std::vector<std::size_t>> recognize_partition_structure(const Digraph& h);

std::string describe(const FamilySpec& spec);

}  // namespace critdg
