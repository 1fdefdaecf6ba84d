#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace critdg {

/// Vertex label, 1-based in every public interface.
using Vertex = std::uint32_t;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Loop-free directed graph on vertices 1..n, stored as one out-neighbour
/// bit row per vertex. Values are immutable; "modifying" operations return
/// a new digraph.
class Digraph {
 public:
  using Word = std::uint64_t;

  /// Largest n for which the whole arc set fits in a single 64-bit mask.
  static constexpr std::size_t kMaxMaskVertices = 8;

  /// Throws LoopArc, OutOfRange or DuplicateArc; n must be at least 1.
  static Digraph from_arc_list(std::size_t n, std::span<const Arc> arcs);
  static Digraph from_arc_list(std::size_t n, std::initializer_list<Arc> arcs) {
    return from_arc_list(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  /// Arc-less digraph on n vertices.
  static Digraph empty(std::size_t n);

  /// Decodes the row-major pair mask produced by arc_mask(). n <= 8.
  static Digraph from_arc_mask(std::size_t n, std::uint64_t mask);

  std::size_t n() const { return n_; }
  std::size_t arc_count() const { return arc_count_; }

  bool has_arc(Vertex from, Vertex to) const;
  std::size_t out_degree(Vertex v) const;
  std::size_t in_degree(Vertex v) const;

  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  /// Bit i is set iff the i-th ordered pair (u,v), u != v, in row-major order
  /// is an arc: (1,2),(1,3),...,(1,n),(2,1),(2,3),... Requires n <= 8.
  std::uint64_t arc_mask() const;

  /// Copy with one extra arc. Throws LoopArc, OutOfRange or ArcPresent.
  Digraph with_arc(Arc arc) const;

  /// Out-neighbour bits of the 0-based vertex u; bit v set iff arc (u+1,v+1).
  std::span<const Word> row(std::size_t u) const {
    return {bits_.data() + u * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  Digraph(std::size_t n);

  void set(std::size_t u, std::size_t v) {
    bits_[u * words_ + v / 64] |= Word{1} << (v % 64);
  }
  bool test(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  friend Digraph reverse(const Digraph& g);
  friend Digraph transitive_closure(const Digraph& g);
  friend Digraph relabel(const Digraph& g, std::span<const Vertex> new_label);
  friend Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> vertices);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<Word> bits_;
};

/// Index of the ordered pair (u,v) of 0-based vertices within the row-major
/// off-diagonal enumeration used by arc masks.
constexpr std::size_t pair_index(std::size_t n, std::size_t u, std::size_t v) {
  return u * (n - 1) + (v < u ? v : v - 1);
}

inline Digraph from_arc_list(std::size_t n, std::span<const Arc> arcs) {
  return Digraph::from_arc_list(n, arcs);
}

/// Arc (u,v) in the result iff (v,u) in g.
Digraph reverse(const Digraph& g);

/// Arc (u,v), u != v, in the result iff v is reachable from u in g.
Digraph transitive_closure(const Digraph& g);

/// Vertex v of g becomes new_label[v-1]; new_label must be a permutation of 1..n.
Digraph relabel(const Digraph& g, std::span<const Vertex> new_label);

/// Subgraph induced by the given distinct vertices; vertices[i] becomes i+1.
Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> vertices);

/// Reachability bit rows: bit v of row u set iff v reachable from u
/// (every vertex reaches itself). Layout matches Digraph::row.
std::vector<Digraph::Word> reachability_rows(const Digraph& g);

}  // namespace critdg
