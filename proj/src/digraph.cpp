#include "critdg/digraph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "critdg/error.hpp"

namespace critdg {
namespace {

std::string arc_text(Arc a) {
  return "(" + std::to_string(a.from) + "," + std::to_string(a.to) + ")";
}

void check_endpoints(std::size_t n, Arc a) {
  if (a.from == a.to) throw Error(ErrorCode::kLoopArc, "arc " + arc_text(a) + " is a loop");
  if (a.from < 1 || a.from > n || a.to < 1 || a.to > n) {
    throw Error(ErrorCode::kOutOfRange,
                "arc " + arc_text(a) + " has an endpoint outside 1.." + std::to_string(n));
  }
}

}  // namespace

Digraph::Digraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

Digraph Digraph::empty(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "a digraph needs at least one vertex");
  return Digraph(n);
}

Digraph Digraph::from_arc_list(std::size_t n, std::span<const Arc> arcs) {
  Digraph g = empty(n);
  for (const Arc& a : arcs) {
    check_endpoints(n, a);
    if (g.test(a.from - 1, a.to - 1)) {
      throw Error(ErrorCode::kDuplicateArc, "arc " + arc_text(a) + " repeats");
    }
    g.set(a.from - 1, a.to - 1);
    ++g.arc_count_;
  }
  return g;
}

Digraph Digraph::from_arc_mask(std::size_t n, std::uint64_t mask) {
  if (n > kMaxMaskVertices) {
    throw Error(ErrorCode::kTooLarge, "arc masks support at most 8 vertices");
  }
  Digraph g = empty(n);
  const std::size_t pairs = n * (n - 1);
  if (pairs < 64 && (mask >> pairs) != 0) {
    throw Error(ErrorCode::kOutOfRange, "arc mask has bits beyond n(n-1)");
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && ((mask >> pair_index(n, u, v)) & 1U)) g.set(u, v);
    }
  }
  g.arc_count_ = static_cast<std::size_t>(std::popcount(mask));
  return g;
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  if (from < 1 || from > n_ || to < 1 || to > n_) return false;
  return test(from - 1, to - 1);
}

std::size_t Digraph::out_degree(Vertex v) const {
  std::size_t d = 0;
  for (Word w : row(v - 1)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Digraph::in_degree(Vertex v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u) d += test(u, v - 1) ? 1 : 0;
  return d;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (test(u, v)) out.push_back({static_cast<Vertex>(u + 1), static_cast<Vertex>(v + 1)});
    }
  }
  return out;
}

std::uint64_t Digraph::arc_mask() const {
  if (n_ > kMaxMaskVertices) {
    throw Error(ErrorCode::kTooLarge, "arc masks support at most 8 vertices");
  }
  std::uint64_t mask = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (test(u, v)) mask |= std::uint64_t{1} << pair_index(n_, u, v);
    }
  }
  return mask;
}

Digraph Digraph::with_arc(Arc arc) const {
  check_endpoints(n_, arc);
  if (test(arc.from - 1, arc.to - 1)) {
    throw Error(ErrorCode::kArcPresent, "arc " + arc_text(arc) + " is already present");
  }
  Digraph g = *this;
  g.set(arc.from - 1, arc.to - 1);
  ++g.arc_count_;
  return g;
}

Digraph reverse(const Digraph& g) {
  Digraph r(g.n_);
  for (std::size_t u = 0; u < g.n_; ++u) {
    for (std::size_t v = 0; v < g.n_; ++v) {
      if (g.test(u, v)) r.set(v, u);
    }
  }
  r.arc_count_ = g.arc_count_;
  return r;
}

std::vector<Digraph::Word> reachability_rows(const Digraph& g) {
  const std::size_t n = g.n();
  const std::size_t words = g.words_per_row();
  std::vector<Digraph::Word> reach(n * words, 0);
  std::vector<Digraph::Word> frontier(words);
  std::vector<Digraph::Word> next(words);
  for (std::size_t s = 0; s < n; ++s) {
    Digraph::Word* seen = reach.data() + s * words;
    std::fill(frontier.begin(), frontier.end(), 0);
    seen[s / 64] |= Digraph::Word{1} << (s % 64);
    frontier[s / 64] |= Digraph::Word{1} << (s % 64);
    bool any = true;
    while (any) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t w = 0; w < words; ++w) {
        for (Digraph::Word bits = frontier[w]; bits != 0; bits &= bits - 1) {
          const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          const auto r = g.row(u);
          for (std::size_t x = 0; x < words; ++x) next[x] |= r[x];
        }
      }
      any = false;
      for (std::size_t w = 0; w < words; ++w) {
        next[w] &= ~seen[w];
        seen[w] |= next[w];
        any = any || next[w] != 0;
      }
      frontier.swap(next);
    }
  }
  return reach;
}

Digraph transitive_closure(const Digraph& g) {
  Digraph c(g.n_);
  c.bits_ = reachability_rows(g);
  std::size_t count = 0;
  for (std::size_t u = 0; u < g.n_; ++u) {
    c.bits_[u * c.words_ + u / 64] &= ~(Digraph::Word{1} << (u % 64));
    for (Digraph::Word w : c.row(u)) count += static_cast<std::size_t>(std::popcount(w));
  }
  c.arc_count_ = count;
  return c;
}

Digraph relabel(const Digraph& g, std::span<const Vertex> new_label) {
  if (new_label.size() != g.n_) {
    throw Error(ErrorCode::kSizeMismatch, "relabeling must name every vertex once");
  }
  std::vector<bool> used(g.n_, false);
  for (Vertex v : new_label) {
    if (v < 1 || v > g.n_ || used[v - 1]) {
      throw Error(ErrorCode::kOutOfRange, "relabeling is not a permutation of 1..n");
    }
    used[v - 1] = true;
  }
  Digraph r(g.n_);
  for (std::size_t u = 0; u < g.n_; ++u) {
    for (std::size_t v = 0; v < g.n_; ++v) {
      if (g.test(u, v)) r.set(new_label[u] - 1, new_label[v] - 1);
    }
  }
  r.arc_count_ = g.arc_count_;
  return r;
}

Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> vertices) {
  Digraph s = Digraph::empty(vertices.size());
  std::vector<bool> used(g.n_, false);
  for (Vertex v : vertices) {
    if (v < 1 || v > g.n_ || used[v - 1]) {
      throw Error(ErrorCode::kOutOfRange, "induced subgraph needs distinct vertices in 1..n");
    }
    used[v - 1] = true;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (i != j && g.test(vertices[i] - 1, vertices[j] - 1)) {
        s.set(i, j);
        ++s.arc_count_;
      }
    }
  }
  return s;
}

}  // namespace critdg
