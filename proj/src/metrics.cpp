#include "critdg/metrics.hpp"

#include <algorithm>
#include <bit>

namespace critdg {
namespace {

using Word = Digraph::Word;

// Level-synchronous BFS over bit rows; level[v] stays infinite when v is
// unreachable from the source.
void bfs_levels(const Digraph& g, std::size_t source, std::vector<Distance>& level,
                std::vector<Word>& seen, std::vector<Word>& frontier, std::vector<Word>& next) {
  const std::size_t words = g.words_per_row();
  std::fill(level.begin(), level.end(), Distance::infinity());
  std::fill(seen.begin(), seen.end(), 0);
  std::fill(frontier.begin(), frontier.end(), 0);
  seen[source / 64] |= Word{1} << (source % 64);
  frontier[source / 64] |= Word{1} << (source % 64);
  level[source] = Distance(0);
  for (std::uint32_t depth = 1;; ++depth) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      for (Word bits = frontier[w]; bits != 0; bits &= bits - 1) {
        const auto r = g.row(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        for (std::size_t x = 0; x < words; ++x) next[x] |= r[x];
      }
    }
    bool any = false;
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= ~seen[w];
      seen[w] |= next[w];
      for (Word bits = next[w]; bits != 0; bits &= bits - 1) {
        level[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))] = Distance(depth);
        any = true;
      }
    }
    if (!any) break;
    frontier.swap(next);
  }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Digraph& g) {
  const std::size_t n = g.n();
  const std::size_t words = g.words_per_row();
  DistanceMatrix rho(n);
  std::vector<Distance> level(n);
  std::vector<Word> seen(words), frontier(words), next(words);
  for (std::size_t s = 0; s < n; ++s) {
    bfs_levels(g, s, level, seen, frontier, next);
    for (std::size_t t = 0; t < n; ++t) {
      rho.set(static_cast<Vertex>(s + 1), static_cast<Vertex>(t + 1), level[t]);
    }
  }
  return rho;
}

MetricProfile metric_profile(const Digraph& g) {
  const std::size_t n = g.n();
  MetricProfile p;
  p.rho = all_pairs_distances(g);
  p.rho_m = DistanceMatrix(n);
  p.ecc_out.assign(n, Distance(0));
  p.ecc_m.assign(n, Distance(0));
  for (Vertex x = 1; x <= n; ++x) {
    for (Vertex y = 1; y <= n; ++y) {
      const Distance m = std::min(p.rho.at(x, y), p.rho.at(y, x));
      p.rho_m.set(x, y, m);
      p.ecc_out[x - 1] = std::max(p.ecc_out[x - 1], p.rho.at(x, y));
      p.ecc_m[x - 1] = std::max(p.ecc_m[x - 1], m);
    }
  }
  // Diagonal entries are 0, so for n = 1 every maximum and minimum below is 0.
  Invariants& inv = p.invariants;
  inv.d = *std::max_element(p.ecc_out.begin(), p.ecc_out.end());
  inv.d_m = *std::max_element(p.ecc_m.begin(), p.ecc_m.end());
  inv.r = *std::min_element(p.ecc_out.begin(), p.ecc_out.end());
  inv.r_m = *std::min_element(p.ecc_m.begin(), p.ecc_m.end());
  return p;
}

Invariants metric_invariants(const Digraph& g) { return metric_profile(g).invariants; }

CenterSets centers_and_quasicenters(const Digraph& g) {
  const MetricProfile p = metric_profile(g);
  CenterSets sets;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (p.r().is_finite() && p.ecc_out[v - 1] == p.r()) sets.centers.push_back(v);
    if (p.ecc_m[v - 1].is_finite()) sets.quasi_centers.push_back(v);
  }
  return sets;
}

}  // namespace critdg
