#include "critdg/condensation.hpp"

#include <bit>
#include <queue>

namespace critdg {
namespace {

using Word = Digraph::Word;

bool test_bit(const std::vector<Word>& rows, std::size_t words, std::size_t u, std::size_t v) {
  return (rows[u * words + v / 64] >> (v % 64)) & 1U;
}

}  // namespace

Condensation condensation(const Digraph& g) {
  const std::size_t n = g.n();
  const std::size_t words = g.words_per_row();
  const std::vector<Word> reach = reachability_rows(g);

  // Mutual reachability classes; scanning v in increasing order makes the
  // class representative its smallest vertex.
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw_class(n, kUnassigned);
  std::vector<std::vector<Vertex>> raw_members;
  for (std::size_t v = 0; v < n; ++v) {
    if (raw_class[v] != kUnassigned) continue;
    const std::size_t id = raw_members.size();
    raw_members.emplace_back();
    for (std::size_t u = v; u < n; ++u) {
      if (raw_class[u] == kUnassigned && test_bit(reach, words, v, u) &&
          test_bit(reach, words, u, v)) {
        raw_class[u] = id;
        raw_members.back().push_back(static_cast<Vertex>(u + 1));
      }
    }
  }

  const std::size_t k = raw_members.size();
  std::vector<std::vector<bool>> raw_arc(k, std::vector<bool>(k, false));
  for (const Arc& a : g.arcs()) {
    const std::size_t i = raw_class[a.from - 1];
    const std::size_t j = raw_class[a.to - 1];
    if (i != j) raw_arc[i][j] = true;
  }

  // Kahn's algorithm; raw ids are already ordered by smallest member.
  std::vector<std::size_t> indegree(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) indegree[j] += raw_arc[i][j] ? 1 : 0;
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < k; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> position(k);
  Condensation c;
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    position[i] = c.components.size();
    c.components.push_back(raw_members[i]);
    c.sizes.push_back(raw_members[i].size());
    for (std::size_t j = 0; j < k; ++j) {
      if (raw_arc[i][j] && --indegree[j] == 0) ready.push(j);
    }
  }

  c.component_of.resize(n);
  for (std::size_t v = 0; v < n; ++v) c.component_of[v] = position[raw_class[v]];
  std::vector<Arc> hertz_arcs;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (raw_arc[i][j]) {
        hertz_arcs.push_back(
            {static_cast<Vertex>(position[i] + 1), static_cast<Vertex>(position[j] + 1)});
      }
    }
  }
  c.hertz = Digraph::from_arc_list(k, hertz_arcs);
  return c;
}

std::size_t bicomponent_count(const Digraph& g) {
  const std::size_t n = g.n();
  const std::size_t words = g.words_per_row();
  const std::vector<Word> reach = reachability_rows(g);
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    bool smallest = true;
    for (std::size_t u = 0; u < v && smallest; ++u) {
      smallest = !(test_bit(reach, words, v, u) && test_bit(reach, words, u, v));
    }
    count += smallest ? 1 : 0;
  }
  return count;
}

bool is_transitive(const Digraph& g) {
  const std::size_t n = g.n();
  const std::size_t words = g.words_per_row();
  for (std::size_t u = 0; u < n; ++u) {
    const auto ru = g.row(u);
    for (std::size_t w = 0; w < words; ++w) {
      for (Word bits = ru[w]; bits != 0; bits &= bits - 1) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        const auto rv = g.row(v);
        for (std::size_t x = 0; x < words; ++x) {
          Word need = rv[x];
          if (x == u / 64) need &= ~(Word{1} << (u % 64));
          if ((need & ~ru[x]) != 0) return false;
        }
      }
    }
  }
  return true;
}

StructureFlags structure_flags(const Digraph& g) {
  const std::size_t n = g.n();
  const std::size_t components = bicomponent_count(g);
  StructureFlags f;
  f.is_acyclic = components == n;
  f.is_transitive = is_transitive(g);
  f.is_complete_symmetric = g.arc_count() == n * (n - 1);
  f.is_transitive_tournament = f.is_acyclic && f.is_transitive && g.arc_count() == n * (n - 1) / 2;
  f.is_biconnected = components == 1;
  return f;
}

}  // namespace critdg
