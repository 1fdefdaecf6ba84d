#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "critdg/digraph.hpp"
#include "critdg/error.hpp"

namespace critdg::testing {

template <typename F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << error_code_name(code) << ", nothing thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

inline Digraph random_digraph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Arc> arcs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v && coin(rng)) arcs.push_back({u, v});
    }
  }
  return Digraph::from_arc_list(n, arcs);
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Vertex>(i + 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Digraph cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 1; v <= n; ++v) arcs.push_back({v, static_cast<Vertex>(v % n + 1)});
  return Digraph::from_arc_list(n, arcs);
}

inline Digraph complete(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return Digraph::from_arc_list(n, arcs);
}

}  // namespace critdg::testing
