#pragma once

#include <cstddef>
#include <vector>

#include "critdg/digraph.hpp"
#include "critdg/distance.hpp"

namespace critdg {

/// Square matrix of distances indexed by 1-based vertex labels.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t n() const { return n_; }
  Distance at(Vertex x, Vertex y) const { return cells_[(x - 1) * n_ + (y - 1)]; }
  void set(Vertex x, Vertex y, Distance d) { cells_[(x - 1) * n_ + (y - 1)] = d; }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> cells_;
};

/// Shortest-path arc counts by breadth-first search from every source.
DistanceMatrix all_pairs_distances(const Digraph& g);

/// The four metric functionals: diameter d, quasi-diameter d_m, radius r and
/// quasi-radius r_m. For a single vertex all four are 0.
struct Invariants {
  Distance d;
  Distance d_m;
  Distance r;
  Distance r_m;

  bool operator==(const Invariants&) const = default;
};

struct MetricProfile {
  DistanceMatrix rho;
  DistanceMatrix rho_m;  // min(rho(x,y), rho(y,x))
  Invariants invariants;
  std::vector<Distance> ecc_out;  // index v-1: max over row v of rho
  std::vector<Distance> ecc_m;    // index v-1: max over row v of rho_m

  Distance d() const { return invariants.d; }
  Distance d_m() const { return invariants.d_m; }
  Distance r() const { return invariants.r; }
  Distance r_m() const { return invariants.r_m; }
};

MetricProfile metric_profile(const Digraph& g);

/// Same four values as metric_profile(g).invariants.
Invariants metric_invariants(const Digraph& g);

struct CenterSets {
  std::vector<Vertex> centers;        // ecc_out == r, only when r is finite
  std::vector<Vertex> quasi_centers;  // finite ecc_m
};

CenterSets centers_and_quasicenters(const Digraph& g);

}  // namespace critdg
