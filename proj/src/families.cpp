#include "critdg/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "critdg/condensation.hpp"
#include "critdg/error.hpp"
#include "critdg/metrics.hpp"

namespace critdg {
namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::kInvalidSpec, what); }

Vertex label(std::size_t zero_based) { return static_cast<Vertex>(zero_based + 1); }

Digraph gamma_k(std::size_t k) {
  if (k < 1) invalid("GammaK needs k >= 1");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) arcs.push_back({label(i), label(j)});
  }
  return Digraph::from_arc_list(k, arcs);
}

Digraph gamma_ki(std::size_t k, std::size_t i) {
  if (k < 2 || i < 1 || i > k - 1) invalid("GammaKI needs k >= 2 and 1 <= i <= k-1");
  std::vector<Arc> arcs;
  for (Vertex s = 1; s <= k; ++s) {
    for (Vertex j = s + 1; j <= k; ++j) {
      if (!(s == i && j == i + 1)) arcs.push_back({s, j});
    }
  }
  return Digraph::from_arc_list(k, arcs);
}

// GammaK0 on labels offset+1..offset+k appended to arcs.
void append_gamma_k0(std::vector<Arc>& arcs, std::size_t offset, std::size_t k) {
  for (std::size_t i = 2; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      arcs.push_back({static_cast<Vertex>(offset + i), static_cast<Vertex>(offset + j)});
    }
  }
}

Digraph gamma_k0(std::size_t k) {
  if (k < 1) invalid("GammaK0 needs k >= 1");
  std::vector<Arc> arcs;
  append_gamma_k0(arcs, 0, k);
  return Digraph::from_arc_list(k, arcs);
}

Digraph gamma_partition(const GammaPartition& spec) {
  if (spec.block_sizes.empty()) invalid("GammaPartition needs at least one block");
  for (std::size_t size : spec.block_sizes) {
    if (size < 2) invalid("GammaPartition blocks must have at least 2 vertices");
  }
  const std::size_t total = std::accumulate(spec.block_sizes.begin(), spec.block_sizes.end(),
                                            std::size_t{0});
  if (total != spec.k) invalid("GammaPartition block sizes must sum to k");
  std::vector<Arc> arcs;
  std::size_t offset = 0;
  for (std::size_t b = 0; b < spec.block_sizes.size(); ++b) {
    const std::size_t size = spec.block_sizes[b];
    append_gamma_k0(arcs, offset, size);
    for (std::size_t u = offset; u < offset + size; ++u) {
      for (std::size_t v = offset + size; v < total; ++v) arcs.push_back({label(u), label(v)});
    }
    offset += size;
  }
  return Digraph::from_arc_list(total, arcs);
}

void validate(const MaximalRadius& s) {
  if (s.k < 3) invalid("MaximalRadius needs k >= 3");
  if (s.n < s.k + 1) invalid("MaximalRadius needs n >= k+1");
  if (s.a < 1) invalid("MaximalRadius needs a >= 1");
  if (s.position < 2) invalid("MaximalRadius needs position p >= 2");
  if (s.b == 0) {
    if (s.position > s.k) invalid("MaximalRadius with b = 0 needs p <= k");
    if (s.a != s.n - s.k) invalid("MaximalRadius with b = 0 needs a = n-k");
  } else {
    if (s.position + 1 > s.k) invalid("MaximalRadius with b >= 1 needs p+1 <= k");
    if (s.a + s.b != s.n - s.k + 1) invalid("MaximalRadius with b >= 1 needs a+b = n-k+1");
  }
}

Digraph maximal_qd3(const MaximalQD3& spec) {
  const auto& x = spec.sizes;
  if (x[0] * x[1] + x[2] * x[3] == 0) invalid("MaximalQD3 needs |X1||X2| + |X3||X4| > 0");
  const std::size_t core = x[0] + x[1] + x[2] + x[3];
  const std::size_t n = core + 2;
  const Vertex z = 1;
  const Vertex v = static_cast<Vertex>(n);
  std::array<Vertex, 5> start{};  // first label of X1..X4, then v
  start[0] = 2;
  for (std::size_t i = 0; i < 4; ++i) start[i + 1] = static_cast<Vertex>(start[i] + x[i]);
  std::vector<Arc> arcs;
  for (Vertex a = 2; a < v; ++a) {
    for (Vertex b = 2; b < v; ++b) {
      if (a != b) arcs.push_back({a, b});
    }
  }
  for (Vertex a = start[0]; a < start[1]; ++a) {
    arcs.push_back({z, a});
    arcs.push_back({a, z});
  }
  for (Vertex a = start[1]; a < start[2]; ++a) {
    arcs.push_back({v, a});
    arcs.push_back({a, v});
  }
  for (Vertex a = start[2]; a < start[3]; ++a) {
    arcs.push_back({a, z});
    arcs.push_back({a, v});
  }
  for (Vertex a = start[3]; a < start[4]; ++a) {
    arcs.push_back({z, a});
    arcs.push_back({v, a});
  }
  return Digraph::from_arc_list(n, arcs);
}

}  // namespace

Digraph blow_up(const Digraph& hertz, const std::vector<std::size_t>& sizes) {
  if (sizes.size() != hertz.n()) {
    throw Error(ErrorCode::kSizeMismatch, "blow-up needs one size per Hertz vertex");
  }
  if (std::find(sizes.begin(), sizes.end(), std::size_t{0}) != sizes.end()) {
    throw Error(ErrorCode::kZeroSize, "blow-up block sizes must be positive");
  }
  if (bicomponent_count(hertz) != hertz.n()) {
    throw Error(ErrorCode::kCyclicHertz, "blow-up needs an acyclic Hertz graph");
  }
  std::vector<std::size_t> start(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) start[i + 1] = start[i] + sizes[i];
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t u = start[i]; u < start[i + 1]; ++u) {
      for (std::size_t v = start[i]; v < start[i + 1]; ++v) {
        if (u != v) arcs.push_back({label(u), label(v)});
      }
    }
  }
  for (const Arc& h : hertz.arcs()) {
    for (std::size_t u = start[h.from - 1]; u < start[h.from]; ++u) {
      for (std::size_t v = start[h.to - 1]; v < start[h.to]; ++v) {
        arcs.push_back({label(u), label(v)});
      }
    }
  }
  return Digraph::from_arc_list(start.back(), arcs);
}

Digraph maximal_radius_digraph(const MaximalRadius& spec) {
  validate(spec);
  const std::size_t blocks = spec.k + 1;
  std::vector<std::size_t> sizes(blocks, 1);
  sizes[spec.position - 1] = spec.a;
  if (spec.b > 0) sizes[spec.position] = spec.b;
  std::vector<std::size_t> start(blocks + 1, 0);
  for (std::size_t i = 0; i < blocks; ++i) start[i + 1] = start[i] + sizes[i];
  auto connect = [&](std::vector<Arc>& arcs, std::size_t from, std::size_t to) {
    for (std::size_t u = start[from]; u < start[from + 1]; ++u) {
      for (std::size_t v = start[to]; v < start[to + 1]; ++v) {
        if (u != v) arcs.push_back({label(u), label(v)});
      }
    }
  };
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < blocks; ++i) connect(arcs, i, i);
  for (std::size_t i = 0; i + 1 < blocks; ++i) connect(arcs, i, i + 1);
  // Back arcs X_j -> X_i for 1 < i < j <= k+1, i.e. 0-based 1 <= i < j <= k.
  for (std::size_t i = 1; i < blocks; ++i) {
    for (std::size_t j = i + 1; j < blocks; ++j) connect(arcs, j, i);
  }
  return Digraph::from_arc_list(start.back(), arcs);
}

Digraph maximal_quasidiameter_digraph(const FamilySpec& spec) {
  std::size_t k = 0;
  Digraph g = Digraph::empty(1);
  if (const auto* r = std::get_if<MaximalRadius>(&spec)) {
    g = maximal_radius_digraph(*r);
    k = r->k;
  } else if (const auto* rr = std::get_if<ReversedMaximalRadius>(&spec)) {
    g = reverse(maximal_radius_digraph(rr->base));
    k = rr->base.k;
  } else if (const auto* q = std::get_if<MaximalQD3>(&spec)) {
    g = maximal_qd3(*q);
    k = 3;
  } else {
    invalid("maximal quasi-diameter digraphs come from MaximalRadius, ReversedMaximalRadius or "
            "MaximalQD3");
  }
  const Distance dm = metric_invariants(g).d_m;
  if (dm != Distance(static_cast<std::uint32_t>(k))) {
    invalid("construction has quasi-diameter " + dm.to_string() + ", expected " +
            std::to_string(k));
  }
  return g;
}

Digraph build_family(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Digraph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GammaK>) {
          return gamma_k(s.k);
        } else if constexpr (std::is_same_v<T, GammaKI>) {
          return gamma_ki(s.k, s.i);
        } else if constexpr (std::is_same_v<T, GammaK0>) {
          return gamma_k0(s.k);
        } else if constexpr (std::is_same_v<T, D4>) {
          return Digraph::from_arc_list(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
        } else if constexpr (std::is_same_v<T, GammaPartition>) {
          return gamma_partition(s);
        } else if constexpr (std::is_same_v<T, BlowUp>) {
          return blow_up(s.hertz, s.sizes);
        } else if constexpr (std::is_same_v<T, MaximalRadius>) {
          return maximal_radius_digraph(s);
        } else if constexpr (std::is_same_v<T, ReversedMaximalRadius>) {
          return reverse(maximal_radius_digraph(s.base));
        } else {
          return maximal_qd3(s);
        }
      },
      spec);
}

std::vector<MaximalRadius> maximal_radius_specs(std::size_t n, std::size_t k) {
  std::vector<MaximalRadius> out;
  if (k < 3 || n < k + 1) return out;
  for (std::size_t p = 2; p <= k; ++p) out.push_back({n, k, p, n - k, 0});
  for (std::size_t p = 2; p + 1 <= k; ++p) {
    for (std::size_t a = 1; a <= n - k; ++a) out.push_back({n, k, p, a, n - k + 1 - a});
  }
  return out;
}

std::vector<MaximalQD3> maximal_qd3_specs(std::size_t core) {
  std::vector<MaximalQD3> out;
  for (std::size_t x1 = 0; x1 <= core; ++x1) {
    for (std::size_t x2 = 0; x1 + x2 <= core; ++x2) {
      for (std::size_t x3 = 0; x1 + x2 + x3 <= core; ++x3) {
        const std::size_t x4 = core - x1 - x2 - x3;
        if (x1 * x2 + x3 * x4 > 0) out.push_back({{x1, x2, x3, x4}});
      }
    }
  }
  return out;
}

std::optional<std::vector<std::size_t>> recognize_partition_structure(const Digraph& h) {
  const std::size_t k = h.n();
  if (k < 2 || bicomponent_count(h) != k) return std::nullopt;

  // Pairs joined by no arc; in the partition structure these form one star
  // per block, centred at the block's isolated vertex.
  std::vector<std::vector<std::size_t>> incomparable(k);
  for (Vertex u = 1; u <= k; ++u) {
    for (Vertex v = u + 1; v <= k; ++v) {
      if (!h.has_arc(u, v) && !h.has_arc(v, u)) {
        incomparable[u - 1].push_back(v - 1);
        incomparable[v - 1].push_back(u - 1);
      }
    }
  }
  std::vector<int> block_of(k, -1);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t s = 0; s < k; ++s) {
    if (block_of[s] >= 0) continue;
    blocks.emplace_back();
    std::vector<std::size_t> stack{s};
    block_of[s] = static_cast<int>(blocks.size() - 1);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      blocks.back().push_back(u);
      for (std::size_t v : incomparable[u]) {
        if (block_of[v] < 0) {
          block_of[v] = static_cast<int>(blocks.size() - 1);
          stack.push_back(v);
        }
      }
    }
  }

  struct Block {
    std::vector<std::size_t> order;  // isolated vertex first, then the tournament
    std::size_t cross_out = 0;
  };
  std::vector<Block> ordered;
  for (auto& members : blocks) {
    if (members.size() < 2) return std::nullopt;
    auto centre = std::max_element(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return incomparable[a].size() < incomparable[b].size();
    });
    std::swap(*centre, members.front());
    std::vector<std::size_t> inner_out(k, 0);
    for (std::size_t u : members) {
      for (std::size_t v : members) inner_out[u] += h.has_arc(label(u), label(v)) ? 1 : 0;
    }
    std::stable_sort(members.begin() + 1, members.end(),
                     [&](std::size_t a, std::size_t b) { return inner_out[a] > inner_out[b]; });
    Block b;
    b.order = members;
    b.cross_out = h.out_degree(label(members.front()));
    ordered.push_back(std::move(b));
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Block& a, const Block& b) { return a.cross_out > b.cross_out; });

  GammaPartition spec{k, {}};
  std::vector<Vertex> new_label(k);
  std::size_t next = 0;
  for (const Block& b : ordered) {
    spec.block_sizes.push_back(b.order.size());
    for (std::size_t u : b.order) new_label[u] = label(next++);
  }
  if (relabel(h, new_label) != gamma_partition(spec)) return std::nullopt;
  return spec.block_sizes;
}

HertzClassification recognize_hertz_family(const Digraph& h) {
  HertzClassification c;
  const std::size_t k = h.n();
  c.k = k;
  const StructureFlags flags = structure_flags(h);
  if (flags.is_transitive_tournament) c.transitive_tournament = k;

  if (k >= 2 && flags.is_acyclic && h.arc_count() + 1 == k * (k - 1) / 2) {
    std::optional<Arc> gap;
    for (Vertex u = 1; u <= k && !gap; ++u) {
      for (Vertex v = u + 1; v <= k && !gap; ++v) {
        if (!h.has_arc(u, v) && !h.has_arc(v, u)) gap = Arc{u, v};
      }
    }
    if (gap) {
      for (const Arc& fill : {*gap, Arc{gap->to, gap->from}}) {
        const Digraph t = h.with_arc(fill);
        if (!structure_flags(t).is_transitive_tournament) continue;
        // In a transitive tournament vertex x sits at position k - outdeg(x).
        const std::size_t pos_from = k - t.out_degree(fill.from);
        const std::size_t pos_to = k - t.out_degree(fill.to);
        if (pos_to == pos_from + 1) c.gamma_ki = pos_from;
      }
    }
  }

  c.partition_blocks = recognize_partition_structure(h);
  if (c.partition_blocks) {
    c.gamma_k0 = c.partition_blocks->size() == 1;
    c.d4 = *c.partition_blocks == std::vector<std::size_t>{2, 2};
  }
  return c;
}

std::string HertzClassification::label() const {
  std::ostringstream os;
  if (transitive_tournament) {
    os << "TransitiveTournament(" << *transitive_tournament << ")";
  } else if (d4) {
    os << "D4";
  } else if (gamma_k0) {
    os << "GammaK0(" << partition_blocks->front() << ")";
  } else if (gamma_ki) {
    os << "GammaKI(" << k << "," << *gamma_ki << ")";
  } else if (partition_blocks) {
    os << "Partition(";
    for (std::size_t i = 0; i < partition_blocks->size(); ++i) {
      os << (i ? "," : "") << (*partition_blocks)[i];
    }
    os << ")";
  } else {
    os << "None";
  }
  return os.str();
}

std::string describe(const FamilySpec& spec) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GammaK>) {
          os << "GammaK{k=" << s.k << "}";
        } else if constexpr (std::is_same_v<T, GammaKI>) {
          os << "GammaKI{k=" << s.k << ",i=" << s.i << "}";
        } else if constexpr (std::is_same_v<T, GammaK0>) {
          os << "GammaK0{k=" << s.k << "}";
        } else if constexpr (std::is_same_v<T, D4>) {
          os << "D4";
        } else if constexpr (std::is_same_v<T, GammaPartition>) {
          os << "GammaPartition{k=" << s.k << ",sizes=";
          for (std::size_t i = 0; i < s.block_sizes.size(); ++i) {
            os << (i ? "," : "") << s.block_sizes[i];
          }
          os << "}";
        } else if constexpr (std::is_same_v<T, BlowUp>) {
          os << "BlowUp{hertz_n=" << s.hertz.n() << ",sizes=";
          for (std::size_t i = 0; i < s.sizes.size(); ++i) os << (i ? "," : "") << s.sizes[i];
          os << "}";
        } else if constexpr (std::is_same_v<T, MaximalRadius>) {
          os << "MaximalRadius{n=" << s.n << ",k=" << s.k << ",p=" << s.position << ",split=" << s.a
             << "," << s.b << "}";
        } else if constexpr (std::is_same_v<T, ReversedMaximalRadius>) {
          os << "ReversedMaximalRadius{n=" << s.base.n << ",k=" << s.base.k
             << ",p=" << s.base.position << ",split=" << s.base.a << "," << s.base.b << "}";
        } else {
          os << "MaximalQD3{" << s.sizes[0] << "," << s.sizes[1] << "," << s.sizes[2] << ","
             << s.sizes[3] << "}";
        }
      },
      spec);
  return os.str();
}

}  // namespace critdg
