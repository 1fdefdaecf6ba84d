#include "critdg/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "critdg/condensation.hpp"
#include "critdg/error.hpp"
#include "critdg/metrics.hpp"

namespace critdg {

namespace {

__extension__ typedef unsigned __int128 Key;

std::uint64_t mask_count(std::size_t n) { return std::uint64_t{1} << (n * (n - 1)); }

void check_enumerable(std::size_t n) {
  if (n > kMaxEnumerationVertices) {
    throw Error(ErrorCode::kTooLarge, "enumeration supports n <= " +
                                          std::to_string(kMaxEnumerationVertices) + ", got " +
                                          std::to_string(n));
  }
  if (n < 2) throw Error(ErrorCode::kOutOfRange, "enumeration needs n >= 2");
}

// Small-graph kernel: out-neighbour rows as bytes, n <= 5.
struct SmallGraph {
  std::size_t n = 0;
  std::array<std::uint8_t, 8> out{};
};

SmallGraph decode(std::size_t n, std::uint64_t mask) {
  SmallGraph g;
  g.n = n;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if ((mask >> bit) & 1U) g.out[u] |= static_cast<std::uint8_t>(1U << v);
      ++bit;
    }
  }
  return g;
}

constexpr std::uint8_t kInf = MaskFeatures::kInfinite;

MaskFeatures kernel(std::size_t n, std::uint64_t mask) {
  const SmallGraph g = decode(n, mask);
  std::uint8_t dist[8][8];
  std::uint8_t reach[8];
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) dist[s][t] = kInf;
    dist[s][s] = 0;
    std::uint8_t seen = static_cast<std::uint8_t>(1U << s);
    std::uint8_t frontier = seen;
    std::uint8_t level = 0;
    while (frontier) {
      ++level;
      std::uint8_t next = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if ((frontier >> u) & 1U) next |= g.out[u];
      }
      next &= static_cast<std::uint8_t>(~seen);
      for (std::size_t t = 0; t < n; ++t) {
        if ((next >> t) & 1U) dist[s][t] = level;
      }
      seen |= next;
      frontier = next;
    }
    reach[s] = seen;
  }

  MaskFeatures f;
  std::uint8_t assigned = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if ((assigned >> v) & 1U) continue;
    std::uint8_t cls = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (((reach[v] >> w) & 1U) && ((reach[w] >> v) & 1U)) cls |= static_cast<std::uint8_t>(1U << w);
    }
    assigned |= cls;
    ++f.bicomponents;
  }

  std::uint8_t d = 0, dm = 0, r = kInf, rm = kInf;
  for (std::size_t s = 0; s < n; ++s) {
    std::uint8_t ecc = 0, ecc_m = 0;
    for (std::size_t t = 0; t < n; ++t) {
      ecc = std::max(ecc, dist[s][t]);
      ecc_m = std::max(ecc_m, std::min(dist[s][t], dist[t][s]));
    }
    d = std::max(d, ecc);
    dm = std::max(dm, ecc_m);
    r = std::min(r, ecc);
    rm = std::min(rm, ecc_m);
  }
  f.d = d;
  f.d_m = dm;
  f.r = r;
  f.r_m = rm;
  return f;
}

// Runs body(begin, end, chunk) over contiguous chunks of [0, total) and returns
// the per-chunk results in chunk order.
template <typename Result, typename Body>
std::vector<Result> scan_chunks(std::uint64_t total, std::size_t workers, Body body) {
  const std::size_t chunks = std::max<std::size_t>(
      1, std::min<std::uint64_t>(resolve_workers(workers), total));
  std::vector<Result> results(chunks);
  auto run = [&](std::size_t c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    results[c] = body(begin, end);
  };
  if (chunks == 1) {
    run(0);
    return results;
  }
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) threads.emplace_back(run, c);
  for (std::thread& t : threads) t.join();
  return results;
}

bool is_transitive_small(const SmallGraph& g) {
  for (std::size_t u = 0; u < g.n; ++u) {
    std::uint8_t two_step = 0;
    for (std::size_t v = 0; v < g.n; ++v) {
      if ((g.out[u] >> v) & 1U) two_step |= g.out[v];
    }
    two_step &= static_cast<std::uint8_t>(~(1U << u));
    if ((two_step & ~g.out[u]) != 0) return false;
  }
  return true;
}

Distance to_distance(std::uint8_t v) {
  return v == kInf ? Distance::infinity() : Distance(v);
}

Key canonical_key(const Digraph& g);

struct CompiledPredicate {
  std::size_t n = 0;
  const Predicate* pred = nullptr;
  const std::vector<MaskFeatures>* table = nullptr;
  std::vector<Key> hertz_keys;  // one per hertz atom, in atom order
  std::vector<std::size_t> hertz_sizes;

  bool operator()(std::uint64_t mask) const {
    const MaskFeatures& f = (*table)[mask];
    bool needs_graph = false;
    for (const Atom& a : pred->atoms) {
      switch (a.kind) {
        case Atom::Kind::kMetric:
          if (to_distance(f.value(a.invariant)) != a.value) return false;
          break;
        case Atom::Kind::kBicomponents:
          if (f.bicomponents != a.count) return false;
          break;
        case Atom::Kind::kArcs:
          if (static_cast<std::size_t>(std::popcount(mask)) != a.count) return false;
          break;
        case Atom::Kind::kCritical:
          if (!f.is_critical(a.invariant)) return false;
          break;
        case Atom::Kind::kBiconnected:
          if (f.bicomponents != 1) return false;
          break;
        case Atom::Kind::kTransitive:
          if (!is_transitive_small(decode(n, mask))) return false;
          break;
        case Atom::Kind::kHertzIsomorphicTo:
          needs_graph = true;
          break;
      }
    }
    if (!needs_graph) return true;
    const Digraph hertz = condensation(Digraph::from_arc_mask(n, mask)).hertz;
    std::size_t next = 0;
    for (const Atom& a : pred->atoms) {
      if (a.kind != Atom::Kind::kHertzIsomorphicTo) continue;
      const std::size_t i = next++;
      if (hertz.n() != hertz_sizes[i] || canonical_key(hertz) != hertz_keys[i]) return false;
    }
    return true;
  }
};

CompiledPredicate compile(std::size_t n, const Predicate& pred, ScanOptions opts) {
  check_enumerable(n);
  CompiledPredicate c;
  c.n = n;
  c.pred = &pred;
  c.table = &feature_table(n, opts);
  for (const Atom& a : pred.atoms) {
    if (a.kind != Atom::Kind::kHertzIsomorphicTo) continue;
    if (!a.family) throw Error(ErrorCode::kInvalidSpec, "hertz atom without a family");
    const Digraph h = build_family(*a.family);
    c.hertz_keys.push_back(canonical_key(h));
    c.hertz_sizes.push_back(h.n());
  }
  return c;
}

// Canonical key: bit (P-1-i) holds pair i, so numeric order equals the
// lexicographic order of the bit string.
Key canonical_key(const Digraph& g) {
  const std::size_t n = g.n();
  if (n > kMaxCanonicalVertices) {
    throw Error(ErrorCode::kTooLarge, "canonical form supports n <= " +
                                          std::to_string(kMaxCanonicalVertices) + ", got " +
                                          std::to_string(n));
  }
  if (n <= 1) return 0;
  std::array<std::uint16_t, 16> rows{};
  for (std::size_t u = 0; u < n; ++u) rows[u] = static_cast<std::uint16_t>(g.row(u)[0]);

  const std::size_t pairs = n * (n - 1);
  std::array<std::uint8_t, 16> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  bool have_best = false;
  Key best = 0;
  do {
    // New vertex i is old vertex perm[i].
    Key key = 0;
    std::size_t idx = 0;
    bool below = !have_best;
    bool abort = false;
    for (std::size_t i = 0; i < n && !abort; ++i) {
      const std::uint16_t row = rows[perm[i]];
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const unsigned bit = (row >> perm[j]) & 1U;
        const std::size_t shift = pairs - 1 - idx;
        if (!below) {
          const unsigned best_bit = static_cast<unsigned>((best >> shift) & 1U);
          if (bit > best_bit) {
            abort = true;
            break;
          }
          if (bit < best_bit) below = true;
        }
        key |= static_cast<Key>(bit) << shift;
        ++idx;
      }
    }
    if (!abort && below) {
      best = key;
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

std::string key_to_string(Key key, std::size_t n) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1);
  std::string out(pairs, '0');
  for (std::size_t i = 0; i < pairs; ++i) {
    if ((key >> (pairs - 1 - i)) & 1U) out[i] = '1';
  }
  return out;
}

std::vector<std::size_t> sorted_degrees(const Digraph& g) {
  std::vector<std::size_t> degs;
  degs.reserve(g.n());
  for (Vertex v = 1; v <= g.n(); ++v) degs.push_back(g.out_degree(v) * 64 + g.in_degree(v));
  std::sort(degs.begin(), degs.end());
  return degs;
}

// Predicate text helpers.
std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::string_view atom, const std::string& why) {
  throw Error(ErrorCode::kParseError, "predicate atom '" + std::string(atom) + "': " + why);
}

std::size_t parse_count(std::string_view atom, std::string_view text) {
  text = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    parse_fail(atom, "expected a nonnegative integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::size_t> parse_count_list(std::string_view atom, std::string_view text) {
  std::vector<std::size_t> out;
  while (true) {
    const std::size_t comma = text.find(',');
    out.push_back(parse_count(atom, text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

// Splits on commas outside parentheses.
std::vector<std::string_view> split_atoms(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

FamilySpec parse_hertz_family(std::string_view atom, std::string_view text) {
  text = trim(text);
  if (text == "d4") return D4{};
  const std::size_t open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') parse_fail(atom, "malformed family");
  const std::string_view name = text.substr(0, open);
  const auto args = parse_count_list(atom, text.substr(open + 1, text.size() - open - 2));
  if (name == "gamma_k" && args.size() == 1) return GammaK{args[0]};
  if (name == "gamma_k0" && args.size() == 1) return GammaK0{args[0]};
  if (name == "gamma_ki" && args.size() == 2) return GammaKI{args[0], args[1]};
  if (name == "partition") {
    return GammaPartition{std::accumulate(args.begin(), args.end(), std::size_t{0}), args};
  }
  parse_fail(atom, "unknown family '" + std::string(name) + "'");
}

std::string family_text(const FamilySpec& spec) {
  if (const auto* s = std::get_if<GammaK>(&spec)) return "gamma_k(" + std::to_string(s->k) + ")";
  if (const auto* s = std::get_if<GammaK0>(&spec)) return "gamma_k0(" + std::to_string(s->k) + ")";
  if (const auto* s = std::get_if<GammaKI>(&spec)) {
    return "gamma_ki(" + std::to_string(s->k) + "," + std::to_string(s->i) + ")";
  }
  if (std::holds_alternative<D4>(spec)) return "d4";
  if (const auto* s = std::get_if<GammaPartition>(&spec)) {
    std::string out = "partition(";
    for (std::size_t i = 0; i < s->block_sizes.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s->block_sizes[i]);
    }
    return out + ")";
  }
  return describe(spec);
}

constexpr std::pair<std::string_view, Invariant> kMetricAtoms[] = {
    {"diameter", Invariant::kD},
    {"quasi_diameter", Invariant::kDM},
    {"radius", Invariant::kR},
    {"quasi_radius", Invariant::kRM},
};

}  // namespace

std::size_t resolve_workers(std::size_t requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

DigraphEnumeration enumerate_digraphs(std::size_t n) {
  check_enumerable(n);
  return {n, mask_count(n)};
}

std::uint8_t MaskFeatures::value(Invariant inv) const {
  switch (inv) {
    case Invariant::kD: return d;
    case Invariant::kDM: return d_m;
    case Invariant::kR: return r;
    case Invariant::kRM: return r_m;
  }
  return kInfinite;
}

const std::vector<MaskFeatures>& feature_table(std::size_t n, ScanOptions opts) {
  check_enumerable(n);
  static std::mutex mutex;
  static std::array<std::unique_ptr<std::vector<MaskFeatures>>, kMaxEnumerationVertices + 1> cache;
  std::lock_guard lock(mutex);
  if (cache[n]) return *cache[n];

  const std::uint64_t total = mask_count(n);
  const std::size_t pairs = n * (n - 1);
  auto table = std::make_unique<std::vector<MaskFeatures>>(total);
  std::vector<MaskFeatures>& t = *table;
  scan_chunks<int>(total, opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t m = begin; m < end; ++m) t[m] = kernel(n, m);
    return 0;
  });
  // Criticality only reads entries of strict supersets, all filled above.
  scan_chunks<int>(total, opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t m = begin; m < end; ++m) {
      MaskFeatures& f = t[m];
      std::uint8_t crit = 0b1111;
      for (std::size_t b = 0; b < pairs && crit; ++b) {
        if ((m >> b) & 1U) continue;
        const MaskFeatures& g = t[m | (std::uint64_t{1} << b)];
        if (g.bicomponents < f.bicomponents) continue;
        for (Invariant inv : kAllInvariants) {
          if (!(g.value(inv) < f.value(inv))) crit &= static_cast<std::uint8_t>(~(1U << static_cast<int>(inv)));
        }
      }
      f.critical = crit;
    }
    return 0;
  });
  cache[n] = std::move(table);
  return *cache[n];
}

bool Predicate::evaluate(const Digraph& g) const {
  std::optional<Invariants> inv;
  auto values = [&]() -> const Invariants& {
    if (!inv) inv = metric_invariants(g);
    return *inv;
  };
  for (const Atom& a : atoms) {
    switch (a.kind) {
      case Atom::Kind::kMetric:
        if (invariant_value(values(), a.invariant) != a.value) return false;
        break;
      case Atom::Kind::kBicomponents:
        if (bicomponent_count(g) != a.count) return false;
        break;
      case Atom::Kind::kArcs:
        if (g.arc_count() != a.count) return false;
        break;
      case Atom::Kind::kCritical:
        if (!is_critical(g, a.invariant)) return false;
        break;
      case Atom::Kind::kBiconnected:
        if (bicomponent_count(g) != 1) return false;
        break;
      case Atom::Kind::kTransitive:
        if (!is_transitive(g)) return false;
        break;
      case Atom::Kind::kHertzIsomorphicTo:
        if (!a.family || !are_isomorphic(condensation(g).hertz, build_family(*a.family))) {
          return false;
        }
        break;
    }
  }
  return true;
}

std::string Predicate::to_string() const {
  if (atoms.empty()) return "true";
  std::string out;
  for (const Atom& a : atoms) {
    if (!out.empty()) out += ",";
    switch (a.kind) {
      case Atom::Kind::kMetric:
        for (const auto& [name, inv] : kMetricAtoms) {
          if (inv == a.invariant) out += std::string(name) + "=" + a.value.to_string();
        }
        break;
      case Atom::Kind::kBicomponents: out += "bicomponents=" + std::to_string(a.count); break;
      case Atom::Kind::kArcs: out += "arcs=" + std::to_string(a.count); break;
      case Atom::Kind::kCritical:
        out += "critical(" + std::string(invariant_name(a.invariant)) + ")";
        break;
      case Atom::Kind::kBiconnected: out += "biconnected"; break;
      case Atom::Kind::kTransitive: out += "transitive"; break;
      case Atom::Kind::kHertzIsomorphicTo:
        out += "hertz=" + (a.family ? family_text(*a.family) : std::string("?"));
        break;
    }
  }
  return out;
}

Predicate parse_predicate(std::string_view text) {
  Predicate pred;
  text = trim(text);
  if (text.empty() || text == "true") return pred;
  for (std::string_view atom : split_atoms(text)) {
    if (atom.empty()) parse_fail(atom, "empty atom");
    if (atom == "biconnected") {
      pred.with(Atom::biconnected());
      continue;
    }
    if (atom == "transitive") {
      pred.with(Atom::transitive());
      continue;
    }
    if (atom.starts_with("critical(") && atom.ends_with(")")) {
      const auto inv = parse_invariant(trim(atom.substr(9, atom.size() - 10)));
      if (!inv) parse_fail(atom, "unknown invariant");
      pred.with(Atom::critical(*inv));
      continue;
    }
    const std::size_t eq = atom.find('=');
    if (eq == std::string_view::npos) parse_fail(atom, "unknown atom");
    const std::string_view key = trim(atom.substr(0, eq));
    const std::string_view value = trim(atom.substr(eq + 1));
    if (key == "bicomponents") {
      pred.with(Atom::bicomponents(parse_count(atom, value)));
    } else if (key == "arcs") {
      pred.with(Atom::arcs(parse_count(atom, value)));
    } else if (key == "hertz") {
      pred.with(Atom::hertz_isomorphic_to(parse_hertz_family(atom, value)));
    } else {
      bool matched = false;
      for (const auto& [name, inv] : kMetricAtoms) {
        if (key != name) continue;
        const Distance d = value == "INF" || value == "inf"
                               ? Distance::infinity()
                               : Distance(static_cast<std::uint32_t>(parse_count(atom, value)));
        pred.with(Atom::metric(inv, d));
        matched = true;
      }
      if (!matched) parse_fail(atom, "unknown atom");
    }
  }
  return pred;
}

std::vector<std::uint64_t> satisfying_masks(std::size_t n, const Predicate& pred,
                                            ScanOptions opts) {
  const CompiledPredicate test = compile(n, pred, opts);
  auto parts = scan_chunks<std::vector<std::uint64_t>>(
      mask_count(n), opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> out;
        for (std::uint64_t m = begin; m < end; ++m) {
          if (test(m)) out.push_back(m);
        }
        return out;
      });
  std::vector<std::uint64_t> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

std::vector<std::uint64_t> filter_masks(std::size_t n, const MaskFilter& filter,
                                        ScanOptions opts) {
  check_enumerable(n);
  const std::vector<MaskFeatures>& table = feature_table(n, opts);
  auto parts = scan_chunks<std::vector<std::uint64_t>>(
      mask_count(n), opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> out;
        for (std::uint64_t m = begin; m < end; ++m) {
          if (filter(m, table)) out.push_back(m);
        }
        return out;
      });
  std::vector<std::uint64_t> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

std::uint64_t count_labeled(std::size_t n, const Predicate& pred, ScanOptions opts) {
  const CompiledPredicate test = compile(n, pred, opts);
  const auto parts = scan_chunks<std::uint64_t>(
      mask_count(n), opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t count = 0;
        for (std::uint64_t m = begin; m < end; ++m) count += test(m) ? 1 : 0;
        return count;
      });
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

ExtremalResult max_arcs_where(std::size_t n, const Predicate& pred, ScanOptions opts) {
  const CompiledPredicate test = compile(n, pred, opts);
  struct Best {
    int arcs = -1;
    std::uint64_t mask = 0;
  };
  const auto parts =
      scan_chunks<Best>(mask_count(n), opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
        Best best;
        for (std::uint64_t m = begin; m < end; ++m) {
          const int arcs = std::popcount(m);
          if (arcs > best.arcs && test(m)) best = {arcs, m};
        }
        return best;
      });
  Best best;
  for (const Best& b : parts) {
    if (b.arcs > best.arcs || (b.arcs == best.arcs && b.arcs >= 0 && b.mask < best.mask)) best = b;
  }
  if (best.arcs < 0) {
    throw Error(ErrorCode::kEmptyPredicate,
                "no digraph on " + std::to_string(n) + " vertices satisfies " + pred.to_string());
  }
  return {static_cast<std::size_t>(best.arcs), Digraph::from_arc_mask(n, best.mask)};
}

std::string canonical_form(const Digraph& g) { return key_to_string(canonical_key(g), g.n()); }

bool are_isomorphic(const Digraph& g, const Digraph& h) {
  if (g.n() != h.n() || g.arc_count() != h.arc_count()) return false;
  if (sorted_degrees(g) != sorted_degrees(h)) return false;
  return canonical_key(g) == canonical_key(h);
}

std::size_t iso_class_count(std::size_t n, const Predicate& pred, ScanOptions opts) {
  const CompiledPredicate test = compile(n, pred, opts);
  auto parts = scan_chunks<std::set<Key>>(
      mask_count(n), opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
        std::set<Key> keys;
        for (std::uint64_t m = begin; m < end; ++m) {
          if (test(m)) keys.insert(canonical_key(Digraph::from_arc_mask(n, m)));
        }
        return keys;
      });
  std::set<Key> all;
  for (auto& p : parts) all.merge(p);
  return all.size();
}

}  // namespace critdg
