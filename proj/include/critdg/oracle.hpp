#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critdg/criticality.hpp"
#include "critdg/digraph.hpp"
#include "critdg/distance.hpp"
#include "critdg/families.hpp"

namespace critdg {

/// Full enumeration covers 2^(n(n-1)) digraphs; n = 5 is already 2^20.
inline constexpr std::size_t kMaxEnumerationVertices = 5;
/// Canonical forms scan all n! relabelings.
inline constexpr std::size_t kMaxCanonicalVertices = 9;

/// Every labeled loop-free digraph on n vertices, in increasing order of
/// Digraph::arc_mask().
class DigraphEnumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Digraph;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Digraph;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}

    Digraph operator*() const { return Digraph::from_arc_mask(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    bool operator==(const iterator& other) const { return mask_ == other.mask_; }

   private:
    std::size_t n_ = 0;
    std::uint64_t mask_ = 0;
  };

  DigraphEnumeration(std::size_t n, std::uint64_t count) : n_(n), count_(count) {}

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }
  std::uint64_t size() const { return count_; }

 private:
  std::size_t n_;
  std::uint64_t count_;
};

/// Throws TooLarge for n > 5 and OutOfRange for n < 2.
DigraphEnumeration enumerate_digraphs(std::size_t n);

/// One conjunct of a predicate over digraphs.
struct Atom {
  enum class Kind {
    kMetric,        // invariant == value (value may be INF)
    kBicomponents,  // strong component count == count
    kArcs,          // arc count == count
    kCritical,      // critical with respect to invariant
    kBiconnected,
    kTransitive,
    kHertzIsomorphicTo,  // Hertz graph isomorphic to build_family(family)
  };

  Kind kind = Kind::kArcs;
  Invariant invariant = Invariant::kD;
  Distance value;
  std::size_t count = 0;
  std::optional<FamilySpec> family;

  static Atom metric(Invariant inv, Distance v) {
    Atom a;
    a.kind = Kind::kMetric;
    a.invariant = inv;
    a.value = v;
    return a;
  }
  static Atom bicomponents(std::size_t c) {
    Atom a;
    a.kind = Kind::kBicomponents;
    a.count = c;
    return a;
  }
  static Atom arcs(std::size_t c) {
    Atom a;
    a.kind = Kind::kArcs;
    a.count = c;
    return a;
  }
  static Atom critical(Invariant inv) {
    Atom a;
    a.kind = Kind::kCritical;
    a.invariant = inv;
    return a;
  }
  static Atom biconnected() {
    Atom a;
    a.kind = Kind::kBiconnected;
    return a;
  }
  static Atom transitive() {
    Atom a;
    a.kind = Kind::kTransitive;
    return a;
  }
  static Atom hertz_isomorphic_to(FamilySpec spec) {
    Atom a;
    a.kind = Kind::kHertzIsomorphicTo;
    a.family = std::move(spec);
    return a;
  }
};

/// Conjunction of atoms; the empty predicate accepts everything.
struct Predicate {
  std::vector<Atom> atoms;

  Predicate& with(Atom a) {
    atoms.push_back(std::move(a));
    return *this;
  }

  /// Reference evaluation through the library's metric and criticality code.
  bool evaluate(const Digraph& g) const;

  /// Comma-separated atoms, e.g. "radius=2,arcs=8,critical(d)".
  std::string to_string() const;
};

/// Parses the to_string() syntax: diameter|quasi_diameter|radius|quasi_radius
/// =<int>|INF, bicomponents=<int>, arcs=<int>, critical(d|dm|r|rm),
/// biconnected, transitive, hertz=gamma_k(K)|gamma_ki(K,I)|gamma_k0(K)|d4|
/// partition(K1,...). Empty text or "true" is the empty predicate.
/// Throws ParseError.
Predicate parse_predicate(std::string_view text);

/// Worker count 0 means std::thread::hardware_concurrency(). Results never
/// depend on the worker count.
struct ScanOptions {
  std::size_t workers = 0;
};

std::uint64_t count_labeled(std::size_t n, const Predicate& pred, ScanOptions opts = {});

struct ExtremalResult {
  std::size_t arcs = 0;
  Digraph witness = Digraph::empty(1);  // smallest arc mask among maximizers
};

/// Throws EmptyPredicate when no digraph satisfies pred.
ExtremalResult max_arcs_where(std::size_t n, const Predicate& pred, ScanOptions opts = {});

/// Arc masks of all satisfying digraphs in increasing order.
std::vector<std::uint64_t> satisfying_masks(std::size_t n, const Predicate& pred,
                                            ScanOptions opts = {});

/// Lexicographically smallest row-major off-diagonal adjacency bit string over
/// all vertex relabelings. Throws TooLarge for n > 9.
std::string canonical_form(const Digraph& g);

bool are_isomorphic(const Digraph& g, const Digraph& h);

/// Number of distinct canonical forms among satisfying digraphs.
std::size_t iso_class_count(std::size_t n, const Predicate& pred, ScanOptions opts = {});

/// Per-mask values from the oracle's own small-graph kernel, exposed so tests
/// can compare it with the library route.
struct MaskFeatures {
  static constexpr std::uint8_t kInfinite = 0xFF;

  std::uint8_t bicomponents = 0;
  std::uint8_t d = 0;
  std::uint8_t d_m = 0;
  std::uint8_t r = 0;
  std::uint8_t r_m = 0;
  std::uint8_t critical = 0;  // bit (int)Invariant set when critical for it

  std::uint8_t value(Invariant inv) const;
  bool is_critical(Invariant inv) const { return (critical >> static_cast<int>(inv)) & 1U; }
};

/// Features of every digraph on n vertices, indexed by arc mask. Built once per
/// n and cached for the process lifetime.
const std::vector<MaskFeatures>& feature_table(std::size_t n, ScanOptions opts = {});

std::size_t resolve_workers(std::size_t requested);

/// Called concurrently from scan workers; must not touch shared mutable state.
using MaskFilter = std::function<bool(std::uint64_t mask, const std::vector<MaskFeatures>& table)>;

/// Arc masks accepted by filter, in increasing order.
std::vector<std::uint64_t> filter_masks(std::size_t n, const MaskFilter& filter,
                                        ScanOptions opts = {});

}  // namespace critdg
