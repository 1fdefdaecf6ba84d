#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "critdg/digraph.hpp"
#include "critdg/distance.hpp"
#include "critdg/metrics.hpp"

namespace critdg {

enum class Invariant { kD, kDM, kR, kRM };

inline constexpr Invariant kAllInvariants[] = {Invariant::kD, Invariant::kDM, Invariant::kR,
                                               Invariant::kRM};

/// "d", "dm", "r", "rm".
std::string_view invariant_name(Invariant inv);
std::optional<Invariant> parse_invariant(std::string_view text);

Distance invariant_value(const Invariants& values, Invariant inv);

/// What adding one missing arc does to the bicomponent count and to one
/// invariant. An infinite value turning finite counts as a decrease.
struct ArcEffect {
  Arc arc;
  std::size_t bicomponents_before = 0;
  std::size_t bicomponents_after = 0;
  Distance invariant_before;
  Distance invariant_after;
  bool qualifies = false;
};

/// Every ordered pair (u,v), u != v, that is not an arc, lexicographically.
std::vector<Arc> missing_arcs(const Digraph& g);

/// Throws LoopArc for u == v and ArcPresent if the arc already exists.
ArcEffect arc_effect(const Digraph& g, Arc arc, Invariant inv);

struct CriticalityReport {
  bool critical = true;
  std::vector<ArcEffect> effects;  // one per missing arc, in missing_arcs order

  /// First missing arc that neither merges bicomponents nor lowers the invariant.
  std::optional<ArcEffect> first_failure() const;
};

CriticalityReport check_critical(const Digraph& g, Invariant inv);

/// True iff every missing arc qualifies (vacuously true with no missing arcs).
bool is_critical(const Digraph& g, Invariant inv);

enum class MaxArcsSource { kClosedForm, kOracle };

/// Maximality of g among digraphs on g.n() vertices sharing its finite radius
/// (inv = R) or quasi-diameter (inv = DM). The oracle source enumerates and is
/// limited to n <= 5. Throws InfiniteInvariant or UnsupportedInvariant.
bool is_maximal(const Digraph& g, Invariant inv, MaxArcsSource source = MaxArcsSource::kClosedForm);

}  // namespace critdg
