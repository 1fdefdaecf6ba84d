#include "critdg/criticality.hpp"

#include <string>

#include "critdg/condensation.hpp"
#include "critdg/error.hpp"
#include "critdg/formulas.hpp"
#include "critdg/oracle.hpp"

namespace critdg {

std::string_view invariant_name(Invariant inv) {
  switch (inv) {
    case Invariant::kD: return "d";
    case Invariant::kDM: return "dm";
    case Invariant::kR: return "r";
    case Invariant::kRM: return "rm";
  }
  return "";
}

std::optional<Invariant> parse_invariant(std::string_view text) {
  for (Invariant inv : kAllInvariants) {
    if (invariant_name(inv) == text) return inv;
  }
  if (text == "D") return Invariant::kD;
  if (text == "DM") return Invariant::kDM;
  if (text == "R") return Invariant::kR;
  if (text == "RM") return Invariant::kRM;
  return std::nullopt;
}

Distance invariant_value(const Invariants& values, Invariant inv) {
  switch (inv) {
    case Invariant::kD: return values.d;
    case Invariant::kDM: return values.d_m;
    case Invariant::kR: return values.r;
    case Invariant::kRM: return values.r_m;
  }
  return Distance::infinity();
}

std::vector<Arc> missing_arcs(const Digraph& g) {
  std::vector<Arc> out;
  out.reserve(g.n() * (g.n() - 1) - g.arc_count());
  for (Vertex u = 1; u <= g.n(); ++u) {
    for (Vertex v = 1; v <= g.n(); ++v) {
      if (u != v && !g.has_arc(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

namespace {

ArcEffect effect_of(const Digraph& g, std::size_t components, Distance value, Arc arc,
                    Invariant inv) {
  const Digraph h = g.with_arc(arc);
  ArcEffect e;
  e.arc = arc;
  e.bicomponents_before = components;
  e.bicomponents_after = bicomponent_count(h);
  e.invariant_before = value;
  e.invariant_after = invariant_value(metric_invariants(h), inv);
  e.qualifies = e.bicomponents_after < e.bicomponents_before || e.invariant_after < e.invariant_before;
  return e;
}

}  // namespace

ArcEffect arc_effect(const Digraph& g, Arc arc, Invariant inv) {
  return effect_of(g, bicomponent_count(g), invariant_value(metric_invariants(g), inv), arc, inv);
}

std::optional<ArcEffect> CriticalityReport::first_failure() const {
  for (const ArcEffect& e : effects) {
    if (!e.qualifies) return e;
  }
  return std::nullopt;
}

CriticalityReport check_critical(const Digraph& g, Invariant inv) {
  const std::size_t components = bicomponent_count(g);
  const Distance value = invariant_value(metric_invariants(g), inv);
  CriticalityReport report;
  for (const Arc& a : missing_arcs(g)) {
    report.effects.push_back(effect_of(g, components, value, a, inv));
    report.critical = report.critical && report.effects.back().qualifies;
  }
  return report;
}

bool is_critical(const Digraph& g, Invariant inv) {
  const std::size_t components = bicomponent_count(g);
  const Distance value = invariant_value(metric_invariants(g), inv);
  for (const Arc& a : missing_arcs(g)) {
    if (!effect_of(g, components, value, a, inv).qualifies) return false;
  }
  return true;
}

bool is_maximal(const Digraph& g, Invariant inv, MaxArcsSource source) {
  if (inv != Invariant::kR && inv != Invariant::kDM) {
    throw Error(ErrorCode::kUnsupportedInvariant,
                "maximality is defined for finite radius and quasi-diameter only, not " +
                    std::string(invariant_name(inv)));
  }
  const Distance value = invariant_value(metric_invariants(g), inv);
  if (value.is_infinite()) {
    throw Error(ErrorCode::kInfiniteInvariant,
                std::string(invariant_name(inv)) + " is infinite; maximality needs a finite value");
  }
  if (g.n() == 1) return true;
  const auto n = static_cast<std::int64_t>(g.n());
  const auto k = static_cast<std::int64_t>(value.value());
  BigInt max_arcs;
  if (source == MaxArcsSource::kClosedForm) {
    max_arcs = bound_closed_form(inv == Invariant::kR ? BoundFormula::kG : BoundFormula::kF, n, k);
  } else {
    Predicate pred;
    pred.atoms.push_back(Atom::metric(inv, value));
    max_arcs = max_arcs_where(g.n(), pred).arcs;
  }
  return BigInt(g.arc_count()) == max_arcs;
}

}  // namespace critdg
