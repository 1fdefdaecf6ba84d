#pragma once

#include <span>
#include <string>
#include <string_view>

#include "critdg/digraph.hpp"
#include "critdg/scenarios.hpp"

namespace critdg {

/// {"n": <int>, "arcs": [[u,v],...]} with arcs in lexicographic order.
std::string to_json(const Digraph& g);

/// Throws ParseError carrying line and column for syntax errors, and the
/// construction errors (LoopArc, OutOfRange, DuplicateArc) for bad content.
Digraph digraph_from_json(std::string_view text);

/// `digraph G { u -> v; ... }`; vertices without arcs are declared alone.
std::string to_dot(const Digraph& g);

/// Accepts `digraph [name] { stmt; ... }` where a statement is `u -> v` or a
/// bare vertex `u`, with positive integer ids; n is the largest id seen.
/// Throws ParseError with line and column.
Digraph digraph_from_dot(std::string_view text);

/// JSON when the first non-blank character is '{', DOT otherwise.
Digraph parse_digraph(std::string_view text);

/// Stable field order; wall time only when include_timing is set so that
/// repeated runs serialize identically.
std::string report_to_json(const VerificationReport& report, bool include_timing = false);
std::string reports_to_json(std::span<const VerificationReport> reports,
                            bool include_timing = false);

/// One line per scenario plus one line per non-matching cell.
std::string report_summary(const VerificationReport& report);

}  // namespace critdg
