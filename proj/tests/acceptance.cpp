// One PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "critdg/error.hpp"
#include "critdg/io.hpp"
#include "critdg/scenarios.hpp"

namespace {

using namespace critdg;

// Every criterion compares integers or structure verdicts: zero tolerance.
constexpr std::int64_t kExactTolerance = 0;
// Wall-clock allowance for a single n=5 extremal scenario.
constexpr double kWorkerMinuteSeconds = 60.0;

constexpr std::size_t kEnumerationCap = 5;
constexpr std::size_t kCharacterizationN = 4;
constexpr std::size_t kDeterminismWorkers[] = {1, 2, 8};

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::map<std::pair<std::string, std::size_t>, VerificationReport> g_cache;

const VerificationReport& report(const std::string& name, std::size_t max_n) {
  const auto key = std::make_pair(name, max_n);
  auto it = g_cache.find(key);
  if (it == g_cache.end()) it = g_cache.emplace(key, run_scenario(name, max_n, {1})).first;
  return it->second;
}

std::int64_t param(const ReportCell& c, const std::string& name, std::int64_t fallback = -1) {
  for (const auto& [key, value] : c.params) {
    if (key == name) return value;
  }
  return fallback;
}

std::string where(const ReportCell& c) {
  std::string s;
  for (const auto& [key, value] : c.params) s += (s.empty() ? "" : " ") + key + "=" + std::to_string(value);
  return s;
}

bool exact_equal(const std::string& oracle, const std::string& formula) {
  if (oracle == formula) return true;
  try {
    return std::llabs(std::stoll(oracle) - std::stoll(formula)) <= kExactTolerance;
  } catch (const std::exception&) {
    return false;
  }
}

// Every cell matches and oracle equals formula.
void require_all_match(Outcome& out, const VerificationReport& r) {
  if (r.cells.empty()) out.fail(r.scenario + ": no cells");
  for (const ReportCell& c : r.cells) {
    if (c.status != CellStatus::kMatch || !exact_equal(c.oracle, c.formula)) {
      out.fail(r.scenario + " " + where(c) + ": oracle " + c.oracle + " vs " + c.formula);
    }
  }
}

const ReportCell* find_cell(const VerificationReport& r, std::int64_t n, std::int64_t k) {
  for (const ReportCell& c : r.cells) {
    if (param(c, "n") == n && param(c, "k") == k) return &c;
  }
  return nullptr;
}

Outcome extremal_grid(const std::string& name) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const VerificationReport& r = report(name, kEnumerationCap);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require_all_match(out, r);
  for (std::int64_t n = 3; n <= 5; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      if (!find_cell(r, n, k)) out.fail("missing cell n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  if (seconds > kWorkerMinuteSeconds) out.fail("took " + std::to_string(seconds) + " s");
  if (out.pass) out.detail = std::to_string(r.cells.size()) + " cells exact";
  return out;
}

Outcome all_match(const std::vector<std::pair<std::string, std::size_t>>& runs) {
  Outcome out;
  std::size_t cells = 0;
  for (const auto& [name, max_n] : runs) {
    const VerificationReport& r = report(name, max_n);
    require_all_match(out, r);
    cells += r.cells.size();
  }
  if (out.pass) out.detail = std::to_string(cells) + " cells exact";
  return out;
}

Outcome labeled_d_critical() {
  Outcome out = all_match({{"cor14", kEnumerationCap}});
  const VerificationReport& r = report("cor14", kEnumerationCap);
  for (std::int64_t n = 2; n <= 5; ++n) {
    for (std::int64_t k = 2; k <= n; ++k) {
      if (!find_cell(r, n, k)) out.fail("missing cell n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  const ReportCell* spot = find_cell(r, 3, 2);
  if (!spot || spot->oracle != "6") out.fail("spot value n=3 k=2 is not 6");
  return out;
}

Outcome center_path_sweep() {
  Outcome out = all_match({{"lemma9", kEnumerationCap}});
  const VerificationReport& r = report("lemma9", kEnumerationCap);
  for (std::int64_t k = 3; k <= 30; ++k) {
    bool found = false;
    for (const ReportCell& c : r.cells) found = found || param(c, "k") == k;
    if (!found) out.fail("k=" + std::to_string(k) + " not swept");
  }
  return out;
}

Outcome center_degree_and_small_quasi_diameter() {
  Outcome out = all_match({{"lemma10", kCharacterizationN}, {"lemma11", kEnumerationCap}});
  if (!find_cell(report("lemma11", kEnumerationCap), 5, 4)) out.fail("lemma11 lacks n=5");
  return out;
}

Outcome radius_iso_and_labeled_counts() {
  Outcome out;
  const VerificationReport& iso = report("cor51", kEnumerationCap);
  std::size_t statement_cells = 0;
  std::size_t errata = 0;
  for (const ReportCell& c : iso.cells) {
    if (c.status == CellStatus::kMismatch) out.fail("cor51 " + where(c) + " mismatch");
    if (c.status == CellStatus::kErrataSuspected) {
      ++errata;
      continue;
    }
    if (param(c, "enumerated") == 0 && c.note.find("stated") != std::string::npos) {
      ++statement_cells;
      if (!exact_equal(c.oracle, c.formula)) out.fail("cor51 " + where(c));
    }
  }
  // 3 <= k < n <= 8
  if (statement_cells != 15) out.fail("cor51 has " + std::to_string(statement_cells) + " statement cells");

  // Exhaustive values at n <= 4, frozen.
  const std::map<std::pair<std::int64_t, std::int64_t>, std::string> chi = {
      {{2, 1}, "1"}, {{3, 1}, "1"}, {{3, 2}, "8"}, {{4, 1}, "1"}, {{4, 2}, "81"}, {{4, 3}, "24"}};
  const std::map<std::pair<std::int64_t, std::int64_t>, std::string> mu = {
      {{2, 1}, "1"}, {{3, 1}, "1"}, {{3, 2}, "3"}, {{4, 1}, "1"}, {{4, 2}, "6"}, {{4, 3}, "72"}};
  std::size_t formula_records = 0;
  auto check_frozen = [&](const std::string& name, const auto& frozen) {
    const VerificationReport& r = report(name, kCharacterizationN);
    for (const auto& [nk, value] : frozen) {
      const ReportCell* c = find_cell(r, nk.first, nk.second);
      if (!c) {
        out.fail(name + " missing n=" + std::to_string(nk.first));
      } else if (c->oracle != value) {
        out.fail(name + " " + where(*c) + ": oracle " + c->oracle + ", frozen " + value);
      } else if (c->status == CellStatus::kMismatch) {
        out.fail(name + " " + where(*c) + " mismatch");
      } else if (c->status == CellStatus::kErrataSuspected) {
        ++formula_records;
      }
    }
  };
  check_frozen("cor52", chi);
  check_frozen("cor62", mu);
  if (out.pass) {
    out.detail = std::to_string(statement_cells) + " construction cells exact, " +
                 std::to_string(errata) + " derivation-line errata records, " +
                 std::to_string(formula_records) + " count errata records";
  }
  return out;
}

Outcome determinism() {
  Outcome out;
  for (const std::string& name : scenario_names()) {
    const std::string reference = report_to_json(report(name, kEnumerationCap));
    for (std::size_t w : kDeterminismWorkers) {
      if (w == 1) continue;
      if (report_to_json(run_scenario(name, kEnumerationCap, {w})) != reference) {
        out.fail(name + " differs at " + std::to_string(w) + " workers");
      }
    }
  }
  if (out.pass) out.detail = std::to_string(scenario_names().size()) + " scenarios identical at 1, 2, 8 workers";
  return out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "max arcs at radius k equals g(n,k), n<=5", [] { return extremal_grid("thm5"); }},
      {2, "max arcs at quasi-diameter k equals f(n,k), n<=5", [] { return extremal_grid("thm7"); }},
      {3, "labeled d-critical count equals k!S(n,k), n<=5", labeled_d_critical},
      {4, "labeled critical counts for d_m, r, r_m, n<=5",
       [] { return all_match({{"cor24", 5}, {"cor35", 5}, {"cor44", 5}}); }},
      {5, "isomorphism-class counts, n<=5",
       [] {
         return all_match({{"cor13", 5}, {"cor23", 5}, {"cor34", 5}, {"cor43", 5}, {"cor61", 5}});
       }},
      {6, "Hertz-graph characterizations and blow-up converses",
       [] { return all_match({{"thm1", 5}, {"thm2", 4}, {"thm3", 4}, {"thm4", 4}}); }},
      {7, "single-arc completion characterizations, n<=4",
       [] { return all_match({{"cor11", 4}, {"cor32", 4}, {"cor42", 4}}); }},
      {8, "center-path arc bound over 3<=k<=30, k<n<=60", center_path_sweep},
      {9, "center-bicomponent outdegree (n<=4) and (k+1)-vertex quasi-diameter bound (n=5)",
       center_degree_and_small_quasi_diameter},
      {10, "infinite-invariant arc bounds attained, n<=5",
       [] { return all_match({{"cor12", 5}, {"cor22", 5}, {"cor31", 5}, {"cor33", 5}, {"cor41", 5}}); }},
      {11, "maximal radius classes n<=8 and frozen labeled counts n<=4", radius_iso_and_labeled_counts},
      {12, "bit-identical reports across worker counts", determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    try {
      out = c.check();
    } catch (const Error& e) {
      out.fail(std::string("error: ") + e.what());
    }
    std::printf("%s  criterion %2d  %s  [%s]\n", out.pass ? "PASS" : "FAIL", c.id, c.title,
                out.detail.c_str());
    failed += out.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
