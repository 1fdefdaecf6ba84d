#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "critdg/condensation.hpp"
#include "critdg/criticality.hpp"
#include "critdg/error.hpp"
#include "critdg/families.hpp"
#include "critdg/formulas.hpp"
#include "critdg/io.hpp"
#include "critdg/metrics.hpp"
#include "critdg/oracle.hpp"
#include "critdg/scenarios.hpp"

namespace {

using namespace critdg;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "}";
}

// "3..6" or "4"; inclusive.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
    const std::int64_t lo = std::stoll(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const std::int64_t hi = std::stoll(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParseError, "bad range '" + text + "', expected N or LO..HI");
  }
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(part, &used);
      if (used != part.size() || v < 0) throw std::invalid_argument(part);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kInvalidSpec, "bad size list '" + text + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidSpec, "empty size list");
  return out;
}

void print_analysis(const Digraph& g, std::ostream& out) {
  const MetricProfile p = metric_profile(g);
  const Condensation c = condensation(g);
  const StructureFlags f = structure_flags(g);
  const CenterSets centers = centers_and_quasicenters(g);
  out << "vertices: " << g.n() << "\narcs: " << g.arc_count() << "\n";
  out << "d=" << p.d() << " d_m=" << p.d_m() << " r=" << p.r() << " r_m=" << p.r_m() << "\n";
  out << "eccentricity (out):";
  for (Distance e : p.ecc_out) out << " " << e;
  out << "\neccentricity (m):  ";
  for (Distance e : p.ecc_m) out << " " << e;
  out << "\ncenters: " << join(centers.centers) << "\nquasi-centers: " << join(centers.quasi_centers)
      << "\n";
  out << "bicomponents: " << c.count() << "\n";
  for (std::size_t i = 0; i < c.count(); ++i) {
    out << "  A" << i + 1 << " = " << join(c.components[i]) << "\n";
  }
  out << "hertz arcs:";
  for (const Arc& a : c.hertz.arcs()) out << " (" << a.from << "," << a.to << ")";
  out << "\nhertz family: " << recognize_hertz_family(c.hertz).label() << "\n";
  out << "acyclic=" << f.is_acyclic << " transitive=" << f.is_transitive
      << " complete_symmetric=" << f.is_complete_symmetric
      << " transitive_tournament=" << f.is_transitive_tournament
      << " biconnected=" << f.is_biconnected << "\n";
  for (Invariant inv : kAllInvariants) {
    const CriticalityReport report = check_critical(g, inv);
    out << invariant_name(inv) << "-critical=" << (report.critical ? "true" : "false");
    if (const auto fail = report.first_failure()) {
      out << "  (adding (" << fail->arc.from << "," << fail->arc.to << ") keeps "
          << fail->bicomponents_after << " bicomponents and " << invariant_name(inv) << "="
          << fail->invariant_after << ")";
    }
    out << "\n";
  }
}

void print_analysis_json(const Digraph& g, std::ostream& out) {
  const MetricProfile p = metric_profile(g);
  const Condensation c = condensation(g);
  const StructureFlags f = structure_flags(g);
  const CenterSets centers = centers_and_quasicenters(g);
  auto dist = [](Distance d) { return "\"" + d.to_string() + "\""; };
  auto list = [](const std::vector<Vertex>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "]";
  };
  out << "{\"digraph\":" << to_json(g) << ",\"d\":" << dist(p.d()) << ",\"d_m\":" << dist(p.d_m())
      << ",\"r\":" << dist(p.r()) << ",\"r_m\":" << dist(p.r_m())
      << ",\"centers\":" << list(centers.centers)
      << ",\"quasi_centers\":" << list(centers.quasi_centers) << ",\"bicomponents\":[";
  for (std::size_t i = 0; i < c.count(); ++i) out << (i ? "," : "") << list(c.components[i]);
  out << "],\"hertz\":" << to_json(c.hertz) << ",\"hertz_family\":\""
      << recognize_hertz_family(c.hertz).label() << "\",\"flags\":{\"acyclic\":" << f.is_acyclic
      << ",\"transitive\":" << f.is_transitive
      << ",\"complete_symmetric\":" << f.is_complete_symmetric
      << ",\"transitive_tournament\":" << f.is_transitive_tournament
      << ",\"biconnected\":" << f.is_biconnected << "},\"critical\":{";
  bool first = true;
  for (Invariant inv : kAllInvariants) {
    out << (first ? "" : ",") << "\"" << invariant_name(inv)
        << "\":" << (is_critical(g, inv) ? "true" : "false");
    first = false;
  }
  out << "}}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical and maximal digraphs: metrics, families, counts and exhaustive checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "critdg 0.1.0");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Analyze a digraph given as JSON or DOT");
  std::string analyze_path;
  bool analyze_json = false;
  analyze->add_option("path", analyze_path, "Input file, or - for standard input")->required();
  analyze->add_flag("--json", analyze_json, "Machine-readable output");

  // generate
  auto* generate = app.add_subcommand("generate", "Emit a family member as JSON or DOT");
  std::string family;
  std::size_t gen_n = 0, gen_k = 0, gen_i = 0, gen_pos = 2;
  std::string gen_split, gen_sizes, gen_blocks, gen_hertz;
  bool gen_dot = false;
  generate
      ->add_option("family", family,
                   "gamma-k, gamma-ki, gamma-k0, d4, partition, blow-up, max-radius, "
                   "max-radius-reversed, qd3")
      ->required();
  generate->add_option("--n", gen_n, "Vertex count (max-radius)");
  generate->add_option("--k", gen_k, "Order or radius");
  generate->add_option("--i", gen_i, "Removed arc index (gamma-ki)");
  generate->add_option("--pos", gen_pos, "Position of the large block (max-radius)");
  generate->add_option("--split", gen_split, "a,b block sizes (max-radius)");
  generate->add_option("--sizes", gen_sizes, "Block sizes (blow-up, qd3)");
  generate->add_option("--blocks", gen_blocks, "Partition block sizes (partition)");
  generate->add_option("--hertz", gen_hertz, "Hertz graph file (blow-up)");
  generate->add_flag("--dot", gen_dot, "Emit DOT instead of JSON");

  // count
  auto* count = app.add_subcommand("count", "Evaluate a count or bound formula over a grid");
  std::string formula, n_range, k_range;
  count->add_option("formula", formula, "Formula name")->required();
  count->add_option("--n", n_range, "N or LO..HI")->required();
  count->add_option("--k", k_range, "K or LO..HI")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run exhaustive verification scenarios");
  std::vector<std::string> scenarios;
  std::size_t max_n = 4;
  std::size_t workers = 0;
  std::string output;
  bool timing = false;
  verify->add_option("scenarios", scenarios, "Scenario names, or all")->required();
  verify->add_option("--max-n", max_n, "Largest vertex count to enumerate (2..5)");
  verify->add_option("--workers", workers, "Worker threads (0 = available parallelism)");
  verify->add_option("--output", output, "Write the JSON report here instead of standard output");
  verify->add_flag("--timing", timing, "Include wall time in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) {
      const Digraph g = parse_digraph(read_input(analyze_path));
      if (analyze_json) {
        print_analysis_json(g, std::cout);
      } else {
        print_analysis(g, std::cout);
      }
      return kExitOk;
    }

    if (*generate) {
      Digraph g = Digraph::empty(1);
      auto split = [&] {
        const auto ab = parse_sizes(gen_split);
        if (ab.size() != 2) throw Error(ErrorCode::kInvalidSpec, "--split needs a,b");
        return MaximalRadius{gen_n, gen_k, gen_pos, ab[0], ab[1]};
      };
      if (family == "gamma-k") {
        g = build_family(GammaK{gen_k});
      } else if (family == "gamma-ki") {
        g = build_family(GammaKI{gen_k, gen_i});
      } else if (family == "gamma-k0") {
        g = build_family(GammaK0{gen_k});
      } else if (family == "d4") {
        g = build_family(D4{});
      } else if (family == "partition") {
        const auto blocks = parse_sizes(gen_blocks);
        std::size_t k = 0;
        for (std::size_t b : blocks) k += b;
        g = build_family(GammaPartition{k, blocks});
      } else if (family == "blow-up") {
        g = blow_up(parse_digraph(read_input(gen_hertz)), parse_sizes(gen_sizes));
      } else if (family == "max-radius") {
        g = build_family(split());
      } else if (family == "max-radius-reversed") {
        g = build_family(ReversedMaximalRadius{split()});
      } else if (family == "qd3") {
        const auto s = parse_sizes(gen_sizes);
        if (s.size() != 4) throw Error(ErrorCode::kInvalidSpec, "--sizes needs four values");
        g = build_family(MaximalQD3{{s[0], s[1], s[2], s[3]}});
      } else {
        throw Error(ErrorCode::kInvalidSpec, "unknown family '" + family + "'");
      }
      std::cout << (gen_dot ? to_dot(g) : to_json(g) + "\n");
      return kExitOk;
    }

    if (*count) {
      const auto cf = parse_count_formula(formula);
      const auto bf = parse_bound_formula(formula);
      if (!cf && !bf) throw Error(ErrorCode::kDomainError, "unknown formula '" + formula + "'");
      const auto [n_lo, n_hi] = parse_range(n_range);
      const auto [k_lo, k_hi] = parse_range(k_range);
      std::cout << "n\tk\t" << formula << "\n";
      for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        for (std::int64_t k = k_lo; k <= k_hi; ++k) {
          std::string value;
          try {
            value = (cf ? count_closed_form(*cf, n, k) : bound_closed_form(*bf, n, k)).str();
          } catch (const Error& e) {
            if (e.code() != ErrorCode::kDomainError) throw;
            value = "—";
          }
          std::cout << n << "\t" << k << "\t" << value << "\n";
        }
      }
      return kExitOk;
    }

    if (*verify) {
      std::vector<std::string> names;
      for (const std::string& s : scenarios) {
        if (s == "all") {
          names.insert(names.end(), scenario_names().begin(), scenario_names().end());
        } else {
          names.push_back(s);
        }
      }
      for (const std::string& s : names) {
        const auto& known = scenario_names();
        if (std::find(known.begin(), known.end(), s) == known.end()) {
          throw Error(ErrorCode::kUnknownScenario, "no scenario named '" + s + "'");
        }
      }
      std::vector<VerificationReport> reports;
      bool mismatch = false;
      for (const std::string& s : names) {
        reports.push_back(run_scenario(s, max_n, ScanOptions{workers}));
        std::cerr << report_summary(reports.back());
        mismatch = mismatch || reports.back().has_mismatch();
      }
      const std::string json = reports_to_json(reports, timing) + "\n";
      if (output.empty()) {
        std::cout << json;
      } else {
        std::ofstream out(output);
        if (!out) throw Error(ErrorCode::kParseError, "cannot write '" + output + "'");
        out << json;
      }
      return mismatch ? kExitMismatch : kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
