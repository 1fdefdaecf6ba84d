#include "critdg/io.hpp"

#include <cctype>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "critdg/error.hpp"

namespace critdg {

namespace {

using nlohmann::ordered_json;

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

Location locate(std::string_view text, std::size_t offset) {
  Location loc;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& what) {
  const Location loc = locate(text, offset);
  throw Error(ErrorCode::kParseError, "line " + std::to_string(loc.line) + ", column " +
                                          std::to_string(loc.column) + ": " + what);
}

[[noreturn]] void schema_fail(const std::string& what) {
  throw Error(ErrorCode::kParseError, "line 1, column 1: " + what);
}

std::uint32_t as_vertex(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_fail(where + " must be an integer");
  const auto value = v.get<std::int64_t>();
  if (value < 0 || value > static_cast<std::int64_t>(UINT32_MAX)) {
    throw Error(ErrorCode::kOutOfRange, where + " = " + std::to_string(value) + " is not a vertex");
  }
  return static_cast<std::uint32_t>(value);
}

// Minimal cursor over the DOT subset.
class DotReader {
 public:
  explicit DotReader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (text_.substr(pos_, 2) == "//" || c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) {
      fail_at(text_, pos_, "expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail_at(text_, pos_, "expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  Vertex vertex() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > UINT32_MAX) fail_at(text_, start, "vertex id too large");
      ++pos_;
    }
    if (start == pos_) fail_at(text_, pos_, "expected an integer vertex id");
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      fail_at(text_, start, "vertex ids must be integers");
    }
    if (value == 0) fail_at(text_, start, "vertex ids start at 1");
    return static_cast<Vertex>(value);
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

ordered_json cell_json(const ReportCell& c) {
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : c.params) params[name] = value;
  ordered_json j;
  j["params"] = params;
  j["oracle"] = c.oracle;
  j["formula"] = c.formula;
  j["status"] = std::string(status_name(c.status));
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

ordered_json report_json(const VerificationReport& r, bool include_timing) {
  ordered_json j;
  j["scenario"] = r.scenario;
  j["claim"] = r.claim;
  j["max_n"] = r.max_n;
  ordered_json counts;
  counts["match"] = r.count(CellStatus::kMatch);
  counts["mismatch"] = r.count(CellStatus::kMismatch);
  counts["formula-errata-suspected"] = r.count(CellStatus::kErrataSuspected);
  j["counts"] = counts;
  ordered_json cells = ordered_json::array();
  for (const ReportCell& c : r.cells) cells.push_back(cell_json(c));
  j["cells"] = cells;
  if (include_timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

}  // namespace

std::string to_json(const Digraph& g) {
  ordered_json j;
  j["n"] = g.n();
  ordered_json arcs = ordered_json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.from, a.to});
  j["arcs"] = arcs;
  return j.dump();
}

Digraph digraph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    const std::size_t colon = what.rfind(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    fail_at(text, offset, what);
  }
  if (!j.is_object()) schema_fail("document must be an object with \"n\" and \"arcs\"");
  if (!j.contains("n")) schema_fail("missing field \"n\"");
  if (!j.contains("arcs")) schema_fail("missing field \"arcs\"");
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1) {
    schema_fail("\"n\" must be a positive integer");
  }
  if (!j["arcs"].is_array()) schema_fail("\"arcs\" must be an array");
  const auto n = static_cast<std::size_t>(j["n"].get<std::int64_t>());
  std::vector<Arc> arcs;
  std::size_t index = 0;
  for (const auto& pair : j["arcs"]) {
    const std::string where = "arcs[" + std::to_string(index++) + "]";
    if (!pair.is_array() || pair.size() != 2) schema_fail(where + " must be a pair [u, v]");
    arcs.push_back({as_vertex(pair[0], where + "[0]"), as_vertex(pair[1], where + "[1]")});
  }
  return Digraph::from_arc_list(n, arcs);
}

std::string to_dot(const Digraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (g.out_degree(v) == 0 && g.in_degree(v) == 0) out << "  " << v << ";\n";
  }
  for (const Arc& a : g.arcs()) out << "  " << a.from << " -> " << a.to << ";\n";
  out << "}\n";
  return out.str();
}

Digraph digraph_from_dot(std::string_view text) {
  DotReader r(text);
  r.skip_space();
  if (r.identifier() != "digraph") fail_at(text, 0, "expected 'digraph'");
  if (!r.peek('{')) r.identifier();
  r.expect("{");
  std::vector<Arc> arcs;
  Vertex n = 0;
  while (!r.peek('}')) {
    if (r.at_end()) fail_at(text, r.position(), "unterminated graph body, expected '}'");
    const Vertex u = r.vertex();
    n = std::max(n, u);
    if (r.accept("->")) {
      const Vertex v = r.vertex();
      n = std::max(n, v);
      arcs.push_back({u, v});
    }
    if (!r.accept(";") && !r.peek('}')) {
      r.skip_space();
      if (r.at_end()) fail_at(text, r.position(), "unterminated graph body, expected '}'");
      fail_at(text, r.position(), "expected ';', '->' or '}'");
    }
  }
  r.expect("}");
  if (!r.at_end()) fail_at(text, r.position(), "unexpected text after '}'");
  if (n == 0) fail_at(text, r.position(), "graph declares no vertices");
  return Digraph::from_arc_list(n, arcs);
}

Digraph parse_digraph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? digraph_from_json(text) : digraph_from_dot(text);
  }
  throw Error(ErrorCode::kParseError, "line 1, column 1: empty input");
}

std::string report_to_json(const VerificationReport& report, bool include_timing) {
  return report_json(report, include_timing).dump(2);
}

std::string reports_to_json(std::span<const VerificationReport> reports, bool include_timing) {
  ordered_json j;
  ordered_json list = ordered_json::array();
  bool mismatch = false;
  for (const VerificationReport& r : reports) {
    list.push_back(report_json(r, include_timing));
    mismatch = mismatch || r.has_mismatch();
  }
  j["reports"] = list;
  j["mismatch"] = mismatch;
  return j.dump(2);
}

std::string report_summary(const VerificationReport& r) {
  std::ostringstream out;
  const std::size_t mismatches = r.count(CellStatus::kMismatch);
  const std::size_t errata = r.count(CellStatus::kErrataSuspected);
  out << (mismatches ? "FAIL " : "ok   ") << r.scenario << ": " << r.cells.size() << " cells, "
      << r.count(CellStatus::kMatch) << " match, " << mismatches << " mismatch, " << errata
      << " errata-suspected  (" << r.claim << ")\n";
  for (const ReportCell& c : r.cells) {
    if (c.status == CellStatus::kMatch) continue;
    out << "     " << status_name(c.status) << ":";
    for (const auto& [name, value] : c.params) out << " " << name << "=" << value;
    out << "  enumerated " << c.oracle << ", predicted " << c.formula;
    if (!c.note.empty()) out << "  [" << c.note << "]";
    out << "\n";
  }
  return out.str();
}

}  // namespace critdg
