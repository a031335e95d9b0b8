#include "geolat/cli_io.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"

namespace geolat {

namespace {

using nlohmann::json;

std::string quote(const std::string& s) { return json(s).dump(); }

std::string label_array(const Flat& f) {
  std::string out = "[";
  bool first = true;
  for (const auto& p : f) {
    out += (first ? "" : ", ") + quote(p);
    first = false;
  }
  return out + "]";
}

std::vector<Flat> sorted_flats(const Geometry& g, int r) {
  std::vector<Flat> out;
  for (Mask m : g.level(r)) out.push_back(g.labels_of(m));
  std::sort(out.begin(), out.end(),
            [](const Flat& a, const Flat& b) { return a.items() < b.items(); });
  return out;
}

// Writes a map from rank keys to arrays of label arrays.
void write_levels(std::ostringstream& s, const std::map<int, std::vector<Flat>>& levels, const std::string& pad) {
  if (levels.empty()) {
    s << "{}";
    return;
  }
  s << "{\n";
  // Keys compare as text, so "10" sorts before "2".
  std::map<std::string, const std::vector<Flat>*> keyed;
  for (const auto& [r, flats] : levels) keyed[std::to_string(r)] = &flats;
  std::size_t k = 0;
  for (const auto& [key, flats] : keyed) {
    s << pad << "  " << quote(key) << ": [";
    if (flats->empty()) {
      s << "]";
    } else {
      s << "\n";
      for (std::size_t i = 0; i < flats->size(); ++i) {
        s << pad << "    " << label_array((*flats)[i]) << (i + 1 < flats->size() ? "," : "") << "\n";
      }
      s << pad << "  ]";
    }
    s << (++k < keyed.size() ? "," : "") << "\n";
  }
  s << pad << "}";
}

void write_geometry_body(std::ostringstream& s, const Geometry& g, bool full, const std::string& pad) {
  std::map<int, std::vector<Flat>> nontrivial;
  for (int r = 1; r < g.rank(); ++r) {
    for (const auto& f : sorted_flats(g, r)) {
      if (f.size() > static_cast<std::size_t>(r)) nontrivial[r].push_back(f);
    }
  }
  s << "{\n";
  if (full) {
    std::map<int, std::vector<Flat>> all;
    for (int r = 0; r <= g.rank(); ++r) all[r] = sorted_flats(g, r);
    s << pad << "  \"full_flats\": ";
    write_levels(s, all, pad + "  ");
    s << ",\n";
  }
  s << pad << "  \"nontrivial_flats\": ";
  write_levels(s, nontrivial, pad + "  ");
  s << ",\n";
  s << pad << "  \"points\": " << label_array(g.point_set()) << ",\n";
  s << pad << "  \"rank\": " << g.rank() << "\n";
  s << pad << "}";
}

// Line and column of the nth occurrence of a quoted token, or of the start.
std::pair<std::size_t, std::size_t> locate(std::string_view text, const std::string& token, std::size_t nth,
                                           std::size_t from = 0) {
  const std::string needle = quote(token);
  std::size_t pos = from;
  for (std::size_t i = 0; i <= nth; ++i) {
    pos = text.find(needle, i == 0 ? pos : pos + 1);
    if (pos == std::string_view::npos) return {1, 1};
  }
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < pos; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void fail_at(std::string_view text, const std::string& token, const std::string& message,
                          std::size_t nth = 0, std::size_t from = 0) {
  const auto [line, column] = locate(text, token, nth, from);
  throw ParseError(line, column, message);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    throw ParseError(line, column, colon == std::string::npos ? what : what.substr(colon + 2));
  }
}

const std::regex& label_pattern() {
  static const std::regex re("^[A-Za-z][A-Za-z0-9_]*$");
  return re;
}

std::vector<PointLabel> read_labels(const json& j, std::string_view text, const std::string& where) {
  if (!j.is_array()) fail_at(text, where, where + " must be an array of labels");
  std::vector<PointLabel> out;
  for (const auto& item : j) {
    if (!item.is_string()) fail_at(text, where, where + " must contain only label strings");
    const std::string label = item.get<std::string>();
    if (!std::regex_match(label, label_pattern())) fail_at(text, label, "bad point label " + quote(label));
    out.push_back(label);
  }
  return out;
}

std::map<int, std::vector<Flat>> read_levels(const json& j, std::string_view text, const std::string& key, int rank) {
  if (!j.is_object()) fail_at(text, key, key + " must be an object keyed by rank");
  std::map<int, std::vector<Flat>> out;
  for (const auto& [k, flats] : j.items()) {
    int r = -1;
    if (!k.empty() && k.size() <= 3 && std::all_of(k.begin(), k.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      r = std::stoi(k);
    }
    if (r < 0 || r > rank) fail_at(text, k, "rank key " + quote(k) + " is not between 0 and " + std::to_string(rank));
    if (!flats.is_array()) fail_at(text, k, "flats of rank " + k + " must be an array");
    auto& level = out[r];
    for (const auto& f : flats) level.push_back(LabelSet(read_labels(f, text, k)));
  }
  return out;
}

Geometry geometry_from_json(const json& j, std::string_view text, std::size_t offset) {
  if (!j.is_object()) throw ParseError(1, 1, "a geometry document must be an object");
  for (const auto& [k, v] : j.items()) {
    if (k != "rank" && k != "points" && k != "nontrivial_flats" && k != "full_flats") {
      fail_at(text, k, "unknown key " + quote(k), 0, offset);
    }
  }
  if (!j.contains("rank") || !j["rank"].is_number_integer()) fail_at(text, "rank", "rank must be an integer", 0, offset);
  const int rank = j["rank"].get<int>();
  if (rank < 0) fail_at(text, "rank", "rank must not be negative", 0, offset);
  if (!j.contains("points")) throw ParseError(1, 1, "missing points");
  const std::vector<PointLabel> points = read_labels(j["points"], text, "points");
  std::set<PointLabel> seen;
  for (const auto& p : points) {
    if (!seen.insert(p).second) {
      const std::size_t start = text.find("\"points\"", offset);
      fail_at(text, p, "point label " + quote(p) + " is repeated", 1, start == std::string_view::npos ? 0 : start);
    }
  }
  std::map<int, std::vector<Flat>> listed;
  if (j.contains("nontrivial_flats")) listed = read_levels(j["nontrivial_flats"], text, "nontrivial_flats", rank);
  const Geometry g = Geometry::from_nontrivial_flats(rank, points, listed);
  if (j.contains("full_flats")) {
    const auto full = read_levels(j["full_flats"], text, "full_flats", rank);
    std::vector<std::vector<Flat>> levels(static_cast<std::size_t>(rank) + 1);
    for (const auto& [r, flats] : full) levels[static_cast<std::size_t>(r)] = flats;
    if (!(Geometry::from_flats(points, levels) == g)) {
      throw Error(ErrorKind::Validation, "full_flats do not match the completion of nontrivial_flats");
    }
  }
  return g;
}

}  // namespace

std::string write_geometry(const Geometry& g, bool full_flats) {
  std::ostringstream s;
  write_geometry_body(s, g, full_flats, "");
  s << "\n";
  return s.str();
}

Geometry read_geometry(std::string_view text) { return geometry_from_json(parse_json(text), text, 0); }

std::string write_construction(const Construction& c) {
  std::ostringstream s;
  s << "{\n  \"base\": ";
  write_geometry_body(s, c.base, false, "  ");
  s << ",\n  \"steps\": [";
  if (c.steps.empty()) {
    s << "]\n";
  } else {
    s << "\n";
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      s << "    {\"base\": " << label_array(c.steps[i].base) << ", \"point\": " << quote(c.steps[i].point) << "}"
        << (i + 1 < c.steps.size() ? "," : "") << "\n";
    }
    s << "  ]\n";
  }
  s << "}\n";
  return s.str();
}

Construction read_construction(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError(1, 1, "a construction document must be an object");
  for (const auto& [k, v] : j.items()) {
    if (k != "base" && k != "steps") fail_at(text, k, "unknown key " + quote(k));
  }
  if (!j.contains("base")) throw ParseError(1, 1, "missing base");
  const std::size_t base_at = text.find("\"base\"");
  Construction c{geometry_from_json(j["base"], text, base_at == std::string_view::npos ? 0 : base_at), {}};
  if (j.contains("steps")) {
    if (!j["steps"].is_array()) fail_at(text, "steps", "steps must be an array");
    for (const auto& step : j["steps"]) {
      if (!step.is_object() || !step.contains("point") || !step["point"].is_string() || !step.contains("base")) {
        fail_at(text, "steps", "each step needs a point label and a base array");
      }
      const std::string p = step["point"].get<std::string>();
      if (!std::regex_match(p, label_pattern())) fail_at(text, p, "bad point label " + quote(p));
      c.steps.push_back({p, LabelSet(read_labels(step["base"], text, "base"))});
    }
  }
  validate_construction(c);
  return c;
}

std::string export_hasse_dot(const Geometry& g) {
  std::vector<std::pair<int, Flat>> nodes;
  for (int r = 0; r <= g.rank(); ++r) {
    for (const auto& f : sorted_flats(g, r)) nodes.push_back({r, f});
  }
  std::ostringstream s;
  s << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    s << "  f" << i << " [label=" << quote(nodes[i].second.str()) << "];\n";
  }
  for (int r = 0; r <= g.rank(); ++r) {
    s << "  { rank=same;";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].first == r) s << " f" << i << ";";
    }
    s << " }\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k].first == nodes[i].first + 1 && nodes[i].second.is_subset_of(nodes[k].second)) {
        s << "  f" << i << " -> f" << k << ";\n";
      }
    }
  }
  s << "}\n";
  return s.str();
}

}  // namespace geolat
