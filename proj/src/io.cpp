#include "covagram/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace covagram::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

Rational coordinate_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (j.is_number_float())
    throw ParseError(
        "non-integer numeric coordinates must be written as strings (\"0.25\" or \"1/4\") "
        "to stay exact");
  throw ParseError("coordinate must be an integer or a string");
}

std::string verdict_str(Verdict v) { return v == Verdict::Pass ? "pass" : "fail"; }

json direction_json(const Direction& d) { return json::array({d.p(), d.q()}); }

}  // namespace

InputKind detect_input_kind(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return InputKind::Region;
    return InputKind::LatticeSet;
  }
  throw ParseError("empty input");
}

LatticeSet parse_lattice_set(std::string_view text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty lattice set input");

  std::vector<LatticePoint> points;
  if (text[first] == '[') {
    json j = parse_json(text);
    if (!j.is_array()) throw ParseError("lattice set JSON must be an array of [x, y] pairs");
    for (const json& entry : j) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
          !entry[1].is_number_integer())
        throw ParseError("lattice set entries must be [x, y] integer pairs");
      points.push_back({entry[0].get<std::int64_t>(), entry[1].get<std::int64_t>()});
    }
  } else {
    // ASCII grid, rows top to bottom.
    std::vector<std::string> rows;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      rows.push_back(line);
    }
    while (!rows.empty() && rows.front().empty()) rows.erase(rows.begin());
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    if (rows.empty()) throw ParseError("empty lattice set input");
    std::int64_t height = static_cast<std::int64_t>(rows.size());
    for (std::int64_t r = 0; r < height; ++r) {
      const std::string& row = rows[static_cast<std::size_t>(r)];
      for (std::int64_t c = 0; c < static_cast<std::int64_t>(row.size()); ++c) {
        char ch = row[static_cast<std::size_t>(c)];
        if (ch == '#')
          points.push_back({c, height - 1 - r});
        else if (ch != '.')
          throw ParseError("grid rows may contain only '#' and '.'");
      }
    }
  }
  try {
    return LatticeSet(std::move(points));
  } catch (const std::invalid_argument&) {
    throw ParseError("lattice set input contains no points");
  }
}

LatticeSet load_lattice_set(const std::filesystem::path& path) {
  return parse_lattice_set(read_file(path));
}

json lattice_set_to_json(const LatticeSet& set) {
  json out = json::array();
  for (const LatticePoint& p : set.points()) out.push_back(json::array({p.x, p.y}));
  return out;
}

std::string lattice_set_to_grid(const LatticeSet& set) {
  LatticeBox box = set.bounding_box();
  std::string out;
  for (std::int64_t y = box.max_y; y >= box.min_y; --y) {
    for (std::int64_t x = box.min_x; x <= box.max_x; ++x)
      out += set.contains({x, y}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

RectUnion parse_region(std::string_view text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("rects") || !j["rects"].is_array())
    throw ParseError("region file must be an object with a \"rects\" array");
  std::vector<Rect> rects;
  for (const json& entry : j["rects"]) {
    if (!entry.is_array() || entry.size() != 4)
      throw ParseError("each rectangle must be [x0, x1, y0, y1]");
    rects.emplace_back(coordinate_from_json(entry[0]), coordinate_from_json(entry[1]),
                       coordinate_from_json(entry[2]), coordinate_from_json(entry[3]));
  }
  return RectUnion(std::move(rects));
}

RectUnion load_region(const std::filesystem::path& path) { return parse_region(read_file(path)); }

json region_to_json(const RectUnion& region) {
  json rects = json::array();
  for (const Rect& r : region.rects())
    rects.push_back(json::array({format_rational(r.x0), format_rational(r.x1),
                                 format_rational(r.y0), format_rational(r.y1)}));
  return json{{"rects", rects}};
}

json polygon_to_json(const ConvexPolygon& polygon) {
  json out = json::array();
  for (const RatPoint& v : polygon.vertices())
    out.push_back(json::array({format_rational(v.x), format_rational(v.y)}));
  return out;
}

json multiset_to_json(const DifferenceMultiset& multiset) {
  json out = json::array();
  for (const auto& [v, m] : multiset.entries()) out.push_back(json::array({v.x, v.y, m}));
  return out;
}

json pair_to_json(const HomometricPair& pair, int pair_id) {
  std::string congruent_under;
  switch (pair.congruence) {
    case PairCongruence::None:
      congruent_under = "none";
      break;
    case PairCongruence::LineReflection:
      congruent_under = "line_reflection";
      break;
    case PairCongruence::RotationOnly:
      congruent_under = "rotation_only";
      break;
  }
  return json{{"d", static_cast<std::int64_t>(pair.first.size())},
              {"pair_id", pair_id},
              {"A", lattice_set_to_json(pair.first.cells())},
              {"B", lattice_set_to_json(pair.second.cells())},
              {"congruent_under", congruent_under},
              {"difference_multiset", multiset_to_json(pair.multiset)}};
}

json pairs_to_json(const std::vector<HomometricPair>& pairs) {
  json out = json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out.push_back(pair_to_json(pairs[i], static_cast<int>(i)));
  return out;
}

json report_to_json(const ConvexityReport& report) {
  json dw = json::array();
  for (const auto& row : report.derivative_width)
    dw.push_back(json{{"direction", direction_json(row.direction)},
                      {"verdict", verdict_str(row.verdict)},
                      {"derivative_scaled", format_rational(row.derivative_scaled)},
                      {"half_width_scaled", format_rational(row.half_width_scaled)}});
  json cc = json::array();
  for (const auto& row : report.chord_condition_hp)
    cc.push_back(json{{"direction", direction_json(row.direction)},
                      {"verdict", verdict_str(row.verdict)},
                      {"value", format_rational(row.value)}});
  json pb = json::array();
  for (const auto& row : report.projection_bounds)
    pb.push_back(json{{"direction", direction_json(row.direction)},
                      {"verdict", verdict_str(row.verdict)},
                      {"derivative_scaled", format_rational(row.derivative_scaled)},
                      {"lower_bound", format_rational(row.lower_bound)},
                      {"upper_bound", format_rational(row.upper_bound)}});
  return json{
      {"support_convex",
       {{"verdict", verdict_str(report.support_convex.verdict)},
        {"hull_excess_area", format_rational(report.support_convex.hull_excess_area)}}},
      {"diffbody_equals_hull_diffbody",
       {{"verdict", verdict_str(report.diffbody_equals_hull_diffbody.verdict)},
        {"symmetric_difference_area",
         format_rational(report.diffbody_equals_hull_diffbody.symmetric_difference_area)}}},
      {"derivative_width", dw},
      {"chord_condition_hp", cc},
      {"rogers_shephard_bm",
       {{"verdict", verdict_str(report.rogers_shephard_bm.verdict)},
        {"covariogram_at_zero",
         format_rational(report.rogers_shephard_bm.covariogram_at_zero)},
        {"lower_bound", format_rational(report.rogers_shephard_bm.lower_bound)},
        {"upper_bound", format_rational(report.rogers_shephard_bm.upper_bound)}}},
      {"projection_bounds", pb},
      {"overall",
       report.overall == Overall::DisprovedConvexity ? "disproved-convexity" : "inconclusive"}};
}

std::string report_to_table(const ConvexityReport& report) {
  std::ostringstream out;
  auto line = [&](const std::string& name, Verdict v, const std::string& detail) {
    out << name;
    for (std::size_t i = name.size(); i < 28; ++i) out << ' ';
    out << (v == Verdict::Pass ? "pass" : "FAIL");
    if (!detail.empty()) out << "  " << detail;
    out << '\n';
  };
  auto dir_str = [](const Direction& d) {
    return "(" + std::to_string(d.p()) + "," + std::to_string(d.q()) + ")";
  };
  line("support-convex", report.support_convex.verdict,
       "hull excess area = " + format_rational(report.support_convex.hull_excess_area));
  line("diffbody-vs-hull", report.diffbody_equals_hull_diffbody.verdict,
       "symmetric difference area = " +
           format_rational(report.diffbody_equals_hull_diffbody.symmetric_difference_area));
  for (const auto& row : report.derivative_width)
    line("derivative-width " + dir_str(row.direction), row.verdict,
         format_rational(row.derivative_scaled) + " vs " +
             format_rational(row.half_width_scaled));
  for (const auto& row : report.chord_condition_hp)
    line("chord-condition " + dir_str(row.direction), row.verdict,
         "value = " + format_rational(row.value));
  line("rogers-shephard-bm", report.rogers_shephard_bm.verdict,
       format_rational(report.rogers_shephard_bm.lower_bound) + " <= " +
           format_rational(report.rogers_shephard_bm.covariogram_at_zero) + " <= " +
           format_rational(report.rogers_shephard_bm.upper_bound));
  for (const auto& row : report.projection_bounds)
    line("projection-bounds " + dir_str(row.direction), row.verdict,
         format_rational(row.derivative_scaled) + " in [" + format_rational(row.lower_bound) +
             ", " + format_rational(row.upper_bound) + "]");
  out << "overall: "
      << (report.overall == Overall::DisprovedConvexity ? "disproved-convexity" : "inconclusive")
      << '\n';
  return out.str();
}

std::vector<Direction> parse_direction_list(std::string_view text) {
  std::vector<Direction> dirs;
  std::string buffer(text);
  std::istringstream in(buffer);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    size_t comma = item.find(',');
    if (comma == std::string::npos) throw ParseError("direction must be 'p,q'");
    try {
      long p = std::stol(item.substr(0, comma));
      long q = std::stol(item.substr(comma + 1));
      dirs.emplace_back(p, q);
    } catch (const std::invalid_argument&) {
      throw ParseError("direction components must be integers");
    } catch (const std::out_of_range&) {
      throw ParseError("direction component out of range");
    }
  }
  if (dirs.empty()) throw ParseError("empty direction list");
  return dirs;
}

GridSpec parse_grid_spec(std::string_view text) {
  std::string buffer(text);
  size_t comma = buffer.find(',');
  if (comma == std::string::npos)
    throw ParseError("grid spec must be 'x0:x1:nx,y0:y1:ny'");
  auto parse_axis = [](const std::string& axis, Rational& lo, Rational& hi, int& n) {
    size_t c1 = axis.find(':');
    size_t c2 = axis.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw ParseError("grid axis must be 'lo:hi:count'");
    try {
      lo = parse_rational(axis.substr(0, c1));
      hi = parse_rational(axis.substr(c1 + 1, c2 - c1 - 1));
      n = std::stoi(axis.substr(c2 + 1));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad grid axis: ") + e.what());
    }
    if (n < 1) throw ParseError("grid sample count must be at least 1");
    if (n > 1 && !(lo < hi)) throw ParseError("grid axis needs lo < hi");
  };
  GridSpec spec;
  parse_axis(buffer.substr(0, comma), spec.x0, spec.x1, spec.nx);
  parse_axis(buffer.substr(comma + 1), spec.y0, spec.y1, spec.ny);
  return spec;
}

RatPoint parse_point(std::string_view text) {
  std::string buffer(text);
  size_t comma = buffer.find(',');
  if (comma == std::string::npos) throw ParseError("point must be 'x,y'");
  try {
    return RatPoint{parse_rational(buffer.substr(0, comma)),
                    parse_rational(buffer.substr(comma + 1))};
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad point: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path.string());
  out << contents;
}

}  // namespace covagram::io
