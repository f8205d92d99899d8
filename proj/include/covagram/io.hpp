#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "covagram/convexity.hpp"
#include "covagram/lattice.hpp"
#include "covagram/region.hpp"

namespace covagram::io {

// Malformed input (bad JSON, bad grid characters, bad literals). Domain
// violations (empty sets, degenerate rectangles, disconnected polyominoes)
// keep throwing std::invalid_argument from the core types.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class InputKind { LatticeSet, Region };

// '{' starts a region file, '[' a lattice JSON array, anything else is
// treated as an ASCII cell grid.
InputKind detect_input_kind(std::string_view text);

// JSON array of [x, y] integer pairs, or an ASCII grid of '#' (cell) and
// '.' (empty) with rows listed top to bottom.
LatticeSet parse_lattice_set(std::string_view text);
LatticeSet load_lattice_set(const std::filesystem::path& path);
nlohmann::json lattice_set_to_json(const LatticeSet& set);
std::string lattice_set_to_grid(const LatticeSet& set);

// {"rects": [[x0, x1, y0, y1], ...]} where every coordinate is a JSON
// integer, a decimal string, or a "p/q" string, all parsed exactly.
RectUnion parse_region(std::string_view text);
RectUnion load_region(const std::filesystem::path& path);
nlohmann::json region_to_json(const RectUnion& region);

nlohmann::json polygon_to_json(const ConvexPolygon& polygon);
nlohmann::json multiset_to_json(const DifferenceMultiset& multiset);

nlohmann::json pair_to_json(const HomometricPair& pair, int pair_id);
nlohmann::json pairs_to_json(const std::vector<HomometricPair>& pairs);

nlohmann::json report_to_json(const ConvexityReport& report);
std::string report_to_table(const ConvexityReport& report);

// "p,q;p,q;..." with integer components.
std::vector<Direction> parse_direction_list(std::string_view text);

// "x0:x1:nx,y0:y1:ny" with rational endpoints and integer sample counts.
struct GridSpec {
  Rational x0, x1;
  int nx = 0;
  Rational y0, y1;
  int ny = 0;
};
GridSpec parse_grid_spec(std::string_view text);

// "x,y" with rational components.
RatPoint parse_point(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace covagram::io
