// covagram: exact covariograms, difference sets and homometric-pair search
// for planar lattice sets and axis-aligned rectangle unions.
//
// Exit codes: 0 success, 1 domain rejection (precondition failure),
// 2 usage or input-format error.

#include <chrono>
#include <ctime>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covagram/convexity.hpp"
#include "covagram/covariogram.hpp"
#include "covagram/io.hpp"
#include "covagram/lattice.hpp"
#include "covagram/region.hpp"

namespace {

using namespace covagram;

constexpr int kCliMaxCells = 10;

struct GlobalOptions {
  bool timestamps = false;
};

std::string timestamp_line() {
  std::time_t now = std::time(nullptr);
  char buffer[64];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%S", std::gmtime(&now));
  return std::string("generated_at: ") + buffer + "Z\n";
}

void check_cli_cell_count(int d) {
  if (d < 1 || d > kCliMaxCells)
    throw std::invalid_argument("d must be between 1 and " + std::to_string(kCliMaxCells));
}

SymmetryGroup parse_group(const std::string& name) {
  if (name == "to") return SymmetryGroup::TranslationOnly;
  if (name == "tpr") return SymmetryGroup::TranslationPointReflection;
  if (name == "full") return SymmetryGroup::FullSquareIsometry;
  throw std::invalid_argument("unknown symmetry group: " + name + " (expected to|tpr|full)");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    io::write_file(out_path, text);
}

struct EnumerateOptions {
  int d = 0;
  std::string group = "tpr";
  std::string klass;
  std::string format = "table";
  std::string out;
  bool list = false;
};

int run_enumerate(const EnumerateOptions& opt, const GlobalOptions& global) {
  check_cli_cell_count(opt.d);
  SymmetryGroup group = parse_group(opt.group);
  std::optional<std::pair<std::int64_t, std::int64_t>> filter;
  if (!opt.klass.empty()) {
    size_t x = opt.klass.find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument("missing 'x'");
      filter = {std::stoll(opt.klass.substr(0, x)), std::stoll(opt.klass.substr(x + 1))};
    } catch (const std::exception&) {
      throw io::ParseError("class filter must look like HxB, e.g. 3x3");
    }
  }

  std::vector<Polyomino> reps = enumerate_polyominoes(opt.d, group);
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> class_counts;
  std::vector<const Polyomino*> selected;
  for (const Polyomino& p : reps) {
    auto hb = bounding_box_class(p);
    ++class_counts[hb];
    if (!filter || hb == *filter) selected.push_back(&p);
  }

  std::ostringstream text;
  if (global.timestamps) text << timestamp_line();
  if (opt.format == "json") {
    nlohmann::json classes = nlohmann::json::object();
    for (const auto& [hb, count] : class_counts) {
      if (filter && hb != *filter) continue;
      classes[std::to_string(hb.first) + "x" + std::to_string(hb.second)] = count;
    }
    nlohmann::json out{{"d", opt.d},
                       {"group", opt.group},
                       {"classes", classes},
                       {"total", static_cast<std::int64_t>(selected.size())}};
    if (opt.list) {
      nlohmann::json polys = nlohmann::json::array();
      for (const Polyomino* p : selected) polys.push_back(io::lattice_set_to_json(p->cells()));
      out["polyominoes"] = polys;
    }
    text << out.dump(2) << '\n';
  } else {
    for (const auto& [hb, count] : class_counts) {
      if (filter && hb != *filter) continue;
      text << "class " << hb.first << "x" << hb.second << ": " << count << '\n';
    }
    text << "total: " << selected.size() << '\n';
    if (opt.list) {
      for (const Polyomino* p : selected) text << '\n' << io::lattice_set_to_grid(p->cells());
    }
  }
  emit(text.str(), opt.out);
  return 0;
}

struct SearchOptions {
  int d = 0;
  std::string out;
};

int run_search(const SearchOptions& opt, const GlobalOptions& global) {
  check_cli_cell_count(opt.d);
  std::vector<HomometricPair> pairs = search_homometric_pairs(opt.d);
  nlohmann::json records = io::pairs_to_json(pairs);
  std::ostringstream text;
  if (global.timestamps) text << timestamp_line();
  if (opt.out.empty()) {
    text << records.dump(2) << '\n';
  } else {
    io::write_file(opt.out, records.dump(2) + "\n");
  }
  text << "pairs found: " << pairs.size() << '\n';
  std::cout << text.str();
  return 0;
}

struct CovariogramOptions {
  std::string input;
  std::string at;
  std::string grid;
  bool bridge = false;
  int decimal = -1;
  std::string out;
};

int run_covariogram(const CovariogramOptions& opt, const GlobalOptions& global) {
  std::string contents = io::read_file(opt.input);
  io::InputKind kind = io::detect_input_kind(contents);
  if (opt.at.empty() == opt.grid.empty())
    throw std::invalid_argument("exactly one of --at or --grid is required");

  std::optional<AnimalCovariogram> animal;
  std::optional<RectUnion> region;
  if (kind == io::InputKind::LatticeSet) {
    Polyomino p(io::parse_lattice_set(contents));
    animal.emplace(std::move(p));
    if (opt.bridge) region = animal_region(animal->polyomino());
  } else {
    if (opt.bridge)
      throw std::invalid_argument("--bridge applies only to polyomino (lattice set) input");
    region = io::parse_region(contents);
  }

  auto value_at = [&](const RatPoint& x) {
    if (animal) {
      Rational bridged = (*animal)(x);
      if (opt.bridge) {
        Rational direct = region_covariogram(*region, x);
        if (bridged != direct)
          throw std::runtime_error("bridge mismatch at (" + format_rational(x.x) + ", " +
                                   format_rational(x.y) + "): multiset route " +
                                   format_rational(bridged) + " vs region route " +
                                   format_rational(direct));
      }
      return bridged;
    }
    return region_covariogram(*region, x);
  };
  auto render = [&](const Rational& v) {
    return opt.decimal >= 0 ? format_decimal(v, opt.decimal) : format_rational(v);
  };

  std::ostringstream text;
  if (global.timestamps) text << timestamp_line();
  if (!opt.at.empty()) {
    RatPoint x = io::parse_point(opt.at);
    text << render(value_at(x)) << '\n';
  } else {
    io::GridSpec spec = io::parse_grid_spec(opt.grid);
    text << "x,y,g\n";
    for (int i = 0; i < spec.nx; ++i) {
      Rational x = spec.nx == 1 ? spec.x0
                                : spec.x0 + (spec.x1 - spec.x0) * i / (spec.nx - 1);
      for (int j = 0; j < spec.ny; ++j) {
        Rational y = spec.ny == 1 ? spec.y0
                                  : spec.y0 + (spec.y1 - spec.y0) * j / (spec.ny - 1);
        text << render(x) << ',' << render(y) << ',' << render(value_at({x, y})) << '\n';
      }
    }
  }
  emit(text.str(), opt.out);
  return 0;
}

struct CheckConvexityOptions {
  std::string region;
  std::string directions;
  std::string format = "table";
  std::string out;
};

int run_check_convexity(const CheckConvexityOptions& opt, const GlobalOptions& global) {
  RectUnion region = io::load_region(opt.region);
  std::vector<Direction> dirs = opt.directions.empty()
                                    ? default_directions()
                                    : io::parse_direction_list(opt.directions);
  ConvexityReport report = run_battery(region, dirs);
  std::ostringstream text;
  if (global.timestamps) text << timestamp_line();
  if (opt.format == "json")
    text << io::report_to_json(report).dump(2) << '\n';
  else
    text << io::report_to_table(report);
  emit(text.str(), opt.out);
  return 0;
}

struct ConstructOptions {
  std::string a_path;
  std::string b_path;
  std::string prefix = "construct";
};

int run_construct(const ConstructOptions& opt, const GlobalOptions& global) {
  LatticeSet a = io::load_lattice_set(opt.a_path);
  LatticeSet b = io::load_lattice_set(opt.b_path);
  auto [sum, diff] = sum_diff_construction(a, b);
  bool verified = homometric(sum, diff);
  std::string sum_path = opt.prefix + ".sum.json";
  std::string diff_path = opt.prefix + ".diff.json";
  io::write_file(sum_path, io::lattice_set_to_json(sum).dump() + "\n");
  io::write_file(diff_path, io::lattice_set_to_json(diff).dump() + "\n");
  if (global.timestamps) std::cout << timestamp_line();
  std::cout << "wrote " << sum_path << " (" << sum.size() << " points)\n";
  std::cout << "wrote " << diff_path << " (" << diff.size() << " points)\n";
  std::cout << "homometric: " << (verified ? "true" : "false") << '\n';
  if (!verified) throw std::runtime_error("construction outputs are not homometric");
  return 0;
}

struct VerifyBridgeOptions {
  std::string input;
  int samples = 100;
  unsigned seed = 7;
};

int run_verify_bridge(const VerifyBridgeOptions& opt, const GlobalOptions& global) {
  Polyomino p(io::parse_lattice_set(io::read_file(opt.input)));
  AnimalCovariogram bridged(p);
  RectUnion region = animal_region(p);
  std::uint64_t state = opt.seed * 2862933555777941757ull + 3037000493ull;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  std::int64_t extent = static_cast<std::int64_t>(p.size()) + 1;
  for (int i = 0; i < opt.samples; ++i) {
    long den = static_cast<long>(next() % 12 + 1);
    long nx = static_cast<long>(next() % static_cast<std::uint64_t>(2 * extent * den)) -
              extent * den;
    long ny = static_cast<long>(next() % static_cast<std::uint64_t>(2 * extent * den)) -
              extent * den;
    RatPoint x{make_rational(nx, den), make_rational(ny, den)};
    Rational via_multiset = bridged(x);
    Rational via_region = region_covariogram(region, x);
    if (via_multiset != via_region)
      throw std::runtime_error("bridge mismatch at (" + format_rational(x.x) + ", " +
                               format_rational(x.y) + ")");
  }
  if (global.timestamps) std::cout << timestamp_line();
  std::cout << "bridge verified: " << opt.samples << " samples\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact covariograms, difference sets and homometric-pair search"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_flag("--timestamps", global.timestamps,
               "include a generation timestamp in the output");

  EnumerateOptions enum_opt;
  CLI::App* enum_cmd = app.add_subcommand(
      "enumerate", "Enumerate polyomino representatives and class counts");
  enum_cmd->add_option("-d,--cells", enum_opt.d, "number of cells (1..10)")->required();
  enum_cmd->add_option("--group", enum_opt.group,
                       "symmetry group: to (translations), tpr (translations and point "
                       "reflections), full (all square isometries)")
      ->check(CLI::IsMember({"to", "tpr", "full"}));
  enum_cmd->add_option("--class", enum_opt.klass, "restrict to bounding-box class HxB");
  enum_cmd->add_option("--format", enum_opt.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  enum_cmd->add_option("-o,--out", enum_opt.out, "write output to a file");
  enum_cmd->add_flag("--list", enum_opt.list, "also print the representatives");

  SearchOptions search_opt;
  CLI::App* search_cmd =
      app.add_subcommand("search", "Search for non-congruent homometric polyomino pairs");
  search_cmd->add_option("-d,--cells", search_opt.d, "number of cells (1..10)")->required();
  search_cmd->add_option("-o,--out", search_opt.out, "write the JSON records to a file");

  CovariogramOptions cov_opt;
  CLI::App* cov_cmd = app.add_subcommand(
      "covariogram", "Evaluate the covariogram of a polyomino animal or region");
  cov_cmd->add_option("--input", cov_opt.input, "lattice set (JSON/grid) or region JSON file")
      ->required();
  cov_cmd->add_option("--at", cov_opt.at, "evaluation point 'x,y' (exact rationals)");
  cov_cmd->add_option("--grid", cov_opt.grid, "CSV sampling grid 'x0:x1:nx,y0:y1:ny'");
  cov_cmd->add_flag("--bridge", cov_opt.bridge,
                    "for polyominoes, evaluate through the difference multiset and cross-check "
                    "against the region route, failing loudly on mismatch");
  cov_cmd->add_option("--decimal", cov_opt.decimal,
                      "render values with this many decimal digits (lossy; default exact p/q)");
  cov_cmd->add_option("-o,--out", cov_opt.out, "write output to a file");

  CheckConvexityOptions check_opt;
  CLI::App* check_cmd = app.add_subcommand(
      "check-convexity", "Run the necessary-condition battery on a region");
  check_cmd->add_option("--region", check_opt.region, "region JSON file")->required();
  check_cmd->add_option("--directions", check_opt.directions,
                        "semicolon-separated integer directions, e.g. '1,0;0,1;1,1'");
  check_cmd->add_option("--format", check_opt.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  check_cmd->add_option("-o,--out", check_opt.out, "write output to a file");

  ConstructOptions construct_opt;
  CLI::App* construct_cmd = app.add_subcommand(
      "construct", "Build the homometric pair (A+B, A-B) from two lattice sets");
  construct_cmd->add_option("--a", construct_opt.a_path, "lattice set A")->required();
  construct_cmd->add_option("--b", construct_opt.b_path, "lattice set B")->required();
  construct_cmd->add_option("-o,--out", construct_opt.prefix,
                            "output prefix (writes <prefix>.sum.json and <prefix>.diff.json)");

  VerifyBridgeOptions verify_opt;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-bridge", "Cross-check the multiset and region covariogram routes at random points");
  verify_cmd->add_option("--input", verify_opt.input, "polyomino file")->required();
  verify_cmd->add_option("--samples", verify_opt.samples, "number of random points");
  verify_cmd->add_option("--seed", verify_opt.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*enum_cmd) return run_enumerate(enum_opt, global);
    if (*search_cmd) return run_search(search_opt, global);
    if (*cov_cmd) return run_covariogram(cov_opt, global);
    if (*check_cmd) return run_check_convexity(check_opt, global);
    if (*construct_cmd) return run_construct(construct_opt, global);
    if (*verify_cmd) return run_verify_bridge(verify_opt, global);
  } catch (const covagram::io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
