#include "belmap/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "belmap/errors.hpp"

namespace belmap::io {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary: keep LF endings
  if (!out) {
    throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  }
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
  }
  return in;
}

double parse_double(const std::string& token, const std::string& where) {
  if (token == "inf" || token == "+inf") {
    return std::numeric_limits<double>::infinity();
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ConfigInvalid(
        fmt::format("{}: '{}' is not a number", where, token));
  }
}

long parse_long(const std::string& token, const std::string& where) {
  long v = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ConfigInvalid(
        fmt::format("{}: '{}' is not an integer", where, token));
  }
  return v;
}

std::uint64_t parse_u64(const std::string& token, const std::string& where) {
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ConfigInvalid(
        fmt::format("{}: '{}' is not an unsigned integer", where, token));
  }
  return v;
}

/// Splits a config line into tokens, dropping comments.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) {
    if (token.front() == '#') break;
    tokens.push_back(token);
  }
  return tokens;
}

void expect_args(const std::vector<std::string>& tokens, std::size_t n,
                 const std::string& where) {
  if (tokens.size() != n + 1) {
    throw ConfigInvalid(fmt::format("{}: '{}' takes {} arguments, got {}",
                                    where, tokens[0], n, tokens.size() - 1));
  }
}

}  // namespace

void write_csv(const GridMap& map, std::ostream& out) {
  for (Index y = 0; y < map.height(); ++y) {
    for (Index x = 0; x < map.width(); ++x) {
      if (x > 0) out << ',';
      out << fmt::format("{:.17g}", map(x, y));
    }
    out << '\n';
  }
}

void write_csv(const TextureMap& map, std::ostream& out) {
  for (Index y = 0; y < map.height(); ++y) {
    for (Index x = 0; x < map.width(); ++x) {
      if (x > 0) out << ',';
      out << map(x, y);
    }
    out << '\n';
  }
}

void write_csv(const GridMap& map, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_csv(map, out);
  if (!out) throw IoError(fmt::format("write to '{}' failed", path.string()));
}

void write_csv(const TextureMap& map, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_csv(map, out);
  if (!out) throw IoError(fmt::format("write to '{}' failed", path.string()));
}

GridMap read_csv(std::istream& in, const std::string& name) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (start <= line.size()) {
      const std::size_t comma = line.find(',', start);
      const std::string cell =
          line.substr(start, comma == std::string::npos ? std::string::npos
                                                        : comma - start);
      try {
        row.push_back(parse_double(cell, name));
      } catch (const ConfigInvalid&) {
        throw IoError(fmt::format("{}: '{}' is not a number", name, cell));
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw IoError(fmt::format("{}: ragged CSV row {}", name, rows.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw IoError(fmt::format("{}: empty CSV", name));
  GridMap map(static_cast<Index>(rows.front().size()),
              static_cast<Index>(rows.size()));
  for (Index y = 0; y < map.height(); ++y) {
    for (Index x = 0; x < map.width(); ++x) {
      map(x, y) = rows[y][x];
    }
  }
  return map;
}

GridMap read_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_csv(in, path.string());
}

TextureMap read_texture_csv(const std::filesystem::path& path) {
  const GridMap real = read_csv(path);
  TextureMap map(real.width(), real.height());
  for (Index y = 0; y < map.height(); ++y) {
    for (Index x = 0; x < map.width(); ++x) {
      map(x, y) = static_cast<int>(std::lround(real(x, y)));
    }
  }
  return map;
}

void write_pgm(const GridMap& map, std::ostream& out,
               const std::string& label) {
  const double lo = map.values().minCoeff();
  const double hi = map.values().maxCoeff();
  const double span = hi > lo ? hi - lo : 1.0;
  out << "P2\n";
  out << fmt::format("# belmap {} scale_min={:.17g} scale_max={:.17g}\n",
                     label.empty() ? "layer" : label, lo, hi);
  out << map.width() << ' ' << map.height() << "\n255\n";
  for (Index y = map.height() - 1; y >= 0; --y) {  // north-up
    for (Index x = 0; x < map.width(); ++x) {
      const auto v =
          static_cast<int>(std::lround((map(x, y) - lo) / span * 255.0));
      out << std::clamp(v, 0, 255);
      out << (x + 1 == map.width() ? '\n' : ' ');
    }
  }
}

void write_pgm(const GridMap& map, const std::filesystem::path& path,
               const std::string& label) {
  auto out = open_out(path);
  write_pgm(map, out, label);
  if (!out) throw IoError(fmt::format("write to '{}' failed", path.string()));
}

std::uint64_t fnv1a64(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  char c;
  while (in.get(c)) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

SceneConfig parse_scene_config(std::istream& in, const std::string& name) {
  SceneConfig config;
  config.texture_regions.clear();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string where = fmt::format("{}:{}", name, line_no);
    const std::string& key = tokens[0];
    if (key == "grid") {
      expect_args(tokens, 2, where);
      config.width = parse_long(tokens[1], where);
      config.height = parse_long(tokens[2], where);
    } else if (key == "camera") {
      expect_args(tokens, 3, where);
      config.camera.x = parse_long(tokens[1], where);
      config.camera.y = parse_long(tokens[2], where);
      config.camera.height_above_ground = parse_double(tokens[3], where);
    } else if (key == "base_elevation") {
      expect_args(tokens, 1, where);
      config.base_elevation = parse_double(tokens[1], where);
    } else if (key == "base_temperature") {
      expect_args(tokens, 1, where);
      config.base_temperature = parse_double(tokens[1], where);
    } else if (key == "rock_profile") {
      expect_args(tokens, 1, where);
      if (tokens[1] == "cosine") {
        config.rock_profile = RockProfile::Cosine;
      } else if (tokens[1] == "gaussian") {
        config.rock_profile = RockProfile::Gaussian;
      } else {
        throw ConfigInvalid(
            fmt::format("{}: unknown rock profile '{}'", where, tokens[1]));
      }
    } else if (key == "rock") {
      expect_args(tokens, 5, where);
      config.rocks.push_back({parse_double(tokens[1], where),
                              parse_double(tokens[2], where),
                              parse_double(tokens[3], where),
                              parse_double(tokens[4], where),
                              static_cast<int>(parse_long(tokens[5], where))});
    } else if (key == "hotspot") {
      expect_args(tokens, 4, where);
      config.hot_spots.push_back({parse_double(tokens[1], where),
                                  parse_double(tokens[2], where),
                                  parse_double(tokens[3], where),
                                  parse_double(tokens[4], where)});
    } else if (key == "texture_background") {
      expect_args(tokens, 1, where);
      config.texture_background =
          static_cast<int>(parse_long(tokens[1], where));
    } else if (key == "texture_region") {
      expect_args(tokens, 5, where);
      config.texture_regions.push_back(
          {parse_long(tokens[1], where), parse_long(tokens[2], where),
           parse_long(tokens[3], where), parse_long(tokens[4], where),
           static_cast<int>(parse_long(tokens[5], where))});
    } else if (key == "dem_noise") {
      expect_args(tokens, 2, where);
      config.dem_noise = {parse_double(tokens[1], where),
                          parse_double(tokens[2], where)};
    } else if (key == "temperature_uncertainty") {
      expect_args(tokens, 2, where);
      config.temperature_uncertainty = {parse_double(tokens[1], where),
                                        parse_double(tokens[2], where)};
    } else if (key == "texture_uncertainty") {
      expect_args(tokens, 2, where);
      config.texture_uncertainty = {parse_double(tokens[1], where),
                                    parse_double(tokens[2], where)};
    } else if (key == "seed") {
      expect_args(tokens, 1, where);
      config.seed = parse_u64(tokens[1], where);
    } else if (key == "report_cell") {
      expect_args(tokens, 2, where);
      config.report_cells.emplace_back(parse_long(tokens[1], where),
                                       parse_long(tokens[2], where));
    } else {
      throw ConfigInvalid(fmt::format("{}: unknown key '{}'", where, key));
    }
  }
  validate(config);
  return config;
}

SceneConfig read_scene_config(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_scene_config(in, path.string());
}

namespace {

MassTriple parse_triple(const std::vector<std::string>& tokens,
                        std::size_t first, const std::string& where) {
  return MassTriple{parse_double(tokens[first], where),
                    parse_double(tokens[first + 1], where),
                    parse_double(tokens[first + 2], where)};
}

struct ExpertFile {
  std::string kind;
  std::string name;
  std::vector<IntervalBin> bins;
  MassTriple unknown;
  bool has_unknown = false;
  std::map<int, MassTriple> entries;
};

ExpertFile parse_expert_file(std::istream& in, const std::string& name) {
  ExpertFile file;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string where = fmt::format("{}:{}", name, line_no);
    const std::string& key = tokens[0];
    if (key == "kind") {
      expect_args(tokens, 1, where);
      file.kind = tokens[1];
    } else if (key == "name") {
      expect_args(tokens, 1, where);
      file.name = tokens[1];
    } else if (key == "bin") {
      expect_args(tokens, 5, where);
      file.bins.push_back({parse_double(tokens[1], where),
                           parse_double(tokens[2], where),
                           parse_triple(tokens, 3, where)});
    } else if (key == "default") {
      expect_args(tokens, 3, where);
      file.unknown = parse_triple(tokens, 1, where);
      file.has_unknown = true;
    } else if (key == "code") {
      expect_args(tokens, 4, where);
      file.entries[static_cast<int>(parse_long(tokens[1], where))] =
          parse_triple(tokens, 2, where);
    } else {
      throw ConfigInvalid(fmt::format("{}: unknown key '{}'", where, key));
    }
  }
  if (file.name.empty()) file.name = name;
  return file;
}

}  // namespace

IntervalExpertTable read_interval_expert(const std::filesystem::path& path) {
  auto in = open_in(path);
  ExpertFile file = parse_expert_file(in, path.string());
  if (file.kind != "interval") {
    throw ConfigInvalid(fmt::format(
        "'{}': expected an interval expert table, got kind '{}'",
        path.string(), file.kind));
  }
  return IntervalExpertTable(file.name, std::move(file.bins));
}

TextureExpertTable read_texture_expert(const std::filesystem::path& path) {
  auto in = open_in(path);
  ExpertFile file = parse_expert_file(in, path.string());
  if (file.kind != "texture") {
    throw ConfigInvalid(
        fmt::format("'{}': expected a texture expert table, got kind '{}'",
                    path.string(), file.kind));
  }
  if (!file.has_unknown) {
    throw ConfigInvalid(fmt::format(
        "'{}': texture table needs a 'default' entry", path.string()));
  }
  return TextureExpertTable(file.name, file.unknown, std::move(file.entries));
}

namespace {

nlohmann::json mass_to_json(const MassAssignment& m) {
  return nlohmann::json{
      {"paradox", m.paradox()},
      {"not_interesting", m.not_interesting()},
      {"interesting", m.interesting()},
      {"uncertain", m.uncertain()},
      {"model", to_string(m.model())},
  };
}

}  // namespace

std::string report_to_json(const std::vector<CellReport>& reports) {
  nlohmann::json cells = nlohmann::json::array();
  for (const CellReport& report : reports) {
    nlohmann::json experts = nlohmann::json::array();
    for (const ExpertReading& r : report.readings) {
      experts.push_back({
          {"expert", r.expert},
          {"value", r.value},
          {"uncertainty", r.uncertainty},
          {"base",
           {{"paradox", r.base.paradox},
            {"not_interesting", r.base.not_interesting},
            {"interesting", r.base.interesting}}},
          {"mass", mass_to_json(r.mass)},
          {"reassigned", mass_to_json(r.reassigned)},
      });
    }
    cells.push_back({
        {"x", report.x},
        {"y", report.y},
        {"experts", experts},
        {"dsmt",
         {{"mass", mass_to_json(report.dsmt)},
          {"belief_interesting", report.dsmt_belief},
          {"plausibility_interesting", report.dsmt_plausibility}}},
        {"dst",
         {{"mass", mass_to_json(report.dst)},
          {"belief_interesting", report.dst_belief},
          {"plausibility_interesting", report.dst_plausibility}}},
    });
  }
  return nlohmann::json{{"cells", cells}}.dump(2) + "\n";
}

std::string report_to_text(const std::vector<CellReport>& reports) {
  std::ostringstream out;
  for (const CellReport& report : reports) {
    out << fmt::format("cell ({}, {})\n", report.x, report.y);
    out << fmt::format("  {:<14} {:>10} {:>6} | {:>8} {:>8} {:>8} {:>8}\n",
                       "expert", "value", "u", "m(P)", "m(NI)", "m(I)",
                       "m(U)");
    for (const ExpertReading& r : report.readings) {
      out << fmt::format(
          "  {:<14} {:>10.4g} {:>6.3g} | {:>8.5g} {:>8.5g} {:>8.5g} "
          "{:>8.5g}\n",
          r.expert, r.value, r.uncertainty, r.mass.paradox(),
          r.mass.not_interesting(), r.mass.interesting(), r.mass.uncertain());
    }
    const auto summary = [&](const char* rule, const MassAssignment& m,
                             double bel, double pl) {
      out << fmt::format(
          "  {:<21} | {:>8.5g} {:>8.5g} {:>8.5g} {:>8.5g}  Bel(I)={:.6g} "
          "Pl(I)={:.6g}\n",
          rule, m.paradox(), m.not_interesting(), m.interesting(),
          m.uncertain(), bel, pl);
    };
    summary("combined (dsmt)", report.dsmt, report.dsmt_belief,
            report.dsmt_plausibility);
    summary("combined (dst)", report.dst, report.dst_belief,
            report.dst_plausibility);
  }
  return out.str();
}

}  // namespace belmap::io
