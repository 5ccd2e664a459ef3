#include "slabrbf/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace slabrbf {

namespace {

const std::vector<std::string_view> kKeys = {
    "builtin",        "t0",
    "c1",             "omega",
    "phase_coeffs",   "source_poly",
    "i0_const",       "i1_const",
    "kernel",         "c",
    "m",              "n",
    "x_grid",         "scatter_quad_points",
    "flux_quad_points", "resnorm_grid_x",
    "resnorm_grid_y", "output_dir",
    "write_fields",   "field_samples",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ConfigError("key '" + key + "': expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

int to_int(const std::string& key, std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("key '" + key + "': expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> to_list(const std::string& key, const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<double> values;
  for (std::string token; in >> token;) values.push_back(to_double(key, token));
  if (values.empty()) throw ConfigError("key '" + key + "': expected a non-empty list");
  return values;
}

bool to_bool(const std::string& key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("key '" + key + "': expected true or false, got '" + std::string(text) + "'");
}

void require(bool condition, const std::string& message) {
  if (!condition) throw ConfigError(message);
}

}  // namespace

const std::vector<std::string_view>& config_keys() { return kKeys; }

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> values;
  int line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_number) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ConfigError("line " + std::to_string(line_number) + ": unknown key '" + key + "'");
    }
    values[key] = value;
  }
  return values;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_key_values(buffer.str());
}

RunConfig make_config(const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    require(std::find(kKeys.begin(), kKeys.end(), key) != kKeys.end(), "unknown key '" + key + "'");
  }
  const auto get = [&](std::string_view key) -> const std::string* {
    const auto it = values.find(std::string(key));
    return it == values.end() ? nullptr : &it->second;
  };

  RunConfig config;
  if (const auto* v = get("builtin")) {
    if (*v == "example1") config.builtin = Builtin::Example1;
    else if (*v == "example2") config.builtin = Builtin::Example2;
    else if (*v == "none") config.builtin = Builtin::None;
    else throw ConfigError("builtin must be example1, example2 or none, got '" + *v + "'");
  }

  const auto forbid = [&](std::initializer_list<std::string_view> keys, std::string_view why) {
    for (auto key : keys) {
      require(get(key) == nullptr, "key '" + std::string(key) + "' is not allowed " + std::string(why));
    }
  };
  switch (config.builtin) {
    case Builtin::Example1:
      forbid({"omega", "phase_coeffs", "source_poly", "i0_const", "i1_const"}, "with builtin = example1");
      break;
    case Builtin::Example2:
      forbid({"t0", "c1", "omega", "phase_coeffs", "source_poly", "i0_const", "i1_const"},
             "with builtin = example2");
      break;
    case Builtin::None:
      forbid({"c1"}, "unless builtin = example1");
      break;
  }

  if (const auto* v = get("t0")) config.t0 = to_double("t0", *v);
  if (const auto* v = get("c1")) config.c1 = to_double("c1", *v);
  if (const auto* v = get("omega")) config.omega = to_double("omega", *v);
  if (const auto* v = get("phase_coeffs")) config.phase_coeffs = to_list("phase_coeffs", *v);
  if (const auto* v = get("source_poly")) config.source_poly = to_list("source_poly", *v);
  if (const auto* v = get("i0_const")) config.i0_const = to_double("i0_const", *v);
  if (const auto* v = get("i1_const")) config.i1_const = to_double("i1_const", *v);

  auto& s = config.settings;
  if (const auto* v = get("kernel")) {
    try {
      s.family = parse_kernel_family(*v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (const auto* v = get("c")) s.shape = to_double("c", *v);
  if (const auto* v = get("m")) s.m = to_int("m", *v);
  if (const auto* v = get("n")) s.n = to_int("n", *v);
  if (const auto* v = get("x_grid")) {
    if (*v == "full") s.xgrid = XGrid::Full;
    else if (*v == "literal") s.xgrid = XGrid::Literal;
    else throw ConfigError("x_grid must be full or literal, got '" + *v + "'");
  }
  if (const auto* v = get("scatter_quad_points")) s.scatter_quad_points = to_int("scatter_quad_points", *v);
  if (const auto* v = get("flux_quad_points")) s.flux_quad_points = to_int("flux_quad_points", *v);
  if (const auto* v = get("resnorm_grid_x")) s.resnorm_grid_x = to_int("resnorm_grid_x", *v);
  if (const auto* v = get("resnorm_grid_y")) s.resnorm_grid_y = to_int("resnorm_grid_y", *v);
  if (const auto* v = get("output_dir")) config.output_dir = *v;
  if (const auto* v = get("write_fields")) config.write_fields = to_bool("write_fields", *v);
  if (const auto* v = get("field_samples")) config.field_samples = to_int("field_samples", *v);

  require(config.t0 > 0.0, "t0 must be positive");
  require(config.omega >= 0.0 && config.omega <= 1.0, "omega must lie in [0, 1]");
  require(config.phase_coeffs.front() == 1.0, "phase_coeffs must start with c_0 = 1");
  require(s.shape > 0.0, "c must be positive");
  require(s.m >= 2, "m must be at least 2");
  require(s.n >= 2, "n must be at least 2");
  require(s.n % 2 == 0, "n must be even (got " + std::to_string(s.n) + ")");
  require(s.scatter_quad_points >= 1, "scatter_quad_points must be at least 1");
  require(s.flux_quad_points >= 1, "flux_quad_points must be at least 1");
  require(s.resnorm_grid_x >= 2 && s.resnorm_grid_x % 2 == 0, "resnorm_grid_x must be even and >= 2");
  require(s.resnorm_grid_y >= 2 && s.resnorm_grid_y % 2 == 0, "resnorm_grid_y must be even and >= 2");
  require(config.field_samples >= 2, "field_samples must be at least 2");
  return config;
}

SlabProblem RunConfig::problem() const {
  switch (builtin) {
    case Builtin::Example1: return example1(t0, c1);
    case Builtin::Example2: return example2();
    case Builtin::None: break;
  }
  SlabProblem problem;
  problem.t0 = t0;
  problem.omega = omega;
  problem.phase = PhaseExpansion(phase_coeffs);
  problem.source = polynomial(source_poly);
  problem.i0 = [v = i0_const](double) { return v; };
  problem.i1 = [v = i1_const](double) { return v; };
  problem.validate();
  return problem;
}

}  // namespace slabrbf
