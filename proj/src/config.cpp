#include "sl2/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "sl2/serialize.hpp"

namespace sl2 {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& v) {
  T out{};
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size())
    throw ConfigError("config: bad value for " + key + ": '" + v + "'");
  return out;
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

void RunConfig::set(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "quad_tol") quad_tol = parse_number<double>(key, v);
  else if (key == "ode_tol") ode_tol = parse_number<double>(key, v);
  else if (key == "theta_N") theta_N = parse_number<int>(key, v);
  else if (key == "y_min") y_min = parse_number<double>(key, v);
  else if (key == "y_max") y_max = parse_number<double>(key, v);
  else if (key == "y_ratio") y_ratio = parse_number<double>(key, v);
  else if (key == "lambda_max") lambda_max = parse_number<double>(key, v);
  else if (key == "lambda_N") lambda_N = parse_number<int>(key, v);
  else if (key == "M") M = parse_number<int>(key, v);
  else if (key == "tau_max") tau_max = parse_number<double>(key, v);
  else if (key == "tau_points") tau_points = parse_number<int>(key, v);
  else if (key == "out") out_dir = v;
  else if (key == "format") format = v;
  else if (key == "seed") seed = parse_number<std::uint64_t>(key, v);
  else if (key == "l2_list") {
    l2_list.clear();
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) l2_list.push_back(parse_number<int>(key, trim(item)));
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void RunConfig::validate() const {
  auto tol_ok = [](double t) { return t > 0.0 && t <= 1e-2; };
  if (!tol_ok(quad_tol)) throw ConfigError("config: quad_tol must lie in (0, 1e-2]");
  if (!tol_ok(ode_tol)) throw ConfigError("config: ode_tol must lie in (0, 1e-2]");
  if (theta_N < 64 || !power_of_two(theta_N))
    throw ConfigError("config: theta_N must be a power of two >= 64");
  if (!(y_min > 0.0) || !(y_max > 1.0) || !(y_ratio > 1.0))
    throw ConfigError("config: need y_min > 0, y_max > 1, y_ratio > 1");
  if (!(lambda_max > 0.0) || lambda_N < 16) throw ConfigError("config: need lambda_max > 0, lambda_N >= 16");
  if (M < 0) throw ConfigError("config: M must be nonnegative");
  if (l2_list.empty()) throw ConfigError("config: l2_list is empty");
  for (int l2 : l2_list)
    if (l2 < 1) throw ConfigError("config: l2_list entries must be positive");
  if (!(tau_max > 0.0) || tau_points < 2) throw ConfigError("config: need tau_max > 0, tau_points >= 2");
  if (format != "csv" && format != "json") throw ConfigError("config: format must be csv or json");
}

std::map<std::string, std::string> RunConfig::as_map() const {
  std::string l2;
  for (std::size_t i = 0; i < l2_list.size(); ++i) l2 += (i ? "," : "") + std::to_string(l2_list[i]);
  return {{"quad_tol", format_double(quad_tol)},   {"ode_tol", format_double(ode_tol)},
          {"theta_N", std::to_string(theta_N)},    {"y_min", format_double(y_min)},
          {"y_max", format_double(y_max)},         {"y_ratio", format_double(y_ratio)},
          {"lambda_max", format_double(lambda_max)}, {"lambda_N", std::to_string(lambda_N)},
          {"M", std::to_string(M)},                {"l2_list", l2},
          {"tau_max", format_double(tau_max)},     {"tau_points", std::to_string(tau_points)},
          {"out", out_dir},                        {"format", format},
          {"seed", std::to_string(seed)}};
}

}  // namespace sl2
