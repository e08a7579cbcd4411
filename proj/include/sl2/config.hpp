#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2 {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  double quad_tol = 1e-11;
  double ode_tol = 1e-13;
  int theta_N = 4096;  // grid of the row sweeps
  double y_min = 1e-9;
  double y_max = 60.0;
  double y_ratio = 2.0;
  double lambda_max = 20.0;
  int lambda_N = 400;
  int M = 2;
  std::vector<int> l2_list{25, 50, 100, 200};
  double tau_max = 12.0;
  int tau_points = 49;
  std::string out_dir = "sl2_reports";
  std::string format = "csv";
  std::uint64_t seed = 42;

  // key = value per line, '#' starts a comment. Unknown keys are errors.
  void load_file(const std::string& path);
  void set(const std::string& key, const std::string& value);
  // Throws ConfigError when a value is out of range.
  void validate() const;

  std::map<std::string, std::string> as_map() const;
};

}  // namespace sl2
