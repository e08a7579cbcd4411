#include "sl2/serialize.hpp"

#include <algorithm>
#include <charconv>

#include "sl2/errors.hpp"

namespace sl2 {

using nlohmann::json;

namespace {

json pair_of(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cplx_of(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

json to_json(const SpectralData& s) {
  json j;
  j["m"] = s.m;
  j["n"] = s.n;
  const bool real = std::all_of(s.b.begin(), s.b.end(), [](const cplx& z) { return z.imag() == 0.0; });
  j["b"] = json::array();
  for (const cplx& z : s.b) j["b"].push_back(real ? json(z.real()) : pair_of(z));
  j["lambda"] = s.lambda;
  j["lambda_weights"] = s.lambda_weights;
  j["a"] = json::array();
  for (const cplx& z : s.a) j["a"].push_back(pair_of(z));
  return j;
}

SpectralData spectral_data_from_json(const json& j) {
  SpectralData s;
  s.m = j.at("m").get<int>();
  s.n = j.at("n").get<int>();
  for (const auto& v : j.at("b")) s.b.push_back(cplx_of(v));
  s.lambda = j.at("lambda").get<std::vector<double>>();
  if (j.contains("lambda_weights")) s.lambda_weights = j.at("lambda_weights").get<std::vector<double>>();
  for (const auto& v : j.at("a")) s.a.push_back(cplx_of(v));
  if (s.b.size() != static_cast<std::size_t>(discrete_terms(s.m, s.n)))
    throw DomainError("SpectralData: b must have min(m, n) entries");
  if (s.a.size() != s.lambda.size() || (!s.lambda_weights.empty() && s.lambda_weights.size() != s.lambda.size()))
    throw DomainError("SpectralData: lambda grid and samples differ in length");
  return s;
}

json to_json(const CoefficientMatrix& phi) {
  json j;
  j["M"] = phi.M();
  j["h_grid"] = {{"a", phi.h_grid().a}, {"b", phi.h_grid().b}};
  j["entries"] = json::array();
  const int top = 2 * phi.M();
  for (int m = -top; m <= top; m += 2)
    for (int n = -top; n <= top; n += 2) {
      json e{{"m", m}, {"n", n}, {"values", json::array()}};
      for (const cplx& z : phi.at(m, n)) e["values"].push_back(pair_of(z));
      j["entries"].push_back(std::move(e));
    }
  return j;
}

CoefficientMatrix coefficient_matrix_from_json(const json& j) {
  HGrid h{j.at("h_grid").at("a").get<std::vector<double>>(),
          j.at("h_grid").at("b").get<std::vector<double>>()};
  CoefficientMatrix phi(j.at("M").get<int>(), h);
  for (const auto& e : j.at("entries")) {
    auto& vals = phi.at(e.at("m").get<int>(), e.at("n").get<int>());
    const auto& src = e.at("values");
    if (src.size() != vals.size()) throw DomainError("CoefficientMatrix: entry length mismatch");
    for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = cplx_of(src[k]);
  }
  return phi;
}

std::string format_double(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

std::string prop2_csv(const std::vector<Prop2Row>& rows) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows)
    cells.push_back({std::to_string(r.l2), std::to_string(r.m), format_double(r.computed.real()),
                     format_double(r.target.real()), format_double(r.target.imag()),
                     format_double(r.abs_error), format_double(r.computed.imag())});
  return csv({"l2", "m", "computed", "target_re", "target_im", "abs_error", "computed_im"}, cells);
}

std::string prop7_csv(const Prop7Report& report) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : report.rows)
    cells.push_back({std::to_string(r.m), format_double(r.tau), format_double(r.D),
                     format_double(r.D_times_m2)});
  return csv({"m", "tau", "D", "D_times_m2"}, cells);
}

}  // namespace sl2
