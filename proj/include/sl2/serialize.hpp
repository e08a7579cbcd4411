#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sl2/clebsch.hpp"
#include "sl2/hmodel.hpp"
#include "sl2/plancherel.hpp"

namespace sl2 {

// {m, n, b, lambda, a}. b holds plain numbers when every entry is real,
// otherwise [re, im] pairs; a is always [re, im] pairs.
nlohmann::json to_json(const SpectralData& s);
SpectralData spectral_data_from_json(const nlohmann::json& j);

// {M, h_grid: {a, b}, entries: [{m, n, values: [[re, im], ...]}]}, values a-major.
nlohmann::json to_json(const CoefficientMatrix& phi);
CoefficientMatrix coefficient_matrix_from_json(const nlohmann::json& j);

// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

// Header line plus rows, comma separated, '\n' line ends.
std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

// l2,m,computed,target_re,target_im,abs_error,computed_im
std::string prop2_csv(const std::vector<Prop2Row>& rows);
// m,tau,D,D_times_m2
std::string prop7_csv(const Prop7Report& report);

}  // namespace sl2
