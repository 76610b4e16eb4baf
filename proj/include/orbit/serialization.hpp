#pragma once

#include <string>

#include "json.hpp"
#include "orbit/density_matrix.hpp"

namespace orbit {

inline constexpr int kSchemaVersion = 1;

// {"schema_version", "dims": [a, b], "real_part", "imag_part"}; the matrix
// parts are row-major nested arrays.
nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

DensityMatrix load_density(const std::string& path);
void save_density(const DensityMatrix& rho, const std::string& path);

// Shortest decimal form that round-trips a double (17 significant digits).
std::string fmt17(double v);

}  // namespace orbit
