#include "orbit/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace orbit {

nlohmann::json density_to_json(const DensityMatrix& rho) {
  const int n = rho.dim();
  nlohmann::json real_part = nlohmann::json::array();
  nlohmann::json imag_part = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (int j = 0; j < n; ++j) {
      re_row.push_back(rho.entries()(i, j).real());
      im_row.push_back(rho.entries()(i, j).imag());
    }
    real_part.push_back(std::move(re_row));
    imag_part.push_back(std::move(im_row));
  }
  return nlohmann::json{{"schema_version", kSchemaVersion},
                        {"dims", {rho.dim_a(), rho.dim_b()}},
                        {"real_part", std::move(real_part)},
                        {"imag_part", std::move(imag_part)}};
}

DensityMatrix density_from_json(const nlohmann::json& j) {
  if (!j.contains("dims") || !j.contains("real_part"))
    throw std::invalid_argument("state file needs dims and real_part fields");
  const int da = j["dims"].at(0).get<int>();
  const int db = j["dims"].at(1).get<int>();
  const long n = static_cast<long>(da) * db;
  CMatrix m = CMatrix::Zero(n, n);
  const auto& re = j["real_part"];
  if (static_cast<long>(re.size()) != n)
    throw std::invalid_argument("real_part row count must equal dim_a * dim_b");
  const bool has_imag = j.contains("imag_part");
  for (long i = 0; i < n; ++i) {
    const auto& re_row = re.at(static_cast<std::size_t>(i));
    if (static_cast<long>(re_row.size()) != n)
      throw std::invalid_argument("real_part must be square");
    for (long k = 0; k < n; ++k) {
      double im = 0.0;
      if (has_imag)
        im = j["imag_part"].at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k)).get<double>();
      m(i, k) = Complex(re_row.at(static_cast<std::size_t>(k)).get<double>(), im);
    }
  }
  return DensityMatrix(std::move(m), da, db);
}

DensityMatrix load_density(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file: " + path);
  nlohmann::json j;
  in >> j;
  return density_from_json(j);
}

void save_density(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write state file: " + path);
  out << density_to_json(rho).dump(2) << '\n';
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace orbit
