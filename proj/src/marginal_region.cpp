#include "orbit/marginal_region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orbit {

namespace {

constexpr double kMembershipTol = 1e-10;
constexpr double kVertexDedupe = 1e-9;

struct HalfPlane {
  double nx, ny, c;  // nx*x + ny*y >= c
};

std::vector<HalfPlane> region_planes(const Spectrum& s, bool hull_only) {
  const auto& l = s.values();
  const double low = l[2] + l[3];
  const double diag = l[1] + l[2] + 2.0 * l[3];
  const double width = std::min(l[0] - l[2], l[1] - l[3]);
  std::vector<HalfPlane> planes = {
      {1.0, 0.0, low},   {0.0, 1.0, low},  {1.0, 1.0, diag},
      {-1.0, 0.0, -0.5}, {0.0, -1.0, -0.5}, {1.0, 0.0, 0.0},
      {0.0, 1.0, 0.0}};
  if (!hull_only) {
    planes.push_back({-1.0, 1.0, -width});
    planes.push_back({1.0, -1.0, -width});
  }
  return planes;
}

bool feasible(const std::vector<HalfPlane>& planes, double x, double y) {
  for (const auto& h : planes)
    if (h.nx * x + h.ny * y < h.c - kMembershipTol) return false;
  return true;
}

Region build(const Spectrum& spectrum, bool hull_only) {
  if (spectrum.dim_a() != 2 || spectrum.dim_b() != 2)
    throw std::invalid_argument("marginal region is defined for two-qubit spectra");
  const auto planes = region_planes(spectrum, hull_only);
  std::vector<MarginalPoint> verts;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      const double det = planes[i].nx * planes[j].ny - planes[i].ny * planes[j].nx;
      if (std::abs(det) < 1e-12) continue;
      const double x = (planes[i].c * planes[j].ny - planes[j].c * planes[i].ny) / det;
      const double y = (planes[i].nx * planes[j].c - planes[j].nx * planes[i].c) / det;
      if (!feasible(planes, x, y)) continue;
      bool duplicate = false;
      for (const auto& v : verts)
        if (std::abs(v.lambda_a - x) < kVertexDedupe &&
            std::abs(v.lambda_b - y) < kVertexDedupe) {
          duplicate = true;
          break;
        }
      if (!duplicate) verts.push_back({x, y});
    }
  }
  if (verts.empty())
    throw std::logic_error("region construction produced no vertices");
  double cx = 0.0, cy = 0.0;
  for (const auto& v : verts) {
    cx += v.lambda_a;
    cy += v.lambda_b;
  }
  cx /= static_cast<double>(verts.size());
  cy /= static_cast<double>(verts.size());
  std::sort(verts.begin(), verts.end(), [&](const MarginalPoint& p, const MarginalPoint& q) {
    return std::atan2(p.lambda_b - cy, p.lambda_a - cx) <
           std::atan2(q.lambda_b - cy, q.lambda_a - cx);
  });
  Region region{spectrum, std::move(verts),
                spectrum[1] - spectrum[2] <= 1e-12, hull_only};
  return region;
}

}  // namespace

Region make_region(const Spectrum& spectrum) { return build(spectrum, false); }

Region convex_hull_region(const Spectrum& spectrum) { return build(spectrum, true); }

bool contains(const Region& region, const MarginalPoint& p) {
  return feasible(region_planes(region.spectrum, region.hull_only),
                  p.lambda_a, p.lambda_b);
}

MarginalPoint min_vertex(const Spectrum& spectrum) {
  if (spectrum.dim_a() != 2 || spectrum.dim_b() != 2)
    throw std::invalid_argument("marginal region is defined for two-qubit spectra");
  return {spectrum[1] + spectrum[3], spectrum[2] + spectrum[3]};
}

bool energy_region_contains(const Region& region, const MarginalPoint& p,
                            double e) {
  if (e < -1e-12 || e > 1.0 + 1e-12)
    throw std::domain_error("energy budget must lie in [0, 1]");
  return contains(region, p) && p.lambda_a + p.lambda_b <= e + kMembershipTol;
}

std::array<MarginalPoint, 4> f_line_intersections(double e) {
  if (e < -1e-12 || e > 1.0 + 1e-12)
    throw std::domain_error("energy budget must lie in [0, 1]");
  const double c = 1.0 - e;
  return {MarginalPoint{0.5, 0.5 - c}, MarginalPoint{0.5 - c, 0.5},
          MarginalPoint{0.5 + c, 0.5}, MarginalPoint{0.5, 0.5 + c}};
}

double delta_i_energy(const Spectrum& spectrum, double e) {
  if (spectrum.dim_a() != 2 || spectrum.dim_b() != 2)
    throw std::invalid_argument("closed form is defined for two-qubit spectra");
  const auto& l = spectrum.values();
  if (e > 1.0 + 1e-12)
    throw std::domain_error("energy budget must not exceed 1");
  if (e < l[1] + l[2] + 2.0 * l[3] - 1e-12)
    throw std::domain_error(
        "energy budget excludes the minimal-entropy vertex of the region");
  return 2.0 * binary_entropy(0.5 * e) - binary_entropy(l[0] + l[1]) -
         binary_entropy(l[0] + l[2]);
}

double trace_infimum(const std::vector<double>& observable_eigenvalues,
                     const Spectrum& spectrum) {
  if (static_cast<int>(observable_eigenvalues.size()) != spectrum.size())
    throw std::invalid_argument("observable eigenvalue count must match the spectrum");
  std::vector<double> asc = observable_eigenvalues;
  std::sort(asc.begin(), asc.end());
  double total = 0.0;
  for (std::size_t i = 0; i < asc.size(); ++i) total += spectrum[i] * asc[i];
  return total;
}

}  // namespace orbit
