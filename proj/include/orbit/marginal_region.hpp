#pragma once

#include <array>
#include <vector>

#include "orbit/marginal_point.hpp"
#include "orbit/spectrum.hpp"

namespace orbit {

// Set of marginal-eigenvalue pairs compatible with a fixed two-qubit
// spectrum l1 >= l2 >= l3 >= l4. Membership is the inequality system
//   x >= l3 + l4,  y >= l3 + l4,  x + y >= l2 + l3 + 2 l4,
//   |x - y| <= min(l1 - l3, l2 - l4),
// intersected with the box [0, 1/2]^2. hull_only drops the |x - y| pair,
// which yields the convex hull of the classical (diagonal) arrangements.
struct Region {
  Spectrum spectrum;
  std::vector<MarginalPoint> vertices;  // counter-clockwise
  bool degenerate = false;              // l2 == l3 within 1e-12
  bool hull_only = false;
};

Region make_region(const Spectrum& spectrum);
Region convex_hull_region(const Spectrum& spectrum);

// Membership within tolerance 1e-10; boundary points count as inside.
bool contains(const Region& region, const MarginalPoint& p);

// Vertex of minimal summed marginal entropy: (l2 + l4, l3 + l4). Its
// mirror image (coordinates swapped) is the other minimizer.
MarginalPoint min_vertex(const Spectrum& spectrum);

// Membership in the energy-limited region: inside the region and
// x + y <= e. The energy budget e must lie in [0, 1].
bool energy_region_contains(const Region& region, const MarginalPoint& p,
                            double e);

// Corners of the energy line x + y = e clipped against the region's
// bounding geometry, with c = 1 - e:
// (1/2, 1/2 - c), (1/2 - c, 1/2), (1/2 + c, 1/2), (1/2, 1/2 + c).
std::array<MarginalPoint, 4> f_line_intersections(double e);

// QMI spread under the energy budget e: 2 H2(e/2) - H2(l1+l2) - H2(l1+l3).
// Requires l2 + l3 + 2 l4 <= e <= 1 so the minimum vertex stays feasible.
double delta_i_energy(const Spectrum& spectrum, double e);

// min over the orbit of Tr[rho O] for an observable with the given
// eigenvalues: largest spectrum weights pair with smallest observable
// eigenvalues.
double trace_infimum(const std::vector<double>& observable_eigenvalues,
                     const Spectrum& spectrum);

}  // namespace orbit
