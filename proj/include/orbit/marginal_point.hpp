#pragma once

namespace orbit {

// Point in the marginal-eigenvalue plane: the smaller eigenvalue of each
// reduced state of a two-qubit system. Kept as a plain pair of coordinates;
// some boundary constructions (energy-line corners) step outside [0, 1/2],
// so the range is not enforced here.
struct MarginalPoint {
  double lambda_a = 0.0;
  double lambda_b = 0.0;
};

}  // namespace orbit
