#pragma once

#include "orbit/density_matrix.hpp"
#include "orbit/spectrum.hpp"
#include "orbit/tables.hpp"

namespace orbit {

enum class ExtremumKind { Max, Min };

struct OrbitExtremum {
  DensityMatrix state;
  double qmi_value = 0.0;
  ExtremumKind kind = ExtremumKind::Max;
};

// Mixture of maximally entangled basis states weighted by the spectrum;
// the QMI maximizer on the orbit, value 2 log2(d_A) - H(spectrum).
// Requires equal subsystem dimensions.
OrbitExtremum rho_max(const Spectrum& spectrum);

// Classical (diagonal) state laid out by the given table; its QMI is the
// table's mutual information. The table entries must be a rearrangement of
// the spectrum (tolerance 1e-12). With a minimizing table this is the QMI
// minimizer on the orbit.
OrbitExtremum rho_min(const Spectrum& spectrum, const Table& table);

// qmi(rho_max) - qmi(rho_min over Young tables), two-qubit closed form:
// 2 - H2(l1 + l2) - H2(l1 + l3).
double delta_i(const Spectrum& spectrum);

// log2(dim_a * dim_b): ceiling for the QMI of any state of those dimensions.
double max_qmi_bound(int dim_a, int dim_b);

}  // namespace orbit
