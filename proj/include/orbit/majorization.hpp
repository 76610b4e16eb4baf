#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbit/spectrum.hpp"
#include "orbit/tables.hpp"

namespace orbit {

// p majorizes q: descending partial sums of p dominate those of q and the
// totals agree, both within tolerance.
bool majorizes(const std::vector<double>& p, const std::vector<double>& q,
               double tol = 1e-10);

// A state with spectrum sigma lies in the convex hull of the unitary orbit
// of one with spectrum rho exactly when rho majorizes sigma.
bool in_convex_hull(const Spectrum& sigma, const Spectrum& rho);

// Exchange of the ranks at cells (r, s) and (t, u), r > t and s < u, that
// lands on another catalog member.
struct SwapMove {
  int r = 0, s = 0, t = 0, u = 0;
  Pattern destination;
  int destination_index = -1;  // catalog position
};

std::vector<SwapMove> valid_swaps(const Pattern& pattern, Shape shape,
                                  const YoungSet& catalog);

// Effect of one swap on a concrete spectrum: delta is the moved weight
// difference; a positive delta relaxes the row marginal (its entropy can
// only grow) and sharpens the column marginal.
struct SeeSawReport {
  double delta = 0.0;
  bool row_majorization = false;  // destination rows majorized by source rows
  bool col_majorization = false;  // source columns majorized by destination
  double row_entropy_change = 0.0;
  double col_entropy_change = 0.0;
  bool degenerate = false;  // delta collapses to 0 for this spectrum
};

SeeSawReport see_saw_check(const Pattern& from, const SwapMove& move,
                           Shape shape, const Spectrum& spectrum);

// Directed relations between catalog patterns. An edge i -> j means one
// valid swap with positive moved-weight difference links i to j; along any
// path the row marginals grow more mixed and the column marginals less.
struct TableGraph {
  Shape shape;
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based catalog indices
};

TableGraph build_row_graph(Shape shape);

// Same nodes with every edge reversed; orders the column marginals.
TableGraph reversed(const TableGraph& graph);

bool is_acyclic(const TableGraph& graph);
bool has_path(const TableGraph& graph, int from, int to);
std::vector<std::vector<bool>> transitive_closure(const TableGraph& graph);

// Graphviz rendering with 1-based node labels.
std::string to_dot(const TableGraph& graph);

// Two-row comparison for spectra supported on few entries. The first
// arrangement packs the support row-major; the second swaps the last cell
// of row 0 with the first cell of row 1. Variant 1 allows support up to
// the row length (the first arrangement is then a product, MI zero);
// variant 2 allows one entry more.
struct LemmaReport {
  std::vector<double> first_layout;   // row-major
  std::vector<double> second_layout;  // row-major
  double mi_first = 0.0;
  double mi_second = 0.0;
  bool holds = false;  // mi_first <= mi_second within 1e-12
};

LemmaReport lemma_supports(const Spectrum& spectrum, Shape shape, int variant);

}  // namespace orbit
