#include "orbit/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace orbit {

bool majorizes(const std::vector<double>& p, const std::vector<double>& q,
               double tol) {
  if (p.size() != q.size())
    throw std::invalid_argument("majorization compares equal-length vectors");
  std::vector<double> ps = p;
  std::vector<double> qs = q;
  std::sort(ps.begin(), ps.end(), std::greater<>());
  std::sort(qs.begin(), qs.end(), std::greater<>());
  double sp = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    sp += ps[i];
    sq += qs[i];
    if (sp < sq - tol) return false;
  }
  return std::abs(sp - sq) <= tol;
}

bool in_convex_hull(const Spectrum& sigma, const Spectrum& rho) {
  return majorizes(rho.values(), sigma.values());
}

std::vector<SwapMove> valid_swaps(const Pattern& pattern, Shape shape,
                                  const YoungSet& catalog) {
  if (!is_young(pattern, shape))
    throw std::invalid_argument("swaps start from a Young pattern");
  if (catalog.shape != shape)
    throw std::invalid_argument("catalog shape must match the pattern shape");
  auto idx = [&](int r, int c) {
    return static_cast<std::size_t>(r) * shape.cols + c;
  };
  std::vector<SwapMove> moves;
  for (int r = 0; r < shape.rows; ++r) {
    for (int s = 0; s < shape.cols; ++s) {
      for (int t = 0; t < r; ++t) {
        for (int u = s + 1; u < shape.cols; ++u) {
          Pattern swapped = pattern;
          std::swap(swapped[idx(r, s)], swapped[idx(t, u)]);
          const auto it =
              std::find(catalog.patterns.begin(), catalog.patterns.end(), swapped);
          if (it == catalog.patterns.end()) continue;
          SwapMove move;
          move.r = r;
          move.s = s;
          move.t = t;
          move.u = u;
          move.destination = swapped;
          move.destination_index =
              static_cast<int>(it - catalog.patterns.begin());
          moves.push_back(std::move(move));
        }
      }
    }
  }
  return moves;
}

SeeSawReport see_saw_check(const Pattern& from, const SwapMove& move,
                           Shape shape, const Spectrum& spectrum) {
  if (shape.size() != spectrum.size())
    throw std::invalid_argument("shape size must match spectrum length");
  const std::vector<double>& v = spectrum.values();
  auto row_sums = [&](const Pattern& pat) {
    std::vector<double> a(static_cast<std::size_t>(shape.rows), 0.0);
    for (int r = 0; r < shape.rows; ++r)
      for (int c = 0; c < shape.cols; ++c)
        a[static_cast<std::size_t>(r)] +=
            v[static_cast<std::size_t>(pat[static_cast<std::size_t>(r) * shape.cols + c])];
    return a;
  };
  auto col_sums = [&](const Pattern& pat) {
    std::vector<double> b(static_cast<std::size_t>(shape.cols), 0.0);
    for (int r = 0; r < shape.rows; ++r)
      for (int c = 0; c < shape.cols; ++c)
        b[static_cast<std::size_t>(c)] +=
            v[static_cast<std::size_t>(pat[static_cast<std::size_t>(r) * shape.cols + c])];
    return b;
  };

  const auto a_from = row_sums(from);
  const auto a_to = row_sums(move.destination);
  const auto b_from = col_sums(from);
  const auto b_to = col_sums(move.destination);

  SeeSawReport report;
  const double moved_in =
      v[static_cast<std::size_t>(from[static_cast<std::size_t>(move.t) * shape.cols + move.u])];
  const double moved_out =
      v[static_cast<std::size_t>(from[static_cast<std::size_t>(move.r) * shape.cols + move.s])];
  report.delta = moved_in - moved_out;
  report.degenerate = std::abs(report.delta) <= 1e-12;
  report.row_majorization = majorizes(a_from, a_to);
  report.col_majorization = majorizes(b_to, b_from);
  report.row_entropy_change = shannon_entropy(a_to) - shannon_entropy(a_from);
  report.col_entropy_change = shannon_entropy(b_to) - shannon_entropy(b_from);
  return report;
}

TableGraph build_row_graph(Shape shape) {
  const YoungSet catalog = enumerate_young(shape);
  TableGraph graph;
  graph.shape = shape;
  graph.node_count = static_cast<int>(catalog.patterns.size());
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < graph.node_count; ++i) {
    const Pattern& pat = catalog.patterns[static_cast<std::size_t>(i)];
    for (const SwapMove& move : valid_swaps(pat, shape, catalog)) {
      if (move.destination_index == i) continue;
      // Positive moved-weight difference: the upper-right cell holds the
      // smaller rank, i.e. the larger value.
      const int rank_rs =
          pat[static_cast<std::size_t>(move.r) * shape.cols + move.s];
      const int rank_tu =
          pat[static_cast<std::size_t>(move.t) * shape.cols + move.u];
      if (rank_tu < rank_rs) edges.insert({i, move.destination_index});
    }
  }
  graph.edges.assign(edges.begin(), edges.end());
  return graph;
}

TableGraph reversed(const TableGraph& graph) {
  TableGraph out;
  out.shape = graph.shape;
  out.node_count = graph.node_count;
  out.edges.reserve(graph.edges.size());
  for (const auto& [a, b] : graph.edges) out.edges.emplace_back(b, a);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

namespace {

std::vector<std::vector<int>> adjacency(const TableGraph& graph) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(graph.node_count));
  for (const auto& [a, b] : graph.edges)
    adj[static_cast<std::size_t>(a)].push_back(b);
  return adj;
}

}  // namespace

bool is_acyclic(const TableGraph& graph) {
  const auto adj = adjacency(graph);
  std::vector<int> color(static_cast<std::size_t>(graph.node_count), 0);
  std::function<bool(int)> visit = [&](int node) {
    color[static_cast<std::size_t>(node)] = 1;
    for (int next : adj[static_cast<std::size_t>(node)]) {
      if (color[static_cast<std::size_t>(next)] == 1) return false;
      if (color[static_cast<std::size_t>(next)] == 0 && !visit(next)) return false;
    }
    color[static_cast<std::size_t>(node)] = 2;
    return true;
  };
  for (int n = 0; n < graph.node_count; ++n)
    if (color[static_cast<std::size_t>(n)] == 0 && !visit(n)) return false;
  return true;
}

bool has_path(const TableGraph& graph, int from, int to) {
  if (from < 0 || to < 0 || from >= graph.node_count || to >= graph.node_count)
    throw std::invalid_argument("node index out of range");
  const auto adj = adjacency(graph);
  std::vector<bool> seen(static_cast<std::size_t>(graph.node_count), false);
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    if (node == to) return true;
    for (int next : adj[static_cast<std::size_t>(node)]) {
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        stack.push_back(next);
      }
    }
  }
  return false;
}

std::vector<std::vector<bool>> transitive_closure(const TableGraph& graph) {
  const std::size_t n = static_cast<std::size_t>(graph.node_count);
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : graph.edges)
    reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

std::string to_dot(const TableGraph& graph) {
  std::string dot = "digraph tables {\n";
  for (int n = 0; n < graph.node_count; ++n)
    dot += "  " + std::to_string(n + 1) + ";\n";
  for (const auto& [a, b] : graph.edges)
    dot += "  " + std::to_string(a + 1) + " -> " + std::to_string(b + 1) + ";\n";
  dot += "}\n";
  return dot;
}

LemmaReport lemma_supports(const Spectrum& spectrum, Shape shape, int variant) {
  if (variant != 1 && variant != 2)
    throw std::invalid_argument("variant must be 1 or 2");
  if (shape.size() != spectrum.size())
    throw std::invalid_argument("shape size must match spectrum length");
  if (shape.rows < 2)
    throw std::invalid_argument("the comparison needs at least two rows");
  const auto& v = spectrum.values();
  int support = 0;
  for (double x : v)
    if (x > 1e-12) ++support;
  const int limit = variant == 1 ? shape.cols : shape.cols + 1;
  if (support > limit)
    throw std::invalid_argument("spectrum support exceeds the variant's limit of " +
                                std::to_string(limit) + " entries");

  LemmaReport report;
  report.first_layout = v;  // row-major packing of the sorted values
  report.second_layout = v;
  std::swap(report.second_layout[static_cast<std::size_t>(shape.cols - 1)],
            report.second_layout[static_cast<std::size_t>(shape.cols)]);
  report.mi_first = table_mi(Table(report.first_layout, shape));
  report.mi_second = table_mi(Table(report.second_layout, shape));
  report.holds = report.mi_first <= report.mi_second + 1e-12;
  return report;
}

}  // namespace orbit
