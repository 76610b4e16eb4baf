#include "orbit/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "orbit/threading.hpp"

namespace orbit {

namespace {

constexpr double kTieTol = 1e-12;

// Pinned catalog orders for the two shapes whose enumeration order is part
// of the external interface (1-based ranks, row-major).
constexpr int kCatalog6[5][6] = {
    {1, 2, 3, 4, 5, 6}, {1, 2, 4, 3, 5, 6}, {1, 2, 5, 3, 4, 6},
    {1, 3, 5, 2, 4, 6}, {1, 3, 4, 2, 5, 6}};

constexpr int kCatalog9[21][9] = {
    {1, 2, 3, 4, 5, 6, 7, 8, 9}, {1, 2, 3, 4, 5, 7, 6, 8, 9},
    {1, 2, 3, 4, 5, 8, 6, 7, 9}, {1, 2, 3, 4, 6, 7, 5, 8, 9},
    {1, 2, 3, 4, 6, 8, 5, 7, 9}, {1, 2, 4, 3, 5, 6, 7, 8, 9},
    {1, 2, 5, 3, 4, 6, 7, 8, 9}, {1, 2, 4, 3, 5, 7, 6, 8, 9},
    {1, 2, 4, 3, 5, 8, 6, 7, 9}, {1, 2, 5, 3, 4, 7, 6, 8, 9},
    {1, 2, 5, 3, 4, 8, 6, 7, 9}, {1, 2, 6, 3, 4, 8, 5, 7, 9},
    {1, 2, 6, 3, 4, 7, 5, 8, 9}, {1, 2, 7, 3, 4, 8, 5, 6, 9},
    {1, 2, 4, 3, 6, 7, 5, 8, 9}, {1, 2, 4, 3, 6, 8, 5, 7, 9},
    {1, 2, 6, 3, 5, 8, 4, 7, 9}, {1, 2, 6, 3, 5, 7, 4, 8, 9},
    {1, 2, 7, 3, 5, 8, 4, 6, 9}, {1, 2, 5, 3, 6, 8, 4, 7, 9},
    {1, 2, 5, 3, 6, 7, 4, 8, 9}};

double plog(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// H(row sums) + H(column sums) for sorted values laid out by the pattern.
// The -H(values) term of table_mi is pattern independent.
double marginal_entropy_sum(const Pattern& pattern, Shape shape,
                            const std::vector<double>& sorted_desc) {
  double a[16] = {0.0};
  double b[16] = {0.0};
  int idx = 0;
  for (int r = 0; r < shape.rows; ++r) {
    for (int c = 0; c < shape.cols; ++c, ++idx) {
      const double x = sorted_desc[static_cast<std::size_t>(pattern[idx])];
      a[r] += x;
      b[c] += x;
    }
  }
  double h = 0.0;
  for (int r = 0; r < shape.rows; ++r) h -= plog(a[r]);
  for (int c = 0; c < shape.cols; ++c) h -= plog(b[c]);
  return h;
}

void validate_shape(Shape shape) {
  if (shape.rows < 1 || shape.cols < 1)
    throw std::invalid_argument("table shape must be positive");
}

void validate_pattern(const Pattern& pattern, Shape shape) {
  validate_shape(shape);
  const int d = shape.size();
  if (pattern.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("pattern length must equal rows * cols");
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (int rank : pattern) {
    if (rank < 0 || rank >= d || seen[static_cast<std::size_t>(rank)])
      throw std::invalid_argument("pattern must be a permutation of 0..d-1");
    seen[static_cast<std::size_t>(rank)] = true;
  }
}

void generate_standard_fillings(Shape shape, std::vector<Pattern>& out) {
  const int d = shape.size();
  Pattern cells(static_cast<std::size_t>(d), -1);
  std::vector<int> row_fill(static_cast<std::size_t>(shape.rows), 0);
  std::function<void(int)> place = [&](int rank) {
    if (rank == d) {
      out.push_back(cells);
      return;
    }
    for (int r = 0; r < shape.rows; ++r) {
      const int c = row_fill[static_cast<std::size_t>(r)];
      if (c >= shape.cols) continue;
      if (r > 0 && row_fill[static_cast<std::size_t>(r - 1)] <= c) continue;
      cells[static_cast<std::size_t>(r) * shape.cols + c] = rank;
      ++row_fill[static_cast<std::size_t>(r)];
      place(rank + 1);
      --row_fill[static_cast<std::size_t>(r)];
      cells[static_cast<std::size_t>(r) * shape.cols + c] = -1;
    }
  };
  place(0);
}

template <std::size_t N, std::size_t D>
void apply_pinned_order(const int (&catalog)[N][D], std::vector<Pattern>& pats) {
  std::vector<Pattern> pinned;
  pinned.reserve(N);
  for (std::size_t i = 0; i < N; ++i) {
    Pattern p(D);
    for (std::size_t j = 0; j < D; ++j) p[j] = catalog[i][j] - 1;
    pinned.push_back(std::move(p));
  }
  std::vector<Pattern> sorted_pinned = pinned;
  std::sort(sorted_pinned.begin(), sorted_pinned.end());
  if (sorted_pinned != pats)
    throw std::logic_error("enumerated Young set does not match the pinned catalog");
  pats = std::move(pinned);
}

}  // namespace

Table::Table(std::vector<double> values, Shape shape)
    : values_(std::move(values)), shape_(shape) {
  validate_shape(shape_);
  if (values_.size() != static_cast<std::size_t>(shape_.size()))
    throw std::invalid_argument("table length must equal rows * cols");
  double sum = 0.0;
  for (double& v : values_) {
    if (v < -1e-12)
      throw std::invalid_argument("table entries must be non-negative");
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("table entries must sum to 1");
}

std::pair<std::vector<double>, std::vector<double>> marginals(const Table& table) {
  const Shape shape = table.shape();
  std::vector<double> a(static_cast<std::size_t>(shape.rows), 0.0);
  std::vector<double> b(static_cast<std::size_t>(shape.cols), 0.0);
  for (int r = 0; r < shape.rows; ++r) {
    for (int c = 0; c < shape.cols; ++c) {
      a[static_cast<std::size_t>(r)] += table.at(r, c);
      b[static_cast<std::size_t>(c)] += table.at(r, c);
    }
  }
  return {a, b};
}

double table_mi(const Table& table) {
  const auto [a, b] = marginals(table);
  return shannon_entropy(a) + shannon_entropy(b) - shannon_entropy(table.values());
}

Table sort_table(const Table& table) {
  const Shape shape = table.shape();
  std::vector<double> v = table.values();
  std::vector<double> col(static_cast<std::size_t>(shape.rows));
  for (int pass = 0; pass < 200; ++pass) {
    bool changed = false;
    for (int r = 0; r < shape.rows; ++r) {
      const auto begin = v.begin() + static_cast<std::ptrdiff_t>(r) * shape.cols;
      if (!std::is_sorted(begin, begin + shape.cols, std::greater<>())) {
        std::sort(begin, begin + shape.cols, std::greater<>());
        changed = true;
      }
    }
    for (int c = 0; c < shape.cols; ++c) {
      for (int r = 0; r < shape.rows; ++r)
        col[static_cast<std::size_t>(r)] = v[static_cast<std::size_t>(r) * shape.cols + c];
      if (!std::is_sorted(col.begin(), col.end(), std::greater<>())) {
        std::sort(col.begin(), col.end(), std::greater<>());
        for (int r = 0; r < shape.rows; ++r)
          v[static_cast<std::size_t>(r) * shape.cols + c] = col[static_cast<std::size_t>(r)];
        changed = true;
      }
    }
    if (!changed) return Table(std::move(v), shape);
  }
  throw std::logic_error("row/column sorting failed to reach a fixed point");
}

bool is_young(const Pattern& pattern, Shape shape) {
  validate_pattern(pattern, shape);
  auto at = [&](int r, int c) {
    return pattern[static_cast<std::size_t>(r) * shape.cols + c];
  };
  for (int r = 0; r < shape.rows; ++r)
    for (int c = 0; c + 1 < shape.cols; ++c)
      if (at(r, c + 1) < at(r, c)) return false;
  for (int c = 0; c < shape.cols; ++c)
    for (int r = 0; r + 1 < shape.rows; ++r)
      if (at(r + 1, c) < at(r, c)) return false;
  return true;
}

Pattern transpose_pattern(const Pattern& pattern, Shape shape) {
  validate_pattern(pattern, shape);
  Pattern t(pattern.size());
  for (int r = 0; r < shape.rows; ++r)
    for (int c = 0; c < shape.cols; ++c)
      t[static_cast<std::size_t>(c) * shape.rows + r] =
          pattern[static_cast<std::size_t>(r) * shape.cols + c];
  return t;
}

YoungSet enumerate_young(Shape shape) {
  validate_shape(shape);
  if (shape.size() > 16)
    throw std::invalid_argument("enumeration budget is rows * cols <= 16");
  std::vector<Pattern> pats;
  generate_standard_fillings(shape, pats);
  if (shape.rows == shape.cols && shape.rows > 1) {
    std::vector<Pattern> kept;
    kept.reserve(pats.size() / 2 + 1);
    for (auto& p : pats) {
      if (p <= transpose_pattern(p, shape)) kept.push_back(std::move(p));
    }
    pats = std::move(kept);
  }
  std::sort(pats.begin(), pats.end());
  if (shape == Shape{2, 3}) apply_pinned_order(kCatalog6, pats);
  if (shape == Shape{3, 3}) apply_pinned_order(kCatalog9, pats);
  return {shape, std::move(pats)};
}

std::uint64_t hook_count(Shape shape) {
  validate_shape(shape);
  const int d = shape.size();
  const int max_base = std::max(d, shape.rows + shape.cols);
  std::vector<long long> exponent(static_cast<std::size_t>(max_base) + 1, 0);
  for (int p = 2; p <= d; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    for (long long pk = p; pk <= d; pk *= p)
      exponent[static_cast<std::size_t>(p)] += d / pk;
  }
  // Hook length v occurs min(v, rows, cols, rows+cols-v) times in a
  // rows x cols rectangle.
  for (int v = 2; v < shape.rows + shape.cols; ++v) {
    const long long mult =
        std::min({v, shape.rows, shape.cols, shape.rows + shape.cols - v});
    int n = v;
    for (int p = 2; p <= n; ++p)
      while (n % p == 0) {
        exponent[static_cast<std::size_t>(p)] -= mult;
        n /= p;
      }
  }
  std::uint64_t result = 1;
  for (int p = 2; p <= max_base; ++p) {
    const long long e = exponent[static_cast<std::size_t>(p)];
    if (e < 0) throw std::logic_error("hook product does not divide the factorial");
    for (long long k = 0; k < e; ++k) {
      if (result > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p))
        throw std::overflow_error("standard filling count exceeds 64-bit range");
      result *= static_cast<std::uint64_t>(p);
    }
  }
  return result;
}

Table realize_pattern(const Pattern& pattern, Shape shape,
                      std::vector<double> values) {
  validate_pattern(pattern, shape);
  if (values.size() != pattern.size())
    throw std::invalid_argument("value count must match pattern length");
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = values[static_cast<std::size_t>(pattern[i])];
  return Table(std::move(out), shape);
}

TableSearchResult minimal_table(const Spectrum& spectrum, Shape shape) {
  if (shape.size() != spectrum.size())
    throw std::invalid_argument("shape size must match spectrum length");
  const YoungSet ys = enumerate_young(shape);
  const std::vector<double>& v = spectrum.values();
  const double h_all = shannon_entropy(v);
  std::vector<double> vals(ys.patterns.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ys.patterns.size(); ++i) {
    vals[i] = marginal_entropy_sum(ys.patterns[i], shape, v);
    best = std::min(best, vals[i]);
  }
  int best_idx = -1;
  int tied = 0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] > best + kTieTol) continue;
    ++tied;
    if (best_idx < 0 || ys.patterns[i] < ys.patterns[static_cast<std::size_t>(best_idx)])
      best_idx = static_cast<int>(i);
  }
  TableSearchResult result;
  result.pattern = ys.patterns[static_cast<std::size_t>(best_idx)];
  result.catalog_index = best_idx;
  result.value = vals[static_cast<std::size_t>(best_idx)] - h_all;
  result.tie = tied > 1;
  return result;
}

double exhaustive_minimum(const Spectrum& spectrum, Shape shape) {
  if (shape.size() != spectrum.size())
    throw std::invalid_argument("shape size must match spectrum length");
  if (spectrum.size() > 9)
    throw std::invalid_argument("exhaustive search budget is d <= 9");
  const std::vector<double>& v = spectrum.values();
  Pattern pat(v.size());
  std::iota(pat.begin(), pat.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, marginal_entropy_sum(pat, shape, v));
  } while (std::next_permutation(pat.begin(), pat.end()));
  return best - shannon_entropy(v);
}

Pattern canonical_pattern(const Pattern& pattern, Shape shape) {
  validate_pattern(pattern, shape);
  Pattern best;
  auto scan = [&](const Pattern& base) {
    std::vector<int> rp(static_cast<std::size_t>(shape.rows));
    std::iota(rp.begin(), rp.end(), 0);
    Pattern cand(pattern.size());
    do {
      std::vector<int> cp(static_cast<std::size_t>(shape.cols));
      std::iota(cp.begin(), cp.end(), 0);
      do {
        for (int r = 0; r < shape.rows; ++r)
          for (int c = 0; c < shape.cols; ++c)
            cand[static_cast<std::size_t>(r) * shape.cols + c] =
                base[static_cast<std::size_t>(rp[static_cast<std::size_t>(r)]) * shape.cols +
                     cp[static_cast<std::size_t>(c)]];
        if (best.empty() || cand < best) best = cand;
      } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
  };
  scan(pattern);
  if (shape.rows == shape.cols) scan(transpose_pattern(pattern, shape));
  return best;
}

TableSearchResult max_classical_table(const Spectrum& spectrum, Shape shape) {
  if (shape.size() != spectrum.size())
    throw std::invalid_argument("shape size must match spectrum length");
  if (spectrum.size() > 9)
    throw std::invalid_argument("exhaustive search budget is d <= 9");
  const std::vector<double>& v = spectrum.values();
  Pattern pat(v.size());
  std::iota(pat.begin(), pat.end(), 0);
  double best = -std::numeric_limits<double>::infinity();
  do {
    best = std::max(best, marginal_entropy_sum(pat, shape, v));
  } while (std::next_permutation(pat.begin(), pat.end()));

  std::vector<Pattern> canonicals;
  std::iota(pat.begin(), pat.end(), 0);
  do {
    if (marginal_entropy_sum(pat, shape, v) < best - kTieTol) continue;
    Pattern canon = canonical_pattern(pat, shape);
    if (std::find(canonicals.begin(), canonicals.end(), canon) == canonicals.end())
      canonicals.push_back(std::move(canon));
  } while (std::next_permutation(pat.begin(), pat.end()));
  std::sort(canonicals.begin(), canonicals.end());

  TableSearchResult result;
  result.pattern = canonicals.front();
  result.value = best - shannon_entropy(v);
  result.tie = canonicals.size() > 1;
  const YoungSet ys = enumerate_young(shape);
  const auto it = std::find(ys.patterns.begin(), ys.patterns.end(), result.pattern);
  result.catalog_index =
      it == ys.patterns.end() ? -1 : static_cast<int>(it - ys.patterns.begin());
  return result;
}

std::vector<std::vector<Pattern>> symmetry_classes(Shape shape) {
  validate_shape(shape);
  if (shape.size() > 9)
    throw std::invalid_argument("symmetry class budget is d <= 9");
  std::map<Pattern, std::vector<Pattern>> orbits;
  Pattern pat(static_cast<std::size_t>(shape.size()));
  std::iota(pat.begin(), pat.end(), 0);
  do {
    orbits[canonical_pattern(pat, shape)].push_back(pat);
  } while (std::next_permutation(pat.begin(), pat.end()));
  std::vector<std::vector<Pattern>> out;
  out.reserve(orbits.size());
  for (auto& [canon, members] : orbits) out.push_back(std::move(members));
  return out;
}

MinimizerHistogram histogram_minimizers(Shape shape, std::uint64_t n_samples,
                                        std::uint64_t seed) {
  const YoungSet ys = enumerate_young(shape);
  const std::size_t m = ys.patterns.size();
  const int d = shape.size();
  MinimizerHistogram hist;
  hist.counts.assign(m, 0);
  std::mutex merge_mutex;
  parallel_for(static_cast<std::int64_t>(n_samples),
               [&](std::int64_t begin, std::int64_t end) {
                 std::vector<std::uint64_t> local(m, 0);
                 std::uint64_t local_ties = 0;
                 std::vector<double> vals(m);
                 for (std::int64_t i = begin; i < end; ++i) {
                   auto rng = substream_rng(seed, static_cast<std::uint64_t>(i));
                   const auto v = sample_simplex(d, rng, true);
                   double best = std::numeric_limits<double>::infinity();
                   for (std::size_t j = 0; j < m; ++j) {
                     vals[j] = marginal_entropy_sum(ys.patterns[j], shape, v);
                     best = std::min(best, vals[j]);
                   }
                   int best_idx = -1;
                   int tied = 0;
                   for (std::size_t j = 0; j < m; ++j) {
                     if (vals[j] > best + kTieTol) continue;
                     ++tied;
                     if (best_idx < 0 ||
                         ys.patterns[j] < ys.patterns[static_cast<std::size_t>(best_idx)])
                       best_idx = static_cast<int>(j);
                   }
                   ++local[static_cast<std::size_t>(best_idx)];
                   if (tied > 1) ++local_ties;
                 }
                 const std::lock_guard<std::mutex> lock(merge_mutex);
                 for (std::size_t j = 0; j < m; ++j) hist.counts[j] += local[j];
                 hist.tie_count += local_ties;
               });
  return hist;
}

}  // namespace orbit
