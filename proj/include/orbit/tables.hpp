#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbit/spectrum.hpp"

namespace orbit {

struct Shape {
  int rows = 0;
  int cols = 0;
  int size() const { return rows * cols; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

// Index pattern for a rectangular arrangement: row-major ranks 0..d-1,
// rank 0 taking the largest value.
using Pattern = std::vector<int>;

// Rectangular arrangement of a unit-sum probability vector, row-major.
class Table {
 public:
  Table(std::vector<double> values, Shape shape);

  double at(int r, int c) const {
    return values_[static_cast<std::size_t>(r) * shape_.cols + c];
  }
  const std::vector<double>& values() const { return values_; }
  Shape shape() const { return shape_; }

 private:
  std::vector<double> values_;
  Shape shape_;
};

// Row-sum and column-sum marginal probability vectors.
std::pair<std::vector<double>, std::vector<double>> marginals(const Table& table);

// H(row sums) + H(column sums) - H(entries), in bits. This is the mutual
// information of the classical joint distribution the table defines.
double table_mi(const Table& table);

// Alternates row-descending and column-descending sorts to a fixed point,
// which has non-increasing rows and columns.
Table sort_table(const Table& table);

// True when ranks increase along every row and down every column, i.e.
// values are non-increasing in both directions.
bool is_young(const Pattern& pattern, Shape shape);

Pattern transpose_pattern(const Pattern& pattern, Shape shape);

struct YoungSet {
  Shape shape;
  std::vector<Pattern> patterns;
};

// All Young patterns of the shape; square shapes are quotiented by
// transposition, keeping one representative per pair. The 2x3 and 3x3
// catalogs carry a pinned order; other shapes are lexicographic.
// Budget: rows * cols <= 16.
YoungSet enumerate_young(Shape shape);

// Number of standard fillings of the rectangular shape (hook length
// formula, computed by prime factorization). Throws on 64-bit overflow.
std::uint64_t hook_count(Shape shape);

// Lays out values (sorted descending internally) according to the pattern.
Table realize_pattern(const Pattern& pattern, Shape shape,
                      std::vector<double> values);

struct TableSearchResult {
  Pattern pattern;
  int catalog_index = -1;  // position in enumerate_young(shape); -1 if outside
  double value = 0.0;
  bool tie = false;
};

// Young-set minimizer of table_mi for the spectrum. Ties within 1e-12 are
// resolved to the lexicographically smallest pattern and flagged.
TableSearchResult minimal_table(const Spectrum& spectrum, Shape shape);

// Minimum of table_mi over all d! arrangements. Budget d <= 9.
double exhaustive_minimum(const Spectrum& spectrum, Shape shape);

// Maximizer of table_mi over all d! arrangements, canonicalized to the
// lexicographically smallest member of its symmetry class. Budget d <= 9.
TableSearchResult max_classical_table(const Spectrum& spectrum, Shape shape);

// Lexicographically smallest pattern reachable by row permutations, column
// permutations, and (for square shapes) transposition. These operations
// leave table_mi unchanged.
Pattern canonical_pattern(const Pattern& pattern, Shape shape);

// Orbits of all d! patterns under the symmetry group above. Budget d <= 9.
std::vector<std::vector<Pattern>> symmetry_classes(Shape shape);

struct MinimizerHistogram {
  std::vector<std::uint64_t> counts;  // indexed like enumerate_young(shape)
  std::uint64_t tie_count = 0;
};

// Monte Carlo histogram of Young-set minimizers over full-rank simplex
// draws. Sample i uses RNG substream (seed, i), so the result is
// independent of the worker count. Ties go to the lexicographically first
// minimizer and are counted.
MinimizerHistogram histogram_minimizers(Shape shape, std::uint64_t n_samples,
                                        std::uint64_t seed);

}  // namespace orbit
