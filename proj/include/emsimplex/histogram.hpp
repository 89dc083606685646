#pragma once

#include <compare>
#include <cstdlib>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "emsimplex/checked.hpp"
#include "emsimplex/errors.hpp"

namespace emsimplex {

/**
 * A histogram over integer bins 1..n with nonnegative integer counts.
 *
 * The bins live on the number line: moving one data point to an adjacent bin
 * costs one unit of work, which is the unit every distance in this library is
 * measured in. The total mass m is the sum of all counts.
 */
class Histogram {
 public:
  explicit Histogram(std::vector<Count> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) {
      throw ShapeMismatchError("histogram needs at least one bin");
    }
    mass_ = 0;
    for (Count c : counts_) {
      if (c < 0) {
        throw ShapeMismatchError("histogram counts must be nonnegative");
      }
      mass_ = checked_add(mass_, c);
    }
  }

  Histogram(std::initializer_list<Count> counts)
      : Histogram(std::vector<Count>(counts)) {}

  /// Number of bins n.
  int bins() const { return static_cast<int>(counts_.size()); }

  /// Total mass m.
  Count mass() const { return mass_; }

  /// Count in the given 1-based bin.
  Count count(int bin) const { return counts_.at(static_cast<std::size_t>(bin) - 1); }

  const std::vector<Count>& counts() const { return counts_; }

  friend bool operator==(const Histogram&, const Histogram&) = default;

 private:
  std::vector<Count> counts_;
  Count mass_;
};

/// One dot of a cumulative-histogram diagram: column (bin) and row (height),
/// both 1-based. The default ordering is column-major, then by row, which is
/// the canonical iteration order everywhere in this library.
struct Dot {
  int col = 0;
  Count row = 0;

  friend auto operator<=>(const Dot&, const Dot&) = default;
};

inline std::string to_string(const Dot& x) {
  return "(" + std::to_string(x.col) + "," + std::to_string(x.row) + ")";
}

/**
 * A set of grid dots stored as one height per column: column j holds the dots
 * (j, 1) .. (j, H(j)).
 *
 * Cumulative histograms are exactly the DotSets with weakly increasing
 * heights; cumulate() always produces those. Arbitrary nonnegative heights
 * are also allowed so that raw set families (not coming from histograms) can
 * be built, but decumulate() accepts only the monotone ones.
 */
class DotSet {
 public:
  explicit DotSet(std::vector<Count> heights) : heights_(std::move(heights)) {
    if (heights_.empty()) {
      throw ShapeMismatchError("dot set needs at least one column");
    }
    for (Count h : heights_) {
      if (h < 0) {
        throw ShapeMismatchError("dot set heights must be nonnegative");
      }
    }
  }

  DotSet(std::initializer_list<Count> heights)
      : DotSet(std::vector<Count>(heights)) {}

  /// Number of columns n.
  int columns() const { return static_cast<int>(heights_.size()); }

  /// Height of a column; columns outside 1..n are empty.
  Count height(int col) const {
    if (col < 1 || col > columns()) return 0;
    return heights_[static_cast<std::size_t>(col) - 1];
  }

  const std::vector<Count>& heights() const { return heights_; }

  bool contains(const Dot& x) const {
    return x.col >= 1 && x.row >= 1 && x.row <= height(x.col);
  }

  /// Number of dots in the set, summed over all columns.
  Count dot_count() const {
    Count total = 0;
    for (Count h : heights_) total = checked_add(total, h);
    return total;
  }

  bool weakly_increasing() const {
    for (std::size_t j = 1; j < heights_.size(); ++j) {
      if (heights_[j] < heights_[j - 1]) return false;
    }
    return true;
  }

  /// Materialize the dots in canonical order.
  std::vector<Dot> dots() const {
    std::vector<Dot> out;
    for (int col = 1; col <= columns(); ++col) {
      for (Count row = 1; row <= height(col); ++row) {
        out.push_back(Dot{col, row});
      }
    }
    return out;
  }

  friend bool operator==(const DotSet&, const DotSet&) = default;

 private:
  std::vector<Count> heights_;
};

/// Cumulative histogram of h: H(j) is the prefix sum of the first j counts.
inline DotSet cumulate(const Histogram& h) {
  std::vector<Count> heights;
  heights.reserve(static_cast<std::size_t>(h.bins()));
  Count acc = 0;
  for (Count c : h.counts()) {
    acc = checked_add(acc, c);
    heights.push_back(acc);
  }
  return DotSet(std::move(heights));
}

/// Inverse of cumulate. Throws NotMonotoneError if the heights decrease
/// anywhere, since then they are not prefix sums of nonnegative counts.
inline Histogram decumulate(const DotSet& heights) {
  std::vector<Count> counts;
  counts.reserve(static_cast<std::size_t>(heights.columns()));
  Count previous = 0;
  for (Count h : heights.heights()) {
    if (h < previous) {
      throw NotMonotoneError("heights decrease: not a cumulative histogram");
    }
    counts.push_back(h - previous);
    previous = h;
  }
  return Histogram(std::move(counts));
}

/**
 * Classical earth mover's distance between two histograms with the same bin
 * count and mass: the l1 distance of their cumulative histograms, which is
 * also the size of the symmetric difference of the two dot sets.
 */
inline Count pairwise_emd(const Histogram& h0, const Histogram& h1) {
  if (h0.bins() != h1.bins()) {
    throw ShapeMismatchError("pairwise emd: bin counts differ (" +
                             std::to_string(h0.bins()) + " vs " +
                             std::to_string(h1.bins()) + ")");
  }
  if (h0.mass() != h1.mass()) {
    throw ShapeMismatchError("pairwise emd: masses differ (" +
                             std::to_string(h0.mass()) + " vs " +
                             std::to_string(h1.mass()) + ")");
  }
  Count acc0 = 0;
  Count acc1 = 0;
  Count total = 0;
  for (int j = 1; j <= h0.bins(); ++j) {
    acc0 = checked_add(acc0, h0.count(j));
    acc1 = checked_add(acc1, h1.count(j));
    total = checked_add(total, std::abs(acc0 - acc1));
  }
  return total;
}

}  // namespace emsimplex
