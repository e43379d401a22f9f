#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "divides/region.hpp"

namespace divides {

// Finite set of closed unit cells [x,x+1] x [y,y+1], keyed by lower-left
// corner and stored as a bitmap over the bounding box.
class CellSet {
 public:
  CellSet() = default;

  static CellSet from_region(const Region& region);
  static CellSet from_cells(std::span<const LatticePoint> cells);

  bool contains(std::int64_t x, std::int64_t y) const noexcept;
  bool empty() const noexcept { return count_ == 0; }
  std::size_t count() const noexcept { return count_; }

  std::int64_t min_x() const noexcept { return min_x_; }
  std::int64_t min_y() const noexcept { return min_y_; }
  std::int64_t width() const noexcept { return width_; }
  std::int64_t height() const noexcept { return height_; }

  std::vector<LatticePoint> cells() const;

  CellSet translated(LatticePoint v) const;
  // Reflection x -> -x (the symmetry r_x of the lattice X).
  CellSet mirrored() const;
  // Reflection in the diagonal y = x.
  CellSet transposed() const;

 private:
  std::int64_t min_x_ = 0, min_y_ = 0, width_ = 0, height_ = 0;
  std::size_t count_ = 0;
  std::vector<char> bits_;
};

struct Component {
  bool closed = false;
  // Start, every reflection, every double point passed, and (for arcs) the
  // final terminal. Consecutive vertices are joined by a slope +-1 segment.
  std::vector<LatticePoint> vertices;

  friend bool operator==(const Component&, const Component&) = default;
};

struct Divide {
  std::vector<Component> components;  // arcs first, then circles
  std::vector<LatticePoint> double_points;  // sorted

  friend bool operator==(const Divide&, const Divide&) = default;
};

struct ComponentProfile {
  int arcs = 0;
  int circles = 0;
  int total() const noexcept { return arcs + circles; }
  // Components of the divide link: an arc lifts to one circle of tangent
  // directions, an immersed circle to two (one per orientation).
  int link_components() const noexcept { return arcs + 2 * circles; }
  friend bool operator==(const ComponentProfile&, const ComponentProfile&) = default;
};

// Traces X ∩ R for a parity-normalized region. Throws NonGenericConcavePoint
// when a concave corner sits on an even lattice point.
Divide trace(const Region& region);

// Same, for an arbitrary cell set (mirror images, translates, ...).
Divide trace_cells(const CellSet& cells);

std::size_t double_point_count(const Divide& divide);
ComponentProfile component_profile(const Divide& divide);

// Every lattice point visited by the component, in order (closed components
// do not repeat the start point).
std::vector<LatticePoint> expand_path(const Component& component);

struct CensusRow {
  StairType stair;
  // False when the concave points have mixed parity: some corner then sits
  // on an even point whatever the translation, and no divide is defined.
  bool generic = true;
  int arcs = 0;
  int circles = 0;
};

// All StairTypes with n <= max_n and a_n, b_1 <= max_dim, parity-normalized
// and traced (non-generic ones are listed with zero counts). Rows are ordered by n, then by the width set, then by the
// height set (both as increasing sequences).
std::vector<CensusRow> component_census(int max_n, int max_dim);

// Number of StairTypes within the census bounds: sum_n C(max_dim, n)^2.
std::int64_t census_size(int max_n, int max_dim);

}  // namespace divides
