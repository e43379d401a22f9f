#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace divides {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  // 0 for even points, 1 for odd points.
  int parity() const noexcept { return static_cast<int>(((x + y) % 2 + 2) % 2); }
  bool even() const noexcept { return parity() == 0; }

  friend LatticePoint operator+(LatticePoint a, LatticePoint b) noexcept {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) noexcept {
    return {a.x - b.x, a.y - b.y};
  }
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

using StairEntry = std::pair<std::int64_t, std::int64_t>;

// Staircase sequence [(a_1,b_1), ..., (a_n,b_n)] with 0 < a_1 < ... < a_n and
// b_1 > ... > b_n > 0. The region it describes is the union of the rectangles
// [0,a_i] x [0,b_i]. Instances can only be obtained through make_stair, so a
// StairType is always valid.
class StairType {
 public:
  const std::vector<StairEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t width(std::size_t i) const { return entries_.at(i).first; }
  std::int64_t height(std::size_t i) const { return entries_.at(i).second; }

  // l(E_a): the bottom edge runs from the origin to (a_n, 0).
  std::int64_t bottom_edge() const noexcept { return entries_.back().first; }
  // l(E_b): the left edge runs from the origin to (0, b_1).
  std::int64_t left_edge() const noexcept { return entries_.front().second; }

  // Height of the region over the unit column [x, x+1] (0 outside).
  std::int64_t column_height(std::int64_t x) const noexcept;

  friend bool operator==(const StairType&, const StairType&) = default;

 private:
  explicit StairType(std::vector<StairEntry> entries) : entries_(std::move(entries)) {}
  friend StairType make_stair(std::span<const StairEntry> entries);

  std::vector<StairEntry> entries_;
};

// Throws DivideError with EmptySequence, NonPositiveEntry or
// MonotonicityViolation (index() is the 1-based offending entry).
StairType make_stair(std::span<const StairEntry> entries);
inline StairType make_stair(std::initializer_list<StairEntry> entries) {
  return make_stair(std::span<const StairEntry>(entries.begin(), entries.size()));
}

struct Region {
  StairType stair;
  LatticePoint offset{};

  friend bool operator==(const Region&, const Region&) = default;
};

// sum a_i b_i - sum a_i b_{i+1}
std::int64_t area_closed_form(const StairType& stair);

// Counts unit cells of the bounding box whose centre lies in one of the
// rectangles. Deliberately naive; serves as the check on area_closed_form.
std::int64_t area_cell_count(const Region& region);

// The n-1 concave corners (a_i, b_{i+1}), origin-anchored, in index order.
std::vector<LatticePoint> concave_points(const StairType& stair);

// True iff all pairwise differences of concave points are even, i.e. one
// translation can move every concave point off the even sublattice.
// Staircases with three or more steps can fail this.
bool concave_parity_consistent(std::span<const LatticePoint> points);

// Translate by (0,0) or (1,0) so that every concave point (with offset) is odd.
Region normalize_parity(const Region& region);
bool is_parity_normalized(const Region& region);

enum class Edge { Bottom, Left };

std::int64_t edge_length(const StairType& stair, Edge edge);

// Appends an l x l square along the chosen edge and re-anchors at the origin.
StairType add_square(const StairType& stair, Edge edge);

// Mirror of the staircase in the diagonal y = x.
StairType transpose(const StairType& stair);

}  // namespace divides
