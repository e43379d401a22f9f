#include "divides/region.hpp"

#include <algorithm>
#include <string>

#include "divides/errors.hpp"

namespace divides {

std::int64_t StairType::column_height(std::int64_t x) const noexcept {
  if (x < 0) return 0;
  for (const auto& [a, b] : entries_) {
    if (x < a) return b;
  }
  return 0;
}

StairType make_stair(std::span<const StairEntry> entries) {
  if (entries.empty()) {
    throw DivideError(ErrorCode::EmptySequence, "staircase needs at least one entry");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first <= 0 || entries[i].second <= 0) {
      throw DivideError(ErrorCode::NonPositiveEntry,
                        "entry " + std::to_string(i + 1) + " is not positive",
                        static_cast<int>(i + 1));
    }
    if (i > 0 && (entries[i].first <= entries[i - 1].first ||
                  entries[i].second >= entries[i - 1].second)) {
      throw DivideError(ErrorCode::MonotonicityViolation,
                        "entry " + std::to_string(i + 1) +
                            " breaks a_i increasing / b_i decreasing",
                        static_cast<int>(i + 1));
    }
  }
  return StairType(std::vector<StairEntry>(entries.begin(), entries.end()));
}

std::int64_t area_closed_form(const StairType& stair) {
  const auto& e = stair.entries();
  std::int64_t area = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    area += e[i].first * e[i].second;
    if (i + 1 < e.size()) area -= e[i].first * e[i + 1].second;
  }
  return area;
}

std::int64_t area_cell_count(const Region& region) {
  const auto& e = region.stair.entries();
  const std::int64_t w = region.stair.bottom_edge();
  const std::int64_t h = region.stair.left_edge();
  std::int64_t cells = 0;
  // Cell with lower-left corner (x, y) has centre (x + 1/2, y + 1/2); work in
  // doubled coordinates to stay integral.
  for (std::int64_t x = region.offset.x; x < region.offset.x + w; ++x) {
    for (std::int64_t y = region.offset.y; y < region.offset.y + h; ++y) {
      const std::int64_t cx = 2 * (x - region.offset.x) + 1;
      const std::int64_t cy = 2 * (y - region.offset.y) + 1;
      const bool inside = std::any_of(e.begin(), e.end(), [&](const StairEntry& r) {
        return cx > 0 && cx < 2 * r.first && cy > 0 && cy < 2 * r.second;
      });
      if (inside) ++cells;
    }
  }
  return cells;
}

std::vector<LatticePoint> concave_points(const StairType& stair) {
  const auto& e = stair.entries();
  std::vector<LatticePoint> out;
  out.reserve(e.size() - 1);
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    out.push_back({e[i].first, e[i + 1].second});
  }
  return out;
}

bool concave_parity_consistent(std::span<const LatticePoint> points) {
  return std::all_of(points.begin(), points.end(), [&](const LatticePoint& p) {
    return p.parity() == points.front().parity();
  });
}

bool is_parity_normalized(const Region& region) {
  const auto pts = concave_points(region.stair);
  return std::all_of(pts.begin(), pts.end(), [&](const LatticePoint& p) {
    return !(p + region.offset).even();
  });
}

Region normalize_parity(const Region& region) {
  const auto pts = concave_points(region.stair);
  if (pts.empty()) return region;
  if (!concave_parity_consistent(pts)) {
    throw DivideError(ErrorCode::MixedConcaveParity,
                      "concave points have mixed parity; no translation makes them all odd");
  }
  if (!(pts.front() + region.offset).even()) return region;
  return Region{region.stair, region.offset + LatticePoint{1, 0}};
}

std::int64_t edge_length(const StairType& stair, Edge edge) {
  return edge == Edge::Bottom ? stair.bottom_edge() : stair.left_edge();
}

StairType add_square(const StairType& stair, Edge edge) {
  std::vector<StairEntry> out = stair.entries();
  const std::int64_t l = edge_length(stair, edge);
  for (auto& [a, b] : out) {
    if (edge == Edge::Bottom) {
      b += l;
    } else {
      a += l;
    }
  }
  return make_stair(out);
}

StairType transpose(const StairType& stair) {
  std::vector<StairEntry> out;
  const auto& e = stair.entries();
  for (auto it = e.rbegin(); it != e.rend(); ++it) out.emplace_back(it->second, it->first);
  return make_stair(out);
}

}  // namespace divides
