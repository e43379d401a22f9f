#include "divides/tracer.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "divides/errors.hpp"

namespace divides {

namespace {

struct Direction {
  int dx, dy;
};

// NE, SE, SW, NW. The unit diagonal leaving v in direction d is the even
// diagonal of the cell returned by cell_toward.
constexpr std::array<Direction, 4> kDirections{{{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}};

LatticePoint cell_toward(LatticePoint v, Direction d) {
  return {d.dx > 0 ? v.x : v.x - 1, d.dy > 0 ? v.y : v.y - 1};
}

bool same(Direction a, Direction b) { return a.dx == b.dx && a.dy == b.dy; }

class Tracer {
 public:
  explicit Tracer(const CellSet& cells)
      : cells_(cells), consumed_(static_cast<std::size_t>(cells.width() * cells.height()), 0) {}

  Divide run() {
    Divide out;
    const auto verts = even_vertices();
    for (const auto& v : verts) {
      const int deg = degree(v);
      if (deg == 3) {
        throw DivideError(ErrorCode::NonGenericConcavePoint,
                          "concave corner at even point (" + std::to_string(v.x) + "," +
                              std::to_string(v.y) + ")");
      }
      if (deg == 4) out.double_points.push_back(v);
    }
    for (const auto& v : verts) {
      if (degree(v) != 1) continue;
      const Direction d = only_free_direction(v);
      if (is_consumed(cell_toward(v, d))) continue;
      out.components.push_back(walk(v, d, false));
    }
    for (const auto& v : verts) {
      for (const auto& d : kDirections) {
        if (has_edge(v, d) && !is_consumed(cell_toward(v, d))) {
          out.components.push_back(walk(v, d, true));
        }
      }
    }
    return out;
  }

 private:
  std::vector<LatticePoint> even_vertices() const {
    std::vector<LatticePoint> out;
    for (std::int64_t x = cells_.min_x(); x <= cells_.min_x() + cells_.width(); ++x) {
      for (std::int64_t y = cells_.min_y(); y <= cells_.min_y() + cells_.height(); ++y) {
        const LatticePoint v{x, y};
        if (v.even() && degree(v) > 0) out.push_back(v);
      }
    }
    return out;  // lexicographic by construction
  }

  bool has_edge(LatticePoint v, Direction d) const {
    const auto c = cell_toward(v, d);
    return cells_.contains(c.x, c.y);
  }

  int degree(LatticePoint v) const {
    int n = 0;
    for (const auto& d : kDirections) n += has_edge(v, d) ? 1 : 0;
    return n;
  }

  Direction only_free_direction(LatticePoint v) const {
    for (const auto& d : kDirections) {
      if (has_edge(v, d)) return d;
    }
    return kDirections[0];
  }

  std::size_t index(LatticePoint c) const {
    return static_cast<std::size_t>((c.x - cells_.min_x()) * cells_.height() + (c.y - cells_.min_y()));
  }
  bool is_consumed(LatticePoint c) const { return consumed_[index(c)] != 0; }
  void consume(LatticePoint c) { consumed_[index(c)] = 1; }

  Component walk(LatticePoint start, Direction d, bool closed) {
    Component comp;
    comp.closed = closed;
    comp.vertices.push_back(start);
    LatticePoint v = start;
    for (;;) {
      consume(cell_toward(v, d));
      const LatticePoint next{v.x + d.dx, v.y + d.dy};
      const int deg = degree(next);
      if (closed && next == start) break;
      if (deg == 1) {
        comp.vertices.push_back(next);
        break;
      }
      if (deg == 4) {
        comp.vertices.push_back(next);
        v = next;
        continue;
      }
      // deg == 2: leave through the edge we did not arrive on.
      const Direction back{-d.dx, -d.dy};
      Direction out = d;
      for (const auto& cand : kDirections) {
        if (!same(cand, back) && has_edge(next, cand)) out = cand;
      }
      if (!same(out, d)) comp.vertices.push_back(next);
      d = out;
      v = next;
    }
    return comp;
  }

  const CellSet& cells_;
  std::vector<char> consumed_;
};

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

CellSet CellSet::from_cells(std::span<const LatticePoint> cells) {
  CellSet s;
  if (cells.empty()) return s;
  auto [xmin, xmax] = std::minmax_element(cells.begin(), cells.end(),
                                          [](auto& a, auto& b) { return a.x < b.x; });
  auto [ymin, ymax] = std::minmax_element(cells.begin(), cells.end(),
                                          [](auto& a, auto& b) { return a.y < b.y; });
  s.min_x_ = xmin->x;
  s.min_y_ = ymin->y;
  s.width_ = xmax->x - xmin->x + 1;
  s.height_ = ymax->y - ymin->y + 1;
  s.bits_.assign(static_cast<std::size_t>(s.width_ * s.height_), 0);
  for (const auto& c : cells) {
    auto& bit = s.bits_[static_cast<std::size_t>((c.x - s.min_x_) * s.height_ + (c.y - s.min_y_))];
    if (!bit) ++s.count_;
    bit = 1;
  }
  return s;
}

CellSet CellSet::from_region(const Region& region) {
  std::vector<LatticePoint> cells;
  const auto& stair = region.stair;
  for (std::int64_t x = 0; x < stair.bottom_edge(); ++x) {
    const std::int64_t h = stair.column_height(x);
    for (std::int64_t y = 0; y < h; ++y) cells.push_back(LatticePoint{x, y} + region.offset);
  }
  return from_cells(cells);
}

bool CellSet::contains(std::int64_t x, std::int64_t y) const noexcept {
  if (x < min_x_ || y < min_y_ || x >= min_x_ + width_ || y >= min_y_ + height_) return false;
  return bits_[static_cast<std::size_t>((x - min_x_) * height_ + (y - min_y_))] != 0;
}

std::vector<LatticePoint> CellSet::cells() const {
  std::vector<LatticePoint> out;
  out.reserve(count_);
  for (std::int64_t x = min_x_; x < min_x_ + width_; ++x) {
    for (std::int64_t y = min_y_; y < min_y_ + height_; ++y) {
      if (contains(x, y)) out.push_back({x, y});
    }
  }
  return out;
}

CellSet CellSet::translated(LatticePoint v) const {
  auto c = cells();
  for (auto& p : c) p = p + v;
  return from_cells(c);
}

CellSet CellSet::mirrored() const {
  auto c = cells();
  for (auto& p : c) p = {-p.x - 1, p.y};
  return from_cells(c);
}

CellSet CellSet::transposed() const {
  auto c = cells();
  for (auto& p : c) p = {p.y, p.x};
  return from_cells(c);
}

Divide trace_cells(const CellSet& cells) {
  if (cells.empty()) return {};
  return Tracer(cells).run();
}

Divide trace(const Region& region) {
  for (const auto& p : concave_points(region.stair)) {
    const auto q = p + region.offset;
    if (q.even()) {
      throw DivideError(ErrorCode::NonGenericConcavePoint,
                        "concave point (" + std::to_string(q.x) + "," + std::to_string(q.y) +
                            ") is even; normalize the region first");
    }
  }
  return trace_cells(CellSet::from_region(region));
}

std::size_t double_point_count(const Divide& divide) { return divide.double_points.size(); }

ComponentProfile component_profile(const Divide& divide) {
  ComponentProfile p;
  for (const auto& c : divide.components) (c.closed ? p.circles : p.arcs) += 1;
  return p;
}

std::vector<LatticePoint> expand_path(const Component& component) {
  std::vector<LatticePoint> out;
  const auto& v = component.vertices;
  if (v.empty()) return out;
  out.push_back(v.front());
  auto step_to = [&out](LatticePoint target) {
    LatticePoint p = out.back();
    const int dx = target.x > p.x ? 1 : -1;
    const int dy = target.y > p.y ? 1 : -1;
    while (p != target) {
      p = {p.x + dx, p.y + dy};
      out.push_back(p);
    }
  };
  for (std::size_t i = 1; i < v.size(); ++i) step_to(v[i]);
  if (component.closed && v.size() > 1) {
    step_to(v.front());
    out.pop_back();
  }
  return out;
}

std::int64_t census_size(int max_n, int max_dim) {
  std::int64_t total = 0;
  for (int n = 1; n <= max_n; ++n) total += binomial(max_dim, n) * binomial(max_dim, n);
  return total;
}

std::vector<CensusRow> component_census(int max_n, int max_dim) {
  if (max_n < 1 || max_dim < 1) {
    throw DivideError(ErrorCode::InvalidParameter, "census bounds must be >= 1");
  }
  std::vector<CensusRow> rows;

  // Increasing k-subsets of {1..max_dim}.
  std::function<void(int, std::int64_t, std::vector<std::int64_t>&, std::vector<std::vector<std::int64_t>>&)>
      subsets = [&](int k, std::int64_t from, std::vector<std::int64_t>& cur,
                    std::vector<std::vector<std::int64_t>>& acc) {
        if (static_cast<int>(cur.size()) == k) {
          acc.push_back(cur);
          return;
        }
        for (std::int64_t v = from; v <= max_dim; ++v) {
          cur.push_back(v);
          subsets(k, v + 1, cur, acc);
          cur.pop_back();
        }
      };

  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::vector<std::int64_t>> sets;
    std::vector<std::int64_t> cur;
    subsets(n, 1, cur, sets);
    for (const auto& a : sets) {
      for (const auto& b_inc : sets) {
        std::vector<StairEntry> entries;
        for (int i = 0; i < n; ++i) entries.emplace_back(a[i], b_inc[n - 1 - i]);
        const auto stair = make_stair(entries);
        const auto concave = concave_points(stair);
        if (!concave_parity_consistent(concave)) {
          rows.push_back({stair, false, 0, 0});
          continue;
        }
        const auto divide = trace(normalize_parity(Region{stair, {0, 0}}));
        const auto profile = component_profile(divide);
        rows.push_back({stair, true, profile.arcs, profile.circles});
      }
    }
  }
  return rows;
}

}  // namespace divides
