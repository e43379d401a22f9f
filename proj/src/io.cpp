#include "divides/io.hpp"

#include <sstream>

#include "divides/errors.hpp"

namespace divides {

namespace {

constexpr std::int64_t kUnit = 20;
constexpr std::int64_t kMargin = 20;
constexpr std::int64_t kCorner = 5;  // corner rounding, in SVG units

std::int64_t sign(std::int64_t v) { return (v > 0) - (v < 0); }

struct Canvas {
  std::int64_t min_x, max_y;
  std::int64_t px(std::int64_t x) const { return (x - min_x) * kUnit + kMargin; }
  std::int64_t py(std::int64_t y) const { return (max_y - y) * kUnit + kMargin; }
};

std::vector<LatticePoint> outline(const Region& region) {
  const auto& e = region.stair.entries();
  std::vector<LatticePoint> pts{{0, 0}, {e.back().first, 0}};
  for (std::size_t i = e.size(); i-- > 0;) {
    pts.push_back({e[i].first, e[i].second});
    if (i > 0) pts.push_back({e[i - 1].first, e[i].second});
  }
  pts.push_back({0, e.front().second});
  for (auto& p : pts) p = p + region.offset;
  return pts;
}

void curve_path(std::ostream& os, const Component& comp, const Canvas& cv) {
  const auto& v = comp.vertices;
  if (v.size() < 2) return;
  auto pt = [&](LatticePoint p, std::int64_t dx = 0, std::int64_t dy = 0) {
    os << cv.px(p.x) + dx << ',' << cv.py(p.y) + dy;
  };
  auto dir = [](LatticePoint a, LatticePoint b) { return LatticePoint{sign(b.x - a.x), sign(b.y - a.y)}; };
  // Rounded turn at v[k] between the incoming and outgoing segments.
  auto corner = [&](std::size_t prev, std::size_t k, std::size_t next) {
    const auto din = dir(v[prev], v[k]);
    const auto dout = dir(v[k], v[next]);
    if (din == dout) {
      os << " L ";
      pt(v[k]);
      return;
    }
    os << " L ";
    pt(v[k], -din.x * kCorner, din.y * kCorner);
    os << " Q ";
    pt(v[k]);
    os << ' ';
    pt(v[k], dout.x * kCorner, -dout.y * kCorner);
  };
  os << "  <path d=\"M ";
  const std::size_t n = v.size();
  if (comp.closed) {
    // Start halfway along the first segment so every vertex gets a corner.
    os << (cv.px(v[0].x) + cv.px(v[1].x)) / 2 << ',' << (cv.py(v[0].y) + cv.py(v[1].y)) / 2;
    for (std::size_t k = 1; k <= n; ++k) corner(k - 1, k % n, (k + 1) % n);
    os << " Z";
  } else {
    pt(v[0]);
    for (std::size_t k = 1; k + 1 < n; ++k) corner(k - 1, k, k + 1);
    os << " L ";
    pt(v[n - 1]);
  }
  os << "\"/>\n";
}

}  // namespace

nlohmann::json region_to_json(const Region& region) {
  nlohmann::json stairs = nlohmann::json::array();
  for (const auto& [a, b] : region.stair.entries()) stairs.push_back({a, b});
  return {{"stairs", stairs}, {"offset", {region.offset.x, region.offset.y}}};
}

Region region_from_json(const nlohmann::json& j) {
  try {
    std::vector<StairEntry> entries;
    for (const auto& e : j.at("stairs")) {
      if (!e.is_array() || e.size() != 2) throw DivideError(ErrorCode::ParseError, "stair entry must be [a, b]");
      entries.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
    }
    LatticePoint offset{};
    if (j.contains("offset")) {
      const auto& o = j.at("offset");
      if (!o.is_array() || o.size() != 2) throw DivideError(ErrorCode::ParseError, "offset must be [dx, dy]");
      offset = {o[0].get<std::int64_t>(), o[1].get<std::int64_t>()};
    }
    return Region{make_stair(entries), offset};
  } catch (const nlohmann::json::exception& e) {
    throw DivideError(ErrorCode::ParseError, e.what());
  }
}

nlohmann::json divide_to_json(const Divide& divide) {
  auto point = [](LatticePoint p) { return nlohmann::json::array({p.x, p.y}); };
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : divide.components) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : c.vertices) verts.push_back(point(v));
    comps.push_back({{"closed", c.closed}, {"vertices", verts}});
  }
  nlohmann::json dps = nlohmann::json::array();
  for (const auto& p : divide.double_points) dps.push_back(point(p));
  return {{"components", comps}, {"double_points", dps}};
}

std::string render_svg(const Region& region, const Divide& divide) {
  const auto poly = outline(region);
  std::int64_t min_x = poly[0].x, max_x = poly[0].x, min_y = poly[0].y, max_y = poly[0].y;
  for (const auto& p : poly) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const Canvas cv{min_x, max_y};
  const auto w = (max_x - min_x) * kUnit + 2 * kMargin;
  const auto h = (max_y - min_y) * kUnit + 2 * kMargin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << ' ' << h << "\">\n";
  os << "  <polygon fill=\"#e8eef7\" stroke=\"#7a8699\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) os << (i ? " " : "") << cv.px(poly[i].x) << ',' << cv.py(poly[i].y);
  os << "\"/>\n";
  os << "  <g fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"2\" stroke-linejoin=\"round\">\n";
  for (const auto& c : divide.components) curve_path(os, c, cv);
  os << "  </g>\n  <g fill=\"#1f3a93\">\n";
  for (const auto& p : divide.double_points) {
    os << "    <circle cx=\"" << cv.px(p.x) << "\" cy=\"" << cv.py(p.y) << "\" r=\"3\"/>\n";
  }
  os << "  </g>\n  <g fill=\"white\" stroke=\"#b03a2e\" stroke-width=\"1.5\">\n";
  for (const auto& q : concave_points(region.stair)) {
    const auto p = q + region.offset;
    os << "    <circle cx=\"" << cv.px(p.x) << "\" cy=\"" << cv.py(p.y) << "\" r=\"4\"/>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace divides
