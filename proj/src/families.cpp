#include "divides/families.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "divides/braid.hpp"
#include "divides/errors.hpp"

namespace divides {

namespace {

void require_sporadic_j(std::int64_t j) {
  if (j == 0 || j == -1) {
    throw DivideError(ErrorCode::InvalidParameter, "j must not be 0 or -1, got " + std::to_string(j));
  }
}

Region normalized(const StairType& stair) { return normalize_parity(Region{stair, {0, 0}}); }

RationalPoint at(const Rational& x, const Rational& y, LatticePoint offset) {
  return {x + Rational(offset.x), y + Rational(offset.y)};
}

}  // namespace

std::string_view to_string(SporadicType type) { return type == SporadicType::IX ? "IX" : "X"; }

std::string_view to_string(Family family) {
  switch (family) {
    case Family::P: return "P";
    case Family::Pm: return "Pm";
    case Family::PIX: return "PIX";
    case Family::PX: return "PX";
    case Family::Billiard: return "B";
    case Family::Couture: return "C";
  }
  return "?";
}

Torus make_torus(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) throw DivideError(ErrorCode::InvalidParameter, "torus parameters must be nonzero");
  Torus t{std::abs(a), std::abs(b), (a < 0) != (b < 0)};
  if (t.a > t.b) std::swap(t.a, t.b);
  return t;
}

std::string to_string(const KnotDescriptor& knot) {
  std::ostringstream os;
  auto torus = [&](const Torus& t) {
    os << "T(" << t.a << ',' << t.b << ')';
    if (t.mirror) os << '*';
  };
  if (const auto* t = std::get_if<Torus>(&knot)) {
    torus(*t);
  } else if (const auto* c = std::get_if<Cable>(&knot)) {
    os << "C(";
    torus(c->companion);
    os << "; " << c->m << ", " << c->r << ')';
  } else if (const auto* ix = std::get_if<SporadicIX>(&knot)) {
    os << "k_IX(" << ix->j << ')';
  } else {
    os << "k_X(" << std::get<SporadicX>(knot).j << ')';
  }
  return os.str();
}

StairType stair_P(std::int64_t j) {
  require_sporadic_j(j);
  std::vector<StairEntry> e;
  if (j < 0) {
    for (std::int64_t i = 1; i <= -j; ++i) e.emplace_back(2 * i, -2 * j + 1 - 2 * i);
    return make_stair(e);
  }
  e = {{1, 3}, {2, 1}};
  for (std::int64_t k = 2; k <= j; ++k) {
    std::vector<StairEntry> next{{1, 2 * k + 1}};
    for (auto it = e.rbegin(); it != e.rend(); ++it) next.emplace_back(it->second + 1, it->first + 1);
    e = std::move(next);
  }
  return make_stair(e);
}

StairType stair_Pm(std::int64_t j) { return add_square(stair_P(j), Edge::Bottom); }

StairType stair_PIX(std::int64_t j) { return add_square(stair_Pm(j), Edge::Left); }

StairType stair_PX(std::int64_t j) {
  return add_square(add_square(stair_P(j), Edge::Left), Edge::Bottom);
}

StairType stair_sporadic(SporadicType type, std::int64_t j) {
  return type == SporadicType::IX ? stair_PIX(j) : stair_PX(j);
}

StairType stair_couture(std::int64_t n) {
  if (n <= 1) throw DivideError(ErrorCode::InvalidParameter, "Couture type needs n > 1");
  std::vector<StairEntry> e;
  for (std::int64_t i = 1; i < n; ++i) e.emplace_back(2 * i, 2 * n + 1 - 2 * i);
  return make_stair(e);
}

Region billiard(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw DivideError(ErrorCode::InvalidParameter, "billiard needs a, b >= 1");
  return normalized(make_stair({{a, b}}));
}

SporadicData sporadic_data(SporadicType type, std::int64_t j) {
  require_sporadic_j(j);
  const std::int64_t jj = j * j;
  if (type == SporadicType::IX) {
    return {22 * jj + 9 * j + 1, -(11 * j + 2) * (11 * j + 2), j > 0 ? 11 * jj : 11 * jj + 9 * j + 2};
  }
  return {22 * jj + 13 * j + 2, -(11 * j + 3) * (11 * j + 3), j > 0 ? 11 * jj + 2 * j : 11 * jj + 11 * j + 3};
}

std::int64_t verify_coefficient_formula(SporadicType type, std::int64_t j) {
  const auto stair = stair_sporadic(type, j);
  const auto value = area_closed_form(stair) - static_cast<std::int64_t>(concave_points(stair).size()) -
                     sporadic_data(type, j).p;
  if (value != 0 && value != 1) {
    throw DivideError(ErrorCode::FormulaViolation, "coefficient formula gives " + std::to_string(value) +
                                                       " for " + std::string(to_string(type)) +
                                                       " j=" + std::to_string(j));
  }
  return value;
}

KnotDescriptor expected_knot(Family family, const std::vector<std::int64_t>& params) {
  const std::size_t arity = family == Family::Billiard ? 2 : 1;
  if (params.size() != arity) {
    throw DivideError(ErrorCode::InvalidParameter, std::string(to_string(family)) + " takes " +
                                                       std::to_string(arity) + " parameter(s)");
  }
  const auto j = params[0];
  switch (family) {
    case Family::P:
      require_sporadic_j(j);
      return make_torus(j, 2 * j + 1);
    case Family::Pm: {
      require_sporadic_j(j);
      const auto m = std::abs(j);
      return Cable{make_torus(2, 3), m, j > 0 ? 6 * m + 1 : 6 * m - 1};
    }
    case Family::PIX:
      require_sporadic_j(j);
      return SporadicIX{j};
    case Family::PX:
      require_sporadic_j(j);
      return SporadicX{j};
    case Family::Billiard:
      if (params[0] < 1 || params[1] < 1) throw DivideError(ErrorCode::InvalidParameter, "billiard needs a, b >= 1");
      return make_torus(params[0], params[1]);
    case Family::Couture:
      if (j <= 1) throw DivideError(ErrorCode::InvalidParameter, "Couture type needs n > 1");
      return make_torus(j, 2 * j - 1);
  }
  throw DivideError(ErrorCode::InvalidParameter, "unknown family");
}

LaurentPoly oracle_alexander(const KnotDescriptor& knot) {
  if (const auto* t = std::get_if<Torus>(&knot)) return alexander_torus(t->a, t->b);
  if (const auto* c = std::get_if<Cable>(&knot)) {
    const auto companion = alexander_torus(c->companion.a, c->companion.b);
    return (companion.substitute_power(c->m) * alexander_torus(c->m, c->r)).normalized();
  }
  throw DivideError(ErrorCode::InvalidParameter, "no closed-form Alexander polynomial for " + to_string(knot));
}

MultiDivide build_multidivide_Cj(std::int64_t j) {
  require_sporadic_j(j);
  const std::int64_t n = j > 0 ? j : -j - 1;
  const Region region = normalized(make_stair({{n, n + 1}, {n + 1, 1}}));
  const LatticePoint o = region.offset;

  MultiDivide md{trace(region), {}};
  // A slope-1 line v = u + c avoids the curve iff it runs through odd points.
  const std::int64_t c = o.x % 2 == 0 ? 1 : 0;
  const AuxSegment diagonal{at(-1, c - 1, o), at(n + 1, n + 1 + c, o), ""};
  if (j > 0) {
    auto l = diagonal;
    l.label = "l";
    md.aux.push_back(l);
    md.aux.push_back({at(-1, Rational(3 * n + 1, 3), o), at(Rational(2 * n + 1, 2), Rational(3 * n + 1, 3), o), "a"});
    md.aux.push_back({at(Rational(1, 5), -1, o), at(Rational(1, 5), n + 2, o), "b"});
  } else {
    md.aux.push_back({at(-1, Rational(1, 3), o), at(n + 2, Rational(1, 3), o), "l"});
    md.aux.push_back({at(Rational(1, 5), -1, o), at(Rational(1, 5), n + 2, o), "a"});
    auto b = diagonal;
    b.label = "b";
    md.aux.push_back(b);
  }

  if (md.primary.components.size() != 1) {
    throw DivideError(ErrorCode::PlacementFailure, "c(j) is not a single component");
  }
  const auto m = intersection_matrix(md);
  const std::int64_t aj = std::abs(j);
  const std::vector<std::int64_t> want{aj, aj, std::abs(j + 1)};
  bool ok = m[0][1] == want[0] && m[0][2] == want[1] && m[0][3] == want[2];
  for (std::size_t r = 1; r < 4; ++r) {
    for (std::size_t s = r + 1; s < 4; ++s) ok = ok && m[r][s] == 1;
  }
  if (!ok) {
    std::ostringstream os;
    os << "counts (" << m[0][1] << ", " << m[0][2] << ", " << m[0][3] << ", " << m[1][2] << ", " << m[1][3]
       << ", " << m[2][3] << ") for j=" << j;
    throw DivideError(ErrorCode::PlacementFailure, os.str());
  }
  return md;
}

std::vector<std::int64_t> cj_framings(SporadicType type, std::int64_t j) {
  require_sporadic_j(j);
  const bool ix = type == SporadicType::IX;
  return {j * (j + 1), -1, ix ? -2 : -3, ix ? -3 : -2};
}

FamilySpec parse_family(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw DivideError(ErrorCode::ParseError, why + " in family \"" + std::string(text) + "\"");
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail("missing ':'");
  const auto name = text.substr(0, colon);
  FamilySpec spec;
  if (name == "P") spec.family = Family::P;
  else if (name == "Pm") spec.family = Family::Pm;
  else if (name == "PIX") spec.family = Family::PIX;
  else if (name == "PX") spec.family = Family::PX;
  else if (name == "B") spec.family = Family::Billiard;
  else if (name == "C") spec.family = Family::Couture;
  else fail("unknown family '" + std::string(name) + "'");

  auto rest = text.substr(colon + 1);
  while (true) {
    std::int64_t v = 0;
    const auto* end = rest.data() + rest.size();
    const auto [ptr, ec] = std::from_chars(rest.data(), end, v);
    if (ec != std::errc{} || ptr == rest.data()) fail("expected integer");
    spec.params.push_back(v);
    if (ptr == end) break;
    if (*ptr != ',') fail("expected ','");
    rest = std::string_view(ptr + 1, static_cast<std::size_t>(end - ptr - 1));
  }
  const std::size_t arity = spec.family == Family::Billiard ? 2 : 1;
  if (spec.params.size() != arity) fail("wrong number of parameters");
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string s(to_string(spec.family));
  s += ':';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(spec.params[i]);
  }
  return s;
}

Region family_region(const FamilySpec& spec) {
  const auto j = spec.params.at(0);
  switch (spec.family) {
    case Family::P: return normalized(stair_P(j));
    case Family::Pm: return normalized(stair_Pm(j));
    case Family::PIX: return normalized(stair_PIX(j));
    case Family::PX: return normalized(stair_PX(j));
    case Family::Billiard: return billiard(spec.params.at(0), spec.params.at(1));
    case Family::Couture: return normalized(stair_couture(j));
  }
  throw DivideError(ErrorCode::InvalidParameter, "unknown family");
}

std::int64_t expected_double_points(const FamilySpec& spec) {
  const auto j = spec.params.at(0);
  switch (spec.family) {
    case Family::P:
      require_sporadic_j(j);
      return j > 0 ? j * (j - 1) : (j + 1) * (j + 1);
    case Family::Pm: {
      const auto l = std::abs(2 * j);
      return expected_double_points({Family::P, {j}}) + l * (l - 1) / 2;
    }
    case Family::PIX: return sporadic_data(SporadicType::IX, j).genus;
    case Family::PX: return sporadic_data(SporadicType::X, j).genus;
    case Family::Billiard: {
      const auto a = spec.params.at(0), b = spec.params.at(1);
      if (std::gcd(a, b) != 1) throw DivideError(ErrorCode::NotCoprime, "billiard link has no genus");
      return (a - 1) * (b - 1) / 2;
    }
    case Family::Couture:
      return (j - 1) * (j - 1);
  }
  throw DivideError(ErrorCode::InvalidParameter, "unknown family");
}

}  // namespace divides
