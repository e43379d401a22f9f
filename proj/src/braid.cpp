#include "divides/braid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "divides/errors.hpp"

namespace divides {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// One x-monotone stretch of the arc, oriented left to right.
struct Piece {
  std::int64_t x0 = 0;
  std::vector<std::int64_t> ys;  // ys[k] is the height at x0 + k
  bool left_terminal = false;
  bool right_terminal = false;

  std::int64_t x1() const { return x0 + static_cast<std::int64_t>(ys.size()) - 1; }
  std::int64_t y_at(std::int64_t x) const { return ys[static_cast<std::size_t>(x - x0)]; }
  LatticePoint left() const { return {x0, ys.front()}; }
  LatticePoint right() const { return {x1(), ys.back()}; }
  // +1 when the piece leaves its left end upward, so it sits just above it.
  int left_side() const { return ys[1] > ys[0] ? 1 : -1; }
  // -1 when the piece arrives at its right end from below.
  int right_side() const { return ys[ys.size() - 2] < ys.back() ? -1 : 1; }
};

// Vertical order key in doubled coordinates; `side` breaks ties for points
// parked infinitesimally above or below a turning point.
using Key = std::pair<std::int64_t, int>;

std::vector<Piece> split_pieces(const std::vector<LatticePoint>& path) {
  std::vector<Piece> pieces;
  std::size_t start = 0;
  auto emit = [&](std::size_t from, std::size_t to) {
    Piece p;
    const bool forward = path[to].x > path[from].x;
    if (forward) {
      p.x0 = path[from].x;
      for (std::size_t k = from; k <= to; ++k) p.ys.push_back(path[k].y);
    } else {
      p.x0 = path[to].x;
      for (std::size_t k = to + 1; k-- > from;) p.ys.push_back(path[k].y);
    }
    const bool starts_arc = from == 0;
    const bool ends_arc = to == path.size() - 1;
    if (forward) {
      p.left_terminal = starts_arc;
      p.right_terminal = ends_arc;
    } else {
      p.left_terminal = ends_arc;
      p.right_terminal = starts_arc;
    }
    pieces.push_back(std::move(p));
  };
  for (std::size_t k = 1; k + 1 < path.size(); ++k) {
    const auto in = path[k].x - path[k - 1].x;
    const auto out = path[k + 1].x - path[k].x;
    if (in != out) {
      emit(start, k);
      start = k;
    }
  }
  emit(start, path.size() - 1);
  return pieces;
}

std::vector<int> ranks_for(const std::vector<Key>& keys) {
  std::vector<int> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> rank(keys.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  return rank;
}

std::optional<Band> adjacent_band(int ra, int rb) {
  if (std::abs(ra - rb) != 1) return std::nullopt;
  return Band{std::min(ra, rb), std::max(ra, rb)};
}

std::optional<BraidWord> sweep_word(const std::vector<LatticePoint>& path,
                                    const std::vector<LatticePoint>& double_points) {
  if (path.size() == 1) return BraidWord{1, {}};
  const auto pieces = split_pieces(path);

  std::int64_t max_left = INT64_MIN, min_right = INT64_MAX;
  for (const auto& p : pieces) {
    max_left = std::max(max_left, p.x0);
    min_right = std::min(min_right, p.x1());
  }
  if (max_left >= min_right) return std::nullopt;
  for (const auto& d : double_points) {
    if (d.x <= max_left) return std::nullopt;
  }
  // Horizontal rays leaving each turning point away from the sweep must not
  // meet the curve again.
  std::set<LatticePoint> on_curve(path.begin(), path.end());
  for (const auto& p : pieces) {
    for (const auto& q : on_curve) {
      if (q.y == p.right().y && q.x > p.right().x) return std::nullopt;
      if (q.y == p.left().y && q.x < p.left().x) return std::nullopt;
    }
  }

  std::map<std::int64_t, std::vector<LatticePoint>> events;
  for (const auto& d : double_points) events[d.x].push_back(d);

  BraidWord word{static_cast<int>(pieces.size()), {}};
  std::vector<BraidLetter> forward;
  for (const auto& [x, pts] : events) {
    std::vector<Key> keys;
    for (const auto& p : pieces) {
      if (p.x1() < x) {
        keys.emplace_back(2 * p.right().y, p.right_side());
      } else {
        keys.emplace_back(p.y_at(x - 1) + p.y_at(x), 0);
      }
    }
    const auto rank = ranks_for(keys);
    for (const auto& d : pts) {
      std::vector<int> through;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& p = pieces[i];
        if (p.x0 < d.x && d.x < p.x1() && p.y_at(d.x) == d.y) through.push_back(static_cast<int>(i));
      }
      if (through.size() != 2) return std::nullopt;
      const auto band = adjacent_band(rank[through[0]], rank[through[1]]);
      if (!band) return std::nullopt;
      forward.push_back(*band);
    }
  }

  auto turning_letters = [&](bool right) -> std::optional<std::vector<BraidLetter>> {
    std::vector<Key> keys;
    std::map<LatticePoint, std::vector<int>> meets;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const auto& p = pieces[i];
      const auto end = right ? p.right() : p.left();
      keys.emplace_back(2 * end.y, right ? p.right_side() : p.left_side());
      if (!(right ? p.right_terminal : p.left_terminal)) meets[end].push_back(static_cast<int>(i));
    }
    const auto rank = ranks_for(keys);
    std::vector<std::pair<std::int64_t, BraidLetter>> out;
    for (const auto& [pt, ids] : meets) {
      if (ids.size() != 2) return std::nullopt;
      const auto band = adjacent_band(rank[ids[0]], rank[ids[1]]);
      if (!band) return std::nullopt;
      out.emplace_back(pt.y, *band);
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<BraidLetter> letters;
    for (auto& [y, l] : out) letters.push_back(l);
    return letters;
  };

  const auto far = turning_letters(true);
  const auto near = turning_letters(false);
  if (!far || !near) return std::nullopt;
  word.letters = forward;
  word.letters.insert(word.letters.end(), far->begin(), far->end());
  word.letters.insert(word.letters.end(), forward.rbegin(), forward.rend());
  word.letters.insert(word.letters.end(), near->begin(), near->end());
  return word;
}

std::vector<LatticePoint> swap_xy(std::vector<LatticePoint> pts) {
  for (auto& p : pts) std::swap(p.x, p.y);
  return pts;
}

}  // namespace

void validate(const BraidWord& word) {
  if (word.strands < 1) throw DivideError(ErrorCode::InvalidParameter, "braid needs >= 1 strand");
  for (const auto& l : word.letters) {
    std::visit(overloaded{
                   [&](const Band& b) {
                     if (b.i < 1 || b.i >= b.j || b.j > word.strands) {
                       throw DivideError(ErrorCode::InvalidParameter, "band out of range");
                     }
                   },
                   [&](const Artin& a) {
                     if (a.k < 1 || a.k >= word.strands) {
                       throw DivideError(ErrorCode::InvalidParameter, "Artin letter out of range");
                     }
                   },
               },
               l);
  }
}

bool is_band_positive(const BraidWord& word) {
  return std::all_of(word.letters.begin(), word.letters.end(),
                     [](const BraidLetter& l) { return std::holds_alternative<Band>(l); });
}

std::vector<int> closure_permutation(const BraidWord& word) {
  validate(word);
  std::vector<int> at(static_cast<std::size_t>(word.strands));  // at[position] = strand
  for (int i = 0; i < word.strands; ++i) at[static_cast<std::size_t>(i)] = i;
  for (const auto& l : word.letters) {
    const auto [p, q] = std::visit(overloaded{
                                       [](const Band& b) { return std::pair{b.i - 1, b.j - 1}; },
                                       [](const Artin& a) { return std::pair{a.k - 1, a.k}; },
                                   },
                                   l);
    std::swap(at[static_cast<std::size_t>(p)], at[static_cast<std::size_t>(q)]);
  }
  std::vector<int> image(static_cast<std::size_t>(word.strands));
  for (int pos = 0; pos < word.strands; ++pos) image[static_cast<std::size_t>(at[static_cast<std::size_t>(pos)])] = pos;
  return image;
}

int closure_component_count(const BraidWord& word) {
  const auto perm = closure_permutation(word);
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t k = i; !seen[k]; k = static_cast<std::size_t>(perm[k])) seen[k] = 1;
  }
  return cycles;
}

std::int64_t bennequin_rank(const BraidWord& word) {
  return static_cast<std::int64_t>(word.letters.size()) - word.strands + 1;
}

std::string to_string(const BraidWord& word) {
  std::ostringstream os;
  os << "s=" << word.strands << ';';
  for (const auto& l : word.letters) {
    std::visit(overloaded{
                   [&](const Band& b) { os << " b(" << b.i << ',' << b.j << ')'; },
                   [&](const Artin& a) { os << ' ' << (a.positive ? 'a' : 'A') << '(' << a.k << ')'; },
               },
               l);
  }
  return os.str();
}

BraidWord parse_braid(std::string_view text) {
  std::string s(text);
  auto fail = [&](const std::string& why) {
    throw DivideError(ErrorCode::ParseError, why + " in \"" + s + "\"");
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_int = [&]() {
    skip_ws();
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer");
    return std::stoi(s.substr(start, i - start));
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  };
  BraidWord w;
  skip_ws();
  expect('s');
  expect('=');
  w.strands = read_int();
  expect(';');
  for (skip_ws(); i < s.size(); skip_ws()) {
    const char kind = s[i++];
    expect('(');
    if (kind == 'b') {
      const int a = read_int();
      expect(',');
      const int b = read_int();
      w.letters.emplace_back(Band{a, b});
    } else if (kind == 'a' || kind == 'A') {
      w.letters.emplace_back(Artin{read_int(), kind == 'a'});
    } else {
      fail(std::string("unknown letter '") + kind + "'");
    }
    expect(')');
  }
  try {
    validate(w);
  } catch (const DivideError& e) {
    fail(e.what());
  }
  return w;
}

BraidWord band_to_artin(const BraidWord& word) {
  validate(word);
  BraidWord out{word.strands, {}};
  for (const auto& l : word.letters) {
    if (const auto* a = std::get_if<Artin>(&l)) {
      out.letters.push_back(*a);
      continue;
    }
    const auto& b = std::get<Band>(l);
    for (int k = b.j - 1; k > b.i; --k) out.letters.emplace_back(Artin{k, true});
    out.letters.emplace_back(Artin{b.i, true});
    for (int k = b.i + 1; k < b.j; ++k) out.letters.emplace_back(Artin{k, false});
  }
  return out;
}

BraidWord divide_to_braid(const Divide& divide) {
  const auto profile = component_profile(divide);
  if (profile.arcs != 1 || profile.circles != 0) {
    throw DivideError(ErrorCode::NotAnArc, "divide has " + std::to_string(profile.arcs) +
                                               " arcs and " + std::to_string(profile.circles) +
                                               " circles");
  }
  const auto path = expand_path(divide.components.front());
  auto by_x = sweep_word(path, divide.double_points);
  auto by_y = sweep_word(swap_xy(path), swap_xy(divide.double_points));
  std::optional<BraidWord> best;
  if (by_x && by_y) {
    best = by_y->strands < by_x->strands ? by_y : by_x;
  } else {
    best = by_x ? by_x : by_y;
  }
  if (!best) {
    throw DivideError(ErrorCode::UnsupportedGeometry,
                      "divide is not swept monotonically in either axis direction");
  }
  const auto d = static_cast<std::int64_t>(double_point_count(divide));
  if (!is_band_positive(*best) || bennequin_rank(*best) != 2 * d ||
      closure_component_count(*best) != 1) {
    throw DivideError(ErrorCode::UnsupportedGeometry, "extracted word violates the braid contract");
  }
  return *best;
}

}  // namespace divides
