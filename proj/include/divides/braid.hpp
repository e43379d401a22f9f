#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "divides/laurent.hpp"
#include "divides/tracer.hpp"

namespace divides {

// Positive band generator sigma_{ij}: strand i passes over strands
// i+1..j-1 and crosses strand j. Band{k, k+1} is the Artin generator sigma_k.
struct Band {
  int i = 1;
  int j = 2;
  friend bool operator==(const Band&, const Band&) = default;
};

struct Artin {
  int k = 1;
  bool positive = true;
  friend bool operator==(const Artin&, const Artin&) = default;
};

using BraidLetter = std::variant<Band, Artin>;

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Throws InvalidParameter if a letter does not fit the strand count.
void validate(const BraidWord& word);

bool is_band_positive(const BraidWord& word);

// Image of each strand (0-based) after one pass through the word.
std::vector<int> closure_permutation(const BraidWord& word);
int closure_component_count(const BraidWord& word);

// letters - strands + 1; twice the genus for a strongly quasi-positive knot word.
std::int64_t bennequin_rank(const BraidWord& word);

// Text form: "s=4; b(1,3) b(2,4) a(1) A(2)" (b = band, a/A = positive/negative Artin).
std::string to_string(const BraidWord& word);
BraidWord parse_braid(std::string_view text);

// Band(i,j) -> s_{j-1} ... s_{i+1} s_i s_{i+1}^-1 ... s_{j-1}^-1.
BraidWord band_to_artin(const BraidWord& word);

// Closed-braid presentation of the divide knot of a single immersed arc.
// The arc is swept by a vertical (or, if that needs fewer strands, a
// horizontal) line. Strands are the points of the arc on a line just inside
// the minimum side; the word is  W * M * reverse(W) * N  where W lists the
// double points in sweep order, M the turning points on the far side and N
// those on the near side, each as sigma_r with r the rank of the lower of the
// two meeting branches.
//
// Enforced: every letter is a positive band, letters - strands + 1 equals
// twice the double-point count, and the closure is a knot. Throws NotAnArc
// for anything but one open component and UnsupportedGeometry when neither
// sweep direction sees all minima before all maxima.
BraidWord divide_to_braid(const Divide& divide);

// Alexander polynomial of the closure, from det(I - reduced Burau) =
// Delta(t) (1 + t + ... + t^(s-1)). Evaluated exactly modulo several 61-bit
// primes and reconstructed by CRT. Throws NotAKnotClosure for links and
// Overflow if a coefficient does not fit in 62 bits.
LaurentPoly alexander(const BraidWord& word);

// (t^ab - 1)(t - 1) / ((t^a - 1)(t^b - 1)); NotCoprime unless gcd(a,b) = 1.
LaurentPoly alexander_torus(std::int64_t a, std::int64_t b);

// Delta_{T(2,3)}(t^m) * Delta_{T(m,r)}(t) for the (m, r) cable of the trefoil.
LaurentPoly alexander_cable_trefoil(std::int64_t m, std::int64_t r);

}  // namespace divides
