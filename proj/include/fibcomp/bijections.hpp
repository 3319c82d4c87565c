#pragma once

// Explicit bijections between composition families, each with its inverse.

#include "fibcomp/compositions.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fibcomp {

/// Compositions of n+p with parts in {p, q} starting with p, read as blocks
/// (p, q^i) and mapped to parts p + q i. Input parts must lie in {p, q}.
Composition two_part_bijection(Part p, Part q, const Composition& c);
Composition two_part_bijection_inverse(Part p, Part q, const Composition& image);

/// Parts {1,2} of weight n to odd parts of weight n+1.
Composition odd_from_fib(const Composition& c);
Composition odd_from_fib_inverse(const Composition& odd);

/// n dots split into compartments by bars, one circled dot per compartment.
/// Text form: "." for a dot, "o" for a circled dot, "|" for a bar.
struct BarsDots {
  std::vector<std::size_t> compartments;  // dot counts, left to right
  std::vector<std::size_t> circled;       // position of the circled dot in each compartment

  std::size_t dots() const;
  static BarsDots parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const BarsDots&, const BarsDots&) = default;
};

/// Bars become 1, plain dots 2, circled dots 1: a composition of 2n-1 with
/// parts {1,2}.
Composition bars_dots_decode(const BarsDots& b);
BarsDots bars_dots_encode(const Composition& c);
/// All configurations with n dots, in a fixed order.
std::vector<BarsDots> all_bars_dots(std::size_t n);

/// From (2^{n-1}), the first selected 2 becomes 1 and every later selected 2
/// becomes (1,1); (1,2) is prepended. `subset` holds positions in 1..n-1.
Composition subset_prime_construction(std::size_t n, const std::vector<std::size_t>& subset);

struct SubsetChoice {
  std::size_t n;
  std::vector<std::size_t> subset;  // ascending

  friend bool operator==(const SubsetChoice&, const SubsetChoice&) = default;
};
SubsetChoice subset_prime_construction_inverse(const Composition& prime);

}  // namespace fibcomp
