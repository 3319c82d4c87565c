#pragma once

// Integer compositions, part predicates, part-weight functions and the
// composition-weighted sums sum_{a in C(n)} u_{a_1} ... u_{a_k}.

#include "fibcomp/series.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fibcomp {

using Part = std::uint32_t;

/// A finite sequence of positive parts. Doubles as a word over the part
/// alphabet in the monoid code.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<Part> parts);
  Composition(std::initializer_list<Part> parts);
  explicit Composition(std::span<const Part> parts);

  std::span<const Part> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  std::uint64_t weight() const noexcept { return weight_; }
  Part operator[](std::size_t i) const { return parts_.at(i); }

  Composition subword(std::size_t pos, std::size_t len) const;
  Composition concat(const Composition& other) const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

  /// "(1,2,1)"; the empty composition is "()".
  static Composition parse(std::string_view text);
  std::string to_string() const;

 private:
  std::vector<Part> parts_;
  std::uint64_t weight_ = 0;
};

using Word = Composition;

std::string to_string(std::span<const Part> parts);

/// Conjunction of simple constraints on a single part value. Text form:
/// atoms "any", "{1,2}", "1+2i" (p + q i, i >= 0), ">=3", joined by "&".
class PartPredicate {
 public:
  struct InSet { std::vector<Part> values; };
  struct Residue { Part base; Part step; };
  struct AtLeast { Part bound; };
  using Atom = std::variant<InSet, Residue, AtLeast>;

  PartPredicate() = default;  // accepts every part

  static PartPredicate any() { return {}; }
  static PartPredicate in_set(std::vector<Part> values);
  static PartPredicate residue(Part base, Part step);
  static PartPredicate at_least(Part bound);
  static PartPredicate odd() { return residue(1, 2); }

  PartPredicate operator&(const PartPredicate& other) const;
  bool operator()(Part a) const;

  static PartPredicate parse(std::string_view text);
  std::string to_string() const;

 private:
  std::vector<Atom> atoms_;
};

/// Pull-style stream over the compositions of n with allowed parts, in
/// lexicographic order of the part sequences. n = 0 yields the empty
/// composition once.
class CompositionStream {
 public:
  CompositionStream(std::uint64_t n, PartPredicate allowed);

  /// Advances to the next composition; false when exhausted.
  bool next();
  std::span<const Part> parts() const noexcept { return parts_; }
  Composition current() const { return Composition(std::span<const Part>(parts_)); }

 private:
  bool fill_from(std::uint64_t remaining);
  std::optional<Part> next_allowed(Part after, std::uint64_t remaining) const;

  std::uint64_t n_;
  PartPredicate allowed_;
  std::vector<bool> reachable_;  // reachable_[r]: r is a sum of allowed parts
  std::vector<Part> allowed_parts_;
  std::vector<Part> parts_;
  std::uint64_t sum_ = 0;
  bool started_ = false;
  bool done_ = false;
};

CompositionStream enumerate_compositions(std::uint64_t n, PartPredicate allowed = {});
std::vector<Composition> collect_compositions(std::uint64_t n, PartPredicate allowed = {});

/// A named rule a -> u_a on part sizes a >= 1.
class PartWeightFunction {
 public:
  using Rule = std::function<Integer(Part)>;

  PartWeightFunction(std::string name, std::vector<std::int64_t> params, Rule rule);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::int64_t>& params() const noexcept { return params_; }
  Integer operator()(Part a) const { return rule_(a); }

  /// u_a = coefficient a of the given sequence (zero beyond its end); used
  /// for weightings given by a prime-count series rather than a formula.
  static PartWeightFunction tabulated(std::string name, std::vector<Integer> values);

  /// "floor(2)", "indicator(1,2)", "a".
  std::string to_string() const;

 private:
  std::string name_;
  std::vector<std::int64_t> params_;
  Rule rule_;
};

/// Registered names:
///   a                u_a = a
///   a_minus_one      u_a = a - 1
///   one              u_a = 1
///   pow2_minus_one   u_a = 2^(a-1) - 1
///   pow2_shifted     u_1 = 1, u_a = 2^(a-2) for a >= 2
///   two_if_one       u_a = 2 if a = 1, else 1
///   three_four       u_a = 3 if a = 1, else 4
///   fib_minus_one    u_a = F_a - 1
///   floor(m)         u_a = floor((a-1)/m)
///   indicator(s...)  u_a = [a in {s...}]
///   residue(p,q)     u_a = [a = p + q i for some i >= 0]
PartWeightFunction make_weight(std::string_view name, std::span<const std::int64_t> params = {});
PartWeightFunction make_weight(std::string_view name, std::initializer_list<std::int64_t> params);
PartWeightFunction parse_weight(std::string_view text);
const std::vector<std::string>& registered_weights();

/// s_n with s_0 = 1 and s_n = sum_{i=1..n} u_i s_{n-i}.
Integer weighted_sum(std::uint64_t n, const PartWeightFunction& u);
/// s_0..s_max_n.
std::vector<Integer> weighted_sums(std::uint64_t max_n, const PartWeightFunction& u);

}  // namespace fibcomp
