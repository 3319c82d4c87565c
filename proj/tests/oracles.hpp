#pragma once

// Brute-force reference implementations. They use nothing but the
// membership predicate and plain enumeration, so they are independent of the
// automata behind the library's searches and counts.

#include "fibcomp/monoid.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using fibcomp::Integer;
using fibcomp::Part;
using fibcomp::SubmonoidSpec;
using fibcomp::Word;

// Every word over the alphabet with total weight <= max_total, including ().
inline std::vector<std::vector<Part>> all_words(const std::vector<Part>& alphabet, std::uint64_t max_total) {
  std::vector<std::vector<Part>> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t w = 0;
    for (Part a : out[i]) w += a;
    for (Part a : alphabet) {
      if (w + a > max_total) continue;
      auto next = out[i];
      next.push_back(a);
      out.push_back(std::move(next));
    }
  }
  return out;
}

inline std::uint64_t total(const std::vector<Part>& w) {
  std::uint64_t s = 0;
  for (Part a : w) s += a;
  return s;
}

inline bool member(const SubmonoidSpec& spec, const std::vector<Part>& w) { return spec.contains(std::span(w)); }

inline bool irreducible(const SubmonoidSpec& spec, const std::vector<Part>& w) {
  if (w.empty() || !member(spec, w)) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::vector<Part> left(w.begin(), w.begin() + k), right(w.begin() + k, w.end());
    if (member(spec, left) && member(spec, right)) return false;
  }
  return true;
}

// Factorizations into irreducibles by recursion on the first factor.
inline Integer factorizations(const SubmonoidSpec& spec, const std::vector<Part>& w) {
  if (w.empty()) return 1;
  Integer ways = 0;
  for (std::size_t k = 1; k <= w.size(); ++k) {
    std::vector<Part> head(w.begin(), w.begin() + k), rest(w.begin() + k, w.end());
    if (irreducible(spec, head)) ways += factorizations(spec, rest);
  }
  return ways;
}

struct Counts {
  std::vector<Integer> members;
  std::vector<Integer> primes;
};

// By reduced weight 0..max_reduced.
inline Counts counts(const SubmonoidSpec& spec, std::uint64_t max_reduced) {
  const std::uint64_t m = spec.modulus();
  Counts c{std::vector<Integer>(max_reduced + 1), std::vector<Integer>(max_reduced + 1)};
  for (const auto& w : all_words(spec.alphabet(), max_reduced * m)) {
    if (!member(spec, w)) continue;
    const auto n = total(w) / m;
    c.members[n] += 1;
    if (irreducible(spec, w)) c.primes[n] += 1;
  }
  return c;
}

// Smallest total weight of a member with two or more factorizations.
inline std::optional<std::uint64_t> min_ambiguous_weight(const SubmonoidSpec& spec, std::uint64_t max_total) {
  std::optional<std::uint64_t> best;
  for (const auto& w : all_words(spec.alphabet(), max_total)) {
    if (!member(spec, w) || (best && total(w) >= *best)) continue;
    if (factorizations(spec, w) >= 2) best = total(w);
  }
  return best;
}

// Smallest total weight of pqr with p, r nonempty members, pq and qr
// members and q not a member.
inline std::optional<std::uint64_t> min_criterion_violation(const SubmonoidSpec& spec, std::uint64_t max_total) {
  const auto words = all_words(spec.alphabet(), max_total);
  std::vector<const std::vector<Part>*> members;
  for (const auto& w : words) {
    if (!w.empty() && member(spec, w)) members.push_back(&w);
  }
  auto cat = [](const std::vector<Part>& a, const std::vector<Part>& b) {
    auto r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
  };
  std::optional<std::uint64_t> best;
  for (const auto& q : words) {
    if (member(spec, q)) continue;
    for (const auto* p : members) {
      if (total(*p) + total(q) > max_total || !member(spec, cat(*p, q))) continue;
      for (const auto* r : members) {
        const auto t = total(*p) + total(q) + total(*r);
        if (t > max_total || (best && t >= *best)) continue;
        if (member(spec, cat(q, *r))) best = t;
      }
    }
  }
  return best;
}

}  // namespace oracle
