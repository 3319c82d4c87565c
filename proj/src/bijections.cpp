#include "fibcomp/bijections.hpp"

#include "fibcomp/error.hpp"
#include "fibcomp/monoid.hpp"
#include "text.hpp"

#include <algorithm>

namespace fibcomp {

Composition two_part_bijection(Part p, Part q, const Composition& c) {
  if (p == 0 || q == 0 || p == q) fail(ErrorCode::invalid_argument, "need distinct positive parts p and q");
  std::vector<Part> out{p};
  for (Part a : c.parts()) {
    if (a == p) {
      out.push_back(p);
    } else if (a == q) {
      out.back() += q;
    } else {
      fail(ErrorCode::invalid_argument, c.to_string() + " has a part outside {" + std::to_string(p) + "," +
                                            std::to_string(q) + "}");
    }
  }
  return Composition(std::move(out));
}

Composition two_part_bijection_inverse(Part p, Part q, const Composition& image) {
  if (p == 0 || q == 0 || p == q) fail(ErrorCode::invalid_argument, "need distinct positive parts p and q");
  if (image.empty()) fail(ErrorCode::invalid_argument, "the image of the bijection is never empty");
  std::vector<Part> out;
  for (Part a : image.parts()) {
    if (a < p || (a - p) % q != 0) {
      fail(ErrorCode::invalid_argument, image.to_string() + " has part " + std::to_string(a) + " not of the form " +
                                            std::to_string(p) + "+" + std::to_string(q) + "i");
    }
    out.push_back(p);
    out.insert(out.end(), (a - p) / q, q);
  }
  out.erase(out.begin());
  return Composition(std::move(out));
}

Composition odd_from_fib(const Composition& c) { return two_part_bijection(1, 2, c); }

Composition odd_from_fib_inverse(const Composition& odd) { return two_part_bijection_inverse(1, 2, odd); }

// ------------------------------------------------------------------ BarsDots

std::size_t BarsDots::dots() const {
  std::size_t n = 0;
  for (std::size_t c : compartments) n += c;
  return n;
}

BarsDots BarsDots::parse(std::string_view input) {
  input = text::trim(input);
  BarsDots b;
  for (auto segment : text::split(input, '|')) {
    if (segment.empty()) fail(ErrorCode::parse_error, "empty compartment in '" + std::string(input) + "'");
    std::size_t circled = segment.size();
    for (std::size_t i = 0; i < segment.size(); ++i) {
      if (segment[i] == 'o') {
        if (circled != segment.size()) {
          fail(ErrorCode::parse_error, "compartment '" + std::string(segment) + "' has two circled dots");
        }
        circled = i;
      } else if (segment[i] != '.') {
        fail(ErrorCode::parse_error, "unexpected character '" + std::string(1, segment[i]) +
                                         "' (expected '.', 'o' or '|')");
      }
    }
    if (circled == segment.size()) {
      fail(ErrorCode::parse_error, "compartment '" + std::string(segment) + "' has no circled dot");
    }
    b.compartments.push_back(segment.size());
    b.circled.push_back(circled);
  }
  return b;
}

std::string BarsDots::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < compartments.size(); ++k) {
    if (k > 0) out += '|';
    for (std::size_t i = 0; i < compartments[k]; ++i) out += i == circled[k] ? 'o' : '.';
  }
  return out;
}

Composition bars_dots_decode(const BarsDots& b) {
  if (b.compartments.empty() || b.compartments.size() != b.circled.size()) {
    fail(ErrorCode::invalid_argument, "a configuration needs at least one compartment");
  }
  std::vector<Part> out;
  for (std::size_t k = 0; k < b.compartments.size(); ++k) {
    if (b.compartments[k] == 0 || b.circled[k] >= b.compartments[k]) {
      fail(ErrorCode::invalid_argument, "compartment " + std::to_string(k + 1) + " is malformed");
    }
    if (k > 0) out.push_back(1);
    for (std::size_t i = 0; i < b.compartments[k]; ++i) out.push_back(i == b.circled[k] ? 1 : 2);
  }
  return Composition(std::move(out));
}

BarsDots bars_dots_encode(const Composition& c) {
  const auto parts = c.parts();
  if (std::any_of(parts.begin(), parts.end(), [](Part a) { return a > 2; }) || c.weight() % 2 == 0) {
    fail(ErrorCode::invalid_argument, c.to_string() + " is not a composition of an odd number into parts 1 and 2");
  }
  // With a virtual leading bar the word splits into blocks (1, 2^i, 1, 2^j),
  // the primes of the even-weight words starting with 1.
  static const SubmonoidSpec blocks = SubmonoidSpec().with_prefix(Word{1}).with_modulus(2);
  BarsDots b;
  for (const Word& block : factor_unique(blocks, Word{1}.concat(c))) {
    const auto w = block.parts();
    const auto second_one = std::find(w.begin() + 1, w.end(), Part{1});
    if (second_one == w.end() || std::find(second_one + 1, w.end(), Part{1}) != w.end()) {
      fail(ErrorCode::internal, "unexpected block " + block.to_string());
    }
    b.compartments.push_back(w.size() - 1);
    b.circled.push_back(static_cast<std::size_t>(second_one - w.begin()) - 1);
  }
  return b;
}

std::vector<BarsDots> all_bars_dots(std::size_t n) {
  if (n == 0) fail(ErrorCode::invalid_argument, "a configuration has at least one dot");
  std::vector<BarsDots> out;
  auto stream = enumerate_compositions(n);
  while (stream.next()) {
    const auto sizes = stream.parts();
    BarsDots b;
    b.compartments.assign(sizes.begin(), sizes.end());
    b.circled.assign(sizes.size(), 0);
    while (true) {
      out.push_back(b);
      std::size_t k = b.circled.size();
      while (k > 0 && b.circled[k - 1] + 1 == b.compartments[k - 1]) b.circled[--k] = 0;
      if (k == 0) break;
      ++b.circled[k - 1];
    }
  }
  return out;
}

// ---------------------------------------------------------------- subsets

Composition subset_prime_construction(std::size_t n, const std::vector<std::size_t>& subset) {
  if (n < 2) fail(ErrorCode::invalid_argument, "n must be at least 2");
  if (subset.empty()) fail(ErrorCode::invalid_argument, "the subset must be nonempty");
  std::vector<bool> selected(n, false);
  for (std::size_t i : subset) {
    if (i < 1 || i > n - 1) {
      fail(ErrorCode::invalid_argument, "subset element " + std::to_string(i) + " is outside 1.." + std::to_string(n - 1));
    }
    if (selected[i]) fail(ErrorCode::invalid_argument, "subset element " + std::to_string(i) + " is repeated");
    selected[i] = true;
  }
  std::vector<Part> out{1, 2};
  bool first = true;
  for (std::size_t i = 1; i < n; ++i) {
    if (!selected[i]) {
      out.push_back(2);
    } else if (first) {
      out.push_back(1);
      first = false;
    } else {
      out.insert(out.end(), {1, 1});
    }
  }
  return Composition(std::move(out));
}

SubsetChoice subset_prime_construction_inverse(const Composition& prime) {
  const auto w = prime.parts();
  const auto reject = [&] {
    fail(ErrorCode::invalid_argument, prime.to_string() + " is not produced by the subset construction");
  };
  if (w.size() < 3 || w[0] != 1 || w[1] != 2) reject();
  SubsetChoice choice{1, {}};
  for (std::size_t i = 2; i < w.size(); ++i, ++choice.n) {
    if (w[i] == 2) continue;
    if (w[i] != 1) reject();
    if (!choice.subset.empty()) {
      if (i + 1 >= w.size() || w[i + 1] != 1) reject();
      ++i;
    }
    choice.subset.push_back(choice.n);
  }
  if (choice.subset.empty()) reject();
  return choice;
}

}  // namespace fibcomp
