#include <doctest.h>

#include "fibcomp/bijections.hpp"
#include "fibcomp/error.hpp"
#include "fibcomp/monoid.hpp"

#include <set>
#include <vector>

using namespace fibcomp;

namespace {

Integer product_of_parts(const Composition& c) {
  Integer p = 1;
  for (Part a : c.parts()) p *= a;
  return p;
}

}  // namespace

TEST_CASE("odd parts from Fibonacci compositions") {
  CHECK(odd_from_fib(Composition{2, 1}) == Composition{3, 1});
  CHECK(odd_from_fib(Composition{}) == Composition{1});
  CHECK(odd_from_fib_inverse(Composition{1}) == Composition{});
  CHECK_THROWS_AS(odd_from_fib(Composition{3}), Error);
  CHECK_THROWS_AS(odd_from_fib_inverse(Composition{2}), Error);

  std::set<Composition> weight3;
  for (const auto& c : collect_compositions(3, PartPredicate::in_set({1, 2}))) weight3.insert(odd_from_fib(c));
  CHECK(weight3 == std::set<Composition>{{1, 1, 1, 1}, {1, 3}, {3, 1}});

  for (unsigned n = 0; n <= 20; ++n) {
    std::set<Composition> images;
    for (const auto& c : collect_compositions(n, PartPredicate::in_set({1, 2}))) {
      const auto odd = odd_from_fib(c);
      CHECK(odd.weight() == n + 1);
      CHECK(odd_from_fib_inverse(odd) == c);
      images.insert(odd);
    }
    const auto odd_compositions = collect_compositions(n + 1, PartPredicate::odd());
    CHECK(images == std::set<Composition>(odd_compositions.begin(), odd_compositions.end()));
    CHECK(images.size() == fibonacci(n + 1));
    for (const auto& odd : odd_compositions) CHECK(odd_from_fib(odd_from_fib_inverse(odd)) == odd);
  }
}

TEST_CASE("two-part bijection") {
  CHECK(two_part_bijection(2, 3, Composition{2, 3}) == Composition{2, 5});
  std::set<Composition> images;
  for (const auto& c : collect_compositions(5, PartPredicate::in_set({2, 3}))) images.insert(two_part_bijection(2, 3, c));
  CHECK(images == std::set<Composition>{{2, 5}, {5, 2}});
  CHECK_THROWS_AS(two_part_bijection(2, 2, Composition{2}), Error);
  CHECK_THROWS_AS(two_part_bijection(2, 3, Composition{1}), Error);
  CHECK_THROWS_AS(two_part_bijection_inverse(2, 3, Composition{3}), Error);

  const std::pair<Part, Part> pairs[] = {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 3}};
  for (const auto& [p, q] : pairs) {
    CAPTURE(p);
    CAPTURE(q);
    for (unsigned n = 0; n <= 18; ++n) {
      std::set<Composition> seen;
      for (const auto& c : collect_compositions(n, PartPredicate::in_set({p, q}))) {
        const auto image = two_part_bijection(p, q, c);
        CHECK(image.weight() == n + p);
        CHECK(two_part_bijection_inverse(p, q, image) == c);
        if (p == 1 && q == 2) CHECK(image == odd_from_fib(c));
        seen.insert(image);
      }
      const auto targets = collect_compositions(n + p, PartPredicate::residue(p, q));
      CHECK(seen == std::set<Composition>(targets.begin(), targets.end()));
      for (const auto& t : targets) CHECK(two_part_bijection(p, q, two_part_bijection_inverse(p, q, t)) == t);
    }
  }
}

TEST_CASE("bars and dots") {
  const auto example = BarsDots::parse(".o|o.|o|..o");
  CHECK(example.dots() == 8);
  CHECK(example.to_string() == ".o|o.|o|..o");
  CHECK(bars_dots_decode(example) == Composition{2, 1, 1, 1, 2, 1, 1, 1, 2, 2, 1});
  CHECK(bars_dots_encode(Composition{2, 1, 1, 1, 2, 1, 1, 1, 2, 2, 1}) == example);
  CHECK(bars_dots_decode(BarsDots::parse("o")) == Composition{1});

  CHECK_THROWS_AS(BarsDots::parse(""), Error);
  CHECK_THROWS_AS(BarsDots::parse(".."), Error);
  CHECK_THROWS_AS(BarsDots::parse("o||o"), Error);
  CHECK_THROWS_AS(BarsDots::parse("|o"), Error);
  CHECK_THROWS_AS(BarsDots::parse("oo"), Error);
  CHECK_THROWS_AS(BarsDots::parse("o.x"), Error);
  CHECK_THROWS_AS(bars_dots_encode(Composition{1, 1}), Error);
  CHECK_THROWS_AS(bars_dots_encode(Composition{3}), Error);

  CHECK(all_bars_dots(2).size() == 3);

  for (std::size_t n = 1; n <= 10; ++n) {
    Integer expected = 0;
    for (const auto& c : collect_compositions(n)) expected += product_of_parts(c);
    const auto configurations = all_bars_dots(n);
    CHECK(configurations.size() == expected);
    CHECK(expected == fibonacci(2 * n));

    std::set<Composition> images;
    for (const auto& b : configurations) {
      CHECK(b.dots() == n);
      CHECK(BarsDots::parse(b.to_string()) == b);
      const auto c = bars_dots_decode(b);
      CHECK(c.weight() == 2 * n - 1);
      CHECK(bars_dots_encode(c) == b);
      images.insert(c);
    }
    const auto fib = collect_compositions(2 * n - 1, PartPredicate::in_set({1, 2}));
    CHECK(images == std::set<Composition>(fib.begin(), fib.end()));
  }
}

TEST_CASE("subset construction of primes") {
  CHECK(subset_prime_construction(2, {1}) == Composition{1, 2, 1});
  CHECK(subset_prime_construction(3, {1, 2}) == Composition{1, 2, 1, 1, 1});
  CHECK_THROWS_AS(subset_prime_construction(3, {}), Error);
  CHECK_THROWS_AS(subset_prime_construction(3, {3}), Error);
  CHECK_THROWS_AS(subset_prime_construction(3, {2, 2}), Error);
  CHECK_THROWS_AS(subset_prime_construction(1, {1}), Error);

  const auto spec = SubmonoidSpec::parse("parts=1,2; prefix=(1,2); mod=2");
  const auto table = irreducibles(spec, 10);
  for (std::size_t n = 2; n <= 10; ++n) {
    std::set<Composition> images;
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (mask & (1u << i)) subset.push_back(i + 1);
      }
      const auto prime = subset_prime_construction(n, subset);
      CHECK(prime.weight() == 2 * n);
      CHECK(subset_prime_construction_inverse(prime) == SubsetChoice{n, subset});
      images.insert(prime);
    }
    CHECK(images.size() == (std::size_t{1} << (n - 1)) - 1);
    CHECK(images == std::set<Composition>(table.words[n].begin(), table.words[n].end()));
  }
  CHECK(table.counts[4] == 7);
}
