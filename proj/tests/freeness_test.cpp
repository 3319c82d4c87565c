#include <doctest.h>

#include "fibcomp/error.hpp"
#include "fibcomp/monoid.hpp"
#include "oracles.hpp"

#include <string>
#include <vector>

using namespace fibcomp;

namespace {

const SubmonoidSpec fib_words;

std::vector<SubmonoidSpec> corpus() {
  std::vector<std::string> texts{
      "parts=1,2",
      "parts=1,2; prefix=(1)",
      "parts=1,2; prefix=(2)",
      "parts=1,2; prefix=(1,2)",
      "parts=1,2; prefix=(1,1)",
      "parts=1,2; prefix=(2,2)",
      "parts=1,2; prefix=(1,2,1)",
      "parts=1,2; prefix=(2,1,2)",
      "parts=1,2; prefix=(1,1,2)",
      "parts=1,2; suffix=(1,1)",
      "parts=1,2; suffix=(2,1)",
      "parts=1,2; prefix=(1); suffix=(2)",
      "parts=1,2; prefix=(1); suffix=(1)",
      "parts=1,2; prefix=(1,2); suffix=(2,1)",
      "parts=1,2; mod=2",
      "parts=1,2; mod=3",
      "parts=1,2; prefix=(1); mod=2",
      "parts=1,2; prefix=(1,1); mod=2",
      "parts=1,3; prefix=(1)",
      "parts=1,3; prefix=(3,3)",
      "parts=1; prefix=(1,1)",
      "parts=1; prefix=(1,1,1)",
      "parts=1,2,3; prefix=(1,2,1)",
  };
  std::vector<SubmonoidSpec> out;
  for (const auto& t : texts) out.push_back(SubmonoidSpec::parse(t));
  return out;
}

Word cat(const std::vector<Word>& factors) {
  Word w;
  for (const auto& f : factors) w = w.concat(f);
  return w;
}

}  // namespace

TEST_CASE("searches agree with brute force") {
  for (const auto& spec : corpus()) {
    CAPTURE(spec.to_string());
    const std::uint64_t bound = 16 / spec.modulus();
    const std::uint64_t total = bound * spec.modulus();

    const auto ambiguous = ambiguity_search(spec, bound);
    const auto expected_ambiguous = oracle::min_ambiguous_weight(spec, total);
    REQUIRE(ambiguous.has_value() == expected_ambiguous.has_value());
    if (ambiguous) {
      CHECK(ambiguous->word.weight() == *expected_ambiguous);
      CHECK(ambiguous->first != ambiguous->second);
      CHECK(cat(ambiguous->first) == ambiguous->word);
      CHECK(cat(ambiguous->second) == ambiguous->word);
      for (const auto& f : ambiguous->first) CHECK(is_irreducible(spec, f));
      for (const auto& f : ambiguous->second) CHECK(is_irreducible(spec, f));
    }

    const auto quad = schutzenberger_search(spec, bound);
    const auto expected_quad = oracle::min_criterion_violation(spec, total);
    REQUIRE(quad.has_value() == expected_quad.has_value());
    if (quad) {
      CHECK(quad->p.weight() + quad->q.weight() + quad->r.weight() == *expected_quad);
      CHECK(!quad->p.empty());
      CHECK(!quad->r.empty());
      CHECK(spec.contains(quad->p));
      CHECK(spec.contains(quad->r));
      CHECK(spec.contains(quad->p.concat(quad->q)));
      CHECK(spec.contains(quad->q.concat(quad->r)));
      CHECK(!spec.contains(quad->q));
    }

    if (bound < 2 * shortest_member_weight(spec).value()) {
      CHECK_THROWS_AS(is_free_up_to(spec, bound), Error);
      continue;
    }
    const auto verdict = is_free_up_to(spec, bound);
    CHECK(verdict.free_up_to == bound);
    CHECK(verdict.is_free() == !expected_ambiguous.has_value());
  }
}

TEST_CASE("freeness examples") {
  CHECK(is_free_up_to(words_starting_with(Word{1, 2}), 20).is_free());
  CHECK(is_free_up_to(fib_words, 10).is_free());

  const auto v = is_free_up_to(words_starting_with(Word{1, 1}), 12);
  REQUIRE(!v.is_free());
  const auto& c = std::get<FactorizationCounterexample>(v.counterexample);
  CHECK(c.word == Word{1, 1, 1, 1, 1});

  const auto quad = schutzenberger_search(SubmonoidSpec::parse("parts=1; prefix=(1,1)"), 10);
  REQUIRE(quad.has_value());
  CHECK(quad->p == Word{1, 1});
  CHECK(quad->q == Word{1});
  CHECK(quad->r == Word{1, 1});

  CHECK(!schutzenberger_search(fib_words.with_modulus(2), 12).has_value());
  const auto starts11 = schutzenberger_search(words_starting_with(Word{1, 1}), 8);
  REQUIRE(starts11.has_value());
  CHECK(starts11->p == Word{1, 1});
  CHECK(starts11->q == Word{1});
  CHECK(starts11->r == Word{1, 1});
  CHECK(!schutzenberger_search(fib_words, 10).has_value());

  // Below the first violation nothing is reported.
  CHECK(!schutzenberger_search(words_starting_with(Word{1, 1}), 4).has_value());
  CHECK(!ambiguity_search(words_starting_with(Word{1, 1}), 4).has_value());
}

TEST_CASE("freeness preconditions") {
  CHECK(shortest_member_weight(fib_words) == 1u);
  CHECK(shortest_member_weight(words_starting_with(Word{2, 1})) == 3u);
  CHECK(shortest_member_weight(fib_words.with_modulus(3)) == 1u);
  CHECK(!shortest_member_weight(SubmonoidSpec::parse("parts=2; mod=3; suffix=(2); forbid=(2)")).has_value());

  CHECK_THROWS_AS(is_free_up_to(words_starting_with(Word{2, 1}), 5), Error);

  const auto not_closed = SubmonoidSpec::parse("parts=1,2; forbid=(1,1)");
  const auto bad = closure_violation(not_closed);
  REQUIRE(bad.has_value());
  CHECK(bad->first == Word{1});
  CHECK(bad->second == Word{1});
  CHECK_THROWS_AS(is_free_up_to(not_closed, 10), Error);
  CHECK(!closure_violation(words_starting_with(Word{1, 2, 1})).has_value());
}

TEST_CASE("weight multiples stay free with non-overlapping prefixes") {
  const std::vector<Word> prefixes{{}, {1}, {2}, {1, 2}, {2, 1}, {1, 1, 2}, {1, 2, 2}};
  for (std::uint32_t m = 1; m <= 6; ++m) {
    for (const auto& p : prefixes) {
      auto spec = fib_words.with_modulus(m);
      if (!p.empty()) spec = spec.with_prefix(p);
      CAPTURE(spec.to_string());
      CHECK(is_free_up_to(spec, 18).is_free());
    }
  }
}

TEST_CASE("prefix monoids: free exactly when the prefix does not overlap itself") {
  for (const auto& w : oracle::all_words({1, 2}, 7)) {
    if (w.empty()) continue;
    const Word word(w);
    const auto verdict = is_free_up_to(words_starting_with(word), 3 * word.weight());
    CAPTURE(word.to_string());
    CHECK(verdict.is_free() == is_non_overlapping(word));
  }
}
