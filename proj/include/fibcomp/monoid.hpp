#pragma once

// Submonoids of the free monoid of compositions: membership, overlaps,
// irreducibles, factorization and bounded freeness decisions.

#include "fibcomp/compositions.hpp"
#include "fibcomp/series.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fibcomp {

/// Declarative membership predicate. A nonempty word is a member when all of
/// its parts lie in the alphabet, it starts with `prefix`, ends with
/// `suffix`, has weight divisible by `modulus` and contains no contiguous
/// occurrence of `forbidden`. The empty word is always a member.
///
/// Canonical text form: "parts=1,2; prefix=(2,1); suffix=(2); mod=2;
/// forbid=(2,1,1)", fields in that order, absent ones omitted (mod=1 is
/// absent).
class SubmonoidSpec {
 public:
  SubmonoidSpec();  // {1,2}*
  explicit SubmonoidSpec(std::vector<Part> alphabet);

  SubmonoidSpec with_prefix(Word w) const;
  SubmonoidSpec with_suffix(Word w) const;
  SubmonoidSpec with_modulus(std::uint32_t m) const;
  SubmonoidSpec with_forbidden(Word w) const;

  const std::vector<Part>& alphabet() const noexcept { return alphabet_; }
  const std::optional<Word>& prefix() const noexcept { return prefix_; }
  const std::optional<Word>& suffix() const noexcept { return suffix_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  const std::optional<Word>& forbidden() const noexcept { return forbidden_; }

  bool contains(std::span<const Part> w) const;
  bool contains(const Word& w) const { return contains(w.parts()); }

  /// weight / modulus; the argument's weight must be divisible by modulus.
  std::uint64_t reduced_weight(const Word& w) const;

  static SubmonoidSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const SubmonoidSpec&, const SubmonoidSpec&) = default;

 private:
  void check_word(const Word& w, std::string_view field) const;

  std::vector<Part> alphabet_;
  std::optional<Word> prefix_;
  std::optional<Word> suffix_;
  std::uint32_t modulus_ = 1;
  std::optional<Word> forbidden_;
};

/// A_w: words over `alphabet` that start with w, plus the empty word.
SubmonoidSpec words_starting_with(const Word& w, std::vector<Part> alphabet = {1, 2});

std::uint64_t weight(const Word& w);

/// u overlaps v when ux = yv for words x, y with 0 < l(y) < l(u): some
/// nonempty proper suffix of u is a prefix of v. Both must be nonempty.
bool overlaps(const Word& u, const Word& v);
bool is_non_overlapping(const Word& w);

/// Irreducible: a nonempty member that is not a product of two nonempty
/// members. Checked directly from the definition.
bool is_irreducible(const SubmonoidSpec& spec, const Word& w);

/// Number of ordered factorizations of a member into irreducibles.
Integer count_factorizations(const SubmonoidSpec& spec, const Word& w);

/// Strips the shortest irreducible prefix whose remainder is a member, then
/// recurses. For free specs this is the unique factorization.
std::vector<Word> factor_unique(const SubmonoidSpec& spec, const Word& w);

struct DoubleFactorization {
  Word word;
  std::vector<Word> first;
  std::vector<Word> second;
};

/// For an overlapping w with t = wu = vw (v shortest), the word wt factors in
/// A_w both as w | wu and as wv | w.
DoubleFactorization double_factorization_witness(const Word& w);

/// Irreducible counts by weight (reduced weight for modulus > 1).
struct PrimeTable {
  std::uint64_t max_weight = 0;
  std::vector<Integer> counts;            // counts[n], n = 0..max_weight; counts[0] = 0
  std::vector<std::vector<Word>> words;   // words[n] when kept, else empty

  bool has_words() const noexcept { return !words.empty(); }
  /// sum_n counts[n] x^n through x^max_weight.
  TruncatedSeries series() const;
};

class FactorAutomaton;
class WordWalker;

/// Pull-style stream of members with (reduced) weight at most the bound.
class MemberStream {
 public:
  MemberStream(const SubmonoidSpec& spec, std::uint64_t max_weight);
  MemberStream(MemberStream&&) noexcept;
  MemberStream& operator=(MemberStream&&) noexcept;
  ~MemberStream();

  std::optional<Word> next();

 private:
  std::shared_ptr<const FactorAutomaton> automaton_;
  std::unique_ptr<WordWalker> walker_;
};

MemberStream enumerate_members(const SubmonoidSpec& spec, std::uint64_t max_weight);

/// Member counts by (reduced) weight, by enumeration.
std::vector<Integer> enumerated_member_counts(const SubmonoidSpec& spec, std::uint64_t max_weight);

/// Irreducibles by enumeration; words are kept on request.
PrimeTable irreducibles(const SubmonoidSpec& spec, std::uint64_t max_weight, bool keep_words = true);

/// Member and irreducible counts by (reduced) weight from a counting pass
/// over the spec's automaton, without listing words.
std::vector<Integer> member_counts(const SubmonoidSpec& spec, std::uint64_t max_weight);
std::vector<Integer> prime_counts(const SubmonoidSpec& spec, std::uint64_t max_weight);

struct FactorizationCounterexample {
  Word word;
  std::vector<Word> first;
  std::vector<Word> second;
};

/// p, pq, qr, r are members and q is not.
struct SchutzenbergerQuadruple {
  Word p;
  Word q;
  Word r;
};

struct FreenessVerdict {
  std::uint64_t free_up_to = 0;  // the (reduced) weight bound checked
  std::variant<std::monostate, FactorizationCounterexample, SchutzenbergerQuadruple> counterexample;

  bool is_free() const noexcept { return std::holds_alternative<std::monostate>(counterexample); }
};

/// Minimal-weight word of (reduced) weight <= bound with two distinct
/// factorizations into irreducibles.
std::optional<FactorizationCounterexample> ambiguity_search(const SubmonoidSpec& spec,
                                                            std::uint64_t max_weight);

/// Minimal-weight violation of p, pq, qr, r in M => q in M with
/// weight(pqr) <= bound.
std::optional<SchutzenbergerQuadruple> schutzenberger_search(const SubmonoidSpec& spec,
                                                             std::uint64_t max_weight);

/// Members u, v with uv not a member, of minimal total weight, if any.
std::optional<std::pair<Word, Word>> closure_violation(const SubmonoidSpec& spec);

/// Smallest (reduced) weight of a nonempty member, if any exists.
std::optional<std::uint64_t> shortest_member_weight(const SubmonoidSpec& spec);

/// Runs the factorization test (member counts against the inverse of the
/// irreducible counts, plus the minimal ambiguous word) and the bounded
/// Schutzenberger search, and requires them to agree. The factorization
/// counterexample is reported when one exists.
FreenessVerdict is_free_up_to(const SubmonoidSpec& spec, std::uint64_t max_weight);

}  // namespace fibcomp
