#pragma once

// Finite automata compiled from a SubmonoidSpec. The membership automaton is
// a DFA over the spec's alphabet; the factor automaton runs it in parallel
// with one copy per admissible cut point, which decides irreducibility of
// the word read so far.

#include "fibcomp/monoid.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace fibcomp {

using StateId = std::uint32_t;
inline constexpr std::uint64_t unreachable = std::numeric_limits<std::uint64_t>::max();

class MembershipAutomaton {
 public:
  explicit MembershipAutomaton(const SubmonoidSpec& spec);

  static constexpr StateId start = 0;
  static constexpr StateId dead = 1;

  std::size_t state_count() const noexcept { return accepting_.size(); }
  std::span<const Part> letters() const noexcept { return letters_; }
  std::uint32_t modulus() const noexcept { return modulus_; }

  StateId next(StateId s, std::size_t letter) const { return delta_[s * letters_.size() + letter]; }
  /// Accepting includes the empty word at `start`.
  bool accepting(StateId s) const { return accepting_[s]; }
  bool nonempty(StateId s) const { return s != start; }
  bool member_nonempty(StateId s) const { return s != start && accepting_[s]; }

  /// Letter index of a part value; throws if outside the alphabet.
  std::size_t letter_index(Part a) const;
  StateId run(std::span<const Part> word, StateId from = start) const;

 private:
  std::vector<Part> letters_;
  std::uint32_t modulus_;
  std::vector<StateId> delta_;
  std::vector<bool> accepting_;
};

class FactorAutomaton {
 public:
  explicit FactorAutomaton(const SubmonoidSpec& spec, std::size_t state_limit = 1u << 20);

  static constexpr StateId start = 0;
  static constexpr StateId dead = 1;

  const MembershipAutomaton& membership() const noexcept { return dfa_; }
  std::span<const Part> letters() const noexcept { return dfa_.letters(); }
  std::size_t state_count() const noexcept { return member_.size(); }

  StateId next(StateId s, std::size_t letter) const {
    return delta_[s * dfa_.letters().size() + letter];
  }
  /// Nonempty member.
  bool member(StateId s) const { return member_[s]; }
  bool irreducible(StateId s) const { return irreducible_[s]; }

  /// Least total weight still to be read before reaching a member
  /// (resp. irreducible) state; `unreachable` if impossible.
  std::uint64_t distance_to_member(StateId s) const { return to_member_[s]; }
  std::uint64_t distance_to_irreducible(StateId s) const { return to_irreducible_[s]; }

  StateId run(std::span<const Part> word, StateId from = start) const;

 private:
  MembershipAutomaton dfa_;
  std::vector<StateId> delta_;
  std::vector<bool> member_;
  std::vector<bool> irreducible_;
  std::vector<std::uint64_t> to_member_;
  std::vector<std::uint64_t> to_irreducible_;
};

/// Depth-first walk over words of total weight <= bound in lexicographic
/// order (prefixes first), emitting members or irreducibles only. Subtrees
/// that cannot reach a target within the remaining weight are skipped.
class WordWalker {
 public:
  enum class Target { members, irreducibles };

  WordWalker(const FactorAutomaton& automaton, std::uint64_t max_total_weight, Target target);

  bool next();
  std::span<const Part> word() const noexcept { return word_; }
  std::uint64_t total_weight() const noexcept { return frames_.empty() ? 0 : frames_.back().weight; }
  StateId state() const noexcept { return frames_.empty() ? FactorAutomaton::start : frames_.back().state; }
  bool irreducible() const { return automaton_->irreducible(state()); }

 private:
  struct Frame {
    StateId state;
    std::uint64_t weight;
    std::size_t next_letter;
  };

  std::uint64_t distance(StateId s) const;

  const FactorAutomaton* automaton_;
  std::uint64_t max_weight_;
  Target target_;
  std::vector<Frame> frames_;
  std::vector<Part> word_;
  bool started_ = false;
};

struct WeightCounts {
  std::vector<Integer> members;       // by total weight, index 0 counts the empty word
  std::vector<Integer> irreducibles;  // by total weight
};

/// Counts by dynamic programming over the factor automaton.
WeightCounts count_by_weight(const FactorAutomaton& automaton, std::uint64_t max_total_weight);

}  // namespace fibcomp
