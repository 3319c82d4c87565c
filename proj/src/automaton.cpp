#include "fibcomp/automaton.hpp"

#include "fibcomp/error.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <queue>
#include <utility>

namespace fibcomp {

namespace {

// Knuth-Morris-Pratt automaton over letter indices: states 0..len, state len
// meaning "the text read so far ends with the pattern".
std::vector<std::uint32_t> kmp_automaton(const std::vector<std::size_t>& pattern, std::size_t letters) {
  const std::size_t len = pattern.size();
  std::vector<std::uint32_t> dfa((len + 1) * letters, 0);
  if (len == 0) return dfa;
  dfa[pattern[0]] = 1;
  std::size_t restart = 0;
  for (std::size_t j = 1; j <= len; ++j) {
    for (std::size_t c = 0; c < letters; ++c) dfa[j * letters + c] = dfa[restart * letters + c];
    if (j < len) {
      dfa[j * letters + pattern[j]] = static_cast<std::uint32_t>(j + 1);
      restart = dfa[restart * letters + pattern[j]];
    }
  }
  return dfa;
}

// Least weight to reach a target state, over reversed edges.
std::vector<std::uint64_t> distances_to(std::size_t state_count, std::span<const Part> letters,
                                        const std::vector<StateId>& delta,
                                        const std::vector<bool>& target) {
  const std::size_t k = letters.size();
  std::vector<std::vector<std::pair<StateId, Part>>> reverse(state_count);
  for (std::size_t s = 0; s < state_count; ++s) {
    for (std::size_t c = 0; c < k; ++c) reverse[delta[s * k + c]].emplace_back(static_cast<StateId>(s), letters[c]);
  }
  std::vector<std::uint64_t> dist(state_count, unreachable);
  using Item = std::pair<std::uint64_t, StateId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (std::size_t s = 0; s < state_count; ++s) {
    if (target[s]) {
      dist[s] = 0;
      queue.emplace(0, static_cast<StateId>(s));
    }
  }
  while (!queue.empty()) {
    const auto [d, s] = queue.top();
    queue.pop();
    if (d != dist[s]) continue;
    for (const auto& [from, a] : reverse[s]) {
      if (d + a < dist[from]) {
        dist[from] = d + a;
        queue.emplace(d + a, from);
      }
    }
  }
  return dist;
}

}  // namespace

// ------------------------------------------------------- MembershipAutomaton

MembershipAutomaton::MembershipAutomaton(const SubmonoidSpec& spec)
    : letters_(spec.alphabet()), modulus_(spec.modulus()) {
  const std::size_t k = letters_.size();
  auto indices = [&](const std::optional<Word>& w) {
    std::vector<std::size_t> out;
    if (w) {
      for (Part a : w->parts()) out.push_back(letter_index(a));
    }
    return out;
  };
  const auto prefix = indices(spec.prefix());
  const auto suffix = indices(spec.suffix());
  const auto forbidden = indices(spec.forbidden());
  const auto suffix_dfa = kmp_automaton(suffix, k);
  const auto forbidden_dfa = kmp_automaton(forbidden, k);

  // (nonempty, prefix progress, suffix match state, forbidden match state, weight mod m)
  using Key = std::array<std::uint32_t, 5>;
  std::map<Key, StateId> ids;
  std::vector<Key> keys;
  const Key start_key{0, 0, 0, 0, 0};
  const Key dead_key{1, 0xffffffffu, 0, 0, 0};
  for (const Key& key : {start_key, dead_key}) {
    ids.emplace(key, static_cast<StateId>(keys.size()));
    keys.push_back(key);
  }

  auto accepts = [&](const Key& key) {
    if (key == dead_key) return false;
    if (key[0] == 0) return true;
    return key[1] == prefix.size() && key[2] == suffix.size() && key[4] == 0;
  };

  for (std::size_t i = 0; i < keys.size(); ++i) {
    const Key key = keys[i];
    accepting_.push_back(accepts(key));
    for (std::size_t c = 0; c < k; ++c) {
      StateId target = dead;
      if (key != dead_key) {
        Key next = key;
        next[0] = 1;
        bool ok = true;
        if (key[1] < prefix.size()) {
          ok = prefix[key[1]] == c;
          next[1] = key[1] + 1;
        }
        if (!forbidden.empty()) {
          next[3] = forbidden_dfa[key[3] * k + c];
          if (next[3] == forbidden.size()) ok = false;
        }
        if (!suffix.empty()) next[2] = suffix_dfa[key[2] * k + c];
        next[4] = static_cast<std::uint32_t>((key[4] + letters_[c]) % modulus_);
        if (ok) {
          auto [it, inserted] = ids.emplace(next, static_cast<StateId>(keys.size()));
          if (inserted) keys.push_back(next);
          target = it->second;
        }
      }
      delta_.push_back(target);
    }
  }
}

std::size_t MembershipAutomaton::letter_index(Part a) const {
  const auto it = std::lower_bound(letters_.begin(), letters_.end(), a);
  if (it == letters_.end() || *it != a) {
    fail(ErrorCode::invalid_argument, "part " + std::to_string(a) + " is outside the alphabet");
  }
  return static_cast<std::size_t>(it - letters_.begin());
}

StateId MembershipAutomaton::run(std::span<const Part> word, StateId from) const {
  StateId s = from;
  for (Part a : word) {
    const auto it = std::lower_bound(letters_.begin(), letters_.end(), a);
    if (it == letters_.end() || *it != a) return dead;
    s = next(s, static_cast<std::size_t>(it - letters_.begin()));
  }
  return s;
}

// ----------------------------------------------------------- FactorAutomaton

FactorAutomaton::FactorAutomaton(const SubmonoidSpec& spec, std::size_t state_limit) : dfa_(spec) {
  const std::size_t k = dfa_.letters().size();
  // Key: main run state followed by the sorted states of the runs started at
  // admissible cut points.
  using Key = std::vector<StateId>;
  std::map<Key, StateId> ids;
  std::vector<Key> keys;
  const Key start_key{MembershipAutomaton::start};
  const Key dead_key{MembershipAutomaton::dead};
  for (const Key& key : {start_key, dead_key}) {
    ids.emplace(key, static_cast<StateId>(keys.size()));
    keys.push_back(key);
  }

  for (std::size_t i = 0; i < keys.size(); ++i) {
    const Key key = keys[i];
    const StateId main = key[0];
    const bool is_member = dfa_.member_nonempty(main);
    bool reducible = false;
    for (std::size_t j = 1; j < key.size(); ++j) reducible = reducible || dfa_.accepting(key[j]);
    member_.push_back(is_member);
    irreducible_.push_back(is_member && !reducible);

    for (std::size_t c = 0; c < k; ++c) {
      const StateId next_main = dfa_.next(main, c);
      if (next_main == MembershipAutomaton::dead) {
        delta_.push_back(dead);
        continue;
      }
      Key next{next_main};
      for (std::size_t j = 1; j < key.size(); ++j) {
        const StateId r = dfa_.next(key[j], c);
        if (r != MembershipAutomaton::dead) next.push_back(r);
      }
      if (is_member) {
        const StateId r = dfa_.next(MembershipAutomaton::start, c);
        if (r != MembershipAutomaton::dead) next.push_back(r);
      }
      std::sort(next.begin() + 1, next.end());
      next.erase(std::unique(next.begin() + 1, next.end()), next.end());
      auto [it, inserted] = ids.emplace(next, static_cast<StateId>(keys.size()));
      if (inserted) {
        if (keys.size() >= state_limit) {
          fail(ErrorCode::domain_error, "factor automaton for '" + spec.to_string() +
                                            "' exceeds " + std::to_string(state_limit) + " states");
        }
        keys.push_back(std::move(next));
      }
      delta_.push_back(it->second);
    }
  }
  to_member_ = distances_to(keys.size(), dfa_.letters(), delta_, member_);
  to_irreducible_ = distances_to(keys.size(), dfa_.letters(), delta_, irreducible_);
}

StateId FactorAutomaton::run(std::span<const Part> word, StateId from) const {
  StateId s = from;
  const auto letters = dfa_.letters();
  for (Part a : word) {
    const auto it = std::lower_bound(letters.begin(), letters.end(), a);
    if (it == letters.end() || *it != a) return dead;
    s = next(s, static_cast<std::size_t>(it - letters.begin()));
  }
  return s;
}

// ---------------------------------------------------------------- WordWalker

WordWalker::WordWalker(const FactorAutomaton& automaton, std::uint64_t max_total_weight, Target target)
    : automaton_(&automaton), max_weight_(max_total_weight), target_(target) {}

std::uint64_t WordWalker::distance(StateId s) const {
  return target_ == Target::members ? automaton_->distance_to_member(s)
                                    : automaton_->distance_to_irreducible(s);
}

bool WordWalker::next() {
  const auto letters = automaton_->letters();
  if (!started_) {
    started_ = true;
    frames_.push_back({FactorAutomaton::start, 0, 0});
    if (target_ == Target::members) return true;  // the empty word
  }
  while (!frames_.empty()) {
    Frame& top = frames_.back();
    if (top.next_letter == letters.size()) {
      frames_.pop_back();
      if (!word_.empty()) word_.pop_back();
      continue;
    }
    const std::size_t c = top.next_letter++;
    const std::uint64_t w = top.weight + letters[c];
    if (w > max_weight_) {
      top.next_letter = letters.size();  // letters ascend
      continue;
    }
    const StateId s = automaton_->next(top.state, c);
    const std::uint64_t d = distance(s);
    if (d == unreachable || d > max_weight_ - w) continue;
    frames_.push_back({s, w, 0});
    word_.push_back(letters[c]);
    const bool emit = target_ == Target::members ? automaton_->member(s) : automaton_->irreducible(s);
    if (emit) return true;
  }
  return false;
}

// ---------------------------------------------------------------- counting

WeightCounts count_by_weight(const FactorAutomaton& automaton, std::uint64_t max_total_weight) {
  const auto letters = automaton.letters();
  const std::size_t states = automaton.state_count();
  const std::size_t window = static_cast<std::size_t>(letters.back()) + 1;
  std::vector<std::vector<Integer>> ring(window, std::vector<Integer>(states));
  WeightCounts out;
  out.members.assign(max_total_weight + 1, 0);
  out.irreducibles.assign(max_total_weight + 1, 0);
  out.members[0] = 1;

  ring[0][FactorAutomaton::start] = 1;
  for (std::uint64_t w = 1; w <= max_total_weight; ++w) {
    std::vector<Integer> layer(states);
    for (std::size_t c = 0; c < letters.size() && letters[c] <= w; ++c) {
      const auto& prev = ring[(w - letters[c]) % window];
      for (std::size_t s = 0; s < states; ++s) {
        if (prev[s] == 0) continue;
        const StateId t = automaton.next(static_cast<StateId>(s), c);
        if (t != FactorAutomaton::dead) layer[t] += prev[s];
      }
    }
    for (std::size_t s = 0; s < states; ++s) {
      if (layer[s] == 0) continue;
      if (automaton.member(static_cast<StateId>(s))) out.members[w] += layer[s];
      if (automaton.irreducible(static_cast<StateId>(s))) out.irreducibles[w] += layer[s];
    }
    ring[w % window] = std::move(layer);
  }
  return out;
}

}  // namespace fibcomp
