// Bounded freeness decisions. Every search is a shortest-path computation
// over a product of automaton runs, so each witness found has minimal total
// weight among all witnesses.

#include "fibcomp/automaton.hpp"
#include "fibcomp/error.hpp"
#include "fibcomp/monoid.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_map>

namespace fibcomp {

namespace {

class ShortestPaths {
 public:
  static constexpr std::uint64_t no_parent = unreachable;

  void seed(std::uint64_t key, std::uint64_t cost) {
    auto [it, inserted] = nodes_.try_emplace(key, Node{cost, no_parent, 0});
    if (!inserted) {
      if (it->second.dist <= cost) return;
      it->second = Node{cost, no_parent, 0};
    }
    queue_.emplace(cost, key);
  }

  /// Settles keys in order of distance up to `bound`. `expand(key, dist,
  /// relax)` reports edges as relax(next, weight, label); `visit(key, dist)`
  /// returns true to stop.
  template <class Expand, class Visit>
  void run(std::uint64_t bound, Expand&& expand, Visit&& visit) {
    while (!queue_.empty()) {
      const auto [d, key] = queue_.top();
      queue_.pop();
      if (d != nodes_.at(key).dist) continue;
      if (d > bound) return;
      if (visit(key, d)) return;
      expand(key, d, [&](std::uint64_t next, std::uint64_t w, std::uint32_t label) {
        const std::uint64_t nd = d + w;
        if (nd > bound) return;
        auto [it, inserted] = nodes_.try_emplace(next, Node{nd, key, label});
        if (!inserted) {
          if (it->second.dist <= nd) return;
          it->second = Node{nd, key, label};
        }
        queue_.emplace(nd, next);
      });
    }
  }

  std::uint64_t dist(std::uint64_t key) const {
    const auto it = nodes_.find(key);
    return it == nodes_.end() ? unreachable : it->second.dist;
  }

  /// Edge labels from `key` back to its seed, nearest first.
  std::vector<std::uint32_t> labels_back(std::uint64_t key, std::uint64_t* seed = nullptr) const {
    std::vector<std::uint32_t> out;
    for (auto it = nodes_.find(key); it->second.parent != no_parent; it = nodes_.find(it->second.parent)) {
      out.push_back(it->second.label);
      key = it->second.parent;
    }
    if (seed) *seed = key;
    return out;
  }

 private:
  struct Node {
    std::uint64_t dist;
    std::uint64_t parent;
    std::uint32_t label;
  };
  using Item = std::pair<std::uint64_t, std::uint64_t>;
  std::unordered_map<std::uint64_t, Node> nodes_;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue_;
};

Word word_of(std::vector<std::uint32_t> labels, bool reversed) {
  if (reversed) std::reverse(labels.begin(), labels.end());
  return Word(std::vector<Part>(labels.begin(), labels.end()));
}

// Shortest words from the start state to every state of the membership DFA.
ShortestPaths from_start(const MembershipAutomaton& dfa, std::uint64_t bound) {
  ShortestPaths paths;
  paths.seed(MembershipAutomaton::start, 0);
  const auto letters = dfa.letters();
  paths.run(
      bound,
      [&](std::uint64_t s, std::uint64_t, auto&& relax) {
        for (std::size_t c = 0; c < letters.size(); ++c) {
          const StateId t = dfa.next(static_cast<StateId>(s), c);
          if (t != MembershipAutomaton::dead) relax(t, letters[c], letters[c]);
        }
      },
      [](std::uint64_t, std::uint64_t) { return false; });
  return paths;
}

// Forward search over pairs (start.q, s.q) seeded at (start, s) for every
// nonempty member state s, at the cost of the shortest member reaching s.
// Returns the pair settled first that satisfies `goal` plus the path data.
struct PairSearch {
  const MembershipAutomaton& dfa;
  ShortestPaths paths;
  std::uint64_t n;

  std::uint64_t key(StateId x, StateId y) const { return x * n + y; }
  StateId first(std::uint64_t k) const { return static_cast<StateId>(k / n); }
  StateId second(std::uint64_t k) const { return static_cast<StateId>(k % n); }

  PairSearch(const MembershipAutomaton& automaton, const ShortestPaths& members, std::uint64_t bound)
      : dfa(automaton), n(automaton.state_count()) {
    for (StateId s = 0; s < n; ++s) {
      if (dfa.member_nonempty(s) && members.dist(s) <= bound) paths.seed(key(MembershipAutomaton::start, s), members.dist(s));
    }
  }

  template <class Visit>
  void run(std::uint64_t bound, bool allow_dead_second, Visit&& visit) {
    const auto letters = dfa.letters();
    paths.run(
        bound,
        [&](std::uint64_t k, std::uint64_t, auto&& relax) {
          const StateId x = first(k);
          const StateId y = second(k);
          for (std::size_t c = 0; c < letters.size(); ++c) {
            const StateId nx = dfa.next(x, c);
            const StateId ny = dfa.next(y, c);
            if (nx == MembershipAutomaton::dead) continue;
            if (ny == MembershipAutomaton::dead && !allow_dead_second) continue;
            relax(key(nx, ny), letters[c], letters[c]);
          }
        },
        visit);
  }

  // Splits a settled pair's path into the member leading to the seed and the
  // word read since.
  std::pair<Word, Word> split(std::uint64_t k, const ShortestPaths& members) const {
    std::uint64_t seed = 0;
    const Word tail = word_of(paths.labels_back(k, &seed), true);
    const Word head = word_of(members.labels_back(second(seed)), true);
    return {head, tail};
  }
};

}  // namespace

std::optional<std::uint64_t> shortest_member_weight(const SubmonoidSpec& spec) {
  const MembershipAutomaton dfa(spec);
  const auto paths = from_start(dfa, unreachable - 1);
  std::uint64_t best = unreachable;
  for (StateId s = 0; s < dfa.state_count(); ++s) {
    if (dfa.member_nonempty(s)) best = std::min(best, paths.dist(s));
  }
  if (best == unreachable) return std::nullopt;
  return best / spec.modulus();
}

std::optional<std::pair<Word, Word>> closure_violation(const SubmonoidSpec& spec) {
  const MembershipAutomaton dfa(spec);
  const std::uint64_t bound = unreachable - 1;
  const auto members = from_start(dfa, bound);
  PairSearch search(dfa, members, bound);
  std::optional<std::uint64_t> found;
  search.run(bound, true, [&](std::uint64_t k, std::uint64_t) {
    if (dfa.member_nonempty(search.first(k)) && !dfa.accepting(search.second(k))) found = k;
    return found.has_value();
  });
  if (!found) return std::nullopt;
  auto [u, v] = search.split(*found, members);
  return std::pair{u, v};
}

std::optional<SchutzenbergerQuadruple> schutzenberger_search(const SubmonoidSpec& spec,
                                                             std::uint64_t max_weight) {
  const MembershipAutomaton dfa(spec);
  const std::uint64_t bound = max_weight * spec.modulus();
  const std::uint64_t n = dfa.state_count();
  const auto letters = dfa.letters();
  const auto members = from_start(dfa, bound);

  // Reverse search: least weight of a nonempty r taking (start, t) to a pair
  // whose first run accepts a nonempty word and whose second accepts.
  std::vector<std::vector<std::vector<StateId>>> reverse(letters.size(), std::vector<std::vector<StateId>>(n));
  for (StateId s = 0; s < n; ++s) {
    for (std::size_t c = 0; c < letters.size(); ++c) {
      const StateId t = dfa.next(s, c);
      if (t != MembershipAutomaton::dead) reverse[c][t].push_back(s);
    }
  }
  ShortestPaths tails;
  for (StateId a = 0; a < n; ++a) {
    if (!dfa.member_nonempty(a)) continue;
    for (StateId b = 0; b < n; ++b) {
      if (dfa.accepting(b)) tails.seed(a * n + b, 0);
    }
  }
  tails.run(
      bound,
      [&](std::uint64_t k, std::uint64_t, auto&& relax) {
        const StateId a = static_cast<StateId>(k / n);
        const StateId b = static_cast<StateId>(k % n);
        for (std::size_t c = 0; c < letters.size(); ++c) {
          for (StateId pa : reverse[c][a]) {
            for (StateId pb : reverse[c][b]) relax(std::uint64_t{pa} * n + pb, letters[c], letters[c]);
          }
        }
      },
      [](std::uint64_t, std::uint64_t) { return false; });
  const auto shortest_tail = [&](StateId t) { return tails.dist(std::uint64_t{MembershipAutomaton::start} * n + t); };

  PairSearch search(dfa, members, bound);
  std::uint64_t best = unreachable;
  std::uint64_t best_key = 0;
  search.run(bound, false, [&](std::uint64_t k, std::uint64_t d) {
    if (d >= best) return true;
    const StateId t = search.first(k);
    if (t == MembershipAutomaton::start || dfa.accepting(t) || !dfa.accepting(search.second(k))) return false;
    const std::uint64_t r = shortest_tail(t);
    if (r != unreachable && d + r < best) {
      best = d + r;
      best_key = k;
    }
    return false;
  });
  if (best > bound) return std::nullopt;
  auto [p, q] = search.split(best_key, members);
  const Word r = word_of(tails.labels_back(std::uint64_t{MembershipAutomaton::start} * n + search.first(best_key)), false);
  return SchutzenbergerQuadruple{p, q, r};
}

std::optional<FactorizationCounterexample> ambiguity_search(const SubmonoidSpec& spec,
                                                            std::uint64_t max_weight) {
  const FactorAutomaton fa(spec);
  const std::uint64_t bound = max_weight * spec.modulus();
  const std::uint64_t n = fa.state_count();
  const auto letters = fa.letters();
  // Two factorizations read the same word; each run tracks its current factor
  // and may cut after an irreducible one. `diverged` records a cut made by
  // one run but not the other.
  const auto key = [n](StateId x, StateId y, bool diverged) { return (std::uint64_t{x} * n + y) * 2 + diverged; };
  const auto remaining = [&](StateId s) -> std::uint64_t {
    return s == FactorAutomaton::start ? 0 : fa.distance_to_irreducible(s);
  };
  const std::uint64_t goal = key(FactorAutomaton::start, FactorAutomaton::start, true);

  ShortestPaths paths;
  paths.seed(key(FactorAutomaton::start, FactorAutomaton::start, false), 0);
  bool found = false;
  paths.run(
      bound,
      [&](std::uint64_t k, std::uint64_t d, auto&& relax) {
        const bool diverged = k % 2;
        const StateId x = static_cast<StateId>(k / 2 / n);
        const StateId y = static_cast<StateId>(k / 2 % n);
        for (std::size_t c = 0; c < letters.size(); ++c) {
          const StateId nx = fa.next(x, c);
          const StateId ny = fa.next(y, c);
          for (int cut_x = 0; cut_x < 2; ++cut_x) {
            if (cut_x ? !fa.irreducible(nx) : fa.distance_to_irreducible(nx) == unreachable) continue;
            const StateId tx = cut_x ? FactorAutomaton::start : nx;
            for (int cut_y = 0; cut_y < 2; ++cut_y) {
              if (cut_y ? !fa.irreducible(ny) : fa.distance_to_irreducible(ny) == unreachable) continue;
              const StateId ty = cut_y ? FactorAutomaton::start : ny;
              const std::uint64_t rest = std::max(remaining(tx), remaining(ty));
              if (d + letters[c] + rest > bound) continue;
              const auto label = static_cast<std::uint32_t>(c * 4 + cut_x * 2 + cut_y);
              relax(key(tx, ty, diverged || cut_x != cut_y), letters[c], label);
            }
          }
        }
      },
      [&](std::uint64_t k, std::uint64_t) {
        found = k == goal;
        return found;
      });
  if (!found) return std::nullopt;

  auto labels = paths.labels_back(goal);
  std::reverse(labels.begin(), labels.end());
  std::vector<Part> word;
  std::vector<std::vector<Word>> factorizations(2);
  std::vector<std::size_t> factor_start(2, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    word.push_back(letters[labels[i] / 4]);
    for (int run = 0; run < 2; ++run) {
      if ((labels[i] >> (1 - run)) & 1) {
        factorizations[run].emplace_back(std::span<const Part>(word).subspan(factor_start[run]));
        factor_start[run] = word.size();
      }
    }
  }
  return FactorizationCounterexample{Word(std::move(word)), factorizations[0], factorizations[1]};
}

FreenessVerdict is_free_up_to(const SubmonoidSpec& spec, std::uint64_t max_weight) {
  FreenessVerdict verdict;
  verdict.free_up_to = max_weight;
  const auto shortest = shortest_member_weight(spec);
  if (!shortest) return verdict;
  if (max_weight < 2 * *shortest) {
    fail(ErrorCode::domain_error, "freeness bound " + std::to_string(max_weight) +
                                      " is below twice the shortest member weight " +
                                      std::to_string(*shortest));
  }
  if (auto bad = closure_violation(spec)) {
    fail(ErrorCode::domain_error, "'" + spec.to_string() + "' is not closed under concatenation: " +
                                      bad->first.to_string() + " and " + bad->second.to_string() +
                                      " are members but their product is not");
  }

  // Factorization test.
  const std::vector<Integer> members = member_counts(spec, max_weight);
  const std::vector<Integer> primes = prime_counts(spec, max_weight);
  const TruncatedSeries products = geometric_inverse(TruncatedSeries(primes));
  const bool counts_agree = std::equal(members.begin(), members.end(), products.coefficients().begin());
  const auto ambiguous = ambiguity_search(spec, max_weight);
  if (counts_agree == ambiguous.has_value()) {
    fail(ErrorCode::internal, "factorization counts and ambiguity search disagree for '" + spec.to_string() + "'");
  }

  // Criterion test.
  const auto quadruple = schutzenberger_search(spec, max_weight);
  if (quadruple.has_value() != ambiguous.has_value() ||
      (quadruple && quadruple->p.weight() + quadruple->q.weight() + quadruple->r.weight() != ambiguous->word.weight())) {
    fail(ErrorCode::internal, "factorization test and criterion search disagree for '" + spec.to_string() + "'");
  }

  if (ambiguous) verdict.counterexample = *ambiguous;
  return verdict;
}

}  // namespace fibcomp
