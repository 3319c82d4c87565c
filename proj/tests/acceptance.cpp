// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "fibcomp/bijections.hpp"
#include "fibcomp/error.hpp"
#include "fibcomp/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace fibcomp;

namespace {

using Clock = std::chrono::steady_clock;

// Collects the first few failures of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  void note(std::string text) { note_ = std::move(text); }
  const std::string& note() const { return note_; }
  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string s = std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::string note_;
};

std::string str(const Integer& v) { return v.str(); }
Integer F(std::size_t n) { return fibonacci(n); }

Word cat(const std::vector<Word>& factors) {
  Word w;
  for (const auto& f : factors) w = w.concat(f);
  return w;
}

// w has a nonempty proper prefix that is also a suffix.
bool self_overlapping(const Word& w) {
  const auto p = w.parts();
  for (std::size_t k = 1; k < p.size(); ++k) {
    if (std::equal(p.begin(), p.begin() + k, p.end() - k)) return true;
  }
  return false;
}

void identities_i_to_vi(Check& c) {
  for (const char* id : {"i", "ii", "iii", "iv", "v", "vi"}) {
    const auto record = lookup_identity(id);
    const auto report = verify_record(record, 60);
    const std::string tag = std::string(id) + ": ";
    c.expect(report.closed_form.status == MethodStatus::pass && report.closed_form.to == 60, tag + "method A");
    c.expect(report.weighted_sum.status == MethodStatus::pass && report.weighted_sum.to == 60, tag + "method C");
    c.expect(report.prime_inversion.status == MethodStatus::pass && report.prime_inversion.to == 18,
             tag + "method B to 18");
  }
  const std::tuple<const char*, std::size_t, std::size_t> spots[] = {{"iv", 3, 6}, {"v", 3, 4}, {"vi", 2, 5}};
  for (const auto& [id, n, k] : spots) {
    const auto record = lookup_identity(id);
    const Integer sum = weighted_sum(n, *record.weight);
    c.expect(sum == F(k) && record.target(n) == F(k), std::string(id) + " spot value " + str(sum));
  }
}

void prefix_monoids(Check& c) {
  std::size_t words = 0;
  for (const auto& parts : oracle::all_words({1, 2}, 20)) {
    if (parts.empty() || parts.size() > 10) continue;
    ++words;
    const Word w(parts);
    const auto spec = words_starting_with(w);
    const auto verdict = is_free_up_to(spec, 3 * w.weight());
    const bool overlapping = self_overlapping(w);
    c.expect(is_non_overlapping(w) == !overlapping, w.to_string() + " overlap test");
    c.expect(verdict.is_free() == !overlapping, w.to_string() + " freeness");
    if (!overlapping) continue;
    const auto witness = double_factorization_witness(w);
    bool ok = witness.first != witness.second && cat(witness.first) == witness.word &&
              cat(witness.second) == witness.word;
    for (const auto& f : witness.first) ok = ok && spec.contains(f) && !f.empty();
    for (const auto& f : witness.second) ok = ok && spec.contains(f) && !f.empty();
    ok = ok && count_factorizations(spec, witness.word) >= 2;
    c.expect(ok, w.to_string() + " witness");
  }
  c.expect(words == 2046, "word count " + std::to_string(words));
}

std::vector<SubmonoidSpec> lemma3_corpus() {
  std::set<std::string> seen;
  std::vector<SubmonoidSpec> out;
  auto add = [&](const SubmonoidSpec& s) {
    if (seen.insert(s.to_string()).second) out.push_back(s);
  };
  for (const auto& entry : identity_registry()) {
    for (const auto& params : entry.instances) {
      const auto record = lookup_identity(entry.id, params);
      if (record.spec) add(*record.spec);
    }
  }
  for (const char* text : {
           "parts=1,2; prefix=(1,1)",
           "parts=1,2; prefix=(2,2)",
           "parts=1,2; prefix=(1,2,1)",
           "parts=1,2; prefix=(2,1,2)",
           "parts=1,2; prefix=(1,1,1)",
           "parts=1,2; prefix=(1,2,1,2)",
           "parts=1,2; suffix=(1,1)",
           "parts=1,2; suffix=(2,1,2)",
           "parts=1,2; prefix=(1); suffix=(1)",
           "parts=1,2; prefix=(2); suffix=(2)",
           "parts=1,2; prefix=(1,1); mod=2",
           "parts=1,2; prefix=(2,2); mod=3",
           "parts=1; prefix=(1,1)",
           "parts=1; prefix=(1,1,1)",
           "parts=1,3; prefix=(3,3)",
           "parts=1,2,3; prefix=(1,2,1)",
       }) {
    add(SubmonoidSpec::parse(text));
  }
  return out;
}

void schutzenberger_agreement(Check& c) {
  const auto corpus = lemma3_corpus();
  c.expect(corpus.size() >= 25, "corpus size " + std::to_string(corpus.size()));
  std::size_t not_free = 0;
  for (const auto& spec : corpus) {
    const std::string tag = spec.to_string() + ": ";
    if (closure_violation(spec)) {
      c.expect(false, tag + "not closed");
      continue;
    }
    constexpr std::uint64_t bound = 20;
    const auto members = member_counts(spec, bound);
    const auto primes = prime_counts(spec, bound);
    const bool counts_agree = TruncatedSeries(members) == geometric_inverse(TruncatedSeries(primes));
    const auto ambiguous = ambiguity_search(spec, bound);
    const auto quad = schutzenberger_search(spec, bound);
    c.expect(counts_agree == !ambiguous.has_value(), tag + "counts against ambiguity search");
    c.expect(quad.has_value() == ambiguous.has_value(), tag + "criterion against factorization test");
    if (!quad || !ambiguous) continue;
    ++not_free;
    const auto total = quad->p.weight() + quad->q.weight() + quad->r.weight();
    c.expect(total == ambiguous->word.weight(), tag + "witness weights");
    c.expect(spec.contains(quad->p) && spec.contains(quad->r) && spec.contains(quad->p.concat(quad->q)) &&
                 spec.contains(quad->q.concat(quad->r)) && !spec.contains(quad->q),
             tag + "quadruple");
    c.expect(count_factorizations(spec, ambiguous->word) >= 2, tag + "ambiguous word");
  }
  c.expect(not_free >= 10, "non-free specs " + std::to_string(not_free));
  c.note(std::to_string(corpus.size()) + " specs, " + std::to_string(not_free) + " not free");
}

void prime_laws(Check& c) {
  for (std::uint32_t m = 2; m <= 6; ++m) {
    const auto multiples = SubmonoidSpec{}.with_modulus(m);
    const auto law = [&](std::size_t n, bool mirrored) -> Integer {
      if (n == 1) return mirrored ? F(m - 1) : F(m + 1);
      return F(m) * F(m) * pow(mirrored ? F(m + 1) : F(m - 1), unsigned(n - 2));
    };
    const std::string tag = "m=" + std::to_string(m) + ": ";
    for (bool mirrored : {false, true}) {
      const SubmonoidSpec spec = mirrored ? lookup_identity("mm2", {{"m", m}}).spec.value() : multiples;
      if (m <= 5) {
        const auto table = irreducibles(spec, 6, false);
        for (std::size_t n = 2; n <= 6; ++n) c.expect(table.counts[n] == law(n, mirrored), tag + "enumerated u_" + std::to_string(n));
        c.expect(table.counts[1] == law(1, mirrored), tag + "enumerated u_1");
      }
      std::vector<Integer> u(41);
      for (std::size_t n = 1; n <= 40; ++n) u[n] = law(n, mirrored);
      const auto inverse = geometric_inverse(TruncatedSeries(u));
      c.expect(inverse == TruncatedSeries(member_counts(spec, 40)), tag + "series against member counts");
      if (!mirrored) {
        bool ok = true;
        for (std::size_t n = 0; n <= 40; ++n) ok = ok && inverse[n] == F(m * n + 1);
        c.expect(ok, tag + "series against F(mn+1)");
      }
    }
  }
}

void multisection_forms(Check& c) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto fib = fibonacci_table(m * 41 + 1);
    for (std::size_t j = 0; j <= m; ++j) {
      const auto expanded = rational_to_series(fib_multisection_gf(m, j), 40);
      // (F_j + (-1)^j F_{m-j} x) / (1 - L_m x + (-1)^m x^2)
      const Integer sj = j % 2 ? -1 : 1;
      const Integer sm = m % 2 ? -1 : 1;
      const RationalGF closed(Polynomial(std::vector<Integer>{F(j), sj * F(m - j)}),
                              Polynomial(std::vector<Integer>{1, -lucas(m), sm}));
      bool ok = expanded == rational_to_series(closed, 40);
      for (std::size_t n = 0; n <= 40; ++n) ok = ok && expanded[n] == fib[m * n + j];
      c.expect(ok, "m=" + std::to_string(m) + " j=" + std::to_string(j));
    }
  }
}

void floor_identities(Check& c) {
  const auto floor2 = make_weight("floor", {2});
  for (std::size_t n = 2; n <= 60; ++n) c.expect(weighted_sum(n, floor2) == F(n - 2), "m=2 n=" + std::to_string(n));
  for (std::int64_t m = 1; m <= 5; ++m) {
    const auto u = make_weight("floor", {m});
    const auto r = oracle_sequence("r", {{"m", m}}, 60);
    const auto sums = weighted_sums(60, u);
    for (std::size_t n = m + 1; n <= 60; ++n) {
      c.expect(sums[n] == r[n - m - 1], "m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
    const auto report = verify_identity("floor_m", {{"m", m}}, 60);
    c.expect(report.passed(), "floor_m m=" + std::to_string(m) + " verification");
  }
  c.expect(verify_identity("floor", {}, 60).passed(), "floor verification");
  c.expect(weighted_sum(6, floor2) == 3, "spot value m=2 n=6");
}

void dyck_paths(Check& c) {
  for (std::uint64_t n = 1; n <= 12; ++n) c.expect(dyck_count(n, 3) == F(2 * n - 1), "n=" + std::to_string(n));
  c.expect(dyck_count(4, 3) == 13, "spot value n=4");
}

void trisection(Check& c) {
  const auto t = trisection_prime_counts(15);
  c.expect(t.a[1] == 2, "a_1 = " + str(t.a[1]));
  c.expect(t.a[2] == 4 && t.a[2] == t.a[1] + 2 * t.b[1], "a_2 = " + str(t.a[2]));
  const auto pell = oracle_sequence("pell", {}, 15);
  for (std::size_t n = 1; n <= 15; ++n) {
    if (n >= 3) c.expect(t.a[n] == 2 * t.a[n - 1] + t.a[n - 2], "recurrence n=" + std::to_string(n));
    c.expect(t.a[n] == 2 * pell[n - 1], "Pell n=" + std::to_string(n));
  }
  const auto u = make_weight("three_four");
  const auto sums = weighted_sums(40, u);
  for (std::size_t n = 0; n <= 40; ++n) c.expect(sums[n] == F(3 * n + 1), "F(3n+1) n=" + std::to_string(n));
  // Direct sum over compositions for small n.
  for (unsigned n = 1; n <= 16; ++n) {
    Integer total = 0;
    auto stream = enumerate_compositions(n);
    while (stream.next()) {
      Integer term = 1;
      for (Part a : stream.parts()) term *= a == 1 ? 3 : 4;
      total += term;
    }
    c.expect(total == F(3 * n + 1), "direct sum n=" + std::to_string(n));
  }
  c.expect(sums[2] == 13, "spot value n=2");
}

void bijection_round_trips(Check& c) {
  const auto fib_parts = PartPredicate::in_set({1, 2});
  for (unsigned n = 0; n <= 20; ++n) {
    std::set<Composition> images;
    for (const auto& x : collect_compositions(n, fib_parts)) {
      const auto y = odd_from_fib(x);
      images.insert(y);
      c.expect(odd_from_fib_inverse(y) == x, "odd_from_fib " + x.to_string());
    }
    const auto odd = collect_compositions(n + 1, PartPredicate::odd());
    c.expect(images == std::set<Composition>(odd.begin(), odd.end()), "odd_from_fib onto n=" + std::to_string(n));
    for (const auto& y : odd) c.expect(odd_from_fib(odd_from_fib_inverse(y)) == y, "odd_from_fib inverse " + y.to_string());
  }
  const std::pair<Part, Part> pairs[] = {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 3}};
  for (const auto& [p, q] : pairs) {
    for (unsigned n = 0; n <= 18; ++n) {
      std::set<Composition> images;
      for (const auto& x : collect_compositions(n, PartPredicate::in_set({p, q}))) {
        const auto y = two_part_bijection(p, q, x);
        images.insert(y);
        c.expect(two_part_bijection_inverse(p, q, y) == x, "two_part " + x.to_string());
      }
      const auto targets = collect_compositions(n + p, PartPredicate::residue(p, q));
      c.expect(images == std::set<Composition>(targets.begin(), targets.end()), "two_part onto");
      for (const auto& y : targets) c.expect(two_part_bijection(p, q, two_part_bijection_inverse(p, q, y)) == y, "two_part inverse");
    }
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    std::set<Composition> images;
    for (const auto& b : all_bars_dots(n)) {
      const auto x = bars_dots_decode(b);
      images.insert(x);
      c.expect(bars_dots_encode(x) == b, "bars_dots " + b.to_string());
    }
    const auto fib = collect_compositions(2 * n - 1, fib_parts);
    c.expect(images == std::set<Composition>(fib.begin(), fib.end()), "bars_dots onto n=" + std::to_string(n));
    for (const auto& x : fib) c.expect(bars_dots_decode(bars_dots_encode(x)) == x, "bars_dots inverse " + x.to_string());
  }
  const Composition example{2, 1, 1, 1, 2, 1, 1, 1, 2, 2, 1};
  const auto encoded = bars_dots_encode(example);
  c.expect(encoded.to_string() == ".o|o.|o|..o", "example encodes to " + encoded.to_string());
  c.expect(bars_dots_decode(encoded) == example && example.weight() == 15, "example decodes");
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (mask & (1u << i)) subset.push_back(i + 1);
      }
      const auto prime = subset_prime_construction(n, subset);
      c.expect(subset_prime_construction_inverse(prime) == SubsetChoice{n, subset}, "subset_prime " + prime.to_string());
    }
  }
}

void full_verification(Check& c) {
  const std::string command = std::string("\"") + FIBCOMP_CLI + "\" verify-all --order 40 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    c.expect(false, "could not start the CLI");
    return;
  }
  std::string output;
  char buf[4096];
  while (const auto n = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
  const int raw = pclose(pipe);
  const int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  c.expect(status == 0, "exit status " + std::to_string(status));
  std::istringstream lines(output);
  std::string line;
  std::size_t records = 0;
  std::string summary;
  while (std::getline(lines, line)) {
    if (line.ends_with(" identities passed")) {
      summary = line;
      continue;
    }
    ++records;
    c.expect(line.ends_with("-> pass"), line);
  }
  const auto n = std::to_string(records);
  c.expect(records > 0 && summary == n + "/" + n + " identities passed", "summary '" + summary + "'");
  c.note(n + " records");
}

struct Criterion {
  const char* name;
  std::function<void(Check&)> run;
  double seconds_limit;  // 0 for none
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"identities (i)-(vi) by methods A, B and C", identities_i_to_vi, 30},
      {"prefix monoids free iff the prefix is non-overlapping", prefix_monoids, 120},
      {"Schutzenberger criterion agrees with the factorization test", schutzenberger_agreement, 0},
      {"prime-count laws for weight multiples", prime_laws, 0},
      {"Fibonacci multisection forms", multisection_forms, 0},
      {"floor identities", floor_identities, 0},
      {"Dyck paths of height at most 3", dyck_paths, 0},
      {"trisection prime counts", trisection, 0},
      {"bijection round trips", bijection_round_trips, 0},
      {"verify-all --order 40", full_verification, 300},
  };
  int failed = 0;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    Check check;
    const auto start = Clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (criterion.seconds_limit > 0) check.expect(seconds < criterion.seconds_limit, "time limit exceeded");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", seconds);
    const bool ok = check.ok();
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << index << " " << criterion.name << " (" << check.checks() << " checks, "
              << timing;
    if (!check.note().empty()) std::cout << ", " << check.note();
    std::cout << ")";
    if (!ok) std::cout << ": " << check.summary();
    std::cout << std::endl;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << index - failed << "/" << index << std::endl;
  return failed ? 1 : 0;
}
