#include "fibcomp/monoid.hpp"

#include "fibcomp/automaton.hpp"
#include "fibcomp/error.hpp"
#include "text.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace fibcomp {

// ------------------------------------------------------------- SubmonoidSpec

SubmonoidSpec::SubmonoidSpec() : alphabet_{1, 2} {}

SubmonoidSpec::SubmonoidSpec(std::vector<Part> alphabet) : alphabet_(std::move(alphabet)) {
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  if (alphabet_.empty() || alphabet_.front() == 0) {
    fail(ErrorCode::invalid_argument, "the alphabet must be a nonempty set of positive parts");
  }
}

void SubmonoidSpec::check_word(const Word& w, std::string_view field) const {
  if (w.empty()) fail(ErrorCode::invalid_argument, std::string(field) + " word must be nonempty");
  for (Part a : w.parts()) {
    if (!std::binary_search(alphabet_.begin(), alphabet_.end(), a)) {
      fail(ErrorCode::invalid_argument, std::string(field) + " word " + w.to_string() +
                                            " uses part " + std::to_string(a) + " outside the alphabet");
    }
  }
}

SubmonoidSpec SubmonoidSpec::with_prefix(Word w) const {
  check_word(w, "prefix");
  SubmonoidSpec s = *this;
  s.prefix_ = std::move(w);
  return s;
}

SubmonoidSpec SubmonoidSpec::with_suffix(Word w) const {
  check_word(w, "suffix");
  SubmonoidSpec s = *this;
  s.suffix_ = std::move(w);
  return s;
}

SubmonoidSpec SubmonoidSpec::with_modulus(std::uint32_t m) const {
  if (m == 0) fail(ErrorCode::invalid_argument, "modulus must be positive");
  SubmonoidSpec s = *this;
  s.modulus_ = m;
  return s;
}

SubmonoidSpec SubmonoidSpec::with_forbidden(Word w) const {
  check_word(w, "forbidden");
  SubmonoidSpec s = *this;
  s.forbidden_ = std::move(w);
  return s;
}

bool SubmonoidSpec::contains(std::span<const Part> w) const {
  if (w.empty()) return true;
  std::uint64_t total = 0;
  for (Part a : w) {
    if (!std::binary_search(alphabet_.begin(), alphabet_.end(), a)) return false;
    total += a;
  }
  if (total % modulus_ != 0) return false;
  if (prefix_) {
    const auto p = prefix_->parts();
    if (p.size() > w.size() || !std::equal(p.begin(), p.end(), w.begin())) return false;
  }
  if (suffix_) {
    const auto s = suffix_->parts();
    if (s.size() > w.size() || !std::equal(s.begin(), s.end(), w.end() - static_cast<std::ptrdiff_t>(s.size()))) {
      return false;
    }
  }
  if (forbidden_) {
    const auto f = forbidden_->parts();
    if (std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end()) return false;
  }
  return true;
}

std::uint64_t SubmonoidSpec::reduced_weight(const Word& w) const {
  if (w.weight() % modulus_ != 0) {
    fail(ErrorCode::invalid_argument,
         "weight of " + w.to_string() + " is not divisible by " + std::to_string(modulus_));
  }
  return w.weight() / modulus_;
}

SubmonoidSpec SubmonoidSpec::parse(std::string_view input) {
  std::map<std::string, std::string, std::less<>> fields;
  for (auto item : text::split(input, ';')) {
    item = text::trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorCode::parse_error, "expected key=value in spec, got '" + std::string(item) + "'");
    }
    std::string key(text::trim(item.substr(0, eq)));
    if (key != "parts" && key != "prefix" && key != "suffix" && key != "mod" && key != "forbid") {
      fail(ErrorCode::parse_error,
           "unknown spec field '" + key + "' (expected parts, prefix, suffix, mod, forbid)");
    }
    if (!fields.emplace(key, std::string(text::trim(item.substr(eq + 1)))).second) {
      fail(ErrorCode::parse_error, "spec field '" + key + "' given twice");
    }
  }
  SubmonoidSpec spec;
  if (auto it = fields.find("parts"); it != fields.end()) {
    std::vector<Part> alphabet;
    for (auto token : text::split(it->second, ',')) {
      const std::uint64_t v = text::parse_uint(token, "parts");
      if (v == 0 || v > 0xffffffffULL) fail(ErrorCode::parse_error, "parts must be positive");
      alphabet.push_back(static_cast<Part>(v));
    }
    spec = SubmonoidSpec(std::move(alphabet));
  }
  if (auto it = fields.find("prefix"); it != fields.end()) spec = spec.with_prefix(Word::parse(it->second));
  if (auto it = fields.find("suffix"); it != fields.end()) spec = spec.with_suffix(Word::parse(it->second));
  if (auto it = fields.find("mod"); it != fields.end()) {
    const std::uint64_t m = text::parse_uint(it->second, "mod");
    if (m == 0 || m > 0xffffffffULL) fail(ErrorCode::parse_error, "mod must be positive");
    spec = spec.with_modulus(static_cast<std::uint32_t>(m));
  }
  if (auto it = fields.find("forbid"); it != fields.end()) spec = spec.with_forbidden(Word::parse(it->second));
  return spec;
}

std::string SubmonoidSpec::to_string() const {
  std::string out = "parts=" + text::join(alphabet_, ",", [](Part a) { return std::to_string(a); });
  if (prefix_) out += "; prefix=" + prefix_->to_string();
  if (suffix_) out += "; suffix=" + suffix_->to_string();
  if (modulus_ != 1) out += "; mod=" + std::to_string(modulus_);
  if (forbidden_) out += "; forbid=" + forbidden_->to_string();
  return out;
}

SubmonoidSpec words_starting_with(const Word& w, std::vector<Part> alphabet) {
  return SubmonoidSpec(std::move(alphabet)).with_prefix(w);
}

std::uint64_t weight(const Word& w) { return w.weight(); }

// ------------------------------------------------------------------ overlaps

bool overlaps(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) fail(ErrorCode::invalid_argument, "overlap is defined for nonempty words");
  const auto a = u.parts();
  const auto b = v.parts();
  const std::size_t longest = std::min(a.size() - 1, b.size());
  for (std::size_t len = 1; len <= longest; ++len) {
    if (std::equal(a.end() - static_cast<std::ptrdiff_t>(len), a.end(), b.begin())) return true;
  }
  return false;
}

bool is_non_overlapping(const Word& w) { return !overlaps(w, w); }

// ------------------------------------------------------ definitional checks

namespace {

// member[i][j], irreducible[i][j] for the subword w[i, j).
struct SubwordTable {
  std::size_t n;
  std::vector<char> member;
  std::vector<char> irreducible;

  SubwordTable(const SubmonoidSpec& spec, std::span<const Part> w)
      : n(w.size()), member((n + 1) * (n + 1)), irreducible((n + 1) * (n + 1)) {
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) member[i * (n + 1) + j] = spec.contains(w.subspan(i, j - i));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        bool irr = is_member(i, j);
        for (std::size_t k = i + 1; irr && k < j; ++k) irr = !(is_member(i, k) && is_member(k, j));
        irreducible[i * (n + 1) + j] = irr;
      }
    }
  }

  bool is_member(std::size_t i, std::size_t j) const { return member[i * (n + 1) + j] != 0; }
  bool is_irreducible(std::size_t i, std::size_t j) const { return irreducible[i * (n + 1) + j] != 0; }
};

void require_member(const SubmonoidSpec& spec, const Word& w) {
  if (!spec.contains(w)) {
    fail(ErrorCode::not_member, w.to_string() + " is not a member of '" + spec.to_string() + "'");
  }
}

}  // namespace

bool is_irreducible(const SubmonoidSpec& spec, const Word& w) {
  if (w.empty() || !spec.contains(w)) return false;
  const auto p = w.parts();
  for (std::size_t k = 1; k < p.size(); ++k) {
    if (spec.contains(p.first(k)) && spec.contains(p.subspan(k))) return false;
  }
  return true;
}

Integer count_factorizations(const SubmonoidSpec& spec, const Word& w) {
  require_member(spec, w);
  const SubwordTable table(spec, w.parts());
  std::vector<Integer> ways(w.size() + 1);
  ways[0] = 1;
  for (std::size_t j = 1; j <= w.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (ways[i] != 0 && table.is_irreducible(i, j)) ways[j] += ways[i];
    }
  }
  return ways[w.size()];
}

std::vector<Word> factor_unique(const SubmonoidSpec& spec, const Word& w) {
  require_member(spec, w);
  const SubwordTable table(spec, w.parts());
  const std::size_t n = w.size();
  std::vector<Word> factors;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j <= n && !(table.is_irreducible(i, j) && table.is_member(j, n))) ++j;
    if (j > n) {
      fail(ErrorCode::not_free, "no irreducible prefix of " + w.subword(i, n - i).to_string() +
                                    " leaves a member remainder in '" + spec.to_string() + "'");
    }
    factors.push_back(w.subword(i, j - i));
    i = j;
  }
  return factors;
}

DoubleFactorization double_factorization_witness(const Word& w) {
  if (w.empty() || !overlaps(w, w)) {
    fail(ErrorCode::invalid_argument, w.to_string() + " does not overlap itself");
  }
  const auto p = w.parts();
  const std::size_t n = p.size();
  std::size_t period = 1;
  while (!std::equal(p.begin() + static_cast<std::ptrdiff_t>(period), p.end(), p.begin())) ++period;
  const Word v = w.subword(0, period);
  const Word u = w.subword(n - period, period);
  const Word t = w.concat(u);
  return {w.concat(t), {w, t}, {w.concat(v), w}};
}

// -------------------------------------------------------------- enumeration

TruncatedSeries PrimeTable::series() const { return TruncatedSeries(counts); }

MemberStream::MemberStream(const SubmonoidSpec& spec, std::uint64_t max_weight)
    : automaton_(std::make_shared<const FactorAutomaton>(spec)),
      walker_(std::make_unique<WordWalker>(*automaton_, max_weight * spec.modulus(),
                                           WordWalker::Target::members)) {}

MemberStream::MemberStream(MemberStream&&) noexcept = default;
MemberStream& MemberStream::operator=(MemberStream&&) noexcept = default;
MemberStream::~MemberStream() = default;

std::optional<Word> MemberStream::next() {
  if (!walker_ || !walker_->next()) return std::nullopt;
  return Word(walker_->word());
}

MemberStream enumerate_members(const SubmonoidSpec& spec, std::uint64_t max_weight) {
  return MemberStream(spec, max_weight);
}

std::vector<Integer> enumerated_member_counts(const SubmonoidSpec& spec, std::uint64_t max_weight) {
  std::vector<Integer> counts(max_weight + 1);
  auto stream = enumerate_members(spec, max_weight);
  while (auto w = stream.next()) ++counts[spec.reduced_weight(*w)];
  return counts;
}

PrimeTable irreducibles(const SubmonoidSpec& spec, std::uint64_t max_weight, bool keep_words) {
  const FactorAutomaton automaton(spec);
  WordWalker walker(automaton, max_weight * spec.modulus(), WordWalker::Target::irreducibles);
  PrimeTable table;
  table.max_weight = max_weight;
  table.counts.assign(max_weight + 1, 0);
  if (keep_words) table.words.resize(max_weight + 1);
  while (walker.next()) {
    const std::uint64_t n = walker.total_weight() / spec.modulus();
    ++table.counts[n];
    if (keep_words) table.words[n].emplace_back(walker.word());
  }
  return table;
}

namespace {

std::vector<Integer> reduce(const std::vector<Integer>& by_total, std::uint32_t m, std::uint64_t max_weight) {
  std::vector<Integer> out(max_weight + 1);
  for (std::uint64_t n = 0; n <= max_weight; ++n) out[n] = by_total[n * m];
  return out;
}

}  // namespace

std::vector<Integer> member_counts(const SubmonoidSpec& spec, std::uint64_t max_weight) {
  const FactorAutomaton automaton(spec);
  return reduce(count_by_weight(automaton, max_weight * spec.modulus()).members, spec.modulus(), max_weight);
}

std::vector<Integer> prime_counts(const SubmonoidSpec& spec, std::uint64_t max_weight) {
  const FactorAutomaton automaton(spec);
  return reduce(count_by_weight(automaton, max_weight * spec.modulus()).irreducibles, spec.modulus(),
                max_weight);
}

}  // namespace fibcomp
