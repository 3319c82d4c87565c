#include "fibcomp/compositions.hpp"

#include "fibcomp/error.hpp"
#include "text.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <utility>

namespace fibcomp {

namespace {

Part parse_part(std::string_view token) {
  const std::uint64_t v = text::parse_uint(token, "a part");
  if (v == 0 || v > 0xffffffffULL) {
    fail(ErrorCode::parse_error, "parts must be positive, got '" + std::string(text::trim(token)) + "'");
  }
  return static_cast<Part>(v);
}

}  // namespace

// --------------------------------------------------------------- Composition

Composition::Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (Part a : parts_) {
    if (a == 0) fail(ErrorCode::invalid_argument, "composition parts must be positive");
    weight_ += a;
  }
}

Composition::Composition(std::initializer_list<Part> parts)
    : Composition(std::vector<Part>(parts)) {}

Composition::Composition(std::span<const Part> parts)
    : Composition(std::vector<Part>(parts.begin(), parts.end())) {}

Composition Composition::subword(std::size_t pos, std::size_t len) const {
  if (pos > parts_.size() || len > parts_.size() - pos) {
    fail(ErrorCode::invalid_argument, "subword out of range");
  }
  return Composition(std::span<const Part>(parts_).subspan(pos, len));
}

Composition Composition::concat(const Composition& other) const {
  std::vector<Part> p(parts_);
  p.insert(p.end(), other.parts_.begin(), other.parts_.end());
  return Composition(std::move(p));
}

Composition Composition::parse(std::string_view text) {
  text = text::trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    fail(ErrorCode::parse_error, "expected a composition like (1,2,1), got '" + std::string(text) + "'");
  }
  const auto inner = text::trim(text.substr(1, text.size() - 2));
  std::vector<Part> parts;
  if (!inner.empty()) {
    for (auto token : text::split(inner, ',')) parts.push_back(parse_part(token));
  }
  return Composition(std::move(parts));
}

std::string to_string(std::span<const Part> parts) {
  return "(" + text::join(parts, ",", [](Part a) { return std::to_string(a); }) + ")";
}

std::string Composition::to_string() const { return fibcomp::to_string(parts_); }

// ------------------------------------------------------------- PartPredicate

PartPredicate PartPredicate::in_set(std::vector<Part> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty() || values.front() == 0) {
    fail(ErrorCode::invalid_argument, "a part set must be a nonempty set of positive integers");
  }
  PartPredicate p;
  p.atoms_.push_back(InSet{std::move(values)});
  return p;
}

PartPredicate PartPredicate::residue(Part base, Part step) {
  if (base == 0 || step == 0) {
    fail(ErrorCode::invalid_argument, "residue class p+qi needs positive p and q");
  }
  PartPredicate p;
  p.atoms_.push_back(Residue{base, step});
  return p;
}

PartPredicate PartPredicate::at_least(Part bound) {
  PartPredicate p;
  p.atoms_.push_back(AtLeast{bound});
  return p;
}

PartPredicate PartPredicate::operator&(const PartPredicate& other) const {
  PartPredicate p = *this;
  p.atoms_.insert(p.atoms_.end(), other.atoms_.begin(), other.atoms_.end());
  return p;
}

bool PartPredicate::operator()(Part a) const {
  if (a == 0) return false;
  for (const auto& atom : atoms_) {
    const bool ok = std::visit(
        [a](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, InSet>) {
            return std::binary_search(x.values.begin(), x.values.end(), a);
          } else if constexpr (std::is_same_v<T, Residue>) {
            return a >= x.base && (a - x.base) % x.step == 0;
          } else {
            return a >= x.bound;
          }
        },
        atom);
    if (!ok) return false;
  }
  return true;
}

PartPredicate PartPredicate::parse(std::string_view text) {
  PartPredicate result;
  for (auto token : text::split(text, '&')) {
    token = text::trim(token);
    if (token == "any") continue;
    if (token.size() >= 2 && token.front() == '{' && token.back() == '}') {
      std::vector<Part> values;
      for (auto v : text::split(token.substr(1, token.size() - 2), ',')) values.push_back(parse_part(v));
      result = result & in_set(std::move(values));
    } else if (token.starts_with(">=")) {
      result = result & at_least(parse_part(token.substr(2)));
    } else if (token.size() > 1 && token.back() == 'i' && token.find('+') != std::string_view::npos) {
      const auto plus = token.find('+');
      result = result & residue(parse_part(token.substr(0, plus)),
                                parse_part(token.substr(plus + 1, token.size() - plus - 2)));
    } else {
      fail(ErrorCode::parse_error, "bad part predicate '" + std::string(token) +
                                       "' (expected any, {1,2}, p+qi or >=m)");
    }
  }
  return result;
}

std::string PartPredicate::to_string() const {
  if (atoms_.empty()) return "any";
  return text::join(atoms_, "&", [](const Atom& atom) {
    return std::visit(
        [](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, InSet>) {
            return "{" + text::join(x.values, ",", [](Part a) { return std::to_string(a); }) + "}";
          } else if constexpr (std::is_same_v<T, Residue>) {
            return std::to_string(x.base) + "+" + std::to_string(x.step) + "i";
          } else {
            return ">=" + std::to_string(x.bound);
          }
        },
        atom);
  });
}

// --------------------------------------------------------- CompositionStream

CompositionStream::CompositionStream(std::uint64_t n, PartPredicate allowed)
    : n_(n), allowed_(std::move(allowed)), reachable_(n + 1, false) {
  for (std::uint64_t a = 1; a <= n_; ++a) {
    if (allowed_(static_cast<Part>(a))) allowed_parts_.push_back(static_cast<Part>(a));
  }
  reachable_[0] = true;
  for (std::uint64_t r = 1; r <= n_; ++r) {
    for (Part a : allowed_parts_) {
      if (a > r) break;
      if (reachable_[r - a]) {
        reachable_[r] = true;
        break;
      }
    }
  }
}

std::optional<Part> CompositionStream::next_allowed(Part after, std::uint64_t remaining) const {
  auto it = std::upper_bound(allowed_parts_.begin(), allowed_parts_.end(), after);
  for (; it != allowed_parts_.end() && *it <= remaining; ++it) {
    if (reachable_[remaining - *it]) return *it;
  }
  return std::nullopt;
}

bool CompositionStream::fill_from(std::uint64_t remaining) {
  while (remaining > 0) {
    const auto a = next_allowed(0, remaining);
    if (!a) return false;
    parts_.push_back(*a);
    sum_ += *a;
    remaining -= *a;
  }
  return true;
}

bool CompositionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!reachable_[n_]) {
      done_ = true;
      return false;
    }
    fill_from(n_);
    return true;
  }
  while (!parts_.empty()) {
    const Part last = parts_.back();
    parts_.pop_back();
    sum_ -= last;
    const std::uint64_t remaining = n_ - sum_;
    if (const auto a = next_allowed(last, remaining)) {
      parts_.push_back(*a);
      sum_ += *a;
      fill_from(remaining - *a);
      return true;
    }
  }
  done_ = true;
  return false;
}

CompositionStream enumerate_compositions(std::uint64_t n, PartPredicate allowed) {
  return CompositionStream(n, std::move(allowed));
}

std::vector<Composition> collect_compositions(std::uint64_t n, PartPredicate allowed) {
  std::vector<Composition> out;
  auto stream = enumerate_compositions(n, std::move(allowed));
  while (stream.next()) out.push_back(stream.current());
  return out;
}

// -------------------------------------------------------- PartWeightFunction

PartWeightFunction::PartWeightFunction(std::string name, std::vector<std::int64_t> params, Rule rule)
    : name_(std::move(name)), params_(std::move(params)), rule_(std::move(rule)) {}

PartWeightFunction PartWeightFunction::tabulated(std::string name, std::vector<Integer> values) {
  auto table = std::make_shared<const std::vector<Integer>>(std::move(values));
  return PartWeightFunction(std::move(name), {}, [table](Part a) -> Integer {
    return a < table->size() ? (*table)[a] : Integer(0);
  });
}

std::string PartWeightFunction::to_string() const {
  if (params_.empty()) return name_;
  return name_ + "(" + text::join(params_, ",", [](std::int64_t v) { return std::to_string(v); }) + ")";
}

const std::vector<std::string>& registered_weights() {
  static const std::vector<std::string> names = {
      "a",          "a_minus_one",   "fib_minus_one", "floor",     "indicator", "one",
      "pow2_minus_one", "pow2_shifted", "residue",   "three_four", "two_if_one",
  };
  return names;
}

namespace {

void expect_params(std::string_view name, std::span<const std::int64_t> params, std::size_t count) {
  if (params.size() != count) {
    fail(ErrorCode::invalid_argument, "weighting '" + std::string(name) + "' takes " +
                                          std::to_string(count) + " parameter(s), got " +
                                          std::to_string(params.size()));
  }
}

Part positive_param(std::string_view name, std::int64_t v) {
  if (v <= 0) {
    fail(ErrorCode::invalid_argument,
         "weighting '" + std::string(name) + "' needs positive parameters, got " + std::to_string(v));
  }
  return static_cast<Part>(v);
}

Integer pow2(std::uint64_t e) { return Integer(1) << static_cast<unsigned>(e); }

}  // namespace

PartWeightFunction make_weight(std::string_view name, std::span<const std::int64_t> params) {
  std::vector<std::int64_t> p(params.begin(), params.end());
  const std::string n(name);
  if (name == "a") {
    expect_params(name, params, 0);
    return {n, p, [](Part a) { return Integer(a); }};
  }
  if (name == "a_minus_one") {
    expect_params(name, params, 0);
    return {n, p, [](Part a) { return Integer(a) - 1; }};
  }
  if (name == "one") {
    expect_params(name, params, 0);
    return {n, p, [](Part) { return Integer(1); }};
  }
  if (name == "pow2_minus_one") {
    expect_params(name, params, 0);
    return {n, p, [](Part a) { return pow2(a - 1) - 1; }};
  }
  if (name == "pow2_shifted") {
    expect_params(name, params, 0);
    return {n, p, [](Part a) { return a == 1 ? Integer(1) : pow2(a - 2); }};
  }
  if (name == "two_if_one") {
    expect_params(name, params, 0);
    return {n, p, [](Part a) { return Integer(a == 1 ? 2 : 1); }};
  }
  if (name == "three_four") {
    expect_params(name, params, 0);
    return {n, p, [](Part a) { return Integer(a == 1 ? 3 : 4); }};
  }
  if (name == "fib_minus_one") {
    expect_params(name, params, 0);
    return {n, p, [](Part a) { return fibonacci(a) - 1; }};
  }
  if (name == "floor") {
    expect_params(name, params, 1);
    const Part m = positive_param(name, params[0]);
    return {n, p, [m](Part a) { return Integer((a - 1) / m); }};
  }
  if (name == "indicator") {
    if (params.empty()) fail(ErrorCode::invalid_argument, "weighting 'indicator' needs at least one part");
    std::vector<Part> values;
    for (auto v : params) values.push_back(positive_param(name, v));
    auto allowed = PartPredicate::in_set(std::move(values));
    return {n, p, [allowed](Part a) { return Integer(allowed(a) ? 1 : 0); }};
  }
  if (name == "residue") {
    expect_params(name, params, 2);
    auto allowed = PartPredicate::residue(positive_param(name, params[0]), positive_param(name, params[1]));
    return {n, p, [allowed](Part a) { return Integer(allowed(a) ? 1 : 0); }};
  }
  fail(ErrorCode::unknown_name,
       "unknown weighting '" + n + "'; registered: " +
           text::join(registered_weights(), ", ", [](const std::string& s) { return s; }));
}

PartWeightFunction make_weight(std::string_view name, std::initializer_list<std::int64_t> params) {
  return make_weight(name, std::span<const std::int64_t>(params.begin(), params.size()));
}

PartWeightFunction parse_weight(std::string_view text) {
  text = text::trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos) return make_weight(text, std::span<const std::int64_t>{});
  if (text.back() != ')') fail(ErrorCode::parse_error, "bad weighting '" + std::string(text) + "'");
  std::vector<std::int64_t> params;
  const auto inner = text::trim(text.substr(open + 1, text.size() - open - 2));
  if (!inner.empty()) {
    for (auto token : text::split(inner, ',')) params.push_back(text::parse_int(token, "a weighting parameter"));
  }
  return make_weight(text::trim(text.substr(0, open)), params);
}

std::vector<Integer> weighted_sums(std::uint64_t max_n, const PartWeightFunction& u) {
  std::vector<Integer> values(max_n + 1);
  for (std::uint64_t i = 1; i <= max_n; ++i) values[i] = u(static_cast<Part>(i));
  std::vector<Integer> s(max_n + 1);
  s[0] = 1;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    Integer acc = 0;
    for (std::uint64_t i = 1; i <= n; ++i) {
      if (values[i] != 0) acc += values[i] * s[n - i];
    }
    s[n] = std::move(acc);
  }
  return s;
}

Integer weighted_sum(std::uint64_t n, const PartWeightFunction& u) { return weighted_sums(n, u)[n]; }

}  // namespace fibcomp
