#include "fibcomp/verify.hpp"

#include "fibcomp/automaton.hpp"
#include "fibcomp/error.hpp"
#include "forms.hpp"
#include "text.hpp"

#include <algorithm>

namespace fibcomp {

// -------------------------------------------------------------------- Params

Params parse_params(std::string_view input) {
  Params out;
  input = text::trim(input);
  if (input.empty()) return out;
  for (auto item : text::split(input, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorCode::parse_error, "expected name=value in parameters, got '" + std::string(text::trim(item)) + "'");
    }
    std::string name(text::trim(item.substr(0, eq)));
    if (name.empty()) fail(ErrorCode::parse_error, "empty parameter name");
    if (std::any_of(out.begin(), out.end(), [&](const auto& kv) { return kv.first == name; })) {
      fail(ErrorCode::parse_error, "parameter '" + name + "' given twice");
    }
    out.emplace_back(std::move(name), text::parse_int(item.substr(eq + 1), "parameter value"));
  }
  return out;
}

std::string to_string(const Params& params) {
  return text::join(params, ",", [](const auto& kv) { return kv.first + "=" + std::to_string(kv.second); });
}

// ------------------------------------------------------------- verification

const char* to_string(MethodStatus s) noexcept {
  switch (s) {
    case MethodStatus::pass: return "pass";
    case MethodStatus::fail: return "fail";
    case MethodStatus::not_applicable: return "n/a";
  }
  return "?";
}

bool Report::passed() const noexcept {
  return closed_form.status != MethodStatus::fail && prime_inversion.status != MethodStatus::fail &&
         weighted_sum.status != MethodStatus::fail;
}

std::size_t enumeration_bound(const IdentityRecord& record, std::size_t order) {
  const std::size_t m = record.spec ? record.spec->modulus() : 1;
  return std::min({order, enumeration_weight_limit, enumeration_total_limit / m});
}

namespace {

// Compares lhs[n] against rhs[n] for n in [from, to]; records the first
// mismatch. Returns false on mismatch.
bool compare(MethodResult& result, std::span<const Integer> lhs, std::span<const Integer> rhs, std::size_t from,
             std::size_t to) {
  for (std::size_t n = from; n <= to; ++n) {
    if (lhs[n] != rhs[n]) {
      result.status = MethodStatus::fail;
      result.discrepancy = Discrepancy{n, lhs[n], rhs[n]};
      return false;
    }
  }
  return true;
}

MethodResult run_method(std::size_t from, std::size_t to) {
  MethodResult r;
  r.status = MethodStatus::pass;
  r.from = from;
  r.to = to;
  return r;
}

}  // namespace

Report verify_record(const IdentityRecord& record, std::size_t order) {
  if (order < record.valid_from) {
    fail(ErrorCode::domain_error, "identity '" + record.id + "' holds for n >= " + std::to_string(record.valid_from) +
                                      "; order " + std::to_string(order) + " is below that threshold");
  }
  Report report;
  report.id = record.id;
  report.params = record.params;
  report.order = order;

  std::vector<Integer> target(order + 1);
  for (std::size_t n = record.valid_from; n <= order; ++n) target[n] = record.target(n);

  report.closed_form = run_method(record.valid_from, order);
  const auto expanded = rational_to_series(record.closed_form, order);
  compare(report.closed_form, expanded.coefficients(), target, record.valid_from, order);

  if (record.weight) {
    report.weighted_sum = run_method(record.valid_from, order);
    compare(report.weighted_sum, weighted_sums(order, *record.weight), target, record.valid_from, order);
  }

  if (record.spec) {
    const std::size_t bound = enumeration_bound(record, order);
    MethodResult& b = report.prime_inversion;
    b = run_method(0, bound);
    const PrimeTable primes = irreducibles(*record.spec, bound, false);
    const std::vector<Integer> members = enumerated_member_counts(*record.spec, bound);
    const TruncatedSeries products = geometric_inverse(primes.series());
    bool ok = compare(b, products.coefficients(), members, 0, bound);
    std::vector<Integer> target_b(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(bound) + 1);
    ok = ok && compare(b, members, target_b, std::min(record.valid_from, bound + 1), bound);
    if (ok && record.weight) {
      std::vector<Integer> u(bound + 1);
      for (std::size_t n = 1; n <= bound; ++n) u[n] = (*record.weight)(static_cast<Part>(n));
      compare(b, primes.counts, u, 1, bound);
    }
  }
  return report;
}

Report verify_identity(std::string_view id, const Params& params, std::size_t order) {
  return verify_record(lookup_identity(id, params), order);
}

std::vector<Report> verify_all(std::size_t order) {
  std::vector<Report> out;
  for (const auto& entry : identity_registry()) {
    for (const auto& params : entry.instances) out.push_back(verify_identity(entry.id, params, order));
  }
  return out;
}

// ------------------------------------------------------------------ oracles

Integer dyck_count(std::uint64_t n, std::uint64_t h) {
  // ways[j]: paths of the current length ending at height j.
  std::vector<Integer> ways(h + 2);
  ways[0] = 1;
  for (std::uint64_t step = 0; step < 2 * n; ++step) {
    std::vector<Integer> next(h + 2);
    for (std::uint64_t j = 0; j <= h; ++j) {
      if (ways[j] == 0) continue;
      if (j < h) next[j + 1] += ways[j];
      if (j > 0) next[j - 1] += ways[j];
    }
    ways = std::move(next);
  }
  return ways[0];
}

TrisectionCounts trisection_prime_counts(std::uint64_t max_weight) {
  const SubmonoidSpec spec = SubmonoidSpec().with_prefix(Word{1}).with_modulus(3);
  const FactorAutomaton automaton(spec);
  WordWalker walker(automaton, 3 * max_weight, WordWalker::Target::irreducibles);
  TrisectionCounts out{std::vector<Integer>(max_weight + 1), std::vector<Integer>(max_weight + 1)};
  while (walker.next()) {
    const std::uint64_t n = walker.total_weight() / 3;
    ++out.a[n];
    if (walker.word().back() == 1) ++out.b[n];
  }
  return out;
}

namespace {

std::vector<Integer> from_rational(const RationalGF& r, std::size_t first, std::size_t count) {
  const auto s = rational_to_series(r, first + count);
  return {s.coefficients().begin() + static_cast<std::ptrdiff_t>(first),
          s.coefficients().begin() + static_cast<std::ptrdiff_t>(first + count)};
}

std::int64_t positive(const Params& params, std::string_view oracle, std::string_view name, std::int64_t min) {
  for (const auto& [k, v] : params) {
    if (k == name) {
      if (v < min) {
        fail(ErrorCode::invalid_argument, "oracle '" + std::string(oracle) + "' needs " + std::string(name) +
                                              " >= " + std::to_string(min));
      }
      return v;
    }
  }
  fail(ErrorCode::invalid_argument, "oracle '" + std::string(oracle) + "' needs parameter " + std::string(name));
}

const OracleInfo& find_oracle(std::string_view name) {
  const auto& all = oracle_registry();
  const auto it = std::find_if(all.begin(), all.end(), [&](const OracleInfo& o) { return o.name == name; });
  if (it == all.end()) {
    fail(ErrorCode::unknown_name, "unknown sequence '" + std::string(name) + "'; registered: " +
                                      text::join(all, ", ", [](const OracleInfo& o) { return o.name; }));
  }
  return *it;
}

void check_params(const OracleInfo& info, const Params& params) {
  for (const auto& [k, v] : params) {
    if (std::find(info.param_names.begin(), info.param_names.end(), k) == info.param_names.end()) {
      fail(ErrorCode::invalid_argument, "sequence '" + info.name + "' has no parameter '" + k + "'");
    }
  }
}

}  // namespace

const std::vector<OracleInfo>& oracle_registry() {
  static const std::vector<OracleInfo> all = {
      {"fib", {}, 0, "A000045"},
      {"lucas", {}, 0, "A000032"},
      {"pell", {}, 1, "A000129"},
      {"pell2", {}, 1, ""},
      {"r", {"m"}, 0, ""},
      {"geom43", {}, 2, ""},
      {"fibogenx_primes", {"k"}, 1, ""},
      {"sgen_primes", {"k"}, 1, ""},
      {"f30_primes", {}, 1, ""},
      {"m0_primes", {"m"}, 1, ""},
      {"mm1_primes", {"m"}, 1, ""},
      {"mm2_primes", {"m"}, 1, ""},
  };
  return all;
}

OracleInfo oracle_info(std::string_view name, const Params& params) {
  OracleInfo info = find_oracle(name);
  check_params(info, params);
  if (info.name == "r") {
    static const char* labels[] = {"A000930", "A003269", "A003520", "A005708", "A005709", "A005710", "A005711"};
    const std::int64_t m = positive(params, "r", "m", 1);
    if (m >= 3 && m <= 9) info.label = labels[m - 3];
  }
  return info;
}

std::vector<Integer> oracle_sequence(std::string_view name, const Params& params, std::size_t count) {
  const OracleInfo info = oracle_info(name, params);
  const std::size_t first = info.offset;
  std::vector<Integer> out;
  out.reserve(count);
  if (name == "fib" || name == "lucas") {
    Integer a = name == "fib" ? 0 : 2;
    Integer b = 1;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(a);
      Integer c = a + b;
      a = std::move(b);
      b = std::move(c);
    }
  } else if (name == "pell" || name == "pell2") {
    Integer a = 0;  // P_0
    Integer b = 1;  // P_1
    const int scale = name == "pell" ? 1 : 2;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(scale * b);
      Integer c = 2 * b + a;
      a = std::move(b);
      b = std::move(c);
    }
  } else if (name == "r") {
    const auto m = static_cast<std::size_t>(positive(params, name, "m", 1));
    for (std::size_t i = 0; i < count; ++i) out.push_back(i < m ? Integer(1) : out[i - 1] + out[i - m]);
  } else if (name == "geom43") {
    Integer v = 4;
    for (std::size_t i = 0; i < count; ++i, v *= 3) out.push_back(v);
  } else {
    // Prime-count families, read off their rational generating functions.
    RationalGF form = RationalGF::constant(0);
    if (name == "fibogenx_primes") {
      form = forms::fibogenx_primes(static_cast<std::size_t>(positive(params, name, "k", 1)));
    } else if (name == "sgen_primes") {
      form = forms::sgen_primes(static_cast<std::size_t>(positive(params, name, "k", 1)));
    } else if (name == "f30_primes") {
      form = forms::f30_primes();
    } else if (name == "m0_primes") {
      form = forms::m0_primes(static_cast<std::size_t>(positive(params, name, "m", 1)));
    } else if (name == "mm2_primes") {
      form = forms::mm2_primes(static_cast<std::size_t>(positive(params, name, "m", 2)));
    } else if (name == "mm1_primes") {
      form = forms::mm1_primes(static_cast<std::size_t>(positive(params, name, "m", 1)));
    }
    out = from_rational(form, first, count);
  }
  return out;
}

std::string export_bfile(std::span<const Integer> seq, std::int64_t offset) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out += std::to_string(offset + static_cast<std::int64_t>(i));
    out += ' ';
    out += seq[i].str();
    out += '\n';
  }
  return out;
}

}  // namespace fibcomp
