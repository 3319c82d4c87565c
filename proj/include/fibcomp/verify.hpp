#pragma once

// Registry of composition identities and their three-way verification, plus
// the independent oracles used to cross-check them.

#include "fibcomp/compositions.hpp"
#include "fibcomp/monoid.hpp"
#include "fibcomp/series.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibcomp {

/// Named integer parameters in a fixed order, text form "k=2,m=3".
using Params = std::vector<std::pair<std::string, std::int64_t>>;
Params parse_params(std::string_view text);
std::string to_string(const Params& params);

struct IdentityRecord {
  std::string id;
  Params params;
  std::string statement;                    // e.g. "F(2n) = sum a_1...a_k"
  std::optional<SubmonoidSpec> spec;        // the monoid whose members are counted
  std::optional<PartWeightFunction> weight; // u_n, also the expected prime counts
  RationalGF closed_form;
  std::size_t valid_from = 1;
  std::string target_name;                  // e.g. "F(2n)"
  std::function<Integer(std::size_t)> target;
};

struct RegistryEntry {
  std::string id;
  std::vector<std::string> param_names;
  std::vector<Params> instances;  // the parameter sets covered by verify_all
};

const std::vector<RegistryEntry>& identity_registry();
IdentityRecord lookup_identity(std::string_view id, const Params& params = {});

enum class MethodStatus { pass, fail, not_applicable };
const char* to_string(MethodStatus s) noexcept;

struct Discrepancy {
  std::size_t index;
  Integer lhs;
  Integer rhs;
};

struct MethodResult {
  MethodStatus status = MethodStatus::not_applicable;
  std::size_t from = 0;  // coefficient range checked
  std::size_t to = 0;
  std::optional<Discrepancy> discrepancy;
};

/// A: closed form against the target values.
/// B: inverse of the enumerated prime counts against enumerated member
///    counts, members against the target, primes against u_n.
/// C: composition-weighted sum against the target values.
struct Report {
  std::string id;
  Params params;
  std::size_t order = 0;
  MethodResult closed_form;
  MethodResult prime_inversion;
  MethodResult weighted_sum;

  bool passed() const noexcept;
};

/// Largest (reduced) weight enumerated by method B, and the cap on the
/// total weight of the enumerated words.
inline constexpr std::size_t enumeration_weight_limit = 18;
inline constexpr std::size_t enumeration_total_limit = 36;
std::size_t enumeration_bound(const IdentityRecord& record, std::size_t order);

Report verify_record(const IdentityRecord& record, std::size_t order);
Report verify_identity(std::string_view id, const Params& params, std::size_t order);
std::vector<Report> verify_all(std::size_t order);

/// Dyck paths of length 2n with height at most h.
Integer dyck_count(std::uint64_t n, std::uint64_t h);

/// a_n: primes of reduced weight n among words of weight divisible by 3
/// starting with 1; b_n: those ending with 1. Index 0 holds 0.
struct TrisectionCounts {
  std::vector<Integer> a;
  std::vector<Integer> b;
};
TrisectionCounts trisection_prime_counts(std::uint64_t max_weight);

/// Recurrence or rational-form sequences: fib, lucas, pell, pell2, r (m),
/// geom43, and the prime-count families fibogenx_primes (k), sgen_primes (k),
/// f30_primes, m0_primes (m), mm1_primes (m), mm2_primes (m).
struct OracleInfo {
  std::string name;
  std::vector<std::string> param_names;
  std::size_t offset;  // index of the first term
  std::string label;   // external catalogue id when known, else empty
};
const std::vector<OracleInfo>& oracle_registry();
/// Terms for indices offset..offset+count-1.
std::vector<Integer> oracle_sequence(std::string_view name, const Params& params, std::size_t count);
OracleInfo oracle_info(std::string_view name, const Params& params = {});

/// "index value" lines starting at `offset`.
std::string export_bfile(std::span<const Integer> seq, std::int64_t offset);

}  // namespace fibcomp
