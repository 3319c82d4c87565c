#pragma once

// Text and structured (one JSON record per line) renderings of library
// results, and the string-level commands the C API exposes.

#include "fibcomp/bijections.hpp"
#include "fibcomp/monoid.hpp"
#include "fibcomp/series.hpp"
#include "fibcomp/verify.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace fibcomp::render {

enum class Format { text, structured };

std::string series(const RationalGF& form, const TruncatedSeries& s, Format f);
std::string report(const Report& r, Format f);
std::string prime_table(const SubmonoidSpec& spec, const PrimeTable& t, Format f);
std::string members(const SubmonoidSpec& spec, std::uint64_t max_weight, Format f);
std::string factorization(const SubmonoidSpec& spec, const Word& w, Format f);
std::string verdict(const SubmonoidSpec& spec, const FreenessVerdict& v, Format f);

struct VerifyAllResult {
  std::string output;
  bool all_passed;
};
VerifyAllResult verify_all(std::size_t order, Format f);

/// Names: odd_from_fib, two_part (p, q), bars_dots, subset_prime (n).
/// subset_prime input is "{1,3}" forward and a word backward.
std::string bijection(std::string_view name, std::string_view input, const Params& params, bool inverse, Format f);

std::string dyck(std::uint64_t n, std::uint64_t h, Format f);
std::string identity_ids(Format f);

/// Sequence names: the oracle registry plus trisection, trisection_b,
/// dyck (h) and weighted (uses `weight`). Indices first..last inclusive;
/// `first` defaults to the sequence's natural offset.
std::string bfile(std::string_view name, const Params& params, std::string_view weight,
                  std::optional<std::int64_t> first, std::int64_t last);

}  // namespace fibcomp::render
