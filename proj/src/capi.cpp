#include "fibcomp/fibcomp.h"

#include "fibcomp/error.hpp"
#include "fibcomp/monoid.hpp"
#include "fibcomp/series.hpp"
#include "fibcomp/verify.hpp"
#include "render.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct fc_series {
  fibcomp::TruncatedSeries value;
};

struct fc_spec {
  fibcomp::SubmonoidSpec value;
};

struct fc_report {
  fibcomp::Report value;
};

namespace {

thread_local std::string last_error;

fc_status status_of(fibcomp::ErrorCode code) {
  switch (code) {
    case fibcomp::ErrorCode::invalid_argument: return FC_INVALID_ARGUMENT;
    case fibcomp::ErrorCode::parse_error: return FC_PARSE_ERROR;
    case fibcomp::ErrorCode::domain_error: return FC_DOMAIN_ERROR;
    case fibcomp::ErrorCode::unknown_name: return FC_UNKNOWN_NAME;
    case fibcomp::ErrorCode::not_member: return FC_NOT_MEMBER;
    case fibcomp::ErrorCode::not_free: return FC_NOT_FREE;
    case fibcomp::ErrorCode::internal: return FC_INTERNAL;
  }
  return FC_INTERNAL;
}

template <class Fn>
fc_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return FC_OK;
  } catch (const fibcomp::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FC_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FC_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fibcomp::fail(fibcomp::ErrorCode::invalid_argument, std::string(what) + " must not be null");
}

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fibcomp::render::Format format_of(fc_format f) {
  if (f != FC_FORMAT_TEXT && f != FC_FORMAT_STRUCTURED) {
    fibcomp::fail(fibcomp::ErrorCode::invalid_argument, "unknown output format");
  }
  return f == FC_FORMAT_TEXT ? fibcomp::render::Format::text : fibcomp::render::Format::structured;
}

fibcomp::Params params_of(const char* params) { return params ? fibcomp::parse_params(params) : fibcomp::Params{}; }

fibcomp::RationalGF rational_of(const char* numerator, const char* denominator) {
  require(numerator, "numerator");
  require(denominator, "denominator");
  return fibcomp::RationalGF(fibcomp::Polynomial::parse(numerator), fibcomp::Polynomial::parse(denominator));
}

}  // namespace

extern "C" {

const char* fc_version(void) { return "0.1.0"; }

const char* fc_status_name(fc_status status) {
  switch (status) {
    case FC_OK: return "ok";
    case FC_INVALID_ARGUMENT: return "invalid argument";
    case FC_PARSE_ERROR: return "parse error";
    case FC_DOMAIN_ERROR: return "domain error";
    case FC_UNKNOWN_NAME: return "unknown name";
    case FC_NOT_MEMBER: return "not a member";
    case FC_NOT_FREE: return "not free";
    case FC_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* fc_last_error(void) { return last_error.c_str(); }

void fc_string_free(char* s) { std::free(s); }

// -------------------------------------------------------------------- series

fc_status fc_series_parse(const char* coefficients, fc_series** out) {
  return guarded([&] {
    require(coefficients, "coefficients");
    require(out, "out");
    *out = new fc_series{fibcomp::TruncatedSeries::parse(coefficients)};
  });
}

fc_status fc_series_from_rational(const char* numerator, const char* denominator, size_t order, fc_series** out) {
  return guarded([&] {
    require(out, "out");
    *out = new fc_series{fibcomp::rational_to_series(rational_of(numerator, denominator), order)};
  });
}

fc_status fc_series_fib_multisection(size_t modulus, size_t residue, size_t order, fc_series** out) {
  return guarded([&] {
    require(out, "out");
    *out = new fc_series{fibcomp::rational_to_series(fibcomp::fib_multisection_gf(modulus, residue), order)};
  });
}

size_t fc_series_order(const fc_series* s) { return s ? s->value.order() : 0; }

fc_status fc_series_coefficient(const fc_series* s, size_t n, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "out");
    if (n > s->value.order()) {
      fibcomp::fail(fibcomp::ErrorCode::domain_error, "coefficient " + std::to_string(n) +
                                                          " is beyond the series order " +
                                                          std::to_string(s->value.order()));
    }
    *out = copy(s->value[n].str());
  });
}

fc_status fc_series_to_string(const fc_series* s, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "out");
    *out = copy(s->value.to_string());
  });
}

fc_status fc_series_add(const fc_series* a, const fc_series* b, fc_series** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new fc_series{a->value + b->value};
  });
}

fc_status fc_series_sub(const fc_series* a, const fc_series* b, fc_series** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new fc_series{a->value - b->value};
  });
}

fc_status fc_series_mul(const fc_series* a, const fc_series* b, fc_series** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new fc_series{fibcomp::series_mul(a->value, b->value)};
  });
}

fc_status fc_series_geometric_inverse(const fc_series* f, fc_series** out) {
  return guarded([&] {
    require(f, "series");
    require(out, "out");
    *out = new fc_series{fibcomp::geometric_inverse(f->value)};
  });
}

fc_status fc_series_multisect(const fc_series* f, size_t modulus, size_t residue, fc_series** out) {
  return guarded([&] {
    require(f, "series");
    require(out, "out");
    *out = new fc_series{fibcomp::multisect(f->value, modulus, residue)};
  });
}

int fc_series_equal(const fc_series* a, const fc_series* b) { return a && b && a->value == b->value; }

void fc_series_free(fc_series* s) { delete s; }

fc_status fc_expand(const char* numerator, const char* denominator, size_t order, fc_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto form = rational_of(numerator, denominator);
    *out = copy(fibcomp::render::series(form, fibcomp::rational_to_series(form, order), format_of(format)));
  });
}

// -------------------------------------------------------------- compositions

fc_status fc_weighted_sum(const char* weight, uint64_t n, char** out) {
  return guarded([&] {
    require(weight, "weight");
    require(out, "out");
    *out = copy(fibcomp::weighted_sum(n, fibcomp::parse_weight(weight)).str());
  });
}

fc_status fc_count_compositions(uint64_t n, const char* parts, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto allowed = parts ? fibcomp::PartPredicate::parse(parts) : fibcomp::PartPredicate::any();
    const fibcomp::PartWeightFunction indicator("parts", {}, [allowed](fibcomp::Part a) {
      return fibcomp::Integer(allowed(a) ? 1 : 0);
    });
    *out = copy(fibcomp::weighted_sum(n, indicator).str());
  });
}

// -------------------------------------------------------------------- monoid

fc_status fc_spec_parse(const char* text, fc_spec** out) {
  return guarded([&] {
    require(text, "spec text");
    require(out, "out");
    *out = new fc_spec{fibcomp::SubmonoidSpec::parse(text)};
  });
}

fc_status fc_spec_to_string(const fc_spec* spec, char** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = copy(spec->value.to_string());
  });
}

fc_status fc_spec_contains(const fc_spec* spec, const char* word, int* out) {
  return guarded([&] {
    require(spec, "spec");
    require(word, "word");
    require(out, "out");
    *out = spec->value.contains(fibcomp::Word::parse(word)) ? 1 : 0;
  });
}

void fc_spec_free(fc_spec* spec) { delete spec; }

fc_status fc_overlaps(const char* u, const char* v, int* out) {
  return guarded([&] {
    require(u, "u");
    require(v, "v");
    require(out, "out");
    *out = fibcomp::overlaps(fibcomp::Word::parse(u), fibcomp::Word::parse(v)) ? 1 : 0;
  });
}

fc_status fc_count_factorizations(const fc_spec* spec, const char* word, char** out) {
  return guarded([&] {
    require(spec, "spec");
    require(word, "word");
    require(out, "out");
    *out = copy(fibcomp::count_factorizations(spec->value, fibcomp::Word::parse(word)).str());
  });
}

fc_status fc_primes(const fc_spec* spec, uint64_t max_weight, int with_words, fc_format format, char** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    const auto f = format_of(format);
    *out = copy(fibcomp::render::prime_table(spec->value, fibcomp::irreducibles(spec->value, max_weight, with_words != 0), f));
  });
}

fc_status fc_members(const fc_spec* spec, uint64_t max_weight, fc_format format, char** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = copy(fibcomp::render::members(spec->value, max_weight, format_of(format)));
  });
}

fc_status fc_factor(const fc_spec* spec, const char* word, fc_format format, char** out) {
  return guarded([&] {
    require(spec, "spec");
    require(word, "word");
    require(out, "out");
    *out = copy(fibcomp::render::factorization(spec->value, fibcomp::Word::parse(word), format_of(format)));
  });
}

fc_status fc_free_check(const fc_spec* spec, uint64_t max_weight, fc_format format, int* is_free, char** out) {
  return guarded([&] {
    require(spec, "spec");
    require(is_free, "is_free");
    require(out, "out");
    const auto f = format_of(format);
    const auto verdict = fibcomp::is_free_up_to(spec->value, max_weight);
    *out = copy(fibcomp::render::verdict(spec->value, verdict, f));
    *is_free = verdict.is_free() ? 1 : 0;
  });
}

// -------------------------------------------------------------------- verify

fc_status fc_verify(const char* id, const char* params, size_t order, fc_report** out) {
  return guarded([&] {
    require(id, "id");
    require(out, "out");
    *out = new fc_report{fibcomp::verify_identity(id, params_of(params), order)};
  });
}

int fc_report_passed(const fc_report* report) { return report && report->value.passed(); }

fc_status fc_report_render(const fc_report* report, fc_format format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy(fibcomp::render::report(report->value, format_of(format)));
  });
}

void fc_report_free(fc_report* report) { delete report; }

fc_status fc_verify_all(size_t order, fc_format format, int* all_passed, char** out) {
  return guarded([&] {
    require(all_passed, "all_passed");
    require(out, "out");
    auto result = fibcomp::render::verify_all(order, format_of(format));
    *out = copy(result.output);
    *all_passed = result.all_passed ? 1 : 0;
  });
}

fc_status fc_identity_ids(fc_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy(fibcomp::render::identity_ids(format_of(format)));
  });
}

fc_status fc_bijection(const char* name, const char* input, const char* params, int inverse, fc_format format,
                       char** out) {
  return guarded([&] {
    require(name, "name");
    require(input, "input");
    require(out, "out");
    *out = copy(fibcomp::render::bijection(name, input, params_of(params), inverse != 0, format_of(format)));
  });
}

fc_status fc_dyck(uint64_t n, uint64_t h, fc_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy(fibcomp::render::dyck(n, h, format_of(format)));
  });
}

fc_status fc_bfile(const char* name, const char* params, const char* weight, int64_t first, int64_t last,
                   char** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const std::optional<std::int64_t> start = first < 0 ? std::nullopt : std::optional<std::int64_t>(first);
    *out = copy(fibcomp::render::bfile(name, params_of(params), weight ? weight : "", start, last));
  });
}

}  // extern "C"
