// fibcomp command-line front end. Everything goes through the C API.

#include <CLI11.hpp>

#include "fibcomp/fibcomp.h"

#include <cstdio>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Options {
  std::string format = "text";
  std::size_t order = 12;
  std::uint64_t max_weight = 10;
  std::string spec;
  std::string word;
  std::string params;
  std::string numerator;
  std::string denominator;
  std::string id;
  std::string name;
  std::string input;
  std::string weight;
  bool inverse = false;
  bool words = false;
  std::uint64_t n = 0;
  std::uint64_t height = 3;
  std::int64_t offset = -1;
};

fc_format format_of(const Options& o) { return o.format == "structured" ? FC_FORMAT_STRUCTURED : FC_FORMAT_TEXT; }

struct String {
  char* p = nullptr;
  ~String() { fc_string_free(p); }
};

struct SpecHandle {
  fc_spec* p = nullptr;
  ~SpecHandle() { fc_spec_free(p); }
};

int report_error(fc_status s) {
  std::cerr << "error: " << fc_status_name(s) << ": " << fc_last_error() << "\n";
  if (s == FC_NOT_FREE) return exit_failed;
  return exit_usage;
}

void print(const char* text) {
  std::fputs(text, stdout);
  std::fflush(stdout);
}

// Runs a call producing a string; prints it on success.
int emit(const std::function<fc_status(char**)>& call) {
  String out;
  if (auto s = call(&out.p); s != FC_OK) return report_error(s);
  print(out.p);
  return exit_ok;
}

int with_spec(const Options& o, const std::function<int(const fc_spec*)>& body) {
  SpecHandle spec;
  if (auto s = fc_spec_parse(o.spec.c_str(), &spec.p); s != FC_OK) return report_error(s);
  return body(spec.p);
}

int run_expand(const Options& o) {
  if (!o.params.empty()) {
    // Fibonacci multisection: --params m=...,j=...
    std::map<std::string, long long> p;
    std::string rest = o.params;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      auto item = rest.substr(0, comma);
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        std::cerr << "error: --params expects name=value pairs\n";
        return exit_usage;
      }
      try {
        p[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
      } catch (const std::exception&) {
        std::cerr << "error: --params value for " << item.substr(0, eq) << " is not an integer\n";
        return exit_usage;
      }
      rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    }
    if (p.size() != 2 || !p.count("m") || !p.count("j") || p["m"] < 1 || p["j"] < 0) {
      std::cerr << "error: expand --params takes m>=1 and j>=0\n";
      return exit_usage;
    }
    fc_series* s = nullptr;
    if (auto st = fc_series_fib_multisection(p["m"], p["j"], o.order, &s); st != FC_OK) return report_error(st);
    String out;
    auto st = fc_series_to_string(s, &out.p);
    fc_series_free(s);
    if (st != FC_OK) return report_error(st);
    print(out.p);
    print("\n");
    return exit_ok;
  }
  if (o.numerator.empty() || o.denominator.empty()) {
    std::cerr << "error: expand needs NUMERATOR DENOMINATOR or --params m=..,j=..\n";
    return exit_usage;
  }
  return emit([&](char** out) {
    return fc_expand(o.numerator.c_str(), o.denominator.c_str(), o.order, format_of(o), out);
  });
}

int run_verify(const Options& o) {
  fc_report* report = nullptr;
  if (auto s = fc_verify(o.id.c_str(), o.params.c_str(), o.order, &report); s != FC_OK) return report_error(s);
  std::unique_ptr<fc_report, decltype(&fc_report_free)> guard(report, fc_report_free);
  String out;
  if (auto s = fc_report_render(report, format_of(o), &out.p); s != FC_OK) return report_error(s);
  print(out.p);
  return fc_report_passed(report) ? exit_ok : exit_failed;
}

int run_verify_all(const Options& o) {
  int all_passed = 0;
  String out;
  if (auto s = fc_verify_all(o.order, format_of(o), &all_passed, &out.p); s != FC_OK) return report_error(s);
  print(out.p);
  return all_passed ? exit_ok : exit_failed;
}

int run_free_check(const Options& o) {
  return with_spec(o, [&](const fc_spec* spec) {
    int is_free = 0;
    String out;
    if (auto s = fc_free_check(spec, o.max_weight, format_of(o), &is_free, &out.p); s != FC_OK) return report_error(s);
    print(out.p);
    return is_free ? exit_ok : exit_failed;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact composition and Fibonacci identity toolkit", "fibcomp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fc_version()));

  Options o;
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output mode")->check(CLI::IsMember({"text", "structured"}));
  };

  auto* expand = app.add_subcommand("expand", "Expand a rational generating function");
  expand->add_option("numerator", o.numerator, "Numerator coefficients, e.g. 0,1");
  expand->add_option("denominator", o.denominator, "Denominator coefficients, e.g. 1,-1,-1");
  expand->add_option("--params", o.params, "m=..,j=.. for a Fibonacci multisection instead");
  expand->add_option("-N,--order", o.order, "Truncation order");
  add_format(expand);

  auto* verify = app.add_subcommand("verify", "Verify one identity by all applicable methods");
  verify->add_option("id", o.id, "Identity id")->required();
  verify->add_option("--params", o.params, "Parameters, e.g. m=3,j=1");
  verify->add_option("-N,--order", o.order, "Largest index checked");
  add_format(verify);

  auto* verify_all = app.add_subcommand("verify-all", "Verify every registered identity");
  verify_all->add_option("-N,--order", o.order, "Largest index checked");
  add_format(verify_all);

  auto* ids = app.add_subcommand("identities", "List registered identity ids and their parameters");
  add_format(ids);

  auto* primes = app.add_subcommand("primes", "Count irreducibles of a submonoid by weight");
  primes->add_option("--spec", o.spec, "Submonoid spec")->required();
  primes->add_option("-W,--max", o.max_weight, "Largest weight");
  primes->add_flag("--words", o.words, "List the irreducible words");
  add_format(primes);

  auto* members = app.add_subcommand("members", "List members of a submonoid");
  members->add_option("--spec", o.spec, "Submonoid spec")->required();
  members->add_option("-W,--max", o.max_weight, "Largest weight");
  add_format(members);

  auto* factor = app.add_subcommand("factor", "Factor a word into irreducibles");
  factor->add_option("--spec", o.spec, "Submonoid spec")->required();
  factor->add_option("--word", o.word, "Word, e.g. (1,2,1)")->required();
  add_format(factor);

  auto* free_check = app.add_subcommand("free-check", "Decide freeness up to a weight");
  free_check->add_option("--spec", o.spec, "Submonoid spec")->required();
  free_check->add_option("-W,--max", o.max_weight, "Largest weight");
  add_format(free_check);

  auto* bijection = app.add_subcommand("bijection", "Apply a bijection or its inverse");
  bijection->add_option("name", o.name, "odd_from_fib, two_part, bars_dots or subset_prime")->required();
  bijection->add_option("input", o.input, "Input object")->required();
  bijection->add_flag("--inverse", o.inverse, "Apply the inverse map");
  bijection->add_option("--params", o.params, "p=..,q=.. or n=..");
  add_format(bijection);

  auto* dyck = app.add_subcommand("dyck", "Count Dyck paths of bounded height");
  dyck->add_option("n", o.n, "Semilength")->required();
  dyck->add_option("--height", o.height, "Height bound");
  add_format(dyck);

  auto* bfile = app.add_subcommand("bfile", "Export a sequence as b-file lines");
  bfile->add_option("name", o.name, "Sequence name")->required();
  bfile->add_option("--params", o.params, "Sequence parameters");
  bfile->add_option("--weight", o.weight, "Weighting for the 'weighted' sequence");
  bfile->add_option("--offset", o.offset, "First index (default: natural offset)");
  bfile->add_option("-N,--order", o.order, "Last index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (*expand) return run_expand(o);
  if (*verify) return run_verify(o);
  if (*verify_all) return run_verify_all(o);
  if (*ids) return emit([&](char** out) { return fc_identity_ids(format_of(o), out); });
  if (*primes) {
    return with_spec(o, [&](const fc_spec* spec) {
      return emit([&](char** out) { return fc_primes(spec, o.max_weight, o.words, format_of(o), out); });
    });
  }
  if (*members) {
    return with_spec(o, [&](const fc_spec* spec) {
      return emit([&](char** out) { return fc_members(spec, o.max_weight, format_of(o), out); });
    });
  }
  if (*factor) {
    return with_spec(o, [&](const fc_spec* spec) {
      return emit([&](char** out) { return fc_factor(spec, o.word.c_str(), format_of(o), out); });
    });
  }
  if (*free_check) return run_free_check(o);
  if (*bijection) {
    return emit([&](char** out) {
      return fc_bijection(o.name.c_str(), o.input.c_str(), o.params.c_str(), o.inverse, format_of(o), out);
    });
  }
  if (*dyck) return emit([&](char** out) { return fc_dyck(o.n, o.height, format_of(o), out); });
  if (*bfile) {
    return emit([&](char** out) {
      return fc_bfile(o.name.c_str(), o.params.c_str(), o.weight.empty() ? nullptr : o.weight.c_str(), o.offset,
                      static_cast<std::int64_t>(o.order), out);
    });
  }
  return exit_usage;
}
