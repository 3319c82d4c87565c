#include "render.hpp"

#include "fibcomp/error.hpp"
#include "text.hpp"

#include <json.hpp>

#include <algorithm>

namespace fibcomp::render {

namespace {

using Json = nlohmann::ordered_json;

std::string line(const Json& j) { return j.dump() + "\n"; }

Json numbers(std::span<const Integer> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

Json words(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

Json params_json(const Params& params) {
  Json out = Json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

std::string joined(std::span<const Integer> values) {
  return text::join(values, ",", [](const Integer& v) { return v.str(); });
}

std::string factors_text(const std::vector<Word>& factors) {
  if (factors.empty()) return "()";
  return text::join(factors, "|", [](const Word& w) { return w.to_string(); });
}

std::string method_text(const char* tag, const MethodResult& m) {
  std::string out = std::string(tag) + "=" + to_string(m.status);
  if (m.status == MethodStatus::not_applicable) return out;
  if (m.discrepancy) {
    const auto& d = *m.discrepancy;
    return out + "@" + std::to_string(d.index) + "(" + d.lhs.str() + "!=" + d.rhs.str() + ")";
  }
  return out + "[" + std::to_string(m.from) + ".." + std::to_string(m.to) + "]";
}

Json method_json(const MethodResult& m) {
  Json out;
  out["status"] = to_string(m.status);
  if (m.status == MethodStatus::not_applicable) return out;
  out["from"] = m.from;
  out["to"] = m.to;
  if (m.discrepancy) {
    out["discrepancy"] = {{"index", m.discrepancy->index},
                          {"lhs", m.discrepancy->lhs.str()},
                          {"rhs", m.discrepancy->rhs.str()}};
  }
  return out;
}

Part param_part(const Params& params, std::string_view bijection, std::string_view name) {
  for (const auto& [k, v] : params) {
    if (k == name) {
      if (v <= 0 || v > 0xffffffffLL) {
        fail(ErrorCode::invalid_argument, std::string(name) + " must be a positive part");
      }
      return static_cast<Part>(v);
    }
  }
  fail(ErrorCode::invalid_argument, "bijection '" + std::string(bijection) + "' needs parameter " + std::string(name));
}

void allow_params(const Params& params, std::string_view what, std::initializer_list<std::string_view> names) {
  for (const auto& [k, v] : params) {
    if (std::find(names.begin(), names.end(), k) == names.end()) {
      fail(ErrorCode::invalid_argument, std::string(what) + " has no parameter '" + k + "'");
    }
  }
}

std::vector<std::size_t> parse_subset(std::string_view input) {
  input = text::trim(input);
  if (input.size() < 2 || input.front() != '{' || input.back() != '}') {
    fail(ErrorCode::parse_error, "expected a subset like {1,3}, got '" + std::string(input) + "'");
  }
  std::vector<std::size_t> out;
  const auto inner = text::trim(input.substr(1, input.size() - 2));
  if (!inner.empty()) {
    for (auto token : text::split(inner, ',')) out.push_back(text::parse_uint(token, "a subset element"));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    fail(ErrorCode::parse_error, "subset elements must be distinct");
  }
  return out;
}

std::string subset_text(const std::vector<std::size_t>& s) {
  return "{" + text::join(s, ",", [](std::size_t v) { return std::to_string(v); }) + "}";
}

// Accepts "(2,1,1)" or the digit form "211" used for words over {1,2}.
Composition letter_word(std::string_view input) {
  const auto t = text::trim(input);
  if (t.empty() || t.find_first_not_of("12") != std::string_view::npos) return Composition::parse(input);
  std::vector<Part> parts;
  for (char ch : t) parts.push_back(static_cast<Part>(ch - '0'));
  return Composition(std::move(parts));
}

}  // namespace

std::string series(const RationalGF& form, const TruncatedSeries& s, Format f) {
  if (f == Format::text) return s.to_string() + "\n";
  Json j;
  j["numerator"] = form.numerator().to_string();
  j["denominator"] = form.denominator().to_string();
  j["order"] = s.order();
  j["coefficients"] = numbers(s.coefficients());
  return line(j);
}

std::string report(const Report& r, Format f) {
  if (f == Format::text) {
    std::string head = r.id;
    if (!r.params.empty()) head += "(" + to_string(r.params) + ")";
    return head + " N=" + std::to_string(r.order) + " " + method_text("A", r.closed_form) + " " +
           method_text("B", r.prime_inversion) + " " + method_text("C", r.weighted_sum) + " -> " +
           (r.passed() ? "pass" : "FAIL") + "\n";
  }
  Json j;
  j["id"] = r.id;
  j["params"] = params_json(r.params);
  j["N"] = r.order;
  j["methods"] = {{"A", method_json(r.closed_form)},
                  {"B", method_json(r.prime_inversion)},
                  {"C", method_json(r.weighted_sum)}};
  j["status"] = r.passed() ? "pass" : "fail";
  return line(j);
}

std::string prime_table(const SubmonoidSpec& spec, const PrimeTable& t, Format f) {
  const std::span<const Integer> counts = std::span<const Integer>(t.counts).subspan(1);
  if (f == Format::text) {
    std::string out = joined(counts) + "\n";
    if (t.has_words()) {
      for (std::size_t n = 1; n < t.words.size(); ++n) {
        out += std::to_string(n) + ":";
        for (const auto& w : t.words[n]) out += " " + w.to_string();
        out += "\n";
      }
    }
    return out;
  }
  Json j;
  j["spec"] = spec.to_string();
  j["max_weight"] = t.max_weight;
  j["counts"] = numbers(counts);
  if (t.has_words()) {
    Json by_weight = Json::object();
    for (std::size_t n = 1; n < t.words.size(); ++n) by_weight[std::to_string(n)] = words(t.words[n]);
    j["words"] = by_weight;
  }
  return line(j);
}

std::string members(const SubmonoidSpec& spec, std::uint64_t max_weight, Format f) {
  std::vector<Word> all;
  auto stream = enumerate_members(spec, max_weight);
  while (auto w = stream.next()) all.push_back(std::move(*w));
  std::sort(all.begin(), all.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (f == Format::text) {
    std::string out;
    for (const auto& w : all) out += w.to_string() + "\n";
    return out;
  }
  Json j;
  j["spec"] = spec.to_string();
  j["max_weight"] = max_weight;
  j["count"] = all.size();
  j["members"] = words(all);
  return line(j);
}

std::string factorization(const SubmonoidSpec& spec, const Word& w, Format f) {
  const Integer count = count_factorizations(spec, w);
  if (count != 1 && !w.empty()) {
    fail(ErrorCode::not_free, w.to_string() + " has " + count.str() + " factorizations into irreducibles of '" +
                                  spec.to_string() + "'");
  }
  const auto factors = factor_unique(spec, w);
  if (f == Format::text) return factors_text(factors) + "\n";
  Json j;
  j["spec"] = spec.to_string();
  j["word"] = w.to_string();
  j["factors"] = words(factors);
  return line(j);
}

std::string verdict(const SubmonoidSpec& spec, const FreenessVerdict& v, Format f) {
  const auto* fact = std::get_if<FactorizationCounterexample>(&v.counterexample);
  const auto* quad = std::get_if<SchutzenbergerQuadruple>(&v.counterexample);
  if (f == Format::text) {
    if (fact) {
      return "not free: " + fact->word.to_string() + " = " + factors_text(fact->first) + " = " +
             factors_text(fact->second) + "\n";
    }
    if (quad) {
      return "not free: p=" + quad->p.to_string() + " q=" + quad->q.to_string() + " r=" + quad->r.to_string() +
             "\n";
    }
    return "free up to weight " + std::to_string(v.free_up_to) + "\n";
  }
  Json j;
  j["spec"] = spec.to_string();
  j["max_weight"] = v.free_up_to;
  j["free"] = v.is_free();
  if (fact) {
    j["counterexample"] = {{"kind", "factorization"},
                           {"word", fact->word.to_string()},
                           {"first", words(fact->first)},
                           {"second", words(fact->second)}};
  } else if (quad) {
    j["counterexample"] = {{"kind", "criterion"},
                           {"p", quad->p.to_string()},
                           {"q", quad->q.to_string()},
                           {"r", quad->r.to_string()}};
  }
  return line(j);
}

VerifyAllResult verify_all(std::size_t order, Format f) {
  VerifyAllResult result{"", true};
  std::size_t total = 0;
  std::size_t passed = 0;
  for (const auto& r : fibcomp::verify_all(order)) {
    result.output += report(r, f);
    ++total;
    if (r.passed()) ++passed;
  }
  result.all_passed = passed == total;
  if (f == Format::text) {
    result.output += std::to_string(passed) + "/" + std::to_string(total) + " identities passed\n";
  }
  return result;
}

std::string bijection(std::string_view name, std::string_view input, const Params& params, bool inverse, Format f) {
  std::string output;
  Json extra = Json::object();
  if (name == "odd_from_fib") {
    allow_params(params, name, {});
    const auto c = Composition::parse(input);
    output = (inverse ? odd_from_fib_inverse(c) : odd_from_fib(c)).to_string();
  } else if (name == "two_part") {
    allow_params(params, name, {"p", "q"});
    const Part p = param_part(params, name, "p");
    const Part q = param_part(params, name, "q");
    const auto c = Composition::parse(input);
    output = (inverse ? two_part_bijection_inverse(p, q, c) : two_part_bijection(p, q, c)).to_string();
  } else if (name == "bars_dots") {
    allow_params(params, name, {});
    output = inverse ? bars_dots_encode(letter_word(input)).to_string()
                     : bars_dots_decode(BarsDots::parse(input)).to_string();
  } else if (name == "subset_prime") {
    if (inverse) {
      allow_params(params, name, {});
      const auto choice = subset_prime_construction_inverse(Composition::parse(input));
      output = "n=" + std::to_string(choice.n) + " " + subset_text(choice.subset);
    } else {
      allow_params(params, name, {"n"});
      output = subset_prime_construction(param_part(params, name, "n"), parse_subset(input)).to_string();
    }
  } else {
    fail(ErrorCode::unknown_name, "unknown bijection '" + std::string(name) +
                                      "'; registered: odd_from_fib, two_part, bars_dots, subset_prime");
  }
  if (f == Format::text) return output + "\n";
  Json j;
  j["bijection"] = name;
  j["params"] = params_json(params);
  j["direction"] = inverse ? "inverse" : "forward";
  j["input"] = text::trim(input);
  j["output"] = output;
  return line(j);
}

std::string dyck(std::uint64_t n, std::uint64_t h, Format f) {
  const Integer count = dyck_count(n, h);
  if (f == Format::text) return count.str() + "\n";
  Json j;
  j["n"] = n;
  j["h"] = h;
  j["count"] = count.str();
  return line(j);
}

std::string identity_ids(Format f) {
  std::string out;
  for (const auto& entry : identity_registry()) {
    if (f == Format::text) {
      out += entry.id;
      for (const auto& p : entry.param_names) out += " " + p + "=";
      out += "\n";
      continue;
    }
    Json j;
    j["id"] = entry.id;
    j["params"] = entry.param_names;
    out += line(j);
  }
  return out;
}

std::string bfile(std::string_view name, const Params& params, std::string_view weight,
                  std::optional<std::int64_t> first, std::int64_t last) {
  std::int64_t natural = 0;
  std::string label;
  std::function<std::vector<Integer>(std::size_t)> terms;  // terms natural..natural+count-1
  if (name == "trisection" || name == "trisection_b") {
    allow_params(params, name, {});
    natural = 1;
    terms = [name](std::size_t count) {
      auto t = trisection_prime_counts(count);
      auto& v = name == "trisection" ? t.a : t.b;
      return std::vector<Integer>(v.begin() + 1, v.end());
    };
  } else if (name == "dyck") {
    allow_params(params, name, {"h"});
    const auto it = std::find_if(params.begin(), params.end(), [](const auto& kv) { return kv.first == "h"; });
    if (it == params.end() || it->second < 0) fail(ErrorCode::invalid_argument, "dyck needs parameter h >= 0");
    const auto h = static_cast<std::uint64_t>(it->second);
    terms = [h](std::size_t count) {
      std::vector<Integer> out;
      for (std::size_t n = 0; n < count; ++n) out.push_back(dyck_count(n, h));
      return out;
    };
  } else if (name == "weighted") {
    allow_params(params, name, {});
    if (weight.empty()) fail(ErrorCode::invalid_argument, "sequence 'weighted' needs a weighting");
    const auto u = parse_weight(weight);
    terms = [u](std::size_t count) {
      auto s = weighted_sums(count == 0 ? 0 : count - 1, u);
      s.resize(count);
      return s;
    };
  } else {
    const OracleInfo info = oracle_info(name, params);
    natural = static_cast<std::int64_t>(info.offset);
    label = info.label;
    terms = [name = std::string(name), params](std::size_t count) { return oracle_sequence(name, params, count); };
  }
  const std::int64_t start = first.value_or(natural);
  if (start < natural) {
    fail(ErrorCode::domain_error, "sequence '" + std::string(name) + "' starts at index " + std::to_string(natural));
  }
  if (last < start) {
    fail(ErrorCode::domain_error, "last index " + std::to_string(last) + " is below the first index " +
                                      std::to_string(start));
  }
  auto seq = terms(static_cast<std::size_t>(last - natural + 1));
  seq.erase(seq.begin(), seq.begin() + (start - natural));
  std::string out = label.empty() ? "" : "# " + label + "\n";
  return out + export_bfile(seq, start);
}

}  // namespace fibcomp::render
