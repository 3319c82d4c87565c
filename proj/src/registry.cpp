#include "fibcomp/error.hpp"
#include "fibcomp/verify.hpp"
#include "forms.hpp"
#include "text.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace fibcomp {

namespace {

Polynomial poly(std::vector<Integer> coeffs) { return Polynomial(std::move(coeffs)); }

RationalGF ratio(Polynomial num, Polynomial den) { return RationalGF(std::move(num), std::move(den)); }

RationalGF one_plus(const RationalGF& r) { return RationalGF::constant(1) + r; }

Polynomial x_power(std::size_t k) { return Polynomial::monomial(1, k); }

Word repeated(Part head, Part tail, std::size_t count) {
  std::vector<Part> parts{head};
  parts.insert(parts.end(), count, tail);
  return Word(std::move(parts));
}

Integer F(std::int64_t n) {
  if (n < 0) return n == -1 ? Integer(1) : Integer(0);
  return fibonacci(static_cast<std::size_t>(n));
}

Integer pow2(std::size_t e) { return Integer(1) << static_cast<unsigned>(e); }

// u_a = coefficient a of a rational series, extended on demand.
PartWeightFunction prime_series(std::string name, std::vector<std::int64_t> params, RationalGF form) {
  struct Cache {
    explicit Cache(RationalGF f) : form(std::move(f)) {}
    RationalGF form;
    std::mutex lock;
    std::vector<Integer> values;
  };
  auto cache = std::make_shared<Cache>(std::move(form));
  return PartWeightFunction(std::move(name), std::move(params), [cache](Part a) -> Integer {
    std::lock_guard guard(cache->lock);
    if (a >= cache->values.size()) {
      const auto s = rational_to_series(cache->form, std::max<std::size_t>(64, 2 * std::size_t{a}));
      cache->values.assign(s.coefficients().begin(), s.coefficients().end());
    }
    return cache->values[a];
  });
}

// Compositions of n with parts in {p, q}.
Integer two_part_count(std::int64_t n, Part p, Part q) {
  if (n < 0) return 0;
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (i >= p) c[i] += c[i - p];
    if (i >= q) c[i] += c[i - q];
  }
  return c.back();
}

// r_n = r_{n-1} + r_{n-m}, r_0 = ... = r_{m-1} = 1.
Integer r_term(std::int64_t n, std::size_t m) {
  if (n < 0) return 0;
  std::vector<Integer> r(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = i < m ? Integer(1) : r[i - 1] + r[i - m];
  return r.back();
}

std::int64_t param(const Params& params, std::string_view name) {
  for (const auto& [k, v] : params) {
    if (k == name) return v;
  }
  fail(ErrorCode::internal, "missing parameter " + std::string(name));
}

void require(bool ok, const std::string& id, const std::string& message) {
  if (!ok) fail(ErrorCode::invalid_argument, "identity '" + id + "': " + message);
}

using Builder = std::function<IdentityRecord(const Params&)>;

struct Definition {
  RegistryEntry entry;
  Builder build;
};

IdentityRecord base(std::string id, const Params& params, std::string statement, RationalGF closed_form,
                    std::string target_name, std::function<Integer(std::size_t)> target,
                    std::size_t valid_from = 1) {
  IdentityRecord r{std::move(id),          params, std::move(statement), std::nullopt, std::nullopt,
                   std::move(closed_form), valid_from, std::move(target_name), std::move(target)};
  return r;
}

std::vector<Params> range(std::string_view name, std::int64_t lo, std::int64_t hi) {
  std::vector<Params> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back({{std::string(name), v}});
  return out;
}

const SubmonoidSpec fib_words;  // {1,2}*

std::vector<Definition> make_definitions() {
  std::vector<Definition> defs;
  const auto add = [&](std::string id, std::vector<std::string> names, std::vector<Params> instances, Builder b) {
    defs.push_back({RegistryEntry{std::move(id), std::move(names), std::move(instances)}, std::move(b)});
  };
  const Params none;

  add("i", {}, {none}, [](const Params& p) {
    auto r = base("i", p, "F(n+1) = #compositions of n into parts 1 and 2", ratio({1}, {1, -1, -1}), "F(n+1)",
                  [](std::size_t n) { return F(n + 1); }, 0);
    r.spec = fib_words;
    r.weight = make_weight("indicator", {1, 2});
    return r;
  });
  add("ii", {}, {none}, [](const Params& p) {
    auto r = base("ii", p, "F(n-1) = #compositions of n into parts >= 2", one_plus(ratio(x_power(2), {1, -1, -1})),
                  "F(n-1)", [](std::size_t n) { return F(static_cast<std::int64_t>(n) - 1); });
    r.spec = fib_words.with_prefix(Word{2});
    r.weight = make_weight("residue", {2, 1});
    return r;
  });
  add("iii", {}, {none}, [](const Params& p) {
    auto r = base("iii", p, "F(n) = #compositions of n into odd parts", one_plus(ratio({0, 1}, {1, -1, -1})), "F(n)",
                  [](std::size_t n) { return F(n); });
    r.spec = fib_words.with_prefix(Word{1});
    r.weight = make_weight("residue", {1, 2});
    return r;
  });
  add("iv", {}, {none}, [](const Params& p) {
    auto r = base("iv", p, "F(2n) = sum a_1 a_2 ... a_k", one_plus(ratio({0, 1}, {1, -3, 1})), "F(2n)",
                  [](std::size_t n) { return F(2 * n); });
    r.spec = fib_words.with_prefix(Word{1}).with_modulus(2);
    r.weight = make_weight("a");
    return r;
  });
  add("v", {}, {none}, [](const Params& p) {
    auto r = base("v", p, "F(2n-2) = sum (2^(a_1-1)-1) ... (2^(a_k-1)-1)", one_plus(ratio(x_power(2), {1, -3, 1})),
                  "F(2n-2)", [](std::size_t n) { return F(2 * static_cast<std::int64_t>(n) - 2); });
    r.spec = fib_words.with_prefix(Word{1, 2}).with_modulus(2);
    r.weight = make_weight("pow2_minus_one");
    return r;
  });
  add("vi", {}, {none}, [](const Params& p) {
    auto r = base("vi", p, "F(2n+1) = sum 2^#{i : a_i = 1}", ratio({1, -1}, {1, -3, 1}), "F(2n+1)",
                  [](std::size_t n) { return F(2 * n + 1); });
    r.spec = fib_words.with_modulus(2);
    r.weight = make_weight("two_if_one");
    return r;
  });
  add("fmgen", {"k"}, range("k", 2, 5), [](const Params& p) {
    const std::int64_t k = param(p, "k");
    require(k >= 2, "fmgen", "k must be at least 2");
    const auto ku = static_cast<std::size_t>(k);
    auto r = base("fmgen", p, "members starting with (2,1^(k-2)) have primes x^k/(1-x-x^2+x^k)",
                  one_plus(ratio(x_power(ku), {1, -1, -1})), "F(n-k+1)",
                  [k](std::size_t n) { return static_cast<std::int64_t>(n) >= k ? F(static_cast<std::int64_t>(n) - k + 1) : Integer(0); });
    r.spec = fib_words.with_prefix(repeated(2, 1, ku - 2));
    r.weight = prime_series("fmgen_primes", {k}, forms::fmgen_primes(ku));
    return r;
  });
  add("floor", {}, {none}, [](const Params& p) {
    auto r = base("floor", p, "F(n-2) = sum floor((a_1-1)/2) ... floor((a_k-1)/2)",
                  one_plus(ratio(x_power(3), {1, -1, -1})), "F(n-2)",
                  [](std::size_t n) { return F(static_cast<std::int64_t>(n) - 2); }, 2);
    r.spec = fib_words.with_prefix(Word{1}).with_suffix(Word{2});
    r.weight = make_weight("floor", {2});
    return r;
  });
  add("floor_m", {"m"}, range("m", 1, 5), [](const Params& p) {
    const std::int64_t m = param(p, "m");
    require(m >= 1, "floor_m", "m must be positive");
    const auto mu = static_cast<std::size_t>(m);
    auto r = base("floor_m", p, "r(n-m-1) = sum floor((a_1-1)/m) ... floor((a_k-1)/m)",
                  one_plus(ratio(x_power(mu + 1), Polynomial{1, -1} - x_power(mu))), "r(n-m-1)",
                  [m, mu](std::size_t n) { return r_term(static_cast<std::int64_t>(n) - m - 1, mu); }, mu + 1);
    if (m >= 2) {
      const auto part = static_cast<Part>(m);
      r.spec = SubmonoidSpec({1, part}).with_prefix(Word{1}).with_suffix(Word{part});
    }
    r.weight = make_weight("floor", {m});
    return r;
  });
  add("all_compositions", {}, {none}, [](const Params& p) {
    auto r = base("all_compositions", p, "2^(n-1) = #compositions of n", one_plus(ratio({0, 1}, {1, -2})), "2^(n-1)",
                  [](std::size_t n) { return pow2(n - 1); });
    r.weight = make_weight("one");
    return r;
  });
  add("pow2", {}, {none}, [](const Params& p) {
    auto r = base("pow2", p, "2^(n-2) = sum (a_1-1) ... (a_k-1)", one_plus(ratio(x_power(2), {1, -2})), "2^(n-2)",
                  [](std::size_t n) { return pow2(n - 2); }, 2);
    r.weight = make_weight("a_minus_one");
    return r;
  });
  add("fsum", {}, {none}, [](const Params& p) {
    auto r = base("fsum", p, "2^(n-3) = sum (F(a_1)-1) ... (F(a_k)-1)", one_plus(ratio(x_power(3), {1, -2})),
                  "2^(n-3)", [](std::size_t n) { return pow2(n - 3); }, 3);
    r.weight = make_weight("fib_minus_one");
    return r;
  });
  add("two_parts", {"p", "q"},
      {{{"p", 1}, {"q", 2}}, {{"p", 2}, {"q", 1}}, {{"p", 2}, {"q", 3}}, {{"p", 3}, {"q", 2}}, {{"p", 1}, {"q", 3}}},
      [](const Params& prm) {
        const std::int64_t p = param(prm, "p");
        const std::int64_t q = param(prm, "q");
        require(p >= 1 && q >= 1 && p != q, "two_parts", "p and q must be distinct positive parts");
        const auto pp = static_cast<Part>(p);
        const auto qq = static_cast<Part>(q);
        auto r = base("two_parts", prm, "#compositions of n-p into parts p, q = #compositions of n into parts p+qi",
                      one_plus(ratio(x_power(pp), Polynomial{1} - x_power(pp) - x_power(qq))), "C(n-p; p,q)",
                      [p, pp, qq](std::size_t n) { return two_part_count(static_cast<std::int64_t>(n) - p, pp, qq); },
                      pp);
        r.spec = SubmonoidSpec({pp, qq}).with_prefix(Word{pp});
        r.weight = make_weight("residue", {p, q});
        return r;
      });
  {
    std::vector<Params> instances;
    for (std::int64_t m = 1; m <= 6; ++m) {
      for (std::int64_t j = 0; j <= m; ++j) instances.push_back({{"m", m}, {"j", j}});
    }
    add("multi", {"m", "j"}, instances, [](const Params& p) {
      const std::int64_t m = param(p, "m");
      const std::int64_t j = param(p, "j");
      require(m >= 1 && j >= 0 && j <= m, "multi", "need m >= 1 and 0 <= j <= m");
      const auto mu = static_cast<std::size_t>(m);
      const auto ju = static_cast<std::size_t>(j);
      return base("multi", p, "sum F(mn+j) x^n = (F(j) + (-1)^j F(m-j) x)/(1 - L(m) x + (-1)^m x^2)",
                  fib_multisection_gf(mu, ju), "F(mn+j)", [mu, ju](std::size_t n) { return F(mu * n + ju); }, 0);
    });
  }
  add("m0", {"m"}, range("m", 1, 6), [](const Params& p) {
    const std::int64_t m = param(p, "m");
    require(m >= 1, "m0", "m must be positive");
    const auto mu = static_cast<std::size_t>(m);
    auto r = base("m0", p, "multiples of m have primes F(m+1) x + F(m)^2 x^2/(1-F(m-1) x)", fib_multisection_gf(mu, 1),
                  "F(mn+1)", [mu](std::size_t n) { return F(mu * n + 1); });
    r.spec = fib_words.with_modulus(static_cast<std::uint32_t>(m));
    r.weight = prime_series("m0_primes", {m}, forms::m0_primes(mu));
    return r;
  });
  add("mm2", {"m"}, range("m", 2, 6), [](const Params& p) {
    const std::int64_t m = param(p, "m");
    require(m >= 2, "mm2", "m must be at least 2");
    const auto mu = static_cast<std::size_t>(m);
    auto r = base("mm2", p, "multiples of m starting with 2 have primes F(m-1) x + F(m)^2 x^2/(1-F(m+1) x)",
                  one_plus(fib_multisection_gf(mu, mu - 1).shifted(1)), "F(mn-1)",
                  [mu](std::size_t n) { return F(static_cast<std::int64_t>(mu * n) - 1); });
    r.spec = fib_words.with_prefix(Word{2}).with_modulus(static_cast<std::uint32_t>(m));
    r.weight = prime_series("mm2_primes", {m}, forms::mm2_primes(mu));
    return r;
  });
  add("mm1", {"m"}, range("m", 1, 6), [](const Params& p) {
    const std::int64_t m = param(p, "m");
    require(m >= 1, "mm1", "m must be positive");
    const auto mu = static_cast<std::size_t>(m);
    auto r = base("mm1", p, "multiples of m starting with 1 have primes F(m) x/(1-2F(m-1) x+(-1)^m x^2)",
                  one_plus(fib_multisection_gf(mu, mu).shifted(1)), "F(mn)", [mu](std::size_t n) { return F(mu * n); });
    r.spec = fib_words.with_prefix(Word{1}).with_modulus(static_cast<std::uint32_t>(m));
    r.weight = prime_series("mm1_primes", {m}, forms::mm1_primes(mu));
    return r;
  });
  add("m_odd", {"m"}, {{{"m", 1}}, {{"m", 3}}, {{"m", 5}}}, [](const Params& p) {
    const std::int64_t m = param(p, "m");
    require(m >= 1 && m % 2 == 1, "m_odd", "m must be odd and positive");
    const auto mu = static_cast<std::size_t>(m);
    return base("m_odd", p, "sum F(m(n+1)) x^n = F(m)/(1 - L(m) x - x^2) for odd m",
                ratio(poly({fibonacci(mu)}), poly({1, -lucas(mu), -1})), "F(m(n+1))",
                [mu](std::size_t n) { return F(mu * (n + 1)); }, 0);
  });
  add("evenodd", {}, {none}, [](const Params& p) {
    return base("evenodd", p, "x/(1-x-x^2) = (x+x^2-x^3)/(1-3x^2+x^4)", ratio({0, 1, 1, -1}, {1, 0, -3, 0, 1}), "F(n)",
                [](std::size_t n) { return F(n); }, 0);
  });
  add("f2n_minus_1", {}, {none}, [](const Params& p) {
    auto r = base("f2n_minus_1", p, "F(2n-1) = sum 2^(#{i : a_i = 1} + n - 2k)", ratio({1, -2}, {1, -3, 1}),
                  "F(2n-1)", [](std::size_t n) { return F(2 * static_cast<std::int64_t>(n) - 1); });
    r.spec = fib_words.with_prefix(Word{2}).with_modulus(2);
    r.weight = make_weight("pow2_shifted");
    return r;
  });
  add("fibogenx", {"k"}, range("k", 1, 4), [](const Params& p) {
    const std::int64_t k = param(p, "k");
    require(k >= 1, "fibogenx", "k must be positive");
    const auto ku = static_cast<std::size_t>(k);
    auto r = base("fibogenx", p, "even weight starting with (2,1^(2k-2)) has primes x^k(1-x)/(1-3x+x^2+x^k-x^(k+1))",
                  one_plus(ratio(Polynomial{1, -1}.shifted(ku), {1, -3, 1})), "F(2n-2k+1)",
                  [k](std::size_t n) {
                    const auto i = static_cast<std::int64_t>(n);
                    return i >= k ? F(2 * i - 2 * k + 1) : Integer(0);
                  });
    r.spec = fib_words.with_prefix(repeated(2, 1, 2 * ku - 2)).with_modulus(2);
    r.weight = prime_series("fibogenx_primes", {k}, forms::fibogenx_primes(ku));
    return r;
  });
  add("sgen", {"k"}, range("k", 1, 4), [](const Params& p) {
    const std::int64_t k = param(p, "k");
    require(k >= 1, "sgen", "k must be positive");
    const auto ku = static_cast<std::size_t>(k);
    auto r = base("sgen", p, "even weight starting with (1,2^(k-1)) has primes x^k/(1-3x+x^2+x^k)",
                  one_plus(ratio(x_power(ku), {1, -3, 1})), "F(2n-2k+2)",
                  [k](std::size_t n) {
                    const auto i = static_cast<std::int64_t>(n);
                    return i >= k ? F(2 * i - 2 * k + 2) : Integer(0);
                  });
    r.spec = fib_words.with_prefix(repeated(1, 2, ku - 1)).with_modulus(2);
    r.weight = prime_series("sgen_primes", {k}, forms::sgen_primes(ku));
    return r;
  });
  add("trisec0", {}, {none}, [](const Params& p) {
    auto r = base("trisec0", p, "F(3n+1) = sum 3^#{i : a_i = 1} 4^#{j : a_j != 1}", fib_multisection_gf(3, 1),
                  "F(3n+1)", [](std::size_t n) { return F(3 * n + 1); });
    r.spec = fib_words.with_modulus(3);
    r.weight = make_weight("three_four");
    return r;
  });
  add("pell", {}, {none}, [](const Params& p) {
    auto r = base("pell", p, "multiples of 3 starting with 1 have twice the Pell numbers as prime counts",
                  one_plus(ratio({0, 2}, {1, -4, -1})), "F(3n)", [](std::size_t n) { return F(3 * n); });
    r.spec = fib_words.with_prefix(Word{1}).with_modulus(3);
    r.weight = prime_series("pell_primes", {}, forms::pell_primes());
    return r;
  });
  add("f30", {}, {none}, [](const Params& p) {
    auto r = base("f30", p, "multiples of 3 starting with (1,2) have primes x(1-x)/(1-3x-2x^2)",
                  one_plus(ratio({0, 1, -1}, {1, -4, -1})), "F(3n-2)",
                  [](std::size_t n) { return F(3 * static_cast<std::int64_t>(n) - 2); });
    r.spec = fib_words.with_prefix(Word{1, 2}).with_modulus(3);
    r.weight = prime_series("f30_primes", {}, forms::f30_primes());
    return r;
  });
  return defs;
}

const std::vector<Definition>& definitions() {
  static const std::vector<Definition> defs = make_definitions();
  return defs;
}

}  // namespace

namespace forms {

RationalGF m0_primes(std::size_t m) {
  const Integer a = fibonacci(m - 1);
  const Integer b = fibonacci(m);
  return RationalGF::polynomial(poly({0, fibonacci(m + 1)})) + ratio(Polynomial::monomial(b * b, 2), poly({1, -a}));
}

RationalGF mm2_primes(std::size_t m) {
  const Integer b = fibonacci(m);
  return RationalGF::polynomial(poly({0, fibonacci(m - 1)})) +
         ratio(Polynomial::monomial(b * b, 2), poly({1, -fibonacci(m + 1)}));
}

RationalGF mm1_primes(std::size_t m) {
  const Integer sign = m % 2 == 0 ? 1 : -1;
  return ratio(poly({0, fibonacci(m)}), poly({1, -2 * fibonacci(m - 1), sign}));
}

RationalGF fibogenx_primes(std::size_t k) {
  const Polynomial den = Polynomial{1, -3, 1} + x_power(k) - x_power(k + 1);
  return ratio(Polynomial{1, -1}.shifted(k), den);
}

RationalGF sgen_primes(std::size_t k) { return ratio(x_power(k), Polynomial{1, -3, 1} + x_power(k)); }

RationalGF fmgen_primes(std::size_t k) { return ratio(x_power(k), Polynomial{1, -1, -1} + x_power(k)); }

RationalGF f30_primes() { return ratio({0, 1, -1}, {1, -3, -2}); }

RationalGF pell_primes() { return ratio({0, 2}, {1, -2, -1}); }

}  // namespace forms

const std::vector<RegistryEntry>& identity_registry() {
  static const std::vector<RegistryEntry> entries = [] {
    std::vector<RegistryEntry> out;
    for (const auto& d : definitions()) out.push_back(d.entry);
    return out;
  }();
  return entries;
}

IdentityRecord lookup_identity(std::string_view id, const Params& params) {
  const auto& defs = definitions();
  const auto it = std::find_if(defs.begin(), defs.end(), [&](const Definition& d) { return d.entry.id == id; });
  if (it == defs.end()) {
    fail(ErrorCode::unknown_name, "unknown identity '" + std::string(id) + "'; registered: " +
                                      text::join(defs, ", ", [](const Definition& d) { return d.entry.id; }));
  }
  const auto& names = it->entry.param_names;
  Params ordered;
  for (const auto& name : names) {
    const auto found = std::find_if(params.begin(), params.end(), [&](const auto& kv) { return kv.first == name; });
    if (found == params.end()) {
      fail(ErrorCode::invalid_argument, "identity '" + std::string(id) + "' needs parameter(s) " +
                                            text::join(names, ",", [](const std::string& s) { return s + "=..."; }));
    }
    ordered.push_back(*found);
  }
  for (const auto& [k, v] : params) {
    if (std::find(names.begin(), names.end(), k) == names.end()) {
      fail(ErrorCode::invalid_argument, "identity '" + std::string(id) + "' has no parameter '" + k + "'");
    }
  }
  return it->build(ordered);
}

}  // namespace fibcomp
