#include "fibcomp/series.hpp"

#include "fibcomp/error.hpp"
#include "text.hpp"

#include <algorithm>
#include <utility>

namespace fibcomp {

namespace {

Integer parse_coefficient(std::string_view token) {
  token = text::trim(token);
  if (!text::is_integer_literal(token)) {
    fail(ErrorCode::parse_error, "bad coefficient '" + std::string(token) + "'");
  }
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  return Integer(std::string(token));
}

std::vector<Integer> parse_coefficients(std::string_view text) {
  text = text::trim(text);
  if (text.empty()) fail(ErrorCode::parse_error, "empty coefficient list");
  std::vector<Integer> out;
  for (auto token : text::split(text, ',')) out.push_back(parse_coefficient(token));
  return out;
}

std::string coefficients_to_string(std::span<const Integer> coeffs) {
  return text::join(coeffs, ",", [](const Integer& c) { return c.str(); });
}

Integer sign_power(std::size_t k) { return (k % 2 == 0) ? Integer(1) : Integer(-1); }

}  // namespace

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::monomial(Integer coeff, std::size_t degree) {
  std::vector<Integer> c(degree + 1);
  c[degree] = std::move(coeff);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Integer> c(coeffs_);
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Integer& k, const Polynomial& p) {
  std::vector<Integer> c(p.coeffs_);
  for (auto& x : c) x *= k;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> c(k);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(c));
}

Polynomial Polynomial::parse(std::string_view text) { return Polynomial(parse_coefficients(text)); }

std::string Polynomial::to_string() const {
  return is_zero() ? std::string("0") : coefficients_to_string(coeffs_);
}

// ----------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(ErrorCode::invalid_argument, "a series needs at least c_0");
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<Integer>(order + 1));
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  auto s = zero(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  std::vector<Integer> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) c[i] = p[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    fail(ErrorCode::domain_error, "cannot extend a series known through x^" +
                                      std::to_string(this->order()) + " to x^" +
                                      std::to_string(order));
  }
  return TruncatedSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = k; i < c.size(); ++i) c[i] = coeffs_[i - k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<Integer> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = f.coeffs_[i] + g.coeffs_[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<Integer> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = f.coeffs_[i] - g.coeffs_[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<Integer> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const Integer& k, const TruncatedSeries& f) {
  std::vector<Integer> c(f.coeffs_);
  for (auto& x : c) x *= k;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::parse(std::string_view text) {
  return TruncatedSeries(parse_coefficients(text));
}

TruncatedSeries TruncatedSeries::parse(std::string_view text, std::size_t order) {
  auto c = parse_coefficients(text);
  c.resize(order + 1);
  return TruncatedSeries(std::move(c));
}

std::string TruncatedSeries::to_string() const { return coefficients_to_string(coeffs_); }

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) { return f * g; }

TruncatedSeries geometric_inverse(const TruncatedSeries& f) {
  if (f[0] != 0) {
    fail(ErrorCode::domain_error,
         "geometric inverse needs a zero constant term, got " + f[0].str());
  }
  const std::size_t n = f.order();
  std::vector<Integer> g(n + 1);
  g[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (f[i] != 0) acc += f[i] * g[k - i];
    }
    g[k] = std::move(acc);
  }
  return TruncatedSeries(std::move(g));
}

// ---------------------------------------------------------------- RationalGF

RationalGF::RationalGF(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_[0] == 0) {
    fail(ErrorCode::domain_error, "denominator " + den_.to_string() + " has zero constant term");
  }
}

TruncatedSeries RationalGF::expand(std::size_t order) const { return rational_to_series(*this, order); }

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
  if (a.den_ == b.den_) return RationalGF(a.num_ + b.num_, a.den_);
  return RationalGF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalGF operator-(const RationalGF& a, const RationalGF& b) {
  return a + RationalGF(-b.num_, b.den_);
}

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
  return RationalGF(a.num_ * b.num_, a.den_ * b.den_);
}

RationalGF RationalGF::shifted(std::size_t k) const { return RationalGF(num_.shifted(k), den_); }

RationalGF RationalGF::constant(long long c) { return RationalGF(Polynomial{c}, Polynomial{1}); }

RationalGF RationalGF::polynomial(Polynomial p) { return RationalGF(std::move(p), Polynomial{1}); }

std::string RationalGF::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalGF RationalGF::parse(std::string_view text) {
  text = text::trim(text);
  const auto slash = text.find(")/(");
  if (text.size() < 7 || text.front() != '(' || text.back() != ')' ||
      slash == std::string_view::npos) {
    fail(ErrorCode::parse_error, "expected '(num)/(den)', got '" + std::string(text) + "'");
  }
  return RationalGF(Polynomial::parse(text.substr(1, slash - 1)),
                    Polynomial::parse(text.substr(slash + 3, text.size() - slash - 4)));
}

TruncatedSeries rational_to_series(const RationalGF& r, std::size_t order) {
  const Polynomial& num = r.numerator();
  const Polynomial& den = r.denominator();
  const Integer& d0 = den.coefficients().front();
  const std::size_t den_len = den.coefficients().size();
  std::vector<Integer> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Integer acc = num[n];
    for (std::size_t i = 1; i < den_len && i <= n; ++i) acc -= den.coefficients()[i] * c[n - i];
    if (d0 == 1) {
      c[n] = std::move(acc);
    } else if (d0 == -1) {
      c[n] = -acc;
    } else {
      Integer q, rem;
      boost::multiprecision::divide_qr(acc, d0, q, rem);
      if (rem != 0) {
        fail(ErrorCode::domain_error, "expansion of " + r.to_string() +
                                          " is not integral at x^" + std::to_string(n));
      }
      c[n] = std::move(q);
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries multisect(const TruncatedSeries& f, std::size_t modulus, std::size_t residue) {
  if (modulus == 0) fail(ErrorCode::domain_error, "multisection modulus must be at least 1");
  if (residue >= modulus) {
    fail(ErrorCode::domain_error, "residue " + std::to_string(residue) +
                                      " out of range for modulus " + std::to_string(modulus));
  }
  if (residue > f.order()) {
    fail(ErrorCode::domain_error, "residue " + std::to_string(residue) +
                                      " exceeds the series order " + std::to_string(f.order()));
  }
  const std::size_t n = (f.order() - residue) / modulus;
  std::vector<Integer> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = f[modulus * i + residue];
  return TruncatedSeries(std::move(c));
}

// -------------------------------------------------------- Fibonacci / Lucas

std::vector<Integer> fibonacci_table(std::size_t count) {
  std::vector<Integer> f(count);
  for (std::size_t i = 0; i < count; ++i) f[i] = i < 2 ? Integer(i) : f[i - 1] + f[i - 2];
  return f;
}

FibLucas fib_lucas(std::size_t n) {
  // F_{n-1}, F_n, F_{n+1} by the recurrence; L_n = F_{n-1} + F_{n+1}.
  Integer prev = 1, cur = 0;  // F_{-1}, F_0
  for (std::size_t i = 0; i < n; ++i) {
    Integer next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  Integer next = prev + cur;
  return {cur, prev + next};
}

Integer fibonacci(std::size_t n) { return fib_lucas(n).fibonacci; }

Integer lucas(std::size_t n) { return fib_lucas(n).lucas; }

RationalGF fib_multisection_gf(std::size_t modulus, std::size_t residue) {
  if (modulus == 0) fail(ErrorCode::domain_error, "multisection modulus must be at least 1");
  if (residue > modulus) {
    fail(ErrorCode::domain_error, "residue " + std::to_string(residue) + " exceeds modulus " +
                                      std::to_string(modulus));
  }
  const Integer fj = fibonacci(residue);
  const Integer fmj = fibonacci(modulus - residue);
  Polynomial num(std::vector<Integer>{fj, sign_power(residue) * fmj});
  Polynomial den(std::vector<Integer>{Integer(1), -lucas(modulus), sign_power(modulus)});
  return RationalGF(std::move(num), std::move(den));
}

}  // namespace fibcomp
