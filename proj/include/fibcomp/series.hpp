#pragma once

// Exact truncated power series and rational generating functions in one
// variable, with arbitrary-precision integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibcomp {

using Integer = boost::multiprecision::cpp_int;

/// Dense integer polynomial, lowest degree first. Trailing zero coefficients
/// are dropped, so the zero polynomial has no coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  Polynomial(std::initializer_list<long long> coeffs);

  static Polynomial monomial(Integer coeff, std::size_t degree);

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Integer operator[](std::size_t i) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Integer& c, const Polynomial& p);
  Polynomial operator-() const;
  Polynomial shifted(std::size_t k) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// "0,1,1" is x + x^2. The zero polynomial prints as "0".
  static Polynomial parse(std::string_view text);
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Coefficients c_0..c_N of a formal power series known exactly through x^N.
/// Binary operations on series of different orders truncate to the smaller.
class TruncatedSeries {
 public:
  /// `coeffs` must be nonempty; the order is coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<Integer> coeffs);

  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries one(std::size_t order);
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Integer& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const;
  /// Multiplies by x^k, keeping the order.
  TruncatedSeries shifted(std::size_t k) const;

  friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator*(const Integer& c, const TruncatedSeries& f);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Comma-separated coefficients. Without an explicit order the series is
  /// known through the last listed coefficient; with one, it is zero-padded or
  /// truncated to that order.
  static TruncatedSeries parse(std::string_view text);
  static TruncatedSeries parse(std::string_view text, std::size_t order);
  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// (1 - f)^{-1}; requires f to have zero constant term.
TruncatedSeries geometric_inverse(const TruncatedSeries& f);

/// Numerator over denominator; the denominator's constant term is nonzero.
class RationalGF {
 public:
  RationalGF(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  TruncatedSeries expand(std::size_t order) const;

  friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
  /// x^k * r
  RationalGF shifted(std::size_t k) const;

  static RationalGF constant(long long c);
  static RationalGF polynomial(Polynomial p);

  /// "(num)/(den)", e.g. "(0,1)/(1,-1,-1)" for x/(1-x-x^2).
  std::string to_string() const;
  static RationalGF parse(std::string_view text);

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Expansion via c_n = (num_n - sum_{i>=1} den_i c_{n-i}) / den_0. Division
/// must be exact at every step.
TruncatedSeries rational_to_series(const RationalGF& r, std::size_t order);

/// Coefficient n of the result is coefficient (modulus*n + residue) of f.
TruncatedSeries multisect(const TruncatedSeries& f, std::size_t modulus, std::size_t residue);

struct FibLucas {
  Integer fibonacci;
  Integer lucas;
};

FibLucas fib_lucas(std::size_t n);
Integer fibonacci(std::size_t n);
Integer lucas(std::size_t n);
/// F_0..F_{count-1}.
std::vector<Integer> fibonacci_table(std::size_t count);

/// sum_n F_{mn+j} x^n = (F_j + (-1)^j F_{m-j} x) / (1 - L_m x + (-1)^m x^2)
RationalGF fib_multisection_gf(std::size_t modulus, std::size_t residue);

}  // namespace fibcomp
