#pragma once

// Prime-count generating functions of the registered monoid families.

#include "fibcomp/series.hpp"

#include <cstddef>

namespace fibcomp::forms {

/// Multiples of m: F(m+1) x + F(m)^2 x^2 / (1 - F(m-1) x).
RationalGF m0_primes(std::size_t m);
/// Multiples of m starting with 2: F(m-1) x + F(m)^2 x^2 / (1 - F(m+1) x).
RationalGF mm2_primes(std::size_t m);
/// Multiples of m starting with 1: F(m) x / (1 - 2 F(m-1) x + (-1)^m x^2).
RationalGF mm1_primes(std::size_t m);
RationalGF fibogenx_primes(std::size_t k);
RationalGF sgen_primes(std::size_t k);
RationalGF fmgen_primes(std::size_t k);
RationalGF f30_primes();
RationalGF pell_primes();

}  // namespace fibcomp::forms
