#pragma once

#include "broomlab/graph.hpp"

#include <optional>
#include <string_view>

namespace broomlab {

/// Results bounding the leading coefficient of ex*(n, B_{t,3}).
enum class BoundSource {
  OddCliqueConstruction,      // disjoint K_{t+1}, t odd
  OddUpperBound,              // t odd: t/2
  SpecialEvenExact,           // t = 2^s - 2: (t+1)/2
  PowerOfTwoExact,            // t = 2^s: t/2
  MultipleOfFourUpperBound,   // t = 0 mod 4: t/2
  PowerOfThreeConstruction,   // t = 3^s - 1: t/2
  EvenUpperBound,             // t even, t != 2^s - 2: (t+1)/2 - 1/(t+2)
  CliqueCopies,               // disjoint K_t: (t-1)/2
};

std::string_view to_string(BoundSource source) noexcept;

struct BoundsReport {
  int t = 0;
  Rational lower;
  Rational upper;
  bool exact = false;
  BoundSource lower_source{};
  BoundSource upper_source{};
  // General handle-length bound (t + ell - 2)/2 for ell = 3; it needs t >= 5.
  std::optional<Rational> general_advisory;
};

/// Requires t >= 3.
BoundsReport bounds_for(int t);

/// (t + ell - 2) / 2 when 3 ell - 4 <= t; only ell = 3 is accepted.
Rational general_broom_upper_bound(int t, int ell);

std::optional<int> exponent_if_power(long long value, int base);
bool is_power_of_two(long long value);
bool is_power_of_three_minus_one(long long t);

/// "exact 9/2" or "[9/2, 65/12]".
std::string format_bounds(const BoundsReport& report);
std::string format_rational(const Rational& r);

}  // namespace broomlab
