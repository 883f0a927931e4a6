#include "broomlab/bounds.hpp"

#include "broomlab/error.hpp"

#include <string>

namespace broomlab {

std::string_view to_string(BoundSource source) noexcept {
  switch (source) {
    case BoundSource::OddCliqueConstruction: return "odd-clique-construction";
    case BoundSource::OddUpperBound: return "odd-t-upper-bound";
    case BoundSource::SpecialEvenExact: return "special-even-t";
    case BoundSource::PowerOfTwoExact: return "power-of-2-extremal-number";
    case BoundSource::MultipleOfFourUpperBound: return "multiple-of-4-upper-bound";
    case BoundSource::PowerOfThreeConstruction: return "power-of-3-lower-bound";
    case BoundSource::EvenUpperBound: return "even-t-upper-bound";
    case BoundSource::CliqueCopies: return "clique-copies";
  }
  return "unknown";
}

std::optional<int> exponent_if_power(long long value, int base) {
  if (value < 1 || base < 2) return std::nullopt;
  int exp = 0;
  while (value % base == 0) {
    value /= base;
    ++exp;
  }
  if (value != 1) return std::nullopt;
  return exp;
}

bool is_power_of_two(long long value) { return exponent_if_power(value, 2).has_value(); }

bool is_power_of_three_minus_one(long long t) {
  auto s = exponent_if_power(t + 1, 3);
  return s && *s >= 2;
}

Rational general_broom_upper_bound(int t, int ell) {
  if (ell != 3) {
    throw Error(ErrorCode::InvalidParameter, "general broom bound quoted for ell = 3 only");
  }
  if (3 * ell - 4 > t) {
    throw Error(ErrorCode::InvalidParameter, "general broom bound needs 3 ell - 4 <= t");
  }
  return Rational(t + ell - 2, 2);
}

BoundsReport bounds_for(int t) {
  if (t < 3) {
    throw Error(ErrorCode::InvalidParameter, "bounds need t >= 3, got " + std::to_string(t));
  }
  BoundsReport r;
  r.t = t;
  if (t >= 5) r.general_advisory = general_broom_upper_bound(t, 3);
  const Rational half_t(t, 2);

  if (t % 2 == 1) {
    r.lower = r.upper = half_t;
    r.lower_source = BoundSource::OddCliqueConstruction;
    r.upper_source = BoundSource::OddUpperBound;
  } else if (auto s = exponent_if_power(t + 2, 2); s && *s >= 3) {
    r.lower = r.upper = Rational(t + 1, 2);
    r.lower_source = r.upper_source = BoundSource::SpecialEvenExact;
  } else if (is_power_of_two(t)) {
    r.lower = r.upper = half_t;
    r.lower_source = r.upper_source = BoundSource::PowerOfTwoExact;
  } else {
    if (is_power_of_three_minus_one(t)) {
      r.lower = half_t;
      r.lower_source = BoundSource::PowerOfThreeConstruction;
    } else {
      r.lower = Rational(t - 1, 2);
      r.lower_source = BoundSource::CliqueCopies;
    }
    if (t % 4 == 0) {
      r.upper = half_t;
      r.upper_source = BoundSource::MultipleOfFourUpperBound;
    } else {
      r.upper = Rational(t + 1, 2) - Rational(1, t + 2);
      r.upper_source = BoundSource::EvenUpperBound;
    }
  }
  r.exact = r.lower == r.upper;
  return r;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_bounds(const BoundsReport& report) {
  if (report.exact) return "exact " + format_rational(report.lower);
  return "[" + format_rational(report.lower) + ", " + format_rational(report.upper) + "]";
}

}  // namespace broomlab
