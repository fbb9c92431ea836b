#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace zekit {

/// A rational multiple of pi, theta = (numerator / denominator) * pi, kept in
/// lowest terms and normalized into (-pi, pi]. Sums are exact, so conditions
/// such as theta_1 + ... + theta_n = pi (mod 2 pi) are decided without
/// rounding.
class Angle {
 public:
  constexpr Angle() = default;
  Angle(std::int64_t numerator, std::int64_t denominator);

  static Angle pi() { return Angle(1, 1); }
  static Angle zero() { return Angle(0, 1); }
  /// Parses "p/q", "p" or "-p/q" as a fraction of pi.
  static Angle parse(std::string_view text);
  /// Closest fraction of pi with denominator <= max_denominator (continued
  /// fractions) to a raw angle in radians.
  static Angle approximate(double radians, std::int64_t max_denominator = 10000);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  double radians() const;
  /// exp(i theta), exact for multiples of pi/2.
  std::complex<double> gamma() const;
  /// Principal square root of gamma: exp(i theta / 2).
  std::complex<double> half_gamma() const;
  /// |theta| as a fraction of pi (in [0, 1]).
  Angle abs() const { return Angle(num_ < 0 ? -num_ : num_, den_); }

  Angle operator+(const Angle& other) const;
  Angle operator-(const Angle& other) const;
  Angle operator-() const;

  friend bool operator==(const Angle&, const Angle&) = default;

  /// "p/q" (or "p" when q == 1), the inverse of parse.
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Angle sum(std::span<const Angle> angles);

/// Sum of |theta_i| in radians, without wrapping.
double abs_sum_radians(std::span<const Angle> angles);

}  // namespace zekit
