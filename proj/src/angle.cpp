#include "zekit/angle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "zekit/errors.hpp"

namespace zekit {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::complex<double> unit_phase(std::int64_t num, std::int64_t den) {
  // exp(i pi num / den) with num/den already in (-1, 1].
  if (den == 1) return num == 0 ? std::complex<double>{1.0, 0.0} : std::complex<double>{-1.0, 0.0};
  if (den == 2) return num > 0 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  const double t = std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(t), std::sin(t)};
}

}  // namespace

Angle::Angle(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidInput("Angle: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  std::int64_t g = std::gcd(numerator, denominator);
  if (g == 0) g = 1;
  numerator /= g;
  denominator /= g;
  // Wrap into (-den, den].
  std::int64_t r = floor_mod(numerator, 2 * denominator);
  if (r > denominator) r -= 2 * denominator;
  g = std::gcd(r, denominator);
  if (g == 0) g = 1;
  num_ = r / g;
  den_ = denominator / g;
  if (num_ == 0) den_ = 1;
}

Angle Angle::parse(std::string_view text) {
  auto to_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw InvalidInput("Angle: cannot parse '" + std::string(text) + "'");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(std::string(s), &pos);
    } catch (const std::exception&) {
      throw InvalidInput("Angle: cannot parse '" + std::string(text) + "'");
    }
    if (pos != s.size()) throw InvalidInput("Angle: cannot parse '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Angle(to_int(text), 1);
  return Angle(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

Angle Angle::approximate(double radians, std::int64_t max_denominator) {
  if (!std::isfinite(radians)) throw InvalidInput("Angle: non-finite raw angle");
  double x = radians / std::numbers::pi;
  // Best rational approximation via continued fraction convergents.
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double frac = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(frac);
    const auto a = static_cast<std::int64_t>(fl);
    const std::int64_t h2 = a * h1 + h0;
    const std::int64_t k2 = a * k1 + k0;
    if (k2 > max_denominator) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (k1 == 0) return Angle(static_cast<std::int64_t>(std::llround(x)), 1);
  return Angle(h1, k1);
}

double Angle::radians() const {
  return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
}

std::complex<double> Angle::gamma() const { return unit_phase(num_, den_); }

std::complex<double> Angle::half_gamma() const {
  // theta / 2 lies in (-pi/2, pi/2], so no wrapping happens.
  return Angle(num_, 2 * den_).gamma();
}

Angle Angle::operator+(const Angle& other) const {
  const std::int64_t l = std::lcm(den_, other.den_);
  return Angle(num_ * (l / den_) + other.num_ * (l / other.den_), l);
}

Angle Angle::operator-(const Angle& other) const { return *this + (-other); }

Angle Angle::operator-() const { return Angle(-num_, den_); }

std::string Angle::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Angle sum(std::span<const Angle> angles) {
  Angle total;
  for (const auto& a : angles) total = total + a;
  return total;
}

double abs_sum_radians(std::span<const Angle> angles) {
  double s = 0.0;
  for (const auto& a : angles) s += std::abs(a.radians());
  return s;
}

}  // namespace zekit
