/*
 * fraction.hpp - exact rationals for diagram coordinates, twists and slopes.
 *
 * Values are kept in lowest terms with a positive denominator.  Storage is
 * 64-bit; intermediate products are formed in 128 bits and any result that
 * does not fit throws std::overflow_error.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mslopes {

namespace detail {
__extension__ typedef __int128 i128;

inline i128 gcd128(i128 a, i128 b) noexcept {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

class Fraction {
 public:
  constexpr Fraction() noexcept = default;
  // Implicit on purpose: integers appear everywhere in the formulas.
  constexpr Fraction(std::int64_t n) noexcept : num_(n) {}  // NOLINT

  /// Reduce num/den; throws std::domain_error if den == 0.
  static Fraction reduce(std::int64_t num, std::int64_t den);
  /// Parse "p/q", "p" or "-p/q" (whitespace tolerated around tokens).
  static Fraction parse(std::string_view text);

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }
  constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  std::int64_t floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  std::int64_t ceil() const noexcept { return -Fraction(-num_, den_, raw_tag{}).floor(); }
  Fraction abs() const noexcept { return Fraction(num_ < 0 ? -num_ : num_, den_, raw_tag{}); }
  Fraction operator-() const noexcept { return Fraction(-num_, den_, raw_tag{}); }

  std::string str() const;

  friend Fraction operator+(Fraction a, Fraction b) {
    using detail::i128;
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Fraction operator-(Fraction a, Fraction b) {
    using detail::i128;
    return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Fraction operator*(Fraction a, Fraction b) {
    using detail::i128;
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Fraction operator/(Fraction a, Fraction b) {
    using detail::i128;
    if (b.num_ == 0) throw std::domain_error("division by zero fraction");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Fraction& operator+=(Fraction o) { return *this = *this + o; }
  Fraction& operator-=(Fraction o) { return *this = *this - o; }
  Fraction& operator*=(Fraction o) { return *this = *this * o; }
  Fraction& operator/=(Fraction o) { return *this = *this / o; }

  friend constexpr bool operator==(Fraction, Fraction) noexcept = default;
  friend std::strong_ordering operator<=>(Fraction a, Fraction b) noexcept {
    using detail::i128;
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  struct raw_tag {};
  constexpr Fraction(std::int64_t n, std::int64_t d, raw_tag) noexcept : num_(n), den_(d) {}

  static Fraction from128(detail::i128 n, detail::i128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    constexpr detail::i128 lim = INT64_MAX;
    if (n <= lim && n >= -lim && d <= lim) {
      auto sn = static_cast<std::int64_t>(n), sd = static_cast<std::int64_t>(d);
      std::int64_t g = std::gcd(sn, sd);
      if (g > 1) {
        sn /= g;
        sd /= g;
      }
      return Fraction(sn, sd, raw_tag{});
    }
    detail::i128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("fraction overflow");
    return Fraction(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), raw_tag{});
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Fraction Fraction::reduce(std::int64_t num, std::int64_t den) {
  return from128(num, den);
}

inline Fraction abs(Fraction f) noexcept { return f.abs(); }

std::ostream& operator<<(std::ostream& os, Fraction f);

}  // namespace mslopes
