#ifndef MALCEV_RATIONAL_HPP
#define MALCEV_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace malcev {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a shared, immutable GMP rational. The
/// representation is canonical: a value that fits inline is never stored
/// big, so equality can compare representations directly.
class Rational {
public:
  Rational() = default;
  Rational(long long value) : num_(value) {} // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& value);

  /// Parses "p/q" or "p" (base 10, optional leading '-', no whitespace).
  static Rational parse(std::string_view text);

  /// Canonical "p/q" form, or "p" when the denominator is 1.
  std::string str() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
  static Rational from_wide(__int128 num, __int128 den);
  void assign_mpq(const mpq_class& value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

} // namespace malcev

#endif
