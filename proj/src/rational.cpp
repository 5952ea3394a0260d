#include "malcev/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace malcev {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kInlineMax = std::numeric_limits<std::int64_t>::max();

u128 magnitude(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    auto x = static_cast<std::uint64_t>(a);
    auto y = static_cast<std::uint64_t>(b);
    while (y != 0) {
      std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    return x;
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_inline(i128 v) { return v <= kInlineMax && v >= -kInlineMax; }

mpz_class to_mpz(i128 v) {
  u128 mag = magnitude(v);
  std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  mpz_class out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (v < 0) out = -out;
  return out;
}

bool mpz_fits_inline(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
}

std::int64_t mpz_to_i64(const mpz_class& z) {
  // Caller guarantees |z| < 2^63.
  std::uint64_t word = 0;
  std::size_t count = 0;
  mpz_export(&word, &count, -1, sizeof(word), 0, 0, z.get_mpz_t());
  auto mag = static_cast<std::int64_t>(word);
  return sgn(z) < 0 ? -mag : mag;
}

bool valid_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

} // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& value) { assign_mpq(value); }

void Rational::assign_mpq(const mpq_class& value) {
  // mpq_class values produced by gmpxx arithmetic are canonical.
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (mpz_fits_inline(n) && mpz_fits_inline(d)) {
    num_ = mpz_to_i64(n);
    den_ = mpz_to_i64(d);
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(value);
  }
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (num == 0) return Rational();
  if (den != 1) {
    u128 g = gcd128(magnitude(num), static_cast<u128>(den));
    if (g > 1) {
      num /= static_cast<i128>(g);
      den /= static_cast<i128>(g);
    }
  }
  Rational out;
  if (fits_inline(num) && den <= kInlineMax) {
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  out.big_ = std::make_shared<const mpq_class>(std::move(q));
  return out;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
    if (!valid_digits(den_part)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (!valid_digits(num_part)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

  mpz_class num(std::string(num_part), 10);
  mpz_class den(1);
  if (!den_part.empty()) den = mpz_class(std::string(den_part), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (big_) {
    std::string out = big_->get_num().get_str(10);
    if (big_->get_den() != 1) out += "/" + big_->get_den().get_str(10);
    return out;
  }
  std::string out = std::to_string(num_);
  if (den_ != 1) out += "/" + std::to_string(den_);
  return out;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(to_mpz(num_), to_mpz(den_));
  return q;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (big_) return Rational(mpq_class(1) / *big_);
  i128 n = den_;
  i128 d = num_;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return from_wide(n, d);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (big_ || rhs.big_) {
    assign_mpq(mpq_class(to_mpq() + rhs.to_mpq()));
    return *this;
  }
  if (den_ == 1 && rhs.den_ == 1) {
    *this = from_wide(static_cast<i128>(num_) + rhs.num_, 1);
    return *this;
  }
  i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
  i128 d = static_cast<i128>(den_) * rhs.den_;
  *this = from_wide(n, d);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (big_ || rhs.big_) {
    assign_mpq(mpq_class(to_mpq() * rhs.to_mpq()));
    return *this;
  }
  if (num_ == 0 || rhs.num_ == 0) {
    *this = Rational();
    return *this;
  }
  auto g1 = static_cast<i128>(gcd128(magnitude(num_), static_cast<u128>(rhs.den_)));
  auto g2 = static_cast<i128>(gcd128(magnitude(rhs.num_), static_cast<u128>(den_)));
  i128 n = (static_cast<i128>(num_) / g1) * (static_cast<i128>(rhs.num_) / g2);
  i128 d = (static_cast<i128>(den_) / g2) * (static_cast<i128>(rhs.den_) / g1);
  if (fits_inline(n) && d <= kInlineMax) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    return *this;
  }
  *this = from_wide(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace malcev
