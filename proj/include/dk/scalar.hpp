#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace dk {

/// The ground field: the rationals or a prime field F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws ParseError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "p:<prime>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator, as a pair of 64-bit integers while they fit and as a shared
/// immutable GMP rational otherwise; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& f) { return Scalar(f, 0L); }
  static Scalar one(const Field& f) { return Scalar(f, 1L); }

  /// Rationals: -?digits(/digits)?, denominator positive. Prime fields: bare
  /// digits in [0, p).
  static Scalar parse(const Field& field, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  /// Exact rational value (only meaningful for the rational field).
  mpq_class rational() const;
  std::uint64_t residue() const { return static_cast<std::uint64_t>(num_); }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void check_same_field(const Scalar& o) const;
  void set_rational(const mpq_class& q);
  void set_rational(__int128 num, __int128 den);

  Field field_;
  // rationals: num_/den_ when big_ is null; prime fields: num_ is the residue
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace dk
