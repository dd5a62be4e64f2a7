#include "dk/scalar.hpp"

#include <cctype>
#include <limits>

#include "dk/error.hpp"

namespace dk {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::uint64_t reduce(long value, std::uint64_t p) {
  long m = value % static_cast<long>(p);
  if (m < 0) m += static_cast<long>(p);
  return static_cast<std::uint64_t>(m);
}

__int128 gcd128(__int128 a, __int128 b) {
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) {
  return v > std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class r = (hi << 64) + mpz_class(static_cast<unsigned long>(u & ~0ULL));
  return negative ? mpz_class(-r) : r;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw ParseError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "p:" && all_digits(text.substr(2))) {
    if (text.size() > 12) throw ParseError("prime too large: " + std::string(text));
    return prime(std::stoull(std::string(text.substr(2))));
  }
  throw ParseError("unknown field descriptor '" + std::string(text) + "' (expected q or p:<prime>)");
}

std::string Field::to_string() const {
  return is_rational() ? "q" : "p:" + std::to_string(p_);
}

Scalar::Scalar(const Field& field, long value) : field_(field) {
  if (field_.is_rational())
    set_rational(value, 1);
  else
    num_ = static_cast<std::int64_t>(reduce(value, field_.characteristic()));
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    set_rational(q);
    return;
  }
  // Map a rational into F_p; the denominator must be invertible.
  const auto p = field_.characteristic();
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (num < 0) num += p;
  if (den < 0) den += p;
  if (den == 0) throw StructuralError("denominator divisible by the characteristic");
  const auto n = num.get_ui(), d = den.get_ui();
  num_ = static_cast<std::int64_t>(n * pow_mod(d, p - 2, p) % p);
}

void Scalar::set_rational(const mpq_class& q) {
  if (mpz_fits_slong_p(q.get_num().get_mpz_t()) && mpz_fits_slong_p(q.get_den().get_mpz_t()) &&
      q.get_num() != std::numeric_limits<long>::min()) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_shared<const mpq_class>(q);
  }
}

void Scalar::set_rational(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q;
  q.get_num() = to_mpz(num);
  q.get_den() = to_mpz(den);
  big_ = std::make_shared<const mpq_class>(q);
}

mpq_class Scalar::rational() const {
  if (big_) return *big_;
  return mpq_class(static_cast<long>(num_), static_cast<unsigned long>(den_));
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  auto bad = [&] { return ParseError("malformed scalar '" + std::string(text) + "' for field " + field.to_string()); };
  if (!field.is_rational()) {
    if (!all_digits(text)) throw bad();
    const mpz_class v{std::string(text)};
    if (v >= static_cast<unsigned long>(field.characteristic())) throw bad();
    return Scalar(field, static_cast<long>(v.get_ui()));
  }
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num)) throw bad();
  if (slash != std::string_view::npos && !all_digits(den)) throw bad();
  mpq_class q;
  q.get_num() = mpz_class(std::string(num));
  q.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
  if (q.get_den() == 0) throw bad();
  if (negative) q.get_num() = -q.get_num();
  return Scalar(field, q);
}

bool Scalar::is_zero() const { return !big_ && num_ == 0; }
bool Scalar::is_one() const { return !big_ && num_ == 1 && den_ == 1; }

std::string Scalar::to_string() const {
  if (!field_.is_rational()) return std::to_string(num_);
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("mixed-field arithmetic: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (!field_.is_rational()) {
    if (num_ != 0) s.num_ = static_cast<std::int64_t>(field_.characteristic()) - num_;
  } else if (big_) {
    s.set_rational(-*big_);
  } else {
    s.num_ = -num_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw StructuralError("division by zero");
  Scalar s = *this;
  if (!field_.is_rational())
    s.num_ = static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(num_), field_.characteristic() - 2,
                                               field_.characteristic()));
  else if (big_)
    s.set_rational(mpq_class(1 / *big_));
  else
    s.set_rational(den_, num_);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (!field_.is_rational())
    num_ = static_cast<std::int64_t>((static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(o.num_)) %
                                     field_.characteristic());
  else if (big_ || o.big_)
    set_rational(mpq_class(rational() + o.rational()));
  else if (den_ == 1 && o.den_ == 1)
    set_rational(static_cast<__int128>(num_) + o.num_, 1);
  else
    set_rational(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                 static_cast<__int128>(den_) * o.den_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (!field_.is_rational())
    num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(o.num_) %
                                     field_.characteristic());
  else if (big_ || o.big_)
    set_rational(mpq_class(rational() * o.rational()));
  else
    set_rational(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

}  // namespace dk
