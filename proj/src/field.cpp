#include "whopf/field.hpp"

#include <cstdlib>

namespace whopf {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint32_t b, std::uint32_t e, std::uint32_t p) {
  std::uint64_t r = 1, x = b % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p > 97 || !is_prime(p))
    throw Error(ErrorCode::FieldMismatch, "GF(p) requires a prime 2 <= p <= 97, got " + std::to_string(p));
  return FieldSpec{p};
}

std::string FieldSpec::name() const { return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")"; }

std::uint64_t FieldSpec::size() const {
  if (p == 0) throw Error(ErrorCode::NotEnumerable, "the rationals are not enumerable");
  return p;
}

Scalar::Scalar(FieldSpec f, long v) : field_(f) {
  if (f.is_finite())
    value_ = reduce(v, f.p);
  else
    value_ = mpq_class(v);
}

Scalar::Scalar(FieldSpec f, const mpq_class& v) : field_(f) {
  if (f.is_finite()) {
    std::uint32_t den = reduce_mpz(v.get_den(), f.p);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes in " + f.name());
    std::uint64_t num = reduce_mpz(v.get_num(), f.p);
    value_ = static_cast<std::uint32_t>(num * pow_mod(den, f.p - 2, f.p) % f.p);
  } else {
    mpq_class q = v;
    q.canonicalize();
    value_ = q;
  }
}

Scalar Scalar::parse(FieldSpec f, const std::string& text) {
  mpq_class q;
  try {
    std::string t = text;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    if (t.empty() || q.set_str(t, 10) != 0) throw Error(ErrorCode::ParseError, "bad scalar '" + text + "'");
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad scalar '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_zero() const {
  if (field_.is_finite()) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_finite()) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_finite()) throw Error(ErrorCode::FieldMismatch, "residue() over Q");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (field_.is_finite()) throw Error(ErrorCode::FieldMismatch, "rational() over GF(p)");
  return std::get<mpq_class>(value_);
}

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error(ErrorCode::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (field_.is_finite()) {
    Scalar r = *this;
    r.value_ = pow_mod(std::get<std::uint32_t>(value_), field_.p - 2, field_.p);
    return r;
  }
  return Scalar(field_, mpq_class(1) / std::get<mpq_class>(value_));
}

std::string Scalar::to_string() const {
  if (field_.is_finite()) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (field_.is_finite()) {
    auto& a = std::get<std::uint32_t>(value_);
    a = (a + std::get<std::uint32_t>(o.value_)) % field_.p;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  if (field_.is_finite()) {
    auto& a = std::get<std::uint32_t>(value_);
    a = (a + field_.p - std::get<std::uint32_t>(o.value_)) % field_.p;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (field_.is_finite()) {
    auto& a = std::get<std::uint32_t>(value_);
    a = static_cast<std::uint32_t>(std::uint64_t(a) * std::get<std::uint32_t>(o.value_) % field_.p);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar Scalar::operator-() const { return Scalar::zero(field_) - *this; }

bool operator==(const Scalar& a, const Scalar& b) {
  a.check(b);
  return a.value_ == b.value_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.check(b);
  return a.value_ < b.value_;
}

std::vector<Scalar> enumerate_scalars(FieldSpec f) {
  std::vector<Scalar> out;
  for (std::uint64_t i = 0; i < f.size(); ++i) out.emplace_back(f, static_cast<long>(i));
  return out;
}

}  // namespace whopf
