#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "whopf/error.hpp"

namespace whopf {

// Either the rationals (p == 0) or GF(p) for a prime 2 <= p <= 97.
struct FieldSpec {
  std::uint32_t p = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::uint32_t p);

  bool is_rational() const { return p == 0; }
  bool is_finite() const { return p != 0; }
  std::string name() const;
  // Number of elements; throws NotEnumerable over Q.
  std::uint64_t size() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), value_(mpq_class(0)) {}
  Scalar(FieldSpec f, long v);
  Scalar(FieldSpec f, const mpq_class& v);

  static Scalar zero(FieldSpec f) { return Scalar(f, 0L); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1L); }
  // Parses "a", "-a" or "a/b"; over GF(p) the fraction is reduced mod p.
  static Scalar parse(FieldSpec f, const std::string& text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  // Residue in [0, p); only meaningful over GF(p).
  std::uint32_t residue() const;
  const mpq_class& rational() const;

  Scalar inverse() const;
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Total order used only for deterministic output.
  friend bool operator<(const Scalar& a, const Scalar& b);

 private:
  void check(const Scalar& o) const;

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

// All elements of a finite field in residue order 0, 1, ..., p-1.
std::vector<Scalar> enumerate_scalars(FieldSpec f);

}  // namespace whopf
