#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "hombax/errors.hpp"

namespace hombax {

enum class FieldKind { rational, prime };

// Ground field descriptor: the rationals or GF(p) for a prime p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(FieldKind::rational, 0); }
  // Validates primality by trial division; rejects p >= 2^31.
  static FieldSpec prime(std::int64_t p);

  FieldKind kind() const { return kind_; }
  std::int64_t p() const { return p_; }
  bool is_rational() const { return kind_ == FieldKind::rational; }

  bool operator==(const FieldSpec& o) const = default;

  std::string to_string() const;

 private:
  FieldSpec(FieldKind k, std::int64_t p) : kind_(k), p_(p) {}

  FieldKind kind_ = FieldKind::rational;
  std::int64_t p_ = 0;
};

enum class ScalarOp { add, sub, mul, div };

// Exact field element. Rationals are kept canonical (reduced, positive
// denominator) by GMP; GF(p) residues are kept in [0, p).
class FieldScalar {
 public:
  FieldScalar() : spec_(FieldSpec::rationals()), v_(mpq_class(0)) {}

  static FieldScalar zero(const FieldSpec& f);
  static FieldScalar one(const FieldSpec& f);
  static FieldScalar from_int(const FieldSpec& f, std::int64_t v);
  static FieldScalar rational(const mpq_class& q);

  const FieldSpec& field() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;  // DivisionByZero
  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  // Canonical text form: "n" or "n/d" for rationals, the residue for GF(p).
  std::string to_string() const;

  // GF(p) residue in [0, p). Only valid on prime-field scalars.
  std::int64_t residue() const;
  const mpq_class& value() const;  // only valid on rational scalars

 private:
  FieldScalar(FieldSpec f, std::int64_t r) : spec_(f), v_(r) {}
  FieldScalar(FieldSpec f, mpq_class q) : spec_(f), v_(std::move(q)) {}

  void require_same_field(const FieldScalar& o) const;

  FieldSpec spec_;
  std::variant<std::int64_t, mpq_class> v_;
};

// Grammar: optional sign, digits, optionally "/" and a nonzero integer.
// Fraction syntax is rejected under GF(p); integers reduce mod p.
FieldScalar parse_scalar(const std::string& text, const FieldSpec& f);

FieldScalar scalar_arith(const FieldScalar& a, const FieldScalar& b, ScalarOp op);

}  // namespace hombax
