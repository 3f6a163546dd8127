#include "hombax/scalar.hpp"

#include <cctype>

namespace hombax {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::schema_error: return "SchemaError";
    case Errc::shape_error: return "ShapeError";
    case Errc::dim_mismatch: return "DimMismatch";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::missing_companion: return "MissingCompanion";
    case Errc::space_too_large: return "SpaceTooLarge";
    case Errc::unknown_name: return "UnknownName";
    case Errc::unsupported_dim: return "UnsupportedDim";
    case Errc::invalid_input: return "InvalidInput";
    case Errc::not_associative: return "NotAssociative";
    case Errc::not_morphism: return "NotMorphism";
    case Errc::not_weighted_rb: return "NotWeightedRB";
    case Errc::not_yb_pair: return "NotYBPair";
    case Errc::not_pseudotwistor: return "NotPseudotwistor";
    case Errc::not_invariant: return "NotInvariant";
    case Errc::invalid_system: return "InvalidSystem";
  }
  return "Error";
}

bool errc_is_check_failure(Errc c) {
  switch (c) {
    case Errc::not_associative:
    case Errc::not_morphism:
    case Errc::not_weighted_rb:
    case Errc::not_yb_pair:
    case Errc::not_pseudotwistor:
    case Errc::not_invariant:
    case Errc::invalid_system:
      return true;
    default:
      return false;
  }
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p >= (std::int64_t(1) << 31))
    fail(Errc::invalid_input, "prime modulus must be < 2^31, got " + std::to_string(p));
  if (p < 2) fail(Errc::invalid_input, "prime modulus must be >= 2, got " + std::to_string(p));
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      fail(Errc::invalid_input, std::to_string(p) + " is not prime");
  return FieldSpec(FieldKind::prime, p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Inverse of a mod p via extended Euclid; a must be nonzero mod p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_t = 1, t = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return mod_reduce(old_t, p);
}

}  // namespace

FieldScalar FieldScalar::zero(const FieldSpec& f) { return from_int(f, 0); }
FieldScalar FieldScalar::one(const FieldSpec& f) { return from_int(f, 1); }

FieldScalar FieldScalar::from_int(const FieldSpec& f, std::int64_t v) {
  if (f.is_rational()) return FieldScalar(f, mpq_class(static_cast<long>(v)));
  return FieldScalar(f, mod_reduce(v, f.p()));
}

FieldScalar FieldScalar::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return FieldScalar(FieldSpec::rationals(), c);
}

bool FieldScalar::is_zero() const {
  if (spec_.is_rational()) return std::get<mpq_class>(v_) == 0;
  return std::get<std::int64_t>(v_) == 0;
}

bool FieldScalar::is_one() const {
  if (spec_.is_rational()) return std::get<mpq_class>(v_) == 1;
  return std::get<std::int64_t>(v_) == 1 % spec_.p();
}

void FieldScalar::require_same_field(const FieldScalar& o) const {
  if (spec_ != o.spec_)
    fail(Errc::field_mismatch,
         "operands over " + spec_.to_string() + " and " + o.spec_.to_string());
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  require_same_field(o);
  if (spec_.is_rational())
    return FieldScalar(spec_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
  return FieldScalar(spec_, mod_reduce(std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_), spec_.p()));
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  require_same_field(o);
  if (spec_.is_rational())
    return FieldScalar(spec_, mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
  return FieldScalar(spec_, mod_reduce(std::get<std::int64_t>(v_) - std::get<std::int64_t>(o.v_), spec_.p()));
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  require_same_field(o);
  if (spec_.is_rational())
    return FieldScalar(spec_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
  // residues are < 2^31, so the product fits in a signed 64-bit value
  return FieldScalar(spec_, mod_reduce(std::get<std::int64_t>(v_) * std::get<std::int64_t>(o.v_), spec_.p()));
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
  require_same_field(o);
  if (o.is_zero()) fail(Errc::division_by_zero, "division by zero in " + spec_.to_string());
  if (spec_.is_rational())
    return FieldScalar(spec_, mpq_class(std::get<mpq_class>(v_) / std::get<mpq_class>(o.v_)));
  std::int64_t inv = mod_inverse(std::get<std::int64_t>(o.v_), spec_.p());
  return FieldScalar(spec_, mod_reduce(std::get<std::int64_t>(v_) * inv, spec_.p()));
}

FieldScalar FieldScalar::operator-() const {
  if (spec_.is_rational()) return FieldScalar(spec_, mpq_class(-std::get<mpq_class>(v_)));
  return FieldScalar(spec_, mod_reduce(-std::get<std::int64_t>(v_), spec_.p()));
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  if (spec_ != o.spec_) return false;
  if (spec_.is_rational()) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
  return std::get<std::int64_t>(v_) == std::get<std::int64_t>(o.v_);
}

std::string FieldScalar::to_string() const {
  if (spec_.is_rational()) return std::get<mpq_class>(v_).get_str();
  return std::to_string(std::get<std::int64_t>(v_));
}

std::int64_t FieldScalar::residue() const {
  if (spec_.is_rational()) fail(Errc::field_mismatch, "residue() on a rational scalar");
  return std::get<std::int64_t>(v_);
}

const mpq_class& FieldScalar::value() const {
  if (!spec_.is_rational()) fail(Errc::field_mismatch, "value() on a GF(p) scalar");
  return std::get<mpq_class>(v_);
}

FieldScalar parse_scalar(const std::string& text, const FieldSpec& f) {
  auto bad = [&](const std::string& why) -> void {
    fail(Errc::parse_error, "\"" + text + "\": " + why);
  };

  std::size_t i = 0;
  auto scan_int = [&]() -> std::string {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0) bad("expected an integer");
    std::string tok = text.substr(start, i - start);
    if (tok[0] == '+') tok.erase(0, 1);  // mpz_class rejects a leading '+'
    return tok;
  };

  std::string num = scan_int();
  std::string den;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = scan_int();
  }
  if (i != text.size()) bad("trailing characters");

  if (!f.is_rational()) {
    if (!den.empty()) bad("fraction syntax is not allowed over " + f.to_string());
    mpz_class n(num);
    mpz_class r = n % f.p();
    if (r < 0) r += f.p();
    return FieldScalar::from_int(f, r.get_si());
  }

  mpz_class n(num);
  if (den.empty()) return FieldScalar::rational(mpq_class(n));
  mpz_class d(den);
  if (d == 0) fail(Errc::division_by_zero, "\"" + text + "\": zero denominator");
  return FieldScalar::rational(mpq_class(n) / mpq_class(d));
}

FieldScalar scalar_arith(const FieldScalar& a, const FieldScalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::add: return a + b;
    case ScalarOp::sub: return a - b;
    case ScalarOp::mul: return a * b;
    case ScalarOp::div: return a / b;
  }
  fail(Errc::invalid_input, "unknown scalar op");
}

}  // namespace hombax
