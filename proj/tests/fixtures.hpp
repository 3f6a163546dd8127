#pragma once

// Shared instances for the unit and acceptance suites. Everything here is
// small enough to verify by hand; the nontrivial ones carry their reasons.

#include <string>
#include <vector>

#include "hombax/covariant.hpp"

namespace fx {

using namespace hombax;

inline FieldScalar sc(const FieldSpec& f, std::int64_t v) {
  return FieldScalar::from_int(f, v);
}

inline Vec unit(const FieldSpec& f, int n, int j) {
  Vec v(static_cast<std::size_t>(n), FieldScalar::zero(f));
  v[static_cast<std::size_t>(j)] = FieldScalar::one(f);
  return v;
}

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

// Zero product, identity twist. Associative for trivial reasons; every
// operator pair is a Rota-Baxter system and every tensor pair satisfies
// the Yang-Baxter equations on it.
inline HomAlgebra zero_algebra(const FieldSpec& f, int n) {
  HomAlgebra a(f, n, default_labels(n));
  a.alpha = LinearMap::identity(f, n);
  return a;
}

// Dual numbers k[x]/(x^2), basis {1, x}, identity twist.
inline HomAlgebra dual_numbers(const FieldSpec& f) {
  HomAlgebra a(f, 2, {"1", "x"});
  a.mul.at(0, 0, 0) = FieldScalar::one(f);
  a.mul.at(0, 1, 1) = FieldScalar::one(f);
  a.mul.at(1, 0, 1) = FieldScalar::one(f);
  a.alpha = LinearMap::identity(f, 2);
  return a;
}

// e.e = e, e.x = x.e = c x, x.x = 0 over GF(5), twist diag(1, c). The twist
// is multiplicative and the triple (e, e, x) forces exactly this pairing of
// the product constant with the twist eigenvalue, so the family is
// Hom-associative for every c. c = 1 is the plain dual-numbers algebra.
inline HomAlgebra dual_family_gf5(std::int64_t c) {
  FieldSpec f = FieldSpec::prime(5);
  HomAlgebra a(f, 2, {"e", "x"});
  a.mul.at(0, 0, 0) = FieldScalar::one(f);
  a.mul.at(0, 1, 1) = sc(f, c);
  a.mul.at(1, 0, 1) = sc(f, c);
  a.alpha.at(0, 0) = FieldScalar::one(f);
  a.alpha.at(1, 1) = sc(f, c);
  return a;
}

// The subalgebra x.GF(5)[x]/(x^4), basis {x, y, z} with x.x = y,
// x.y = y.x = z and all other products zero. diag(c, c^2, c^3) is an
// algebra morphism for every c, and the only nonzero associator input
// (x, x, x) gives c^3 z on both sides, so the family is Hom-associative.
// z annihilates the algebra.
inline HomAlgebra p3_nilpotent(std::int64_t c) {
  FieldSpec f = FieldSpec::prime(5);
  HomAlgebra a(f, 3, {"x", "y", "z"});
  a.mul.at(0, 0, 1) = FieldScalar::one(f);
  a.mul.at(0, 1, 2) = FieldScalar::one(f);
  a.mul.at(1, 0, 2) = FieldScalar::one(f);
  a.alpha.at(0, 0) = sc(f, c % 5);
  a.alpha.at(1, 1) = sc(f, (c * c) % 5);
  a.alpha.at(2, 2) = sc(f, (c * c * c) % 5);
  return a;
}

// GF(5)[t]/(t^3), basis {1, t, t^2}, identity twist.
inline HomAlgebra poly3_gf5() {
  FieldSpec f = FieldSpec::prime(5);
  HomAlgebra a(f, 3, {"1", "t", "t2"});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i + j < 3) a.mul.at(i, j, i + j) = FieldScalar::one(f);
  a.alpha = LinearMap::identity(f, 3);
  return a;
}

// a.a = b, a.b = a, rest zero: fails hom-associativity at (a, a, a) since
// (a.a).a = b.a = 0 while a.(a.a) = a.b = a.
inline HomAlgebra n2_nonassoc() {
  FieldSpec f = FieldSpec::rationals();
  HomAlgebra a(f, 2, {"a", "b"});
  a.mul.at(0, 0, 1) = FieldScalar::one(f);
  a.mul.at(0, 1, 0) = FieldScalar::one(f);
  a.alpha = LinearMap::identity(f, 2);
  return a;
}

// c . e_i (x) e_j as a Tensor2.
inline Tensor2 elem2(const HomAlgebra& a, int i, int j, std::int64_t c = 1) {
  Tensor2 t(a.field, a.dim);
  t.at(i, j) = sc(a.field, c);
  return t;
}

inline Vec flatten2(const Tensor2& t) {
  Vec v;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) v.push_back(t.at(i, j));
  return v;
}

inline Vec flatten3(const Tensor3& t) {
  Vec v;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      for (int k = 0; k < t.dim(); ++k) v.push_back(t.at(i, j, k));
  return v;
}

}  // namespace fx
