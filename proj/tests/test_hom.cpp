#include "doctest.h"

#include "fixtures.hpp"
#include "hombax/covariant.hpp"
#include "hombax/hom.hpp"

using namespace hombax;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

// Independent oracle: hom-associativity read straight off the structure
// constants, no library evaluation helpers involved.
bool oracle_hom_assoc(const HomAlgebra& a) {
  int n = a.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int w = 0; w < n; ++w) {
          FieldScalar lhs = FieldScalar::zero(a.field);
          FieldScalar rhs = FieldScalar::zero(a.field);
          for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
              lhs += a.mul.at(i, j, u) * a.alpha.at(v, k) * a.mul.at(u, v, w);
              rhs += a.alpha.at(u, i) * a.mul.at(j, k, v) * a.mul.at(u, v, w);
            }
          if (lhs != rhs) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("hom-algebra checker agrees with the raw oracle") {
  CHECK(check_hom_algebra(fx::dual_numbers(kQ)).passed);
  CHECK(oracle_hom_assoc(fx::dual_numbers(kQ)));
  CHECK(check_hom_algebra(fx::poly3_gf5()).passed);
  CHECK(oracle_hom_assoc(fx::poly3_gf5()));
  for (std::int64_t c = 1; c <= 4; ++c) {
    CHECK(check_hom_algebra(fx::dual_family_gf5(c)).passed);
    CHECK(oracle_hom_assoc(fx::dual_family_gf5(c)));
    CHECK(check_hom_algebra(fx::p3_nilpotent(c)).passed);
    CHECK(oracle_hom_assoc(fx::p3_nilpotent(c)));
  }
  HomAlgebra bad = fx::n2_nonassoc();
  CHECK_FALSE(oracle_hom_assoc(bad));
  CheckReport rep = check_hom_algebra(bad);
  REQUIRE_FALSE(rep.passed);
  REQUIRE_FALSE(rep.witnesses.empty());
  const Witness& w = rep.witnesses.front();
  CHECK(w.where == std::vector<int>{0, 0, 0});
  CHECK(is_zero_vec(w.lhs));           // (a.a).a = b.a = 0
  CHECK(w.rhs == fx::unit(kQ, 2, 0));  // a.(a.a) = a.b = a
}

TEST_CASE("a morphism twist can still break hom-associativity") {
  // plain dual-numbers product with twist diag(1, 2): alpha is an algebra
  // morphism, but (e.e).alpha(x) = 2x while alpha(e).(e.x) = x.
  HomAlgebra a = fx::dual_family_gf5(1);
  a.alpha.at(1, 1) = fx::sc(a.field, 2);
  CheckReport rep = check_hom_algebra(a);
  REQUIRE_FALSE(rep.passed);
  CHECK(rep.witnesses.front().where == std::vector<int>{0, 0, 1});
  CHECK_FALSE(oracle_hom_assoc(a));
}

TEST_CASE("non-multiplicative twists are rejected by default") {
  HomAlgebra a = fx::zero_algebra(FieldSpec::prime(5), 2);
  a.mul.at(0, 0, 0) = FieldScalar::one(a.field);  // e.e = e, rest zero
  a.alpha.at(0, 0) = fx::sc(a.field, 2);          // alpha(e.e) = 2e != 4e
  CHECK_FALSE(check_hom_algebra(a).passed);
  CheckOptions lax;
  lax.require_multiplicative = false;
  // hom-associativity alone: (e.e).alpha(e) = 2e, alpha(e).(e.e) = 2e
  CHECK(check_hom_algebra(a, lax).passed);
}

TEST_CASE("hom-coalgebra checker") {
  HomCoalgebra c(kQ, 2, {"1", "x"});
  c.alpha = LinearMap::identity(kQ, 2);
  c.delta.at(1, 1, 1) = fx::sc(kQ, 1);  // delta(x) = x (x) x
  CHECK(check_hom_coalgebra(c).passed);

  // delta(1) = 1 (x) x + x (x) 1, delta(x) = 1 (x) 1 is not coassociative:
  // the two leg extensions differ by 1 (x) x (x) x vs x (x) x (x) 1.
  HomCoalgebra bad(kQ, 2, {"1", "x"});
  bad.alpha = LinearMap::identity(kQ, 2);
  bad.delta.at(0, 0, 1) = fx::sc(kQ, 1);
  bad.delta.at(0, 1, 0) = fx::sc(kQ, 1);
  bad.delta.at(1, 0, 0) = fx::sc(kQ, 1);
  CheckReport rep = check_hom_coalgebra(bad);
  REQUIRE_FALSE(rep.passed);
  CHECK(rep.witnesses.front().where == std::vector<int>{0});
}

TEST_CASE("infinitesimal compatibility on the dual numbers") {
  HomAlgebra a = fx::dual_numbers(kQ);
  Coproduct good(kQ, 2);
  good.at(1, 1, 1) = fx::sc(kQ, 1);  // delta(x) = x (x) x, delta(1) = 0
  CHECK(check_infinitesimal_compat(a, good).passed);

  Coproduct bad(kQ, 2);
  bad.at(0, 0, 0) = fx::sc(kQ, 1);  // delta(1) = 1 (x) 1
  CheckReport rep = check_infinitesimal_compat(a, bad);
  REQUIRE_FALSE(rep.passed);
  // delta(1.1) = 1 (x) 1 but the derivation-style right side doubles it
  CHECK(rep.witnesses.front().where == std::vector<int>{0, 0});
}

TEST_CASE("composition induction on an associative algebra") {
  HomAlgebra a = fx::poly3_gf5();
  LinearMap phi(a.field, 3);
  phi.at(0, 0) = fx::sc(a.field, 1);
  phi.at(1, 1) = fx::sc(a.field, 2);
  phi.at(2, 2) = fx::sc(a.field, 4);  // phi(t^k) = 2^k t^k is a morphism
  HomAlgebra induced = induce_algebra_by_composition(a, phi);
  CHECK(induced.alpha == phi);
  CHECK(check_hom_algebra(induced).passed);
  CHECK(oracle_hom_assoc(induced));
  // induced product is phi o mul: t . t = phi(t^2) = 4 t^2
  CHECK(induced.mul.at(1, 1, 2).to_string() == "4");

  LinearMap notphi(a.field, 3);
  notphi.at(0, 0) = fx::sc(a.field, 1);
  notphi.at(1, 1) = fx::sc(a.field, 2);
  notphi.at(2, 2) = fx::sc(a.field, 1);  // phi(t.t) = t^2 != 4 t^2
  try {
    (void)induce_algebra_by_composition(a, notphi);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_morphism);
  }

  try {
    (void)induce_algebra_by_composition(fx::n2_nonassoc(),
                                        LinearMap::identity(kQ, 2));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_associative);
  }
}

TEST_CASE("leg extensions of a coproduct") {
  HomAlgebra a = fx::dual_numbers(kQ);
  Coproduct d(kQ, 2);
  d.at(1, 1, 1) = fx::sc(kQ, 1);  // delta(x) = x (x) x
  Tensor2 t = fx::elem2(a, 0, 1);  // 1 (x) x
  Tensor3 da = delta_tensor_alpha(d, a.alpha, t);
  CHECK(da.is_zero());  // delta(1) = 0
  Tensor3 ad = alpha_tensor_delta(a.alpha, d, t);
  Tensor3 expect = tensor3_of(fx::unit(kQ, 2, 0), fx::unit(kQ, 2, 1), fx::unit(kQ, 2, 1));
  CHECK(ad == expect);  // 1 (x) x (x) x
}

TEST_CASE("elementwise module actions match the tensor-power bimodule") {
  for (const HomAlgebra& a : {fx::dual_family_gf5(4), fx::p3_nilpotent(2)}) {
    BimoduleActions m2 = tensor_power_bimodule(a, 2);
    BimoduleActions m3 = tensor_power_bimodule(a, 3);
    int n = a.dim;
    for (int i = 0; i < n; ++i) {
      Vec ei = fx::unit(a.field, n, i);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          Tensor2 t = fx::elem2(a, p, q);
          CHECK(fx::flatten2(act_left2(a, ei, t)) == m2.act_left(ei, fx::flatten2(t)));
          CHECK(fx::flatten2(act_right2(a, t, ei)) == m2.act_right(fx::flatten2(t), ei));
          for (int w = 0; w < n; ++w) {
            Tensor3 u = tensor3_of(fx::unit(a.field, n, p), fx::unit(a.field, n, q),
                                   fx::unit(a.field, n, w));
            CHECK(fx::flatten3(act_left3(a, ei, u)) == m3.act_left(ei, fx::flatten3(u)));
            CHECK(fx::flatten3(act_right3(a, u, ei)) == m3.act_right(fx::flatten3(u), ei));
          }
        }
    }
  }
}

TEST_CASE("frozen action values on the dual numbers") {
  HomAlgebra a = fx::dual_numbers(kQ);
  // 1 bullet (x (x) 1) = x (x) 1 and x bullet (1 (x) 1) = x (x) 1
  CHECK(act_left2(a, fx::unit(kQ, 2, 0), fx::elem2(a, 1, 0)) == fx::elem2(a, 1, 0));
  CHECK(act_left2(a, fx::unit(kQ, 2, 1), fx::elem2(a, 0, 0)) == fx::elem2(a, 1, 0));
  // (1 (x) 1) bullet x = 1 (x) x
  CHECK(act_right2(a, fx::elem2(a, 0, 0), fx::unit(kQ, 2, 1)) == fx::elem2(a, 0, 1));
  // x bullet (x (x) 1) = 0
  CHECK(act_left2(a, fx::unit(kQ, 2, 1), fx::elem2(a, 1, 0)).is_zero());
}
