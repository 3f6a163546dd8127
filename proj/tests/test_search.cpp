#include "doctest.h"

#include "fixtures.hpp"
#include "hombax/catalog.hpp"
#include "hombax/rota_baxter.hpp"
#include "hombax/search.hpp"
#include "hombax/yang_baxter.hpp"

using namespace hombax;

namespace {

HomAlgebra dual_gf2() {
  return fx::dual_numbers(FieldSpec::prime(2));
}

Tensor2 alpha_square_image(const HomAlgebra& a, const Tensor2& t) {
  return map_tensor2(a.alpha, a.alpha, t);
}

}  // namespace

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng{0};
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);

  SplitMix64 rng42{42};
  CHECK(rng42.next() == 0xbdd732262feb6e95ULL);
  CHECK(rng42.next() == 0x28efe333b266f103ULL);
}

TEST_CASE("bounded draws are deterministic and in range") {
  SplitMix64 a{7}, b{7};
  for (int i = 0; i < 200; ++i) {
    std::uint64_t va = a.bounded(5);
    CHECK(va == b.bounded(5));
    CHECK(va < 5);
  }
  SplitMix64 c{7};
  CHECK(c.bounded(1) == 0);
}

TEST_CASE("invariant tensor basis sizes are frozen") {
  CHECK(invariant_tensor_basis(fx::dual_family_gf5(4)).size() == 2);
  CHECK(invariant_tensor_basis(fx::dual_family_gf5(2)).size() == 1);
  CHECK(invariant_tensor_basis(fx::p3_nilpotent(2)).size() == 3);
  CHECK(invariant_tensor_basis(fx::p3_nilpotent(4)).size() == 5);
  // identity twist: the kernel is everything
  CHECK(invariant_tensor_basis(fx::dual_numbers(FieldSpec::rationals())).size() == 4);

  for (const HomAlgebra& a : {fx::dual_family_gf5(4), fx::p3_nilpotent(2)})
    for (const Tensor2& t : invariant_tensor_basis(a)) {
      CHECK_FALSE(t.is_zero());
      CHECK(alpha_square_image(a, t) == t);
    }
}

TEST_CASE("random invariant tensors are invariant and reproducible") {
  HomAlgebra a = fx::p3_nilpotent(4);
  SplitMix64 r1{11}, r2{11};
  for (int i = 0; i < 50; ++i) {
    Tensor2 t = random_invariant_tensor2(a, r1);
    CHECK(alpha_square_image(a, t) == t);
    CHECK(t == random_invariant_tensor2(a, r2));
  }
}

TEST_CASE("exhaustive counts over GF(2)") {
  HomAlgebra z2 = catalog("z2").bundle.algebra();
  SearchTask all_pairs{SearchTarget::yb_pairs, z2, true, 0, 0};
  CHECK(enumerate(all_pairs).size() == 256);
  SearchTask all_systems{SearchTarget::rb_systems, z2, true, 0, 0};
  CHECK(enumerate(all_systems).size() == 256);

  HomAlgebra d = dual_gf2();
  SearchTask yb{SearchTarget::yb_pairs, d, true, 0, 0};
  std::vector<SearchSolution> ybs = enumerate(yb);
  CHECK(ybs.size() == 18);
  for (const SearchSolution& sol : ybs) {
    REQUIRE(sol.r);
    REQUIRE(sol.s);
    CHECK(check_yb_pair(d, *sol.r, *sol.s).passed);
  }

  SearchTask rb{SearchTarget::rb_systems, d, true, 0, 0};
  std::vector<SearchSolution> rbs = enumerate(rb);
  CHECK(rbs.size() == 18);
  for (const SearchSolution& sol : rbs) {
    REQUIRE(sol.R);
    REQUIRE(sol.S);
    CHECK(check_rb_system(d, *sol.R, *sol.S).passed);
  }

  SearchTask w{SearchTarget::weighted_rb, d, true, 0, 0};
  std::vector<SearchSolution> ws = enumerate(w);
  CHECK(ws.size() == 6);
  for (const SearchSolution& sol : ws) {
    REQUIRE(sol.R);
    REQUIRE(sol.lambda);
    RotaBaxterSystem sys = rbs_from_weighted_operator(d, *sol.R, *sol.lambda);
    CHECK(check_rb_system(d, sys.R, sys.S).passed);
  }
}

TEST_CASE("known members of the exhaustive pair listing") {
  HomAlgebra d = dual_gf2();
  Tensor2 ox = fx::elem2(d, 0, 1);
  Tensor2 zero(d.field, 2);
  SearchTask yb{SearchTarget::yb_pairs, d, true, 0, 0};
  bool saw_ox_ox = false, saw_zero = false, saw_ox_zero = false, saw_zero_ox = false;
  for (const SearchSolution& sol : enumerate(yb)) {
    if (*sol.r == ox && *sol.s == ox) saw_ox_ox = true;
    if (sol.r->is_zero() && sol.s->is_zero()) saw_zero = true;
    if (*sol.r == ox && sol.s->is_zero()) saw_ox_zero = true;
    if (sol.r->is_zero() && *sol.s == ox) saw_zero_ox = true;
  }
  CHECK(saw_ox_ox);
  CHECK(saw_zero);
  CHECK(saw_ox_zero);
  CHECK_FALSE(saw_zero_ox);
}

TEST_CASE("exhaustive mode refuses oversized spaces") {
  HomAlgebra big = fx::zero_algebra(FieldSpec::prime(11), 2);  // 11^8 > 2^24
  SearchTask t{SearchTarget::yb_pairs, big, true, 0, 0};
  try {
    (void)enumerate(t);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::space_too_large);
  }

  HomAlgebra rat = fx::dual_numbers(FieldSpec::rationals());
  SearchTask tr{SearchTarget::yb_pairs, rat, true, 0, 0};
  try {
    (void)enumerate(tr);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_input);
  }
}

TEST_CASE("sampled mode is seed-deterministic and checker-verified") {
  HomAlgebra a = fx::zero_algebra(FieldSpec::prime(5), 3);
  SearchTask t{SearchTarget::yb_pairs, a, false, 99, 40};
  std::vector<SearchSolution> run1 = enumerate(t);
  std::vector<SearchSolution> run2 = enumerate(t);
  REQUIRE(run1.size() == run2.size());
  CHECK_FALSE(run1.empty());
  for (std::size_t i = 0; i < run1.size(); ++i) {
    CHECK(*run1[i].r == *run2[i].r);
    CHECK(*run1[i].s == *run2[i].s);
    CHECK(check_yb_pair(a, *run1[i].r, *run1[i].s).passed);
  }

  SearchTask t2{SearchTarget::yb_pairs, a, false, 100, 40};
  std::vector<SearchSolution> run3 = enumerate(t2);
  bool same = run3.size() == run1.size();
  if (same)
    for (std::size_t i = 0; i < run1.size(); ++i)
      same = same && *run1[i].r == *run3[i].r && *run1[i].s == *run3[i].s;
  CHECK_FALSE(same);
}

TEST_CASE("random instances are reproducible and valid") {
  FieldSpec f5 = FieldSpec::prime(5);
  StructureBundle b1 = random_instance(RandomKind::associative_algebra, f5, 3, 7);
  StructureBundle b2 = random_instance(RandomKind::associative_algebra, f5, 3, 7);
  CHECK(bundle_to_json(b1) == bundle_to_json(b2));
  validate_bundle(b1);

  StructureBundle inv = random_instance(RandomKind::alpha_invariant_tensor2, f5, 2, 3);
  REQUIRE(inv.r);
  HomAlgebra base = inv.algebra();
  CHECK(alpha_square_image(base, *inv.r) == *inv.r);

  StructureBundle t2 = random_instance(RandomKind::tensor2, f5, 2, 3);
  REQUIRE(t2.r);

  try {
    (void)random_instance(RandomKind::tensor2, f5, 5, 0);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_dim);
  }
}
