#pragma once

#include <string>
#include <vector>

#include "hombax/check.hpp"
#include "hombax/tensor.hpp"

namespace hombax {

// Candidate (A, alpha, mu). Validity is decided by check_hom_algebra:
// (a.b).alpha(c) = alpha(a).(b.c) plus multiplicativity of alpha.
struct HomAlgebra {
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> basis;
  BilinearMap mul;
  LinearMap alpha;

  HomAlgebra(FieldSpec f, int n, std::vector<std::string> labels)
      : field(f), dim(n), basis(std::move(labels)), mul(f, n), alpha(f, n) {
    if (static_cast<int>(basis.size()) != n)
      fail(Errc::dim_mismatch, "basis label count != dim");
  }
};

// Candidate (C, alpha, delta) with (delta (x) alpha) o delta =
// (alpha (x) delta) o delta and comultiplicativity of alpha.
struct HomCoalgebra {
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> basis;
  Coproduct delta;
  LinearMap alpha;

  HomCoalgebra(FieldSpec f, int n, std::vector<std::string> labels)
      : field(f), dim(n), basis(std::move(labels)), delta(f, n), alpha(f, n) {
    if (static_cast<int>(basis.size()) != n)
      fail(Errc::dim_mismatch, "basis label count != dim");
  }
};

CheckReport check_hom_algebra(const HomAlgebra& a, const CheckOptions& opt = {});
CheckReport check_hom_coalgebra(const HomCoalgebra& c, const CheckOptions& opt = {});

// delta o mu = (mu (x) alpha) o (alpha (x) delta) + (alpha (x) mu) o (delta (x) alpha)
// on basis pairs. Assumes (A, alpha, mu) and (A, alpha, delta) are valid.
CheckReport check_infinitesimal_compat(const HomAlgebra& a, const Coproduct& delta);

// Given an associative algebra (alpha = id) and an algebra endomorphism phi,
// returns (A, phi, phi o mu). Throws NotAssociative / NotMorphism.
HomAlgebra induce_algebra_by_composition(const HomAlgebra& a, const LinearMap& phi);

// Leg extensions of a coproduct: (delta (x) alpha)(t) and (alpha (x) delta)(t).
Tensor3 delta_tensor_alpha(const Coproduct& d, const LinearMap& alpha, const Tensor2& t);
Tensor3 alpha_tensor_delta(const LinearMap& alpha, const Coproduct& d, const Tensor2& t);

// Module actions of A on A (x) A and A (x) A (x) A: the acting element is
// multiplied into the outer slot through alpha, passive slots get alpha.
Tensor2 act_left2(const HomAlgebra& a, const Vec& x, const Tensor2& t);
Tensor2 act_right2(const HomAlgebra& a, const Tensor2& t, const Vec& x);
Tensor3 act_left3(const HomAlgebra& a, const Vec& x, const Tensor3& t);
Tensor3 act_right3(const HomAlgebra& a, const Tensor3& t, const Vec& x);

}  // namespace hombax
