#pragma once

#include "hombax/hom.hpp"

namespace hombax {

// Pair of operators (R, S) on a Hom-associative algebra, both commuting
// with alpha, subject to
//   R(a).R(b) = R( R(a).b + a.S(b) )
//   S(a).S(b) = S( R(a).b + a.S(b) )
struct RotaBaxterSystem {
  HomAlgebra base;
  LinearMap R;
  LinearMap S;
};

// Two products prec/succ with a common twist, subject to
//   (a < b) < alpha(c) = alpha(a) < (b < c + b > c)
//   (a > b) < alpha(c) = alpha(a) > (b < c)
//   (a < b + a > b) > alpha(c) = alpha(a) > (b > c)
// where < is prec and > is succ, plus alpha distributing over both.
struct HomDendriform {
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> basis;
  LinearMap alpha;
  BilinearMap prec;
  BilinearMap succ;

  HomDendriform(FieldSpec f, int n, std::vector<std::string> labels)
      : field(f), dim(n), basis(std::move(labels)), alpha(f, n), prec(f, n), succ(f, n) {}
};

// Single product subject to the left-symmetry of associators:
//   (a*b)*alpha(c) - alpha(a)*(b*c) = (b*a)*alpha(c) - alpha(b)*(a*c).
struct HomPreLie {
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> basis;
  LinearMap alpha;
  BilinearMap diamond;

  HomPreLie(FieldSpec f, int n, std::vector<std::string> labels)
      : field(f), dim(n), basis(std::move(labels)), alpha(f, n), diamond(f, n) {}
};

CheckReport check_rb_system(const HomAlgebra& a, const LinearMap& R, const LinearMap& S);

// Weight-lambda operator R (alpha-commuting, R(a).R(b) = R(R(a).b + a.R(b)
// + lambda a.b)) embeds as the system (R, R + lambda id).
RotaBaxterSystem rbs_from_weighted_operator(const HomAlgebra& a, const LinearMap& R,
                                            const FieldScalar& lambda);

// a < b = a.S(b), a > b = R(a).b, twist unchanged.
HomDendriform dendriform_from_rbs(const RotaBaxterSystem& sys);
CheckReport check_hom_dendriform(const HomDendriform& d, const CheckOptions& opt = {});

// diamond = succ - prec.
HomPreLie prelie_from_dendriform(const HomDendriform& d);
CheckReport check_hom_prelie(const HomPreLie& p, const CheckOptions& opt = {});

// a * b = a.S(b) + R(a).b; Hom-associative with the same twist.
HomAlgebra star_product(const RotaBaxterSystem& sys);

// Raw builder: T(a (x) b) = R(a) (x) b + a (x) S(b) with the canonical
// companion on three legs. No validation.
TwistorMap twistor_from_maps(const HomAlgebra& a, const LinearMap& R, const LinearMap& S);

// twistor_from_maps on a validated system; the result passes
// check_weak_pseudotwistor by construction.
TwistorMap pseudotwistor_from_rbs(const RotaBaxterSystem& sys);

// alpha^2 / alpha^3 compatibility plus both pentagon legs:
//   T o (mu (x) alpha) o (T (x) id) = (mu (x) alpha) o tau
//   T o (alpha (x) mu) o (id (x) T) = (alpha (x) mu) o tau
CheckReport check_weak_pseudotwistor(const HomAlgebra& a, const TwistorMap& t);

// (A, alpha, mu o T); requires T to pass check_weak_pseudotwistor.
HomAlgebra product_from_twistor(const HomAlgebra& a, const TwistorMap& t);

}  // namespace hombax
