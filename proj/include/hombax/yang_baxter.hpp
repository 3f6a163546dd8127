#pragma once

#include "hombax/rota_baxter.hpp"

namespace hombax {

// Products of two 2-tensors inside A (x) A (x) A. The subscripts name the
// legs each factor occupies; the colliding leg carries the product, the
// untouched leg gets alpha. For u = sum u^{ij} e_i (x) e_j and
// v = sum v^{kl} e_k (x) e_l:
//   r13_s12: sum u^{ij} v^{kl} (e_i.e_k) (x) alpha(e_l) (x) alpha(e_j)
//   r12_s23: sum u^{ij} v^{kl} alpha(e_i) (x) (e_j.e_k) (x) alpha(e_l)
//   r23_s13: sum u^{ij} v^{kl} alpha(e_k) (x) alpha(e_i) (x) (e_j.e_l)
enum class TripleKind { r13_s12, r12_s23, r23_s13 };

Tensor3 triple_product(const HomAlgebra& a, TripleKind kind, const Tensor2& u,
                       const Tensor2& v);

// alpha-invariant pair (r, s) subject to
//   r13 r12 - r12 r23 + s23 r13 = 0
//   s13 r12 - s12 s23 + s23 s13 = 0
struct YangBaxterPair {
  HomAlgebra base;
  Tensor2 r;
  Tensor2 s;
};

// The two equation tensors; zero iff the pair satisfies the equations.
Tensor3 yb_equation1(const HomAlgebra& a, const Tensor2& r, const Tensor2& s);
Tensor3 yb_equation2(const HomAlgebra& a, const Tensor2& r, const Tensor2& s);

CheckReport check_alpha_invariance(const HomAlgebra& a, const Tensor2& t,
                                   const std::string& label);
CheckReport check_yb_pair(const HomAlgebra& a, const Tensor2& r, const Tensor2& s);

// Operators twisted by the n-th power of alpha:
//   R(alpha^n a).R(alpha^n b) = R( R(a).alpha^n(b) + alpha^n(a).S(b) )
//   S(alpha^n a).S(alpha^n b) = S( R(a).alpha^n(b) + alpha^n(a).S(b) )
// n = 0 is the plain system.
struct AlphaNRBSystem {
  HomAlgebra base;
  LinearMap R;
  LinearMap S;
  int n_power = 0;
};

CheckReport check_alpha_n_rbs(const HomAlgebra& a, const LinearMap& R,
                              const LinearMap& S, int n_power);

// R(a) = (r1.a).alpha(r2), S(a) = (s1.a).alpha(s2); the pair must satisfy
// the equations above, and the result is an (alpha^2)-twisted system. The
// equal reading alpha(r1).(a.r2) is asserted coordinatewise.
AlphaNRBSystem rbs_from_ybp(const YangBaxterPair& pair);

// a < b = alpha^n(a).S(b), a > b = R(a).alpha^n(b); twist alpha^(n+1).
HomDendriform dendriform_from_alpha_n_rbs(const AlphaNRBSystem& sys);

// The full derived chain for a pair: (alpha^2)-system, dendriform pair,
// associative star product and preLie product, all twisted by alpha^3.
struct YbpInducedStructures {
  AlphaNRBSystem system;
  HomDendriform dendriform;
  HomAlgebra star;
  HomPreLie prelie;
};

YbpInducedStructures ybp_induced_structures(const YangBaxterPair& pair);

}  // namespace hombax
