#include "hombax/yang_baxter.hpp"

namespace hombax {

namespace {

void require_tensor_shape(const HomAlgebra& a, const Tensor2& t, const char* what) {
  if (t.dim() != a.dim || t.field() != a.field)
    fail(Errc::dim_mismatch, std::string(what) + " shape does not match algebra");
}

}  // namespace

Tensor3 triple_product(const HomAlgebra& a, TripleKind kind, const Tensor2& u,
                       const Tensor2& v) {
  require_tensor_shape(a, u, "first tensor");
  require_tensor_shape(a, v, "second tensor");
  int n = a.dim;
  Tensor3 out(a.field, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (u.at(i, j).is_zero()) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (v.at(k, l).is_zero()) continue;
          FieldScalar c = u.at(i, j) * v.at(k, l);
          switch (kind) {
            case TripleKind::r13_s12: {
              Vec prod = a.mul.eval_basis(i, k);
              for (int p = 0; p < n; ++p) {
                if (prod[p].is_zero()) continue;
                FieldScalar cp = c * prod[p];
                for (int q = 0; q < n; ++q) {
                  if (a.alpha.at(q, l).is_zero()) continue;
                  FieldScalar cq = cp * a.alpha.at(q, l);
                  for (int w = 0; w < n; ++w) out.at(p, q, w) += cq * a.alpha.at(w, j);
                }
              }
              break;
            }
            case TripleKind::r12_s23: {
              Vec prod = a.mul.eval_basis(j, k);
              for (int p = 0; p < n; ++p) {
                if (a.alpha.at(p, i).is_zero()) continue;
                FieldScalar cp = c * a.alpha.at(p, i);
                for (int q = 0; q < n; ++q) {
                  if (prod[q].is_zero()) continue;
                  FieldScalar cq = cp * prod[q];
                  for (int w = 0; w < n; ++w) out.at(p, q, w) += cq * a.alpha.at(w, l);
                }
              }
              break;
            }
            case TripleKind::r23_s13: {
              Vec prod = a.mul.eval_basis(j, l);
              for (int p = 0; p < n; ++p) {
                if (a.alpha.at(p, k).is_zero()) continue;
                FieldScalar cp = c * a.alpha.at(p, k);
                for (int q = 0; q < n; ++q) {
                  if (a.alpha.at(q, i).is_zero()) continue;
                  FieldScalar cq = cp * a.alpha.at(q, i);
                  for (int w = 0; w < n; ++w) out.at(p, q, w) += cq * prod[w];
                }
              }
              break;
            }
          }
        }
    }
  return out;
}

Tensor3 yb_equation1(const HomAlgebra& a, const Tensor2& r, const Tensor2& s) {
  return triple_product(a, TripleKind::r13_s12, r, r)
      .sub(triple_product(a, TripleKind::r12_s23, r, r))
      .add(triple_product(a, TripleKind::r23_s13, s, r));
}

Tensor3 yb_equation2(const HomAlgebra& a, const Tensor2& r, const Tensor2& s) {
  return triple_product(a, TripleKind::r13_s12, s, r)
      .sub(triple_product(a, TripleKind::r12_s23, s, s))
      .add(triple_product(a, TripleKind::r23_s13, s, s));
}

CheckReport check_alpha_invariance(const HomAlgebra& a, const Tensor2& t,
                                   const std::string& label) {
  require_tensor_shape(a, t, label.c_str());
  CheckReport rep{label + "-invariance"};
  Tensor2 im = map_tensor2(a.alpha, a.alpha, t);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (!(im.at(i, j) == t.at(i, j)))
        rep.add_witness({label + "-invariance", {i, j}, {im.at(i, j)}, {t.at(i, j)}});
  return rep;
}

CheckReport check_yb_pair(const HomAlgebra& a, const Tensor2& r, const Tensor2& s) {
  CheckReport rep{"yb-pair"};
  rep.add_sub(check_alpha_invariance(a, r, "r"));
  rep.add_sub(check_alpha_invariance(a, s, "s"));
  FieldScalar zero = FieldScalar::zero(a.field);
  Tensor3 eq1 = yb_equation1(a, r, s);
  Tensor3 eq2 = yb_equation2(a, r, s);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) {
        if (!eq1.at(i, j, k).is_zero())
          rep.add_witness({"yb-eq1", {i, j, k}, {eq1.at(i, j, k)}, {zero}});
      }
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) {
        if (!eq2.at(i, j, k).is_zero())
          rep.add_witness({"yb-eq2", {i, j, k}, {eq2.at(i, j, k)}, {zero}});
      }
  return rep;
}

CheckReport check_alpha_n_rbs(const HomAlgebra& a, const LinearMap& R,
                              const LinearMap& S, int n_power) {
  if (R.dim() != a.dim || S.dim() != a.dim || R.field() != a.field || S.field() != a.field)
    fail(Errc::dim_mismatch, "operator shape does not match algebra");
  if (n_power < 0 || n_power > 16)
    fail(Errc::invalid_input, "twist power out of range [0, 16]");
  CheckReport rep{"alpha-n-rbs"};
  LinearMap an = a.alpha.power(n_power);
  for (int j = 0; j < a.dim; ++j) {
    Vec lhs = a.alpha.apply(R.column(j));
    Vec rhs = R.apply(a.alpha.column(j));
    if (lhs != rhs) rep.add_witness({"alpha-R-commute", {j}, lhs, rhs});
    lhs = a.alpha.apply(S.column(j));
    rhs = S.apply(a.alpha.column(j));
    if (lhs != rhs) rep.add_witness({"alpha-S-commute", {j}, lhs, rhs});
  }
  for (int i = 0; i < a.dim; ++i) {
    Vec ani = an.column(i);
    for (int j = 0; j < a.dim; ++j) {
      Vec anj = an.column(j);
      Vec mixed = add_vec(a.mul.eval(R.column(i), anj), a.mul.eval(ani, S.column(j)));
      Vec lhs1 = a.mul.eval(R.apply(ani), R.apply(anj));
      Vec rhs1 = R.apply(mixed);
      if (lhs1 != rhs1) rep.add_witness({"alpha-n-rbs1", {i, j}, lhs1, rhs1});
      Vec lhs2 = a.mul.eval(S.apply(ani), S.apply(anj));
      Vec rhs2 = S.apply(mixed);
      if (lhs2 != rhs2) rep.add_witness({"alpha-n-rbs2", {i, j}, lhs2, rhs2});
    }
  }
  return rep;
}

AlphaNRBSystem rbs_from_ybp(const YangBaxterPair& pair) {
  const HomAlgebra& a = pair.base;
  CheckReport base_ok = check_hom_algebra(a);
  if (!base_ok.passed)
    fail(Errc::invalid_input,
         "base algebra failed validation: " + witness_to_string(base_ok.witnesses.front(), a.basis));
  CheckReport pair_ok = check_yb_pair(a, pair.r, pair.s);
  if (!pair_ok.passed) {
    const Witness* w = nullptr;
    if (!pair_ok.witnesses.empty()) w = &pair_ok.witnesses.front();
    else
      for (const auto& sub : pair_ok.sub)
        if (!sub.witnesses.empty()) { w = &sub.witnesses.front(); break; }
    fail(Errc::not_yb_pair, w ? witness_to_string(*w, a.basis) : "pair failed validation");
  }

  int n = a.dim;
  auto operator_from = [&](const Tensor2& t) {
    LinearMap m(a.field, n);
    for (int col = 0; col < n; ++col) {
      Vec ec = zero_vec(a.field, n);
      ec[col] = FieldScalar::one(a.field);
      Vec acc = zero_vec(a.field, n);
      Vec alt = zero_vec(a.field, n);
      for (int i = 0; i < n; ++i) {
        Vec ei = zero_vec(a.field, n);
        ei[i] = FieldScalar::one(a.field);
        for (int l = 0; l < n; ++l) {
          if (t.at(i, l).is_zero()) continue;
          Vec el = zero_vec(a.field, n);
          el[l] = FieldScalar::one(a.field);
          // (t1.a).alpha(t2) and alpha(t1).(a.t2) agree by hom-associativity
          acc = add_vec(acc, scale_vec(t.at(i, l),
                            a.mul.eval(a.mul.eval(ei, ec), a.alpha.column(l))));
          alt = add_vec(alt, scale_vec(t.at(i, l),
                            a.mul.eval(a.alpha.column(i), a.mul.eval(ec, el))));
        }
      }
      if (acc != alt)
        fail(Errc::invalid_input, "internal: the two operator readings disagree");
      for (int row = 0; row < n; ++row) m.at(row, col) = acc[row];
    }
    return m;
  };

  AlphaNRBSystem sys{a, operator_from(pair.r), operator_from(pair.s), 2};
  if (!check_alpha_n_rbs(a, sys.R, sys.S, 2).passed)
    fail(Errc::invalid_input, "internal: derived operators failed validation");
  return sys;
}

HomDendriform dendriform_from_alpha_n_rbs(const AlphaNRBSystem& sys) {
  const HomAlgebra& a = sys.base;
  CheckReport valid = check_alpha_n_rbs(a, sys.R, sys.S, sys.n_power);
  if (!valid.passed)
    fail(Errc::invalid_system, witness_to_string(valid.witnesses.front(), a.basis));
  LinearMap an = a.alpha.power(sys.n_power);
  HomDendriform d(a.field, a.dim, a.basis);
  d.alpha = a.alpha.power(sys.n_power + 1);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec lo = a.mul.eval(an.column(i), sys.S.column(j));
      Vec hi = a.mul.eval(sys.R.column(i), an.column(j));
      for (int k = 0; k < a.dim; ++k) {
        d.prec.at(i, j, k) = lo[k];
        d.succ.at(i, j, k) = hi[k];
      }
    }
  if (!check_hom_dendriform(d).passed)
    fail(Errc::invalid_input, "internal: derived dendriform failed validation");
  return d;
}

YbpInducedStructures ybp_induced_structures(const YangBaxterPair& pair) {
  AlphaNRBSystem sys = rbs_from_ybp(pair);
  HomDendriform dend = dendriform_from_alpha_n_rbs(sys);
  const HomAlgebra& a = pair.base;

  HomAlgebra star(a.field, a.dim, a.basis);
  star.alpha = dend.alpha;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k)
        star.mul.at(i, j, k) = dend.prec.at(i, j, k) + dend.succ.at(i, j, k);
  if (!check_hom_algebra(star).passed)
    fail(Errc::invalid_input, "internal: derived star product failed validation");

  HomPreLie prelie = prelie_from_dendriform(dend);
  return YbpInducedStructures{std::move(sys), std::move(dend), std::move(star),
                              std::move(prelie)};
}

}  // namespace hombax
