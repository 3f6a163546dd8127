#include "hombax/rota_baxter.hpp"

namespace hombax {

namespace {

Vec flatten(const Tensor2& t) {
  Vec r;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) r.push_back(t.at(i, j));
  return r;
}

void require_operator_shape(const HomAlgebra& a, const LinearMap& m, const char* what) {
  if (m.dim() != a.dim || m.field() != a.field)
    fail(Errc::dim_mismatch, std::string(what) + " shape does not match algebra");
}

// Commutation of an operator with the twist, checked columnwise.
void check_alpha_commute(CheckReport& rep, const HomAlgebra& a, const LinearMap& m,
                         const std::string& identity) {
  for (int j = 0; j < a.dim; ++j) {
    Vec lhs = a.alpha.apply(m.column(j));
    Vec rhs = m.apply(a.alpha.column(j));
    if (lhs != rhs) rep.add_witness({identity, {j}, lhs, rhs});
  }
}

Tensor2 basis_tensor2(const FieldSpec& f, int n, int i, int j) {
  Tensor2 t(f, n);
  t.at(i, j) = FieldScalar::one(f);
  return t;
}

// (T (x) id) on A^(x)3: T acts on the first two legs.
Tensor3 twistor_on_first2(const TwistorMap& tw, const Tensor3& t) {
  int n = t.dim();
  Tensor3 r(t.field(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (t.at(i, j, k).is_zero()) continue;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            r.at(a, b, k) += tw.at2(a, b, i, j) * t.at(i, j, k);
      }
  return r;
}

// (id (x) T) on A^(x)3: T acts on the last two legs.
Tensor3 twistor_on_last2(const TwistorMap& tw, const Tensor3& t) {
  int n = t.dim();
  Tensor3 r(t.field(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (t.at(i, j, k).is_zero()) continue;
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            r.at(i, b, c) += tw.at2(b, c, j, k) * t.at(i, j, k);
      }
  return r;
}

// (mu (x) alpha): A^(x)3 -> A^(x)2.
Tensor2 mu_alpha_3to2(const HomAlgebra& a, const Tensor3& t) {
  int n = a.dim;
  Tensor2 r(a.field, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        if (t.at(u, v, w).is_zero()) continue;
        for (int k = 0; k < n; ++k) {
          if (a.mul.at(u, v, k).is_zero()) continue;
          FieldScalar c = a.mul.at(u, v, k) * t.at(u, v, w);
          for (int x = 0; x < n; ++x) r.at(k, x) += c * a.alpha.at(x, w);
        }
      }
  return r;
}

// (alpha (x) mu): A^(x)3 -> A^(x)2.
Tensor2 alpha_mu_3to2(const HomAlgebra& a, const Tensor3& t) {
  int n = a.dim;
  Tensor2 r(a.field, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        if (t.at(u, v, w).is_zero()) continue;
        for (int x = 0; x < n; ++x) {
          if (a.alpha.at(x, u).is_zero()) continue;
          FieldScalar c = a.alpha.at(x, u) * t.at(u, v, w);
          for (int k = 0; k < n; ++k) r.at(x, k) += c * a.mul.at(v, w, k);
        }
      }
  return r;
}

}  // namespace

CheckReport check_rb_system(const HomAlgebra& a, const LinearMap& R, const LinearMap& S) {
  require_operator_shape(a, R, "R");
  require_operator_shape(a, S, "S");
  CheckReport rep{"rb-system"};
  check_alpha_commute(rep, a, R, "alpha-R-commute");
  check_alpha_commute(rep, a, S, "alpha-S-commute");
  int n = a.dim;
  for (int i = 0; i < n; ++i) {
    Vec ei = zero_vec(a.field, n);
    ei[i] = FieldScalar::one(a.field);
    for (int j = 0; j < n; ++j) {
      Vec ej = zero_vec(a.field, n);
      ej[j] = FieldScalar::one(a.field);
      // shared argument R(a).b + a.S(b)
      Vec mixed = add_vec(a.mul.eval(R.column(i), ej), a.mul.eval(ei, S.column(j)));
      Vec lhs1 = a.mul.eval(R.column(i), R.column(j));
      Vec rhs1 = R.apply(mixed);
      if (lhs1 != rhs1) rep.add_witness({"rbs1", {i, j}, lhs1, rhs1});
      Vec lhs2 = a.mul.eval(S.column(i), S.column(j));
      Vec rhs2 = S.apply(mixed);
      if (lhs2 != rhs2) rep.add_witness({"rbs2", {i, j}, lhs2, rhs2});
    }
  }
  return rep;
}

RotaBaxterSystem rbs_from_weighted_operator(const HomAlgebra& a, const LinearMap& R,
                                            const FieldScalar& lambda) {
  require_operator_shape(a, R, "R");
  if (lambda.field() != a.field) fail(Errc::field_mismatch, "lambda is over the wrong field");
  CheckReport rep{"weighted-rb"};
  check_alpha_commute(rep, a, R, "alpha-R-commute");
  int n = a.dim;
  for (int i = 0; i < n; ++i) {
    Vec ei = zero_vec(a.field, n);
    ei[i] = FieldScalar::one(a.field);
    for (int j = 0; j < n; ++j) {
      Vec ej = zero_vec(a.field, n);
      ej[j] = FieldScalar::one(a.field);
      Vec arg = add_vec(add_vec(a.mul.eval(R.column(i), ej), a.mul.eval(ei, R.column(j))),
                        scale_vec(lambda, a.mul.eval_basis(i, j)));
      Vec lhs = a.mul.eval(R.column(i), R.column(j));
      Vec rhs = R.apply(arg);
      if (lhs != rhs) rep.add_witness({"weighted-rb", {i, j}, lhs, rhs});
    }
  }
  if (!rep.passed)
    fail(Errc::not_weighted_rb, witness_to_string(rep.witnesses.front(), a.basis));

  LinearMap S = R.add(LinearMap::identity(a.field, a.dim).scale(lambda));
  RotaBaxterSystem sys{a, R, S};
  if (!check_rb_system(a, sys.R, sys.S).passed)
    fail(Errc::invalid_input, "internal: weighted embedding failed validation");
  return sys;
}

HomDendriform dendriform_from_rbs(const RotaBaxterSystem& sys) {
  const HomAlgebra& a = sys.base;
  CheckReport valid = check_rb_system(a, sys.R, sys.S);
  if (!valid.passed)
    fail(Errc::invalid_system, witness_to_string(valid.witnesses.front(), a.basis));
  HomDendriform d(a.field, a.dim, a.basis);
  d.alpha = a.alpha;
  for (int i = 0; i < a.dim; ++i) {
    Vec ei = zero_vec(a.field, a.dim);
    ei[i] = FieldScalar::one(a.field);
    for (int j = 0; j < a.dim; ++j) {
      Vec ej = zero_vec(a.field, a.dim);
      ej[j] = FieldScalar::one(a.field);
      Vec lo = a.mul.eval(ei, sys.S.column(j));
      Vec hi = a.mul.eval(sys.R.column(i), ej);
      for (int k = 0; k < a.dim; ++k) {
        d.prec.at(i, j, k) = lo[k];
        d.succ.at(i, j, k) = hi[k];
      }
    }
  }
  if (!check_hom_dendriform(d).passed)
    fail(Errc::invalid_input, "internal: derived dendriform failed validation");
  return d;
}

CheckReport check_hom_dendriform(const HomDendriform& d, const CheckOptions& opt) {
  CheckReport rep{"hom-dendriform"};
  int n = d.dim;
  const auto& al = d.alpha;
  for (int i = 0; i < n; ++i) {
    Vec ei = zero_vec(d.field, n);
    ei[i] = FieldScalar::one(d.field);
    for (int j = 0; j < n; ++j) {
      Vec ej = zero_vec(d.field, n);
      ej[j] = FieldScalar::one(d.field);
      for (int k = 0; k < n; ++k) {
        Vec ak = al.column(k);
        Vec lo_ij = d.prec.eval_basis(i, j);
        Vec hi_ij = d.succ.eval_basis(i, j);
        Vec lo_jk = d.prec.eval_basis(j, k);
        Vec hi_jk = d.succ.eval_basis(j, k);
        Vec ai = al.column(i);

        Vec lhs1 = d.prec.eval(lo_ij, ak);
        Vec rhs1 = d.prec.eval(ai, add_vec(lo_jk, hi_jk));
        if (lhs1 != rhs1) rep.add_witness({"dend1", {i, j, k}, lhs1, rhs1});

        Vec lhs2 = d.prec.eval(hi_ij, ak);
        Vec rhs2 = d.succ.eval(ai, lo_jk);
        if (lhs2 != rhs2) rep.add_witness({"dend2", {i, j, k}, lhs2, rhs2});

        Vec lhs3 = d.succ.eval(add_vec(lo_ij, hi_ij), ak);
        Vec rhs3 = d.succ.eval(ai, hi_jk);
        if (lhs3 != rhs3) rep.add_witness({"dend3", {i, j, k}, lhs3, rhs3});
      }
    }
  }
  if (opt.require_multiplicative) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec lhs = al.apply(d.prec.eval_basis(i, j));
        Vec rhs = d.prec.eval(al.column(i), al.column(j));
        if (lhs != rhs) rep.add_witness({"alpha-prec", {i, j}, lhs, rhs});
        lhs = al.apply(d.succ.eval_basis(i, j));
        rhs = d.succ.eval(al.column(i), al.column(j));
        if (lhs != rhs) rep.add_witness({"alpha-succ", {i, j}, lhs, rhs});
      }
  }
  return rep;
}

HomPreLie prelie_from_dendriform(const HomDendriform& d) {
  CheckReport valid = check_hom_dendriform(d);
  if (!valid.passed)
    fail(Errc::invalid_system, witness_to_string(valid.witnesses.front(), d.basis));
  HomPreLie p(d.field, d.dim, d.basis);
  p.alpha = d.alpha;
  for (int i = 0; i < d.dim; ++i)
    for (int j = 0; j < d.dim; ++j)
      for (int k = 0; k < d.dim; ++k)
        p.diamond.at(i, j, k) = d.succ.at(i, j, k) - d.prec.at(i, j, k);
  if (!check_hom_prelie(p).passed)
    fail(Errc::invalid_input, "internal: derived preLie product failed validation");
  return p;
}

CheckReport check_hom_prelie(const HomPreLie& p, const CheckOptions& opt) {
  CheckReport rep{"hom-prelie"};
  int n = p.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec ak = p.alpha.column(k);
        Vec lhs = sub_vec(p.diamond.eval(p.diamond.eval_basis(i, j), ak),
                          p.diamond.eval(p.alpha.column(i), p.diamond.eval_basis(j, k)));
        Vec rhs = sub_vec(p.diamond.eval(p.diamond.eval_basis(j, i), ak),
                          p.diamond.eval(p.alpha.column(j), p.diamond.eval_basis(i, k)));
        if (lhs != rhs) rep.add_witness({"prelie", {i, j, k}, lhs, rhs});
      }
  if (opt.require_multiplicative) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec lhs = p.alpha.apply(p.diamond.eval_basis(i, j));
        Vec rhs = p.diamond.eval(p.alpha.column(i), p.alpha.column(j));
        if (lhs != rhs) rep.add_witness({"alpha-diamond", {i, j}, lhs, rhs});
      }
  }
  return rep;
}

HomAlgebra star_product(const RotaBaxterSystem& sys) {
  const HomAlgebra& a = sys.base;
  CheckReport valid = check_rb_system(a, sys.R, sys.S);
  if (!valid.passed)
    fail(Errc::invalid_system, witness_to_string(valid.witnesses.front(), a.basis));
  HomAlgebra out(a.field, a.dim, a.basis);
  out.alpha = a.alpha;
  for (int i = 0; i < a.dim; ++i) {
    Vec ei = zero_vec(a.field, a.dim);
    ei[i] = FieldScalar::one(a.field);
    for (int j = 0; j < a.dim; ++j) {
      Vec ej = zero_vec(a.field, a.dim);
      ej[j] = FieldScalar::one(a.field);
      Vec v = add_vec(a.mul.eval(ei, sys.S.column(j)), a.mul.eval(sys.R.column(i), ej));
      for (int k = 0; k < a.dim; ++k) out.mul.at(i, j, k) = v[k];
    }
  }
  if (!check_hom_algebra(out).passed)
    fail(Errc::invalid_input, "internal: star product failed validation");
  return out;
}

TwistorMap twistor_from_maps(const HomAlgebra& a, const LinearMap& R, const LinearMap& S) {
  require_operator_shape(a, R, "R");
  require_operator_shape(a, S, "S");
  int n = a.dim;
  TwistorMap tw(a.field, n, true);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // T(e_i (x) e_j) = R(e_i) (x) e_j + e_i (x) S(e_j)
      for (int x = 0; x < n; ++x) {
        if (!R.at(x, i).is_zero()) tw.at2(x, j, i, j) += R.at(x, i);
        if (!S.at(x, j).is_zero()) tw.at2(i, x, i, j) += S.at(x, j);
      }
      for (int k = 0; k < n; ++k) {
        // tau(e_i (x) e_j (x) e_k) = R(e_i) (x) R(e_j) (x) e_k
        //                          + R(e_i) (x) e_j (x) S(e_k)
        //                          + e_i (x) S(e_j) (x) S(e_k)
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            if (!R.at(x, i).is_zero() && !R.at(y, j).is_zero())
              tw.at3(x, y, k, i, j, k) += R.at(x, i) * R.at(y, j);
            if (!R.at(x, i).is_zero() && !S.at(y, k).is_zero())
              tw.at3(x, j, y, i, j, k) += R.at(x, i) * S.at(y, k);
            if (!S.at(x, j).is_zero() && !S.at(y, k).is_zero())
              tw.at3(i, x, y, i, j, k) += S.at(x, j) * S.at(y, k);
          }
      }
    }
  return tw;
}

TwistorMap pseudotwistor_from_rbs(const RotaBaxterSystem& sys) {
  CheckReport valid = check_rb_system(sys.base, sys.R, sys.S);
  if (!valid.passed)
    fail(Errc::invalid_system, witness_to_string(valid.witnesses.front(), sys.base.basis));
  TwistorMap tw = twistor_from_maps(sys.base, sys.R, sys.S);
  if (!check_weak_pseudotwistor(sys.base, tw).passed)
    fail(Errc::invalid_input, "internal: derived twistor failed validation");
  return tw;
}

CheckReport check_weak_pseudotwistor(const HomAlgebra& a, const TwistorMap& t) {
  if (t.dim() != a.dim || t.field() != a.field)
    fail(Errc::dim_mismatch, "twistor shape does not match algebra");
  if (!t.has_companion()) fail(Errc::missing_companion, "pentagon checks need the companion");
  CheckReport rep{"weak-pseudotwistor"};
  int n = a.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Tensor2 b = basis_tensor2(a.field, n, i, j);
      Tensor2 lhs = map_tensor2(a.alpha, a.alpha, t.apply(b));
      Tensor2 rhs = t.apply(map_tensor2(a.alpha, a.alpha, b));
      if (!(lhs == rhs)) rep.add_witness({"alpha2-commute", {i, j}, flatten(lhs), flatten(rhs)});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Tensor3 b(a.field, n);
        b.at(i, j, k) = FieldScalar::one(a.field);
        {
          Tensor3 lhs3 = map_tensor3(a.alpha, a.alpha, a.alpha, t.apply(b));
          Tensor3 rhs3 = t.apply(map_tensor3(a.alpha, a.alpha, a.alpha, b));
          if (!(lhs3 == rhs3)) {
            Vec l, r;
            for (int u = 0; u < n; ++u)
              for (int v = 0; v < n; ++v)
                for (int w = 0; w < n; ++w) {
                  l.push_back(lhs3.at(u, v, w));
                  r.push_back(rhs3.at(u, v, w));
                }
            rep.add_witness({"alpha3-commute", {i, j, k}, l, r});
          }
        }
        Tensor2 right_lhs = t.apply(mu_alpha_3to2(a, twistor_on_first2(t, b)));
        Tensor2 right_rhs = mu_alpha_3to2(a, t.apply(b));
        if (!(right_lhs == right_rhs))
          rep.add_witness({"pentagon-right", {i, j, k}, flatten(right_lhs), flatten(right_rhs)});
        Tensor2 left_lhs = t.apply(alpha_mu_3to2(a, twistor_on_last2(t, b)));
        Tensor2 left_rhs = alpha_mu_3to2(a, t.apply(b));
        if (!(left_lhs == left_rhs))
          rep.add_witness({"pentagon-left", {i, j, k}, flatten(left_lhs), flatten(left_rhs)});
      }
  return rep;
}

HomAlgebra product_from_twistor(const HomAlgebra& a, const TwistorMap& t) {
  CheckReport valid = check_weak_pseudotwistor(a, t);
  if (!valid.passed)
    fail(Errc::not_pseudotwistor, witness_to_string(valid.witnesses.front(), a.basis));
  HomAlgebra out(a.field, a.dim, a.basis);
  out.alpha = a.alpha;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Tensor2 b = basis_tensor2(a.field, a.dim, i, j);
      Tensor2 im = t.apply(b);
      Vec v = zero_vec(a.field, a.dim);
      for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y) {
          if (im.at(x, y).is_zero()) continue;
          Vec prod = a.mul.eval_basis(x, y);
          for (int k = 0; k < a.dim; ++k) v[k] += im.at(x, y) * prod[k];
        }
      for (int k = 0; k < a.dim; ++k) out.mul.at(i, j, k) = v[k];
    }
  if (!check_hom_algebra(out).passed)
    fail(Errc::invalid_input, "internal: twisted product failed validation");
  return out;
}

}  // namespace hombax
