#include "hombax/hom.hpp"

#include <sstream>

namespace hombax {

std::string witness_to_string(const Witness& w, const std::vector<std::string>& basis) {
  std::ostringstream os;
  os << w.identity << " at (";
  for (std::size_t i = 0; i < w.where.size(); ++i) {
    if (i) os << ",";
    int idx = w.where[i];
    if (idx >= 0 && idx < static_cast<int>(basis.size()))
      os << basis[idx];
    else
      os << idx;
  }
  os << ")";
  return os.str();
}

namespace {

Vec flatten(const Tensor2& t) {
  Vec r;
  r.reserve(static_cast<std::size_t>(t.dim()) * t.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) r.push_back(t.at(i, j));
  return r;
}

Vec flatten(const Tensor3& t) {
  Vec r;
  r.reserve(static_cast<std::size_t>(t.dim()) * t.dim() * t.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      for (int k = 0; k < t.dim(); ++k) r.push_back(t.at(i, j, k));
  return r;
}

}  // namespace

Tensor3 delta_tensor_alpha(const Coproduct& d, const LinearMap& alpha, const Tensor2& t) {
  int n = t.dim();
  Tensor3 r(t.field(), n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (t.at(j, k).is_zero()) continue;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          if (d.at(j, p, q).is_zero()) continue;
          FieldScalar c = t.at(j, k) * d.at(j, p, q);
          for (int w = 0; w < n; ++w) r.at(p, q, w) += c * alpha.at(w, k);
        }
    }
  return r;
}

Tensor3 alpha_tensor_delta(const LinearMap& alpha, const Coproduct& d, const Tensor2& t) {
  int n = t.dim();
  Tensor3 r(t.field(), n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (t.at(j, k).is_zero()) continue;
      for (int a = 0; a < n; ++a) {
        if (alpha.at(a, j).is_zero()) continue;
        FieldScalar c = t.at(j, k) * alpha.at(a, j);
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) r.at(a, p, q) += c * d.at(k, p, q);
      }
    }
  return r;
}

Tensor2 act_left2(const HomAlgebra& a, const Vec& x, const Tensor2& t) {
  int n = a.dim;
  Vec ax = a.alpha.apply(x);
  Tensor2 r(a.field, n);
  for (int p = 0; p < n; ++p) {
    Vec ep = zero_vec(a.field, n);
    ep[p] = FieldScalar::one(a.field);
    Vec first = a.mul.eval(ax, ep);
    for (int q = 0; q < n; ++q) {
      if (t.at(p, q).is_zero()) continue;
      for (int k = 0; k < n; ++k) {
        if (first[k].is_zero()) continue;
        FieldScalar c = first[k] * t.at(p, q);
        for (int w = 0; w < n; ++w) r.at(k, w) += c * a.alpha.at(w, q);
      }
    }
  }
  return r;
}

Tensor2 act_right2(const HomAlgebra& a, const Tensor2& t, const Vec& x) {
  int n = a.dim;
  Vec ax = a.alpha.apply(x);
  Tensor2 r(a.field, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (t.at(p, q).is_zero()) continue;
      Vec eq = zero_vec(a.field, n);
      eq[q] = FieldScalar::one(a.field);
      Vec last = a.mul.eval(eq, ax);
      for (int k = 0; k < n; ++k) {
        if (a.alpha.at(k, p).is_zero()) continue;
        FieldScalar c = a.alpha.at(k, p) * t.at(p, q);
        for (int w = 0; w < n; ++w) r.at(k, w) += c * last[w];
      }
    }
  return r;
}

Tensor3 act_left3(const HomAlgebra& a, const Vec& x, const Tensor3& t) {
  int n = a.dim;
  Vec ax = a.alpha.apply(x);
  Tensor3 r(a.field, n);
  for (int p = 0; p < n; ++p) {
    Vec ep = zero_vec(a.field, n);
    ep[p] = FieldScalar::one(a.field);
    Vec first = a.mul.eval(ax, ep);
    for (int q = 0; q < n; ++q)
      for (int w = 0; w < n; ++w) {
        if (t.at(p, q, w).is_zero()) continue;
        for (int k = 0; k < n; ++k) {
          if (first[k].is_zero()) continue;
          FieldScalar c = first[k] * t.at(p, q, w);
          for (int b = 0; b < n; ++b) {
            if (a.alpha.at(b, q).is_zero()) continue;
            FieldScalar cb = c * a.alpha.at(b, q);
            for (int cc = 0; cc < n; ++cc) r.at(k, b, cc) += cb * a.alpha.at(cc, w);
          }
        }
      }
  }
  return r;
}

Tensor3 act_right3(const HomAlgebra& a, const Tensor3& t, const Vec& x) {
  int n = a.dim;
  Vec ax = a.alpha.apply(x);
  Tensor3 r(a.field, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int w = 0; w < n; ++w) {
        if (t.at(p, q, w).is_zero()) continue;
        Vec ew = zero_vec(a.field, n);
        ew[w] = FieldScalar::one(a.field);
        Vec last = a.mul.eval(ew, ax);
        for (int k = 0; k < n; ++k) {
          if (a.alpha.at(k, p).is_zero()) continue;
          FieldScalar c = a.alpha.at(k, p) * t.at(p, q, w);
          for (int b = 0; b < n; ++b) {
            if (a.alpha.at(b, q).is_zero()) continue;
            FieldScalar cb = c * a.alpha.at(b, q);
            for (int cc = 0; cc < n; ++cc) r.at(k, b, cc) += cb * last[cc];
          }
        }
      }
  return r;
}

CheckReport check_hom_algebra(const HomAlgebra& a, const CheckOptions& opt) {
  CheckReport rep{"hom-algebra"};
  int n = a.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec eij = a.mul.eval_basis(i, j);
      for (int k = 0; k < n; ++k) {
        Vec lhs = a.mul.eval(eij, a.alpha.column(k));
        Vec rhs = a.mul.eval(a.alpha.column(i), a.mul.eval_basis(j, k));
        if (lhs != rhs) rep.add_witness({"hom-assoc", {i, j, k}, lhs, rhs});
      }
    }
  if (opt.require_multiplicative) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec lhs = a.alpha.apply(a.mul.eval_basis(i, j));
        Vec rhs = a.mul.eval(a.alpha.column(i), a.alpha.column(j));
        if (lhs != rhs) rep.add_witness({"multiplicativity", {i, j}, lhs, rhs});
      }
  }
  return rep;
}

CheckReport check_hom_coalgebra(const HomCoalgebra& c, const CheckOptions& opt) {
  CheckReport rep{"hom-coalgebra"};
  int n = c.dim;
  for (int i = 0; i < n; ++i) {
    Tensor2 di = c.delta.eval_basis(i);
    Tensor3 lhs = delta_tensor_alpha(c.delta, c.alpha, di);
    Tensor3 rhs = alpha_tensor_delta(c.alpha, c.delta, di);
    if (!(lhs == rhs))
      rep.add_witness({"hom-coassoc", {i}, flatten(lhs), flatten(rhs)});
  }
  if (opt.require_multiplicative) {
    for (int i = 0; i < n; ++i) {
      Tensor2 lhs = map_tensor2(c.alpha, c.alpha, c.delta.eval_basis(i));
      Tensor2 rhs = c.delta.eval(c.alpha.column(i));
      if (!(lhs == rhs))
        rep.add_witness({"comultiplicativity", {i}, flatten(lhs), flatten(rhs)});
    }
  }
  return rep;
}

CheckReport check_infinitesimal_compat(const HomAlgebra& a, const Coproduct& delta) {
  if (delta.dim() != a.dim || delta.field() != a.field)
    fail(Errc::dim_mismatch, "coproduct shape does not match algebra");
  CheckReport rep{"infinitesimal-compat"};
  int n = a.dim;
  for (int i = 0; i < n; ++i) {
    Vec ei = zero_vec(a.field, n);
    ei[i] = FieldScalar::one(a.field);
    for (int j = 0; j < n; ++j) {
      Vec ej = zero_vec(a.field, n);
      ej[j] = FieldScalar::one(a.field);
      Tensor2 lhs = delta.eval(a.mul.eval_basis(i, j));
      Tensor2 rhs = act_left2(a, ei, delta.eval_basis(j))
                        .add(act_right2(a, delta.eval_basis(i), ej));
      if (!(lhs == rhs)) rep.add_witness({"compat", {i, j}, flatten(lhs), flatten(rhs)});
    }
  }
  return rep;
}

HomAlgebra induce_algebra_by_composition(const HomAlgebra& a, const LinearMap& phi) {
  if (phi.dim() != a.dim || phi.field() != a.field)
    fail(Errc::dim_mismatch, "morphism shape does not match algebra");
  if (!a.alpha.is_identity())
    fail(Errc::invalid_input, "input twist must be the identity");
  CheckReport assoc = check_hom_algebra(a);
  if (!assoc.passed)
    fail(Errc::not_associative,
         witness_to_string(assoc.witnesses.front(), a.basis));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec lhs = phi.apply(a.mul.eval_basis(i, j));
      Vec rhs = a.mul.eval(phi.column(i), phi.column(j));
      if (lhs != rhs)
        fail(Errc::not_morphism,
             witness_to_string({"morphism", {i, j}, lhs, rhs}, a.basis));
    }

  HomAlgebra out(a.field, a.dim, a.basis);
  out.alpha = phi;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec v = phi.apply(a.mul.eval_basis(i, j));
      for (int k = 0; k < a.dim; ++k) out.mul.at(i, j, k) = v[k];
    }
  CheckReport post = check_hom_algebra(out);
  if (!post.passed)
    fail(Errc::invalid_input, "internal: induced algebra failed validation");
  return out;
}

}  // namespace hombax
