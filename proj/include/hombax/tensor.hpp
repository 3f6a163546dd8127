#pragma once

#include <optional>
#include <vector>

#include "hombax/scalar.hpp"

namespace hombax {

using Vec = std::vector<FieldScalar>;

Vec zero_vec(const FieldSpec& f, int n);
bool is_zero_vec(const Vec& v);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const FieldScalar& c, const Vec& v);

// n x n matrix, column convention: the image of e_j is sum_i at(i,j) e_i.
class LinearMap {
 public:
  LinearMap(const FieldSpec& f, int dim);
  static LinearMap identity(const FieldSpec& f, int dim);

  int dim() const { return dim_; }
  const FieldSpec& field() const { return f_; }
  FieldScalar& at(int i, int j) { return m_[i * dim_ + j]; }
  const FieldScalar& at(int i, int j) const { return m_[i * dim_ + j]; }

  Vec apply(const Vec& v) const;
  Vec column(int j) const;  // image of e_j
  LinearMap compose(const LinearMap& inner) const;  // this after inner
  LinearMap power(int k) const;                     // k >= 0
  LinearMap transpose() const;
  LinearMap add(const LinearMap& o) const;
  LinearMap scale(const FieldScalar& c) const;
  bool is_identity() const;

  bool operator==(const LinearMap& o) const = default;

 private:
  FieldSpec f_;
  int dim_;
  std::vector<FieldScalar> m_;
};

// Structure constants c[i][j][k]: mu(e_i, e_j) = sum_k c[i][j][k] e_k.
class BilinearMap {
 public:
  BilinearMap(const FieldSpec& f, int dim);

  int dim() const { return dim_; }
  const FieldSpec& field() const { return f_; }
  FieldScalar& at(int i, int j, int k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const FieldScalar& at(int i, int j, int k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  Vec eval_basis(int i, int j) const;  // mu(e_i, e_j)
  Vec eval(const Vec& x, const Vec& y) const;
  BilinearMap opposite() const;  // (x, y) -> mu(y, x)
  BilinearMap add(const BilinearMap& o) const;

  bool operator==(const BilinearMap& o) const = default;

 private:
  FieldSpec f_;
  int dim_;
  std::vector<FieldScalar> c_;
};

class Tensor2 {
 public:
  Tensor2(const FieldSpec& f, int dim);

  int dim() const { return dim_; }
  const FieldSpec& field() const { return f_; }
  FieldScalar& at(int i, int j) { return t_[i * dim_ + j]; }
  const FieldScalar& at(int i, int j) const { return t_[i * dim_ + j]; }

  Tensor2 add(const Tensor2& o) const;
  Tensor2 sub(const Tensor2& o) const;
  bool is_zero() const;

  bool operator==(const Tensor2& o) const = default;

 private:
  FieldSpec f_;
  int dim_;
  std::vector<FieldScalar> t_;
};

class Tensor3 {
 public:
  Tensor3(const FieldSpec& f, int dim);

  int dim() const { return dim_; }
  const FieldSpec& field() const { return f_; }
  FieldScalar& at(int i, int j, int k) { return t_[(i * dim_ + j) * dim_ + k]; }
  const FieldScalar& at(int i, int j, int k) const { return t_[(i * dim_ + j) * dim_ + k]; }

  Tensor3 add(const Tensor3& o) const;
  Tensor3 sub(const Tensor3& o) const;
  bool is_zero() const;

  bool operator==(const Tensor3& o) const = default;

 private:
  FieldSpec f_;
  int dim_;
  std::vector<FieldScalar> t_;
};

// Coproduct data d[i][j][k]: delta(e_i) = sum_{j,k} d[i][j][k] e_j (x) e_k.
class Coproduct {
 public:
  Coproduct(const FieldSpec& f, int dim);

  int dim() const { return dim_; }
  const FieldSpec& field() const { return f_; }
  FieldScalar& at(int i, int j, int k) { return d_[(i * dim_ + j) * dim_ + k]; }
  const FieldScalar& at(int i, int j, int k) const { return d_[(i * dim_ + j) * dim_ + k]; }

  Tensor2 eval_basis(int i) const;
  Tensor2 eval(const Vec& a) const;
  Coproduct add(const Coproduct& o) const;
  bool is_zero() const;

  bool operator==(const Coproduct& o) const = default;

 private:
  FieldSpec f_;
  int dim_;
  std::vector<FieldScalar> d_;
};

// Linear endomorphism of A (x) A given by an n^2 x n^2 matrix in the
// column convention, pairs flattened row-major: (i, j) -> i*n + j.
// An optional companion acts on A (x) A (x) A the same way.
class TwistorMap {
 public:
  TwistorMap(const FieldSpec& f, int dim, bool with_companion);

  int dim() const { return dim_; }
  const FieldSpec& field() const { return f_; }
  bool has_companion() const { return companion_.has_value(); }

  FieldScalar& at2(int a, int b, int i, int j);
  const FieldScalar& at2(int a, int b, int i, int j) const;
  FieldScalar& at3(int a, int b, int c, int i, int j, int k);
  const FieldScalar& at3(int a, int b, int c, int i, int j, int k) const;

  Tensor2 apply(const Tensor2& t) const;
  Tensor3 apply(const Tensor3& t) const;  // MissingCompanion if absent

  bool operator==(const TwistorMap& o) const = default;

 private:
  FieldSpec f_;
  int dim_;
  std::vector<FieldScalar> big_;                     // n^2 x n^2
  std::optional<std::vector<FieldScalar>> companion_;  // n^3 x n^3
};

Vec apply_linear(const LinearMap& f, const Vec& v);
Vec bilinear_eval(const BilinearMap& mu, const Vec& x, const Vec& y);
Tensor2 map_tensor2(const LinearMap& f, const LinearMap& g, const Tensor2& t);
Tensor3 map_tensor3(const LinearMap& f, const LinearMap& g, const LinearMap& h,
                    const Tensor3& t);
Tensor2 coproduct_eval(const Coproduct& d, const Vec& a);
Tensor2 apply_twistor(const TwistorMap& tw, const Tensor2& t);
Tensor3 apply_twistor(const TwistorMap& tw, const Tensor3& t);

Tensor2 tensor2_of(const Vec& x, const Vec& y);          // x (x) y
Tensor3 tensor3_of(const Vec& x, const Vec& y, const Vec& z);

}  // namespace hombax
