#include "hombax/tensor.hpp"

namespace hombax {

namespace {

void require_same_shape(const FieldSpec& fa, int na, const FieldSpec& fb, int nb) {
  if (na != nb)
    fail(Errc::dim_mismatch, "dimensions " + std::to_string(na) + " and " + std::to_string(nb));
  if (fa != fb)
    fail(Errc::field_mismatch, "fields " + fa.to_string() + " and " + fb.to_string());
}

}  // namespace

Vec zero_vec(const FieldSpec& f, int n) { return Vec(n, FieldScalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add_vec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::dim_mismatch, "vector lengths differ");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub_vec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::dim_mismatch, "vector lengths differ");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale_vec(const FieldScalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

LinearMap::LinearMap(const FieldSpec& f, int dim)
    : f_(f), dim_(dim), m_(static_cast<std::size_t>(dim) * dim, FieldScalar::zero(f)) {
  if (dim <= 0) fail(Errc::dim_mismatch, "dimension must be positive");
}

LinearMap LinearMap::identity(const FieldSpec& f, int dim) {
  LinearMap id(f, dim);
  for (int i = 0; i < dim; ++i) id.at(i, i) = FieldScalar::one(f);
  return id;
}

Vec LinearMap::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_) fail(Errc::dim_mismatch, "vector length != map dim");
  Vec r = zero_vec(f_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Vec LinearMap::column(int j) const {
  Vec r = zero_vec(f_, dim_);
  for (int i = 0; i < dim_; ++i) r[i] = at(i, j);
  return r;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  require_same_shape(f_, dim_, inner.f_, inner.dim_);
  LinearMap r(f_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      FieldScalar s = FieldScalar::zero(f_);
      for (int k = 0; k < dim_; ++k) s += at(i, k) * inner.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

LinearMap LinearMap::power(int k) const {
  if (k < 0) fail(Errc::invalid_input, "negative power");
  LinearMap r = identity(f_, dim_);
  for (int i = 0; i < k; ++i) r = r.compose(*this);
  return r;
}

LinearMap LinearMap::transpose() const {
  LinearMap r(f_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(i, j) = at(j, i);
  return r;
}

LinearMap LinearMap::add(const LinearMap& o) const {
  require_same_shape(f_, dim_, o.f_, o.dim_);
  LinearMap r = *this;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(i, j) += o.at(i, j);
  return r;
}

LinearMap LinearMap::scale(const FieldScalar& c) const {
  LinearMap r = *this;
  for (auto& x : r.m_) x *= c;
  return r;
}

bool LinearMap::is_identity() const { return *this == identity(f_, dim_); }

BilinearMap::BilinearMap(const FieldSpec& f, int dim)
    : f_(f), dim_(dim),
      c_(static_cast<std::size_t>(dim) * dim * dim, FieldScalar::zero(f)) {
  if (dim <= 0) fail(Errc::dim_mismatch, "dimension must be positive");
}

Vec BilinearMap::eval_basis(int i, int j) const {
  Vec r = zero_vec(f_, dim_);
  for (int k = 0; k < dim_; ++k) r[k] = at(i, j, k);
  return r;
}

Vec BilinearMap::eval(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    fail(Errc::dim_mismatch, "vector length != map dim");
  Vec r = zero_vec(f_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      FieldScalar c = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) r[k] += c * at(i, j, k);
    }
  }
  return r;
}

BilinearMap BilinearMap::opposite() const {
  BilinearMap r(f_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) r.at(i, j, k) = at(j, i, k);
  return r;
}

BilinearMap BilinearMap::add(const BilinearMap& o) const {
  require_same_shape(f_, dim_, o.f_, o.dim_);
  BilinearMap r = *this;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Tensor2::Tensor2(const FieldSpec& f, int dim)
    : f_(f), dim_(dim), t_(static_cast<std::size_t>(dim) * dim, FieldScalar::zero(f)) {
  if (dim <= 0) fail(Errc::dim_mismatch, "dimension must be positive");
}

Tensor2 Tensor2::add(const Tensor2& o) const {
  require_same_shape(f_, dim_, o.f_, o.dim_);
  Tensor2 r = *this;
  for (std::size_t i = 0; i < r.t_.size(); ++i) r.t_[i] += o.t_[i];
  return r;
}

Tensor2 Tensor2::sub(const Tensor2& o) const {
  require_same_shape(f_, dim_, o.f_, o.dim_);
  Tensor2 r = *this;
  for (std::size_t i = 0; i < r.t_.size(); ++i) r.t_[i] -= o.t_[i];
  return r;
}

bool Tensor2::is_zero() const {
  for (const auto& x : t_)
    if (!x.is_zero()) return false;
  return true;
}

Tensor3::Tensor3(const FieldSpec& f, int dim)
    : f_(f), dim_(dim),
      t_(static_cast<std::size_t>(dim) * dim * dim, FieldScalar::zero(f)) {
  if (dim <= 0) fail(Errc::dim_mismatch, "dimension must be positive");
}

Tensor3 Tensor3::add(const Tensor3& o) const {
  require_same_shape(f_, dim_, o.f_, o.dim_);
  Tensor3 r = *this;
  for (std::size_t i = 0; i < r.t_.size(); ++i) r.t_[i] += o.t_[i];
  return r;
}

Tensor3 Tensor3::sub(const Tensor3& o) const {
  require_same_shape(f_, dim_, o.f_, o.dim_);
  Tensor3 r = *this;
  for (std::size_t i = 0; i < r.t_.size(); ++i) r.t_[i] -= o.t_[i];
  return r;
}

bool Tensor3::is_zero() const {
  for (const auto& x : t_)
    if (!x.is_zero()) return false;
  return true;
}

Coproduct::Coproduct(const FieldSpec& f, int dim)
    : f_(f), dim_(dim),
      d_(static_cast<std::size_t>(dim) * dim * dim, FieldScalar::zero(f)) {
  if (dim <= 0) fail(Errc::dim_mismatch, "dimension must be positive");
}

Tensor2 Coproduct::eval_basis(int i) const {
  Tensor2 r(f_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) r.at(j, k) = at(i, j, k);
  return r;
}

Tensor2 Coproduct::eval(const Vec& a) const {
  if (static_cast<int>(a.size()) != dim_) fail(Errc::dim_mismatch, "vector length != coproduct dim");
  Tensor2 r(f_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) r.at(j, k) += a[i] * at(i, j, k);
  }
  return r;
}

Coproduct Coproduct::add(const Coproduct& o) const {
  require_same_shape(f_, dim_, o.f_, o.dim_);
  Coproduct r = *this;
  for (std::size_t i = 0; i < r.d_.size(); ++i) r.d_[i] += o.d_[i];
  return r;
}

bool Coproduct::is_zero() const {
  for (const auto& x : d_)
    if (!x.is_zero()) return false;
  return true;
}

TwistorMap::TwistorMap(const FieldSpec& f, int dim, bool with_companion)
    : f_(f), dim_(dim) {
  if (dim <= 0) fail(Errc::dim_mismatch, "dimension must be positive");
  std::size_t n2 = static_cast<std::size_t>(dim) * dim;
  big_.assign(n2 * n2, FieldScalar::zero(f));
  if (with_companion) {
    std::size_t n3 = n2 * dim;
    companion_.emplace(n3 * n3, FieldScalar::zero(f));
  }
}

FieldScalar& TwistorMap::at2(int a, int b, int i, int j) {
  std::size_t n2 = static_cast<std::size_t>(dim_) * dim_;
  return big_[(a * dim_ + b) * n2 + (i * dim_ + j)];
}

const FieldScalar& TwistorMap::at2(int a, int b, int i, int j) const {
  std::size_t n2 = static_cast<std::size_t>(dim_) * dim_;
  return big_[(a * dim_ + b) * n2 + (i * dim_ + j)];
}

FieldScalar& TwistorMap::at3(int a, int b, int c, int i, int j, int k) {
  if (!companion_) fail(Errc::missing_companion, "twistor has no companion");
  std::size_t n3 = static_cast<std::size_t>(dim_) * dim_ * dim_;
  return (*companion_)[((a * dim_ + b) * dim_ + c) * n3 + ((i * dim_ + j) * dim_ + k)];
}

const FieldScalar& TwistorMap::at3(int a, int b, int c, int i, int j, int k) const {
  if (!companion_) fail(Errc::missing_companion, "twistor has no companion");
  std::size_t n3 = static_cast<std::size_t>(dim_) * dim_ * dim_;
  return (*companion_)[((a * dim_ + b) * dim_ + c) * n3 + ((i * dim_ + j) * dim_ + k)];
}

Tensor2 TwistorMap::apply(const Tensor2& t) const {
  require_same_shape(f_, dim_, t.field(), t.dim());
  Tensor2 r(f_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      if (t.at(i, j).is_zero()) continue;
      for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) r.at(a, b) += at2(a, b, i, j) * t.at(i, j);
    }
  return r;
}

Tensor3 TwistorMap::apply(const Tensor3& t) const {
  if (!companion_) fail(Errc::missing_companion, "twistor has no companion");
  require_same_shape(f_, dim_, t.field(), t.dim());
  Tensor3 r(f_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        if (t.at(i, j, k).is_zero()) continue;
        for (int a = 0; a < dim_; ++a)
          for (int b = 0; b < dim_; ++b)
            for (int c = 0; c < dim_; ++c)
              r.at(a, b, c) += at3(a, b, c, i, j, k) * t.at(i, j, k);
      }
  return r;
}

Vec apply_linear(const LinearMap& f, const Vec& v) { return f.apply(v); }

Vec bilinear_eval(const BilinearMap& mu, const Vec& x, const Vec& y) {
  return mu.eval(x, y);
}

Tensor2 map_tensor2(const LinearMap& f, const LinearMap& g, const Tensor2& t) {
  require_same_shape(f.field(), f.dim(), t.field(), t.dim());
  require_same_shape(g.field(), g.dim(), t.field(), t.dim());
  int n = t.dim();
  Tensor2 r(t.field(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (t.at(i, j).is_zero()) continue;
      for (int a = 0; a < n; ++a) {
        if (f.at(a, i).is_zero()) continue;
        FieldScalar c = f.at(a, i) * t.at(i, j);
        for (int b = 0; b < n; ++b) r.at(a, b) += c * g.at(b, j);
      }
    }
  return r;
}

Tensor3 map_tensor3(const LinearMap& f, const LinearMap& g, const LinearMap& h,
                    const Tensor3& t) {
  require_same_shape(f.field(), f.dim(), t.field(), t.dim());
  require_same_shape(g.field(), g.dim(), t.field(), t.dim());
  require_same_shape(h.field(), h.dim(), t.field(), t.dim());
  int n = t.dim();
  Tensor3 r(t.field(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (t.at(i, j, k).is_zero()) continue;
        for (int a = 0; a < n; ++a) {
          if (f.at(a, i).is_zero()) continue;
          for (int b = 0; b < n; ++b) {
            if (g.at(b, j).is_zero()) continue;
            FieldScalar c = f.at(a, i) * g.at(b, j) * t.at(i, j, k);
            for (int cc = 0; cc < n; ++cc) r.at(a, b, cc) += c * h.at(cc, k);
          }
        }
      }
  return r;
}

Tensor2 coproduct_eval(const Coproduct& d, const Vec& a) { return d.eval(a); }

Tensor2 apply_twistor(const TwistorMap& tw, const Tensor2& t) { return tw.apply(t); }
Tensor3 apply_twistor(const TwistorMap& tw, const Tensor3& t) { return tw.apply(t); }

Tensor2 tensor2_of(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) fail(Errc::dim_mismatch, "vector lengths differ");
  int n = static_cast<int>(x.size());
  if (n == 0) fail(Errc::dim_mismatch, "empty vector");
  Tensor2 r(x[0].field(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = x[i] * y[j];
  return r;
}

Tensor3 tensor3_of(const Vec& x, const Vec& y, const Vec& z) {
  if (x.size() != y.size() || y.size() != z.size())
    fail(Errc::dim_mismatch, "vector lengths differ");
  int n = static_cast<int>(x.size());
  if (n == 0) fail(Errc::dim_mismatch, "empty vector");
  Tensor3 r(x[0].field(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r.at(i, j, k) = x[i] * y[j] * z[k];
  return r;
}

}  // namespace hombax
