#include "hombax/search.hpp"

namespace hombax {

namespace {

FieldScalar random_scalar(const FieldSpec& f, SplitMix64& rng) {
  if (f.kind() == FieldKind::prime)
    return FieldScalar::from_int(f, static_cast<std::int64_t>(rng.bounded(f.p())));
  return FieldScalar::from_int(f, static_cast<std::int64_t>(rng.bounded(9)) - 4);
}

bool weighted_ok(const HomAlgebra& a, const LinearMap& R, const FieldScalar& lambda) {
  try {
    rbs_from_weighted_operator(a, R, lambda);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::not_weighted_rb) return false;
    throw;
  }
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t bound) {
  if (bound == 0) fail(Errc::invalid_input, "bounded(0) is undefined");
  std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

Tensor2 random_tensor2(const FieldSpec& f, int n, SplitMix64& rng) {
  Tensor2 t(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(i, j) = random_scalar(f, rng);
  return t;
}

LinearMap random_linear_map(const FieldSpec& f, int n, SplitMix64& rng) {
  LinearMap m(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = random_scalar(f, rng);
  return m;
}

std::vector<Tensor2> invariant_tensor_basis(const HomAlgebra& a) {
  int n = a.dim;
  int m = n * n;
  const FieldSpec& f = a.field;
  FieldScalar one = FieldScalar::one(f);
  FieldScalar zero = FieldScalar::zero(f);

  // rows of (alpha (x) alpha) - id over the flattened tensor square
  std::vector<Vec> rows(m, zero_vec(f, m));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      int rw = p * n + q;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[rw][i * n + j] = a.alpha.at(p, i) * a.alpha.at(q, j);
      rows[rw][rw] = rows[rw][rw] - one;
    }

  std::vector<int> pivot_cols;
  int rank = 0;
  for (int col = 0; col < m && rank < m; ++col) {
    int sel = -1;
    for (int rw = rank; rw < m; ++rw)
      if (!rows[rw][col].is_zero()) {
        sel = rw;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    FieldScalar inv = one / rows[rank][col];
    for (int c = col; c < m; ++c) rows[rank][c] = rows[rank][c] * inv;
    for (int rw = 0; rw < m; ++rw) {
      if (rw == rank || rows[rw][col].is_zero()) continue;
      FieldScalar factor = rows[rw][col];
      for (int c = col; c < m; ++c)
        rows[rw][c] = rows[rw][c] - factor * rows[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<Tensor2> basis;
  for (int freec = 0; freec < m; ++freec) {
    if (is_pivot[freec]) continue;
    Vec v = zero_vec(f, m);
    v[freec] = one;
    for (int rw = 0; rw < rank; ++rw) v[pivot_cols[rw]] = zero - rows[rw][freec];
    Tensor2 t(f, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.at(i, j) = v[i * n + j];
    basis.push_back(std::move(t));
  }
  return basis;
}

Tensor2 random_invariant_tensor2(const HomAlgebra& a, SplitMix64& rng) {
  std::vector<Tensor2> basis = invariant_tensor_basis(a);
  Tensor2 t(a.field, a.dim);
  for (const Tensor2& b : basis) {
    FieldScalar c = random_scalar(a.field, rng);
    if (c.is_zero()) continue;
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) t.at(i, j) += c * b.at(i, j);
  }
  return t;
}

std::vector<SearchSolution> enumerate(const SearchTask& task) {
  const HomAlgebra& a = task.algebra;
  if (a.field.kind() != FieldKind::prime)
    fail(Errc::invalid_input, "search requires a prime field");
  if (!check_hom_algebra(a).passed)
    fail(Errc::not_associative, "base algebra failed validation");
  int n = a.dim;
  std::uint64_t p = static_cast<std::uint64_t>(a.field.p());
  int cells = task.target == SearchTarget::weighted_rb ? n * n + 1 : 2 * n * n;

  constexpr std::uint64_t kBound = 1ULL << 24;
  std::uint64_t space = 1;
  bool over = false;
  for (int i = 0; i < cells && !over; ++i) {
    if (space > kBound / p) {
      over = true;
      break;
    }
    space *= p;
  }
  if (space > kBound) over = true;
  if (task.exhaustive && over)
    fail(Errc::space_too_large,
         "exhaustive candidate space exceeds 2^24; rerun with a sampling seed");

  std::vector<int> digits(cells, 0);
  auto accept = [&](std::vector<SearchSolution>& out) {
    switch (task.target) {
      case SearchTarget::rb_systems: {
        LinearMap R(a.field, n), S(a.field, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            R.at(i, j) = FieldScalar::from_int(a.field, digits[i * n + j]);
            S.at(i, j) = FieldScalar::from_int(a.field, digits[n * n + i * n + j]);
          }
        if (check_rb_system(a, R, S).passed) {
          SearchSolution sol;
          sol.R = std::move(R);
          sol.S = std::move(S);
          out.push_back(std::move(sol));
        }
        break;
      }
      case SearchTarget::yb_pairs: {
        Tensor2 r(a.field, n), s(a.field, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            r.at(i, j) = FieldScalar::from_int(a.field, digits[i * n + j]);
            s.at(i, j) = FieldScalar::from_int(a.field, digits[n * n + i * n + j]);
          }
        if (check_yb_pair(a, r, s).passed) {
          SearchSolution sol;
          sol.r = std::move(r);
          sol.s = std::move(s);
          out.push_back(std::move(sol));
        }
        break;
      }
      case SearchTarget::weighted_rb: {
        LinearMap R(a.field, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            R.at(i, j) = FieldScalar::from_int(a.field, digits[i * n + j]);
        FieldScalar lambda = FieldScalar::from_int(a.field, digits[n * n]);
        if (weighted_ok(a, R, lambda)) {
          SearchSolution sol;
          sol.R = std::move(R);
          sol.lambda = std::move(lambda);
          out.push_back(std::move(sol));
        }
        break;
      }
    }
  };

  std::vector<SearchSolution> out;
  if (task.exhaustive) {
    for (std::uint64_t c = 0; c < space; ++c) {
      std::uint64_t rest = c;
      for (int idx = cells - 1; idx >= 0; --idx) {
        digits[idx] = static_cast<int>(rest % p);
        rest /= p;
      }
      accept(out);
    }
  } else {
    SplitMix64 rng(task.seed);
    for (int k = 0; k < task.samples; ++k) {
      for (int idx = 0; idx < cells; ++idx)
        digits[idx] = static_cast<int>(rng.bounded(p));
      accept(out);
    }
  }
  return out;
}

StructureBundle random_instance(RandomKind kind, const FieldSpec& field, int dim,
                                std::uint64_t seed) {
  if (dim < 1 || dim > 4)
    fail(Errc::unsupported_dim, "random instances support dimensions 1 through 4");
  SplitMix64 rng(seed);
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  StructureBundle b(field, dim, std::move(labels));
  switch (kind) {
    case RandomKind::tensor2:
      b.alpha = LinearMap::identity(field, dim);
      b.r = random_tensor2(field, dim, rng);
      break;
    case RandomKind::alpha_invariant_tensor2: {
      b.alpha = random_linear_map(field, dim, rng);
      b.r = random_invariant_tensor2(b.algebra(), rng);
      break;
    }
    case RandomKind::associative_algebra: {
      b.alpha = LinearMap::identity(field, dim);
      constexpr int kTries = 200000;
      bool found = false;
      for (int t = 0; t < kTries && !found; ++t) {
        BilinearMap mul(field, dim);
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
              // sparse bias: most entries stay zero so associativity is
              // reachable by rejection at desk scale
              if (rng.bounded(4) != 0) continue;
              mul.at(i, j, k) = random_scalar(field, rng);
            }
        b.mul = mul;
        if (check_hom_algebra(b.algebra()).passed) found = true;
      }
      if (!found)
        fail(Errc::invalid_input, "rejection sampling found no associative product");
      break;
    }
  }
  return b;
}

}  // namespace hombax
