#pragma once

#include <cstdint>

#include "hombax/bundle.hpp"

namespace hombax {

// splitmix64: the deterministic stream behind every seeded sampler, so an
// identical seed reproduces identical structures on any platform.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::uint64_t bounded(std::uint64_t bound);
};

enum class SearchTarget { rb_systems, yb_pairs, weighted_rb };

// Candidate spaces over GF(p): rb_systems and yb_pairs range over pairs of
// n x n coefficient arrays (p^(2n^2) candidates), weighted_rb over
// (R, lambda) (p^(n^2+1)). Exhaustive mode requires the space <= 2^24.
struct SearchTask {
  SearchTarget target;
  HomAlgebra algebra;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  int samples = 100;
};

struct SearchSolution {
  std::optional<LinearMap> R, S;
  std::optional<Tensor2> r, s;
  std::optional<FieldScalar> lambda;
};

// Acceptance is decided by the public checkers (check_rb_system,
// check_yb_pair, rbs_from_weighted_operator), never by a reimplementation.
// Exhaustive results are complete and ordered lexicographically by the
// flattened coefficient arrays; sampled results follow the seed stream.
std::vector<SearchSolution> enumerate(const SearchTask& task);

// Uniform entries: residues for prime fields, integers in [-4, 4] for the
// rationals.
Tensor2 random_tensor2(const FieldSpec& f, int n, SplitMix64& rng);
LinearMap random_linear_map(const FieldSpec& f, int n, SplitMix64& rng);

// Exact kernel basis of (alpha (x) alpha) - id on A (x) A; a random
// invariant tensor is a random combination of this basis.
std::vector<Tensor2> invariant_tensor_basis(const HomAlgebra& a);
Tensor2 random_invariant_tensor2(const HomAlgebra& a, SplitMix64& rng);

enum class RandomKind { tensor2, alpha_invariant_tensor2, associative_algebra };

// dim <= 4 (UnsupportedDim); identical (kind, field, dim, seed) yield
// byte-identical bundles. associative_algebra rejection-samples a sparse
// product until plain associativity holds.
StructureBundle random_instance(RandomKind kind, const FieldSpec& field, int dim,
                                std::uint64_t seed);

}  // namespace hombax
