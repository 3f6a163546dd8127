#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "hombax/covariant.hpp"
#include "hombax/yang_baxter.hpp"

namespace hombax {

// On-disk structure container. The base algebra (field, dim, basis, mul,
// alpha) is mandatory; every other section is optional and self-describing.
// Scalars are stored as exact strings, matrices row-major with
// m[i][j] = coefficient of e_i in the image of e_j, cubic arrays as
// c[i][j][k] (bilinear: e_i.e_j -> e_k; coproduct: e_i -> e_j (x) e_k).
struct StructureBundle {
  FieldSpec field;
  int dim;
  std::vector<std::string> basis;
  BilinearMap mul;
  LinearMap alpha;

  std::optional<LinearMap> R, S, phi;
  std::optional<Tensor2> r, s;
  std::optional<Coproduct> coproduct, delta1, delta2;
  std::optional<BilinearMap> prec, succ, diamond, partial1, partial2;
  std::optional<int> n_power;
  std::optional<FieldScalar> lambda;

  StructureBundle(FieldSpec f, int n, std::vector<std::string> labels);

  HomAlgebra algebra() const;
};

// Declared-section semantic validation; throws on the first failing
// section (NotAssociative for the base, InvalidSystem / NotYbPair /
// NotInvariant for the rest).
void validate_bundle(const StructureBundle& b);

// Throws SchemaError / ShapeError / ParseError with a JSON-pointer path
// into the offending element. validate additionally runs validate_bundle.
StructureBundle bundle_from_json(const nlohmann::ordered_json& j, bool validate);
StructureBundle load_bundle(const std::string& path, bool validate);

nlohmann::ordered_json bundle_to_json(const StructureBundle& b);

// Canonical form: two-space indent, fixed key order, trailing newline.
// save(load(f)) is byte-identical for canonically formatted input.
void save_bundle(const StructureBundle& b, const std::string& path);

}  // namespace hombax
