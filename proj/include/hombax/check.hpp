#pragma once

#include <string>
#include <vector>

#include "hombax/tensor.hpp"

namespace hombax {

// One counterexample: which identity broke, at which basis tuple, and the
// two sides' coordinates (flattened for tensor-valued identities).
struct Witness {
  std::string identity;
  std::vector<int> where;
  Vec lhs;
  Vec rhs;
};

// passed holds iff witnesses is empty and every sub-report passed, except
// for explicitly documented equivalence reports whose verdict is the
// agreement of their sub-verdicts. Witnesses are emitted in lexicographic
// basis order, identity groups in declaration order.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::vector<Witness> witnesses;
  std::vector<CheckReport> sub;

  void add_witness(Witness w) {
    passed = false;
    witnesses.push_back(std::move(w));
  }

  void add_sub(CheckReport r) {
    passed = passed && r.passed;
    sub.push_back(std::move(r));
  }
};

// Options threaded through algebra/coalgebra checks. Multiplicativity of
// the twist is the standing convention; relaxing it is opt-in.
struct CheckOptions {
  bool require_multiplicative = true;
};

std::string witness_to_string(const Witness& w, const std::vector<std::string>& basis);

}  // namespace hombax
