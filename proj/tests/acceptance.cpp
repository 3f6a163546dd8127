// Acceptance gate: one pass/fail line per criterion, exit = failure count.
// Every numeric expectation is recomputed here from first principles or
// against an independently coded oracle; nothing is read back from the
// library's own verdicts unless the criterion is about those verdicts.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fixtures.hpp"
#include "hombax/bundle.hpp"
#include "hombax/catalog.hpp"
#include "hombax/covariant.hpp"
#include "hombax/search.hpp"

using namespace hombax;
using nlohmann::ordered_json;

namespace {

std::string g_cli;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult res;
  if (!pipe) return res;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

// ---------- independent oracles ----------

// Classical pair equations at alpha = id, written out as raw sums over
// structure constants. Shares no code with the library's triple products.
bool classical_pair_verdict(const HomAlgebra& a, const Tensor2& r, const Tensor2& s) {
  const int n = a.dim;
  const FieldScalar zero = FieldScalar::zero(a.field);
  std::vector<FieldScalar> e1(static_cast<std::size_t>(n) * n * n, zero);
  std::vector<FieldScalar> e2 = e1;
  auto idx = [n](int p, int q, int w) { return (p * n + q) * n + w; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          FieldScalar rr = r.at(i, j) * r.at(k, l);
          FieldScalar sr = s.at(i, j) * r.at(k, l);
          FieldScalar ss = s.at(i, j) * s.at(k, l);
          for (int p = 0; p < n; ++p) {
            e1[idx(p, l, j)] = e1[idx(p, l, j)] + rr * a.mul.at(i, k, p);
            e2[idx(p, l, j)] = e2[idx(p, l, j)] + sr * a.mul.at(i, k, p);
          }
          for (int q = 0; q < n; ++q) {
            e1[idx(i, q, l)] = e1[idx(i, q, l)] - rr * a.mul.at(j, k, q);
            e2[idx(i, q, l)] = e2[idx(i, q, l)] - ss * a.mul.at(j, k, q);
          }
          for (int w = 0; w < n; ++w) {
            e1[idx(k, i, w)] = e1[idx(k, i, w)] + sr * a.mul.at(j, l, w);
            e2[idx(k, i, w)] = e2[idx(k, i, w)] + ss * a.mul.at(j, l, w);
          }
        }
  for (const FieldScalar& v : e1)
    if (!(v == zero)) return false;
  for (const FieldScalar& v : e2)
    if (!(v == zero)) return false;
  return true;
}

// Single-tensor equation r13r12 - r12r23 + r23r13 = 0 with alpha on the
// untouched legs, raw sums again.
bool twisted_single_tensor_verdict(const HomAlgebra& a, const Tensor2& r) {
  const int n = a.dim;
  const FieldScalar zero = FieldScalar::zero(a.field);
  std::vector<FieldScalar> e(static_cast<std::size_t>(n) * n * n, zero);
  auto idx = [n](int p, int q, int w) { return (p * n + q) * n + w; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          FieldScalar c = r.at(i, j) * r.at(k, l);
          for (int p = 0; p < n; ++p)
            for (int u = 0; u < n; ++u)
              for (int v = 0; v < n; ++v) {
                e[idx(p, u, v)] = e[idx(p, u, v)] +
                                  c * a.mul.at(i, k, p) * a.alpha.at(u, l) * a.alpha.at(v, j);
                e[idx(u, p, v)] = e[idx(u, p, v)] -
                                  c * a.alpha.at(u, i) * a.mul.at(j, k, p) * a.alpha.at(v, l);
                e[idx(u, v, p)] = e[idx(u, v, p)] +
                                  c * a.alpha.at(u, k) * a.alpha.at(v, i) * a.mul.at(j, l, p);
              }
        }
  for (const FieldScalar& v : e)
    if (!(v == zero)) return false;
  return true;
}

// ---------- corpus helpers ----------

Tensor2 span_yz_tensor(const HomAlgebra& p3, SplitMix64& rng) {
  Tensor2 t(p3.field, 3);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      t.at(i, j) = FieldScalar::from_int(p3.field,
                                         static_cast<std::int64_t>(rng.bounded(5)));
  return t;
}

Tensor2 scaled_xx(const HomAlgebra& a, std::int64_t c) {
  Tensor2 t(a.field, 2);
  t.at(1, 1) = FieldScalar::from_int(a.field, c);
  return t;
}

struct Tally {
  int instances = 0;
  std::string bad;

  void require(bool ok, const std::string& what) {
    ++instances;
    if (!ok && bad.empty()) bad = what;
  }
  bool passed() const { return bad.empty(); }
};

// The full plain-system chain: dendriform, preLie, star, pentagon, mu o T.
void run_system_chain(Tally& t, const HomAlgebra& a, const LinearMap& R,
                      const LinearMap& S, const std::string& tag) {
  t.require(check_alpha_n_rbs(a, R, S, 0).passed, tag + ": system check");
  RotaBaxterSystem sys{a, R, S};
  HomDendriform d = dendriform_from_rbs(sys);
  t.require(check_hom_dendriform(d).passed, tag + ": dendriform");
  t.require(check_hom_prelie(prelie_from_dendriform(d)).passed, tag + ": prelie");
  HomAlgebra star = star_product(sys);
  t.require(check_hom_algebra(star).passed, tag + ": star associativity");
  TwistorMap tw = pseudotwistor_from_rbs(sys);
  t.require(check_weak_pseudotwistor(a, tw).passed, tag + ": pentagon");
  t.require(product_from_twistor(a, tw).mul == star.mul, tag + ": mu o T vs star");
}

// The full pair chain: (alpha^2)-system, dendriform, star, preLie,
// quasitriangular covariant structure, dual.
void run_pair_chain(Tally& t, const HomAlgebra& a, const Tensor2& r, const Tensor2& s,
                    const std::string& tag) {
  t.require(check_yb_pair(a, r, s).passed, tag + ": pair check");
  YangBaxterPair pair{a, r, s};
  YbpInducedStructures ind = ybp_induced_structures(pair);
  t.require(ind.system.n_power == 2, tag + ": induced twist power");
  t.require(check_alpha_n_rbs(a, ind.system.R, ind.system.S, 2).passed,
            tag + ": induced system");
  t.require(check_hom_dendriform(ind.dendriform).passed, tag + ": induced dendriform");
  t.require(check_hom_algebra(ind.star).passed, tag + ": induced star");
  t.require(check_hom_prelie(ind.prelie).passed, tag + ": induced prelie");
  CovariantHomBialgebra cb = build_quasitriangular(pair);
  t.require(check_covariant_hom_bialgebra(cb).passed, tag + ": covariant structure");
  t.require(check_dual_covariant(dualize(cb)).passed, tag + ": dual structure");
}

std::vector<YangBaxterPair> g_yb_corpus;  // collected by C1, reused by C3

// ---------- criteria ----------

std::string crit_theorem_suite() {
  auto t0 = std::chrono::steady_clock::now();
  Tally tally;
  FieldSpec gf2 = FieldSpec::prime(2);
  FieldSpec gf5 = FieldSpec::prime(5);

  // exhaustive GF(2) corpora on the zero algebra and the dual numbers
  HomAlgebra z2 = catalog("z2").bundle.algebra();
  HomAlgebra d2 = fx::dual_numbers(gf2);
  int z2_pairs = 0;
  for (const auto& [name, alg] : {std::pair<std::string, HomAlgebra>{"z2", z2},
                                  {"gf2 dual numbers", d2}}) {
    std::vector<SearchSolution> systems =
        enumerate({SearchTarget::rb_systems, alg, true, 0, 0});
    for (const SearchSolution& sol : systems)
      run_system_chain(tally, alg, *sol.R, *sol.S, name + " system");
    std::vector<SearchSolution> pairs =
        enumerate({SearchTarget::yb_pairs, alg, true, 0, 0});
    if (name == "z2") z2_pairs = static_cast<int>(pairs.size());
    for (const SearchSolution& sol : pairs) {
      run_pair_chain(tally, alg, *sol.r, *sol.s, name + " pair");
      g_yb_corpus.push_back({alg, *sol.r, *sol.s});
    }
    std::vector<SearchSolution> weighted =
        enumerate({SearchTarget::weighted_rb, alg, true, 0, 0});
    for (const SearchSolution& sol : weighted) {
      RotaBaxterSystem sys = rbs_from_weighted_operator(alg, *sol.R, *sol.lambda);
      run_system_chain(tally, alg, sys.R, sys.S, name + " weighted");
    }
  }
  if (z2_pairs != 256) return "expected 256 exhaustive z2 pairs, found " +
                               std::to_string(z2_pairs);

  // seeded random GF(5) corpus, dimensions 2 and 3
  int gf5_instances = 0;
  SplitMix64 rng{1001};
  for (int dim : {2, 3}) {
    HomAlgebra zero = fx::zero_algebra(gf5, dim);
    for (int i = 0; i < 60; ++i) {
      LinearMap R = random_linear_map(gf5, dim, rng);
      LinearMap S = random_linear_map(gf5, dim, rng);
      run_system_chain(tally, zero, R, S, "gf5 zero system");
      ++gf5_instances;
    }
    for (int i = 0; i < 30; ++i) {
      Tensor2 r = random_tensor2(gf5, dim, rng);
      Tensor2 s = random_tensor2(gf5, dim, rng);
      run_pair_chain(tally, zero, r, s, "gf5 zero pair");
      g_yb_corpus.push_back({zero, r, s});
      ++gf5_instances;
    }
    for (int i = 0; i < 15; ++i) {
      LinearMap R = random_linear_map(gf5, dim, rng);
      FieldScalar lambda =
          FieldScalar::from_int(gf5, static_cast<std::int64_t>(rng.bounded(5)));
      RotaBaxterSystem sys = rbs_from_weighted_operator(zero, R, lambda);
      run_system_chain(tally, zero, sys.R, sys.S, "gf5 weighted");
      ++gf5_instances;
    }
  }
  // nontrivial products and twists: tensors whose factors multiply to zero
  HomAlgebra fam = fx::dual_family_gf5(4);
  for (int i = 0; i < 25; ++i) {
    Tensor2 r = scaled_xx(fam, static_cast<std::int64_t>(rng.bounded(5)));
    Tensor2 s = scaled_xx(fam, static_cast<std::int64_t>(rng.bounded(5)));
    run_pair_chain(tally, fam, r, s, "gf5 twisted family pair");
    g_yb_corpus.push_back({fam, r, s});
    ++gf5_instances;
  }
  HomAlgebra p3 = fx::p3_nilpotent(1);
  for (int i = 0; i < 25; ++i) {
    Tensor2 r = span_yz_tensor(p3, rng);
    Tensor2 s = span_yz_tensor(p3, rng);
    run_pair_chain(tally, p3, r, s, "gf5 rank-3 pair");
    g_yb_corpus.push_back({p3, r, s});
    ++gf5_instances;
  }

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!tally.passed()) return tally.bad;
  if (gf5_instances < 200)
    return "only " + std::to_string(gf5_instances) + " random gf(5) instances";
  if (secs >= 60.0) return "took " + std::to_string(secs) + " s (budget 60)";
  std::ostringstream note;
  note << tally.instances << " conclusions across " << g_yb_corpus.size()
       << " pairs and the system corpora";
  return "OK " + note.str();
}

std::string crit_unconditional_identity() {
  Tally tally;
  std::vector<HomAlgebra> algebras;
  for (int c = 1; c <= 4; ++c) algebras.push_back(fx::dual_family_gf5(c));
  for (int c = 1; c <= 4; ++c) algebras.push_back(fx::p3_nilpotent(c));
  SplitMix64 rng{2002};
  int draws = 0;
  for (const HomAlgebra& a : algebras) {
    for (int rep = 0; rep < 64; ++rep) {
      Tensor2 r = random_invariant_tensor2(a, rng);
      Tensor2 s = random_invariant_tensor2(a, rng);
      ++draws;
      QuasitriangularMaps maps = quasitriangular_maps(a, r, s);
      std::vector<Tensor3> defect = coassoc_defect(a.alpha, maps.delta_prime);
      BimoduleActions m3 = tensor_power_bimodule(a, 3);
      Vec e1 = fx::flatten3(yb_equation1(a, r, s));
      Vec e2 = fx::flatten3(yb_equation2(a, r, s));
      for (int i = 0; i < a.dim; ++i) {
        Vec lhs = fx::flatten3(defect[i]);
        Vec rhs = sub_vec(m3.act_left(fx::unit(a.field, a.dim, i), e1),
                          m3.act_right(e2, fx::unit(a.field, a.dim, i)));
        tally.require(lhs == rhs, "defect identity broke on draw " + std::to_string(draws));
      }
    }
  }
  if (!tally.passed()) return tally.bad;
  if (draws < 500) return "only " + std::to_string(draws) + " draws";
  return "OK " + std::to_string(draws) + " invariant pairs, every basis vector exact";
}

std::string crit_characterization() {
  Tally tally;
  // the YB corpus collected by criterion 1: all three booleans true
  for (const YangBaxterPair& p : g_yb_corpus) {
    CharacterizationResult res = characterization(p.base, p.r, p.s);
    tally.require(res.agree() && res.pair_equations,
                  "disagreement on a corpus pair");
  }
  int yb_seen = static_cast<int>(g_yb_corpus.size());

  // random non-YB tensors: keep drawing until 200 rejections accumulate
  SplitMix64 rng{3003};
  FieldSpec gf5 = FieldSpec::prime(5);
  std::vector<HomAlgebra> algebras = {fx::dual_numbers(gf5), fx::dual_family_gf5(1)};
  int non_yb = 0, attempts = 0;
  while (non_yb < 200 && attempts < 2000) {
    for (const HomAlgebra& a : algebras) {
      Tensor2 r = random_tensor2(gf5, 2, rng);
      Tensor2 s = random_tensor2(gf5, 2, rng);
      ++attempts;
      bool is_pair = check_yb_pair(a, r, s).passed;
      CharacterizationResult res = characterization(a, r, s);
      tally.require(res.agree() && res.pair_equations == is_pair,
                    "disagreement on a random tensor");
      if (!is_pair) ++non_yb;
    }
  }
  // invariant draws under a nontrivial twist
  HomAlgebra fam = fx::dual_family_gf5(4);
  for (int i = 0; i < 60; ++i) {
    Tensor2 r = random_invariant_tensor2(fam, rng);
    Tensor2 s = random_invariant_tensor2(fam, rng);
    bool is_pair = check_yb_pair(fam, r, s).passed;
    CharacterizationResult res = characterization(fam, r, s);
    tally.require(res.agree() && res.pair_equations == is_pair,
                  "disagreement on a twisted invariant tensor");
    if (!is_pair) ++non_yb;
  }
  if (!tally.passed()) return tally.bad;
  if (yb_seen < 200) return "YB corpus too small: " + std::to_string(yb_seen);
  if (non_yb < 200) return "only " + std::to_string(non_yb) + " non-YB tensors";
  return "OK " + std::to_string(yb_seen) + " pairs and " + std::to_string(non_yb) +
         " non-pairs, three verdicts each";
}

std::string crit_perturbation() {
  Tally tally;
  FieldSpec gf5 = FieldSpec::prime(5);
  SplitMix64 rng{4004};

  std::vector<CovariantHomBialgebra> bases;
  for (int dim : {2, 3}) {
    HomAlgebra zero = fx::zero_algebra(gf5, dim);
    for (int i = 0; i < 3; ++i) {
      Tensor2 r = random_tensor2(gf5, dim, rng);
      Tensor2 s = random_tensor2(gf5, dim, rng);
      bases.push_back(build_quasitriangular({zero, r, s}));
    }
  }
  HomAlgebra fam = fx::dual_family_gf5(4);
  for (std::int64_t c : {1, 2, 3})
    bases.push_back(build_quasitriangular({fam, scaled_xx(fam, c), scaled_xx(fam, c + 1)}));
  HomAlgebra p3 = fx::p3_nilpotent(1);
  for (int i = 0; i < 3; ++i)
    bases.push_back(build_quasitriangular({p3, span_yz_tensor(p3, rng), span_yz_tensor(p3, rng)}));
  int gf5_bases = static_cast<int>(bases.size());
  for (const char* name : {"paper-nilpotent-pair", "paper-unital-pair"}) {
    StructureBundle b = catalog(name).bundle;
    bases.push_back(build_quasitriangular({b.algebra(), *b.r, *b.s}));
  }

  int gf5_instances = 0, true_verdicts = 0, false_verdicts = 0;
  for (std::size_t bi = 0; bi < bases.size(); ++bi) {
    const CovariantHomBialgebra& b = bases[bi];
    for (int draw = 0; draw < 17; ++draw) {
      Tensor2 r(b.base.field, b.base.dim);
      Tensor2 s(b.base.field, b.base.dim);
      if (draw > 0) {
        r = random_invariant_tensor2(b.base, rng);
        s = random_invariant_tensor2(b.base, rng);
      }
      PerturbationResult res = check_perturbation(b, r, s);
      tally.require(res.agree && res.condition.passed == res.direct.passed,
                    "verdicts split on base " + std::to_string(bi));
      if (static_cast<int>(bi) < gf5_bases) ++gf5_instances;
      (res.direct.passed ? true_verdicts : false_verdicts) += 1;
    }
  }
  if (!tally.passed()) return tally.bad;
  if (gf5_instances < 200)
    return "only " + std::to_string(gf5_instances) + " gf(5) instances";
  if (true_verdicts == 0 || false_verdicts == 0)
    return "one-sided corpus: " + std::to_string(true_verdicts) + " true / " +
           std::to_string(false_verdicts) + " false";
  return "OK " + std::to_string(tally.instances) + " instances (" +
         std::to_string(true_verdicts) + " true, " + std::to_string(false_verdicts) +
         " false)";
}

std::string crit_degenerations() {
  Tally tally;
  FieldSpec gf5 = FieldSpec::prime(5);
  SplitMix64 rng{5005};

  // alpha = id: library verdict vs the classical associative oracle
  std::vector<HomAlgebra> untwisted = {fx::dual_numbers(gf5), fx::poly3_gf5(),
                                       fx::p3_nilpotent(1), fx::zero_algebra(gf5, 2)};
  int classical_true = 0, classical_false = 0;
  for (const HomAlgebra& a : untwisted) {
    for (int i = 0; i < 50; ++i) {
      Tensor2 r = random_tensor2(gf5, a.dim, rng);
      Tensor2 s = random_tensor2(gf5, a.dim, rng);
      bool lib = check_yb_pair(a, r, s).passed;
      bool oracle = classical_pair_verdict(a, r, s);
      tally.require(lib == oracle, "classical verdicts split");
      (lib ? classical_true : classical_false) += 1;
    }
  }
  // designed positives so both verdicts occur
  HomAlgebra d5 = fx::dual_numbers(gf5);
  Tensor2 ox = fx::elem2(d5, 0, 1);
  Tensor2 zero2(gf5, 2);
  for (const auto& [r, s] : {std::pair<Tensor2, Tensor2>{ox, ox}, {ox, zero2}}) {
    bool lib = check_yb_pair(d5, r, s).passed;
    tally.require(lib && classical_pair_verdict(d5, r, s), "designed classical pair");
    ++classical_true;
  }

  // r = s: the two equation tensors coincide and the pair verdict matches
  // an independent single-tensor oracle, twisted algebras included
  std::vector<HomAlgebra> twisted = {fx::dual_numbers(gf5), fx::dual_family_gf5(2),
                                     fx::p3_nilpotent(2)};
  int single_true = 0, single_false = 0;
  for (const HomAlgebra& a : twisted) {
    for (int i = 0; i < 50; ++i) {
      Tensor2 r = random_invariant_tensor2(a, rng);
      tally.require(yb_equation1(a, r, r) == yb_equation2(a, r, r),
                    "equation tensors differ at r = s");
      bool lib = check_yb_pair(a, r, r).passed;
      bool oracle = twisted_single_tensor_verdict(a, r);
      tally.require(lib == oracle, "single-tensor verdicts split");
      (lib ? single_true : single_false) += 1;
    }
  }
  HomAlgebra fam = fx::dual_family_gf5(4);
  Tensor2 xx = scaled_xx(fam, 1);
  tally.require(check_yb_pair(fam, xx, xx).passed &&
                    twisted_single_tensor_verdict(fam, xx),
                "designed single-tensor pair");
  ++single_true;

  if (!tally.passed()) return tally.bad;
  if (classical_true == 0 || classical_false == 0 || single_true == 0 ||
      single_false == 0)
    return "one-sided corpus";
  return "OK classical " + std::to_string(classical_true) + "+/" +
         std::to_string(classical_false) + "-, single-tensor " +
         std::to_string(single_true) + "+/" + std::to_string(single_false) + "-";
}

std::string crit_catalog_examples() {
  Tally tally;
  for (const char* name : {"paper-nilpotent-pair", "paper-unital-pair"}) {
    StructureBundle b = catalog(name).bundle;
    HomAlgebra a = b.algebra();
    tally.require(check_yb_pair(a, *b.r, *b.s).passed, std::string(name) + ": pair");
    run_pair_chain(tally, a, *b.r, *b.s, name);
  }
  HomAlgebra z2 = catalog("z2").bundle.algebra();
  std::vector<SearchSolution> pairs = enumerate({SearchTarget::yb_pairs, z2, true, 0, 0});
  tally.require(static_cast<int>(pairs.size()) == 256,
                "z2 exhaustive count: " + std::to_string(pairs.size()));
  if (!tally.passed()) return tally.bad;
  return "OK both pair instances, full chains, 256 gf(2) pairs";
}

std::string crit_cli_contract() {
  Tally tally;
  const std::vector<std::string> theorems = {
      "rbs-dendriform", "dend-prelie",     "pseudotwistor",
      "ybp-to-a2rbs",   "quasitriangular", "characterization",
      "perturbation",   "dualization",     "induced-composition"};
  for (const char* bundle : {"paper-nilpotent-pair", "paper-unital-pair"})
    for (const std::string& name : theorems) {
      RunResult res =
          run_cli("verify-theorem --name " + name + " --bundle " + std::string(bundle));
      tally.require(res.code == 0, name + " on " + bundle + " exited " +
                                       std::to_string(res.code));
    }

  RunResult neg = run_cli("check --bundle n2-nonassoc --checks hom-assoc");
  tally.require(neg.code == 1, "negative fixture exit " + std::to_string(neg.code));
  try {
    ordered_json j = ordered_json::parse(neg.out);
    const ordered_json& w = j["checks"][0]["witnesses"][0];
    tally.require(w["at"] == ordered_json::array({0, 0, 0}) &&
                      w["basis"] == ordered_json::array({"a", "a", "a"}),
                  "first witness is not (a, a, a)");
  } catch (const std::exception& e) {
    tally.require(false, std::string("negative report unparsable: ") + e.what());
  }

  std::string garbage = "/tmp/hombax_acceptance_garbage.json";
  {
    FILE* f = fopen(garbage.c_str(), "w");
    if (f) {
      fputs("{ \"field\": \"rational\", \"dim\": ", f);
      fclose(f);
    }
  }
  tally.require(run_cli("check --bundle " + garbage).code == 2, "malformed bundle exit");
  std::remove(garbage.c_str());
  tally.require(run_cli("verify-theorem --name no-such --bundle z2").code == 2,
                "unknown theorem exit");

  for (const std::string& cmd :
       {std::string("check --bundle paper-unital-pair"),
        std::string("verify-theorem --name characterization --bundle paper-unital-pair"),
        std::string("search --target yb-pairs --bundle z2")}) {
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    tally.require(a.code == b.code && a.out == b.out && !a.out.empty(),
                  "unstable output for: " + cmd);
  }
  if (!tally.passed()) return tally.bad;
  return "OK " + std::to_string(tally.instances) + " invocations";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 64;
  }
  g_cli = argv[1];

  struct Criterion {
    const char* name;
    std::string (*fn)();
  };
  const Criterion criteria[] = {
      {"theorem-suite", crit_theorem_suite},
      {"unconditional-identity", crit_unconditional_identity},
      {"characterization-equivalence", crit_characterization},
      {"perturbation-biconditional", crit_perturbation},
      {"degenerations", crit_degenerations},
      {"catalog-examples", crit_catalog_examples},
      {"cli-contract", crit_cli_contract},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string verdict;
    try {
      verdict = c.fn();
    } catch (const std::exception& e) {
      verdict = std::string("threw: ") + e.what();
    }
    if (verdict.rfind("OK", 0) == 0) {
      std::cout << "PASS: " << c.name << " (" << verdict.substr(3) << ")\n";
    } else {
      ++failures;
      std::cout << "FAIL: " << c.name << " (" << verdict << ")\n";
    }
  }
  return failures;
}
