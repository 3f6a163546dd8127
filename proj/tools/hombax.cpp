#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hombax/bundle.hpp"
#include "hombax/catalog.hpp"
#include "hombax/report.hpp"
#include "hombax/search.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hombax;

StructureBundle resolve_bundle(const std::string& ref, bool validate) {
  std::error_code ec;
  if (std::filesystem::exists(ref, ec)) return load_bundle(ref, validate);
  for (const auto& name : catalog_names())
    if (name == ref) {
      StructureBundle b = catalog(ref).bundle;
      if (validate) validate_bundle(b);
      return b;
    }
  fail(Errc::invalid_input, "no such file or catalog name: " + ref);
}

const Coproduct& need_coproduct(const StructureBundle& b) {
  if (!b.coproduct) fail(Errc::invalid_input, "bundle has no coproduct section");
  return *b.coproduct;
}

RotaBaxterSystem need_rbs(const StructureBundle& b) {
  if (!b.R || !b.S) fail(Errc::invalid_input, "bundle has no (R, S) section");
  return {b.algebra(), *b.R, *b.S};
}

void need_pair(const StructureBundle& b) {
  if (!b.r || !b.s) fail(Errc::invalid_input, "bundle has no (r, s) section");
}

void need_trio(const StructureBundle& b) {
  if (!b.coproduct || !b.delta1 || !b.delta2)
    fail(Errc::invalid_input, "bundle has no coproduct/delta1/delta2 sections");
}

HomCoalgebra coalgebra_of(const StructureBundle& b) {
  HomCoalgebra co(b.field, b.dim, b.basis);
  co.delta = need_coproduct(b);
  co.alpha = b.alpha;
  return co;
}

HomDendriform dendriform_of(const StructureBundle& b) {
  if (!b.prec || !b.succ) fail(Errc::invalid_input, "bundle has no prec/succ sections");
  HomDendriform d(b.field, b.dim, b.basis);
  d.alpha = b.alpha;
  d.prec = *b.prec;
  d.succ = *b.succ;
  return d;
}

CheckReport run_named_check(const StructureBundle& b, const std::string& name) {
  HomAlgebra a = b.algebra();
  if (name == "hom-assoc") return check_hom_algebra(a);
  if (name == "coalgebra") return check_hom_coalgebra(coalgebra_of(b));
  if (name == "infinitesimal") return check_infinitesimal_compat(a, need_coproduct(b));
  if (name == "rb-system") {
    if (!b.R || !b.S) fail(Errc::invalid_input, "bundle has no (R, S) section");
    return check_rb_system(a, *b.R, *b.S);
  }
  if (name == "alpha-n-rbs") {
    if (!b.R || !b.S) fail(Errc::invalid_input, "bundle has no (R, S) section");
    return check_alpha_n_rbs(a, *b.R, *b.S, b.n_power.value_or(0));
  }
  if (name == "yb-pair") {
    need_pair(b);
    return check_yb_pair(a, *b.r, *b.s);
  }
  if (name == "quasitriangular-condition") {
    need_pair(b);
    return check_quasitriangular_condition(a, *b.r, *b.s);
  }
  if (name == "covariant") {
    need_trio(b);
    return check_covariant_hom_bialgebra({a, *b.coproduct, *b.delta1, *b.delta2});
  }
  if (name == "dendriform") return check_hom_dendriform(dendriform_of(b));
  if (name == "prelie") {
    if (!b.diamond) fail(Errc::invalid_input, "bundle has no diamond section");
    HomPreLie p(b.field, b.dim, b.basis);
    p.alpha = b.alpha;
    p.diamond = *b.diamond;
    return check_hom_prelie(p);
  }
  fail(Errc::unknown_name, "unknown check: " + name);
}

std::vector<std::string> default_checks(const StructureBundle& b) {
  std::vector<std::string> v{"hom-assoc"};
  if (b.coproduct && b.delta1 && b.delta2)
    v.push_back("covariant");
  else if (b.coproduct)
    v.push_back("coalgebra");
  if (b.R && b.S) v.push_back(b.n_power ? "alpha-n-rbs" : "rb-system");
  if (b.r && b.s) v.push_back("yb-pair");
  if (b.prec && b.succ) v.push_back("dendriform");
  if (b.diamond) v.push_back("prelie");
  return v;
}

StructureBundle base_only(const StructureBundle& b, const HomAlgebra& alg) {
  StructureBundle nb(b.field, b.dim, alg.basis);
  nb.mul = alg.mul;
  nb.alpha = alg.alpha;
  return nb;
}

StructureBundle run_construction(const StructureBundle& b, const std::string& name) {
  HomAlgebra a = b.algebra();
  if (name == "dendriform-from-rbs") {
    HomDendriform d = dendriform_from_rbs(need_rbs(b));
    StructureBundle nb = b;
    nb.prec = d.prec;
    nb.succ = d.succ;
    return nb;
  }
  if (name == "prelie-from-dendriform") {
    HomPreLie p = prelie_from_dendriform(dendriform_of(b));
    StructureBundle nb = b;
    nb.diamond = p.diamond;
    return nb;
  }
  if (name == "star-product") return base_only(b, star_product(need_rbs(b)));
  if (name == "pseudotwistor-from-rbs") {
    RotaBaxterSystem sys = need_rbs(b);
    TwistorMap t = pseudotwistor_from_rbs(sys);
    return base_only(b, product_from_twistor(a, t));
  }
  if (name == "rbs-from-weighted") {
    if (!b.R || !b.lambda) fail(Errc::invalid_input, "construction needs R and lambda");
    RotaBaxterSystem sys = rbs_from_weighted_operator(a, *b.R, *b.lambda);
    StructureBundle nb = b;
    nb.S = sys.S;
    return nb;
  }
  if (name == "rbs-from-ybp") {
    need_pair(b);
    AlphaNRBSystem sys = rbs_from_ybp({a, *b.r, *b.s});
    StructureBundle nb = b;
    nb.R = sys.R;
    nb.S = sys.S;
    nb.n_power = sys.n_power;
    return nb;
  }
  if (name == "dendriform-from-alpha-n-rbs") {
    if (!b.R || !b.S) fail(Errc::invalid_input, "construction needs (R, S)");
    AlphaNRBSystem sys{a, *b.R, *b.S, b.n_power.value_or(0)};
    HomDendriform d = dendriform_from_alpha_n_rbs(sys);
    StructureBundle nb(b.field, b.dim, b.basis);
    nb.alpha = d.alpha;
    nb.mul = d.prec.add(d.succ);
    nb.prec = d.prec;
    nb.succ = d.succ;
    return nb;
  }
  if (name == "quasitriangular") {
    need_pair(b);
    CovariantHomBialgebra cb = build_quasitriangular({a, *b.r, *b.s});
    StructureBundle nb = b;
    nb.coproduct = cb.delta;
    nb.delta1 = cb.delta1;
    nb.delta2 = cb.delta2;
    return nb;
  }
  if (name == "quasitriangular-maps") {
    need_pair(b);
    QuasitriangularMaps m = quasitriangular_maps(a, *b.r, *b.s);
    StructureBundle nb = b;
    nb.coproduct = m.delta_prime;
    nb.delta1 = m.delta_r;
    nb.delta2 = m.delta_s;
    return nb;
  }
  if (name == "dualize-covariant") {
    need_trio(b);
    DualCovariantHomBialgebra d = dualize({a, *b.coproduct, *b.delta1, *b.delta2});
    StructureBundle nb(d.field, d.dim, d.basis);
    nb.mul = d.delta_star;
    nb.alpha = d.alpha_star;
    nb.coproduct = d.mu_star;
    nb.partial1 = d.partial1;
    nb.partial2 = d.partial2;
    return nb;
  }
  fail(Errc::unknown_name, "unknown construction: " + name);
}

// ---- verify-theorem ----

struct TheoremRun {
  std::vector<CheckReport> entries;
  bool vacuous = false;
  bool passed = true;
};

void hyp(TheoremRun& run, const std::string& name, CheckReport rep) {
  rep.name = "hypothesis/" + name;
  if (!rep.passed) run.vacuous = true;
  run.entries.push_back(std::move(rep));
}

void concl(TheoremRun& run, const std::string& name, CheckReport rep) {
  rep.name = "conclusion/" + name;
  run.passed = run.passed && rep.passed;
  run.entries.push_back(std::move(rep));
}

Vec flat2(const Tensor2& t) {
  Vec v;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) v.push_back(t.at(i, j));
  return v;
}

bool base_hypothesis(TheoremRun& run, const HomAlgebra& a) {
  CheckReport rep = check_hom_algebra(a);
  bool ok = rep.passed;
  hyp(run, "hom-algebra", std::move(rep));
  return ok;
}

// Explicit (R, S) with the bundle's power, else derived from a verified
// pair; nullopt means a hypothesis failed and the run is vacuous.
std::optional<AlphaNRBSystem> obtain_system(TheoremRun& run, const StructureBundle& b,
                                            const HomAlgebra& a) {
  if (b.R && b.S) {
    int np = b.n_power.value_or(0);
    CheckReport rep = check_alpha_n_rbs(a, *b.R, *b.S, np);
    bool ok = rep.passed;
    hyp(run, "alpha-n-rbs", std::move(rep));
    if (!ok) return std::nullopt;
    return AlphaNRBSystem{a, *b.R, *b.S, np};
  }
  if (b.r && b.s) {
    CheckReport rep = check_yb_pair(a, *b.r, *b.s);
    bool ok = rep.passed;
    hyp(run, "yb-pair", std::move(rep));
    if (!ok) return std::nullopt;
    return rbs_from_ybp({a, *b.r, *b.s});
  }
  fail(Errc::invalid_input, "bundle carries neither (R, S) nor (r, s)");
}

// Bundle's own covariant trio (hypothesis-checked), else quasitriangular
// from a verified pair.
std::optional<CovariantHomBialgebra> obtain_covariant(TheoremRun& run,
                                                      const StructureBundle& b,
                                                      const HomAlgebra& a) {
  if (b.coproduct && b.delta1 && b.delta2) {
    CovariantHomBialgebra cb{a, *b.coproduct, *b.delta1, *b.delta2};
    CheckReport rep = check_covariant_hom_bialgebra(cb);
    bool ok = rep.passed;
    hyp(run, "covariant-hom-bialgebra", std::move(rep));
    if (!ok) return std::nullopt;
    return cb;
  }
  if (b.r && b.s) {
    CheckReport rep = check_yb_pair(a, *b.r, *b.s);
    bool ok = rep.passed;
    hyp(run, "yb-pair", std::move(rep));
    if (!ok) return std::nullopt;
    return build_quasitriangular({a, *b.r, *b.s});
  }
  fail(Errc::invalid_input, "bundle carries neither a covariant trio nor (r, s)");
}

bool invariance_hypotheses(TheoremRun& run, const StructureBundle& b, const HomAlgebra& a) {
  need_pair(b);
  CheckReport ri = check_alpha_invariance(a, *b.r, "r");
  bool ok = ri.passed;
  hyp(run, "r-invariance", std::move(ri));
  CheckReport si = check_alpha_invariance(a, *b.s, "s");
  ok = ok && si.passed;
  hyp(run, "s-invariance", std::move(si));
  return ok;
}

TheoremRun thm_rbs_dendriform(const StructureBundle& b) {
  TheoremRun run;
  HomAlgebra a = b.algebra();
  if (!base_hypothesis(run, a)) return run;
  auto sys = obtain_system(run, b, a);
  if (!sys) return run;
  HomDendriform d = dendriform_from_alpha_n_rbs(*sys);
  concl(run, "hom-dendriform", check_hom_dendriform(d));
  return run;
}

TheoremRun thm_dend_prelie(const StructureBundle& b) {
  TheoremRun run;
  HomAlgebra a = b.algebra();
  if (!base_hypothesis(run, a)) return run;
  std::optional<HomDendriform> d;
  if (b.prec && b.succ) {
    d = dendriform_of(b);
    CheckReport rep = check_hom_dendriform(*d);
    bool ok = rep.passed;
    hyp(run, "hom-dendriform", std::move(rep));
    if (!ok) return run;
  } else {
    auto sys = obtain_system(run, b, a);
    if (!sys) return run;
    d = dendriform_from_alpha_n_rbs(*sys);
    hyp(run, "hom-dendriform", check_hom_dendriform(*d));
  }
  HomPreLie p = prelie_from_dendriform(*d);
  concl(run, "hom-prelie", check_hom_prelie(p));
  return run;
}

TheoremRun thm_pseudotwistor(const StructureBundle& b) {
  TheoremRun run;
  HomAlgebra a = b.algebra();
  if (!base_hypothesis(run, a)) return run;
  auto sys = obtain_system(run, b, a);
  if (!sys) return run;
  CheckReport plain = check_rb_system(a, sys->R, sys->S);
  bool ok = plain.passed;
  hyp(run, "rb-system", std::move(plain));
  if (!ok) return run;
  RotaBaxterSystem rbs{a, sys->R, sys->S};
  TwistorMap t = pseudotwistor_from_rbs(rbs);
  CheckReport pent = check_weak_pseudotwistor(a, t);
  bool pent_ok = pent.passed;
  concl(run, "weak-pseudotwistor", std::move(pent));
  if (!pent_ok) return run;
  HomAlgebra twisted = product_from_twistor(a, t);
  HomAlgebra star = star_product(rbs);
  CheckReport match{"twisted-product-is-star"};
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec lhs = twisted.mul.eval_basis(i, j);
      Vec rhs = star.mul.eval_basis(i, j);
      if (lhs != rhs) match.add_witness({"product-match", {i, j}, lhs, rhs});
    }
  concl(run, "twisted-product-is-star", std::move(match));
  concl(run, "twisted-hom-algebra", check_hom_algebra(twisted));
  return run;
}

TheoremRun thm_ybp_to_a2rbs(const StructureBundle& b) {
  TheoremRun run;
  HomAlgebra a = b.algebra();
  if (!base_hypothesis(run, a)) return run;
  need_pair(b);
  CheckReport rep = check_yb_pair(a, *b.r, *b.s);
  bool ok = rep.passed;
  hyp(run, "yb-pair", std::move(rep));
  if (!ok) return run;
  YbpInducedStructures ind = ybp_induced_structures({a, *b.r, *b.s});
  concl(run, "alpha-n-rbs", check_alpha_n_rbs(a, ind.system.R, ind.system.S, 2));
  concl(run, "hom-dendriform", check_hom_dendriform(ind.dendriform));
  concl(run, "star-hom-algebra", check_hom_algebra(ind.star));
  concl(run, "hom-prelie", check_hom_prelie(ind.prelie));
  return run;
}

TheoremRun thm_quasitriangular(const StructureBundle& b) {
  TheoremRun run;
  HomAlgebra a = b.algebra();
  if (!base_hypothesis(run, a)) return run;
  need_pair(b);
  CheckReport rep = check_yb_pair(a, *b.r, *b.s);
  bool ok = rep.passed;
  hyp(run, "yb-pair", std::move(rep));
  if (!ok) return run;
  CovariantHomBialgebra cb = build_quasitriangular({a, *b.r, *b.s});
  concl(run, "covariant-hom-bialgebra", check_covariant_hom_bialgebra(cb));
  return run;
}

TheoremRun thm_characterization(const StructureBundle& b) {
  TheoremRun run;
  HomAlgebra a = b.algebra();
  if (!base_hypothesis(run, a)) return run;
  if (!invariance_hypotheses(run, b, a)) return run;
  CharacterizationResult res = characterization(a, *b.r, *b.s);
  CheckReport rep{"characterization-agreement"};
  if (!res.agree()) {
    auto bit = [&](bool v) { return FieldScalar::from_int(a.field, v ? 1 : 0); };
    Vec got{bit(res.pair_equations), bit(res.coproduct_form), bit(res.dual_diagrams)};
    Vec want{got[0], got[0], got[0]};
    rep.add_witness({"agreement", {}, got, want});
  }
  concl(run, "characterization-agreement", std::move(rep));
  return run;
}

TheoremRun thm_perturbation(const StructureBundle& b) {
  TheoremRun run;
  HomAlgebra a = b.algebra();
  if (!base_hypothesis(run, a)) return run;
  if (!invariance_hypotheses(run, b, a)) return run;
  auto cb = obtain_covariant(run, b, a);
  if (!cb) return run;
  PerturbationResult res = check_perturbation(*cb, *b.r, *b.s);
  CheckReport rep{"perturbation-biconditional"};
  if (!res.agree) {
    auto bit = [&](bool v) { return FieldScalar::from_int(a.field, v ? 1 : 0); };
    rep.add_witness({"biconditional", {}, {bit(res.condition.passed)}, {bit(res.direct.passed)}});
  }
  concl(run, "perturbation-biconditional", std::move(rep));
  return run;
}

TheoremRun thm_dualization(const StructureBundle& b) {
  TheoremRun run;
  HomAlgebra a = b.algebra();
  if (!base_hypothesis(run, a)) return run;
  auto cb = obtain_covariant(run, b, a);
  if (!cb) return run;
  DualCovariantHomBialgebra d = dualize(*cb);
  concl(run, "dual-covariant", check_dual_covariant(d));
  return run;
}

TheoremRun thm_induced_composition(const StructureBundle& b) {
  TheoremRun run;
  HomAlgebra a = b.algebra();
  if (!base_hypothesis(run, a)) return run;
  if (!b.phi) fail(Errc::invalid_input, "bundle has no phi section");
  const LinearMap& phi = *b.phi;
  CheckReport twist{"identity-twist"};
  if (!a.alpha.is_identity()) {
    for (int j = 0; j < a.dim; ++j) {
      Vec ej(a.dim, FieldScalar::zero(a.field));
      ej[j] = FieldScalar::one(a.field);
      if (a.alpha.column(j) != ej)
        twist.add_witness({"identity-twist", {j}, a.alpha.column(j), ej});
    }
  }
  bool tw_ok = twist.passed;
  hyp(run, "identity-twist", std::move(twist));
  if (!tw_ok) return run;

  bool covariant_route = (b.coproduct && b.delta1 && b.delta2) || (b.r && b.s);
  std::optional<CovariantHomBialgebra> cb;
  if (covariant_route) {
    cb = obtain_covariant(run, b, a);
    if (!cb) return run;
  }

  CheckReport morph{"phi-morphism"};
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec lhs = phi.apply(a.mul.eval_basis(i, j));
      Vec rhs = a.mul.eval(phi.column(i), phi.column(j));
      if (lhs != rhs) morph.add_witness({"morphism-mul", {i, j}, lhs, rhs});
    }
  if (cb) {
    auto theta_morph = [&](const Coproduct& theta, const std::string& nm) {
      for (int i = 0; i < a.dim; ++i) {
        Tensor2 lhs = map_tensor2(phi, phi, theta.eval_basis(i));
        Tensor2 rhs = theta.eval(phi.column(i));
        if (!(lhs == rhs)) morph.add_witness({"morphism-" + nm, {i}, flat2(lhs), flat2(rhs)});
      }
    };
    theta_morph(cb->delta, "delta");
    theta_morph(cb->delta1, "delta1");
    theta_morph(cb->delta2, "delta2");
  }
  bool morph_ok = morph.passed;
  hyp(run, "phi-morphism", std::move(morph));
  if (!morph_ok) return run;

  if (cb) {
    CovariantHomBialgebra out = induce_covariant_by_composition(*cb, phi);
    concl(run, "covariant-hom-bialgebra", check_covariant_hom_bialgebra(out));
  } else {
    HomAlgebra out = induce_algebra_by_composition(a, phi);
    concl(run, "hom-algebra", check_hom_algebra(out));
  }
  return run;
}

TheoremRun run_theorem(const StructureBundle& b, const std::string& name) {
  if (name == "rbs-dendriform") return thm_rbs_dendriform(b);
  if (name == "dend-prelie") return thm_dend_prelie(b);
  if (name == "pseudotwistor") return thm_pseudotwistor(b);
  if (name == "ybp-to-a2rbs") return thm_ybp_to_a2rbs(b);
  if (name == "quasitriangular") return thm_quasitriangular(b);
  if (name == "characterization") return thm_characterization(b);
  if (name == "perturbation") return thm_perturbation(b);
  if (name == "dualization") return thm_dualization(b);
  if (name == "induced-composition") return thm_induced_composition(b);
  fail(Errc::unknown_name, "unknown theorem: " + name);
}

// ---- command handlers ----

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    std::string item = csv.substr(pos, next - pos);
    if (!item.empty()) out.push_back(item);
    pos = next + 1;
  }
  return out;
}

int cmd_check(const std::vector<std::string>& echo, const std::string& bundle_ref,
              const std::string& checks_csv, bool timings) {
  StructureBundle b = resolve_bundle(bundle_ref, false);
  std::vector<std::string> names =
      checks_csv.empty() ? default_checks(b) : split_csv(checks_csv);
  if (names.empty()) fail(Errc::invalid_input, "no checks requested");
  json rep = make_report(echo);
  json checks = json::array();
  bool all = true;
  for (const auto& nm : names) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r = run_named_check(b, nm);
    all = all && r.passed;
    json cj = check_report_to_json(r, b.basis);
    if (timings) cj["timing_ms"] = elapsed_ms(t0);
    checks.push_back(std::move(cj));
  }
  rep["checks"] = std::move(checks);
  rep["overall"] = all ? "pass" : "fail";
  rep["exit"] = all ? 0 : 1;
  std::cout << rep.dump(2) << "\n";
  return all ? 0 : 1;
}

int cmd_derive(const std::vector<std::string>& echo, const std::string& bundle_ref,
               const std::string& construction, const std::string& out_path,
               bool no_validate, bool timings) {
  StructureBundle in = resolve_bundle(bundle_ref, !no_validate);
  auto t0 = std::chrono::steady_clock::now();
  StructureBundle out = run_construction(in, construction);
  if (out_path.empty()) {
    std::cout << bundle_to_json(out).dump(2) << "\n";
    return 0;
  }
  save_bundle(out, out_path);
  json rep = make_report(echo);
  rep["construction"] = construction;
  rep["output"] = out_path;
  if (timings) rep["total_ms"] = elapsed_ms(t0);
  rep["overall"] = "pass";
  rep["exit"] = 0;
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& echo, const std::string& name,
               const std::string& bundle_ref, bool timings) {
  StructureBundle b = resolve_bundle(bundle_ref, false);
  auto t0 = std::chrono::steady_clock::now();
  TheoremRun run = run_theorem(b, name);
  json rep = make_report(echo);
  rep["theorem"] = name;
  json checks = json::array();
  for (const auto& entry : run.entries) checks.push_back(check_report_to_json(entry, b.basis));
  rep["checks"] = std::move(checks);
  if (timings) rep["total_ms"] = elapsed_ms(t0);
  rep["vacuous"] = run.vacuous;
  bool pass = run.vacuous || run.passed;
  rep["overall"] = run.vacuous ? "vacuous" : (run.passed ? "pass" : "fail");
  rep["exit"] = pass ? 0 : 1;
  std::cout << rep.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_search(const std::string& bundle_ref, const std::string& target_str,
               bool seed_given, std::uint64_t seed, int samples, bool no_validate) {
  StructureBundle b = resolve_bundle(bundle_ref, !no_validate);
  SearchTarget target;
  if (target_str == "rb-systems")
    target = SearchTarget::rb_systems;
  else if (target_str == "yb-pairs")
    target = SearchTarget::yb_pairs;
  else if (target_str == "weighted-rb")
    target = SearchTarget::weighted_rb;
  else
    fail(Errc::unknown_name, "unknown search target: " + target_str);
  SearchTask task{target, b.algebra(), !seed_given, seed, samples};
  std::vector<SearchSolution> sols = enumerate(task);
  for (const auto& sol : sols) {
    StructureBundle out(b.field, b.dim, b.basis);
    out.mul = b.mul;
    out.alpha = b.alpha;
    out.R = sol.R;
    out.S = sol.S;
    out.r = sol.r;
    out.s = sol.s;
    out.lambda = sol.lambda;
    std::cout << bundle_to_json(out).dump() << "\n";
  }
  return 0;
}

int cmd_catalog(const std::vector<std::string>& echo, const std::string& name,
                const std::string& out_path) {
  if (name.empty()) {
    json rep = make_report(echo);
    json arr = json::array();
    for (const auto& nm : catalog_names()) {
      CatalogInstance inst = catalog(nm);
      json item = json::object();
      item["name"] = inst.name;
      item["provenance"] = inst.provenance;
      arr.push_back(std::move(item));
    }
    rep["catalog"] = std::move(arr);
    rep["overall"] = "pass";
    rep["exit"] = 0;
    std::cout << rep.dump(2) << "\n";
    return 0;
  }
  CatalogInstance inst = catalog(name);
  if (out_path.empty()) {
    std::cout << bundle_to_json(inst.bundle).dump(2) << "\n";
    return 0;
  }
  save_bundle(inst.bundle, out_path);
  json rep = make_report(echo);
  rep["name"] = inst.name;
  rep["provenance"] = inst.provenance;
  rep["output"] = out_path;
  rep["overall"] = "pass";
  rep["exit"] = 0;
  std::cout << rep.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> echo{kToolName};
  for (int i = 1; i < argc; ++i) echo.emplace_back(argv[i]);

  CLI::App app{"exact checkers and constructions for twisted algebraic structures"};
  app.require_subcommand(1);

  std::string bundle_ref, checks_csv, construction, out_path, theorem, target, cat_name;
  std::uint64_t seed = 0;
  int samples = 100;
  bool timings = false, no_validate = false;

  CLI::App* c_check = app.add_subcommand("check", "run named checkers on a bundle");
  c_check->add_option("--bundle", bundle_ref, "bundle file or catalog name")->required();
  c_check->add_option("--checks", checks_csv, "comma-separated checker names");
  c_check->add_flag("--timings", timings, "include timings in the report");

  CLI::App* c_derive = app.add_subcommand("derive", "run a construction and emit the result");
  c_derive->add_option("--construction", construction, "construction name")->required();
  c_derive->add_option("--bundle", bundle_ref, "bundle file or catalog name")->required();
  c_derive->add_option("--out", out_path, "output bundle path (stdout when omitted)");
  c_derive->add_flag("--no-validate", no_validate, "skip semantic validation on load");
  c_derive->add_flag("--timings", timings, "include timings in the report");

  CLI::App* c_verify = app.add_subcommand("verify-theorem", "check an implication on a bundle");
  c_verify->add_option("--name", theorem, "theorem name")->required();
  c_verify->add_option("--bundle", bundle_ref, "bundle file or catalog name")->required();
  c_verify->add_flag("--timings", timings, "include timings in the report");

  CLI::App* c_search = app.add_subcommand("search", "enumerate structures over a prime field");
  c_search->add_option("--target", target, "rb-systems | yb-pairs | weighted-rb")->required();
  c_search->add_option("--bundle", bundle_ref, "bundle file or catalog name")->required();
  bool exhaustive_flag = false;
  c_search->add_flag("--exhaustive", exhaustive_flag, "exhaustive mode (the default)");
  CLI::Option* seed_opt =
      c_search->add_option("--seed", seed, "sampling seed (switches to sampled mode)");
  c_search->add_option("--samples", samples, "sampled-mode candidate count")
      ->default_val(100);
  c_search->add_flag("--no-validate", no_validate, "skip semantic validation on load");
  seed_opt->excludes("--exhaustive");

  CLI::App* c_dualize = app.add_subcommand("dualize", "dualize a covariant bundle");
  c_dualize->add_option("--bundle", bundle_ref, "bundle file or catalog name")->required();
  c_dualize->add_option("--out", out_path, "output bundle path (stdout when omitted)");
  c_dualize->add_flag("--no-validate", no_validate, "skip semantic validation on load");

  CLI::App* c_catalog = app.add_subcommand("catalog", "list or emit built-in instances");
  c_catalog->add_option("--name", cat_name, "instance name (omit to list)");
  c_catalog->add_option("--out", out_path, "output bundle path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_check->parsed()) return cmd_check(echo, bundle_ref, checks_csv, timings);
    if (c_derive->parsed())
      return cmd_derive(echo, bundle_ref, construction, out_path, no_validate, timings);
    if (c_verify->parsed()) return cmd_verify(echo, theorem, bundle_ref, timings);
    if (c_search->parsed())
      return cmd_search(bundle_ref, target, seed_opt->count() > 0, seed, samples, no_validate);
    if (c_dualize->parsed())
      return cmd_derive(echo, bundle_ref, "dualize-covariant", out_path, no_validate, false);
    if (c_catalog->parsed()) return cmd_catalog(echo, cat_name, out_path);
    return 2;
  } catch (const hombax::Error& e) {
    json rep = make_report(echo);
    json err = json::object();
    err["code"] = errc_name(e.code());
    err["message"] = e.what();
    rep["error"] = std::move(err);
    int code = errc_is_check_failure(e.code()) ? 1 : 2;
    rep["overall"] = code == 1 ? "fail" : "error";
    rep["exit"] = code;
    std::cout << rep.dump(2) << "\n";
    return code;
  } catch (const std::exception& e) {
    json rep = make_report(echo);
    json err = json::object();
    err["code"] = "internal";
    err["message"] = e.what();
    rep["error"] = std::move(err);
    rep["overall"] = "error";
    rep["exit"] = 2;
    std::cout << rep.dump(2) << "\n";
    return 2;
  }
}
