#include "hombax/bundle.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hombax {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  fail(Errc::schema_error, path + ": " + msg);
}

[[noreturn]] void shape_fail(const std::string& path, const std::string& msg) {
  fail(Errc::shape_error, path + ": " + msg);
}

const json& member(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail("/" + key, "missing required key");
  return *it;
}

void require_array(const json& v, int n, const std::string& path) {
  if (!v.is_array()) shape_fail(path, "expected an array");
  if (static_cast<int>(v.size()) != n)
    shape_fail(path, "expected " + std::to_string(n) + " entries, found " +
                         std::to_string(v.size()));
}

FieldScalar scalar_at(const json& v, const FieldSpec& f, const std::string& path) {
  if (!v.is_string()) schema_fail(path, "expected a scalar string");
  try {
    return parse_scalar(v.get<std::string>(), f);
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

LinearMap matrix_at(const json& v, const FieldSpec& f, int n, const std::string& path) {
  require_array(v, n, path);
  LinearMap m(f, n);
  for (int i = 0; i < n; ++i) {
    std::string row_path = path + "/" + std::to_string(i);
    require_array(v[i], n, row_path);
    for (int j = 0; j < n; ++j)
      m.at(i, j) = scalar_at(v[i][j], f, row_path + "/" + std::to_string(j));
  }
  return m;
}

Tensor2 tensor2_at(const json& v, const FieldSpec& f, int n, const std::string& path) {
  require_array(v, n, path);
  Tensor2 t(f, n);
  for (int i = 0; i < n; ++i) {
    std::string row_path = path + "/" + std::to_string(i);
    require_array(v[i], n, row_path);
    for (int j = 0; j < n; ++j)
      t.at(i, j) = scalar_at(v[i][j], f, row_path + "/" + std::to_string(j));
  }
  return t;
}

template <typename Cubic>
Cubic cubic_at(const json& v, const FieldSpec& f, int n, const std::string& path) {
  require_array(v, n, path);
  Cubic c(f, n);
  for (int i = 0; i < n; ++i) {
    std::string p1 = path + "/" + std::to_string(i);
    require_array(v[i], n, p1);
    for (int j = 0; j < n; ++j) {
      std::string p2 = p1 + "/" + std::to_string(j);
      require_array(v[i][j], n, p2);
      for (int k = 0; k < n; ++k)
        c.at(i, j, k) = scalar_at(v[i][j][k], f, p2 + "/" + std::to_string(k));
    }
  }
  return c;
}

json matrix_to_json(const LinearMap& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json tensor2_to_json(const Tensor2& t) {
  json rows = json::array();
  for (int i = 0; i < t.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < t.dim(); ++j) row.push_back(t.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename Cubic>
json cubic_to_json(const Cubic& c) {
  json out = json::array();
  for (int i = 0; i < c.dim(); ++i) {
    json plane = json::array();
    for (int j = 0; j < c.dim(); ++j) {
      json row = json::array();
      for (int k = 0; k < c.dim(); ++k) row.push_back(c.at(i, j, k).to_string());
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

FieldSpec field_at(const json& v) {
  if (!v.is_string()) schema_fail("/field", "expected \"rational\" or \"gf(P)\"");
  std::string txt = v.get<std::string>();
  if (txt == "rational") return FieldSpec::rationals();
  if (txt.size() > 4 && txt.rfind("gf(", 0) == 0 && txt.back() == ')') {
    std::string num = txt.substr(3, txt.size() - 4);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      schema_fail("/field", "malformed characteristic in " + txt);
    if (num.size() > 9) schema_fail("/field", "characteristic too large in " + txt);
    try {
      return FieldSpec::prime(std::stoll(num));
    } catch (const Error& e) {
      schema_fail("/field", e.what());
    }
  }
  schema_fail("/field", "expected \"rational\" or \"gf(P)\", found " + txt);
}

std::string field_to_string(const FieldSpec& f) {
  if (f.kind() == FieldKind::rational) return "rational";
  return "gf(" + std::to_string(f.p()) + ")";
}

const Witness* first_witness(const CheckReport& r) {
  if (!r.witnesses.empty()) return &r.witnesses.front();
  for (const auto& sub : r.sub)
    if (const Witness* w = first_witness(sub)) return w;
  return nullptr;
}

[[noreturn]] void section_fail(Errc code, const std::string& section, const CheckReport& rep,
                               const std::vector<std::string>& basis) {
  const Witness* w = first_witness(rep);
  fail(code, section + " failed validation" +
                 (w ? ": " + witness_to_string(*w, basis) : ""));
}

constexpr int kMaxBundleDim = 8;
constexpr int kMaxNPower = 16;

}  // namespace

StructureBundle::StructureBundle(FieldSpec f, int n, std::vector<std::string> labels)
    : field(f), dim(n), basis(std::move(labels)), mul(f, n), alpha(f, n) {
  if (static_cast<int>(basis.size()) != n)
    fail(Errc::dim_mismatch, "expected " + std::to_string(n) + " basis labels");
}

HomAlgebra StructureBundle::algebra() const {
  HomAlgebra a(field, dim, basis);
  a.mul = mul;
  a.alpha = alpha;
  return a;
}

void validate_bundle(const StructureBundle& b) {
  HomAlgebra a = b.algebra();
  CheckReport base = check_hom_algebra(a);
  if (!base.passed) section_fail(Errc::not_associative, "base algebra", base, b.basis);

  if (b.R && b.S) {
    CheckReport rep = check_alpha_n_rbs(a, *b.R, *b.S, b.n_power.value_or(0));
    if (!rep.passed) section_fail(Errc::invalid_system, "(R, S)", rep, b.basis);
  } else if (b.R && b.lambda) {
    rbs_from_weighted_operator(a, *b.R, *b.lambda);
  }

  if (b.r && b.s) {
    CheckReport rep = check_yb_pair(a, *b.r, *b.s);
    if (!rep.passed) section_fail(Errc::not_yb_pair, "(r, s)", rep, b.basis);
  } else if (b.r || b.s) {
    const Tensor2& t = b.r ? *b.r : *b.s;
    CheckReport rep = check_alpha_invariance(a, t, b.r ? "r" : "s");
    if (!rep.passed) section_fail(Errc::not_invariant, b.r ? "r" : "s", rep, b.basis);
  }

  if (b.coproduct && b.delta1 && b.delta2) {
    CovariantHomBialgebra cb{a, *b.coproduct, *b.delta1, *b.delta2};
    CheckReport rep = check_covariant_hom_bialgebra(cb);
    if (!rep.passed)
      section_fail(Errc::invalid_system, "covariant structure", rep, b.basis);
  } else {
    if (b.coproduct) {
      HomCoalgebra co(b.field, b.dim, b.basis);
      co.delta = *b.coproduct;
      co.alpha = b.alpha;
      CheckReport rep = check_hom_coalgebra(co);
      if (!rep.passed) section_fail(Errc::invalid_system, "coproduct", rep, b.basis);
    }
    if (b.delta1) {
      CheckReport rep = check_derivation(a, *b.delta1);
      if (!rep.passed) section_fail(Errc::invalid_system, "delta1", rep, b.basis);
    }
    if (b.delta2) {
      CheckReport rep = check_derivation(a, *b.delta2);
      if (!rep.passed) section_fail(Errc::invalid_system, "delta2", rep, b.basis);
    }
  }

  if (b.partial1 || b.partial2) {
    if (!b.coproduct)
      fail(Errc::invalid_input, "coderivation sections require a coproduct");
    HomCoalgebra co(b.field, b.dim, b.basis);
    co.delta = *b.coproduct;
    co.alpha = b.alpha;
    for (const auto* part : {&b.partial1, &b.partial2}) {
      if (!part->has_value()) continue;
      CheckReport rep = check_coderivation(co, **part);
      if (!rep.passed)
        section_fail(Errc::invalid_system, part == &b.partial1 ? "partial1" : "partial2",
                     rep, b.basis);
    }
    if (b.partial1 && b.partial2) {
      CheckReport rep = check_covariant_coderivation(co, b.mul, *b.partial1, *b.partial2);
      if (!rep.passed)
        section_fail(Errc::invalid_system, "covariant coderivation", rep, b.basis);
    }
  }

  if (b.prec && b.succ) {
    HomDendriform d(b.field, b.dim, b.basis);
    d.alpha = b.alpha;
    d.prec = *b.prec;
    d.succ = *b.succ;
    CheckReport rep = check_hom_dendriform(d);
    if (!rep.passed) section_fail(Errc::invalid_system, "dendriform pair", rep, b.basis);
  } else if (b.prec || b.succ) {
    fail(Errc::invalid_input, "prec and succ must appear together");
  }

  if (b.diamond) {
    HomPreLie p(b.field, b.dim, b.basis);
    p.alpha = b.alpha;
    p.diamond = *b.diamond;
    CheckReport rep = check_hom_prelie(p);
    if (!rep.passed) section_fail(Errc::invalid_system, "diamond", rep, b.basis);
  }
}

StructureBundle bundle_from_json(const nlohmann::ordered_json& j, bool validate) {
  if (!j.is_object()) schema_fail("", "top-level value must be an object");
  static const std::set<std::string> known = {
      "field", "dim",      "basis",    "mul",      "alpha",   "R",
      "S",     "phi",      "r",        "s",        "coproduct", "delta1",
      "delta2", "prec",    "succ",     "diamond",  "partial1", "partial2",
      "n_power", "lambda"};
  for (const auto& item : j.items())
    if (known.find(item.key()) == known.end())
      schema_fail("/" + item.key(), "unknown key");

  FieldSpec f = field_at(member(j, "field"));

  const json& jdim = member(j, "dim");
  if (!jdim.is_number_integer()) schema_fail("/dim", "expected an integer");
  int n = jdim.get<int>();
  if (n < 1 || n > kMaxBundleDim)
    schema_fail("/dim", "dimension must be between 1 and " + std::to_string(kMaxBundleDim));

  const json& jbasis = member(j, "basis");
  require_array(jbasis, n, "/basis");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (!jbasis[i].is_string())
      schema_fail("/basis/" + std::to_string(i), "expected a string label");
    labels.push_back(jbasis[i].get<std::string>());
  }

  StructureBundle b(f, n, std::move(labels));
  b.mul = cubic_at<BilinearMap>(member(j, "mul"), f, n, "/mul");
  b.alpha = matrix_at(member(j, "alpha"), f, n, "/alpha");

  if (j.contains("R")) b.R = matrix_at(j["R"], f, n, "/R");
  if (j.contains("S")) b.S = matrix_at(j["S"], f, n, "/S");
  if (j.contains("phi")) b.phi = matrix_at(j["phi"], f, n, "/phi");
  if (j.contains("r")) b.r = tensor2_at(j["r"], f, n, "/r");
  if (j.contains("s")) b.s = tensor2_at(j["s"], f, n, "/s");
  if (j.contains("coproduct"))
    b.coproduct = cubic_at<Coproduct>(j["coproduct"], f, n, "/coproduct");
  if (j.contains("delta1")) b.delta1 = cubic_at<Coproduct>(j["delta1"], f, n, "/delta1");
  if (j.contains("delta2")) b.delta2 = cubic_at<Coproduct>(j["delta2"], f, n, "/delta2");
  if (j.contains("prec")) b.prec = cubic_at<BilinearMap>(j["prec"], f, n, "/prec");
  if (j.contains("succ")) b.succ = cubic_at<BilinearMap>(j["succ"], f, n, "/succ");
  if (j.contains("diamond")) b.diamond = cubic_at<BilinearMap>(j["diamond"], f, n, "/diamond");
  if (j.contains("partial1"))
    b.partial1 = cubic_at<BilinearMap>(j["partial1"], f, n, "/partial1");
  if (j.contains("partial2"))
    b.partial2 = cubic_at<BilinearMap>(j["partial2"], f, n, "/partial2");
  if (j.contains("n_power")) {
    const json& np = j["n_power"];
    if (!np.is_number_integer()) schema_fail("/n_power", "expected an integer");
    int v = np.get<int>();
    if (v < 0 || v > kMaxNPower)
      schema_fail("/n_power", "must be between 0 and " + std::to_string(kMaxNPower));
    b.n_power = v;
  }
  if (j.contains("lambda")) b.lambda = scalar_at(j["lambda"], f, "/lambda");

  if (validate) validate_bundle(b);
  return b;
}

StructureBundle load_bundle(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) fail(Errc::invalid_input, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(Errc::parse_error, "bundle is not valid JSON: " + std::string(e.what()));
  }
  return bundle_from_json(j, validate);
}

nlohmann::ordered_json bundle_to_json(const StructureBundle& b) {
  json j = json::object();
  j["field"] = field_to_string(b.field);
  j["dim"] = b.dim;
  j["basis"] = b.basis;
  j["mul"] = cubic_to_json(b.mul);
  j["alpha"] = matrix_to_json(b.alpha);
  if (b.R) j["R"] = matrix_to_json(*b.R);
  if (b.S) j["S"] = matrix_to_json(*b.S);
  if (b.phi) j["phi"] = matrix_to_json(*b.phi);
  if (b.r) j["r"] = tensor2_to_json(*b.r);
  if (b.s) j["s"] = tensor2_to_json(*b.s);
  if (b.coproduct) j["coproduct"] = cubic_to_json(*b.coproduct);
  if (b.delta1) j["delta1"] = cubic_to_json(*b.delta1);
  if (b.delta2) j["delta2"] = cubic_to_json(*b.delta2);
  if (b.prec) j["prec"] = cubic_to_json(*b.prec);
  if (b.succ) j["succ"] = cubic_to_json(*b.succ);
  if (b.diamond) j["diamond"] = cubic_to_json(*b.diamond);
  if (b.partial1) j["partial1"] = cubic_to_json(*b.partial1);
  if (b.partial2) j["partial2"] = cubic_to_json(*b.partial2);
  if (b.n_power) j["n_power"] = *b.n_power;
  if (b.lambda) j["lambda"] = b.lambda->to_string();
  return j;
}

void save_bundle(const StructureBundle& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::invalid_input, "cannot write " + path);
  out << bundle_to_json(b).dump(2) << "\n";
}

}  // namespace hombax
