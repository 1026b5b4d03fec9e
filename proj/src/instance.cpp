#include "instance.hpp"

#include <fstream>
#include <sstream>

#include "builders.hpp"

namespace whcx {

using nlohmann::json;

AxiomFailure::AxiomFailure(Report r)
    : std::runtime_error(r.first_failure() ? r.first_failure()->name : "axiom failure"), report(std::move(r)) {}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing \"") + key + "\"");
  return j.at(key);
}

int nat(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<int>();
}

Scalar scalar(const json& j, int p, const std::string& where) {
  try {
    if (j.is_number_integer()) return Scalar(j.get<long>(), p);
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), p);
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where, "expected a number or a \"p/q\" string");
}

Vec vec(const json& j, int n, int p, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) fail(where, "expected an array of length " + std::to_string(n));
  Vec v;
  for (int i = 0; i < n; ++i) v.push_back(scalar(j[i], p, where + "[" + std::to_string(i) + "]"));
  return v;
}

// a[i][j] is a vector of length n; shape d1 × d2.
std::vector<std::vector<Vec>> grid(const json& j, int d1, int d2, int n, int p, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != d1) fail(where, "expected " + std::to_string(d1) + " rows");
  std::vector<std::vector<Vec>> out(d1);
  for (int a = 0; a < d1; ++a) {
    std::string w = where + "[" + std::to_string(a) + "]";
    if (!j[a].is_array() || static_cast<int>(j[a].size()) != d2) fail(w, "expected " + std::to_string(d2) + " entries");
    for (int b = 0; b < d2; ++b) out[a].push_back(vec(j[a][b], n, p, w + "[" + std::to_string(b) + "]"));
  }
  return out;
}

std::vector<Scalar> flatten(const std::vector<std::vector<Vec>>& g) {
  std::vector<Scalar> out;
  for (const auto& row : g)
    for (const auto& v : row) out.insert(out.end(), v.begin(), v.end());
  return out;
}

// Matrix given as a list of image columns.
Matrix columns(const json& j, int n, int p, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) fail(where, "expected " + std::to_string(n) + " columns");
  Matrix m(n, n, p);
  for (int c = 0; c < n; ++c) m.set_col(c, vec(j[c], n, p, where + "[" + std::to_string(c) + "]"));
  return m;
}

json jscalar(const Scalar& s) {
  const mpq_class& q = s.value();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  return json(s.str());
}

json jvec(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jscalar(x));
  return a;
}

json jgrid(const std::vector<std::vector<Vec>>& g) {
  json a = json::array();
  for (const auto& row : g) {
    json r = json::array();
    for (const auto& v : row) r.push_back(jvec(v));
    a.push_back(r);
  }
  return a;
}

std::vector<std::vector<Vec>> unflatten(const std::vector<Scalar>& t, int d) {
  std::vector<std::vector<Vec>> g(d, std::vector<Vec>(d));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) g[i][k] = Vec(t.begin() + (i * d + k) * d, t.begin() + (i * d + k + 1) * d);
  return g;
}

json jalgebra(const Algebra& a) {
  return {{"dim", a.dim}, {"mult", jgrid(unflatten(a.to_tensor(), a.dim))}, {"unit", jvec(a.unit)}};
}

Algebra algebra(const json& j, int p, const std::string& where) {
  int d = nat(field(j, "dim", where), where + ".dim");
  auto mult = grid(field(j, "mult", where), d, d, d, p, where + ".mult");
  Vec unit = vec(field(j, "unit", where), d, p, where + ".unit");
  return Algebra::from_tensor(d, p, flatten(mult), unit);
}

}  // namespace

Cocycle Instance::cocycle() const { return f ? *f : trivial_cocycle(measure); }

std::vector<Vec> Instance::k_basis() const { return K ? *K : minimal_stable_subalgebra(measure); }

Instance parse_instance(const json& j) {
  if (!j.is_object()) fail("instance", "expected a JSON object");
  Instance in;
  const json& fd = field(j, "field", "instance");
  if (fd.is_string() && fd.get<std::string>() == "Q") {
    in.p = 0;
  } else if (fd.is_object() && fd.contains("Fp")) {
    in.p = nat(fd.at("Fp"), "field.Fp");
    if (!is_prime(in.p)) fail("field.Fp", std::to_string(in.p) + " is not prime");
  } else {
    fail("field", "expected \"Q\" or {\"Fp\": p}");
  }
  int p = in.p;
  const json& hj = field(j, "H", "instance");
  Algebra ha = algebra(hj, p, "H");
  int dh = ha.dim;
  auto comult = grid(field(hj, "comult", "H"), dh, dh, dh, p, "H.comult");
  Vec counit = vec(field(hj, "counit", "H"), dh, p, "H.counit");
  Matrix s = columns(field(hj, "antipode", "H"), dh, p, "H.antipode");
  try {
    in.H = std::make_shared<const WeakHopf>(ha, Coalgebra::from_tensor(dh, p, flatten(comult), counit), s);
  } catch (const std::invalid_argument& e) {
    fail("H", e.what());
  }
  in.measure.H = in.H;
  in.measure.A = algebra(field(j, "A", "instance"), p, "A");
  int da = in.measure.A.dim;
  in.measure.rho = grid(field(j, "rho", "instance"), dh, da, da, p, "rho");
  if (j.contains("f") && !(j["f"].is_string() && j["f"] == "trivial")) in.f = grid(j["f"], dh, dh, da, p, "f");
  if (j.contains("K") && !(j["K"].is_string() && j["K"] == "minimal")) {
    if (!j["K"].is_array()) fail("K", "expected \"minimal\" or a list of vectors");
    std::vector<Vec> k;
    for (size_t i = 0; i < j["K"].size(); ++i) k.push_back(vec(j["K"][i], da, p, "K[" + std::to_string(i) + "]"));
    in.K = k;
  }
  if (j.contains("M") && !(j["M"].is_string() && j["M"] == "E")) {
    const json& mj = j["M"];
    Bimodule m;
    m.p = p;
    m.dim = nat(field(mj, "dim", "M"), "M.dim");
    for (const char* side : {"left", "right"}) {
      const json& acts = field(mj, side, "M");
      if (!acts.is_array()) fail(std::string("M.") + side, "expected one matrix per basis element of E");
      auto& out = side[0] == 'l' ? m.left : m.right;
      for (size_t x = 0; x < acts.size(); ++x)
        out.push_back(columns(acts[x], m.dim, p, std::string("M.") + side + "[" + std::to_string(x) + "]"));
    }
    in.M = m;
  }
  return in;
}

Instance parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(j);
}

Instance load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_instance_text(ss.str());
}

json to_json(const Instance& in) {
  json j;
  j["field"] = in.p == 0 ? json("Q") : json{{"Fp", in.p}};
  const WeakHopf& h = *in.H;
  json hj = jalgebra(h.alg());
  hj["comult"] = jgrid(unflatten(h.coalg().to_tensor(), h.dim()));
  hj["counit"] = jvec(h.coalg().counit);
  json s = json::array();
  for (int i = 0; i < h.dim(); ++i) s.push_back(jvec(h.S(i)));
  hj["antipode"] = s;
  j["H"] = hj;
  j["A"] = jalgebra(in.measure.A);
  j["rho"] = jgrid(in.measure.rho);
  j["f"] = in.f ? jgrid(*in.f) : json("trivial");
  if (in.K) {
    json k = json::array();
    for (const auto& v : *in.K) k.push_back(jvec(v));
    j["K"] = k;
  } else {
    j["K"] = "minimal";
  }
  if (in.M) {
    json m{{"dim", in.M->dim}};
    for (const char* side : {"left", "right"}) {
      json acts = json::array();
      for (const auto& a : side[0] == 'l' ? in.M->left : in.M->right) {
        json c = json::array();
        for (int x = 0; x < a.cols(); ++x) c.push_back(jvec(a.col(x)));
        acts.push_back(c);
      }
      m[side] = acts;
    }
    j["M"] = m;
  } else {
    j["M"] = "E";
  }
  return j;
}

Verified verify_instance(const Instance& in) {
  Verified v;
  Report& r = v.report;
  r.append(in.H->verify_all());
  if (!r.ok()) return v;
  r.append(verify_crossed_hypotheses(in.measure, in.cocycle()));
  if (!r.ok()) return v;
  auto inv = invert_cocycle(in.measure, in.cocycle());
  r.add("f invertible", inv.has_value(), inv ? "" : "no f⁻¹ with f*f⁻¹ = u2 and f⁻¹*f = u2");
  if (!inv) return v;
  r.append(verify_cocycle_pair(in.measure, in.cocycle(), inv->inv));
  r.append(verify_stable_subalgebra(in.measure, in.k_basis()));
  if (!r.ok()) return v;
  try {
    v.cp = std::make_shared<const CrossedProduct>(in.measure, in.cocycle(), inv->inv);
  } catch (const CheckFailed& e) {
    r.add(e.check, false, e.what());
    return v;
  }
  r.append(v.cp->verify());
  r.append(v.cp->verify_comodule());
  r.append(v.cp->verify_cleft_identities(2));
  if (in.M) {
    if (static_cast<int>(in.M->left.size()) != v.cp->dim() || static_cast<int>(in.M->right.size()) != v.cp->dim())
      r.add("bimodule shape", false, "M needs one matrix per basis element of E on each side");
    else
      r.append(in.M->verify(v.cp->E()));
  }
  return v;
}

Cleft build_cleft(const Instance& in) {
  Verified v = verify_instance(in);
  if (!v.report.ok()) throw AxiomFailure(v.report);
  Bimodule m = in.M ? *in.M : regular_bimodule(v.cp->E());
  return Cleft(v.cp, in.k_basis(), std::move(m));
}

Instance preset(const std::string& kind, int n, int p) {
  if (p != 0 && !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  Instance in;
  in.p = p;
  if (kind == "group") {
    in.H = std::make_shared<const WeakHopf>(group_algebra(n, p));
    in.measure = counit_measure(in.H);
  } else if (kind == "pair_groupoid") {
    in.H = std::make_shared<const WeakHopf>(groupoid_algebra(pair_groupoid(n), p));
    in.measure = trivial_representation(in.H);
  } else if (kind == "discrete_groupoid") {
    in.H = std::make_shared<const WeakHopf>(groupoid_algebra(discrete_groupoid(n), p));
    in.measure = trivial_representation(in.H);
  } else if (kind == "smash") {
    in.H = std::make_shared<const WeakHopf>(group_algebra(2, p));
    in.measure = sign_smash_measure(in.H);
  } else {
    throw std::invalid_argument("unknown preset " + kind);
  }
  return in;
}

}  // namespace whcx
