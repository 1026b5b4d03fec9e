#include "commands.hpp"

#include <sstream>

#include "builders.hpp"
#include "whhom.hpp"

namespace whcx {

using nlohmann::json;

json Outcome::to_json() const {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  json d = json::array();
  for (const auto& [k, v] : dims) d.push_back({{"name", k}, {"value", v}});
  json j{{"command", command}, {"ok", status == Status::ok}, {"status", static_cast<int>(status)},
         {"checks", checks}, {"dims", d}, {"notes", report.notes}};
  if (!error.empty()) j["error"] = error;
  return j;
}

Outcome Outcome::from_json(const json& j) {
  Outcome o;
  o.command = j.at("command").get<std::string>();
  o.status = static_cast<Status>(j.at("status").get<int>());
  for (const auto& c : j.at("checks"))
    o.report.add(c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("witness").get<std::string>());
  for (const auto& d : j.at("dims")) o.dims.push_back({d.at("name").get<std::string>(), d.at("value").get<int>()});
  o.report.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("error")) o.error = j["error"].get<std::string>();
  return o;
}

std::string Outcome::table() const {
  std::ostringstream os;
  os << command << ": " << (status == Status::ok ? "ok" : "FAILED") << "\n";
  if (!error.empty()) os << "error: " << error << "\n";
  for (const auto& [k, v] : dims) os << "  " << k << " = " << v << "\n";
  for (const auto& c : report.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.pass && !c.witness.empty()) os << "  (" << c.witness << ")";
    os << "\n";
  }
  for (const auto& n : report.notes) os << "  note: " << n << "\n";
  return os.str();
}

Options options_from_json(const json& j) {
  Options o;
  if (!j.is_object()) return o;
  if (j.contains("nmax")) o.n_max = j["nmax"].get<int>();
  if (j.contains("trunc")) o.trunc = j["trunc"].get<int>();
  if (j.contains("module")) o.module = j["module"].get<std::string>();
  if (j.contains("h")) o.h = j["h"].get<int>();
  return o;
}

namespace {

void add_dims(Outcome& out, const std::string& prefix, const std::vector<int>& d) {
  for (size_t n = 0; n < d.size(); ++n) out.dims.push_back({prefix + std::to_string(n), d[n]});
}

std::string matrix_str(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
  }
  os << "]";
  return os.str();
}

void note_action(Outcome& out, const WeakHopf& H, const HModule& m, int h) {
  if (h < 1 || h > H.dim()) throw std::invalid_argument("--h must be a basis index between 1 and " + std::to_string(H.dim()));
  out.report.notes.push_back("action of e_" + std::to_string(h) + ": " + matrix_str(m.act[h - 1]));
}

void require_e(const Instance& in, const char* what) {
  if (in.M) throw Unsupported(std::string(what) + " needs M = E");
}

void whh(const Instance& in, const Options& o, Outcome& out, bool co) {
  const WeakHopf& H = *in.H;
  HModule m;
  std::vector<int> other;
  std::string other_name;
  if (o.module == "trivial") {
    m = co ? trivial_right(H) : trivial_left(H);
  } else if (o.module == "regular" && !co) {
    m = regular_left(H);
  } else if (o.module == (co ? "invariant" : "coinvariant")) {
    Cleft c = build_cleft(in);
    if (c.dK() != c.A().dim) throw Unsupported("the " + o.module + " module needs K = A");
    m = co ? invariant_module(c) : coinvariant_module(c);
    other = co ? hochschild_cohomology_cleft(c, o.n_max) : hochschild_homology_cleft(c, o.n_max);
    other_name = co ? "H^n(H, M^K) = HH^n_K(E, M)" : "H_n(H, M⊗) = HH^K_n(E, M)";
  } else {
    throw std::invalid_argument("unknown module " + o.module);
  }
  out.report.append(m.verify(H));
  auto d = co ? cohomology_of_H(H, m, o.n_max) : homology_of_H(H, m, o.n_max);
  add_dims(out, co ? "H^" : "H_", d);
  if (other_name.empty()) {
    other = co ? ext_via_resolution(H, m, o.n_max) : tor_via_resolution(H, m, o.n_max);
    other_name = co ? "agrees with Ext over the resolution" : "agrees with Tor over the resolution";
  }
  out.report.add(other_name, d == other);
  if (o.h >= 0) note_action(out, H, m, o.h);
}

void run(const Instance& in, const std::string& cmd, const Options& o, Outcome& out) {
  if (cmd == "verify") {
    Verified v = verify_instance(in);
    out.report = v.report;
    if (!v.report.ok()) out.status = Status::axiom;
    if (v.cp) out.dims = {{"dim H", in.H->dim()}, {"dim A", in.measure.A.dim}, {"dim E", v.cp->dim()},
                          {"dim K", static_cast<int>(in.k_basis().size())}};
    return;
  }
  if (cmd == "whh" || cmd == "whcoh") return whh(in, o, out, cmd == "whcoh");
  Cleft c = build_cleft(in);
  if (cmd == "hh" || cmd == "hcoh") {
    bool co = cmd == "hcoh";
    auto d = co ? hochschild_cohomology_cleft(c, o.n_max) : hochschild_homology_cleft(c, o.n_max);
    auto canon = co ? canonical_cohomology_dims(c, o.n_max) : canonical_homology_dims(c, o.n_max);
    add_dims(out, co ? "H^" : "H_", d);
    out.report.add(co ? "agrees with the canonical Hochschild cochains" : "agrees with the canonical Hochschild chains",
                   d == canon);
  } else if (cmd == "ss") {
    E2Comparison ch = spectral_e2(c, o.n_max), co = spectral_e2_co(c, o.n_max);
    for (const auto& [rs, v] : ch.filtration)
      out.dims.push_back({"E^2_{" + std::to_string(rs.first) + "," + std::to_string(rs.second) + "}", v});
    for (const auto& [rs, v] : co.filtration)
      out.dims.push_back({"E_2^{" + std::to_string(rs.first) + "," + std::to_string(rs.second) + "}", v});
    out.report.append(ch.report);
    out.report.append(co.report);
  } else if (cmd == "cyclic") {
    require_e(in, "cyclic");
    out.report.append(verify_t_maps(c, 2));
    CyclicComparison cc = cyclic_compare(c, o.n_max, o.trunc);
    out.report.append(cc.report);
    add_dims(out, "HC_", cc.xbar.hc);
    add_dims(out, "HN_", cc.xbar.hn);
    add_dims(out, "HP_", cc.xbar.hp);
    auto window = [&](std::string name, bool st, int t) {
      out.report.notes.push_back(name + (st ? " stabilized at window " + std::to_string(t)
                                            : " not stabilized within trunc " + std::to_string(o.trunc)));
    };
    window("HN of X̄", cc.xbar.hn_stable, cc.xbar.hn_window);
    window("HP of X̄", cc.xbar.hp_stable, cc.xbar.hp_window);
    window("HN of the canonical complex", cc.canonical.hn_stable, cc.canonical.hn_window);
    window("HP of the canonical complex", cc.canonical.hp_stable, cc.canonical.hp_window);
  } else if (cmd == "cup" || cmd == "cap") {
    require_e(in, cmd.c_str());
    Report r = verify_products(c, o.n_max);
    bool cap = cmd == "cap";
    for (const auto& ch : r.checks)
      if ((ch.name.find("∗") != std::string::npos) == cap) out.report.checks.push_back(ch);
    add_dims(out, "H^", hochschild_cohomology_cleft(c, o.n_max));
    if (cap) add_dims(out, "H_", hochschild_homology_cleft(c, o.n_max));
  } else {
    out.status = Status::usage;
    out.error = "unknown command " + cmd;
    return;
  }
  if (!out.report.ok()) out.status = Status::failed;
}

}  // namespace

Outcome run_command(const Instance& in, const std::string& command, const Options& opt) {
  Outcome out;
  out.command = command;
  try {
    run(in, command, opt, out);
  } catch (const AxiomFailure& e) {
    out.report.append(e.report);
    out.status = Status::axiom;
    out.error = std::string("instance fails ") + e.what();
  } catch (const CheckFailed& e) {
    out.report.add(e.check, false, e.what());
    out.status = Status::axiom;
    out.error = e.what();
  } catch (const IllDefined& e) {
    out.report.add("well defined", false, std::string(e.what()) + " at " + tuple_str(e.witness));
    out.status = Status::axiom;
    out.error = e.what();
  } catch (const Unsupported& e) {
    out.status = Status::unsupported;
    out.error = e.what();
  } catch (const std::invalid_argument& e) {
    out.status = Status::usage;
    out.error = e.what();
  } catch (const std::exception& e) {
    out.status = Status::failed;
    out.error = e.what();
  }
  return out;
}

json build_command(const std::string& kind, int n, int p) { return to_json(preset(kind, n, p)); }

}  // namespace whcx
