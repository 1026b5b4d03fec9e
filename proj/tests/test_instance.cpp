#include <string>

#include "commands.hpp"
#include "doctest.h"
#include "instance.hpp"

using namespace whcx;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(WHCX_FIXTURES) + "/" + name + ".json"; }

void same_structures(const Instance& a, const Instance& b) {
  CHECK(a.p == b.p);
  CHECK(a.H->alg().to_tensor() == b.H->alg().to_tensor());
  CHECK(a.H->alg().unit == b.H->alg().unit);
  CHECK(a.H->coalg().to_tensor() == b.H->coalg().to_tensor());
  CHECK(a.H->coalg().counit == b.H->coalg().counit);
  CHECK(a.H->antipode() == b.H->antipode());
  CHECK(a.measure.A.to_tensor() == b.measure.A.to_tensor());
  CHECK(a.measure.rho == b.measure.rho);
  CHECK(cocycle_equal(a.cocycle(), b.cocycle()));
  CHECK(a.k_basis() == b.k_basis());
}

}  // namespace

TEST_CASE("builder → serialize → parse gives identical structures") {
  for (auto [kind, n, p] : {std::tuple{"group", 2, 0}, {"group", 3, 2}, {"pair_groupoid", 2, 0},
                            {"discrete_groupoid", 2, 0}, {"smash", 2, 0}, {"smash", 2, 3}}) {
    CAPTURE(kind);
    Instance a = preset(kind, n, p);
    json j = to_json(a);
    Instance b = parse_instance_text(j.dump());
    same_structures(a, b);
    CHECK(to_json(b) == j);
  }
}

TEST_CASE("rationals survive serialization as p/q strings") {
  json j = to_json(preset("group", 2, 0));
  j["K"] = json::array({json::array({"2/3"})});
  Instance in = parse_instance(j);
  CHECK(in.K->at(0)[0] == Scalar(mpq_class(2, 3)));
  CHECK(to_json(in)["K"][0][0] == "2/3");
  CHECK(build_cleft(in).dK() == 1);
}

TEST_CASE("parse rejects ragged or malformed data") {
  json good = to_json(preset("smash", 2, 0));
  auto rejects = [&](auto edit) {
    json j = good;
    edit(j);
    CHECK_THROWS_AS(parse_instance(j), ParseError);
  };
  rejects([](json& j) { j["H"]["mult"][1].erase(0); });
  rejects([](json& j) { j["A"]["unit"].push_back(0); });
  rejects([](json& j) { j["rho"][0][0] = json::array({1}); });
  rejects([](json& j) { j["field"] = json{{"Fp", 4}}; });
  rejects([](json& j) { j["field"] = "R"; });
  rejects([](json& j) { j["H"]["counit"][0] = "1/0"; });
  rejects([](json& j) { j.erase("rho"); });
  rejects([](json& j) { j["K"] = 3; });
  CHECK_THROWS_AS(parse_instance_text("{"), ParseError);
  CHECK_THROWS_AS(load_instance(fixture("does_not_exist")), ParseError);
}

TEST_CASE("bundled fixtures load and pass every suite") {
  for (const char* name : {"qc2", "f2c2", "qc2_smash", "trivial_rep", "qxq", "inner_twisted"}) {
    CAPTURE(name);
    Verified v = verify_instance(load_instance(fixture(name)));
    CHECK(v.report.ok());
    if (!v.report.ok()) MESSAGE(v.report.first_failure()->name);
  }
}

TEST_CASE("negative controls fail the named check") {
  for (auto [name, check] : {std::pair{"corrupted", "propiedad de epsilon (first equality)"},
                             {"noninvertible_f", "f invertible"},
                             {"unstable_k", "estable bajo rho"}}) {
    CAPTURE(name);
    Outcome o = run_command(load_instance(fixture(name)), "verify", {});
    CHECK(o.status == Status::axiom);
    const Check* c = o.report.find(check);
    REQUIRE(c);
    CHECK_FALSE(c->pass);
  }
  Outcome hh = run_command(load_instance(fixture("corrupted")), "hh", {});
  CHECK(hh.status == Status::axiom);
}

TEST_CASE("f outside K is unsupported for homology") {
  Outcome o = run_command(load_instance(fixture("inner_twisted")), "hh", {});
  CHECK(o.status == Status::unsupported);
  CHECK(o.error.find("UnsupportedCocycle") != std::string::npos);
}

TEST_CASE("JSON and table renderings carry identical dims") {
  Instance in = load_instance(fixture("qc2_smash"));
  for (const char* cmd : {"verify", "hh", "hcoh", "ss"}) {
    CAPTURE(cmd);
    Options o;
    o.n_max = 2;
    Outcome a = run_command(in, cmd, o);
    CHECK(a.status == Status::ok);
    Outcome b = Outcome::from_json(json::parse(a.to_json().dump()));
    CHECK(b.dims == a.dims);
    CHECK(b.table() == a.table());
    for (const auto& [k, v] : a.dims) CHECK(a.table().find(k + " = " + std::to_string(v)) != std::string::npos);
  }
}

TEST_CASE("command examples") {
  Options o;
  o.n_max = 3;
  Outcome hh = run_command(load_instance(fixture("qc2")), "hh", o);
  std::vector<std::pair<std::string, int>> want{{"H_0", 2}, {"H_1", 0}, {"H_2", 0}, {"H_3", 0}};
  CHECK(hh.dims == want);
  o.n_max = 4;
  Outcome whh = run_command(load_instance(fixture("f2c2")), "whh", o);
  CHECK(whh.status == Status::ok);
  for (const auto& [k, v] : whh.dims) CHECK(v == 1);
  CHECK(whh.dims.size() == 5);
}
