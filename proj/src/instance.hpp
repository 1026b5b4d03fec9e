#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cleft.hpp"
#include "crossed.hpp"
#include "json.hpp"
#include "report.hpp"
#include "weak_hopf.hpp"

namespace whcx {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An instance that failed a verification suite; report holds every check run.
struct AxiomFailure : std::runtime_error {
  AxiomFailure(Report r);
  Report report;
};

// Instance data as read from JSON. Structural checks only; axioms run in verify_instance.
struct Instance {
  int p = 0;
  HPtr H;
  WeakMeasure measure;
  std::optional<Cocycle> f;              // empty: the trivial cocycle
  std::optional<std::vector<Vec>> K;     // empty: the minimal stable subalgebra
  std::optional<Bimodule> M;             // empty: M = E

  Cocycle cocycle() const;
  std::vector<Vec> k_basis() const;
};

Instance parse_instance(const nlohmann::json& j);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);
nlohmann::json to_json(const Instance& in);

// Every suite on the instance; the crossed product is returned when it could be built.
struct Verified {
  Report report;
  std::shared_ptr<const CrossedProduct> cp;
};
Verified verify_instance(const Instance& in);
// Throws AxiomFailure unless every suite passes.
Cleft build_cleft(const Instance& in);

// Named example instances: group, pair_groupoid, discrete_groupoid, smash.
Instance preset(const std::string& kind, int n, int p);

}  // namespace whcx
