#pragma once

#include <string>
#include <utility>
#include <vector>

#include "instance.hpp"
#include "json.hpp"
#include "report.hpp"

namespace whcx {

enum class Status { ok = 0, failed = 1, parse = 2, axiom = 3, unsupported = 4, usage = 5 };

struct Options {
  int n_max = 3;
  int trunc = 1;
  std::string module = "trivial";
  int h = -1;  // 1-based basis index, −1 when absent
};

// A command's report plus its dimension table in emission order.
struct Outcome {
  std::string command;
  Report report;
  std::vector<std::pair<std::string, int>> dims;
  Status status = Status::ok;
  std::string error;

  nlohmann::json to_json() const;
  static Outcome from_json(const nlohmann::json& j);
  std::string table() const;
};

Options options_from_json(const nlohmann::json& j);
// verify | hh | hcoh | whh | whcoh | ss | cyclic | cup | cap
Outcome run_command(const Instance& in, const std::string& command, const Options& opt);
// build: the preset instance as JSON.
nlohmann::json build_command(const std::string& kind, int n, int p);

}  // namespace whcx
