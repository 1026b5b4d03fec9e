#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "whcx.h"

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { whcx_string_free(s); }
};

int report_error(whcx_status st) {
  std::cerr << "error: " << whcx_last_error() << "\n";
  return static_cast<int>(st);
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text << "\n";
  return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild and cyclic (co)homology of weak crossed products"};
  app.require_subcommand(1);

  std::string path, json_path, module = "trivial";
  int nmax = 3, trunc = 1, h = -1;

  const char* names[] = {"verify", "hh", "hcoh", "whh", "whcoh", "ss", "cyclic", "cup", "cap"};
  const char* help[] = {"run every axiom suite on the instance",
                        "Hochschild homology HH_n(E, M) relative to K",
                        "Hochschild cohomology HH^n(E, M) relative to K",
                        "homology of H with coefficients in a module",
                        "cohomology of H with coefficients in a module",
                        "E^2 pages of the filtration spectral sequences",
                        "cyclic, negative and periodic homology of E",
                        "cup product checks on cohomology",
                        "cap product checks"};
  std::vector<CLI::App*> subs;
  for (size_t i = 0; i < std::size(names); ++i) {
    CLI::App* s = app.add_subcommand(names[i], help[i]);
    s->set_help_flag("--help", "print this help message and exit");
    s->add_option("instance", path, "instance JSON file")->required();
    s->add_option("--nmax", nmax, "highest degree")->check(CLI::NonNegativeNumber);
    s->add_option("--trunc", trunc, "column windows for HN and HP")->check(CLI::NonNegativeNumber);
    s->add_option("--module", module, "trivial | regular | coinvariant (whh); trivial | invariant (whcoh)");
    s->add_option("--h", h, "print the action of basis element e_h (1-based)");
    s->add_option("--json", json_path, "write the JSON report to a file, or to stdout when no file is given")
        ->expected(0, 1);
    subs.push_back(s);
  }

  std::string kind, out_path;
  int n = 2, field = 0;
  CLI::App* build = app.add_subcommand("build", "write a preset instance: group, pair_groupoid, discrete_groupoid, smash");
  build->add_option("kind", kind, "preset name")->required();
  build->add_option("--n", n, "group order or number of objects");
  build->add_option("--field", field, "0 for Q, or a prime p");
  build->add_option("-o,--out", out_path, "output file (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : WHCX_USAGE;
  }
  if (build->parsed()) {
    Owned js;
    whcx_status st = whcx_build(kind.c_str(), n, field, &js.s);
    if (st != WHCX_OK) return report_error(st);
    if (out_path.empty()) {
      std::cout << js.s << "\n";
    } else if (!write_file(out_path, js.s)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return WHCX_USAGE;
    }
    return 0;
  }

  CLI::App* cmd = app.get_subcommands().front();
  bool json_given = cmd->count("--json") > 0;
  whcx_instance* inst = nullptr;
  whcx_status st = whcx_instance_load(path.c_str(), &inst);
  if (st != WHCX_OK) return report_error(st);

  std::string opts = nlohmann::json{{"nmax", nmax}, {"trunc", trunc}, {"module", module}, {"h", h}}.dump();
  Owned report;
  st = whcx_run(inst, cmd->get_name().c_str(), opts.c_str(), &report.s);
  whcx_instance_free(inst);
  if (!report.s) return report_error(st);

  if (json_given && json_path.empty()) {
    std::cout << report.s << "\n";
  } else {
    Owned table;
    if (whcx_report_table(report.s, &table.s) != WHCX_OK) return report_error(WHCX_INTERNAL);
    std::cout << table.s;
    if (!json_path.empty() && !write_file(json_path, report.s)) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return WHCX_USAGE;
    }
  }
  return static_cast<int>(st);
}
