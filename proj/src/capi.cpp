#include <cstdlib>
#include <cstring>
#include <string>

#include "commands.hpp"
#include "instance.hpp"
#include "whcx.h"

struct whcx_instance {
  whcx::Instance in;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
whcx_status guard(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const whcx::ParseError& e) {
    last_error = e.what();
    return WHCX_PARSE;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return WHCX_PARSE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return WHCX_USAGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WHCX_INTERNAL;
  }
}

whcx_status load(whcx::Instance in, whcx_instance** out) {
  *out = new whcx_instance{std::move(in)};
  return WHCX_OK;
}

}  // namespace

extern "C" {

whcx_status whcx_instance_load(const char* path, whcx_instance** out) {
  if (!out) return WHCX_USAGE;
  *out = nullptr;
  if (!path) return WHCX_USAGE;
  return guard([&] { return load(whcx::load_instance(path), out); });
}

whcx_status whcx_instance_parse(const char* json_text, whcx_instance** out) {
  if (!out) return WHCX_USAGE;
  *out = nullptr;
  if (!json_text) return WHCX_USAGE;
  return guard([&] { return load(whcx::parse_instance_text(json_text), out); });
}

void whcx_instance_free(whcx_instance* inst) { delete inst; }

whcx_status whcx_instance_json(const whcx_instance* inst, char** json_out) {
  if (!inst || !json_out) return WHCX_USAGE;
  return guard([&] {
    *json_out = dup(whcx::to_json(inst->in).dump(2));
    return WHCX_OK;
  });
}

whcx_status whcx_run(const whcx_instance* inst, const char* command, const char* options_json, char** report_json) {
  if (!inst || !command || !report_json) return WHCX_USAGE;
  *report_json = nullptr;
  return guard([&] {
    whcx::Options opt;
    if (options_json && *options_json) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(options_json);
        opt = whcx::options_from_json(j);
      } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad options: ") + e.what());
      }
    }
    whcx::Outcome o = whcx::run_command(inst->in, command, opt);
    if (!o.error.empty()) last_error = o.error;
    *report_json = dup(o.to_json().dump(2));
    return static_cast<whcx_status>(o.status);
  });
}

whcx_status whcx_report_table(const char* report_json, char** table_out) {
  if (!report_json || !table_out) return WHCX_USAGE;
  return guard([&] {
    *table_out = dup(whcx::Outcome::from_json(nlohmann::json::parse(report_json)).table());
    return WHCX_OK;
  });
}

whcx_status whcx_build(const char* kind, int n, int p, char** json_out) {
  if (!kind || !json_out) return WHCX_USAGE;
  *json_out = nullptr;
  return guard([&] {
    *json_out = dup(whcx::build_command(kind, n, p).dump(2));
    return WHCX_OK;
  });
}

void whcx_string_free(char* s) { std::free(s); }

const char* whcx_last_error(void) { return last_error.c_str(); }

}  // extern "C"
