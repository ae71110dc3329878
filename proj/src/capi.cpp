#include "incdec.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "core/errors.hpp"
#include "core/harness.hpp"
#include "core/io.hpp"
#include "core/verify_paper.hpp"

using namespace incdec;

struct incdec_instance {
  Instance declared;
  OracleInstance resolved;
};

namespace {

thread_local std::string t_last_error;

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

incdec_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return INCDEC_ERROR_INVALID;
    case ErrorKind::Parse: return INCDEC_ERROR_PARSE;
    case ErrorKind::Capacity: return INCDEC_ERROR_CAPACITY;
    case ErrorKind::Precondition: return INCDEC_ERROR_PRECONDITION;
    case ErrorKind::Io: return INCDEC_ERROR_IO;
    case ErrorKind::Internal: return INCDEC_ERROR_INTERNAL;
  }
  return INCDEC_ERROR_INTERNAL;
}

template <typename Fn>
incdec_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return INCDEC_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return INCDEC_ERROR_INTERNAL;
  }
}

struct Options {
  Prec prec = Prec::Le;
  std::string tie_spec = "min-index";
  bool normalize = true;
  AnalyzerCaps caps;
  int profile_cap = 20;
  int order_cap = 9;
  std::uint64_t seed = 1;
  std::string only;
};

Options parse_options(const char* options_json) {
  Options options;
  if (options_json == nullptr || *options_json == '\0') return options;
  Json j = Json::parse(options_json, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    fail(ErrorKind::Parse, "options: expected a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "prec") {
      options.prec = parse_prec(value.get<std::string>());
    } else if (key == "tie") {
      options.tie_spec = value.get<std::string>();
    } else if (key == "normalize") {
      options.normalize = value.get<bool>();
    } else if (key == "analyzer_cap") {
      options.caps.triple_cap = value.get<int>();
    } else if (key == "pair_cap") {
      options.caps.pair_cap = value.get<int>();
    } else if (key == "profile_cap") {
      options.profile_cap = value.get<int>();
    } else if (key == "order_cap") {
      options.order_cap = value.get<int>();
    } else if (key == "seed") {
      options.seed = value.get<std::uint64_t>();
    } else if (key == "only") {
      options.only = value.get<std::string>();
    } else {
      fail(ErrorKind::Parse, "options: unknown key \"" + key + "\"");
    }
  }
  return options;
}

void require(bool ok, const char* message) {
  if (!ok) fail(ErrorKind::Input, message);
}

}  // namespace

extern "C" {

const char* incdec_status_name(incdec_status status) {
  switch (status) {
    case INCDEC_OK: return "ok";
    case INCDEC_ERROR_INVALID: return "invalid";
    case INCDEC_ERROR_PARSE: return "parse";
    case INCDEC_ERROR_CAPACITY: return "capacity";
    case INCDEC_ERROR_PRECONDITION: return "precondition";
    case INCDEC_ERROR_IO: return "io";
    case INCDEC_ERROR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* incdec_last_error(void) { return t_last_error.c_str(); }

void incdec_string_free(char* text) { std::free(text); }

void incdec_instance_free(incdec_instance* instance) { delete instance; }

incdec_status incdec_instance_parse(const char* json_text, incdec_instance** out) {
  return guarded([&]() {
    require(json_text != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    Instance declared = parse_instance_text(json_text);
    auto handle = std::make_unique<incdec_instance>();
    handle->resolved = instantiate(declared);
    handle->declared = std::move(declared);
    *out = handle.release();
  });
}

incdec_status incdec_instance_read(const char* path, incdec_instance** out) {
  return guarded([&]() {
    require(path != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    Instance declared = read_instance_file(path);
    auto handle = std::make_unique<incdec_instance>();
    handle->resolved = instantiate(declared);
    handle->declared = std::move(declared);
    *out = handle.release();
  });
}

incdec_status incdec_instance_build(const char* id, const char* params_json,
                                    incdec_instance** out) {
  return guarded([&]() {
    require(id != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    std::map<std::string, Value> params;
    if (params_json != nullptr && *params_json != '\0') {
      Json j = Json::parse(params_json, nullptr, false);
      if (j.is_discarded() || !j.is_object()) {
        fail(ErrorKind::Parse, "params: expected a JSON object");
      }
      for (const auto& [key, value] : j.items()) {
        params.emplace(key, value_from_json(value, "params." + key));
      }
    }
    Instance declared = build_named_instance(id, params);
    auto handle = std::make_unique<incdec_instance>();
    handle->resolved = instantiate(declared);
    handle->declared = std::move(declared);
    *out = handle.release();
  });
}

int incdec_instance_size(const incdec_instance* instance) {
  return instance == nullptr ? 0 : instance->declared.ground.n;
}

int incdec_instance_is_incremental(const incdec_instance* instance) {
  return instance != nullptr && instance->declared.incremental() ? 1 : 0;
}

incdec_status incdec_instance_to_json(const incdec_instance* instance, char** out_json) {
  return guarded([&]() {
    require(instance != nullptr && out_json != nullptr, "null argument");
    *out_json = copy_out(dump_stable(instance_to_json(instance->declared)));
  });
}

incdec_status incdec_analyze(const incdec_instance* instance, const char* options_json,
                             char** out_json) {
  return guarded([&]() {
    require(instance != nullptr && out_json != nullptr, "null argument");
    const Options options = parse_options(options_json);
    const OracleInstance& inst = instance->resolved;
    Json j;
    if (inst.incremental()) {
      j["f"] = property_report_json(inst.ground, analyze(*inst.f, options.caps));
    } else {
      j["g"] = property_report_json(inst.ground, analyze(*inst.g, options.caps));
      j["h"] = property_report_json(inst.ground, analyze(*inst.h, options.caps));
    }
    *out_json = copy_out(dump_stable(j));
  });
}

incdec_status incdec_run(const incdec_instance* instance, const char* options_json,
                         char** out_json) {
  return guarded([&]() {
    require(instance != nullptr && out_json != nullptr, "null argument");
    const Options options = parse_options(options_json);
    const OracleInstance& inst = instance->resolved;
    if (inst.incremental()) {
      fail(ErrorKind::Input, "run needs a g/h instance; incremental instances have no pair");
    }
    const TieBreak tie = parse_tie_spec(inst.ground, options.tie_spec);
    const DoubleGreedyResult run =
        double_greedy(*inst.g, *inst.h, options.prec, tie, !options.normalize);
    const Objective f = inst.objective();
    const OptProfile opt = opt_profile(f, options.profile_cap);
    const RatioReport report = competitive_ratio(f, run.ordering, opt);
    Json j;
    j["ordering"] = ordering_json(inst.ground, run.ordering);
    j["trace"] = trace_json(inst.ground, run.trace);
    j["ratio_report"] = ratio_report_json(inst.ground, report);
    *out_json = copy_out(dump_stable(j));
  });
}

incdec_status incdec_ratio(const incdec_instance* instance, const char* ordering_json_text,
                           const char* options_json, char** out_json) {
  return guarded([&]() {
    require(instance != nullptr && ordering_json_text != nullptr && out_json != nullptr,
            "null argument");
    const Options options = parse_options(options_json);
    const OracleInstance& inst = instance->resolved;
    Json oj = Json::parse(ordering_json_text, nullptr, false);
    if (oj.is_discarded()) fail(ErrorKind::Parse, "ordering: malformed JSON");
    const Ordering ordering = ordering_from_json(inst.ground, oj);
    const Objective f = inst.objective();
    const OptProfile opt = opt_profile(f, options.profile_cap);
    const RatioReport report = competitive_ratio(f, ordering, opt);
    Json j;
    j["ordering"] = ordering_json(inst.ground, ordering);
    j["ratio_report"] = ratio_report_json(inst.ground, report);
    *out_json = copy_out(dump_stable(j));
  });
}

incdec_status incdec_best_order(const incdec_instance* instance, const char* options_json,
                                char** out_json) {
  return guarded([&]() {
    require(instance != nullptr && out_json != nullptr, "null argument");
    const Options options = parse_options(options_json);
    const OracleInstance& inst = instance->resolved;
    const Objective f = inst.objective();
    const BestOrderingResult best = best_ordering(f, options.order_cap);
    const OptProfile opt = opt_profile(f, options.profile_cap);
    const RatioReport report = competitive_ratio(f, best.ordering, opt);
    Json j;
    j["ordering"] = ordering_json(inst.ground, best.ordering);
    j["ratio"] = best.ratio.str();
    j["ratio_report"] = ratio_report_json(inst.ground, report);
    *out_json = copy_out(dump_stable(j));
  });
}

incdec_status incdec_ratio_report_csv(const char* report_json, char** out_csv) {
  return guarded([&]() {
    require(report_json != nullptr && out_csv != nullptr, "null argument");
    Json j = Json::parse(report_json, nullptr, false);
    if (j.is_discarded() || !j.is_object()) fail(ErrorKind::Parse, "report: malformed JSON");
    if (j.contains("ratio_report")) j = j["ratio_report"];

    // Rebuild the CSV straight from the serialized rows; witnesses stay as
    // the labels they were emitted with.
    std::string out = "k,alg_value,opt_value,opt_witness,ratio\n";
    for (const Json& row : j.at("rows")) {
      std::string witness = "{";
      bool first = true;
      for (const Json& label : row.at("opt_witness")) {
        if (!first) witness += ";";
        witness += label.get<std::string>();
        first = false;
      }
      witness += "}";
      out += std::to_string(row.at("k").get<long>()) + "," +
             row.at("alg_value").get<std::string>() + "," +
             row.at("opt_value").get<std::string>() + "," + witness + "," +
             row.at("ratio").get<std::string>() + "\n";
    }
    *out_csv = copy_out(out);
  });
}

incdec_status incdec_verify_paper(const char* options_json, char** out_json,
                                  char** out_timings_json, int* out_all_passed) {
  return guarded([&]() {
    const Options options = parse_options(options_json);
    PaperCheckOptions check_options;
    check_options.seed = options.seed;
    check_options.only = options.only;
    const PaperReport report = verify_paper(check_options);

    if (out_json != nullptr) {
      Json checks = Json::array();
      for (const PaperCheck& check : report.checks) {
        checks.push_back(
            {{"name", check.name}, {"passed", check.passed}, {"detail", check.lines}});
      }
      Json j;
      j["all_passed"] = report.all_passed;
      j["checks"] = std::move(checks);
      *out_json = copy_out(dump_stable(j));
    }
    if (out_timings_json != nullptr) {
      Json timings;
      for (const PaperCheck& check : report.checks) timings[check.name] = check.seconds;
      *out_timings_json = copy_out(dump_stable(timings));
    }
    if (out_all_passed != nullptr) *out_all_passed = report.all_passed ? 1 : 0;
  });
}

}  // extern "C"
