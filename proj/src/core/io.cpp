#include "core/io.hpp"

#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace incdec {

namespace {

void expect_keys(const Json& j, std::initializer_list<const char*> allowed,
                 const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* k : allowed) {
      if (key == k) {
        known = true;
        break;
      }
    }
    if (!known) fail(ErrorKind::Parse, where + ": unknown field \"" + key + "\"");
  }
}

const Json& require_field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::Parse, where + ": missing field \"" + key + "\"");
  return *it;
}

long int_field(const Json& j, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    fail(ErrorKind::Parse, where + ": expected an integer");
  }
  return j.get<long>();
}

std::map<std::string, Value> params_from_json(const Json& j, const std::string& where) {
  std::map<std::string, Value> params;
  if (!j.is_object()) fail(ErrorKind::Parse, where + ": params must be an object");
  for (const auto& [key, value] : j.items()) {
    params.emplace(key, value_from_json(value, where + "." + key));
  }
  return params;
}

SetFunctionSpec spec_from_json(const Json& j, const GroundSet& ground, const std::string& slot) {
  const std::string where = "spec \"" + slot + "\"";
  if (!j.is_object()) fail(ErrorKind::Parse, where + ": expected an object");
  const std::string type = require_field(j, "type", where).get<std::string>();

  if (type == "table") {
    expect_keys(j, {"type", "values"}, where);
    const Json& values = require_field(j, "values", where);
    if (!values.is_array()) fail(ErrorKind::Parse, where + ": \"values\" must be an array");
    TableSpec table;
    for (std::size_t i = 0; i < values.size(); ++i) {
      table.values.push_back(value_from_json(values[i], where + ".values[" + std::to_string(i) + "]"));
    }
    if (table.values.size() != (std::size_t{1} << ground.n)) {
      fail(ErrorKind::Parse, where + ": table needs 2^n = " +
                                 std::to_string(std::size_t{1} << ground.n) + " values, got " +
                                 std::to_string(table.values.size()));
    }
    return table;
  }
  if (type == "modular") {
    expect_keys(j, {"type", "weights", "offset"}, where);
    const Json& weights = require_field(j, "weights", where);
    if (!weights.is_array()) fail(ErrorKind::Parse, where + ": \"weights\" must be an array");
    ModularSpec spec;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      spec.weights.push_back(value_from_json(weights[i], where + ".weights[" + std::to_string(i) + "]"));
    }
    if (auto it = j.find("offset"); it != j.end()) {
      spec.offset = value_from_json(*it, where + ".offset");
    }
    if (spec.weights.size() != static_cast<std::size_t>(ground.n)) {
      fail(ErrorKind::Parse, where + ": expected n = " + std::to_string(ground.n) + " weights");
    }
    return spec;
  }
  if (type == "coverage") {
    expect_keys(j, {"type", "universe", "sets"}, where);
    CoverageSpec spec;
    spec.universe_size = int_field(require_field(j, "universe", where), where + ".universe");
    const Json& sets = require_field(j, "sets", where);
    if (!sets.is_array()) fail(ErrorKind::Parse, where + ": \"sets\" must be an array");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const Json& one = sets[i];
      const std::string at = where + ".sets[" + std::to_string(i) + "]";
      if (!one.is_array()) fail(ErrorKind::Parse, at + ": expected an array of indices");
      std::vector<std::int64_t> indices;
      for (const Json& ix : one) indices.push_back(int_field(ix, at));
      spec.sets.push_back(std::move(indices));
    }
    return spec;
  }
  if (type == "named") {
    expect_keys(j, {"type", "id", "params", "component"}, where);
    NamedSpec named;
    named.id = require_field(j, "id", where).get<std::string>();
    if (auto it = j.find("params"); it != j.end()) {
      named.params = params_from_json(*it, where + ".params");
    }
    named.component = slot;
    if (auto it = j.find("component"); it != j.end()) {
      named.component = it->get<std::string>();
    }
    return named;
  }
  fail(ErrorKind::Parse, where + ": unknown spec type \"" + type + "\"");
}

// Resolves a slot-level named spec against the file's ground set.
SetFunctionSpec expand_slot(const GroundSet& ground, SetFunctionSpec spec) {
  if (std::holds_alternative<NamedSpec>(spec)) {
    return Oracle(ground, std::move(spec)).spec();
  }
  return spec;
}

}  // namespace

Value value_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Value(j.get<long>());
  if (j.is_number_unsigned()) return Value(static_cast<long>(j.get<unsigned long>()));
  if (j.is_string()) return Value::parse(j.get<std::string>());
  if (j.is_number_float()) {
    fail(ErrorKind::Parse, where + ": floating-point literals are not exact; use \"p/q\"");
  }
  fail(ErrorKind::Parse, where + ": expected an integer or a \"p/q\" string");
}

Json value_to_json(const Value& v) { return Json(v.str()); }

Instance parse_instance_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::Parse, "instance: expected a JSON object");

  if (j.contains("type")) {
    // Whole-instance catalog reference.
    const std::string where = "instance";
    expect_keys(j, {"type", "id", "params"}, where);
    const std::string type = require_field(j, "type", where).get<std::string>();
    if (type != "named") {
      fail(ErrorKind::Parse, "instance: top-level \"type\" must be \"named\"");
    }
    const std::string id = require_field(j, "id", where).get<std::string>();
    std::map<std::string, Value> params;
    if (auto it = j.find("params"); it != j.end()) params = params_from_json(*it, "params");
    return build_named_instance(id, params);
  }

  expect_keys(j, {"n", "labels", "g", "h", "f", "raw"}, "instance");
  const long n = int_field(require_field(j, "n", "instance"), "instance.n");
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) fail(ErrorKind::Parse, "instance.labels: expected an array");
    for (const Json& l : *it) labels.push_back(l.get<std::string>());
  }
  Instance out;
  out.ground = labels.empty() ? GroundSet(static_cast<int>(n))
                              : GroundSet(static_cast<int>(n), std::move(labels));
  if (auto it = j.find("raw"); it != j.end()) {
    if (!it->is_boolean()) fail(ErrorKind::Parse, "instance.raw: expected a boolean");
    out.raw = it->get<bool>();
  }

  const bool has_pair = j.contains("g") || j.contains("h");
  const bool has_single = j.contains("f");
  if (has_pair == has_single) {
    fail(ErrorKind::Parse, "instance: provide either \"g\" and \"h\" or a single \"f\"");
  }
  if (has_single) {
    out.f = expand_slot(out.ground, spec_from_json(j.at("f"), out.ground, "f"));
  } else {
    if (!j.contains("g") || !j.contains("h")) {
      fail(ErrorKind::Parse, "instance: both \"g\" and \"h\" are required");
    }
    out.g = expand_slot(out.ground, spec_from_json(j.at("g"), out.ground, "g"));
    out.h = expand_slot(out.ground, spec_from_json(j.at("h"), out.ground, "h"));
  }
  return out;
}

Instance parse_instance_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::Parse, "instance: malformed JSON");
  return parse_instance_json(j);
}

Instance read_instance_file(const std::string& path) {
  return parse_instance_text(read_text_file(path));
}

namespace {

Json spec_to_json(const SetFunctionSpec& spec) {
  Json j;
  if (const auto* table = std::get_if<TableSpec>(&spec)) {
    j["type"] = "table";
    Json values = Json::array();
    for (const Value& v : table->values) values.push_back(value_to_json(v));
    j["values"] = std::move(values);
  } else if (const auto* mod = std::get_if<ModularSpec>(&spec)) {
    j["type"] = "modular";
    Json weights = Json::array();
    for (const Value& v : mod->weights) weights.push_back(value_to_json(v));
    j["weights"] = std::move(weights);
    j["offset"] = value_to_json(mod->offset);
  } else if (const auto* cov = std::get_if<CoverageSpec>(&spec)) {
    j["type"] = "coverage";
    j["universe"] = cov->universe_size;
    Json sets = Json::array();
    for (const auto& one : cov->sets) sets.push_back(one);
    j["sets"] = std::move(sets);
  } else {
    fail(ErrorKind::Internal, "named spec survived expansion");
  }
  return j;
}

}  // namespace

Json instance_to_json(const Instance& instance) {
  Json j;
  j["n"] = instance.ground.n;
  j["labels"] = instance.ground.labels;
  if (instance.raw) j["raw"] = true;
  auto expanded = [&](const SetFunctionSpec& spec) {
    return spec_to_json(expand_slot(instance.ground, spec));
  };
  if (instance.incremental()) {
    j["f"] = expanded(*instance.f);
  } else {
    j["g"] = expanded(*instance.g);
    j["h"] = expanded(*instance.h);
  }
  return j;
}

namespace {

Json labels_json(const GroundSet& ground, Subset s) {
  return Json(subset_labels(ground, s));
}

}  // namespace

Json structure_json(const GroundSet& ground, const StructureReport& report) {
  Json j;
  Json monotone;
  monotone["holds"] = report.monotone;
  if (report.monotone_witness) {
    monotone["witness"] = {{"base", labels_json(ground, report.monotone_witness->base)},
                           {"element", ground.labels[report.monotone_witness->element]}};
  }
  Json submodular;
  submodular["holds"] = report.submodular;
  if (report.submodular_witness) {
    submodular["witness"] = {{"base", labels_json(ground, report.submodular_witness->base)},
                             {"element", ground.labels[report.submodular_witness->element]},
                             {"added", ground.labels[report.submodular_witness->other]}};
  }
  j["monotone"] = std::move(monotone);
  j["submodular"] = std::move(submodular);
  j["modular"] = report.modular;
  return j;
}

Json property_report_json(const GroundSet& ground, const PropertyReport& report) {
  Json j = structure_json(ground, report.structure);

  auto nested = [&](const ExtremalRatio& r) {
    Json out;
    out["value"] = value_to_json(r.value);
    if (r.witness) {
      out["witness"] = {{"element", ground.labels[r.witness->element]},
                        {"inner", labels_json(ground, r.witness->inner)},
                        {"outer", labels_json(ground, r.witness->outer)}};
    }
    return out;
  };
  j["curvature"] = report.curvature ? nested(*report.curvature) : Json();
  j["generic_submodularity_ratio"] =
      report.generic_submodularity_ratio ? nested(*report.generic_submodularity_ratio) : Json();

  if (report.submodularity_ratio) {
    Json out;
    out["value"] = value_to_json(report.submodularity_ratio->value);
    if (report.submodularity_ratio->witness) {
      out["witness"] = {{"base", labels_json(ground, report.submodularity_ratio->witness->base)},
                        {"bundle", labels_json(ground, report.submodularity_ratio->witness->bundle)}};
    }
    j["submodularity_ratio"] = std::move(out);
  } else {
    j["submodularity_ratio"] = Json();
  }

  if (report.gross_substitute) {
    Json out;
    out["holds"] = report.gross_substitute->holds;
    if (report.gross_substitute->submodular_violation) {
      const auto& w = *report.gross_substitute->submodular_violation;
      out["violation"] = {{"kind", "submodularity"},
                          {"base", labels_json(ground, w.base)},
                          {"element", ground.labels[w.element]},
                          {"added", ground.labels[w.other]}};
    } else if (report.gross_substitute->exchange_violation) {
      const auto& w = *report.gross_substitute->exchange_violation;
      out["violation"] = {{"kind", "exchange"},
                          {"base", labels_json(ground, w.base)},
                          {"bundle", labels_json(ground, w.bundle)},
                          {"element", ground.labels[w.element]}};
    }
    j["gross_substitute"] = std::move(out);
  } else {
    j["gross_substitute"] = Json();
  }
  return j;
}

Json ratio_report_json(const GroundSet& ground, const RatioReport& report) {
  Json rows = Json::array();
  for (const RatioRow& row : report.rows) {
    rows.push_back({{"k", row.k},
                    {"alg_value", value_to_json(row.alg_value)},
                    {"opt_value", value_to_json(row.opt_value)},
                    {"opt_witness", labels_json(ground, row.opt_witness)},
                    {"ratio", row.ratio.str()}});
  }
  Json j;
  j["rows"] = std::move(rows);
  j["rho"] = report.rho.str();
  j["any_zero_denominator"] = report.any_zero_denominator;
  return j;
}

std::string ratio_report_csv(const GroundSet& ground, const RatioReport& report) {
  std::ostringstream out;
  out << "k,alg_value,opt_value,opt_witness,ratio\n";
  for (const RatioRow& row : report.rows) {
    out << row.k << "," << row.alg_value.str() << "," << row.opt_value.str() << ","
        << subset_braced(ground, row.opt_witness) << "," << row.ratio.str() << "\n";
  }
  return out.str();
}

Json trace_json(const GroundSet& ground, const DoubleGreedyTrace& trace) {
  Json steps = Json::array();
  for (const TraceStep& step : trace.steps) {
    steps.push_back({{"i", step.iteration},
                     {"chosen", ground.labels[step.chosen]},
                     {"side", std::string(1, step.side)},
                     {"phi", value_to_json(step.phi)},
                     {"h_marginal", value_to_json(step.h_marginal)},
                     {"g_marginal", value_to_json(step.g_marginal)},
                     {"H", labels_json(ground, step.prefix_set)},
                     {"G", labels_json(ground, step.suffix_set)}});
  }
  return steps;
}

Json ordering_json(const GroundSet& ground, const Ordering& ordering) {
  Json j = Json::array();
  for (int e : ordering.positions) j.push_back(ground.labels[e]);
  return j;
}

Ordering ordering_from_json(const GroundSet& ground, const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "ordering: expected an array of labels");
  Ordering out;
  Subset seen = 0;
  for (const Json& l : j) {
    if (!l.is_string()) fail(ErrorKind::Parse, "ordering: expected an array of labels");
    const int e = ground.index_of(l.get<std::string>());
    if (contains(seen, e)) fail(ErrorKind::Input, "ordering repeats \"" + l.get<std::string>() + "\"");
    seen |= bit(e);
    out.positions.push_back(e);
  }
  if (out.n() != ground.n) {
    fail(ErrorKind::Input, "ordering must list all " + std::to_string(ground.n) + " elements");
  }
  return out;
}

Prec parse_prec(const std::string& text) {
  if (text == "le") return Prec::Le;
  if (text == "lt") return Prec::Lt;
  fail(ErrorKind::Input, "prec must be \"le\" or \"lt\", got \"" + text + "\"");
}

TieBreak parse_tie_spec(const GroundSet& ground, const std::string& text) {
  if (text == "min-index") return TieBreak::min_index();
  if (text == "max-index") return TieBreak::max_index();
  const std::string prefix = "priority:";
  if (text.rfind(prefix, 0) == 0) {
    std::vector<int> ranking;
    std::stringstream body(text.substr(prefix.size()));
    std::string label;
    while (std::getline(body, label, ',')) ranking.push_back(ground.index_of(label));
    return TieBreak::by_priority(std::move(ranking));
  }
  fail(ErrorKind::Input,
       "tie spec must be \"min-index\", \"max-index\" or \"priority:<label,...>\", got \"" + text +
           "\"");
}

std::string dump_stable(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot open \"" + path + "\" for writing");
  out << content;
  if (!out.good()) fail(ErrorKind::Io, "failed writing \"" + path + "\"");
}

}  // namespace incdec
