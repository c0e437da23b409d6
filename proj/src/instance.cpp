#include "fatlie/instance.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "fatlie/errors.hpp"
#include "json.hpp"

namespace fatlie {

using json = nlohmann::json;

const char* source_kind_name(SourceKind k) noexcept {
  switch (k) {
    case SourceKind::Generators: return "generators";
    case SourceKind::Milnor: return "milnor";
    case SourceKind::Tyurina: return "tyurina";
  }
  return "unknown";
}

void validate(const InstanceSpec& spec) {
  const std::string where = "instance '" + spec.label + "': ";
  if (spec.vars.empty()) throw Error(ErrorCode::InvalidArgument, where + "vars must be nonempty");
  std::set<std::string> seen;
  for (const auto& v : spec.vars) {
    if (v.empty()) throw Error(ErrorCode::InvalidArgument, where + "empty variable name");
    if (!seen.insert(v).second) throw Error(ErrorCode::InvalidArgument, where + "duplicate variable '" + v + "'");
  }
  if (spec.polys.empty()) throw Error(ErrorCode::InvalidArgument, where + "no generators");
  if (spec.kind != SourceKind::Generators && spec.polys.size() != 1)
    throw Error(ErrorCode::InvalidArgument, where + "milnor/tyurina take exactly one polynomial");
  if (spec.cap < 2) throw Error(ErrorCode::InvalidArgument, where + "cap must be at least 2");
}

namespace {

[[noreturn]] void bad(const std::string& label, const std::string& msg) {
  throw ParseError("instance '" + label + "': " + msg, 0);
}

InstanceSpec from_json(const json& j, const std::string& default_label) {
  if (!j.is_object()) bad(default_label, "expected a JSON object");
  InstanceSpec spec;
  spec.label = default_label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) bad(default_label, "'label' must be a string");
    spec.label = j["label"].get<std::string>();
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "label" && key != "vars" && key != "generators" && key != "milnor" && key != "tyurina" &&
        key != "cap")
      bad(spec.label, "unknown field '" + key + "'");
  }
  if (!j.contains("vars") || !j["vars"].is_array()) bad(spec.label, "'vars' must be a list of names");
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) bad(spec.label, "'vars' entries must be strings");
    spec.vars.push_back(v.get<std::string>());
  }
  const int sources = static_cast<int>(j.contains("generators")) + static_cast<int>(j.contains("milnor")) +
                      static_cast<int>(j.contains("tyurina"));
  if (sources != 1) bad(spec.label, "exactly one of 'generators', 'milnor', 'tyurina' is required");
  if (j.contains("generators")) {
    spec.kind = SourceKind::Generators;
    if (!j["generators"].is_array()) bad(spec.label, "'generators' must be a list of strings");
    for (const auto& g : j["generators"]) {
      if (!g.is_string()) bad(spec.label, "'generators' entries must be strings");
      spec.polys.push_back(g.get<std::string>());
    }
  } else {
    const char* key = j.contains("milnor") ? "milnor" : "tyurina";
    spec.kind = j.contains("milnor") ? SourceKind::Milnor : SourceKind::Tyurina;
    if (!j[key].is_string()) bad(spec.label, std::string("'") + key + "' must be a polynomial string");
    spec.polys.push_back(j[key].get<std::string>());
  }
  if (j.contains("cap")) {
    if (!j["cap"].is_number_integer() || j["cap"].get<long long>() < 2 || j["cap"].get<long long>() > 4096)
      bad(spec.label, "'cap' must be an integer in [2, 4096]");
    spec.cap = j["cap"].get<unsigned>();
  }
  try {
    validate(spec);
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
  return spec;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

}  // namespace

InstanceSpec parse_instance(std::string_view json_text, const std::string& default_label) {
  return from_json(parse_document(json_text), default_label);
}

std::vector<InstanceSpec> parse_instances(std::string_view json_text, const std::string& default_label) {
  const json doc = parse_document(json_text);
  const json* list = nullptr;
  if (doc.is_array()) list = &doc;
  else if (doc.is_object() && doc.contains("instances")) list = &doc["instances"];
  if (!list) return {from_json(doc, default_label)};
  if (!list->is_array()) bad(default_label, "'instances' must be a list");
  std::vector<InstanceSpec> out;
  for (std::size_t k = 0; k < list->size(); ++k)
    out.push_back(from_json((*list)[k], default_label + "#" + std::to_string(k + 1)));
  return out;
}

std::vector<InstanceSpec> load_instances(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instances(buf.str(), std::filesystem::path(path).stem().string());
}

std::string to_json(const InstanceSpec& spec) {
  json j;
  j["label"] = spec.label;
  j["vars"] = spec.vars;
  if (spec.kind == SourceKind::Generators) j["generators"] = spec.polys;
  else j[source_kind_name(spec.kind)] = spec.polys.at(0);
  j["cap"] = spec.cap;
  return j.dump();
}

}  // namespace fatlie
