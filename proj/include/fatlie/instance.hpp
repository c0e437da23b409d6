#pragma once

// Instance documents (JSON):
//
//   { "label": "E6", "vars": ["x", "y"], "milnor": "x^3 + y^4", "cap": 64 }
//
// Exactly one of "generators" (list of polynomial strings), "milnor" or
// "tyurina" (a single polynomial string). "cap" and "label" are optional.
// A corpus file is either a JSON array of instances or an object with an
// "instances" array.

#include <string>
#include <string_view>
#include <vector>

namespace fatlie {

enum class SourceKind { Generators, Milnor, Tyurina };

const char* source_kind_name(SourceKind k) noexcept;

struct InstanceSpec {
  std::string label;
  std::vector<std::string> vars;
  SourceKind kind = SourceKind::Generators;
  /// Generator strings, or the single polynomial f for milnor/tyurina.
  std::vector<std::string> polys;
  unsigned cap = 64;
};

/// Validates the instance invariants (nonempty distinct variable names,
/// nonempty source, cap >= 2). Throws Error(InvalidArgument).
void validate(const InstanceSpec& spec);

/// Parses one instance document. Throws ParseError on malformed JSON or fields.
InstanceSpec parse_instance(std::string_view json_text, const std::string& default_label = "instance");
/// Parses a single instance or a corpus document.
std::vector<InstanceSpec> parse_instances(std::string_view json_text, const std::string& default_label = "instance");
std::vector<InstanceSpec> load_instances(const std::string& path);

std::string to_json(const InstanceSpec& spec);

}  // namespace fatlie
