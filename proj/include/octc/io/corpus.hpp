#pragma once

#include <string>
#include <vector>

#include "octc/io/fan_file.hpp"

namespace octc {

struct CorpusEntry {
  std::string name;
  std::string summary;
};

std::vector<CorpusEntry> corpus_listing();
bool is_builtin(const std::string& name);
// Built-in names, including an<n> for the A_n fan; throws PreconditionError.
FanSpec builtin_fan(const std::string& name);
std::string builtin_text(const std::string& name);
// A built-in name or a path to a fan file.
FanSpec resolve_fan(const std::string& name_or_path);

}  // namespace octc
