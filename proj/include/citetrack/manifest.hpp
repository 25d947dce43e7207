#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "citetrack/csv.hpp"
#include "citetrack/version.hpp"

namespace citetrack {

// Run record written next to every artifact: command, the fully resolved
// parameter set, and the produced files. Re-running the same manifest
// regenerates the outputs byte-identically.
inline nlohmann::json make_manifest(const std::string& command,
                                    const nlohmann::json& parameters,
                                    const std::vector<std::string>& artifacts) {
  nlohmann::json m;
  m["tool"] = version_string;
  m["command"] = command;
  m["parameters"] = parameters;
  m["artifacts"] = artifacts;
  return m;
}

inline void write_manifest(const std::filesystem::path& out_dir,
                           const nlohmann::json& manifest) {
  write_text_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace citetrack
