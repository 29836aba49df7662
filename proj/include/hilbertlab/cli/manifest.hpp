#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace hilbertlab::cli {

/// SHA-1 of "blob <size>\0<content>", as git hashes file contents.
std::string git_blob_hash(const std::string& content);
std::string file_blob_hash(const std::string& path);

/// Record written next to every output: the full configuration, hashes of the
/// input files, and the produced files (relative to the manifest directory).
struct Manifest {
  std::string id;
  std::string subcommand;
  std::string hash;  // over the configuration and every input hash
  nlohmann::json config;
  std::map<std::string, std::string> inputs;
  std::vector<std::string> outputs;
};

/// id defaults to "<subcommand>-<12 hex of the config hash>", so reruns with
/// edited input files keep the id but change the hash.
Manifest make_manifest(const std::string& subcommand, const nlohmann::json& config,
                       const std::vector<std::string>& input_paths, const std::vector<std::string>& output_paths,
                       const std::string& id = "");

std::string manifest_path_for(const std::string& output_path);
void write_manifest(const std::string& path, const Manifest& m);
Manifest read_manifest(const std::string& path);

}  // namespace hilbertlab::cli
