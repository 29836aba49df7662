#include "hilbertlab/cli/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include <openssl/evp.h>

#include "hilbertlab/core/error.hpp"

namespace hilbertlab::cli {

namespace fs = std::filesystem;

std::string git_blob_hash(const std::string& content) {
  const std::string head = "blob " + std::to_string(content.size()) + std::string(1, '\0');
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha1(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), head.data(), head.size()) != 1 ||
      EVP_DigestUpdate(ctx.get(), content.data(), content.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw Error(ErrorKind::Io, "SHA-1 digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

std::string file_blob_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return git_blob_hash(buf.str());
}

Manifest make_manifest(const std::string& subcommand, const nlohmann::json& config,
                       const std::vector<std::string>& input_paths, const std::vector<std::string>& output_paths,
                       const std::string& id) {
  Manifest m;
  m.subcommand = subcommand;
  m.config = config;
  const std::string config_text = config.dump();
  m.id = id.empty() ? subcommand + "-" + git_blob_hash(config_text).substr(0, 12) : id;
  std::string all = config_text;
  for (const auto& p : input_paths) {
    m.inputs[p] = file_blob_hash(p);
    all += "\n" + p + " " + m.inputs[p];
  }
  m.hash = git_blob_hash(all);
  for (const auto& o : output_paths) m.outputs.push_back(fs::path(o).filename().string());
  return m;
}

std::string manifest_path_for(const std::string& output_path) { return output_path + ".manifest.json"; }

void write_manifest(const std::string& path, const Manifest& m) {
  nlohmann::json j;
  j["id"] = m.id;
  j["subcommand"] = m.subcommand;
  j["hash"] = m.hash;
  j["config"] = m.config;
  j["inputs"] = m.inputs;
  j["outputs"] = m.outputs;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << j.dump(2) << '\n';
}

Manifest read_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read manifest " + path);
  nlohmann::json j;
  try {
    in >> j;
    Manifest m;
    m.id = j.at("id").get<std::string>();
    m.subcommand = j.at("subcommand").get<std::string>();
    m.hash = j.at("hash").get<std::string>();
    m.config = j.at("config");
    m.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, "malformed manifest " + path + ": " + e.what());
  }
}

}  // namespace hilbertlab::cli
