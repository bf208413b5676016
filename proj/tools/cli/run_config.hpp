#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subvar/csv.hpp"

namespace subvar::cli {

using nlohmann::json;

/// Resolved configuration of one command: defaults, then the JSON config
/// file, then flags given on the command line.
class RunConfig {
 public:
  RunConfig(CLI::App* app, std::string command);

  template <typename T>
  void add(const std::string& key, T fallback, const std::string& help) {
    defaults_[key] = fallback;
    auto slot = std::make_shared<T>(fallback);
    CLI::Option* opt = app_->add_option("--" + key, *slot, help);
    if constexpr (std::is_same_v<T, std::vector<double>> || std::is_same_v<T, std::vector<int>> ||
                  std::is_same_v<T, std::vector<std::string>>)
      opt->delimiter(',');
    overrides_.push_back([key, slot, opt](json& j) {
      if (opt->count() > 0) j[key] = *slot;
    });
  }

  void add_flag(const std::string& key, const std::string& help);

  /// Keys that do not change results (excluded from the hash).
  void mark_volatile(const std::string& key) { volatile_.push_back(key); }

  /// Merges the config file and flags. Unknown keys and type mismatches in
  /// the file raise ConfigError.
  void resolve();

  template <typename T>
  T get(const std::string& key) const {
    try {
      return resolved_.at(key).get<T>();
    } catch (const json::exception& e) {
      throw_config("config key '" + key + "': " + e.what());
    }
  }
  bool has_value(const std::string& key) const;

  const std::string& command() const { return command_; }
  const json& resolved() const { return resolved_; }

  /// FNV-1a over the canonical dump of the result-relevant keys.
  std::string hash() const;

  /// --out, else the config file, else $SUBVAR_OUTPUT_DIR, else ".".
  std::filesystem::path output_dir() const;
  unsigned threads() const;

  Metadata metadata(const Metadata& extra = {}) const;
  json metadata_json(const Metadata& extra = {}) const;

 private:
  [[noreturn]] static void throw_config(const std::string& message);

  CLI::App* app_;
  std::string command_;
  std::string config_path_;
  json defaults_ = json::object();
  json resolved_;
  std::vector<std::function<void(json&)>> overrides_;
  std::vector<std::string> volatile_;
};

/// Opens a file below the output directory for writing; IoError on failure.
std::ofstream open_output(const std::filesystem::path& dir, const std::string& name);

void write_json(const std::filesystem::path& dir, const std::string& name, const json& value);

inline constexpr const char* kEvidenceConvention =
    "full-constants MN-IW evidence with dummy-consistent prior normalization";
inline constexpr const char* kBicConvention = "k_eff = |focus| * tr(X (X'X + V^-1)^-1 X')";

}  // namespace subvar::cli
