#include "run_config.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <system_error>

#include "subvar/errors.hpp"
#include "subvar/parallel.hpp"
#include "subvar/random.hpp"

#ifndef SUBVAR_VERSION_STRING
#define SUBVAR_VERSION_STRING "0.0.0"
#endif

namespace subvar::cli {

RunConfig::RunConfig(CLI::App* app, std::string command) : app_(app), command_(std::move(command)) {
  app_->add_option("--config", config_path_, "JSON config file (flags take precedence)");
  add<std::string>("out", "", "output directory (default $SUBVAR_OUTPUT_DIR or .)");
  add<unsigned>("threads", 0, "worker threads, 0 = available parallelism");
  add<std::uint64_t>("seed", 0, "master seed");
  mark_volatile("out");
  mark_volatile("threads");
}

void RunConfig::add_flag(const std::string& key, const std::string& help) {
  defaults_[key] = false;
  CLI::Option* opt = app_->add_flag("--" + key, help);
  overrides_.push_back([key, opt](json& j) {
    if (opt->count() > 0) j[key] = true;
  });
}

void RunConfig::throw_config(const std::string& message) { throw ConfigError(message); }

void RunConfig::resolve() {
  resolved_ = defaults_;
  if (!config_path_.empty()) {
    std::ifstream in(config_path_);
    if (!in) throw IoError("cannot read config file " + config_path_);
    json file;
    try {
      file = json::parse(in);
    } catch (const json::exception& e) {
      throw_config("config file " + config_path_ + ": " + e.what());
    }
    if (!file.is_object()) throw_config("config file must hold a JSON object");
    // A file may hold one section per command or a flat object.
    if (file.contains(command_) && file[command_].is_object()) file = file[command_];
    for (const auto& [key, value] : file.items()) {
      if (!defaults_.contains(key)) throw_config("unknown config key '" + key + "'");
      const auto& d = defaults_[key];
      const bool numeric = d.is_number() && value.is_number();
      if (d.type() != value.type() && !numeric)
        throw_config("config key '" + key + "' has the wrong type");
      resolved_[key] = value;
    }
  }
  for (const auto& apply : overrides_) apply(resolved_);
}

bool RunConfig::has_value(const std::string& key) const {
  const auto& v = resolved_.at(key);
  if (v.is_string()) return !v.get<std::string>().empty();
  if (v.is_array()) return !v.empty();
  return !v.is_null();
}

std::string RunConfig::hash() const {
  json relevant = resolved_;
  for (const auto& key : volatile_) relevant.erase(key);
  relevant["command"] = command_;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(relevant.dump())));
  return buf;
}

std::filesystem::path RunConfig::output_dir() const {
  std::string dir = get<std::string>("out");
  if (dir.empty()) {
    const char* env = std::getenv("SUBVAR_OUTPUT_DIR");
    dir = env != nullptr && *env != '\0' ? env : ".";
  }
  return dir;
}

unsigned RunConfig::threads() const {
  const auto n = get<unsigned>("threads");
  return n == 0 ? default_workers() : n;
}

Metadata RunConfig::metadata(const Metadata& extra) const {
  json relevant = resolved_;
  for (const auto& key : volatile_) relevant.erase(key);
  Metadata meta{{"tool", "subvar"},
                {"version", SUBVAR_VERSION_STRING},
                {"command", command_},
                {"config_hash", hash()},
                {"config", relevant.dump()},
                {"evidence", kEvidenceConvention}};
  meta.insert(meta.end(), extra.begin(), extra.end());
  return meta;
}

json RunConfig::metadata_json(const Metadata& extra) const {
  json out = json::object();
  for (const auto& [k, v] : metadata(extra)) out[k] = k == "config" ? json::parse(v) : json(v);
  return out;
}

std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw IoError("cannot write " + (dir / name).string());
  return out;
}

void write_json(const std::filesystem::path& dir, const std::string& name, const json& value) {
  auto out = open_output(dir, name);
  out << value.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + (dir / name).string());
}

}  // namespace subvar::cli
