#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace hankel {

// HANKEL_CACHE_DIR, else $XDG_CACHE_HOME/hankel, else $HOME/.cache/hankel. None if neither is set.
std::optional<std::filesystem::path> default_cache_dir();

std::string cache_key(int r, int c, int d, const std::string& order, const std::string& oracles);

// One file per key; the first line records the artifact version and entries from other versions are ignored.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::optional<std::string> load(const std::string& key) const;
  // Write-temp-then-rename; failures are swallowed since the cache is advisory.
  bool store(const std::string& key, const std::string& content) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace hankel
