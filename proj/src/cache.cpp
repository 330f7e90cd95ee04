#include "hankel/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "hankel/report_io.hpp"

namespace hankel {

namespace fs = std::filesystem;

std::optional<fs::path> default_cache_dir() {
  if (const char* e = std::getenv("HANKEL_CACHE_DIR"); e && *e) return fs::path(e);
  if (const char* e = std::getenv("XDG_CACHE_HOME"); e && *e) return fs::path(e) / "hankel";
  if (const char* e = std::getenv("HOME"); e && *e) return fs::path(e) / ".cache" / "hankel";
  return std::nullopt;
}

std::string cache_key(int r, int c, int d, const std::string& order, const std::string& oracles) {
  std::ostringstream k;
  k << "r" << r << "_c" << c << "_d" << d << "_" << order << "_" << oracles << "_v" << artifact_version;
  return k.str();
}

fs::path ReportCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<std::string> ReportCache::load(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header) || header != std::string("hankel-cache ") + artifact_version) return std::nullopt;
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

bool ReportCache::store(const std::string& key, const std::string& content) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return false;
  std::ostringstream tmp_name;
  tmp_name << "." << key << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << "hankel-cache " << artifact_version << "\n" << content;
    if (!out.flush()) {
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, path_for(key), ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

}  // namespace hankel
