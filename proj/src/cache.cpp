#include "invring/cache.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace invring {

namespace {

// FNV-1a over the key chooses the file name; the stored key line guards
// against collisions.
std::string hash_name(const std::string& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

// Keys may contain newlines (from multi-line configs); the stored first line
// uses an escaped form so the payload boundary stays unambiguous.
std::string escape_line(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') {
      out += "\\\\";
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string cache_key(const std::string& engine_version, const std::string& subcommand,
                      const std::string& config) {
  return engine_version + "\x1f" + subcommand + "\x1f" + config;
}

std::string ResultCache::get_or_compute(const std::string& key,
                                        const std::function<std::string()>& produce) {
  if (!enabled()) return produce();
  namespace fs = std::filesystem;
  std::string key_line = escape_line(key);
  fs::path path;
  try {
    fs::create_directories(dir_);
    path = fs::path(dir_) / (hash_name(key) + ".cache");
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::string stored_key;
      if (std::getline(in, stored_key) && stored_key == key_line) {
        std::ostringstream payload;
        payload << in.rdbuf();
        return payload.str();
      }
    }
  } catch (const fs::filesystem_error&) {
    // Fall through to recompute; caching is best-effort.
    return produce();
  }

  std::string result = produce();
  try {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << key_line << '\n' << result;
  } catch (...) {
    // A failed write never fails the computation.
  }
  return result;
}

}  // namespace invring
