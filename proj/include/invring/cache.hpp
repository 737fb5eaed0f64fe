#ifndef INVRING_CACHE_HPP
#define INVRING_CACHE_HPP

/// Content-addressed on-disk cache for deterministic command outputs.
///
/// Entries are addressed by a key string (engine version + subcommand + full
/// configuration).  Each cache file stores the key on its first line followed
/// by the payload bytes, so hash collisions and corrupt entries are detected
/// by comparing the stored key and recomputed transparently.

#include <functional>
#include <string>

namespace invring {

inline constexpr const char* kEngineVersion = "invring 0.1.0";

/// Key for one command invocation; any change to version, subcommand, or
/// configuration yields a different key.
std::string cache_key(const std::string& engine_version, const std::string& subcommand,
                      const std::string& config);

class ResultCache {
 public:
  /// An empty directory string disables caching (get_or_compute always
  /// recomputes).
  explicit ResultCache(std::string directory) : dir_(std::move(directory)) {}

  bool enabled() const { return !dir_.empty(); }

  /// Returns the bytes stored under the key, or runs `produce`, stores its
  /// result, and returns it.  Replayed hits are byte-identical to the stored
  /// output.  Unreadable, corrupt, or colliding entries are overwritten.
  std::string get_or_compute(const std::string& key, const std::function<std::string()>& produce);

 private:
  std::string dir_;
};

}  // namespace invring

#endif
